#include "mwg/scalar.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace mwg {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::from_double(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("Scalar::from_double: non-finite value");
  }
  return Scalar(mpq_class(z.real()), mpq_class(z.imag()));
}

double Scalar::abs() const { return std::hypot(re_.get_d(), im_.get_d()); }

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Scalar::to_string() const {
  std::string out = re_.get_str();
  if (sgn(im_) != 0) {
    if (sgn(im_) > 0) out += '+';
    out += im_.get_str();
    out += 'i';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace mwg
