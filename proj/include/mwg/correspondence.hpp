#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "mwg/algebra.hpp"
#include "mwg/cylinder.hpp"
#include "mwg/ifs.hpp"

namespace mwg {

// ---------------------------------------------------------------------------
// Path-space model: A_v = C_0(E^inf_v), fibre functions are CylinderFn.
// ---------------------------------------------------------------------------

/// a = (a_v) in A = direct sum of A_v; component a_v is supported in E^inf_v.
class AElement {
 public:
  explicit AElement(GraphPtr graph);
  /// The unit of fibre v: chi_{Z(v)} in slot v.
  static AElement fiber_unit(GraphPtr graph, VertexId v);
  /// f placed in slot r(f); every key of f must share one range vertex.
  static AElement supported_at(VertexId v, CylinderFn f);

  const GraphPtr& graph() const { return graph_; }
  const CylinderFn& component(VertexId v) const { return components_.at(v.index); }
  /// Throws std::invalid_argument when f is not supported on fibre v.
  void set_component(VertexId v, CylinderFn f);

  /// Pointwise operations of the commutative algebra A.
  friend AElement operator*(const AElement& a, const AElement& b);
  friend AElement operator+(const AElement& a, const AElement& b);
  AElement conjugate() const;

  friend bool operator==(const AElement& a, const AElement& b);

 private:
  GraphPtr graph_;
  std::vector<CylinderFn> components_;
};

/// xi = (xi_e) in X = direct sum of X_e, where X_e is A_{s(e)} viewed as an
/// A_{r(e)}-A_{s(e)} correspondence through the pullback along phi^E_e.
class CorrVector {
 public:
  explicit CorrVector(GraphPtr graph);
  /// Fibre unit chi_{Z(s(e))} in slot e, zero elsewhere.
  static CorrVector unit(GraphPtr graph, EdgeId e);

  const GraphPtr& graph() const { return graph_; }
  const CylinderFn& component(EdgeId e) const { return components_.at(e.index); }
  /// Throws std::invalid_argument when f is not supported on fibre s(e).
  void set_component(EdgeId e, CylinderFn f);

  friend CorrVector operator+(const CorrVector& a, const CorrVector& b);
  friend bool operator==(const CorrVector& a, const CorrVector& b);

 private:
  GraphPtr graph_;
  std::vector<CylinderFn> components_;
};

/// (a xi)_e = (a_{r(e)} o phi^E_e) xi_e.
CorrVector left_act(const AElement& a, const CorrVector& xi);
/// (xi a)_e = xi_e a_{s(e)}.
CorrVector right_act(const CorrVector& xi, const AElement& a);
/// <xi, eta>_v = sum over s(e) = v of conj(xi_e) eta_e.
AElement inner(const CorrVector& xi, const CorrVector& eta);

/// pi(a) = sum_v tau(a_v); the coding map is the identity in this model.
AlgebraElement pi(const AElement& a);
/// psi(xi) = sum_e s_e tau(xi_e).
AlgebraElement psi(const CorrVector& xi);

struct ToeplitzCheck {
  bool inner_product = false;  // psi(xi)^* psi(eta) == pi(<xi, eta>)
  bool left = false;           // pi(a) psi(xi) == psi(a xi)
  bool right = false;          // psi(xi) pi(a) == psi(xi a)
  bool ok() const { return inner_product && left && right; }
};

ToeplitzCheck toeplitz_relations(const CorrVector& xi, const CorrVector& eta, const AElement& a);
inline bool check_toeplitz(const CorrVector& xi, const CorrVector& eta, const AElement& a) {
  return toeplitz_relations(xi, eta, a).ok();
}

/// sum over r(e) = u of psi(a unit_e) psi(unit_e)^* == pi(a), for a
/// supported on fibre u. Throws std::invalid_argument on a support violation.
bool check_covariance(const AElement& a, VertexId u);

// ---------------------------------------------------------------------------
// Geometric model: A_v = C(T_v) for the boxes of a Mauldin-Williams system.
// ---------------------------------------------------------------------------

/// Continuous fibre function on T_v; an empty function is zero.
using FiberFn = std::function<std::complex<double>(Point)>;

class GeoAElement {
 public:
  explicit GeoAElement(std::shared_ptr<const MWSystem> sys);
  const std::shared_ptr<const MWSystem>& system() const { return sys_; }
  const FiberFn& component(VertexId v) const { return components_.at(v.index); }
  void set_component(VertexId v, FiberFn f) { components_.at(v.index) = std::move(f); }
  std::complex<double> operator()(VertexId v, Point p) const;

 private:
  std::shared_ptr<const MWSystem> sys_;
  std::vector<FiberFn> components_;
};

class GeoCorrVector {
 public:
  explicit GeoCorrVector(std::shared_ptr<const MWSystem> sys);
  const std::shared_ptr<const MWSystem>& system() const { return sys_; }
  const FiberFn& component(EdgeId e) const { return components_.at(e.index); }
  void set_component(EdgeId e, FiberFn f) { components_.at(e.index) = std::move(f); }
  std::complex<double> operator()(EdgeId e, Point p) const;

 private:
  std::shared_ptr<const MWSystem> sys_;
  std::vector<FiberFn> components_;
};

/// (a xi)_e = (a_{r(e)} o phi_e) xi_e.
GeoCorrVector left_act(const GeoAElement& a, const GeoCorrVector& xi);
GeoCorrVector right_act(const GeoCorrVector& xi, const GeoAElement& a);
GeoAElement inner(const GeoCorrVector& xi, const GeoCorrVector& eta);

/// Depth-n cylinder approximation of f o Phi on E^inf_v:
/// alpha -> f(code(alpha, n)) for every path alpha of length n with range v.
CylinderFn sample_fiber(const MWSystem& sys, const FiberFn& f, VertexId v, std::size_t n);

/// tau of the depth-n sampled approximation of a o Phi.
AlgebraElement pi_geo(const GeoAElement& a, std::size_t n);
AlgebraElement psi_geo(const GeoCorrVector& xi, std::size_t n);

/// Largest absolute normal-form coefficient among the three Toeplitz defects
/// at depth n. For a with Lipschitz constant L and |xi| <= S the left defect
/// is bounded by L * S * rho_max^n * geometric_residual_constant(sys).
double toeplitz_residual_geo(const GeoCorrVector& xi, const GeoCorrVector& eta, const GeoAElement& a,
                             std::size_t n);

/// Largest box diameter: bounds |centre(T_w) - phi_f(centre(T_{s(f)}))|.
double geometric_residual_constant(const MWSystem& sys);

}  // namespace mwg
