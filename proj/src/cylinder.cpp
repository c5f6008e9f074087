#include "mwg/cylinder.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwg {

CylinderFn CylinderFn::indicator(GraphPtr graph, Path alpha, Scalar coefficient) {
  CylinderFn f(std::move(graph));
  f.add_term(alpha, coefficient);
  return f;
}

std::size_t CylinderFn::max_depth() const {
  std::size_t depth = 0;
  for (const auto& [alpha, c] : terms_) depth = std::max(depth, alpha.length());
  return depth;
}

void CylinderFn::add_term(const Path& alpha, const Scalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CylinderFn::check_same_graph(const CylinderFn& o) const {
  if (graph_ != o.graph_) throw GraphError("cylinder functions over different graphs");
}

CylinderFn CylinderFn::refine(std::size_t n) const {
  if (!graph_->row_finite_no_sources()) {
    throw GraphError("refine: graph has sources; cylinders may be empty");
  }
  CylinderFn out(graph_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha.length() > n) {
      throw std::invalid_argument("refine: depth " + std::to_string(n) + " is below key length " +
                                  std::to_string(alpha.length()));
    }
    for (const auto& beta : extensions(*graph_, alpha, n - alpha.length())) out.add_term(beta, c);
  }
  return out;
}

CylinderFn& CylinderFn::operator+=(const CylinderFn& o) {
  check_same_graph(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

CylinderFn& CylinderFn::operator-=(const CylinderFn& o) {
  check_same_graph(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

// chi_{Z(a)} chi_{Z(b)} is chi of the longer path when one extends the
// other, and 0 otherwise. This is the common-refinement product without
// materialising the refinement.
CylinderFn operator*(const CylinderFn& a, const CylinderFn& b) {
  a.check_same_graph(b);
  CylinderFn out(a.graph_);
  for (const auto& [alpha, c] : a.terms_) {
    for (const auto& [beta, d] : b.terms_) {
      if (alpha.length() <= beta.length()) {
        if (strip_prefix(beta, alpha)) out.add_term(beta, c * d);
      } else if (strip_prefix(alpha, beta)) {
        out.add_term(alpha, c * d);
      }
    }
  }
  return out;
}

CylinderFn CylinderFn::scaled(const Scalar& c) const {
  CylinderFn out(graph_);
  for (const auto& [alpha, d] : terms_) out.add_term(alpha, c * d);
  return out;
}

CylinderFn CylinderFn::conjugate() const {
  CylinderFn out(graph_);
  for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, c.conj());
  return out;
}

CylinderFn CylinderFn::pullback_shift(EdgeId e) const {
  if (e.index >= graph_->edge_count()) throw GraphError("pullback_shift: unknown edge");
  const Path edge = Path::edge(*graph_, e);
  CylinderFn out(graph_);
  for (const auto& [beta, c] : terms_) {
    if (beta.length() == 0) {
      if (beta.range() == graph_->range(e)) out.add_term(Path::vertex(graph_->source(e)), c);
    } else if (auto rest = strip_prefix(beta, edge)) {
      out.add_term(*rest, c);
    }
  }
  return out;
}

Scalar CylinderFn::evaluate(const Path& alpha) const {
  Scalar value;
  for (const auto& [beta, c] : terms_) {
    if (beta.length() > alpha.length()) {
      throw std::invalid_argument("evaluate: path shorter than the deepest cylinder key");
    }
    if (strip_prefix(alpha, beta)) value += c;
  }
  return value;
}

bool CylinderFn::is_zero() const {
  if (terms_.empty()) return true;
  return refine(max_depth()).terms_.empty();
}

bool operator==(const CylinderFn& a, const CylinderFn& b) { return (a - b).is_zero(); }

bool CylinderFn::supported_on(VertexId v) const {
  return std::all_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first.range() == v; });
}

std::string CylinderFn::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [alpha, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += "(" + c.to_string() + ")*";
    out += "Z(" + mwg::to_string(*graph_, alpha) + ")";
  }
  return out;
}

}  // namespace mwg
