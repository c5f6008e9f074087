#pragma once

#include <map>
#include <string>

#include "mwg/cylinder.hpp"
#include "mwg/graph.hpp"
#include "mwg/scalar.hpp"

namespace mwg {

/// The monomial s_mu s_nu^*, with s(mu) = s(nu).
struct Monomial {
  Path mu;
  Path nu;

  /// Gauge degree |mu| - |nu|.
  int degree() const { return static_cast<int>(mu.length()) - static_cast<int>(nu.length()); }
  auto operator<=>(const Monomial&) const = default;
};

/// Element of the dense *-subalgebra of the graph algebra spanned by the
/// monomials s_mu s_nu^*. Generators follow the edges: for an edge e from
/// v to u (r(e) = u, s(e) = v) we have s_e^* s_e = p_v and s_e s_e^* <= p_u,
/// and a product s_e s_f is nonzero only when s(e) = r(f).
///
/// Representations are not unique; equality is decided by normal_form().
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit AlgebraElement(GraphPtr graph) : graph_(std::move(graph)) {}

  /// s_mu s_nu^*. Throws GraphError when s(mu) != s(nu).
  static AlgebraElement monomial(GraphPtr graph, const Path& mu, const Path& nu, Scalar c = 1);
  static AlgebraElement vertex_projection(GraphPtr graph, VertexId v);
  static AlgebraElement generator(GraphPtr graph, EdgeId e);
  /// p_alpha = s_alpha s_alpha^*.
  static AlgebraElement range_projection(GraphPtr graph, const Path& alpha);

  const GraphPtr& graph() const { return graph_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Scalar& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  AlgebraElement scaled(const Scalar& c) const;
  AlgebraElement adjoint() const;

  void check_same_graph(const AlgebraElement& o) const;

 private:
  GraphPtr graph_;
  Terms terms_;
};

/// Product of two monomials, or nullopt when it vanishes.
std::optional<Monomial> multiply(const Monomial& a, const Monomial& b);

/// Gauge-stratified normal form. Within degree class d every monomial has
/// |nu| = level, so the stored monomials are linearly independent.
struct NormalForm {
  struct DegreeClass {
    std::size_t level = 0;
    AlgebraElement::Terms terms;
  };
  std::map<int, DegreeClass> classes;

  bool empty() const { return classes.empty(); }
  AlgebraElement to_element(GraphPtr graph) const;
  /// Largest absolute coefficient, 0 for the empty form.
  double max_abs_coefficient() const;
};

/// Expands every term with the Cuntz-Krieger relation
///   s_mu s_nu^* = sum_{r(e) = s(mu)} s_{mu e} s_{nu e}^*
/// until, within each degree class, |nu| equals max(min_level, largest |nu|
/// present in that class). Merges equal monomials and drops zeros.
///
/// The decision procedure built on this assumes linear independence of
/// {s_mu s_nu^* : |nu| = N, s(mu) = s(nu)} for fixed N; this is the one
/// fact about the graph algebra taken on trust rather than computed.
NormalForm normal_form(const AlgebraElement& x, std::size_t min_level = 0);

bool equals(const AlgebraElement& x, const AlgebraElement& y);
inline bool is_zero(const AlgebraElement& x) { return normal_form(x).empty(); }

/// tau: chi_{Z(alpha)} -> p_alpha, extended linearly.
AlgebraElement tau(const CylinderFn& f);

/// tau(f o phi_e) == s_e^* tau(f) s_e.
bool check_intertwine(const CylinderFn& f, EdgeId e);

}  // namespace mwg
