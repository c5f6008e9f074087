#pragma once

#include <map>
#include <string>

#include "mwg/graph.hpp"
#include "mwg/scalar.hpp"

namespace mwg {

/// Finite linear combination of cylinder indicators chi_{Z(alpha)}, where
/// Z(alpha) is the set of infinite paths beginning with alpha.
///
/// Keys may overlap (chi_{Z(v)} + chi_{Z(e)} is a valid representation).
/// Terms are kept at whatever depth the operations produced them; refine()
/// brings them to a common depth when a depth-uniform view is needed.
/// Zero coefficients are never stored.
class CylinderFn {
 public:
  using Terms = std::map<Path, Scalar>;

  explicit CylinderFn(GraphPtr graph) : graph_(std::move(graph)) {}
  static CylinderFn indicator(GraphPtr graph, Path alpha, Scalar coefficient = 1);

  const GraphPtr& graph() const { return graph_; }
  const Graph& g() const { return *graph_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t max_depth() const;

  void add_term(const Path& alpha, const Scalar& coefficient);

  /// Same function with every key at length exactly n. Throws
  /// std::invalid_argument when a key is longer than n.
  CylinderFn refine(std::size_t n) const;

  CylinderFn& operator+=(const CylinderFn& o);
  CylinderFn& operator-=(const CylinderFn& o);
  friend CylinderFn operator+(CylinderFn a, const CylinderFn& b) { return a += b; }
  friend CylinderFn operator-(CylinderFn a, const CylinderFn& b) { return a -= b; }
  /// Pointwise product.
  friend CylinderFn operator*(const CylinderFn& a, const CylinderFn& b);

  CylinderFn scaled(const Scalar& c) const;
  CylinderFn conjugate() const;

  /// f o phi_e, a function on E^inf_{s(e)}.
  CylinderFn pullback_shift(EdgeId e) const;

  /// Value at any infinite path extending alpha. Throws
  /// std::invalid_argument if alpha is shorter than the deepest key.
  Scalar evaluate(const Path& alpha) const;

  /// True iff the function vanishes on E^inf.
  bool is_zero() const;
  /// Equality as functions on E^inf (not as representations).
  friend bool operator==(const CylinderFn& a, const CylinderFn& b);

  /// True iff every key has range v.
  bool supported_on(VertexId v) const;

  /// `2*Z(e1 e2) + Z(v)`, keys in canonical order.
  std::string to_string() const;

 private:
  void check_same_graph(const CylinderFn& o) const;

  GraphPtr graph_;
  Terms terms_;
};

}  // namespace mwg
