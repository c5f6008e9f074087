#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "mwg/cylinder.hpp"
#include "mwg/random.hpp"

using namespace mwg;

namespace {

// Pointwise value at an infinite path through gamma, computed directly from
// the term list: sum of coefficients whose key is a prefix of gamma.
Scalar oracle_value(const CylinderFn& f, const Path& gamma) {
  Scalar sum;
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.range() != gamma.range() || alpha.length() > gamma.length()) continue;
    if (std::equal(alpha.edges().begin(), alpha.edges().end(), gamma.edges().begin())) sum += c;
  }
  return sum;
}

bool pointwise_equal(const CylinderFn& a, const CylinderFn& b, std::size_t depth) {
  const Graph& g = a.g();
  for (VertexId v : g.vertices()) {
    for (const Path& gamma : paths_from(g, v, depth)) {
      if (!(oracle_value(a, gamma) == oracle_value(b, gamma))) return false;
    }
  }
  return true;
}

CylinderFn chi(const GraphPtr& g, const Path& alpha, Scalar c = 1) { return CylinderFn::indicator(g, alpha, c); }

}  // namespace

TEST_CASE("refine: examples") {
  auto loop = fixtures::single_loop();
  const VertexId v = loop->vertex("v");
  const EdgeId e = loop->edge("e");
  const CylinderFn r = chi(loop, Path::vertex(v)).refine(2);
  REQUIRE(r.terms().size() == 1);
  CHECK(r.terms().begin()->first == Path::from_edges(*loop, {e, e}));
  CHECK(r.terms().begin()->second.is_one());

  auto cantor = fixtures::cantor_graph();
  const CylinderFn c = chi(cantor, Path::vertex(cantor->vertex("v"))).refine(1);
  CHECK(c.terms().size() == 2);
  CHECK(c.terms().count(Path::edge(*cantor, cantor->edge("e1"))) == 1);
  CHECK(c.terms().count(Path::edge(*cantor, cantor->edge("e2"))) == 1);
}

TEST_CASE("refine: too shallow a depth is rejected") {
  auto cantor = fixtures::cantor_graph();
  const Path deep = Path::from_edges(*cantor, {cantor->edge("e1"), cantor->edge("e2")});
  CHECK_THROWS_AS(chi(cantor, deep).refine(1), std::invalid_argument);
}

TEST_CASE("refine: idempotent, keys uniform, partition of unity") {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(rng);
    const CylinderFn f = random_cylinder(g, rng);
    const std::size_t n = f.max_depth() + pick(rng, 3);
    const CylinderFn once = f.refine(n);
    CHECK(once.refine(n).terms() == once.terms());
    for (const auto& [alpha, c] : once.terms()) CHECK(alpha.length() == n);
    CHECK(pointwise_equal(f, once, n));
  }
  auto g = fixtures::two_vertex();
  for (VertexId v : g->vertices()) {
    const CylinderFn unit = chi(g, Path::vertex(v)).refine(4);
    CHECK(static_cast<double>(unit.terms().size()) == count_paths(*g, v, 4));
    for (const auto& [alpha, c] : unit.terms()) CHECK(c.is_one());
  }
}

TEST_CASE("pointwise algebra: examples") {
  auto cantor = fixtures::cantor_graph();
  const EdgeId e1 = cantor->edge("e1"), e2 = cantor->edge("e2");
  const Path a = Path::edge(*cantor, e1);
  const Path ae = Path::from_edges(*cantor, {e1, e2});
  const CylinderFn nested = chi(cantor, a) * chi(cantor, ae);
  CHECK(nested == chi(cantor, ae));
  CHECK(nested.terms().size() == 1);

  CHECK((chi(cantor, a) * chi(cantor, Path::edge(*cantor, e2))).is_zero());
  CHECK((chi(cantor, a) * chi(cantor, Path::edge(*cantor, e2))).empty());

  const CylinderFn imag = chi(cantor, a, Scalar::i());
  CHECK(imag.conjugate() == chi(cantor, a, -Scalar::i()));
}

TEST_CASE("pointwise algebra agrees with the brute-force oracle") {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng);
    const CylinderFn f = random_cylinder(g, rng);
    const CylinderFn h = random_cylinder(g, rng);
    const std::size_t n = std::max(f.max_depth(), h.max_depth());
    for (VertexId v : g->vertices()) {
      for (const Path& gamma : paths_from(*g, v, n)) {
        const Scalar fv = oracle_value(f, gamma), hv = oracle_value(h, gamma);
        CHECK(oracle_value(f * h, gamma) == fv * hv);
        CHECK(oracle_value(f + h, gamma) == fv + hv);
        CHECK(oracle_value(f - h, gamma) == fv - hv);
        CHECK(oracle_value(f.conjugate(), gamma) == fv.conj());
        CHECK((f * h).evaluate(gamma) == fv * hv);
      }
    }
  }
}

TEST_CASE("pointwise algebra: commutative, associative, conjugation") {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng);
    const CylinderFn a = random_cylinder(g, rng), b = random_cylinder(g, rng), c = random_cylinder(g, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.conjugate().conjugate() == a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    const std::size_t n = std::max({a.max_depth(), b.max_depth()}) + 1;
    CHECK(a.refine(n) * b.refine(n) == (a * b).refine(n));
  }
}

TEST_CASE("pullback_shift: examples") {
  auto cantor = fixtures::cantor_graph();
  const VertexId v = cantor->vertex("v");
  const EdgeId e1 = cantor->edge("e1"), e2 = cantor->edge("e2");
  CHECK(chi(cantor, Path::edge(*cantor, e1)).pullback_shift(e1) == chi(cantor, Path::vertex(v)));
  CHECK(chi(cantor, Path::edge(*cantor, e1)).pullback_shift(e2).is_zero());
  CHECK(chi(cantor, Path::vertex(v)).pullback_shift(e2) == chi(cantor, Path::vertex(v)));

  auto g = fixtures::two_vertex();
  const EdgeId e = g->edge("e");  // v -> u
  // A vertex indicator away from r(e) pulls back to zero.
  CHECK(chi(g, Path::vertex(g->vertex("v"))).pullback_shift(e).empty());
  CHECK(chi(g, Path::vertex(g->vertex("u"))).pullback_shift(e) == chi(g, Path::vertex(g->vertex("v"))));
}

TEST_CASE("pullback_shift is f composed with prepending e") {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng);
    const CylinderFn f = random_cylinder(g, rng);
    const EdgeId e{static_cast<std::uint32_t>(pick(rng, g->edge_count()))};
    const CylinderFn pulled = f.pullback_shift(e);
    CHECK(pulled.supported_on(g->source(e)));
    const std::size_t n = f.max_depth() + 1;
    for (const Path& beta : paths_from(*g, g->source(e), n)) {
      CHECK(oracle_value(pulled, beta) == oracle_value(f, concat(Path::edge(*g, e), beta)));
    }
  }
}

TEST_CASE("pullback_shift is a linear *-homomorphism") {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng);
    const CylinderFn a = random_cylinder(g, rng), b = random_cylinder(g, rng);
    const Scalar c = random_scalar(rng);
    for (EdgeId e : g->edges()) {
      CHECK((a * b).pullback_shift(e) == a.pullback_shift(e) * b.pullback_shift(e));
      CHECK((a + b.scaled(c)).pullback_shift(e) == a.pullback_shift(e) + b.pullback_shift(e).scaled(c));
      CHECK(a.conjugate().pullback_shift(e) == a.pullback_shift(e).conjugate());
    }
  }
}

TEST_CASE("evaluate: examples and precondition") {
  auto cantor = fixtures::cantor_graph();
  const VertexId v = cantor->vertex("v");
  const EdgeId e1 = cantor->edge("e1"), e2 = cantor->edge("e2");
  CHECK(chi(cantor, Path::vertex(v)).evaluate(extend_canonical(*cantor, Path::vertex(v), 1)).is_one());
  CHECK(chi(cantor, Path::edge(*cantor, e1)).evaluate(Path::edge(*cantor, e2)).is_zero());

  const Path e1e1 = Path::from_edges(*cantor, {e1, e1});
  const CylinderFn f = chi(cantor, Path::edge(*cantor, e1), 2) - chi(cantor, e1e1);
  CHECK(f.evaluate(e1e1) == Scalar(1));
  CHECK_THROWS_AS(f.evaluate(Path::edge(*cantor, e1)), std::invalid_argument);
}

TEST_CASE("zero coefficients are never stored") {
  auto cantor = fixtures::cantor_graph();
  const Path a = Path::edge(*cantor, cantor->edge("e1"));
  CylinderFn f = chi(cantor, a, 3);
  f.add_term(a, -3);
  CHECK(f.empty());
  CHECK((chi(cantor, a) - chi(cantor, a)).empty());
}

TEST_CASE("equality is functional, not representational") {
  auto cantor = fixtures::cantor_graph();
  const VertexId v = cantor->vertex("v");
  const CylinderFn unit = chi(cantor, Path::vertex(v));
  const CylinderFn split =
      chi(cantor, Path::edge(*cantor, cantor->edge("e1"))) + chi(cantor, Path::edge(*cantor, cantor->edge("e2")));
  CHECK(unit == split);
  CHECK_FALSE(unit == chi(cantor, Path::edge(*cantor, cantor->edge("e1"))));
}

TEST_CASE("operands over different graphs are rejected") {
  auto a = fixtures::single_loop();
  auto b = fixtures::single_loop();
  const CylinderFn fa = chi(a, Path::vertex(a->vertex("v")));
  const CylinderFn fb = chi(b, Path::vertex(b->vertex("v")));
  CHECK_THROWS_AS(fa * fb, GraphError);
  CHECK_THROWS_AS(fa + fb, GraphError);
}

TEST_CASE("to_string lists terms") {
  auto cantor = fixtures::cantor_graph();
  const CylinderFn f = chi(cantor, Path::edge(*cantor, cantor->edge("e1")), 2);
  CHECK(f.to_string().find("Z(e1)") != std::string::npos);
  CHECK(CylinderFn(cantor).to_string() == "0");
}
