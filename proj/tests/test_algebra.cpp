#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "mwg/algebra.hpp"
#include "mwg/expression.hpp"
#include "mwg/random.hpp"

using namespace mwg;

namespace {

// Graded function-space representation used as an oracle:
//   (s_mu s_nu^* f)(x, k) = [x = mu y] f(nu y, k - |mu| + |nu|)
// acting on finite sums of chi_{Z(gamma)} (x) delta_k. It is graded and
// keeps every p_v nonzero, so distinct normal forms act differently on the
// vectors chi_{Z(gamma)} delta_0 with |gamma| = max |nu|.
using Vec = std::map<std::pair<int, Path>, Scalar>;

bool is_prefix(const Path& p, const Path& of) {
  return p.range() == of.range() && p.length() <= of.length() &&
         std::equal(p.edges().begin(), p.edges().end(), of.edges().begin());
}

Path drop_front(const Graph& g, const Path& p, std::size_t n) {
  if (n == p.length()) return Path::vertex(p.source());
  return Path::from_edges(g, {p.edges().begin() + static_cast<std::ptrdiff_t>(n), p.edges().end()});
}

Path join(const Graph& g, const Path& a, const Path& b) {
  std::vector<EdgeId> edges(a.edges().begin(), a.edges().end());
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  if (edges.empty()) return a;
  return Path::from_edges(g, edges);
}

Vec act(const AlgebraElement& x, const Vec& in) {
  const Graph& g = *x.graph();
  Vec out;
  for (const auto& [m, c] : x.terms()) {
    for (const auto& [key, d] : in) {
      const auto& [k, gamma] = key;
      std::optional<Path> image;
      if (is_prefix(m.nu, gamma)) {
        image = join(g, m.mu, drop_front(g, gamma, m.nu.length()));
      } else if (is_prefix(gamma, m.nu)) {
        image = m.mu;
      }
      if (image) out[{k + m.degree(), *image}] += c * d;
    }
  }
  return out;
}

// Pushes every summand down to cylinders of length `depth` and drops zeros.
Vec refine_to(const Graph& g, const Vec& f, std::size_t depth) {
  Vec out;
  for (const auto& [key, c] : f) {
    for (const Path& x : extensions(g, key.second, depth - key.second.length())) out[{key.first, x}] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool same_function(const Graph& g, const Vec& a, const Vec& b) {
  std::size_t depth = 0;
  for (const Vec* f : {&a, &b}) {
    for (const auto& [key, c] : *f) depth = std::max(depth, key.second.length());
  }
  return refine_to(g, a, depth) == refine_to(g, b, depth);
}

std::size_t max_nu(const AlgebraElement& x) {
  std::size_t n = 0;
  for (const auto& [m, c] : x.terms()) n = std::max(n, m.nu.length());
  return n;
}

bool oracle_equal(const AlgebraElement& x, const AlgebraElement& y) {
  const Graph& g = *x.graph();
  const std::size_t depth = std::max(max_nu(x), max_nu(y));
  for (VertexId v : g.vertices()) {
    for (const Path& gamma : paths_from(g, v, depth)) {
      Vec probe;
      probe[{0, gamma}] = Scalar(1);
      if (!same_function(g, act(x, probe), act(y, probe))) return false;
    }
  }
  return true;
}

AlgebraElement ck_defect(const GraphPtr& g, VertexId v) {
  AlgebraElement sum = AlgebraElement::vertex_projection(g, v);
  for (EdgeId e : g->edges_into(v)) {
    sum -= AlgebraElement::generator(g, e) * AlgebraElement::generator(g, e).adjoint();
  }
  return sum;
}

}  // namespace

TEST_CASE("monomial: examples") {
  auto g = fixtures::two_vertex();
  const VertexId u = g->vertex("u"), v = g->vertex("v");
  const EdgeId e = g->edge("e");
  const AlgebraElement pv = AlgebraElement::monomial(g, Path::vertex(v), Path::vertex(v));
  CHECK(pv.terms().size() == 1);
  CHECK(equals(pv, AlgebraElement::vertex_projection(g, v)));

  const AlgebraElement se = AlgebraElement::monomial(g, Path::edge(*g, e), Path::vertex(v));
  CHECK(se.terms() == AlgebraElement::generator(g, e).terms());

  CHECK_THROWS_AS(AlgebraElement::monomial(g, Path::edge(*g, e), Path::vertex(u)), GraphError);
}

TEST_CASE("multiply: examples") {
  auto g = fixtures::two_vertex();
  const VertexId u = g->vertex("u"), v = g->vertex("v");
  const EdgeId e = g->edge("e"), f = g->edge("f");
  const AlgebraElement se = AlgebraElement::generator(g, e);
  CHECK(equals(se.adjoint() * se, AlgebraElement::vertex_projection(g, v)));
  // s(e) = v but r(f) = u.
  CHECK((se * AlgebraElement::generator(g, f)).empty());
  CHECK((AlgebraElement::vertex_projection(g, u) * se).terms() == se.terms());
  CHECK((AlgebraElement::vertex_projection(g, v) * se).empty());
}

TEST_CASE("multiply on monomials follows the prefix rule") {
  auto g = fixtures::cantor_graph();
  const EdgeId e1 = g->edge("e1"), e2 = g->edge("e2");
  const VertexId v = g->vertex("v");
  const Monomial s1{Path::edge(*g, e1), Path::vertex(v)};
  const Monomial s1star{Path::vertex(v), Path::edge(*g, e1)};
  const Monomial s2star{Path::vertex(v), Path::edge(*g, e2)};
  CHECK(multiply(s1star, s1) == Monomial{Path::vertex(v), Path::vertex(v)});
  CHECK_FALSE(multiply(s2star, s1).has_value());
  CHECK(multiply(s1, s1) == Monomial{Path::from_edges(*g, {e1, e1}), Path::vertex(v)});
  CHECK(multiply(s1star, s1star) == Monomial{Path::vertex(v), Path::from_edges(*g, {e1, e1})});
}

TEST_CASE("adjoint: examples") {
  auto g = fixtures::two_vertex();
  const EdgeId e = g->edge("e");
  const AlgebraElement se = AlgebraElement::generator(g, e);
  const AlgebraElement expected = AlgebraElement::monomial(g, Path::vertex(g->source(e)), Path::edge(*g, e));
  CHECK(se.adjoint().terms() == expected.terms());

  const Path alpha = Path::from_edges(*g, {e, g->edge("h")});
  const AlgebraElement p = AlgebraElement::range_projection(g, alpha);
  CHECK(p.adjoint().terms() == p.terms());

  Rng rng(3);
  const AlgebraElement x = random_element(g, rng);
  CHECK(x.adjoint().adjoint().terms() == x.terms());
}

TEST_CASE("normal_form: examples") {
  auto loop = fixtures::single_loop();
  const VertexId v = loop->vertex("v");
  CHECK(normal_form(ck_defect(loop, v)).empty());

  auto cantor = fixtures::cantor_graph();
  const NormalForm nf = normal_form(AlgebraElement::vertex_projection(cantor, cantor->vertex("v")), 1);
  REQUIRE(nf.classes.size() == 1);
  const auto& cls = nf.classes.at(0);
  CHECK(cls.level == 1);
  CHECK(cls.terms.size() == 2);
  for (const char* id : {"e1", "e2"}) {
    const Path p = Path::edge(*cantor, cantor->edge(id));
    REQUIRE(cls.terms.count(Monomial{p, p}) == 1);
    CHECK(cls.terms.at(Monomial{p, p}).is_one());
  }

  auto g = fixtures::two_vertex();
  for (EdgeId e : g->edges()) {
    const AlgebraElement se = AlgebraElement::generator(g, e);
    CHECK(normal_form(se.adjoint() * se - AlgebraElement::vertex_projection(g, g->source(e))).empty());
  }
}

TEST_CASE("normal_form: every class sits at one level") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng);
    const AlgebraElement x = random_element(g, rng) * random_element(g, rng);
    const NormalForm nf = normal_form(x);
    for (const auto& [d, cls] : nf.classes) {
      for (const auto& [m, c] : cls.terms) {
        CHECK(m.nu.length() == cls.level);
        CHECK(m.degree() == d);
        CHECK_FALSE(c.is_zero());
      }
    }
    // Idempotent, and re-expanding to a deeper level is still a witness.
    const AlgebraElement back = nf.to_element(g);
    CHECK(equals(back, x));
    const NormalForm again = normal_form(back);
    CHECK(again.classes.size() == nf.classes.size());
    for (const auto& [d, cls] : nf.classes) CHECK(again.classes.at(d).terms == cls.terms);
    CHECK(normal_form(x - normal_form(x, 4).to_element(g)).empty());
  }
}

TEST_CASE("equals: examples") {
  auto g = fixtures::two_vertex();
  for (EdgeId e : g->edges()) {
    const AlgebraElement se = AlgebraElement::generator(g, e);
    CHECK(equals(se.adjoint() * se, AlgebraElement::vertex_projection(g, g->source(e))));
  }

  auto cantor = fixtures::cantor_graph();
  const AlgebraElement s1 = AlgebraElement::generator(cantor, cantor->edge("e1"));
  CHECK_FALSE(equals(s1 * s1.adjoint(), AlgebraElement::vertex_projection(cantor, cantor->vertex("v"))));

  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto h = random_graph(rng);
    const AlgebraElement x = random_element(h, rng);
    for (VertexId v : h->vertices()) CHECK_FALSE(equals(x, x + AlgebraElement::vertex_projection(h, v)));
  }
}

TEST_CASE("Cuntz-Krieger identity at every vertex") {
  Rng rng(30);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(rng);
    for (VertexId v : g->vertices()) CHECK(is_zero(ck_defect(g, v)));
  }
}

TEST_CASE("the oracle representation satisfies the defining relations") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_graph(rng);
    for (VertexId v : g->vertices()) CHECK(oracle_equal(ck_defect(g, v), AlgebraElement(g)));
    for (EdgeId e : g->edges()) {
      const AlgebraElement se = AlgebraElement::generator(g, e);
      CHECK(oracle_equal(se.adjoint() * se, AlgebraElement::vertex_projection(g, g->source(e))));
    }
  }
}

TEST_CASE("multiply agrees with operator composition in the oracle") {
  Rng rng(40);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = random_graph(rng);
    const AlgebraElement x = random_element(g, rng), y = random_element(g, rng);
    const AlgebraElement xy = x * y;
    const std::size_t depth = std::max({max_nu(x), max_nu(y), max_nu(xy)}) + 1;
    for (VertexId v : g->vertices()) {
      for (const Path& gamma : paths_from(*g, v, depth)) {
        Vec probe;
        probe[{0, gamma}] = Scalar(1);
        CHECK(same_function(*g, act(xy, probe), act(x, act(y, probe))));
      }
    }
  }
}

TEST_CASE("equals agrees with the oracle on random pairs") {
  Rng rng(50);
  std::size_t equal_cases = 0, unequal_cases = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng);
    const AlgebraElement x = random_element(g, rng);
    AlgebraElement y = x;
    if (coin(rng)) {
      // Add a hidden zero: a monomial times a Cuntz-Krieger defect.
      const Monomial m = random_monomial(*g, rng);
      const AlgebraElement mono = AlgebraElement::monomial(g, m.mu, m.nu, random_scalar(rng));
      y += mono * ck_defect(g, m.nu.source());
    } else {
      y += random_element(g, rng);
    }
    const bool eq = equals(x, y);
    CHECK(eq == oracle_equal(x, y));
    (eq ? equal_cases : unequal_cases) += 1;
  }
  CHECK(equal_cases > 50);
  CHECK(unequal_cases > 50);
}

TEST_CASE("ring axioms, adjoint and grading on random elements") {
  Rng rng(60);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng);
    const AlgebraElement x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
    CHECK(equals((x * y) * z, x * (y * z)));
    CHECK(equals(x * (y + z), x * y + x * z));
    CHECK(equals((x * y).adjoint(), y.adjoint() * x.adjoint()));
    const Scalar c = random_scalar(rng);
    CHECK(equals(x.scaled(c) * y, (x * y).scaled(c)));
    CHECK(equals(x.scaled(c).adjoint(), x.adjoint().scaled(c.conj())));
    for (const auto& [a, ca] : x.terms()) {
      for (const auto& [b, cb] : y.terms()) {
        if (auto p = multiply(a, b)) CHECK(p->degree() == a.degree() + b.degree());
      }
    }
  }
}

TEST_CASE("equals is an equivalence compatible with the operations") {
  Rng rng(70);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(rng);
    const AlgebraElement x = random_element(g, rng);
    const Monomial m = random_monomial(*g, rng);
    const AlgebraElement hidden =
        AlgebraElement::monomial(g, m.mu, m.nu) * ck_defect(g, m.nu.source());
    const AlgebraElement y = x + hidden;
    const AlgebraElement z = y + hidden.scaled(2);
    const AlgebraElement w = random_element(g, rng);
    CHECK(equals(x, x));
    CHECK(equals(x, y));
    CHECK(equals(y, x));
    CHECK(equals(x, z));
    CHECK(equals(x * w, y * w));
    CHECK(equals(w * x, w * y));
    CHECK(equals(x.adjoint(), y.adjoint()));
  }
}

TEST_CASE("tau: examples") {
  auto g = fixtures::two_vertex();
  const VertexId v = g->vertex("v");
  CHECK(equals(tau(CylinderFn::indicator(g, Path::vertex(v))), AlgebraElement::vertex_projection(g, v)));
  CHECK(tau(CylinderFn(g)).empty());

  const Path a = Path::edge(*g, g->edge("e"));
  const Path ab = Path::from_edges(*g, {g->edge("e"), g->edge("h")});
  const CylinderFn fa = CylinderFn::indicator(g, a), fab = CylinderFn::indicator(g, ab);
  CHECK(equals(tau(fa * fab), AlgebraElement::range_projection(g, ab)));
  CHECK(equals(tau(fa) * tau(fab), AlgebraElement::range_projection(g, ab)));
}

TEST_CASE("tau is an injective *-homomorphism") {
  Rng rng(80);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng);
    const CylinderFn f = random_cylinder(g, rng), h = random_cylinder(g, rng);
    CHECK(equals(tau(f * h), tau(f) * tau(h)));
    CHECK(equals(tau(f + h), tau(f) + tau(h)));
    CHECK(equals(tau(f.conjugate()), tau(f).adjoint()));
    CHECK(is_zero(tau(f - h)) == (f == h));
    CHECK(equals(tau(f.refine(f.max_depth() + 2)), tau(f)));
  }
}

TEST_CASE("tau maps fibre v onto p_v A") {
  Rng rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(rng);
    const VertexId v{static_cast<std::uint32_t>(pick(rng, g->vertex_count()))};
    const CylinderFn f = random_cylinder_at(g, rng, v);
    const AlgebraElement pv = AlgebraElement::vertex_projection(g, v);
    CHECK(equals(pv * tau(f), tau(f)));
    CHECK(equals(tau(f) * pv, tau(f)));
  }
}

TEST_CASE("check_intertwine: examples") {
  auto g = fixtures::two_vertex();
  const EdgeId e = g->edge("e"), f = g->edge("f");  // both land at u
  CHECK(check_intertwine(CylinderFn::indicator(g, Path::edge(*g, e)), e));
  CHECK(tau(CylinderFn::indicator(g, Path::edge(*g, e)).pullback_shift(e)).terms() ==
        AlgebraElement::vertex_projection(g, g->source(e)).terms());
  CHECK(check_intertwine(CylinderFn::indicator(g, Path::edge(*g, f)), e));
  CHECK(tau(CylinderFn::indicator(g, Path::edge(*g, f)).pullback_shift(e)).empty());
  // u' = v differs from r(e) = u.
  CHECK(check_intertwine(CylinderFn::indicator(g, Path::vertex(g->vertex("v"))), e));
}

TEST_CASE("check_intertwine holds for random f and every edge") {
  Rng rng(90);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng);
    const CylinderFn f = random_cylinder(g, rng);
    for (EdgeId e : g->edges()) CHECK(check_intertwine(f, e));
  }
}

TEST_CASE("cross-graph operations are errors") {
  auto a = fixtures::single_loop();
  auto b = fixtures::single_loop();
  const AlgebraElement pa = AlgebraElement::vertex_projection(a, a->vertex("v"));
  const AlgebraElement pb = AlgebraElement::vertex_projection(b, b->vertex("v"));
  CHECK_THROWS_AS(pa * pb, GraphError);
  CHECK_THROWS_AS(pa + pb, GraphError);
  CHECK_THROWS_AS(equals(pa, pb), GraphError);
}

TEST_CASE("normal_form needs a graph without sources") {
  auto g = make_graph({"u", "v"}, {{"e", "u", "v"}});
  CHECK_THROWS_AS(normal_form(AlgebraElement::vertex_projection(g, g->vertex("v")), 1), GraphError);
}
