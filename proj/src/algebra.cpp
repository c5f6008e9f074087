#include "mwg/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace mwg {

AlgebraElement AlgebraElement::monomial(GraphPtr graph, const Path& mu, const Path& nu, Scalar c) {
  if (mu.source() != nu.source()) {
    throw GraphError("monomial: s(mu) = '" + graph->name(mu.source()) + "' differs from s(nu) = '" +
                     graph->name(nu.source()) + "'");
  }
  AlgebraElement x(std::move(graph));
  x.add_term({mu, nu}, c);
  return x;
}

AlgebraElement AlgebraElement::vertex_projection(GraphPtr graph, VertexId v) {
  return monomial(std::move(graph), Path::vertex(v), Path::vertex(v));
}

AlgebraElement AlgebraElement::generator(GraphPtr graph, EdgeId e) {
  Path edge = Path::edge(*graph, e);
  Path src = Path::vertex(graph->source(e));
  return monomial(std::move(graph), edge, src);
}

AlgebraElement AlgebraElement::range_projection(GraphPtr graph, const Path& alpha) {
  return monomial(std::move(graph), alpha, alpha);
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::check_same_graph(const AlgebraElement& o) const {
  if (graph_ != o.graph_) throw GraphError("algebra elements over different graphs");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same_graph(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same_graph(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

std::optional<Monomial> multiply(const Monomial& a, const Monomial& b) {
  // (s_mu s_nu^*)(s_alpha s_beta^*): the inner s_nu^* s_alpha survives only
  // when one of nu, alpha extends the other.
  if (auto rest = strip_prefix(b.mu, a.nu)) {
    return Monomial{concat(a.mu, *rest), b.nu};
  }
  if (auto rest = strip_prefix(a.nu, b.mu)) {
    return Monomial{a.mu, concat(b.nu, *rest)};
  }
  return std::nullopt;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_same_graph(b);
  AlgebraElement out(a.graph_);
  for (const auto& [m, c] : a.terms_) {
    for (const auto& [n, d] : b.terms_) {
      if (auto p = multiply(m, n)) out.add_term(*p, c * d);
    }
  }
  return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement out(graph_);
  for (const auto& [m, d] : terms_) out.add_term(m, c * d);
  return out;
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement out(graph_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.nu, m.mu}, c.conj());
  return out;
}

AlgebraElement NormalForm::to_element(GraphPtr graph) const {
  AlgebraElement out(std::move(graph));
  for (const auto& [d, cls] : classes) {
    for (const auto& [m, c] : cls.terms) out.add_term(m, c);
  }
  return out;
}

double NormalForm::max_abs_coefficient() const {
  double best = 0.0;
  for (const auto& [d, cls] : classes) {
    for (const auto& [m, c] : cls.terms) best = std::max(best, c.abs());
  }
  return best;
}

NormalForm normal_form(const AlgebraElement& x, std::size_t min_level) {
  const Graph& graph = *x.graph();
  if (!graph.row_finite_no_sources()) {
    throw GraphError("normal_form: graph has sources; expansion is undefined");
  }

  std::map<int, std::size_t> levels;
  for (const auto& [m, c] : x.terms()) {
    auto& level = levels.try_emplace(m.degree(), min_level).first->second;
    level = std::max(level, m.nu.length());
  }

  NormalForm nf;
  for (const auto& [m, c] : x.terms()) {
    const int d = m.degree();
    auto& cls = nf.classes[d];
    cls.level = levels[d];
    const std::size_t extra = cls.level - m.nu.length();
    for (const auto& tail : paths_from(graph, m.mu.source(), extra)) {
      Monomial expanded{concat(m.mu, tail), concat(m.nu, tail)};
      auto [it, inserted] = cls.terms.try_emplace(std::move(expanded), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) cls.terms.erase(it);
      }
    }
  }
  std::erase_if(nf.classes, [](const auto& kv) { return kv.second.terms.empty(); });
  return nf;
}

bool equals(const AlgebraElement& x, const AlgebraElement& y) {
  x.check_same_graph(y);
  return normal_form(x - y).empty();
}

AlgebraElement tau(const CylinderFn& f) {
  AlgebraElement out(f.graph());
  for (const auto& [alpha, c] : f.terms()) out.add_term({alpha, alpha}, c);
  return out;
}

bool check_intertwine(const CylinderFn& f, EdgeId e) {
  const auto& graph = f.graph();
  if (e.index >= graph->edge_count()) throw GraphError("check_intertwine: unknown edge");
  auto s_e = AlgebraElement::generator(graph, e);
  return equals(tau(f.pullback_shift(e)), s_e.adjoint() * tau(f) * s_e);
}

}  // namespace mwg
