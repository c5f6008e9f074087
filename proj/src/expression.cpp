#include "mwg/expression.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace mwg {

ParseError::ParseError(Kind kind, std::size_t offset, const std::string& message)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message), kind_(kind), offset_(offset) {}

namespace {

class Parser {
 public:
  Parser(const GraphPtr& graph, std::string_view text) : graph_(graph), text_(text) {}

  AlgebraElement parse() {
    skip_ws();
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return AlgebraElement(graph_);
      pos_ = save;
    }
    AlgebraElement result = expr();
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  AlgebraElement expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    AlgebraElement acc = term();
    if (negate) acc = acc.scaled(-1);
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      AlgebraElement t = term();
      if (c == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

  AlgebraElement term() {
    skip_ws();
    std::optional<Scalar> coefficient;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = scalar();
      skip_ws();
      expect('*');
    }
    AlgebraElement acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    if (coefficient) acc = acc.scaled(*coefficient);
    return acc;
  }

  AlgebraElement factor() {
    skip_ws();
    AlgebraElement base(graph_);
    char c = peek();
    if (c == 's') {
      ++pos_;
      base = generator_product();
    } else if (c == 'p') {
      ++pos_;
      skip_ws();
      expect('(');
      auto [id, at] = identifier();
      auto v = graph_->find_vertex(id);
      if (!v) throw ParseError(ParseError::Kind::unknown_id, at, "unknown vertex id '" + id + "'");
      skip_ws();
      expect(')');
      base = AlgebraElement::vertex_projection(graph_, *v);
    } else if (c == '(') {
      ++pos_;
      base = expr();
      skip_ws();
      expect(')');
    } else {
      fail(at_end() ? "unexpected end of input, expected a factor" : "expected a factor");
    }
    for (;;) {
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        expect('*');
        base = base.adjoint();
      } else {
        break;
      }
    }
    return base;
  }

  // s(id, id, ...): either a single vertex id (p_v) or a composable edge list.
  AlgebraElement generator_product() {
    skip_ws();
    expect('(');
    std::vector<std::pair<std::string, std::size_t>> ids;
    ids.push_back(identifier());
    for (;;) {
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        ids.push_back(identifier());
      } else {
        expect(')');
        break;
      }
    }
    if (ids.size() == 1) {
      if (auto v = graph_->find_vertex(ids[0].first)) return AlgebraElement::vertex_projection(graph_, *v);
    }
    std::vector<EdgeId> edges;
    for (const auto& [id, at] : ids) {
      auto e = graph_->find_edge(id);
      if (!e) throw ParseError(ParseError::Kind::unknown_id, at, "unknown edge id '" + id + "'");
      if (!edges.empty() && graph_->source(edges.back()) != graph_->range(*e)) {
        throw ParseError(ParseError::Kind::source_mismatch, at,
                         "edge '" + id + "' cannot follow '" + graph_->name(edges.back()) +
                             "': source of the previous edge differs from its range");
      }
      edges.push_back(*e);
    }
    Path mu = Path::from_edges(*graph_, std::move(edges));
    return AlgebraElement::monomial(graph_, mu, Path::vertex(mu.source()));
  }

  Scalar scalar() {
    mpq_class re = rational();
    std::size_t save = pos_;
    skip_ws();
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        mpq_class im = rational();
        skip_ws();
        if (peek() == 'i') {
          ++pos_;
          return Scalar(re, c == '-' ? mpq_class(-im) : im);
        }
      }
    }
    pos_ = save;
    return Scalar(re);
  }

  mpq_class rational() {
    mpz_class num(digits());
    mpz_class den = 1;
    std::size_t save = pos_;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      den = mpz_class(digits());
      if (den == 0) fail_at(at, "zero denominator");
    } else {
      pos_ = save;
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<std::string, std::size_t> identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected an identifier");
    return {std::string(text_.substr(start, pos_ - start)), start};
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      fail(at_end() ? "unexpected end of input, expected '" + std::string(1, c) + "'"
                    : "expected '" + std::string(1, c) + "'");
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    throw ParseError(ParseError::Kind::syntax, at, message);
  }

  const GraphPtr& graph_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string path_args(const Graph& graph, const Path& path) {
  std::string out;
  for (EdgeId e : path.edges()) {
    if (!out.empty()) out += ',';
    out += graph.name(e);
  }
  return out;
}

std::string monomial_string(const Graph& graph, const Monomial& m) {
  const bool mu_vertex = m.mu.length() == 0;
  const bool nu_vertex = m.nu.length() == 0;
  if (mu_vertex && nu_vertex) return "p(" + graph.name(m.mu.range()) + ")";
  if (nu_vertex) return "s(" + path_args(graph, m.mu) + ")";
  if (mu_vertex) return "s(" + path_args(graph, m.nu) + ")^*";
  return "s(" + path_args(graph, m.mu) + ")*s(" + path_args(graph, m.nu) + ")^*";
}

std::string terms_string(const Graph& graph, const AlgebraElement::Terms& terms, bool& first) {
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool negative = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    const Scalar magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (!magnitude.is_one()) {
      out += magnitude.to_string();
      out += "*";
    }
    out += monomial_string(graph, m);
  }
  return out;
}

}  // namespace

AlgebraElement parse_expression(const GraphPtr& graph, std::string_view text) {
  return Parser(graph, text).parse();
}

std::string to_string(const AlgebraElement& x) {
  if (x.empty()) return "0";
  bool first = true;
  return terms_string(*x.graph(), x.terms(), first);
}

std::string to_string(const NormalForm& nf, const GraphPtr& graph) {
  if (nf.empty()) return "0";
  bool first = true;
  std::string out;
  for (const auto& [d, cls] : nf.classes) out += terms_string(*graph, cls.terms, first);
  return out;
}

}  // namespace mwg
