#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mwg/algebra.hpp"

namespace mwg {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, unknown_id, source_mismatch };

  ParseError(Kind kind, std::size_t offset, const std::string& message);

  Kind kind() const { return kind_; }
  /// Zero-based byte offset into the input.
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// Parses the ASCII expression language
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := [scalar '*'] factor ('*' factor)*
///   factor := 's' '(' id (',' id)* ')' | 'p' '(' vertex ')' | factor '^*' | '(' expr ')'
///   scalar := rational [('+' | '-') rational 'i']
///
/// s(...) takes a composable edge list (or a single vertex id), p(v) is the
/// vertex projection. A lone `0` denotes the zero element. Whitespace is
/// insignificant.
AlgebraElement parse_expression(const GraphPtr& graph, std::string_view text);

/// Canonical rendering accepted by parse_expression: terms in monomial
/// order, unit coefficients omitted, e.g. `s(e1)*s(e1)^* - 1/2*p(v)`.
std::string to_string(const AlgebraElement& x);
std::string to_string(const NormalForm& nf, const GraphPtr& graph);

}  // namespace mwg
