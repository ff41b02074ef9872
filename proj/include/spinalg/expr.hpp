#pragma once

// Operator-expression language: parser, evaluator and canonical formatter.
// Grammar in docs/grammar.ebnf.

#include <stdexcept>
#include <string>
#include <string_view>

#include "spinalg/ast.hpp"
#include "spinalg/weyl.hpp"

namespace spinalg {

/// Positioned diagnostic; what() is "line:col: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message);
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int col_;
  std::string message_;
};

/// Parses an expression for dimension d. Generator and builder indices are
/// checked against 1..d; dimension-gated builders are accepted here and
/// rejected by evaluate().
Ast parse(std::string_view text, int d);

/// Engine value of an expression. Throws domain_error for builders not
/// defined at d, out_of_range for bad indices.
OperatorExpr evaluate(const Ast& ast, int d);

/// Canonical text; evaluate(parse(format(a), d), d) == a.
std::string format(const OperatorExpr& a);

/// parse + evaluate.
OperatorExpr reduce(std::string_view text, int d);

}  // namespace spinalg
