#pragma once

// Formal (unevaluated) operator expressions. The same tree feeds the engine
// (evaluate) and the function-application oracle (apply), which keeps the
// two evaluation paths independent.

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "spinalg/coeff.hpp"
#include "spinalg/weyl.hpp"

namespace spinalg {

struct AstNode;

struct SourcePos {
  int line = 0;
  int col = 0;
};

/// Shared immutable handle to an expression tree.
class Ast {
 public:
  Ast() = default;
  explicit Ast(AstNode node);

  const AstNode& node() const { return *node_; }
  explicit operator bool() const { return static_cast<bool>(node_); }

  /// Re-parseable rendering.
  std::string str() const;

 private:
  std::shared_ptr<const AstNode> node_;
};

struct ScalarNode {
  ParamPoly value;
};
struct GeneratorNode {
  GenKind kind;
  int index;  // unused for RInv2
};
/// A named builder such as H, J(1,2) or LRL(3).
struct NamedNode {
  std::string name;
  std::vector<int> indices;
};
struct SumNode {
  std::vector<std::pair<ParamPoly, Ast>> terms;
};
struct ProductNode {
  std::vector<Ast> factors;
};
struct PowerNode {
  Ast base;
  unsigned exponent;
};
struct BracketNode {
  Ast left;
  Ast right;
  bool anti;  // false: [a,b] = ab - ba, true: {a,b} = ab + ba
};

using AstVariant = std::variant<ScalarNode, GeneratorNode, NamedNode, SumNode, ProductNode, PowerNode, BracketNode>;

struct AstNode {
  AstVariant node;
  SourcePos pos;
};

namespace ast {

Ast scalar(const ParamPoly& c, SourcePos pos = {});
Ast gen(GenKind kind, int index = 0, SourcePos pos = {});
inline Ast x(int i) { return gen(GenKind::X, i); }
inline Ast p(int i) { return gen(GenKind::P, i); }
inline Ast g(int i) { return gen(GenKind::Gamma, i); }
inline Ast rinv2() { return gen(GenKind::RInv2); }
Ast named(const std::string& name, std::vector<int> indices = {}, SourcePos pos = {});
Ast sum(std::vector<std::pair<ParamPoly, Ast>> terms, SourcePos pos = {});
Ast product(std::vector<Ast> factors, SourcePos pos = {});
Ast power(const Ast& base, unsigned exponent, SourcePos pos = {});
Ast comm(const Ast& a, const Ast& b, SourcePos pos = {});
Ast anti(const Ast& a, const Ast& b, SourcePos pos = {});

inline Ast zero() { return scalar(ParamPoly()); }
inline Ast one() { return scalar(ParamPoly(1)); }

}  // namespace ast

Ast operator+(const Ast& a, const Ast& b);
Ast operator-(const Ast& a, const Ast& b);
Ast operator-(const Ast& a);
/// Noncommutative product.
Ast operator*(const Ast& a, const Ast& b);
Ast operator*(const ParamPoly& c, const Ast& a);

}  // namespace spinalg
