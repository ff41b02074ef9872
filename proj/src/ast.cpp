#include "spinalg/ast.hpp"

namespace spinalg {

Ast::Ast(AstNode node) : node_(std::make_shared<const AstNode>(std::move(node))) {}

namespace ast {

Ast scalar(const ParamPoly& c, SourcePos pos) { return Ast(AstNode{ScalarNode{c}, pos}); }

Ast gen(GenKind kind, int index, SourcePos pos) { return Ast(AstNode{GeneratorNode{kind, index}, pos}); }

Ast named(const std::string& name, std::vector<int> indices, SourcePos pos) {
  return Ast(AstNode{NamedNode{name, std::move(indices)}, pos});
}

Ast sum(std::vector<std::pair<ParamPoly, Ast>> terms, SourcePos pos) {
  return Ast(AstNode{SumNode{std::move(terms)}, pos});
}

Ast product(std::vector<Ast> factors, SourcePos pos) { return Ast(AstNode{ProductNode{std::move(factors)}, pos}); }

Ast power(const Ast& base, unsigned exponent, SourcePos pos) {
  return Ast(AstNode{PowerNode{base, exponent}, pos});
}

Ast comm(const Ast& a, const Ast& b, SourcePos pos) { return Ast(AstNode{BracketNode{a, b, false}, pos}); }

Ast anti(const Ast& a, const Ast& b, SourcePos pos) { return Ast(AstNode{BracketNode{a, b, true}, pos}); }

}  // namespace ast

namespace {

void append_terms(std::vector<std::pair<ParamPoly, Ast>>& out, const ParamPoly& scale, const Ast& a) {
  if (const auto* s = std::get_if<SumNode>(&a.node().node)) {
    for (const auto& [c, child] : s->terms) out.emplace_back(c * scale, child);
  } else {
    out.emplace_back(scale, a);
  }
}

void append_factors(std::vector<Ast>& out, const Ast& a) {
  if (const auto* p = std::get_if<ProductNode>(&a.node().node)) {
    out.insert(out.end(), p->factors.begin(), p->factors.end());
  } else {
    out.push_back(a);
  }
}

enum Context { kSumCtx = 0, kProductCtx = 1, kPowerCtx = 2 };

std::string render(const Ast& a, int ctx);

std::string render_term(const ParamPoly& c, const Ast& child) {
  if (c == ParamPoly(1)) return render(child, kProductCtx);
  if (c == ParamPoly(-1)) return "-" + render(child, kProductCtx);
  if (const auto* s = std::get_if<ScalarNode>(&child.node().node)) return (c * s->value).factor_str();
  return c.factor_str() + "*" + render(child, kProductCtx);
}

std::string render(const Ast& a, int ctx) {
  const auto& node = a.node().node;
  if (const auto* s = std::get_if<ScalarNode>(&node)) {
    std::string t = s->value.str();
    const bool simple = s->value.terms().size() <= 1 && t.front() != '-' &&
                        (s->value.is_zero() || s->value.terms()[0].coeff.re().is_zero() ||
                         s->value.terms()[0].coeff.im().is_zero());
    const bool needs_parens = ctx >= kPowerCtx ? (!simple || t.find('*') != std::string::npos) : (ctx >= kProductCtx && !simple);
    return needs_parens ? "(" + t + ")" : t;
  }
  if (const auto* g = std::get_if<GeneratorNode>(&node)) {
    switch (g->kind) {
      case GenKind::RInv2: return "rinv2";
      case GenKind::X: return "x" + std::to_string(g->index);
      case GenKind::P: return "p" + std::to_string(g->index);
      case GenKind::Gamma: return "g" + std::to_string(g->index);
    }
  }
  if (const auto* n = std::get_if<NamedNode>(&node)) {
    std::string t = n->name;
    if (!n->indices.empty()) {
      t += "(";
      for (std::size_t k = 0; k < n->indices.size(); ++k) t += (k ? "," : "") + std::to_string(n->indices[k]);
      t += ")";
    }
    return t;
  }
  if (const auto* s = std::get_if<SumNode>(&node)) {
    if (s->terms.empty()) return "0";
    std::string body;
    for (const auto& [c, child] : s->terms) {
      std::string t = render_term(c, child);
      if (body.empty()) body = t;
      else if (t.front() == '-') body += " - " + t.substr(1);
      else body += " + " + t;
    }
    if (s->terms.size() == 1 && ctx <= kProductCtx && body.front() != '-') return body;
    return ctx >= kProductCtx ? "(" + body + ")" : body;
  }
  if (const auto* p = std::get_if<ProductNode>(&node)) {
    if (p->factors.empty()) return "1";
    std::string body;
    for (const auto& f : p->factors) body += (body.empty() ? "" : "*") + render(f, kProductCtx);
    return ctx >= kPowerCtx && p->factors.size() > 1 ? "(" + body + ")" : body;
  }
  if (const auto* p = std::get_if<PowerNode>(&node)) {
    std::string body = render(p->base, kPowerCtx) + "^" + std::to_string(p->exponent);
    return ctx >= kPowerCtx ? "(" + body + ")" : body;
  }
  const auto& b = std::get<BracketNode>(node);
  const std::string inner = render(b.left, kSumCtx) + ", " + render(b.right, kSumCtx);
  return b.anti ? "{" + inner + "}" : "[" + inner + "]";
}

}  // namespace

std::string Ast::str() const { return node_ ? render(*this, kSumCtx) : "<empty>"; }

Ast operator+(const Ast& a, const Ast& b) {
  std::vector<std::pair<ParamPoly, Ast>> terms;
  append_terms(terms, 1, a);
  append_terms(terms, 1, b);
  return ast::sum(std::move(terms));
}

Ast operator-(const Ast& a, const Ast& b) {
  std::vector<std::pair<ParamPoly, Ast>> terms;
  append_terms(terms, 1, a);
  append_terms(terms, -1, b);
  return ast::sum(std::move(terms));
}

Ast operator-(const Ast& a) {
  std::vector<std::pair<ParamPoly, Ast>> terms;
  append_terms(terms, -1, a);
  return ast::sum(std::move(terms));
}

Ast operator*(const Ast& a, const Ast& b) {
  std::vector<Ast> factors;
  append_factors(factors, a);
  append_factors(factors, b);
  return ast::product(std::move(factors));
}

Ast operator*(const ParamPoly& c, const Ast& a) {
  std::vector<std::pair<ParamPoly, Ast>> terms;
  append_terms(terms, c, a);
  return ast::sum(std::move(terms));
}

}  // namespace spinalg
