#include "spinalg/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "spinalg/ops.hpp"

namespace spinalg {

ParseError::ParseError(int line, int col, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
      line_(line),
      col_(col),
      message_(message) {}

namespace {

constexpr unsigned kMaxExponent = 64;
constexpr int kMaxDepth = 256;  // nested groups and unary minus signs

enum class Tok { Number, Ident, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Number: return "number " + t.text;
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::Punct: return "'" + t.text + "'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++k;
    }
  };
  while (k < src.size()) {
    const unsigned char ch = static_cast<unsigned char>(src[k]);
    if (std::isspace(ch)) {
      advance(1);
      continue;
    }
    Token t;
    t.pos = {line, col};
    if (std::isdigit(ch)) {
      std::size_t e = k;
      while (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) ++e;
      // "a/b" with no spaces is a single rational literal
      if (e + 1 < src.size() && src[e] == '/' && std::isdigit(static_cast<unsigned char>(src[e + 1]))) {
        ++e;
        while (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) ++e;
      }
      t.kind = Tok::Number;
      t.text = std::string(src.substr(k, e - k));
      advance(e - k);
    } else if (std::isalpha(ch) || ch == '_') {
      std::size_t e = k;
      while (e < src.size() && (std::isalnum(static_cast<unsigned char>(src[e])) || src[e] == '_')) ++e;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(k, e - k));
      advance(e - k);
    } else if (std::string_view("()[]{},+-*/^").find(static_cast<char>(ch)) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = std::string(1, static_cast<char>(ch));
      advance(1);
    } else {
      std::string shown = std::isprint(ch) ? std::string(1, static_cast<char>(ch)) : "\\x" + std::to_string(ch);
      throw ParseError(line, col, "expected an expression token, found '" + shown + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = {line, col};
  out.push_back(end);
  return out;
}

// x12 -> ('x', 12); nullopt if not letter+digits.
std::optional<std::pair<char, int>> indexed_generator(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'x' && s[0] != 'p' && s[0] != 'g')) return std::nullopt;
  for (std::size_t k = 1; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
  if (s.size() > 4) return std::make_pair(s[0], 1000);  // surely out of range
  return std::make_pair(s[0], std::stoi(s.substr(1)));
}

class Parser {
 public:
  Parser(std::vector<Token> toks, int d) : toks_(std::move(toks)), d_(d) {}

  Ast parse_all() {
    Ast out = sum();
    if (peek().kind != Tok::End) fail("'+', '-', '*', an operand or end of input");
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_punct(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(peek().pos.line, peek().pos.col, "expected " + expected + ", found " + describe(peek()));
  }

  void expect(const char* p) {
    if (!is_punct(p)) fail(std::string("'") + p + "'");
    take();
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) {
        --p.depth_;
        throw ParseError(p.peek().pos.line, p.peek().pos.col, "expression nested too deeply");
      }
    }
    ~DepthGuard() { --p.depth_; }
  };

  bool starts_atom() const {
    const Token& t = peek();
    if (t.kind == Tok::Number || t.kind == Tok::Ident) return true;
    return t.kind == Tok::Punct && (t.text == "(" || t.text == "[" || t.text == "{");
  }

  Ast sum() {
    const SourcePos start = peek().pos;
    std::vector<std::pair<ParamPoly, Ast>> terms;
    ParamPoly sign(1);
    if (is_punct("+")) {
      take();
    } else if (is_punct("-")) {
      take();
      sign = ParamPoly(-1);
    }
    terms.emplace_back(sign, product());
    while (is_punct("+") || is_punct("-")) {
      const bool minus = take().text == "-";
      terms.emplace_back(ParamPoly(minus ? -1 : 1), product());
    }
    if (terms.size() == 1 && terms[0].first == ParamPoly(1)) return terms[0].second;
    return ast::sum(std::move(terms), start);
  }

  Ast product() {
    const SourcePos start = peek().pos;
    std::vector<Ast> factors{power()};
    ParamPoly scale(1);
    for (;;) {
      if (is_punct("*")) {
        take();
        factors.push_back(power());
      } else if (is_punct("/")) {
        take();
        if (peek().kind != Tok::Number) fail("a number after '/'");
        const Rational den = literal(take());
        if (den.is_zero()) throw ParseError(toks_[pos_ - 1].pos.line, toks_[pos_ - 1].pos.col, "division by zero");
        scale *= ParamPoly(Rational(1) / den);
      } else if (starts_atom()) {
        factors.push_back(power());
      } else {
        break;
      }
    }
    Ast out = factors.size() == 1 ? factors[0] : ast::product(std::move(factors), start);
    if (scale == ParamPoly(1)) return out;
    return ast::sum({{scale, out}}, start);
  }

  Ast power() {
    const SourcePos start = peek().pos;
    if (is_punct("-")) {
      DepthGuard guard(*this);
      take();
      return ast::sum({{ParamPoly(-1), power()}}, start);
    }
    Ast base = atom();
    while (is_punct("^")) {
      take();
      const Token& t = peek();
      if (t.kind != Tok::Number || t.text.find('/') != std::string::npos) fail("a non-negative integer exponent");
      if (t.text.size() > 3 || std::stoul(t.text) > kMaxExponent)
        throw ParseError(t.pos.line, t.pos.col, "exponent " + t.text + " exceeds " + std::to_string(kMaxExponent));
      const unsigned n = static_cast<unsigned>(std::stoul(take().text));
      base = ast::power(base, n, start);
    }
    return base;
  }

  Rational literal(const Token& t) {
    try {
      return Rational::parse(t.text);
    } catch (const std::exception&) {
      throw ParseError(t.pos.line, t.pos.col, "invalid number " + t.text);
    }
  }

  int index_literal() {
    const Token& t = peek();
    if (t.kind != Tok::Number || t.text.find('/') != std::string::npos) fail("an integer index");
    if (t.text.size() > 4) throw ParseError(t.pos.line, t.pos.col, "index " + t.text + " out of range 1.." + std::to_string(d_));
    const int v = std::stoi(take().text);
    check_index(v, t.pos);
    return v;
  }

  void check_index(int v, SourcePos pos) const {
    if (v < 1 || v > d_)
      throw ParseError(pos.line, pos.col, "index " + std::to_string(v) + " out of range 1.." + std::to_string(d_));
  }

  Ast atom() {
    DepthGuard guard(*this);
    const Token t = peek();
    if (t.kind == Tok::Number) {
      take();
      return ast::scalar(ParamPoly(literal(t)), t.pos);
    }
    if (t.kind == Tok::Ident) {
      take();
      if (t.text == "i") return ast::scalar(ParamPoly::i(), t.pos);
      if (t.text == "alpha") return ast::scalar(ParamPoly::alpha(), t.pos);
      if (t.text == "E") return ast::scalar(ParamPoly::energy(), t.pos);
      if (t.text == "rinv2") return ast::gen(GenKind::RInv2, 0, t.pos);
      if (auto g = indexed_generator(t.text)) {
        check_index(g->second, t.pos);
        const GenKind kind = g->first == 'x' ? GenKind::X : (g->first == 'p' ? GenKind::P : GenKind::Gamma);
        return ast::gen(kind, g->second, t.pos);
      }
      const int arity = builder_arity(t.text);
      if (arity < 0) throw ParseError(t.pos.line, t.pos.col, "unknown identifier '" + t.text + "'");
      std::vector<int> indices;
      if (arity > 0) {
        expect("(");
        indices.push_back(index_literal());
        for (int k = 1; k < arity; ++k) {
          expect(",");
          indices.push_back(index_literal());
        }
        expect(")");
      }
      return ast::named(t.text, std::move(indices), t.pos);
    }
    if (is_punct("(")) {
      take();
      Ast inner = sum();
      expect(")");
      return inner;
    }
    if (is_punct("[") || is_punct("{")) {
      const bool anti = take().text == "{";
      Ast left = sum();
      expect(",");
      Ast right = sum();
      expect(anti ? "}" : "]");
      return anti ? ast::anti(left, right, t.pos) : ast::comm(left, right, t.pos);
    }
    fail("a number, identifier, '(', '[' or '{'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int d_;
  int depth_ = 0;
};

}  // namespace

Ast parse(std::string_view text, int d) {
  if (d < 1 || d > kMaxDim) throw std::out_of_range("dimension " + std::to_string(d) + " out of range");
  Parser parser(lex(text), d);
  return parser.parse_all();
}

OperatorExpr evaluate(const Ast& a, int d) {
  const auto& node = a.node().node;
  if (const auto* s = std::get_if<ScalarNode>(&node)) return OperatorExpr::scalar(d, s->value);
  if (const auto* g = std::get_if<GeneratorNode>(&node)) {
    switch (g->kind) {
      case GenKind::RInv2: return OperatorExpr::rinv2(d);
      case GenKind::X: return OperatorExpr::x(d, g->index);
      case GenKind::P: return OperatorExpr::p(d, g->index);
      case GenKind::Gamma: return OperatorExpr::gamma(d, g->index);
    }
  }
  if (const auto* n = std::get_if<NamedNode>(&node)) return build(d, OperatorName{n->name, n->indices});
  if (const auto* s = std::get_if<SumNode>(&node)) {
    OperatorExpr out(d);
    for (const auto& [c, child] : s->terms) out += evaluate(child, d) * c;
    return out;
  }
  if (const auto* p = std::get_if<ProductNode>(&node)) {
    if (p->factors.empty()) return OperatorExpr::scalar(d, 1);
    OperatorExpr out = evaluate(p->factors[0], d);
    for (std::size_t k = 1; k < p->factors.size(); ++k) out = out * evaluate(p->factors[k], d);
    return out;
  }
  if (const auto* p = std::get_if<PowerNode>(&node)) return power(evaluate(p->base, d), p->exponent);
  const auto& b = std::get<BracketNode>(node);
  const OperatorExpr l = evaluate(b.left, d);
  const OperatorExpr r = evaluate(b.right, d);
  return b.anti ? anticommutator(l, r) : commutator(l, r);
}

std::string format(const OperatorExpr& a) { return a.str(); }

OperatorExpr reduce(std::string_view text, int d) { return evaluate(parse(text, d), d); }

}  // namespace spinalg
