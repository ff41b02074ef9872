#include "spinalg/ops.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "spinalg/expr.hpp"

namespace spinalg {

namespace {

struct BuilderInfo {
  const char* tag;
  int arity;
  bool d3_only;
};

constexpr BuilderInfo kBuilders[] = {
    {"H", 0, false},    {"K", 0, false},    {"T", 0, false},    {"L", 2, false},     {"S", 2, false},
    {"J", 2, false},    {"A", 1, false},    {"M", 1, false},    {"G0", 0, false},    {"Gd1", 0, false},
    {"G", 1, false},    {"B", 1, false},    {"B1", 1, false},   {"B2", 1, false},    {"LRL", 1, false},
    {"Q2", 0, false},   {"J2", 0, false},   {"L2", 0, false},   {"S2", 0, false},    {"LS", 0, false},
    {"XP", 0, false},   {"GX", 0, false},   {"GP", 0, false},   {"P2", 0, false},    {"R2", 0, false},
    {"XS", 0, true},    {"PS", 0, true},    {"Jvec", 1, true},  {"Lvec", 1, true},   {"Svec", 1, true},
};

const BuilderInfo* find_builder(std::string_view tag) {
  for (const auto& b : kBuilders)
    if (tag == b.tag) return &b;
  return nullptr;
}

Ast N(const std::string& tag, std::vector<int> idx = {}) { return ast::named(tag, std::move(idx)); }
Ast c(const ParamPoly& v) { return ast::scalar(v); }

const ParamPoly kI = ParamPoly::i();
const ParamPoly kHalf = ParamPoly(Rational(1, 2));

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (1,2,3)
  return ((i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1)) ? 1 : -1;
}

Ast sum_over(int d, const std::function<Ast(int)>& f) {
  std::vector<std::pair<ParamPoly, Ast>> terms;
  for (int j = 1; j <= d; ++j) terms.emplace_back(1, f(j));
  return ast::sum(std::move(terms));
}

Ast double_sum(int d, const std::function<Ast(int, int)>& f) {
  std::vector<std::pair<ParamPoly, Ast>> terms;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) terms.emplace_back(1, f(i, j));
  return ast::sum(std::move(terms));
}

// T = x.p - i(d-1)/2
Ast dilation_shift(int d) { return c(kI * ParamPoly(Rational(d - 1, 2))); }

}  // namespace

std::string OperatorName::str() const {
  std::string out = tag;
  if (!indices.empty()) {
    out += "(";
    for (std::size_t k = 0; k < indices.size(); ++k) out += (k ? "," : "") + std::to_string(indices[k]);
    out += ")";
  }
  return out;
}

int builder_arity(std::string_view tag) {
  const auto* b = find_builder(tag);
  return b ? b->arity : -1;
}

bool builder_is_d3_only(std::string_view tag) {
  const auto* b = find_builder(tag);
  return b && b->d3_only;
}

const std::vector<std::string>& builder_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> out;
    for (const auto& b : kBuilders) out.emplace_back(b.tag);
    return out;
  }();
  return tags;
}

void check_builder(int d, const OperatorName& name) {
  const auto* b = find_builder(name.tag);
  if (!b) throw std::invalid_argument("unknown operator '" + name.tag + "'");
  if (static_cast<int>(name.indices.size()) != b->arity)
    throw std::invalid_argument("operator '" + name.tag + "' takes " + std::to_string(b->arity) + " index(es), got " +
                                std::to_string(name.indices.size()));
  for (int i : name.indices)
    if (i < 1 || i > d)
      throw std::out_of_range("index " + std::to_string(i) + " of '" + name.str() + "' out of range 1.." +
                              std::to_string(d));
  if (b->d3_only && d != 3) throw std::domain_error("operator '" + name.tag + "' is only defined for d = 3");
}

Ast definition(int d, const OperatorName& name) {
  check_builder(d, name);
  const std::string& t = name.tag;
  const auto& ix = name.indices;
  using namespace ast;

  if (t == "P2") return sum_over(d, [](int j) { return p(j) * p(j); });
  if (t == "R2") return sum_over(d, [](int j) { return x(j) * x(j); });
  if (t == "XP") return sum_over(d, [](int j) { return x(j) * p(j); });
  if (t == "GX") return sum_over(d, [](int j) { return g(j) * x(j); });
  if (t == "GP") return sum_over(d, [](int j) { return g(j) * p(j); });

  if (t == "S") {
    const int i = ix[0], j = ix[1];
    return ParamPoly(GaussianRational(0, Rational(-1, 4))) * (g(i) * g(j) - g(j) * g(i));
  }
  if (t == "L") {
    const int i = ix[0], j = ix[1];
    return x(i) * p(j) - x(j) * p(i);
  }
  if (t == "J") return N("L", ix) + N("S", ix);
  if (t == "T") return N("XP") - dilation_shift(d);

  if (t == "A" || t == "M" || t == "B" || t == "B1") {
    const int i = ix[0];
    Ast out = kHalf * (x(i) * N("P2")) - N("T") * p(i);
    if (t == "A") out = out - kHalf * x(i);
    if (t == "M") out = out + kHalf * x(i);
    if (t != "B1") out = out + N("B2", {i});
    if (t == "B" || t == "B1") out = out + ParamPoly::energy() * x(i);
    return out;
  }
  if (t == "B2") {
    const int i = ix[0];
    return sum_over(d, [i](int j) { return N("S", {i, j}) * p(j); });
  }

  if (t == "H") return kHalf * N("P2") + ParamPoly::alpha() * (rinv2() * N("GX"));
  if (t == "K") return N("GX") * (kHalf * N("P2") - c(ParamPoly::energy()));
  if (t == "G0") return kHalf * (N("GX") * (N("P2") + one()));
  if (t == "Gd1") return kHalf * (N("GX") * (N("P2") - one()));
  if (t == "G") return N("GX") * p(ix[0]);
  if (t == "LRL") {
    const int i = ix[0];
    return N("B", {i}) + x(i) * (N("H") - c(ParamPoly::energy()));
  }

  if (t == "J2" || t == "L2" || t == "S2") {
    const std::string base = t.substr(0, 1);
    return kHalf * double_sum(d, [&base](int i, int j) { return N(base, {i, j}) * N(base, {i, j}); });
  }
  if (t == "LS") return double_sum(d, [](int i, int j) { return N("L", {i, j}) * N("S", {i, j}); });
  if (t == "Q2") {
    Ast a2 = sum_over(d, [](int i) { return N("A", {i}) * N("A", {i}); });
    Ast m2 = sum_over(d, [](int i) { return N("M", {i}) * N("M", {i}); });
    return N("J2") + a2 - m2 - N("T") * N("T");
  }

  if (t == "Jvec" || t == "Lvec" || t == "Svec") {
    const int i = ix[0];
    const std::string base = t.substr(0, 1);
    std::vector<std::pair<ParamPoly, Ast>> terms;
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        if (const int e = levi_civita(i, j, k); e != 0) terms.emplace_back(kHalf * ParamPoly(e), N(base, {j, k}));
    return ast::sum(std::move(terms));
  }
  if (t == "XS") return sum_over(3, [](int i) { return x(i) * N("Svec", {i}); });
  if (t == "PS") return sum_over(3, [](int i) { return p(i) * N("Svec", {i}); });

  throw std::logic_error("no definition for builder '" + t + "'");
}

// ---------------------------------------------------------------------------

namespace {

struct BuildCache {
  std::mutex mutex;
  std::map<std::pair<int, OperatorName>, std::shared_ptr<const OperatorExpr>> entries;
};

BuildCache& cache() {
  static BuildCache c;
  return c;
}

}  // namespace

const OperatorExpr& build(int d, const OperatorName& name) {
  check_builder(d, name);
  auto& bc = cache();
  const auto key = std::make_pair(d, name);
  {
    std::lock_guard<std::mutex> lock(bc.mutex);
    if (auto it = bc.entries.find(key); it != bc.entries.end()) return *it->second;
  }
  // Evaluated outside the lock: definitions recurse into build(). Two threads
  // may race to compute the same entry; both results are identical and the
  // first insertion wins.
  auto value = std::make_shared<const OperatorExpr>(evaluate(definition(d, name), d));
  std::lock_guard<std::mutex> lock(bc.mutex);
  return *bc.entries.emplace(key, std::move(value)).first->second;
}

namespace {

void require_family(std::string_view which, std::initializer_list<std::string_view> family, const char* builder) {
  if (std::find(family.begin(), family.end(), which) == family.end())
    throw std::invalid_argument(std::string(builder) + ": unsupported operator '" + std::string(which) + "'");
}

}  // namespace

OperatorExpr build_schrodinger(int d, std::string_view which) {
  require_family(which, {"H", "K"}, "build_schrodinger");
  return build(d, std::string(which));
}

OperatorExpr build_so_generator(int d, std::string_view which, const std::vector<int>& indices) {
  require_family(which, {"L", "S", "J", "A", "M", "T"}, "build_so_generator");
  return build(d, std::string(which), indices);
}

OperatorExpr build_gamma_ops(int d, std::string_view which, const std::vector<int>& indices) {
  require_family(which, {"G0", "Gd1", "G"}, "build_gamma_ops");
  return build(d, std::string(which), indices);
}

OperatorExpr build_sturm_invariant(int d, std::string_view which, int i) {
  require_family(which, {"B", "B1", "B2"}, "build_sturm_invariant");
  return build(d, std::string(which), {i});
}

OperatorExpr build_lrl(int d, int i) { return build(d, "LRL", {i}); }

OperatorExpr build_contraction(int d, std::string_view which) {
  require_family(which, {"J2", "L2", "S2", "LS", "XP", "GX", "GP", "P2", "R2", "XS", "PS", "Q2"}, "build_contraction");
  return build(d, std::string(which));
}

OperatorExpr build_d3_vector(int d, std::string_view which, int i) {
  require_family(which, {"Jvec", "Lvec", "Svec"}, "build_d3_vector");
  return build(d, std::string(which), {i});
}

}  // namespace spinalg
