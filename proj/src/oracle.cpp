#include "spinalg/oracle.hpp"

#include <mutex>
#include <random>
#include <stdexcept>

#include "spinalg/ops.hpp"

namespace spinalg {

namespace {

const GammaRep& rep_for(int d) {
  static std::mutex mutex;
  static std::map<int, GammaRep> reps;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = reps.find(d);
  if (it == reps.end()) it = reps.emplace(d, gamma_matrices(d)).first;
  return it->second;
}

void bump(Exponents& a, int j, int by) {
  const int v = a[j] + by;
  if (v < 0 || v > 255) throw std::overflow_error("exponent out of range in test function");
  a[j] = static_cast<std::uint8_t>(v);
}

}  // namespace

SpinorFunction::SpinorFunction(int d) : d_(d) {
  if (d < 2 || d > kMaxGammaDim) throw std::out_of_range("test functions need 2 <= d <= " + std::to_string(kMaxGammaDim));
  spinor_dim_ = 1 << (d / 2);
}

void SpinorFunction::add_canonical(const FunctionKey& key, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SpinorFunction::add(int k, const Exponents& a, int spinor, const ParamPoly& c) {
  if (c.is_zero()) return;
  if (spinor < 0 || spinor >= spinor_dim_) throw std::out_of_range("spinor index out of range");
  if (k > 0) {
    for (int j = 0; j < d_; ++j) {
      Exponents b = a;
      bump(b, j, 2);
      add(k - 1, b, spinor, c);
    }
    return;
  }
  if (k < 0 && a[0] >= 2) {
    // x_1^2 r^(2k) = r^(2k+2) - sum_{j>=2} x_j^2 r^(2k)
    Exponents b = a;
    bump(b, 0, -2);
    add(k + 1, b, spinor, c);
    for (int j = 1; j < d_; ++j) {
      Exponents e = b;
      bump(e, j, 2);
      add(k, e, spinor, -c);
    }
    return;
  }
  add_canonical(FunctionKey{k, a, spinor}, c);
}

bool SpinorFunction::is_canonical() const {
  for (const auto& [key, c] : terms_) {
    if (c.is_zero() || key.k > 0) return false;
    if (key.k < 0 && key.x[0] >= 2) return false;
  }
  return true;
}

std::string SpinorFunction::str() const {
  std::vector<std::string> parts(static_cast<std::size_t>(spinor_dim_));
  for (const auto& [key, c] : terms_) {
    std::string factors;
    auto append = [&factors](const std::string& f) { factors += (factors.empty() ? "" : "*") + f; };
    if (key.k < 0) append("rinv2^" + std::to_string(-key.k));
    for (int j = 0; j < d_; ++j)
      if (key.x[j]) append("x" + std::to_string(j + 1) + (key.x[j] > 1 ? "^" + std::to_string(key.x[j]) : ""));
    std::string t;
    if (factors.empty()) t = c.factor_str();
    else if (c == ParamPoly(1)) t = factors;
    else if (c == ParamPoly(-1)) t = "-" + factors;
    else t = c.factor_str() + "*" + factors;
    auto& part = parts[static_cast<std::size_t>(key.spinor)];
    if (!part.empty() && t.front() != '-') part += "+";
    part += t;
  }
  std::string out;
  for (int s = 0; s < spinor_dim_; ++s) {
    if (s) out += "; ";
    const auto& part = parts[static_cast<std::size_t>(s)];
    out += "e" + std::to_string(s + 1) + ": " + (part.empty() ? "0" : part);
  }
  return out;
}

SpinorFunction& SpinorFunction::operator+=(const SpinorFunction& o) {
  if (o.d_ != d_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [key, c] : o.terms_) add_canonical(key, c);
  return *this;
}

SpinorFunction& SpinorFunction::operator-=(const SpinorFunction& o) {
  if (o.d_ != d_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [key, c] : o.terms_) add_canonical(key, -c);
  return *this;
}

SpinorFunction& SpinorFunction::operator*=(const ParamPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero()) it = terms_.erase(it);
    else ++it;
  }
  return *this;
}

// ---------------------------------------------------------------------------

namespace {

SpinorFunction apply_x(int i, const SpinorFunction& f) {
  SpinorFunction out(f.d());
  for (const auto& [key, c] : f.terms()) {
    Exponents a = key.x;
    bump(a, i - 1, 1);
    out.add(key.k, a, key.spinor, c);
  }
  return out;
}

// p_i = -i d/dx_i; d/dx_i (r^(2k) x^a) = 2k x_i r^(2k-2) x^a + a_i r^(2k) x^(a - e_i)
SpinorFunction apply_p(int i, const SpinorFunction& f) {
  SpinorFunction out(f.d());
  const ParamPoly minus_i = ParamPoly(GaussianRational(0, -1));
  const int j = i - 1;
  for (const auto& [key, c] : f.terms()) {
    if (key.k != 0) {
      Exponents a = key.x;
      bump(a, j, 1);
      out.add(key.k - 1, a, key.spinor, c * minus_i * ParamPoly(2L * key.k));
    }
    if (key.x[j] > 0) {
      Exponents a = key.x;
      bump(a, j, -1);
      out.add(key.k, a, key.spinor, c * minus_i * ParamPoly(static_cast<long>(key.x[j])));
    }
  }
  return out;
}

SpinorFunction apply_rinv2(const SpinorFunction& f) {
  SpinorFunction out(f.d());
  for (const auto& [key, c] : f.terms()) out.add(key.k - 1, key.x, key.spinor, c);
  return out;
}

SpinorFunction apply_gamma(int i, const SpinorFunction& f) {
  const Matrix& g = rep_for(f.d()).gamma(i);
  SpinorFunction out(f.d());
  for (const auto& [key, c] : f.terms()) {
    // (g f)_s = sum_t g(s, t) f_t
    for (std::size_t s = 0; s < g.size(); ++s) {
      const GaussianRational& entry = g(s, static_cast<std::size_t>(key.spinor));
      if (!entry.is_zero()) out.add(key.k, key.x, static_cast<int>(s), c * entry);
    }
  }
  return out;
}

SpinorFunction apply_generator(GenKind kind, int index, const SpinorFunction& f) {
  switch (kind) {
    case GenKind::RInv2: return apply_rinv2(f);
    case GenKind::X: return apply_x(index, f);
    case GenKind::P: return apply_p(index, f);
    case GenKind::Gamma: return apply_gamma(index, f);
  }
  throw std::logic_error("bad generator");
}

void check_generator(int d, GenKind kind, int index) {
  if (kind != GenKind::RInv2 && (index < 1 || index > d))
    throw std::out_of_range("generator index " + std::to_string(index) + " out of range 1.." + std::to_string(d));
}

const Ast& cached_definition(int d, const NamedNode& n) {
  thread_local std::map<std::pair<int, OperatorName>, Ast> defs;
  OperatorName name{n.name, n.indices};
  auto key = std::make_pair(d, name);
  auto it = defs.find(key);
  if (it == defs.end()) it = defs.emplace(key, definition(d, name)).first;
  return it->second;
}

}  // namespace

SpinorFunction apply(const OperatorExpr& op, const SpinorFunction& f) {
  if (op.d() != f.d()) throw std::invalid_argument("dimension mismatch between operator and test function");
  const int d = f.d();
  SpinorFunction out(d);
  for (const auto& [key, c] : op.terms()) {
    // c * r^(2k) x^a p^b w acting on f, rightmost factor first
    SpinorFunction g = f;
    const auto idx = key.mono.word.indices();
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) g = apply_gamma(*it, g);
    for (int j = 0; j < d; ++j)
      for (int n = 0; n < key.mono.p[j]; ++n) g = apply_p(j + 1, g);
    for (int j = 0; j < d; ++j)
      for (int n = 0; n < key.mono.x[j]; ++n) g = apply_x(j + 1, g);
    for (int n = 0; n < -key.rpow; ++n) g = apply_rinv2(g);
    g *= c;
    out += g;
  }
  return out;
}

SpinorFunction apply(const Ast& op, const SpinorFunction& f) {
  const int d = f.d();
  const auto& node = op.node().node;
  if (const auto* s = std::get_if<ScalarNode>(&node)) {
    SpinorFunction out = f;
    out *= s->value;
    return out;
  }
  if (const auto* g = std::get_if<GeneratorNode>(&node)) {
    check_generator(d, g->kind, g->index);
    return apply_generator(g->kind, g->index, f);
  }
  if (const auto* n = std::get_if<NamedNode>(&node)) return apply(cached_definition(d, *n), f);
  if (const auto* s = std::get_if<SumNode>(&node)) {
    SpinorFunction out(d);
    for (const auto& [c, child] : s->terms) {
      SpinorFunction g = apply(child, f);
      g *= c;
      out += g;
    }
    return out;
  }
  if (const auto* p = std::get_if<ProductNode>(&node)) {
    SpinorFunction g = f;
    for (auto it = p->factors.rbegin(); it != p->factors.rend(); ++it) g = apply(*it, g);
    return g;
  }
  if (const auto* p = std::get_if<PowerNode>(&node)) {
    SpinorFunction g = f;
    for (unsigned n = 0; n < p->exponent; ++n) g = apply(p->base, g);
    return g;
  }
  const auto& b = std::get<BracketNode>(node);
  SpinorFunction ab = apply(b.left, apply(b.right, f));
  const SpinorFunction ba = apply(b.right, apply(b.left, f));
  if (b.anti) ab += ba;
  else ab -= ba;
  return ab;
}

SpinorFunction random_function(int d, std::uint64_t seed, int max_degree, int min_k) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
  if (min_k > 0) throw std::invalid_argument("min_k must be <= 0");
  std::mt19937_64 rng(seed);
  // Modulo reduction keeps the stream identical across standard libraries.
  auto pick = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  SpinorFunction f(d);
  const int terms = pick(3, 8);
  for (int t = 0; t < terms; ++t) {
    const int k = pick(min_k, 0);
    Exponents a{};
    const int degree = pick(0, max_degree);
    for (int n = 0; n < degree; ++n) ++a[static_cast<std::size_t>(pick(0, d - 1))];
    const int s = pick(0, f.spinor_dim() - 1);
    GaussianRational c(Rational(pick(-3, 3)), Rational(pick(-1, 1)));
    if (c.is_zero()) c = GaussianRational(1);
    f.add(k, a, s, c);
  }
  if (f.is_zero()) f.add(0, Exponents{}, 0, 1);
  return f;
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

template <typename ApplyA, typename ApplyB>
CrosscheckResult run_crosscheck(int d, const CrosscheckOptions& options, ApplyA&& apply_a, ApplyB&& apply_b) {
  CrosscheckResult result;
  for (int t = 0; t < options.trials; ++t) {
    const SpinorFunction f = random_function(d, trial_seed(options.seed, t), options.max_degree, options.min_k);
    SpinorFunction fa = apply_a(f);
    SpinorFunction fb = apply_b(f);
    ++result.trials;
    if (!(fa == fb)) {
      result.agree = false;
      result.witness = Witness{t, f, std::move(fa), std::move(fb)};
      break;
    }
  }
  return result;
}

}  // namespace

CrosscheckResult crosscheck(const OperatorExpr& a, const OperatorExpr& b, const CrosscheckOptions& options) {
  if (a.d() != b.d()) throw std::invalid_argument("dimension mismatch");
  return run_crosscheck(
      a.d(), options, [&a](const SpinorFunction& f) { return apply(a, f); },
      [&b](const SpinorFunction& f) { return apply(b, f); });
}

CrosscheckResult crosscheck(const Ast& a, const Ast& b, int d, const CrosscheckOptions& options) {
  return run_crosscheck(
      d, options, [&a](const SpinorFunction& f) { return apply(a, f); },
      [&b](const SpinorFunction& f) { return apply(b, f); });
}

}  // namespace spinalg
