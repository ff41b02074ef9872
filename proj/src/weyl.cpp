#include "spinalg/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace spinalg {

namespace {

void check_dim(int d) {
  if (d < 1 || d > kMaxDim) throw std::out_of_range("dimension " + std::to_string(d) + " out of range");
}

void check_index(int i, int d) {
  if (i < 1 || i > d)
    throw std::out_of_range("index " + std::to_string(i) + " out of range 1.." + std::to_string(d));
}

void check_same_dim(const OperatorExpr& a, const OperatorExpr& b) {
  if (a.d() != b.d())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.d()) + " vs " + std::to_string(b.d()));
}

std::uint8_t add_exp(unsigned a, unsigned b) {
  const unsigned s = a + b;
  if (s > 255) throw std::overflow_error("exponent overflow");
  return static_cast<std::uint8_t>(s);
}

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in derivative expansion");
  return out;
}

// Term of a Laurent function r^(2l) x^g with an integer coefficient.
struct LTerm {
  int l;
  Exponents g;
  long long c;
};

// d/dx_i of sum c r^(2l) x^g.
std::vector<LTerm> differentiate(const std::vector<LTerm>& f, int i) {
  std::map<std::pair<int, Exponents>, long long> acc;
  for (const auto& t : f) {
    if (t.l != 0) {
      Exponents g = t.g;
      g[i] = add_exp(g[i], 1);
      acc[{t.l - 1, g}] += checked_mul(2LL * t.l, t.c);
    }
    if (t.g[i] > 0) {
      Exponents g = t.g;
      --g[i];
      acc[{t.l, g}] += checked_mul(t.g[i], t.c);
    }
  }
  std::vector<LTerm> out;
  for (const auto& [key, c] : acc)
    if (c != 0) out.push_back({key.first, key.second, c});
  return out;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// One piece of p^b (r^(2l) x^g) = sum coeff * r^(2l') x^g' p^rest.
struct Leibniz {
  int l;
  Exponents g;
  Exponents rest;
  GaussianRational coeff;
};

struct LeibnizKey {
  int l;
  Exponents g;
  Exponents b;
  friend auto operator<=>(const LeibnizKey&, const LeibnizKey&) = default;
};

void leibniz_rec(int d, int dim, const Exponents& b, Exponents& kappa, const std::vector<LTerm>& f,
                 long long binom, int order, std::vector<Leibniz>& out) {
  if (dim == d) {
    Exponents rest = b;
    for (int k = 0; k < d; ++k) rest[k] = static_cast<std::uint8_t>(b[k] - kappa[k]);
    const GaussianRational phase = GaussianRational::i_pow(-order);
    for (const auto& t : f) out.push_back({t.l, t.g, rest, phase * GaussianRational(checked_mul(binom, t.c))});
    return;
  }
  std::vector<LTerm> cur = f;
  for (int k = 0; k <= b[dim]; ++k) {
    if (cur.empty()) break;
    kappa[dim] = static_cast<std::uint8_t>(k);
    leibniz_rec(d, dim + 1, b, kappa, cur, checked_mul(binom, binomial(b[dim], k)), order + k, out);
    if (k < b[dim]) cur = differentiate(cur, dim);
  }
  kappa[dim] = 0;
}

// p^b (r^(2l) x^g) with p_i = -i d/dx_i, moved to normal order.
const std::vector<Leibniz>& leibniz(int d, int l, const Exponents& g, const Exponents& b) {
  thread_local std::map<std::pair<int, LeibnizKey>, std::vector<Leibniz>> cache;
  auto key = std::make_pair(d, LeibnizKey{l, g, b});
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Leibniz> out;
  Exponents kappa{};
  leibniz_rec(d, 0, b, kappa, {LTerm{l, g, 1}}, 1, 0, out);
  return cache.emplace(key, std::move(out)).first->second;
}

// (r^2)^n expanded.
const std::vector<std::pair<Exponents, long long>>& r2_power(int d, int n) {
  thread_local std::map<std::pair<int, int>, std::vector<std::pair<Exponents, long long>>> cache;
  auto key = std::make_pair(d, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::map<Exponents, long long> acc{{Exponents{}, 1}};
  for (int step = 0; step < n; ++step) {
    std::map<Exponents, long long> next;
    for (const auto& [e, c] : acc)
      for (int j = 0; j < d; ++j) {
        Exponents f = e;
        f[j] = add_exp(f[j], 2);
        next[f] += c;
      }
    acc = std::move(next);
  }
  std::vector<std::pair<Exponents, long long>> out(acc.begin(), acc.end());
  return cache.emplace(key, std::move(out)).first->second;
}

void accumulate(std::map<Exponents, ParamPoly>& m, const Exponents& e, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void accumulate(Numerator& m, const Monomial& mono, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// Ordering of the canonical text rendering.
// Within a degree class x1 comes before x2 (x1^2 + x2^2), hence the
// reversed comparison of the exponent vectors.
bool render_less(const Monomial& a, const Monomial& b) {
  return std::make_tuple(a.x_degree(), a.p_degree(), a.word.length(), b.x, b.p, a.word) <
         std::make_tuple(b.x_degree(), b.p_degree(), b.word.length(), a.x, a.p, b.word);
}

std::string monomial_factors(int d, const Monomial& m) {
  std::string out;
  auto append = [&out](const std::string& f) {
    if (!out.empty()) out += "*";
    out += f;
  };
  for (int i = 0; i < d; ++i)
    if (m.x[i]) append("x" + std::to_string(i + 1) + (m.x[i] > 1 ? "^" + std::to_string(m.x[i]) : ""));
  for (int i = 0; i < d; ++i)
    if (m.p[i]) append("p" + std::to_string(i + 1) + (m.p[i] > 1 ? "^" + std::to_string(m.p[i]) : ""));
  if (!m.word.is_identity()) append(m.word.str());
  return out;
}

}  // namespace

int Monomial::x_degree() const { return std::accumulate(x.begin(), x.end(), 0); }
int Monomial::p_degree() const { return std::accumulate(p.begin(), p.end(), 0); }

// ---------------------------------------------------------------------------

OperatorExpr::OperatorExpr(int d) : d_(d) { check_dim(d); }

OperatorExpr OperatorExpr::scalar(int d, const ParamPoly& c) {
  OperatorExpr out(d);
  out.add_canonical(GradedKey{}, c);
  return out;
}

OperatorExpr OperatorExpr::x(int d, int i) {
  check_dim(d);
  check_index(i, d);
  Monomial m;
  m.x[i - 1] = 1;
  return term(d, 0, m, 1);
}

OperatorExpr OperatorExpr::p(int d, int i) {
  check_dim(d);
  check_index(i, d);
  Monomial m;
  m.p[i - 1] = 1;
  return term(d, 0, m, 1);
}

OperatorExpr OperatorExpr::gamma(int d, int i) { return word(d, CliffordWord::generator(i, d)); }

OperatorExpr OperatorExpr::word(int d, const CliffordWord& w) {
  check_dim(d);
  if (w.max_index() > d) throw std::out_of_range("Clifford word exceeds dimension");
  Monomial m;
  m.word = w;
  return term(d, 0, m, 1);
}

OperatorExpr OperatorExpr::rinv2(int d) { return term(d, -1, Monomial{}, 1); }

OperatorExpr OperatorExpr::r2(int d) {
  OperatorExpr out(d);
  for (int i = 0; i < d; ++i) {
    Monomial m;
    m.x[i] = 2;
    out.add_term(0, m, 1);
  }
  return out;
}

OperatorExpr OperatorExpr::term(int d, int rpow, const Monomial& mono, const ParamPoly& c) {
  OperatorExpr out(d);
  out.add_term(rpow, mono, c);
  return out;
}

void OperatorExpr::add_canonical(const GradedKey& key, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void OperatorExpr::add_term(int rpow, const Monomial& mono, const ParamPoly& c) {
  if (c.is_zero()) return;
  if (rpow > 0) {
    // r^2 on the left is expanded into sum x_j^2.
    for (int j = 0; j < d_; ++j) {
      Monomial m = mono;
      m.x[j] = add_exp(m.x[j], 2);
      add_term(rpow - 1, m, c);
    }
    return;
  }
  if (rpow < 0 && mono.x[0] >= 2) {
    // r^(2k) x_1^2 = r^(2k+2) - sum_{j>1} r^(2k) x_j^2
    Monomial base = mono;
    base.x[0] = static_cast<std::uint8_t>(base.x[0] - 2);
    add_term(rpow + 1, base, c);
    const ParamPoly neg = -c;
    for (int j = 1; j < d_; ++j) {
      Monomial m = base;
      m.x[j] = add_exp(m.x[j], 2);
      add_term(rpow, m, neg);
    }
    return;
  }
  add_canonical(GradedKey{rpow, mono}, c);
}

int OperatorExpr::denom_pow() const {
  // Keys sort by rpow first, so the smallest power is at the front.
  if (terms_.empty()) return 0;
  return std::max(0, -terms_.begin()->first.rpow);
}

Numerator OperatorExpr::numerator() const {
  const int m = denom_pow();
  Numerator out;
  for (const auto& [key, c] : terms_) {
    const int n = key.rpow + m;
    if (n == 0) {
      accumulate(out, key.mono, c);
      continue;
    }
    for (const auto& [e, k] : r2_power(d_, n)) {
      Monomial mono = key.mono;
      for (int j = 0; j < d_; ++j) mono.x[j] = add_exp(mono.x[j], e[j]);
      accumulate(out, mono, c * GaussianRational(k));
    }
  }
  return out;
}

bool OperatorExpr::depends_on_alpha() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.depends_on_alpha(); });
}

bool OperatorExpr::depends_on_energy() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.depends_on_energy(); });
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  const Numerator num = numerator();
  std::vector<std::pair<Monomial, ParamPoly>> sorted(num.begin(), num.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return render_less(a.first, b.first); });
  std::string body;
  for (const auto& [mono, c] : sorted) {
    const std::string factors = monomial_factors(d_, mono);
    std::string t;
    if (factors.empty()) {
      t = c.terms().size() == 1 ? c.str() : "(" + c.str() + ")";
    } else if (c == ParamPoly(1)) {
      t = factors;
    } else if (c == ParamPoly(-1)) {
      t = "-" + factors;
    } else {
      t = c.factor_str() + "*" + factors;
    }
    if (body.empty()) body = t;
    else if (t.front() == '-') body += t;
    else body += "+" + t;
  }
  const int m = denom_pow();
  if (m == 0) return body;
  return "rinv2^" + std::to_string(m) + "*(" + body + ")";
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  check_same_dim(*this, o);
  for (const auto& [key, c] : o.terms_) add_canonical(key, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  check_same_dim(*this, o);
  for (const auto& [key, c] : o.terms_) add_canonical(key, -c);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const ParamPoly& c) {
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

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  check_same_dim(a, b);
  const int d = a.d();
  OperatorExpr out(d);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const ParamPoly c = ca * cb;
      const SignedWord w = word_mul(ka.mono.word, kb.mono.word, d);
      // r^(2k) x^a [p^b r^(2l) x^g] p^h w v
      for (const auto& piece : leibniz(d, kb.rpow, kb.mono.x, ka.mono.p)) {
        Monomial mono;
        for (int j = 0; j < d; ++j) {
          mono.x[j] = add_exp(ka.mono.x[j], piece.g[j]);
          mono.p[j] = add_exp(piece.rest[j], kb.mono.p[j]);
        }
        mono.word = w.word;
        GaussianRational scale = piece.coeff;
        if (w.sign < 0) scale = -scale;
        out.add_term(ka.rpow + piece.l, mono, c * scale);
      }
    }
  }
  return out;
}

OperatorExpr multiply(const OperatorExpr& a, const OperatorExpr& b) { return a * b; }

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }

OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b + b * a; }

OperatorExpr linear_combine(int d, const std::vector<std::pair<ParamPoly, OperatorExpr>>& terms) {
  OperatorExpr out(d);
  for (const auto& [c, e] : terms) {
    check_same_dim(out, e);
    out += e * c;
  }
  return out;
}

OperatorExpr adjoint(const OperatorExpr& a) {
  const int d = a.d();
  OperatorExpr out(d);
  for (const auto& [key, c] : a.terms()) {
    // (r^(2k) x^a p^b w)^+ = w^+ p^b x^a r^(2k)
    const SignedWord wr = word_adjoint(key.mono.word);
    Monomial left;
    left.p = key.mono.p;
    left.word = wr.word;
    Monomial right;
    right.x = key.mono.x;
    ParamPoly cc = c.conj();
    if (wr.sign < 0) cc = -cc;
    out += OperatorExpr::term(d, 0, left, cc) * OperatorExpr::term(d, key.rpow, right, 1);
  }
  return out;
}

OperatorExpr substitute(const OperatorExpr& a, const std::optional<GaussianRational>& alpha_val,
                        const std::optional<GaussianRational>& e_val) {
  OperatorExpr out(a.d());
  for (const auto& [key, c] : a.terms()) out.add_term(key.rpow, key.mono, c.substitute(alpha_val, e_val));
  return out;
}

OperatorExpr power(const OperatorExpr& a, unsigned n) {
  OperatorExpr out = OperatorExpr::scalar(a.d(), 1);
  for (unsigned k = 0; k < n; ++k) out = out * a;
  return out;
}

OperatorExpr reduce_denominator(int d, const Numerator& numerator, int m) {
  if (m < 0) throw std::invalid_argument("denominator power must be non-negative");
  OperatorExpr out(d);
  for (const auto& [mono, c] : numerator) out.add_term(-m, mono, c);
  return out;
}

R2Division divide_by_r2(int d, const XPoly& poly) {
  check_dim(d);
  R2Division out;
  XPoly work = poly;
  // Exponents compare lexicographically with x_1 most significant, so the
  // last entry always carries the largest power of x_1 = leading term of r^2.
  while (!work.empty()) {
    auto last = std::prev(work.end());
    if (last->first[0] < 2) break;
    const Exponents e = last->first;
    const ParamPoly c = last->second;
    work.erase(last);
    Exponents q = e;
    q[0] = static_cast<std::uint8_t>(q[0] - 2);
    accumulate(out.quotient, q, c);
    for (int j = 1; j < d; ++j) {
      Exponents f = q;
      f[j] = add_exp(f[j], 2);
      accumulate(work, f, -c);
    }
  }
  out.remainder = std::move(work);
  return out;
}

bool left_divisible_by_r2(int d, const Numerator& numerator) {
  std::map<std::pair<Exponents, CliffordWord>, XPoly> slices;
  for (const auto& [mono, c] : numerator) slices[{mono.p, mono.word}][mono.x] = c;
  return std::all_of(slices.begin(), slices.end(),
                     [d](const auto& kv) { return divide_by_r2(d, kv.second).remainder.empty(); });
}

OperatorExpr pseudoscalar_quotient(const OperatorExpr& a, const GaussianRational& c) {
  const int d = a.d();
  if (d % 2 == 0) throw std::domain_error("pseudoscalar quotient requires odd d");
  const CliffordWord omega = CliffordWord::from_bits((1U << d) - 1U);
  const int omega_sq = ((d * (d - 1) / 2) % 2 == 0) ? 1 : -1;
  OperatorExpr out(d);
  for (const auto& [key, coeff] : a.terms()) {
    if (key.mono.word.length() <= (d - 1) / 2) {
      out.add_term(key.rpow, key.mono, coeff);
      continue;
    }
    // w = omega * omega^-1 * w = c * omega_sq * (omega w)
    const SignedWord ow = word_mul(omega, key.mono.word, d);
    Monomial mono = key.mono;
    mono.word = ow.word;
    GaussianRational scale = c * GaussianRational(omega_sq * ow.sign);
    out.add_term(key.rpow, mono, coeff * scale);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

int rank(GenKind k) { return static_cast<int>(k); }

bool is_redex(const Letter& a, const Letter& b) {
  if (rank(a.kind) != rank(b.kind)) return rank(a.kind) > rank(b.kind);
  switch (a.kind) {
    case GenKind::RInv2: return false;
    case GenKind::X:
    case GenKind::P: return a.index > b.index;
    case GenKind::Gamma: return a.index >= b.index;
  }
  return false;
}

struct Word {
  ParamPoly coeff;
  std::vector<Letter> letters;
};

// Rewrites the redex at position j, pushing the resulting words.
void rewrite(const Word& w, std::size_t j, std::vector<Word>& out) {
  const Letter a = w.letters[j];
  const Letter b = w.letters[j + 1];
  auto splice = [&](std::vector<Letter> middle, const ParamPoly& c) {
    Word r;
    r.coeff = c;
    r.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(j));
    r.letters.insert(r.letters.end(), middle.begin(), middle.end());
    r.letters.insert(r.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(j + 2), w.letters.end());
    out.push_back(std::move(r));
  };
  if (a.kind == GenKind::P && b.kind == GenKind::RInv2) {
    // p_i r^-2 = r^-2 p_i + 2i x_i r^-4
    splice({b, a}, w.coeff);
    splice({Letter{GenKind::X, a.index}, b, b}, w.coeff * ParamPoly(GaussianRational(0, 2)));
    return;
  }
  if (a.kind == GenKind::P && b.kind == GenKind::X) {
    splice({b, a}, w.coeff);
    if (a.index == b.index) splice({}, w.coeff * ParamPoly(GaussianRational(0, -1)));
    return;
  }
  if (a.kind == GenKind::Gamma && b.kind == GenKind::Gamma) {
    if (a.index == b.index) splice({}, w.coeff);
    else splice({b, a}, -w.coeff);
    return;
  }
  // Everything else commutes.
  splice({b, a}, w.coeff);
}

}  // namespace

OperatorExpr normalize(int d, const std::vector<FormalProduct>& sum, RewriteOrder order, std::uint64_t seed) {
  check_dim(d);
  std::mt19937_64 rng(seed);
  std::vector<Word> work;
  for (const auto& fp : sum) {
    for (const auto& l : fp.letters)
      if (l.kind != GenKind::RInv2) check_index(l.index, d);
    work.push_back({fp.coeff, fp.letters});
  }
  std::map<int, Numerator> by_denominator;
  while (!work.empty()) {
    Word w = std::move(work.back());
    work.pop_back();
    if (w.coeff.is_zero()) continue;
    std::vector<std::size_t> redexes;
    for (std::size_t j = 0; j + 1 < w.letters.size(); ++j) {
      if (is_redex(w.letters[j], w.letters[j + 1])) {
        redexes.push_back(j);
        if (order == RewriteOrder::Leftmost) break;
      }
    }
    if (!redexes.empty()) {
      std::size_t pick = 0;
      if (order == RewriteOrder::Random) pick = std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng);
      rewrite(w, redexes[pick], work);
      continue;
    }
    // Normal word: r^-2 ... x ... p ... gamma (distinct, increasing).
    int m = 0;
    Monomial mono;
    std::uint32_t bits = 0;
    for (const auto& l : w.letters) {
      switch (l.kind) {
        case GenKind::RInv2: ++m; break;
        case GenKind::X: mono.x[l.index - 1] = add_exp(mono.x[l.index - 1], 1); break;
        case GenKind::P: mono.p[l.index - 1] = add_exp(mono.p[l.index - 1], 1); break;
        case GenKind::Gamma: bits |= 1U << (l.index - 1); break;
      }
    }
    mono.word = CliffordWord::from_bits(bits);
    accumulate(by_denominator[m], mono, w.coeff);
  }
  // Merge onto the single left denominator r^(-2M).
  const int big_m = by_denominator.empty() ? 0 : by_denominator.rbegin()->first;
  Numerator merged;
  for (const auto& [m, num] : by_denominator) {
    for (const auto& [mono, c] : num) {
      for (const auto& [e, k] : r2_power(d, big_m - m)) {
        Monomial shifted = mono;
        for (int j = 0; j < d; ++j) shifted.x[j] = add_exp(shifted.x[j], e[j]);
        accumulate(merged, shifted, c * GaussianRational(k));
      }
    }
  }
  return reduce_denominator(d, merged, big_m);
}

}  // namespace spinalg
