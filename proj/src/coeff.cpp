#include "spinalg/coeff.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinalg {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const { return v_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------------------

GaussianRational GaussianRational::i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (im_.is_zero()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}
GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (norm.is_zero()) throw std::domain_error("division by zero");
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

namespace {
std::string imag_part(const Rational& im, bool with_sign) {
  std::string out;
  Rational mag = im.sign() < 0 ? -im : im;
  if (with_sign) out += im.sign() < 0 ? "-" : "+";
  else if (im.sign() < 0) out += "-";
  if (!mag.is_one()) out += mag.str();
  out += "i";
  return out;
}
}  // namespace

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return imag_part(im_, false);
  return re_.str() + imag_part(im_, true);
}

std::string GaussianRational::fixture_str() const {
  Rational mag = im_.sign() < 0 ? -im_ : im_;
  return re_.str() + (im_.sign() < 0 ? "-" : "+") + mag.str() + "i";
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }), s.end());
  if (s.empty()) throw std::invalid_argument("empty Gaussian rational literal");
  if (s.back() != 'i') return {Rational::parse(s), Rational(0)};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  Rational im;
  if (im_text.empty() || im_text == "+") im = Rational(1);
  else if (im_text == "-") im = Rational(-1);
  else im = Rational::parse(im_text);
  Rational re = re_text.empty() ? Rational(0) : Rational::parse(re_text);
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

// ---------------------------------------------------------------------------

namespace {
bool key_less(std::uint8_t a1, std::uint8_t e1, std::uint8_t a2, std::uint8_t e2) {
  return a1 != a2 ? a1 < a2 : e1 < e2;
}
}  // namespace

ParamPoly::ParamPoly(GaussianRational c) {
  if (!c.is_zero()) terms_.push_back({0, 0, std::move(c)});
}

ParamPoly ParamPoly::monomial(GaussianRational c, unsigned alpha_pow, unsigned e_pow) {
  if (alpha_pow > 255 || e_pow > 255) throw std::overflow_error("parameter exponent too large");
  ParamPoly p;
  if (!c.is_zero())
    p.terms_.push_back({static_cast<std::uint8_t>(alpha_pow), static_cast<std::uint8_t>(e_pow), std::move(c)});
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].alpha == 0 && terms_[0].energy == 0);
}

GaussianRational ParamPoly::constant() const {
  if (!terms_.empty() && terms_[0].alpha == 0 && terms_[0].energy == 0) return terms_[0].coeff;
  return {};
}

bool ParamPoly::depends_on_alpha() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.alpha > 0; });
}

bool ParamPoly::depends_on_energy() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.energy > 0; });
}

bool ParamPoly::is_canonical() const {
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].coeff.is_zero()) return false;
    if (k > 0 && !key_less(terms_[k - 1].alpha, terms_[k - 1].energy, terms_[k].alpha, terms_[k].energy))
      return false;
  }
  return true;
}

void ParamPoly::add_term(std::uint8_t a, std::uint8_t e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{a, e}, [](const Term& t, const auto& key) {
    return key_less(t.alpha, t.energy, key.first, key.second);
  });
  if (it != terms_.end() && it->alpha == a && it->energy == e) {
    it->coeff += c;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{a, e, c});
  }
}

ParamPoly ParamPoly::conj() const {
  ParamPoly out = *this;
  for (auto& t : out.terms_) t.coeff = t.coeff.conj();
  return out;
}

ParamPoly ParamPoly::substitute(const std::optional<GaussianRational>& alpha_val,
                                const std::optional<GaussianRational>& e_val) const {
  ParamPoly out;
  for (const auto& t : terms_) {
    GaussianRational c = t.coeff;
    std::uint8_t a = t.alpha;
    std::uint8_t e = t.energy;
    if (alpha_val) {
      for (unsigned k = 0; k < t.alpha; ++k) c *= *alpha_val;
      a = 0;
    }
    if (e_val) {
      for (unsigned k = 0; k < t.energy; ++k) c *= *e_val;
      e = 0;
    }
    out.add_term(a, e, c);
  }
  return out;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && key_less(a->alpha, a->energy, b->alpha, b->energy))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || key_less(b->alpha, b->energy, a->alpha, a->energy)) {
      merged.push_back(*b++);
    } else {
      GaussianRational c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back(Term{a->alpha, a->energy, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (b.is_constant()) return a * b.terms_[0].coeff;
  if (a.is_constant()) return b * a.terms_[0].coeff;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      const unsigned pa = x.alpha + y.alpha;
      const unsigned pe = x.energy + y.energy;
      if (pa > 255 || pe > 255) throw std::overflow_error("parameter exponent too large");
      out.add_term(static_cast<std::uint8_t>(pa), static_cast<std::uint8_t>(pe), x.coeff * y.coeff);
    }
  }
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly& ParamPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

namespace {
std::string param_monomial(unsigned a, unsigned e) {
  std::string out;
  auto append = [&out](const char* name, unsigned pw) {
    if (pw == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (pw > 1) out += "^" + std::to_string(pw);
  };
  append("alpha", a);
  append("E", e);
  return out;
}

std::string term_str(const GaussianRational& c, const std::string& mono) {
  if (mono.empty()) return c.str();
  if (c.is_one()) return mono;
  if (c == GaussianRational(-1)) return "-" + mono;
  if (c.re().is_zero() || c.im().is_zero()) return c.str() + "*" + mono;
  return "(" + c.str() + ")*" + mono;
}
}  // namespace

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string t = term_str(it->coeff, param_monomial(it->alpha, it->energy));
    const bool simple = it->coeff.re().is_zero() || it->coeff.im().is_zero();
    if (out.empty()) {
      out = t;
    } else if (!simple && t.front() != '(') {
      out += "+(" + t + ")";
    } else if (t.front() == '-') {
      out += t;
    } else {
      out += "+" + t;
    }
  }
  return out;
}

std::string ParamPoly::factor_str() const {
  if (terms_.size() <= 1) {
    if (terms_.empty()) return "0";
    const auto& c = terms_[0].coeff;
    if (c.re().is_zero() || c.im().is_zero()) return str();
  }
  return "(" + str() + ")";
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

ParamPoly poly_add(const ParamPoly& a, const ParamPoly& b) { return a + b; }
ParamPoly poly_mul(const ParamPoly& a, const ParamPoly& b) { return a * b; }
ParamPoly poly_conjugate(const ParamPoly& a) { return a.conj(); }
ParamPoly poly_substitute(const ParamPoly& a, const std::optional<GaussianRational>& alpha_val,
                          const std::optional<GaussianRational>& e_val) {
  return a.substitute(alpha_val, e_val);
}

}  // namespace spinalg
