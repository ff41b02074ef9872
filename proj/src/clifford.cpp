#include "spinalg/clifford.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spinalg {

namespace {
void check_index(int i, int d) {
  if (d < 1 || d > kMaxDim) throw std::out_of_range("dimension " + std::to_string(d) + " out of range");
  if (i < 1 || i > d)
    throw std::out_of_range("gamma index " + std::to_string(i) + " out of range 1.." + std::to_string(d));
}
}  // namespace

CliffordWord::CliffordWord(const std::vector<int>& indices, int d) {
  int prev = 0;
  for (int i : indices) {
    check_index(i, d);
    if (i <= prev) throw std::invalid_argument("Clifford word indices must be strictly increasing");
    bits_ |= 1U << (i - 1);
    prev = i;
  }
}

CliffordWord CliffordWord::generator(int i, int d) {
  check_index(i, d);
  return from_bits(1U << (i - 1));
}

std::vector<int> CliffordWord::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

int CliffordWord::length() const { return std::popcount(bits_); }

int CliffordWord::max_index() const { return 32 - std::countl_zero(bits_); }

std::string CliffordWord::str() const {
  if (bits_ == 0) return "1";
  std::string out;
  for (int i : indices()) {
    if (!out.empty()) out += "*";
    out += "g" + std::to_string(i);
  }
  return out;
}

SignedWord word_mul(const CliffordWord& w1, const CliffordWord& w2, int d) {
  if (w1.max_index() > d || w2.max_index() > d)
    throw std::out_of_range("Clifford word index exceeds dimension " + std::to_string(d));
  // Each generator of w2 moves left past every larger generator of w1.
  int swaps = 0;
  std::uint32_t rest = w2.bits();
  while (rest != 0) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    const std::uint32_t above = j >= 31 ? 0U : ~((2U << j) - 1U);
    swaps += std::popcount(w1.bits() & above);
  }
  return {CliffordWord::from_bits(w1.bits() ^ w2.bits()), (swaps % 2 == 0) ? 1 : -1};
}

SignedWord word_adjoint(const CliffordWord& w) {
  const int n = w.length();
  return {w, ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1};
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix Matrix::adjoint() const {
  Matrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

Matrix Matrix::blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  const std::size_t n = a.size();
  Matrix out(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      out(r, k) = a(r, k);
      out(r, k + n) = b(r, k);
      out(r + n, k) = c(r, k);
      out(r + n, k + n) = d(r, k);
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const GaussianRational& c) {
  for (auto& v : a_) v *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  Matrix out(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const auto& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < a.n_; ++c)
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
    }
  return out;
}

Matrix pauli(int k) {
  Matrix m(2);
  const GaussianRational i = GaussianRational::i();
  switch (k) {
    case 1: m(0, 1) = 1; m(1, 0) = 1; break;
    case 2: m(0, 1) = -i; m(1, 0) = i; break;
    case 3: m(0, 0) = 1; m(1, 1) = -1; break;
    default: throw std::out_of_range("Pauli index must be 1..3");
  }
  return m;
}

Matrix GammaRep::word_matrix(const CliffordWord& w) const {
  Matrix m = Matrix::identity(spinor_dim());
  for (int i : w.indices()) m = m * gamma(i);
  return m;
}

namespace {

// Odd d >= 5: gamma_i -> [[0, i g_i], [-i g_i, 0]] for the d-2 inherited
// generators, then [[0, I], [I, 0]] and [[I, 0], [0, -I]].
GammaRep double_odd(const GammaRep& base) {
  const std::size_t n = base.spinor_dim();
  const Matrix zero(n);
  const Matrix one = Matrix::identity(n);
  const GaussianRational i = GaussianRational::i();
  GammaRep out;
  out.d = base.d + 2;
  for (const auto& g : base.matrices) out.matrices.push_back(Matrix::blocks(zero, i * g, -i * g, zero));
  out.matrices.push_back(Matrix::blocks(zero, one, one, zero));
  out.matrices.push_back(Matrix::blocks(one, zero, zero, one * GaussianRational(-1)));
  return out;
}

GammaRep odd_rep(int d) {
  if (d == 3) return GammaRep{3, {pauli(1), pauli(2), pauli(3)}};
  return double_odd(odd_rep(d - 2));
}

}  // namespace

GammaRep gamma_matrices(int d) {
  if (d < 2 || d > kMaxGammaDim)
    throw std::out_of_range("gamma_matrices: d must lie in 2.." + std::to_string(kMaxGammaDim));
  GammaRep rep = odd_rep(d % 2 == 1 ? d : d + 1);
  rep.matrices.resize(static_cast<std::size_t>(d));
  rep.d = d;
  if (!satisfies_clifford(rep)) throw std::logic_error("gamma representation violates the Clifford relation");
  return rep;
}

bool satisfies_clifford(const GammaRep& rep) {
  const Matrix one = Matrix::identity(rep.spinor_dim());
  for (int i = 1; i <= rep.d; ++i)
    for (int j = i; j <= rep.d; ++j) {
      Matrix ac = rep.gamma(i) * rep.gamma(j) + rep.gamma(j) * rep.gamma(i);
      if (i == j) ac -= one * GaussianRational(2);
      if (!ac.is_zero()) return false;
    }
  return true;
}

Matrix spin_matrix(int d, int i, int j) {
  check_index(i, d);
  check_index(j, d);
  const GammaRep rep = gamma_matrices(d);
  Matrix comm = rep.gamma(i) * rep.gamma(j) - rep.gamma(j) * rep.gamma(i);
  return comm * GaussianRational(Rational(0), Rational(-1, 4));
}

GaussianRational pseudoscalar_value(const GammaRep& rep) {
  if (rep.d % 2 == 0) throw std::domain_error("pseudoscalar is a multiple of the identity only for odd d");
  Matrix w = Matrix::identity(rep.spinor_dim());
  for (int i = 1; i <= rep.d; ++i) w = w * rep.gamma(i);
  const GaussianRational c = w(0, 0);
  if (!(w - Matrix::identity(rep.spinor_dim()) * c).is_zero())
    throw std::logic_error("pseudoscalar is not central in this representation");
  return c;
}

void write_matrix_block(std::ostream& os, const std::string& header, const Matrix& m) {
  os << header << '\n';
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (c) os << ' ';
      os << m(r, c).fixture_str();
    }
    os << '\n';
  }
}

std::string fixture_text(int d) {
  const GammaRep rep = gamma_matrices(d);
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= d; ++i) {
    if (!first) os << '\n';
    first = false;
    write_matrix_block(os, "gamma " + std::to_string(d) + " " + std::to_string(i), rep.gamma(i));
  }
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      os << '\n';
      write_matrix_block(os, "spin " + std::to_string(d) + " " + std::to_string(i) + " " + std::to_string(j),
                         spin_matrix(d, i, j));
    }
  return os.str();
}

std::vector<FixtureBlock> parse_fixture(std::istream& in) {
  std::vector<FixtureBlock> out;
  std::string line;
  std::vector<std::vector<GaussianRational>> rows;
  std::string header;
  auto flush = [&]() {
    if (header.empty()) return;
    Matrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != rows.size()) throw std::runtime_error("fixture block '" + header + "' is not square");
      for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
    }
    out.push_back({header, std::move(m)});
    header.clear();
    rows.clear();
  };
  while (std::getline(in, line)) {
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.rfind("gamma", 0) == 0 || line.rfind("spin", 0) == 0) {
      flush();
      header = line;
      continue;
    }
    if (header.empty()) throw std::runtime_error("fixture row outside of a block: " + line);
    std::istringstream ls(line);
    std::vector<GaussianRational> row;
    std::string tok;
    while (ls >> tok) row.push_back(GaussianRational::parse(tok));
    rows.push_back(std::move(row));
  }
  flush();
  return out;
}

}  // namespace spinalg
