#pragma once

// Clifford words over Cl_d and the concrete gamma / spin matrix
// representations used by the fixtures and the function-application oracle.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "spinalg/coeff.hpp"

namespace spinalg {

/// Largest dimension any module accepts.
inline constexpr int kMaxDim = 10;

/// Reduced product of distinct gamma generators, indices strictly increasing.
/// Stored as a bitmask: bit (i-1) set <=> gamma_i present.
class CliffordWord {
 public:
  CliffordWord() = default;
  /// Validates strict increase and range 1..d.
  CliffordWord(const std::vector<int>& indices, int d);
  static CliffordWord from_bits(std::uint32_t bits) {
    CliffordWord w;
    w.bits_ = bits;
    return w;
  }
  static CliffordWord generator(int i, int d);

  std::uint32_t bits() const { return bits_; }
  std::vector<int> indices() const;
  int length() const;
  bool is_identity() const { return bits_ == 0; }
  bool contains(int i) const { return (bits_ >> (i - 1)) & 1U; }
  /// Highest index present (0 for the identity).
  int max_index() const;
  /// "g1*g3", or "1" for the identity.
  std::string str() const;

  friend auto operator<=>(const CliffordWord&, const CliffordWord&) = default;

 private:
  std::uint32_t bits_ = 0;
};

struct SignedWord {
  CliffordWord word;
  int sign = 1;
  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

/// w1*w2 reduced with gamma_i gamma_j = -gamma_j gamma_i (i != j), gamma_i^2 = 1.
SignedWord word_mul(const CliffordWord& w1, const CliffordWord& w2, int d);
/// Reversal: sign (-1)^(n(n-1)/2) for a word of length n, word unchanged.
SignedWord word_adjoint(const CliffordWord& w);

/// Dense square matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  bool is_zero() const;
  Matrix adjoint() const;
  /// 2x2 block matrix [[a, b], [c, d]] from equally sized blocks.
  static Matrix blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const GaussianRational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const GaussianRational& c) { return a *= c; }
  friend Matrix operator*(const GaussianRational& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<GaussianRational> a_;
};

/// The three Pauli matrices, index 1..3.
Matrix pauli(int k);

/// Concrete representation of gamma_1..gamma_d, size 2^floor(d/2).
struct GammaRep {
  int d = 0;
  std::vector<Matrix> matrices;  // matrices[i-1] = gamma_i

  const Matrix& gamma(int i) const { return matrices.at(static_cast<std::size_t>(i - 1)); }
  std::size_t spinor_dim() const { return matrices.empty() ? 0 : matrices.front().size(); }
  /// Matrix of a reduced word (product in increasing index order).
  Matrix word_matrix(const CliffordWord& w) const;
};

/// Largest d accepted by gamma_matrices().
inline constexpr int kMaxGammaDim = kMaxDim;

/// d = 2, 3: Pauli matrices; d = 4, 5: the standard 4x4 blocks; larger odd d
/// double the representation two below, larger even d take the first d
/// matrices of the odd representation one above. Every result is checked
/// against the Clifford relation before it is returned.
GammaRep gamma_matrices(int d);

/// S_ij = -(i/4)(gamma_i gamma_j - gamma_j gamma_i) in gamma_matrices(d).
Matrix spin_matrix(int d, int i, int j);

/// True iff gamma_i gamma_j + gamma_j gamma_i = 2 delta_ij I for all pairs.
bool satisfies_clifford(const GammaRep& rep);

/// Scalar c with gamma_1 ... gamma_d = c I; only defined for odd d (for even d
/// the product is not a multiple of the identity and this throws).
GaussianRational pseudoscalar_value(const GammaRep& rep);

/// Text fixture format: blocks "gamma d i" / "spin d i j" followed by rows of
/// space-separated "a+bi" entries, blocks separated by a blank line.
std::string fixture_text(int d);
void write_matrix_block(std::ostream& os, const std::string& header, const Matrix& m);

struct FixtureBlock {
  std::string header;
  Matrix matrix;
};
std::vector<FixtureBlock> parse_fixture(std::istream& in);

}  // namespace spinalg
