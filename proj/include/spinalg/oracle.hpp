#pragma once

// Function-application oracle. Operators act on exact spinor-valued test
// functions sum c * r^(2k) x^a e_s (k <= 0): x_i multiplies, p_i = -i d/dx_i
// differentiates, r^-2 lowers k and gamma_i acts through the concrete
// matrices of gamma_matrices(d). Nothing here uses the engine's product.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "spinalg/ast.hpp"
#include "spinalg/clifford.hpp"
#include "spinalg/weyl.hpp"

namespace spinalg {

struct FunctionKey {
  int k = 0;  // power of r^2, <= 0
  Exponents x{};
  int spinor = 0;  // 0-based
  friend auto operator<=>(const FunctionKey&, const FunctionKey&) = default;
};

class SpinorFunction {
 public:
  using TermMap = std::map<FunctionKey, ParamPoly>;

  explicit SpinorFunction(int d);

  int d() const { return d_; }
  int spinor_dim() const { return spinor_dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * r^(2k) x^a e_s for any k and a; reduces to canonical form
  /// (for k < 0 the x_1 exponent is at most 1, positive k expanded).
  void add(int k, const Exponents& a, int spinor, const ParamPoly& c);
  /// True iff the stored terms are in canonical form.
  bool is_canonical() const;

  /// Per-component rendering: "e1: 3*x1-rinv2^1*x2; e2: 0".
  std::string str() const;

  SpinorFunction& operator+=(const SpinorFunction& o);
  SpinorFunction& operator-=(const SpinorFunction& o);
  SpinorFunction& operator*=(const ParamPoly& c);
  friend bool operator==(const SpinorFunction&, const SpinorFunction&) = default;

 private:
  void add_canonical(const FunctionKey& key, const ParamPoly& c);
  int d_;
  int spinor_dim_;
  TermMap terms_;
};

SpinorFunction apply(const OperatorExpr& op, const SpinorFunction& f);
/// Applies an unevaluated expression factor by factor, expanding named
/// builders through their definitions.
SpinorFunction apply(const Ast& op, const SpinorFunction& f);

/// Deterministic pseudo-random test function: coefficients with real part
/// in -3..3 and imaginary part in -1..1, total x-degree <= max_degree,
/// r-power in min_k..0.
SpinorFunction random_function(int d, std::uint64_t seed, int max_degree = 4, int min_k = -2);

struct CrosscheckOptions {
  int trials = 20;
  std::uint64_t seed = 0;
  int max_degree = 4;
  int min_k = -2;
};

struct Witness {
  int trial = 0;
  SpinorFunction function;
  SpinorFunction image_a;
  SpinorFunction image_b;
};

struct CrosscheckResult {
  bool agree = true;
  int trials = 0;
  std::optional<Witness> witness;
};

/// Seed of trial t: a fixed mix of (seed, t), so results do not depend on the
/// order in which trials run.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

CrosscheckResult crosscheck(const OperatorExpr& a, const OperatorExpr& b, const CrosscheckOptions& options = {});
CrosscheckResult crosscheck(const Ast& a, const Ast& b, int d, const CrosscheckOptions& options = {});

}  // namespace spinalg
