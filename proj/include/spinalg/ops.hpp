#pragma once

// Named operators of the spin-extended so(d+1,1) construction at fixed d.
//
// Every builder has a formal definition (an Ast over generators and other
// builders). The engine evaluates definitions once per (d, name) and caches
// the canonical result; the oracle expands the same definitions recursively
// and never touches the cache.

#include <string>
#include <string_view>
#include <vector>

#include "spinalg/ast.hpp"
#include "spinalg/weyl.hpp"

namespace spinalg {

struct OperatorName {
  std::string tag;
  std::vector<int> indices;

  std::string str() const;
  friend auto operator<=>(const OperatorName&, const OperatorName&) = default;
};

/// Number of indices a builder takes, or -1 if the name is not a builder.
int builder_arity(std::string_view tag);
/// True for builders that only exist at d = 3 (Jvec, Lvec, Svec, XS, PS).
bool builder_is_d3_only(std::string_view tag);
/// All builder tags in a stable order.
const std::vector<std::string>& builder_tags();

/// Validates arity, indices and dimension gating; throws invalid_argument,
/// out_of_range or domain_error respectively.
void check_builder(int d, const OperatorName& name);

/// The defining formula of a builder.
Ast definition(int d, const OperatorName& name);

/// Canonical value of a builder (cached, thread-safe).
const OperatorExpr& build(int d, const OperatorName& name);
inline const OperatorExpr& build(int d, std::string tag, std::vector<int> indices = {}) {
  return build(d, OperatorName{std::move(tag), std::move(indices)});
}

// Typed entry points; `which` must belong to the listed family.
OperatorExpr build_schrodinger(int d, std::string_view which);                                     // H, K
OperatorExpr build_so_generator(int d, std::string_view which, const std::vector<int>& indices);   // L S J A M T
OperatorExpr build_gamma_ops(int d, std::string_view which, const std::vector<int>& indices = {});  // G0 Gd1 G
OperatorExpr build_sturm_invariant(int d, std::string_view which, int i);                          // B B1 B2
OperatorExpr build_lrl(int d, int i);
OperatorExpr build_contraction(int d, std::string_view which);  // J2 L2 S2 LS XP GX GP P2 R2 XS PS Q2
OperatorExpr build_d3_vector(int d, std::string_view which, int i);  // Jvec Lvec Svec

}  // namespace spinalg
