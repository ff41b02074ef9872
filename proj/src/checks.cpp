// The identity registry. Formulas are transcribed as stated; nothing here is
// simplified with the help of the engine.

#include <algorithm>
#include <functional>
#include <string>

#include "spinalg/verify.hpp"

namespace spinalg {

namespace {

using IdList = std::vector<Identity>;

Ast N(const std::string& tag, std::vector<int> idx = {}) { return ast::named(tag, std::move(idx)); }
Ast x(int i) { return ast::x(i); }
Ast p(int i) { return ast::p(i); }
Ast g(int i) { return ast::g(i); }
Ast rinv2() { return ast::rinv2(); }
Ast k(const ParamPoly& c) { return ast::scalar(c); }
Ast zero() { return ast::zero(); }

ParamPoly q(long n, long m = 1) { return ParamPoly(Rational(n, m)); }
ParamPoly iq(long n, long m = 1) { return ParamPoly(GaussianRational(Rational(0), Rational(n, m))); }
const ParamPoly kE = ParamPoly::energy();
const ParamPoly kAlpha = ParamPoly::alpha();

ParamPoly delta(int i, int j) { return ParamPoly(i == j ? 1 : 0); }

// c * a, dropping the term when c vanishes.
Ast scaled(const ParamPoly& c, const Ast& a) { return c.is_zero() ? zero() : c * a; }

Ast sum_i(int d, const std::function<Ast(int)>& f) {
  std::vector<std::pair<ParamPoly, Ast>> terms;
  for (int i = 1; i <= d; ++i) terms.emplace_back(1, f(i));
  return ast::sum(std::move(terms));
}

Ast sum_ij(int d, const std::function<Ast(int, int)>& f) {
  std::vector<std::pair<ParamPoly, Ast>> terms;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) terms.emplace_back(1, f(i, j));
  return ast::sum(std::move(terms));
}

std::string lbl(std::initializer_list<std::pair<const char*, int>> idx) {
  std::string out;
  for (const auto& [name, v] : idx) out += (out.empty() ? "" : ",") + std::string(name) + "=" + std::to_string(v);
  return out;
}

// Frequently used composite expressions.
Ast P2() { return N("P2"); }
Ast R2() { return N("R2"); }
Ast XP() { return N("XP"); }
Ast GX() { return N("GX"); }
Ast GP() { return N("GP"); }
Ast LS() { return N("LS"); }
Ast T() { return N("T"); }
Ast H() { return N("H"); }
Ast K() { return N("K"); }
Ast J2() { return N("J2"); }
Ast En() { return k(kE); }
Ast HmE() { return H() - En(); }
Ast GXr() { return GX() * rinv2(); }  // (gamma.x)/r^2
Ast XP2() { return XP() * XP(); }

// so(d) structure: i(d_ik X_jl + d_il X_kj + d_jk X_li + d_jl X_ik)
Ast so_rhs(const std::string& X, int i, int j, int kk, int l) {
  return iq(1) * (scaled(delta(i, kk), N(X, {j, l})) + scaled(delta(i, l), N(X, {kk, j})) +
                  scaled(delta(j, kk), N(X, {l, i})) + scaled(delta(j, l), N(X, {i, kk})));
}

IdList so_family(int d, const std::string& X) {
  IdList out;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int kk = 1; kk <= d; ++kk)
        for (int l = 1; l <= d; ++l)
          out.push_back({lbl({{"i", i}, {"j", j}, {"k", kk}, {"l", l}}), ast::comm(N(X, {i, j}), N(X, {kk, l})),
                         so_rhs(X, i, j, kk, l)});
  return out;
}

// [J_ij, V_k] = i(d_ik V_j - d_jk V_i)
IdList vector_family(int d, const std::string& V) {
  IdList out;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int kk = 1; kk <= d; ++kk)
        out.push_back({lbl({{"i", i}, {"j", j}, {"k", kk}}), ast::comm(N("J", {i, j}), N(V, {kk})),
                       iq(1) * (scaled(delta(i, kk), N(V, {j})) - scaled(delta(j, kk), N(V, {i})))});
  return out;
}

template <typename F>
IdList per_i(int d, F f) {
  IdList out;
  for (int i = 1; i <= d; ++i) out.push_back({lbl({{"i", i}}), f(i).first, f(i).second});
  return out;
}

template <typename F>
IdList per_ij(int d, F f) {
  IdList out;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      auto [l, r] = f(i, j);
      out.push_back({lbl({{"i", i}, {"j", j}}), l, r});
    }
  return out;
}

// Generator L_ab of so(d+1,1): J, A (b = d+1), M (b = d+2), T (d+1, d+2).
Ast metric_generator(int d, int a, int b) {
  if (a == b) return zero();
  if (a > b) return -metric_generator(d, b, a);
  if (b <= d) return N("J", {a, b});
  if (b == d + 1) return N("A", {a});
  if (a <= d) return N("M", {a});
  return T();
}

ParamPoly metric(int d, int a, int b) {
  if (a != b) return ParamPoly();
  return ParamPoly(a == d + 2 ? -1 : 1);
}

// x_i p^2/2 - T p_i + S_ij p_j: the common part of A_i, M_i and B_i.
Ast w_part(int i) { return q(1, 2) * (x(i) * P2()) - T() * p(i) + N("B2", {i}); }

// [R2 P2 - 2 XP^2 + 2i(d-1) XP + LS + d(d-1)/2 + 2E R2]: the bracket of the
// x(H-E).B + B.x(H-E) expansion.
Ast c7_bracket(int d) {
  return R2() * P2() - q(2) * XP2() + iq(2 * (d - 1)) * XP() + LS() + k(q(d * (d - 1), 2)) + (q(2) * kE) * R2();
}

Check make(std::string id, std::string suite, Tier tier, std::string ref, std::string description,
           std::function<IdList(int)> build) {
  Check c;
  c.id = std::move(id);
  c.suite = std::move(suite);
  c.tier = tier;
  c.paper_ref = std::move(ref);
  c.description = std::move(description);
  c.build = std::move(build);
  return c;
}

constexpr Tier kCore = Tier::Core;
constexpr Tier kTrans = Tier::Transcription;

std::vector<Check> core_checks() {
  std::vector<Check> v;
  v.push_back(make("GAMMA-CLIFF", "core", kCore, "Clifford relations gamma_i gamma_j + gamma_j gamma_i = 2 delta_ij",
                   "anticommutators of all generator pairs", [](int d) {
                     return per_ij(d, [](int i, int j) {
                       return std::make_pair(ast::anti(g(i), g(j)), k(q(i == j ? 2 : 0)));
                     });
                   }));
  v.push_back(make("S-SO(D)", "core", kCore, "spin matrices S_ij satisfy the so(d) commutation relations",
                   "[S_ij, S_kl] for all index tuples", [](int d) { return so_family(d, "S"); }));
  v.push_back(make("GX-SQUARE", "core", kCore, "(gamma.x)^2 = r^2", "square of gamma.x", [](int) {
    return IdList{{"", GX() * GX(), R2()}};
  }));
  v.push_back(make("K-H-REL", "core", kCore, "relations between the Sturm operator K and the Hamiltonian H",
                   "K = (gamma.x)(H-E) - alpha and H = (gamma.x) r^-2 (K+alpha) + E", [](int) {
                     return IdList{{"K", K(), GX() * HmE() - k(kAlpha)},
                                   {"H", H(), GXr() * (K() + k(kAlpha)) + En()}};
                   }));
  v.push_back(make("SO-COM-JJ", "core", kCore, "so(d+1,1) relations: [J_ij, J_kl]", "all index tuples",
                   [](int d) { return so_family(d, "J"); }));
  v.push_back(make("SO-COM-JA", "core", kCore, "so(d+1,1) relations: [J_ij, A_k] = i(d_ik A_j - d_jk A_i)",
                   "all index tuples", [](int d) { return vector_family(d, "A"); }));
  v.push_back(make("SO-COM-JM", "core", kCore, "so(d+1,1) relations: [J_ij, M_k] = i(d_ik M_j - d_jk M_i)",
                   "all index tuples", [](int d) { return vector_family(d, "M"); }));
  v.push_back(make("SO-COM-JT", "core", kCore, "so(d+1,1) relations: [J_ij, T] = 0", "all index pairs", [](int d) {
    return per_ij(d, [](int i, int j) { return std::make_pair(ast::comm(N("J", {i, j}), T()), zero()); });
  }));
  v.push_back(make("SO-COM-AA", "core", kCore, "so(d+1,1) relations: [A_i, A_j] = i J_ij", "all index pairs",
                   [](int d) {
                     return per_ij(d, [](int i, int j) {
                       return std::make_pair(ast::comm(N("A", {i}), N("A", {j})), iq(1) * N("J", {i, j}));
                     });
                   }));
  v.push_back(make("SO-COM-MM", "core", kCore, "so(d+1,1) relations: [M_i, M_j] = -i J_ij", "all index pairs",
                   [](int d) {
                     return per_ij(d, [](int i, int j) {
                       return std::make_pair(ast::comm(N("M", {i}), N("M", {j})), iq(-1) * N("J", {i, j}));
                     });
                   }));
  v.push_back(make("SO-COM-AM", "core", kCore, "so(d+1,1) relations: [A_i, M_j] = i delta_ij T", "all index pairs",
                   [](int d) {
                     return per_ij(d, [](int i, int j) {
                       return std::make_pair(ast::comm(N("A", {i}), N("M", {j})), scaled(iq(1) * delta(i, j), T()));
                     });
                   }));
  v.push_back(make("SO-COM-AT", "core", kCore, "so(d+1,1) relations: [A_i, T] = -i M_i", "all indices", [](int d) {
    return per_i(d, [](int i) { return std::make_pair(ast::comm(N("A", {i}), T()), iq(-1) * N("M", {i})); });
  }));
  v.push_back(make("SO-COM-MT", "core", kCore, "so(d+1,1) relations: [M_i, T] = -i A_i", "all indices", [](int d) {
    return per_i(d, [](int i) { return std::make_pair(ast::comm(N("M", {i}), T()), iq(-1) * N("A", {i})); });
  }));
  v.push_back(make("SO21-METRIC", "core", kCore,
                   "so(d+1,1) in metric form [L_ab, L_cd] = i(g_ac L_bd + g_ad L_cb + g_bc L_da + g_bd L_ac)",
                   "J, A, M, T relabelled as L_ab with g = diag(1,...,1,-1); all quadruples a<b, c<d", [](int d) {
                     IdList out;
                     const int n = d + 2;
                     auto L = [d](int a, int b) { return metric_generator(d, a, b); };
                     for (int a = 1; a <= n; ++a)
                       for (int b = a + 1; b <= n; ++b)
                         for (int c = 1; c <= n; ++c)
                           for (int e = c + 1; e <= n; ++e) {
                             Ast rhs = iq(1) * (scaled(metric(d, a, c), L(b, e)) + scaled(metric(d, a, e), L(c, b)) +
                                                scaled(metric(d, b, c), L(e, a)) + scaled(metric(d, b, e), L(a, c)));
                             out.push_back({lbl({{"a", a}, {"b", b}, {"c", c}, {"d", e}}), ast::comm(L(a, b), L(c, e)),
                                            rhs});
                           }
                     return out;
                   }));
  v.push_back(make("CASIMIR-Q2", "core", kCore, "second-order Casimir Q2 = -(d-1)(d+2)/8",
                   "Q2 = J^2 + A^2 - M^2 - T^2 built from its definition", [](int d) {
                     return IdList{{"", N("Q2"), k(q(-(d - 1) * (d + 2), 8))}};
                   }));
  v.push_back(make("SO-GAMMA-JGK", "core", kCore, "action on Gamma operators: [J_ij, Gamma_k] = i(d_ik Gamma_j - d_jk Gamma_i)",
                   "all index tuples", [](int d) { return vector_family(d, "G"); }));
  v.push_back(make("SO-GAMMA-AGD1", "core", kCore, "action on Gamma operators: [A_i, Gamma_{d+1}] = -i Gamma_i",
                   "all indices", [](int d) {
                     return per_i(d, [](int i) {
                       return std::make_pair(ast::comm(N("A", {i}), N("Gd1")), iq(-1) * N("G", {i}));
                     });
                   }));
  v.push_back(make("SO-GAMMA-MG0", "core", kCore, "action on Gamma operators: -[M_i, Gamma_0] = -i Gamma_i",
                   "all indices", [](int d) {
                     return per_i(d, [](int i) {
                       return std::make_pair(-ast::comm(N("M", {i}), N("G0")), iq(-1) * N("G", {i}));
                     });
                   }));
  v.push_back(make("SO-GAMMA-TG0", "core", kCore, "action on Gamma operators: [T, Gamma_0] = i Gamma_{d+1}", "",
                   [](int) { return IdList{{"", ast::comm(T(), N("G0")), iq(1) * N("Gd1")}}; }));
  v.push_back(make("SO-GAMMA-TGD1", "core", kCore, "action on Gamma operators: [T, Gamma_{d+1}] = i Gamma_0", "",
                   [](int) { return IdList{{"", ast::comm(T(), N("Gd1")), iq(1) * N("G0")}}; }));
  v.push_back(make("SO-GAMMA-ZERO-J", "core", kCore, "action on Gamma operators: [J_ij, Gamma_0] = [J_ij, Gamma_{d+1}] = 0",
                   "all index pairs", [](int d) {
                     IdList out;
                     for (int i = 1; i <= d; ++i)
                       for (int j = 1; j <= d; ++j) {
                         out.push_back({lbl({{"i", i}, {"j", j}}) + ",G0", ast::comm(N("J", {i, j}), N("G0")), zero()});
                         out.push_back({lbl({{"i", i}, {"j", j}}) + ",Gd1", ast::comm(N("J", {i, j}), N("Gd1")), zero()});
                       }
                     return out;
                   }));
  v.push_back(make("SO-GAMMA-ZERO-AMT", "core", kCore,
                   "action on Gamma operators: [A_i, Gamma_0] = [M_i, Gamma_{d+1}] = [T, Gamma_i] = 0", "all indices",
                   [](int d) {
                     IdList out;
                     for (int i = 1; i <= d; ++i) {
                       out.push_back({lbl({{"i", i}}) + ",A", ast::comm(N("A", {i}), N("G0")), zero()});
                       out.push_back({lbl({{"i", i}}) + ",M", ast::comm(N("M", {i}), N("Gd1")), zero()});
                       out.push_back({lbl({{"i", i}}) + ",T", ast::comm(T(), N("G", {i})), zero()});
                     }
                     return out;
                   }));
  v.push_back(make("NONCLOSE-G0GD1", "core", kTrans, "Gamma commutators leave the algebra: [Gamma_0, Gamma_{d+1}]",
                   "[G0, Gd1] = i(T + i(d-1)/2 + i L_ij S_ij)", [](int d) {
                     return IdList{{"", ast::comm(N("G0"), N("Gd1")), iq(1) * (T() + k(iq(d - 1, 2)) + iq(1) * LS())}};
                   }));
  auto gi_g0 = [](const std::string& other, const std::string& gen) {
    return [other, gen](int d) {
      return per_i(d, [&](int i) {
        Ast rhs = iq(-1) * N(gen, {i}) - sum_i(d, [i](int j) { return N("S", {i, j}) * x(j); }) * (P2() + ast::one()) -
                  (k(q(d - 1, 2)) + LS()) * p(i) + iq(1) * N("B2", {i});
        return std::make_pair(ast::comm(N("G", {i}), N(other)), rhs);
      });
    };
  };
  v.push_back(make("NONCLOSE-GIG0", "core", kTrans, "Gamma commutators leave the algebra: [Gamma_i, Gamma_0]",
                   "[G_i, G0] = -i M_i - S_ij x_j (p^2+1) - ((d-1)/2 + L_jk S_jk) p_i + i S_ij p_j", gi_g0("G0", "M")));
  v.push_back(make("NONCLOSE-GIGD1", "core", kTrans, "Gamma commutators leave the algebra: [Gamma_i, Gamma_{d+1}]",
                   "[G_i, Gd1] = -i A_i - S_ij x_j (p^2+1) - ((d-1)/2 + L_jk S_jk) p_i + i S_ij p_j",
                   gi_g0("Gd1", "A")));
  v.push_back(make("NONCLOSE-GIGJ", "core", kTrans, "Gamma commutators leave the algebra: [Gamma_i, Gamma_j]",
                   "[G_i, G_j] = -i J_ij + i S_ij - 2 x_k (S_ik p_j - S_jk p_i)", [](int d) {
                     return per_ij(d, [d](int i, int j) {
                       Ast rhs = iq(-1) * N("J", {i, j}) + iq(1) * N("S", {i, j}) -
                                 q(2) * sum_i(d, [i, j](int kk) {
                                   return x(kk) * (N("S", {i, kk}) * p(j) - N("S", {j, kk}) * p(i));
                                 });
                       return std::make_pair(ast::comm(N("G", {i}), N("G", {j})), rhs);
                     });
                   }));
  v.push_back(make("REL-GXGI", "core", kCore, "auxiliary relation (gamma.x) gamma_i = x_i - 2i S_ij x_j", "all indices",
                   [](int d) {
                     return per_i(d, [d](int i) {
                       return std::make_pair(GX() * g(i),
                                             x(i) - iq(2) * sum_i(d, [i](int j) { return N("S", {i, j}) * x(j); }));
                     });
                   }));
  v.push_back(make("REL-GXGP", "core", kCore, "auxiliary relation (gamma.x)(gamma.p) = x.p + i L_ij S_ij", "",
                   [](int) { return IdList{{"", GX() * GP(), XP() + iq(1) * LS()}}; }));
  v.push_back(make("CAS-GAMMA", "core", kCore, "Gamma_0^2 - Gamma_{d+1}^2 - T^2 = J^2 + (d-1)(d-2)/8", "", [](int d) {
    return IdList{{"", N("G0") * N("G0") - N("Gd1") * N("Gd1") - T() * T(), J2() + k(q((d - 1) * (d - 2), 8))}};
  }));
  return v;
}

std::vector<Check> sturm_checks() {
  std::vector<Check> v;
  v.push_back(make("K-DECOMP", "sturm", kCore, "K as a linear combination of Gamma_0 and Gamma_{d+1}",
                   "K = (1-2E)/2 Gamma_0 + (1+2E)/2 Gamma_{d+1}", [](int) {
                     return IdList{{"", K(), (q(1, 2) - kE) * N("G0") + (q(1, 2) + kE) * N("Gd1")}};
                   }));
  v.push_back(make("STURM-INV", "sturm", kCore, "integrals of motion in Sturm representation: [J_ij, K] = [B_i, K] = 0",
                   "all indices", [](int d) {
                     IdList out;
                     for (int i = 1; i <= d; ++i)
                       for (int j = 1; j <= d; ++j)
                         out.push_back({"J," + lbl({{"i", i}, {"j", j}}), ast::comm(N("J", {i, j}), K()), zero()});
                     for (int i = 1; i <= d; ++i)
                       out.push_back({"B," + lbl({{"i", i}}), ast::comm(N("B", {i}), K()), zero()});
                     return out;
                   }));
  v.push_back(make("B-EXPLICIT", "sturm", kCore, "explicit form of B_i versus its definition from A_i and M_i",
                   "B_i = ((1-2E) A_i + (1+2E) M_i)/2", [](int d) {
                     return per_i(d, [](int i) {
                       return std::make_pair(N("B", {i}), (q(1, 2) - kE) * N("A", {i}) + (q(1, 2) + kE) * N("M", {i}));
                     });
                   }));
  v.push_back(make("JB-ALG", "sturm", kCore, "algebra of the Sturm integrals of motion J_ij and B_i",
                   "[J,J] so(d) relations, [J_ij, B_k] = i(d_ik B_j - d_jk B_i), [B_i, B_j] = -2i E J_ij", [](int d) {
                     IdList out = so_family(d, "J");
                     for (auto& id : out) id.label = "JJ," + id.label;
                     for (auto id : vector_family(d, "B")) out.push_back({"JB," + id.label, id.lhs, id.rhs});
                     for (int i = 1; i <= d; ++i)
                       for (int j = 1; j <= d; ++j)
                         out.push_back({"BB," + lbl({{"i", i}, {"j", j}}), ast::comm(N("B", {i}), N("B", {j})),
                                        (iq(-2) * kE) * N("J", {i, j})});
                     return out;
                   }));
  v.push_back(make("B1-SQUARE", "sturm", kCore, "square of the spin-independent part B^(1)",
                   "(B1)^2 = (1/4){r^2 p^4 - 2i T p^2 + 4E[r^2 p^2 - 2(x.p)^2 + i(2d-3) x.p + d(d-1)/2] + 4E^2 r^2}",
                   [](int d) {
                     Ast lhs = sum_i(d, [](int i) { return N("B1", {i}) * N("B1", {i}); });
                     Ast bracket = R2() * P2() - q(2) * XP2() + iq(2 * d - 3) * XP() + k(q(d * (d - 1), 2));
                     Ast rhs = q(1, 4) * (R2() * P2() * P2() - iq(2) * (T() * P2()) + (q(4) * kE) * bracket +
                                          (q(4) * kE * kE) * R2());
                     return IdList{{"", lhs, rhs}};
                   }));
  v.push_back(make("B-CROSS", "sturm", kCore, "cross terms B^(1).B^(2) + B^(2).B^(1)",
                   "B1.B2 + B2.B1 = (1/2) L_ij S_ij (p^2 + 2E)", [](int d) {
                     Ast lhs = sum_i(d, [](int i) { return N("B1", {i}) * N("B2", {i}) + N("B2", {i}) * N("B1", {i}); });
                     return IdList{{"", lhs, q(1, 2) * (LS() * (P2() + k(q(2) * kE)))}};
                   }));
  v.push_back(make("B2-SQUARE", "sturm", kCore, "square of the spin-dependent part B^(2)",
                   "(B2)^2 = S_ij S_ik p_j p_k = (1/2){S_ij, S_ik} p_j p_k = (d-1) p^2/4", [](int d) {
                     Ast lhs = sum_i(d, [](int i) { return N("B2", {i}) * N("B2", {i}); });
                     Ast ssp = sum_i(d, [d](int i) {
                       return sum_ij(d, [i](int j, int kk) { return N("S", {i, j}) * N("S", {i, kk}) * p(j) * p(kk); });
                     });
                     Ast anti = q(1, 2) * sum_i(d, [d](int i) {
                       return sum_ij(d, [i](int j, int kk) {
                         return ast::anti(N("S", {i, j}), N("S", {i, kk})) * p(j) * p(kk);
                       });
                     });
                     Ast value = q(d - 1, 4) * P2();
                     return IdList{{"contraction", lhs, ssp}, {"anticommutator", ssp, anti}, {"value", anti, value}};
                   }));
  v.push_back(make("S-ANTICOMM", "sturm", kCore, "contraction sum_i {S_ij, S_ik} = (d-1) delta_jk / 2",
                   "all index pairs", [](int d) {
                     return per_ij(d, [d](int j, int kk) {
                       Ast lhs = sum_i(d, [j, kk](int i) { return ast::anti(N("S", {i, j}), N("S", {i, kk})); });
                       return std::make_pair(lhs, k(q(j == kk ? d - 1 : 0, 2)));
                     });
                   }));
  v.push_back(make("B-SQUARE", "sturm", kCore, "explicit expression of B^2",
                   "B^2 = (1/4){r^2 p^4 - 2i(x.p)p^2 + 4E[...] + 4E^2 r^2} + (1/2) L_ij S_ij (p^2 + 2E)", [](int d) {
                     Ast lhs = sum_i(d, [](int i) { return N("B", {i}) * N("B", {i}); });
                     Ast bracket = R2() * P2() - q(2) * XP2() + iq(2 * d - 3) * XP() + k(q(d * (d - 1), 2));
                     Ast rhs = q(1, 4) * (R2() * P2() * P2() - iq(2) * (XP() * P2()) + (q(4) * kE) * bracket +
                                          (q(4) * kE * kE) * R2()) +
                               q(1, 2) * (LS() * (P2() + k(q(2) * kE)));
                     return IdList{{"", lhs, rhs}};
                   }));
  v.push_back(make("K-SQUARE", "sturm", kCore, "K^2 and the commutator [p^2, gamma.x] used to compute it",
                   "[p^2, gamma.x] = -2i gamma.p (sign reading of the [+-p^2, gamma.x] display); "
                   "K^2 = r^2 p^4/4 - (i/2)(x.p)p^2 + (1/2) L_ij S_ij p^2 - E(r^2 p^2 - i x.p + L_ij S_ij) + E^2 r^2",
                   [](int) {
                     Ast rhs = q(1, 4) * (R2() * P2() * P2()) - iq(1, 2) * (XP() * P2()) + q(1, 2) * (LS() * P2()) -
                               kE * (R2() * P2() - iq(1) * XP() + LS()) + (kE * kE) * R2();
                     return IdList{{"commutator", ast::comm(P2(), GX()), iq(-2) * GP()}, {"square", K() * K(), rhs}};
                   }));
  v.push_back(make("B2-K2-J2", "sturm", kCore, "B^2 = K^2 + 2E[J^2 + d(d-1)/8]", "", [](int d) {
    Ast lhs = sum_i(d, [](int i) { return N("B", {i}) * N("B", {i}); });
    return IdList{{"", lhs, K() * K() + (q(2) * kE) * (J2() + k(q(d * (d - 1), 8)))}};
  }));
  return v;
}

std::vector<Check> d3_checks() {
  std::vector<Check> v;
  auto dot = [](const std::string& a, const std::string& b) {
    return sum_i(3, [a, b](int i) { return N(a, {i}) * N(b, {i}); });
  };
  Ast XS = N("XS"), PS = N("PS");
  v.push_back(make("D3-DOTS", "d3", kCore, "three-dimensional dot products L.B and S.B",
                   "L.B1 = 0, L.B2 = (x.p)(p.S) - (x.S)p^2, S.B1 = (x.S)p^2/2 - (x.p - i)(p.S) + E x.S, S.B2 = -i p.S",
                   [=](int) {
                     return IdList{{"L.B1", dot("Lvec", "B1"), zero()},
                                   {"L.B2", dot("Lvec", "B2"), XP() * PS - XS * P2()},
                                   {"S.B1", dot("Svec", "B1"), q(1, 2) * (XS * P2()) - (XP() - k(iq(1))) * PS + kE * XS},
                                   {"S.B2", dot("Svec", "B2"), iq(-1) * PS}};
                   }));
  v.push_back(make("JB-DOT", "d3", kCore, "J.B = -(x.S)(p^2/2 - E) in three dimensions", "", [=](int) {
    return IdList{{"", dot("Jvec", "B"), -(XS * (q(1, 2) * P2() - En()))}};
  }));
  Check sigma = make("JB-DOT-SIGMA", "d3", kCore, "J.B = -K/2 for gamma_i = sigma_i",
                     "holds in the Pauli representation (gamma_1 gamma_2 gamma_3 = i), not in the abstract Clifford algebra",
                     [=](int) { return IdList{{"", dot("Jvec", "B"), q(-1, 2) * K()}}; });
  sigma.rep_quotient = true;
  v.push_back(sigma);
  Check ja = make("JA-DOT", "d3", kCore, "J.A~ = alpha/2 for gamma_i = sigma_i, using J.x = (sigma.x)/2",
                  "holds in the Pauli representation (gamma_1 gamma_2 gamma_3 = i)", [=](int) {
                    return IdList{{"J.x", sum_i(3, [](int i) { return N("Jvec", {i}) * x(i); }), q(1, 2) * GX()},
                                  {"J.LRL", dot("Jvec", "LRL"), k(q(1, 2) * kAlpha)}};
                  });
  ja.rep_quotient = true;
  v.push_back(ja);
  for (auto& c : v) c.only_d3 = true;
  return v;
}

std::vector<Check> schrodinger_checks() {
  std::vector<Check> v;
  v.push_back(make("JH-COM", "schrodinger", kCore, "rotational invariance [J_ij, H] = 0", "all index pairs", [](int d) {
    return per_ij(d, [](int i, int j) { return std::make_pair(ast::comm(N("J", {i, j}), H()), zero()); });
  }));
  v.push_back(make("LRL-CONSERVED", "schrodinger", kCore, "the spin-extended LRL vector commutes with H: [A~_i, H] = 0",
                   "all indices", [](int d) {
                     return per_i(d, [](int i) { return std::make_pair(ast::comm(N("LRL", {i}), H()), zero()); });
                   }));
  v.push_back(make("XH-COM", "schrodinger", kCore, "[x_i, H] = [x_i, p^2/2] = i p_i", "all indices", [](int d) {
    IdList out;
    for (int i = 1; i <= d; ++i) {
      out.push_back({lbl({{"i", i}}) + ",H", ast::comm(x(i), H()), iq(1) * p(i)});
      out.push_back({lbl({{"i", i}}) + ",p2", ast::comm(x(i), q(1, 2) * P2()), iq(1) * p(i)});
    }
    return out;
  }));
  v.push_back(make("BH-CHAIN", "schrodinger", kCore, "reduction of [A~_i, H] = 0 to a commutator with (gamma.x)/r^2",
                   "[B_i,H] + [x_i,H](H-E) = 0; [B_i,H] = [B_i,(gamma.x)/r^2](K+alpha) = [B_i,(gamma.x)/r^2](gamma.x)(H-E); "
                   "[B_i,(gamma.x)/r^2](gamma.x) = -i p_i; [B_i,(gamma.x)/r^2] = -i p_i (gamma.x)/r^2",
                   [](int d) {
                     IdList out;
                     for (int i = 1; i <= d; ++i) {
                       const std::string l = lbl({{"i", i}});
                       Ast bh = ast::comm(N("B", {i}), H());
                       Ast bg = ast::comm(N("B", {i}), GXr());
                       out.push_back({l + ",sum", bh + ast::comm(x(i), H()) * HmE(), zero()});
                       out.push_back({l + ",K", bh, bg * (K() + k(kAlpha))});
                       out.push_back({l + ",HmE", bh, bg * GX() * HmE()});
                       out.push_back({l + ",gx", bg * GX(), iq(-1) * p(i)});
                       out.push_back({l + ",final", bg, iq(-1) * (p(i) * GXr())});
                     }
                     return out;
                   }));
  v.push_back(make("LRL-EXPLICIT", "schrodinger", kCore, "closed form of the spin-extended LRL vector (no E dependence)",
                   "B_i + x_i(H-E) = x_i p^2 - T p_i + S_ij p_j + alpha x_i (gamma.x)/r^2", [](int d) {
                     return per_i(d, [](int i) {
                       Ast rhs = x(i) * P2() - T() * p(i) + N("B2", {i}) + kAlpha * (x(i) * GXr());
                       return std::make_pair(N("LRL", {i}), rhs);
                     });
                   }));
  v.push_back(make("LRL-ALG", "schrodinger", kCore, "algebra of J_ij and the LRL vector",
                   "[J,J] so(d) relations, [J_ij, A~_k] = i(d_ik A~_j - d_jk A~_i), [A~_i, A~_j] = -2i H J_ij",
                   [](int d) {
                     IdList out = so_family(d, "J");
                     for (auto& id : out) id.label = "JJ," + id.label;
                     for (auto id : vector_family(d, "LRL")) out.push_back({"JA," + id.label, id.lhs, id.rhs});
                     for (int i = 1; i <= d; ++i)
                       for (int j = 1; j <= d; ++j)
                         out.push_back({"AA," + lbl({{"i", i}, {"j", j}}), ast::comm(N("LRL", {i}), N("LRL", {j})),
                                        iq(-2) * (H() * N("J", {i, j}))});
                     return out;
                   }));
  v.push_back(make("LRL-AUX-1", "schrodinger", kCore, "cross commutators of B_i with x_j(H-E)",
                   "[B_i, x_j(H-E)] - [B_j, x_i(H-E)] = (-2i J_ij + i L_ij)(H-E); "
                   "[B_i, x_j(H-E)] = [B_i, x_j (gamma.x)/r^2](K+alpha) = [B_i, x_j (gamma.x)/r^2](gamma.x)(H-E)",
                   [](int d) {
                     IdList out;
                     for (int i = 1; i <= d; ++i)
                       for (int j = 1; j <= d; ++j) {
                         const std::string l = lbl({{"i", i}, {"j", j}});
                         Ast bxj = ast::comm(N("B", {i}), x(j) * HmE());
                         Ast bxg = ast::comm(N("B", {i}), x(j) * GXr());
                         out.push_back({l + ",antisym", bxj - ast::comm(N("B", {j}), x(i) * HmE()),
                                        (iq(-2) * N("J", {i, j}) + iq(1) * N("L", {i, j})) * HmE()});
                         out.push_back({l + ",K", bxj, bxg * (K() + k(kAlpha))});
                         out.push_back({l + ",HmE", bxj, bxg * GX() * HmE()});
                       }
                     return out;
                   }));
  v.push_back(make("LRL-AUX-2", "schrodinger", kCore, "[x_i(H-E), x_j(H-E)] = -i L_ij (H-E)", "all index pairs",
                   [](int d) {
                     return per_ij(d, [](int i, int j) {
                       return std::make_pair(ast::comm(x(i) * HmE(), x(j) * HmE()), iq(-1) * (N("L", {i, j}) * HmE()));
                     });
                   }));
  v.push_back(make("LRL-AUX-3", "schrodinger", kCore, "[B_i, x_j] = i delta_ij T - i J_ij",
                   "both via B_i directly and via [((1-2E)A_i + (1+2E)M_i)/2, M_j - A_j]", [](int d) {
                     IdList out;
                     for (int i = 1; i <= d; ++i)
                       for (int j = 1; j <= d; ++j) {
                         const std::string l = lbl({{"i", i}, {"j", j}});
                         Ast rhs = scaled(iq(1) * delta(i, j), T()) - iq(1) * N("J", {i, j});
                         Ast bam = (q(1, 2) - kE) * N("A", {i}) + (q(1, 2) + kE) * N("M", {i});
                         out.push_back({l + ",B", ast::comm(N("B", {i}), x(j)), rhs});
                         out.push_back({l + ",AM", ast::comm(bam, N("M", {j}) - N("A", {j})), rhs});
                       }
                     return out;
                   }));
  v.push_back(make("LRL-SQUARE", "schrodinger", kCore, "A~^2 = 2H(J^2 + d(d-1)/8) + alpha^2", "", [](int d) {
    Ast lhs = sum_i(d, [](int i) { return N("LRL", {i}) * N("LRL", {i}); });
    return IdList{{"", lhs, q(2) * (H() * (J2() + k(q(d * (d - 1), 8)))) + k(kAlpha * kAlpha)}};
  }));
  return v;
}

std::vector<Check> appendix_checks() {
  std::vector<Check> v;
  const std::string A = "appendix";
  // Appendix A: Casimir values.
  v.push_back(make("APP-A-J2", A, kTrans, "J^2 expanded into orbital, mixed and spin parts",
                   "J^2 = (L_ij L_ij + 2 L_ij S_ij + S_ij S_ij)/2 = r^2 p^2 - (x.p)^2 + i(d-2) x.p + L_ij S_ij + d(d-1)/8",
                   [](int d) {
                     Ast split = q(1, 2) * sum_ij(d, [](int i, int j) {
                       return N("L", {i, j}) * N("L", {i, j}) + q(2) * (N("L", {i, j}) * N("S", {i, j})) +
                              N("S", {i, j}) * N("S", {i, j});
                     });
                     Ast value = R2() * P2() - XP2() + iq(d - 2) * XP() + LS() + k(q(d * (d - 1), 8));
                     return IdList{{"split", J2(), split}, {"value", J2(), value}};
                   }));
  v.push_back(make("APP-A-LL", A, kTrans, "(1/2) L_ij L_ij = r^2 p^2 - (x.p)^2 + i(d-2) x.p", "", [](int d) {
    return IdList{{"", N("L2"), R2() * P2() - XP2() + iq(d - 2) * XP()}};
  }));
  v.push_back(make("APP-A-SS", A, kTrans, "(1/2) S_ij S_ij = d(d-1)/8", "", [](int d) {
    return IdList{{"", N("S2"), k(q(d * (d - 1), 8))}};
  }));
  v.push_back(make("APP-A-AM2", A, kTrans, "A^2 - M^2",
                   "A^2 - M^2 = -{x_i p^2/2 - T p_i + S_ij p_j} x_i - x_i {...} "
                   "= -r^2 p^2 + 2(x.p)^2 - i(2d-3) x.p - L_ij S_ij - d(d-1)/2",
                   [](int d) {
                     Ast lhs = sum_i(d, [](int i) { return N("A", {i}) * N("A", {i}) - N("M", {i}) * N("M", {i}); });
                     Ast form = -sum_i(d, [](int i) { return w_part(i) * x(i); }) -
                                sum_i(d, [](int i) { return x(i) * w_part(i); });
                     Ast value = -(R2() * P2()) + q(2) * XP2() - iq(2 * d - 3) * XP() - LS() - k(q(d * (d - 1), 2));
                     return IdList{{"form", lhs, form}, {"value", lhs, value}};
                   }));
  v.push_back(make("APP-A-T2", A, kTrans, "T^2 = (x.p)^2 - i(d-1) x.p - (d-1)^2/4", "", [](int d) {
    return IdList{{"", T() * T(), XP2() - iq(d - 1) * XP() - k(q((d - 1) * (d - 1), 4))}};
  }));
  v.push_back(make("APP-A-G2", A, kTrans, "Gamma_0^2 - Gamma_{d+1}^2 and the Gamma Casimir",
                   "G0^2 - Gd1^2 = (1/4)(g.x)(p^2+1)(g.x)(p^2+1) - (1/4)(g.x)(p^2-1)(g.x)(p^2-1) "
                   "= (g.x)^2 p^2 - i(g.x)(g.p) = r^2 p^2 - i x.p + L_ij S_ij; "
                   "G0^2 - Gd1^2 - T^2 = r^2 p^2 - (x.p)^2 + i(d-2) x.p + L_ij S_ij + (d-1)^2/4",
                   [](int d) {
                     Ast lhs = N("G0") * N("G0") - N("Gd1") * N("Gd1");
                     Ast one = ast::one();
                     Ast form = q(1, 4) * (GX() * (P2() + one) * GX() * (P2() + one)) -
                                q(1, 4) * (GX() * (P2() - one) * GX() * (P2() - one));
                     Ast mid = GX() * GX() * P2() - iq(1) * (GX() * GP());
                     Ast value = R2() * P2() - iq(1) * XP() + LS();
                     Ast cas = R2() * P2() - XP2() + iq(d - 2) * XP() + LS() + k(q((d - 1) * (d - 1), 4));
                     return IdList{{"form", lhs, form},
                                   {"middle", lhs, mid},
                                   {"value", lhs, value},
                                   {"casimir", lhs - T() * T(), cas}};
                   }));

  // Appendix B: the commutator with (gamma.x)/r^2.
  v.push_back(make("APP-B-1", A, kTrans, "[p_i, (gamma.x)/r^2] = -(i/r^2) gamma_i + 2i (x_i/r^4)(gamma.x)",
                   "all indices", [](int d) {
                     return per_i(d, [](int i) {
                       return std::make_pair(ast::comm(p(i), GXr()),
                                             iq(-1) * (rinv2() * g(i)) + iq(2) * (x(i) * rinv2() * rinv2() * GX()));
                     });
                   }));
  v.push_back(make("APP-B-2", A, kTrans, "[p^2, (gamma.x)/r^2]",
                   "= -(2i/r^2)(gamma.p) + (4i/r^4)(gamma.x)(x.p - i(d-2)/2)", [](int d) {
                     Ast rhs = iq(-2) * (rinv2() * GP()) +
                               iq(4) * (rinv2() * rinv2() * GX() * (XP() - k(iq(d - 2, 2))));
                     return IdList{{"", ast::comm(P2(), GXr()), rhs}};
                   }));
  v.push_back(make("APP-B-3", A, kTrans, "[x.p, (gamma.x)/r^2] = (i/r^2)(gamma.x)", "", [](int) {
    return IdList{{"", ast::comm(XP(), GXr()), iq(1) * (rinv2() * GX())}};
  }));
  v.push_back(make("APP-B-4", A, kTrans, "[(x.p - i(d-1)/2) p_i, (gamma.x)/r^2]",
                   "= [-(i/r^2) gamma_i + 2i (x_i/r^4)(gamma.x)](x.p - i(d-5)/2) + (i/r^2)(gamma.x) p_i", [](int d) {
                     return per_i(d, [d](int i) {
                       Ast first = iq(-1) * (rinv2() * g(i)) + iq(2) * (x(i) * rinv2() * rinv2() * GX());
                       Ast rhs = first * (XP() - k(iq(d - 5, 2))) + iq(1) * (rinv2() * GX() * p(i));
                       return std::make_pair(ast::comm(T() * p(i), GXr()), rhs);
                     });
                   }));
  v.push_back(make("APP-B-5", A, kTrans, "[S_ij p_j, (gamma.x)/r^2]",
                   "= S_ij[-(i/r^2) gamma_j + 2i (x_j/r^4)(gamma.x)] + (i/r^2)[x_i (gamma.p) - gamma_i (x.p)] "
                   "= -(i/r^2) gamma_i (x.p - i(d-3)/2) - (x_i/r^4)(gamma.x) + i (x_i/r^2)(gamma.p)",
                   [](int d) {
                     IdList out;
                     for (int i = 1; i <= d; ++i) {
                       Ast lhs = ast::comm(N("B2", {i}), GXr());
                       Ast form = sum_i(d, [i](int j) {
                                    return N("S", {i, j}) *
                                           (iq(-1) * (rinv2() * g(j)) + iq(2) * (x(j) * rinv2() * rinv2() * GX()));
                                  }) +
                                  iq(1) * (rinv2() * (x(i) * GP() - g(i) * XP()));
                       Ast value = iq(-1) * (rinv2() * g(i) * (XP() - k(iq(d - 3, 2)))) -
                                   x(i) * rinv2() * rinv2() * GX() + iq(1) * (x(i) * rinv2() * GP());
                       out.push_back({lbl({{"i", i}}) + ",form", lhs, form});
                       out.push_back({lbl({{"i", i}}) + ",value", lhs, value});
                     }
                     return out;
                   }));
  v.push_back(make("APP-B-6", A, kTrans, "S_ij gamma_j = -(i/2)(d-1) gamma_i and S_ij x_j = -(i/2)[gamma_i (gamma.x) - x_i]",
                   "both relations, all indices", [](int d) {
                     IdList out;
                     for (int i = 1; i <= d; ++i) {
                       out.push_back({lbl({{"i", i}}) + ",gamma",
                                      sum_i(d, [i](int j) { return N("S", {i, j}) * g(j); }), iq(-(d - 1), 2) * g(i)});
                       out.push_back({lbl({{"i", i}}) + ",x", sum_i(d, [i](int j) { return N("S", {i, j}) * x(j); }),
                                      iq(-1, 2) * (g(i) * GX() - x(i))});
                     }
                     return out;
                   }));
  v.push_back(make("APP-B-FINAL", A, kTrans, "[B_i, (gamma.x)/r^2] = 2(x_i/r^4)(gamma.x) - gamma_i/r^2 - (i/r^2)(gamma.x) p_i",
                   "also equal to -i p_i (gamma.x)/r^2", [](int d) {
                     IdList out;
                     for (int i = 1; i <= d; ++i) {
                       Ast lhs = ast::comm(N("B", {i}), GXr());
                       Ast rhs = q(2) * (x(i) * rinv2() * rinv2() * GX()) - rinv2() * g(i) -
                                 iq(1) * (rinv2() * GX() * p(i));
                       out.push_back({lbl({{"i", i}}) + ",explicit", lhs, rhs});
                       out.push_back({lbl({{"i", i}}) + ",target", rhs, iq(-1) * (p(i) * GXr())});
                     }
                     return out;
                   }));

  // Appendix C: the square of the LRL vector.
  v.push_back(make("APP-C-1", A, kTrans, "A~^2 = B^2 + x(H-E).B + B.x(H-E) + x(H-E).x(H-E)", "", [](int d) {
    Ast lhs = sum_i(d, [](int i) { return N("LRL", {i}) * N("LRL", {i}); });
    Ast rhs = sum_i(d, [](int i) {
      return N("B", {i}) * N("B", {i}) + x(i) * HmE() * N("B", {i}) + N("B", {i}) * x(i) * HmE() +
             x(i) * HmE() * x(i) * HmE();
    });
    return IdList{{"", lhs, rhs}};
  }));
  auto xhxh = [](int d) { return sum_i(d, [](int i) { return x(i) * HmE() * x(i) * HmE(); }); };
  v.push_back(make("APP-C-2", A, kTrans, "x(H-E).x(H-E) = r^2 (H-E)^2 - i x.p (H-E)", "", [xhxh](int d) {
    return IdList{{"", xhxh(d), R2() * HmE() * HmE() - iq(1) * (XP() * HmE())}};
  }));
  v.push_back(make("APP-C-3", A, kTrans, "(H-E)^2",
                   "= p^4/4 + alpha (gamma.x)/r^2 {p^2 + (i/r^2)[x.p - i(d-2)] + L_ij S_ij / r^2} + alpha^2/r^2 "
                   "- E(p^2 + 2 alpha (gamma.x)/r^2) + E^2",
                   [](int d) {
                     Ast brace = P2() + iq(1) * (rinv2() * (XP() - k(iq(d - 2)))) + rinv2() * LS();
                     Ast rhs = q(1, 4) * (P2() * P2()) + kAlpha * (GXr() * brace) + (kAlpha * kAlpha) * rinv2() -
                               kE * (P2() + (q(2) * kAlpha) * GXr()) + k(kE * kE);
                     return IdList{{"", HmE() * HmE(), rhs}};
                   }));
  v.push_back(make("APP-C-4", A, kTrans, "-i x.p (H-E) = -(i/2)(x.p)p^2 - alpha i (gamma.x)/r^2 (x.p + i) + E i x.p", "",
                   [](int) {
                     Ast rhs = iq(-1, 2) * (XP() * P2()) - (iq(1) * kAlpha) * (GXr() * (XP() + k(iq(1)))) +
                               (iq(1) * kE) * XP();
                     return IdList{{"", iq(-1) * (XP() * HmE()), rhs}};
                   }));
  v.push_back(make("APP-C-5", A, kTrans, "x(H-E).x(H-E) expanded",
                   "= r^2 p^4/4 - (i/2)(x.p)p^2 + alpha (gamma.x)(p^2 + (d-1)/r^2 + L_ij S_ij / r^2) + alpha^2 "
                   "+ E(-r^2 p^2 + i x.p - 2 alpha gamma.x) + E^2 r^2",
                   [xhxh](int d) {
                     Ast rhs = q(1, 4) * (R2() * P2() * P2()) - iq(1, 2) * (XP() * P2()) +
                               kAlpha * (GX() * (P2() + q(d - 1) * rinv2() + rinv2() * LS())) + k(kAlpha * kAlpha) +
                               kE * (-(R2() * P2()) + iq(1) * XP() - (q(2) * kAlpha) * GX()) + (kE * kE) * R2();
                     return IdList{{"", xhxh(d), rhs}};
                   }));
  v.push_back(make("APP-C-6", A, kTrans, "-i gamma.p = (gamma.x)/r^2 (-i x.p + L_ij S_ij)", "", [](int) {
    return IdList{{"", iq(-1) * GP(), GXr() * (iq(-1) * XP() + LS())}};
  }));
  auto xhb = [](int d) {
    return sum_i(d, [](int i) { return x(i) * HmE() * N("B", {i}) + N("B", {i}) * x(i) * HmE(); });
  };
  v.push_back(make("APP-C-7", A, kTrans, "x(H-E).B + B.x(H-E)",
                   "= (x.B + B.x)(H-E) + i x.p (H-E) = [2 x.B + i d T + i x.p](H-E) "
                   "= [r^2 p^2 - 2(x.p)^2 + 2i(d-1) x.p + L_ij S_ij + d(d-1)/2 + 2E r^2](H-E)",
                   [xhb](int d) {
                     Ast xb = sum_i(d, [](int i) { return x(i) * N("B", {i}); });
                     Ast bx = sum_i(d, [](int i) { return N("B", {i}) * x(i); });
                     return IdList{{"form", xhb(d), (xb + bx) * HmE() + iq(1) * (XP() * HmE())},
                                   {"x.B", xhb(d), (q(2) * xb + iq(d) * T() + iq(1) * XP()) * HmE()},
                                   {"value", xhb(d), c7_bracket(d) * HmE()}};
                   }));
  v.push_back(make("APP-C-8", A, kTrans, "first term: [...] p^2/2",
                   "= (1/2)[r^2 p^4 - 2(x.p)^2 p^2 + 2i(d-1)(x.p)p^2 + L_ij S_ij p^2 + d(d-1)p^2/2] + E r^2 p^2",
                   [](int d) {
                     Ast rhs = q(1, 2) * (R2() * P2() * P2() - q(2) * (XP2() * P2()) + iq(2 * (d - 1)) * (XP() * P2()) +
                                          LS() * P2() + q(d * (d - 1), 2) * P2()) +
                               kE * (R2() * P2());
                     return IdList{{"", c7_bracket(d) * (q(1, 2) * P2()), rhs}};
                   }));
  v.push_back(make("APP-C-9", A, kTrans, "second term: alpha [...] (gamma.x)/r^2",
                   "moved through (gamma.x)/r^2 with the commutators of p^2, (x.p)^2, x.p and L_ij S_ij "
                   "(a stray character after the first commutator is ignored)",
                   [](int d) {
                     Ast lhs = kAlpha * (c7_bracket(d) * GXr());
                     Ast expansion = kAlpha * (GXr() * c7_bracket(d)) + kAlpha * (R2() * ast::comm(P2(), GXr())) -
                                     (q(2) * kAlpha) * ast::comm(XP2(), GXr()) +
                                     (iq(2 * (d - 1)) * kAlpha) * ast::comm(XP(), GXr()) + kAlpha * ast::comm(LS(), GXr());
                     Ast value = kAlpha * (GXr() * (R2() * P2() - q(2) * XP2() + iq(2 * (d - 2)) * XP() + LS() +
                                                    k(q((d - 1) * (d - 2), 2)))) +
                                 (q(2) * kAlpha * kE) * GX();
                     return IdList{{"expansion", lhs, expansion}, {"value", lhs, value}};
                   }));
  v.push_back(make("APP-C-10", A, kTrans, "[(x.p)^2, (gamma.x)/r^2] = (gamma.x)/r^2 (2i x.p - 1)", "", [](int) {
    return IdList{{"", ast::comm(XP2(), GXr()), GXr() * (iq(2) * XP() - ast::one())}};
  }));
  v.push_back(make("APP-C-11", A, kTrans, "[L_ij S_ij, (gamma.x)/r^2]",
                   "= (1/r^2)[-2i (gamma.x)(x.p - i(d-1)/2) + 2i r^2 (gamma.p)]", [](int d) {
                     Ast rhs = rinv2() * (iq(-2) * (GX() * (XP() - k(iq(d - 1, 2)))) + iq(2) * (R2() * GP()));
                     return IdList{{"", ast::comm(LS(), GXr()), rhs}};
                   }));
  v.push_back(make("APP-C-12", A, kTrans, "third term: -E [...]",
                   "= -E[r^2 p^2 - 2(x.p)^2 + 2i(d-1) x.p + L_ij S_ij + d(d-1)/2] - 2E^2 r^2", [](int d) {
                     Ast rhs = -(kE * (R2() * P2() - q(2) * XP2() + iq(2 * (d - 1)) * XP() + LS() +
                                       k(q(d * (d - 1), 2)))) -
                               (q(2) * kE * kE) * R2();
                     return IdList{{"", c7_bracket(d) * (-En()), rhs}};
                   }));
  v.push_back(make("APP-C-13", A, kTrans, "x(H-E).B + B.x(H-E) in closed form", "sum of the three terms", [xhb](int d) {
    Ast rhs = q(1, 2) * (R2() * P2() * P2() - q(2) * (XP2() * P2()) + iq(2 * (d - 1)) * (XP() * P2()) + LS() * P2() +
                         q(d * (d - 1), 2) * P2()) +
              kAlpha * (GXr() * (R2() * P2() - q(2) * XP2() + iq(2 * (d - 2)) * XP() + LS() + k(q((d - 1) * (d - 2), 2)))) +
              kE * ((q(2) * kAlpha) * GX() + q(2) * XP2() - iq(2 * (d - 1)) * XP() - LS() - k(q(d * (d - 1), 2))) -
              (q(2) * kE * kE) * R2();
    return IdList{{"", xhb(d), rhs}};
  }));
  v.push_back(make("APP-C-14", A, kTrans, "A~^2 in closed form",
                   "= r^2 p^4 - (x.p)^2 p^2 + i(d-2)(x.p)p^2 + L_ij S_ij p^2 + d(d-1)p^2/4 "
                   "+ 2 alpha (gamma.x)/r^2 [r^2 p^2 - (x.p)^2 + i(d-2) x.p + L_ij S_ij + d(d-1)/4] + alpha^2",
                   [](int d) {
                     Ast lhs = sum_i(d, [](int i) { return N("LRL", {i}) * N("LRL", {i}); });
                     Ast rhs = R2() * P2() * P2() - XP2() * P2() + iq(d - 2) * (XP() * P2()) + LS() * P2() +
                               q(d * (d - 1), 4) * P2() +
                               (q(2) * kAlpha) *
                                   (GXr() * (R2() * P2() - XP2() + iq(d - 2) * XP() + LS() + k(q(d * (d - 1), 4)))) +
                               k(kAlpha * kAlpha);
                     return IdList{{"", lhs, rhs}};
                   }));
  return v;
}

}  // namespace

const std::vector<Check>& list_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> all;
    for (auto part : {core_checks(), sturm_checks(), d3_checks(), schrodinger_checks(), appendix_checks()})
      for (auto& c : part) all.push_back(std::move(c));
    std::sort(all.begin(), all.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    for (std::size_t k = 1; k < all.size(); ++k)
      if (all[k].id == all[k - 1].id) throw std::logic_error("duplicate check id " + all[k].id);
    return all;
  }();
  return checks;
}

}  // namespace spinalg
