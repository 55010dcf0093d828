#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ribbonforge/grouplike.hpp"
#include "ribbonforge/hopf.hpp"
#include "ribbonforge/verify.hpp"

namespace ribbonforge {

/// R_mn(q) (or the Taft algebra) together with its dual data. The ground field
/// is Q(xi), xi = zeta_mn, q = xi^m.
///
/// Taft(n) is the m = 1 member of the same presentation: g^n = 1 turns
/// x^n = g^n - 1 into x^n = 0.
struct Family {
  std::string descriptor;  // "radford(m,n)" or "taft(n)"
  int m = 0;
  int n = 0;
  cyc::ContextPtr ctx;
  CycNumber q;
  CycNumber xi;
  HopfPtr base;
  HopfPtr dual;
  HopfPtr dual_cop;
  SparseVec alpha;
  SparseVec beta;  // zero when n = 1
  std::vector<SparseVec> alpha_powers;  // alpha^0 .. alpha^(mn-1)
  std::vector<SparseVec> beta_powers;   // beta^0 .. beta^(n-1)
  std::vector<NamedElement> base_grouplike_candidates;  // g^i
  std::vector<NamedElement> dual_grouplike_candidates;  // alpha^(mk)

  bool is_taft() const { return descriptor.rfind("taft", 0) == 0; }
  std::int64_t group_order() const { return static_cast<std::int64_t>(m) * n; }
  std::uint32_t index(std::int64_t i, std::int64_t j) const;
  /// alpha^a beta^b in H*, a taken mod mn; zero for b >= n.
  SparseVec alpha_beta_word(std::int64_t a, std::int64_t b) const;
  /// g^i x^j in H (i mod mn).
  SparseVec g_x(std::int64_t i, std::int64_t j) const;
};

/// Throws UsageError for m < 2 or n < 1. Runs the full axiom suite on the
/// result and throws VerificationFailure if anything fails.
Family build_radford(int m, int n);
/// Throws UsageError for n < 2.
Family build_taft(int n);

/// Basis label of g^i x^j ("1", "g", "g^2x", ...).
std::string monomial_label(std::int64_t i, std::int64_t j);

struct AlphaBeta {
  SparseVec alpha;
  SparseVec beta;
};

/// alpha = sum xi^i (g^i)*, beta = sum (g^i x)* on the dual of R_mn(q), checked
/// against alpha^mn = eps, beta^n = 0, beta alpha = xi alpha beta and the
/// spanning of {alpha^i beta^j}. Any failure throws VerificationFailure.
AlphaBeta alpha_beta(const HopfAlgebra& hdual, int m, int n);

/// Exhaustive dual product table against its closed form, and the coproduct,
/// counit and antipode of alpha and beta in the co-opposite dual against
/// their closed forms. Requires dim <= full_bound.
AxiomReport verify_dual_structure(const Family& f, std::size_t full_bound = kDefaultFullBound);
AxiomReport verify_dual_structure(int m, int n);

/// y_ij = (1/mn) (1/(j)!_q) sum_k xi^(-ik) alpha^k beta^j must equal the dual
/// basis vector (g^i x^j)* for every (i, j).
AxiomReport verify_dual_basis_formula(const Family& f);
AxiomReport verify_dual_basis_formula(int m, int n);

}  // namespace ribbonforge
