#pragma once

#include <cstddef>
#include <cstdint>

#include "ribbonforge/hopf.hpp"
#include "ribbonforge/radford.hpp"
#include "ribbonforge/verify.hpp"

namespace ribbonforge {

/// Largest double dimension built by default; RIBBONFORGE_BUDGET overrides it.
inline constexpr std::size_t kDefaultDoubleBudget = 2048;
std::size_t double_budget();

/// D(H) = (H*)^cop ⋈ H with its universal R-matrix and Drinfeld element.
/// Basis index of f ⋈ a is f * dim(H) + a (dual-major).
struct DoubleData {
  HopfPtr base;
  HopfPtr dual_cop;
  HopfPtr dbl;
  std::uint32_t d = 0;  // dim H
  /// R = sum_i (eps ⋈ e_i) (x) ((e_i)* ⋈ 1), keys X * dim(D) + Y.
  SparseTensorData r;
  /// (S (x) id) R.
  SparseTensorData r_inv;
  SparseVec u;
  SparseVec u_inv;

  std::uint32_t index(std::uint32_t f, std::uint32_t a) const { return f * d + a; }
  std::uint64_t dim() const { return dbl->dim(); }
  /// f ⋈ a for f in (H*)^cop and a in H.
  SparseVec pure(const SparseVec& f, const SparseVec& a) const;
  SparseVec from_dual(const SparseVec& f) const { return pure(f, base->unit()); }
  SparseVec from_base(const SparseVec& a) const { return pure(dual_cop->unit(), a); }
  /// Number of summands in the defining sum of R (one per basis vector of H).
  std::size_t r_summands() const { return d; }
  /// R^op = flip(R).
  SparseTensorData r_op() const;
};

/// Builds D(H) from H and (H*)^cop; dim(D) > budget throws BudgetExceeded.
/// Basis products are evaluated on demand from the bicrossed formula
///   (f ⋈ a)(g ⋈ b) = sum f (a_1 -> g <- S^-1(a_3)) ⋈ a_2 b.
DoubleData build_double(const HopfPtr& h, const HopfPtr& dual_cop, std::size_t budget = double_budget());
DoubleData build_double(const Family& f, std::size_t budget = double_budget());

/// sum_i S(y_i) x_i from R = sum x_i (x) y_i, evaluated through the double's
/// own multiplication.
SparseVec drinfeld_u(const DoubleData& dd);

/// R invertible with inverse (S (x) id)R, counit legs of R, R Delta = Delta^op R
/// (all basis elements at full depth, generator words otherwise),
/// (Delta (x) id)R = R13 R23 and (id (x) Delta)R = R13 R12.
AxiomReport verify_quasitriangular(const DoubleData& dd, Depth depth);

/// u u^-1 = u^-1 u = 1, eps(u) = 1, u a u^-1 = S^2(a), u S(u) = S(u) u and
/// Delta(u) = (R^op R)^-1 (u (x) u).
AxiomReport verify_drinfeld_u(const DoubleData& dd, Depth depth);

/// Both closed forms of the double's antipode, and the embeddings of the two
/// factors as Hopf subalgebras, on every basis element.
AxiomReport verify_double_structure(const DoubleData& dd);

/// The closed forms of R and u for D(R_mn(q)) in terms of alpha and beta,
/// compared coefficient by coefficient.
AxiomReport verify_explicit_r_and_u(const Family& f, const DoubleData& dd);

/// Three-leg product with the unit in one leg of each factor folded away:
/// sum X1 (x) X2 (x) Y1 Y2 for R13 R23, and sum X1 X2 (x) Y2 (x) Y1 for R13 R12.
SparseTensorData r13_r23(const DoubleData& dd);
SparseTensorData r13_r12(const DoubleData& dd);

}  // namespace ribbonforge
