#include <gtest/gtest.h>

#include "ribbonforge/error.hpp"
#include "ribbonforge/qcalc.hpp"
#include "ribbonforge/radford.hpp"
#include "support.hpp"

using namespace ribbonforge;
using cyc::CycNumber;

namespace {

void expect_table_matches_oracle(const Family& f) {
  const test_support::WordAlgebra oracle{*f.ctx, f.m, f.n};
  const HopfAlgebra& h = *f.base;
  const int order = static_cast<int>(f.group_order());
  const int jmax = f.n;
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < jmax; ++j) {
      for (int k = 0; k < order; ++k) {
        for (int l = 0; l < jmax; ++l) {
          std::vector<SparseVec::Term> terms;
          for (const auto& [key, c] : oracle.mul(i, j, k, l)) terms.emplace_back(f.index(key.first, key.second), c);
          EXPECT_EQ(h.product(f.index(i, j), f.index(k, l)), SparseVec::from_unsorted(std::move(terms)))
              << f.descriptor << ": " << monomial_label(i, j) << " * " << monomial_label(k, l);
        }
      }
    }
  }
}

}  // namespace

TEST(Radford, Dimensions) {
  for (auto [m, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}, {4, 3}}) {
    EXPECT_EQ(build_radford(m, n).base->dim(), static_cast<std::uint32_t>(m * n * n));
  }
  EXPECT_EQ(build_taft(4).base->dim(), 16u);
}

TEST(Radford, RejectsBadParameters) {
  EXPECT_THROW(build_radford(1, 3), UsageError);
  EXPECT_THROW(build_radford(2, 0), UsageError);
  EXPECT_THROW(build_taft(1), UsageError);
}

TEST(Radford, ProductTableMatchesIndependentRewriting) {
  for (auto [m, n] : {std::pair{2, 1}, {2, 2}, {3, 2}, {2, 3}}) expect_table_matches_oracle(build_radford(m, n));
  expect_table_matches_oracle(build_taft(3));
}

TEST(Radford, WorkedProduct) {
  // x^4 = x (g^3 - 1), so (g^2 x^2)(g^3 x^2) = g^5 x^4 = g^2 x - g^5 x.
  const Family f = build_radford(2, 3);
  EXPECT_EQ(f.base->mul(f.g_x(2, 2), f.g_x(3, 2)), f.g_x(2, 1) - f.g_x(5, 1));
  EXPECT_EQ(f.base->mul(f.g_x(0, 1), f.g_x(1, 0)), f.g_x(1, 1).scaled(f.q));
}

TEST(Radford, CoproductOfXSquared) {
  const Family f = build_radford(2, 3);
  const HopfAlgebra& h = *f.base;
  const std::uint64_t d = h.dim();
  const SparseTensorData expect = tensor::outer2(f.g_x(0, 2), f.g_x(2, 0), d) +
                                  tensor::outer2(f.g_x(0, 1), f.g_x(1, 1), d).scaled(CycNumber(*f.ctx, 1) + f.q) +
                                  tensor::outer2(f.g_x(0, 0), f.g_x(0, 2), d);
  EXPECT_EQ(h.comult(f.g_x(0, 2)), expect);
  const qcalc::QBinomialTable binom(*f.ctx, f.q);
  EXPECT_EQ(binom.binomial(2, 1), CycNumber(*f.ctx, 1) + f.q);
}

TEST(Radford, SquareOfAntipodeOnX) {
  for (auto [m, n] : {std::pair{2, 3}, {3, 2}, {3, 3}}) {
    const Family f = build_radford(m, n);
    const HopfAlgebra& h = *f.base;
    EXPECT_EQ(h.apply_antipode(h.apply_antipode(f.g_x(0, 1))), f.g_x(0, 1).scaled(f.q.inverse()));
    EXPECT_EQ(h.apply_antipode(f.g_x(0, 1)), -h.mul(f.g_x(0, 1), f.g_x(-1, 0)));
  }
}

TEST(Radford, CentralPowers) {
  const Family f = build_radford(3, 2);
  const HopfAlgebra& h = *f.base;
  const SparseVec gn = f.g_x(f.n, 0);
  const SparseVec xn = h.mul(f.g_x(0, 1), f.g_x(0, 1));
  EXPECT_EQ(xn, gn - h.unit());
  for (std::uint32_t b = 0; b < h.dim(); ++b) {
    EXPECT_EQ(h.mul(gn, h.basis(b)), h.mul(h.basis(b), gn));
    EXPECT_EQ(h.mul(xn, h.basis(b)), h.mul(h.basis(b), xn));
  }
}

TEST(Radford, GroupAlgebraCase) {
  const Family f = build_radford(3, 1);
  const HopfAlgebra& h = *f.base;
  EXPECT_EQ(h.dim(), 3u);
  EXPECT_TRUE(f.beta.empty());
  const SparseVec x = f.g_x(1, 0) - h.unit();
  EXPECT_EQ(h.comult(x), tensor::outer2(x, f.g_x(1, 0), 3) + tensor::outer2(h.unit(), x, 3));
  for (std::uint32_t i = 0; i < 3; ++i) {
    for (std::uint32_t j = 0; j < 3; ++j) EXPECT_EQ(h.product(i, j), h.basis((i + j) % 3));
  }
}

TEST(Radford, AlphaBetaRelations) {
  const Family f = build_radford(2, 3);
  const HopfAlgebra& d = *f.dual;
  SparseVec beta3 = d.mul(d.mul(f.beta, f.beta), f.beta);
  EXPECT_TRUE(beta3.empty());
  EXPECT_EQ(d.mul(f.beta, f.alpha), d.mul(f.alpha, f.beta).scaled(f.xi));
  EXPECT_EQ(f.alpha_powers.size(), 6u);
  EXPECT_EQ(d.mul(f.alpha_powers[5], f.alpha), d.unit());
  const Element a(f.dual, f.alpha);
  EXPECT_EQ(pairing(a, Element(f.base, f.g_x(1, 0))), f.xi);
  EXPECT_TRUE(pairing(a, Element(f.base, f.g_x(0, 1))).is_zero());
  // beta with the (1)!_q normalisation is the plain sum of (g^i x)*.
  SparseVec beta;
  for (int i = 0; i < 6; ++i) beta = beta + SparseVec::single(f.index(i, 1), CycNumber(*f.ctx, 1));
  EXPECT_EQ(f.beta, beta);
}

TEST(Radford, DualStructureChecks) {
  for (auto [m, n] : {std::pair{2, 3}, {3, 2}, {2, 2}}) {
    const AxiomReport rep = verify_dual_structure(m, n);
    EXPECT_TRUE(rep.passed()) << m << "," << n;
    EXPECT_EQ(rep.check("dual-product-table").cases, static_cast<std::size_t>(m * m * n * n * n * n));
  }
  EXPECT_TRUE(verify_dual_structure(build_taft(3)).passed());
}

TEST(Radford, DualCopCoproductOfBeta) {
  const Family f = build_radford(2, 3);
  const std::uint64_t d = f.base->dim();
  const SparseTensorData expect =
      tensor::outer2(f.beta, f.dual_cop->unit(), d) + tensor::outer2(f.alpha_powers[2], f.beta, d);
  EXPECT_EQ(f.dual_cop->comult(f.beta), expect);
  EXPECT_EQ(f.dual_cop->apply_antipode(f.alpha), f.alpha_powers[5]);
  EXPECT_EQ(f.dual_cop->apply_antipode(f.beta), -f.dual->mul(f.alpha_powers[4], f.beta));
}

TEST(Radford, DualBasisFormula) {
  EXPECT_TRUE(verify_dual_basis_formula(2, 3).passed());
  EXPECT_TRUE(verify_dual_basis_formula(3, 2).passed());
  // y_00 = (1/mn) sum_k alpha^k is the projection onto 1.
  const Family f = build_radford(2, 3);
  SparseVec y00;
  for (const auto& a : f.alpha_powers) y00 = y00 + a;
  EXPECT_EQ(y00.scaled(CycNumber(*f.ctx, Rational(1, 6))), f.dual->basis(0));
}

TEST(Radford, MonomialLabels) {
  EXPECT_EQ(monomial_label(0, 0), "1");
  EXPECT_EQ(monomial_label(1, 0), "g");
  EXPECT_EQ(monomial_label(2, 1), "g^2x");
  EXPECT_EQ(monomial_label(0, 2), "x^2");
}
