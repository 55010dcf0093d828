#include <gtest/gtest.h>

#include <cstdlib>

#include "ribbonforge/double.hpp"
#include "ribbonforge/error.hpp"
#include "ribbonforge/integrals.hpp"

using namespace ribbonforge;
using cyc::CycNumber;

namespace {

struct Built {
  Family f;
  DoubleData dd;
};

const Built& d21() {
  static const Built b = [] {
    Family f = build_radford(2, 1);
    DoubleData dd = build_double(f);
    return Built{std::move(f), std::move(dd)};
  }();
  return b;
}

const Built& d23() {
  static const Built b = [] {
    Family f = build_radford(2, 3);
    DoubleData dd = build_double(f);
    return Built{std::move(f), std::move(dd)};
  }();
  return b;
}

// (eps ⋈ a)(f ⋈ 1) = sum (a_1 -> f <- S^-1(a_3)) ⋈ a_2, evaluated with the
// generic harpoon actions of H on H*.
SparseVec straighten_oracle(const Family& fam, const DoubleData& dd, std::uint32_t a, std::uint32_t f) {
  const HopfAlgebra& h = *fam.base;
  const std::uint64_t d = h.dim();
  const SparseTensorData d2 = tensor::comult_leg(h, h.comult(a), 0);  // keys (a1 * d + a2) * d + a3
  SparseVec out;
  const Element fe = Element::basis(fam.dual, f);
  for (const auto& [key, c] : d2) {
    const auto a1 = static_cast<std::uint32_t>(key / (d * d));
    const auto a2 = static_cast<std::uint32_t>(key / d % d);
    const auto a3 = static_cast<std::uint32_t>(key % d);
    const Element left = act_left(Element::basis(fam.base, a1), fe);
    const Element both = act_right(left, Element(fam.base, h.apply_antipode_inv(h.basis(a3))));
    out = out + dd.pure(both.coeffs(), h.basis(a2)).scaled(c);
  }
  return out;
}

}  // namespace

TEST(Double, DimensionsLabelsAndUnit) {
  const DoubleData& dd = d23().dd;
  EXPECT_EQ(dd.dim(), 324u);
  EXPECT_EQ(dd.dbl->name(), "D(R(2,3))");
  EXPECT_EQ(dd.dbl->label(dd.index(d23().f.index(1, 0), 0)), "(g)*⋈1");
  EXPECT_EQ(dd.dbl->unit(), dd.pure(d23().f.dual->unit(), d23().f.base->unit()));
  for (std::uint32_t b = 0; b < dd.dim(); b += 17) {
    EXPECT_EQ(dd.dbl->mul(dd.dbl->unit(), dd.dbl->basis(b)), dd.dbl->basis(b));
  }
}

TEST(Double, StraighteningMatchesHarpoonFormula) {
  for (const Built* b : {&d21(), &d23()}) {
    const HopfAlgebra& D = *b->dd.dbl;
    const std::uint32_t d = b->dd.d;
    for (std::uint32_t a = 0; a < d; ++a) {
      for (std::uint32_t f = 0; f < d; ++f) {
        const SparseVec lhs = D.mul(b->dd.from_base(b->f.base->basis(a)), b->dd.from_dual(b->f.dual->basis(f)));
        EXPECT_EQ(lhs, straighten_oracle(b->f, b->dd, a, f)) << b->f.base->label(a) << " * " << b->f.dual->label(f);
      }
    }
  }
}

TEST(Double, GrouplikeStraightening) {
  const Built& b = d23();
  const SparseVec g = b.dd.from_base(b.f.g_x(1, 0));
  const SparseVec a = b.dd.from_dual(b.f.alpha);
  // g is grouplike, so the two harpoons cancel on the character-free part.
  EXPECT_EQ(b.dd.dbl->mul(b.dd.dbl->mul(g, a), b.dd.from_base(b.f.g_x(-1, 0))),
            b.dd.from_dual(act_right(act_left(Element(b.f.base, b.f.g_x(1, 0)), Element(b.f.dual, b.f.alpha)),
                                     Element(b.f.base, b.f.g_x(-1, 0)))
                               .coeffs()));
}

TEST(Double, CounitFormula) {
  const Built& b = d23();
  for (std::uint32_t f = 0; f < b.dd.d; ++f) {
    for (std::uint32_t a = 0; a < b.dd.d; ++a) {
      const CycNumber expect = b.f.base->counit(a) * (f == 0 ? CycNumber(*b.f.ctx, 1) : CycNumber(*b.f.ctx));
      EXPECT_EQ(b.dd.dbl->counit(b.dd.index(f, a)), expect);
    }
  }
}

TEST(Double, RMatrixShape) {
  const Built& b = d23();
  EXPECT_EQ(b.dd.r_summands(), 18u);
  // (eps (x) id) R = (id (x) eps) R = 1.
  EXPECT_EQ(tensor::counit_leg(*b.dd.dbl, b.dd.r, 0), b.dd.dbl->unit());
  EXPECT_EQ(tensor::counit_leg(*b.dd.dbl, b.dd.r, 1), b.dd.dbl->unit());
  EXPECT_EQ(tensor::mul2(*b.dd.dbl, *b.dd.dbl, b.dd.r, b.dd.r_inv), tensor::outer2(b.dd.dbl->unit(), b.dd.dbl->unit(), b.dd.dim()));
}

TEST(Double, StructureSuitesPass) {
  for (const Built* b : {&d21(), &d23()}) {
    EXPECT_TRUE(verify_double_structure(b->dd).passed()) << b->f.descriptor;
    EXPECT_TRUE(verify_quasitriangular(b->dd, Depth::Full).passed()) << b->f.descriptor;
    EXPECT_TRUE(verify_drinfeld_u(b->dd, Depth::Generators).passed()) << b->f.descriptor;
    EXPECT_TRUE(verify_explicit_r_and_u(b->f, b->dd).passed()) << b->f.descriptor;
  }
  EXPECT_TRUE(verify_hopf_axioms(*d21().dd.dbl, Depth::Full).passed());
  EXPECT_TRUE(verify_hopf_axioms(*d23().dd.dbl, Depth::Generators).passed());
}

TEST(Double, DrinfeldElement) {
  const Built& b = d23();
  const HopfAlgebra& D = *b.dd.dbl;
  EXPECT_EQ(b.dd.u, drinfeld_u(b.dd));
  EXPECT_TRUE(D.counit(b.dd.u).is_one());
  EXPECT_EQ(D.mul(b.dd.u, b.dd.u_inv), D.unit());
  const SparseVec su = D.apply_antipode(b.dd.u);
  EXPECT_EQ(D.mul(b.dd.u, su), D.mul(su, b.dd.u));
  for (const auto& a : D.generators()) {
    EXPECT_EQ(D.mul(D.mul(b.dd.u, a.value), b.dd.u_inv), D.apply_antipode(D.apply_antipode(a.value))) << a.name;
  }
}

TEST(Double, Unimodular) {
  const HopfAlgebra& D = *d23().dd.dbl;
  const auto left = left_integrals(D, Depth::Generators);
  const auto right = right_integrals(D, Depth::Generators);
  ASSERT_EQ(left.size(), 1u);
  EXPECT_EQ(left, right);
}

TEST(Double, CorruptedRMatrixFailsChecks) {
  DoubleData dd = d21().dd;
  dd.r = dd.r + SparseTensorData::single(dd.index(0, 1) * dd.dim() + dd.index(0, 0), CycNumber(dd.dbl->ctx(), 1));
  EXPECT_FALSE(verify_quasitriangular(dd, Depth::Full).passed());
}

TEST(Double, BudgetIsEnforced) {
  const Family f = build_radford(4, 4);
  try {
    build_double(f);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.dimension(), 4096u);
    EXPECT_STREQ(e.what(), "dim 4096 exceeds budget 2048");
  }
  EXPECT_THROW(build_double(build_radford(2, 3), 100), BudgetExceeded);
}

TEST(Double, BudgetFromEnvironment) {
  ::setenv("RIBBONFORGE_BUDGET", "5000", 1);
  EXPECT_EQ(double_budget(), 5000u);
  ::setenv("RIBBONFORGE_BUDGET", "lots", 1);
  EXPECT_THROW(double_budget(), UsageError);
  ::unsetenv("RIBBONFORGE_BUDGET");
  EXPECT_EQ(double_budget(), kDefaultDoubleBudget);
}
