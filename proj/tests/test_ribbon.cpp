#include <gtest/gtest.h>

#include <algorithm>

#include "ribbonforge/ribbon.hpp"

using namespace ribbonforge;

namespace {

struct Classified {
  Family f;
  DoubleData dd;
  RibbonReport rep;
};

Classified classify(int m, int n) {
  Family f = m == 1 ? build_taft(n) : build_radford(m, n);
  DoubleData dd = build_double(f);
  RibbonReport rep = classify_ribbon(f, dd);
  return {std::move(f), std::move(dd), std::move(rep)};
}

const Classified& c23() {
  static const Classified c = classify(2, 3);
  return c;
}

const Classified& c33() {
  static const Classified c = classify(3, 3);
  return c;
}

bool contains(const std::vector<SparseVec>& vs, const SparseVec& v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

}  // namespace

TEST(Ribbon, CountsFollowParityLaw) {
  for (int m : {2, 3}) {
    for (int n : {1, 2, 3}) {
      const Classified c = classify(m, n);
      EXPECT_TRUE(c.rep.passed()) << c.f.descriptor;
      EXPECT_EQ(c.rep.quasi_ribbon_count > 0, n % 2 == 1) << c.f.descriptor;
      EXPECT_EQ(c.rep.ribbon_count, expected_ribbon_count(m, n)) << c.f.descriptor;
      EXPECT_EQ(c.rep.ribbon_count, c.rep.ribbon_elements.size());
    }
  }
  EXPECT_EQ(expected_ribbon_count(2, 2), 0u);
  EXPECT_EQ(expected_ribbon_count(3, 3), 1u);
  EXPECT_EQ(expected_ribbon_count(2, 3), 2u);
}

TEST(Ribbon, TaftCrossCheck) {
  EXPECT_EQ(classify(1, 2).rep.ribbon_count, 0u);
  EXPECT_EQ(classify(1, 3).rep.ribbon_count, 1u);
}

TEST(Ribbon, DistinguishedElementsOfTheDouble) {
  const Classified& c = c23();
  const DoubleData& dd = c.dd;
  EXPECT_EQ(c.rep.g_alpha, dd.dbl->unit());
  EXPECT_EQ(c.rep.h_alpha, dd.pure(c.f.alpha_powers[2], c.f.g_x(2, 0)));
  EXPECT_EQ(c.rep.double_g_tilde, dd.pure(c.f.alpha_beta_word(-2, 0), c.f.g_x(4, 0)));
  EXPECT_EQ(c.rep.grouplikes_double, 18u);
  // Trivial distinguished data gives h = 1.
  const Classified g = classify(3, 1);
  EXPECT_EQ(g.rep.h_alpha, g.dd.pure(g.f.alpha_beta_word(3, 0), g.f.g_x(0, 0)));
  EXPECT_EQ(g.rep.h_alpha, g.dd.dbl->unit());
}

TEST(Ribbon, SquareRootInventoryFor23) {
  const Classified& c = c23();
  EXPECT_EQ(c.rep.grouplike_roots.size(), 2u);
  ASSERT_EQ(c.rep.monomial_roots.size(), 4u);
  std::vector<std::string> ribbon_roots, other_roots;
  for (const auto& r : c.rep.monomial_roots) (r.is_ribbon ? ribbon_roots : other_roots).push_back(r.name);
  EXPECT_EQ(ribbon_roots, (std::vector<std::string>{"alpha^4⋈g", "alpha^4⋈g^4"}));
  EXPECT_EQ(other_roots, (std::vector<std::string>{"alpha⋈g", "alpha⋈g^4"}));
  for (const auto& r : c.rep.monomial_roots) {
    EXPECT_EQ(r.grouplike, r.is_ribbon) << r.name;
    EXPECT_EQ(r.s2_conjugation, r.is_ribbon) << r.name;
  }
}

TEST(Ribbon, UniqueRootForOddOrder) {
  ASSERT_EQ(c33().rep.grouplike_roots.size(), 1u);
  EXPECT_EQ(c33().rep.grouplike_roots[0].name, "alpha^6⋈g");
}

TEST(Ribbon, CertificatesAreConsistent) {
  for (const Classified* c : {&c23(), &c33()}) {
    const HopfAlgebra& H = *c->f.base;
    const HopfAlgebra& Hd = *c->f.dual;
    for (const auto& cert : c->rep.certificates) {
      EXPECT_EQ(Hd.mul(cert.gamma, cert.gamma), c->rep.alpha_tilde);
      EXPECT_EQ(H.mul(cert.h, cert.h), c->rep.g_tilde);
      EXPECT_EQ(cert.quasi_ribbon, c->dd.dbl->mul(c->dd.u, c->dd.pure(Hd.apply_antipode(cert.gamma), H.apply_antipode(cert.h))));
      EXPECT_TRUE(cert.is_quasi_ribbon);
      EXPECT_EQ(cert.s2_condition, cert.is_ribbon);
    }
  }
}

TEST(Ribbon, ExplicitElementsEqualClassification) {
  for (const Classified* c : {&c23(), &c33()}) {
    const auto formulas = explicit_ribbon_formulas(c->f, c->dd);
    ASSERT_EQ(formulas.size(), c->rep.ribbon_elements.size());
    for (const auto& v : formulas) {
      EXPECT_TRUE(contains(c->rep.ribbon_elements, v));
      EXPECT_TRUE(verify_ribbon_axioms(c->dd, v, Depth::Generators).passed());
    }
  }
  const Classified g = classify(2, 1);
  const auto formulas = explicit_ribbon_formulas(g.f, g.dd);
  ASSERT_EQ(formulas.size(), 2u);
  EXPECT_EQ(formulas[0], g.dd.dbl->mul(g.dd.u, g.dd.pure(g.f.alpha_powers[0], g.f.g_x(0, 0))));
  EXPECT_EQ(formulas[1], g.dd.dbl->mul(g.dd.u, g.dd.pure(g.f.alpha_powers[0], g.f.g_x(1, 0))));
  for (const auto& v : formulas) EXPECT_TRUE(contains(g.rep.ribbon_elements, v));
}

TEST(Ribbon, FullCentralityAgreesWithGenerators) {
  const Classified& c = c23();
  for (const auto& v : c.rep.ribbon_elements) {
    const AxiomReport full = verify_ribbon_axioms(c.dd, v, Depth::Full);
    EXPECT_TRUE(full.passed());
    EXPECT_EQ(full.check("central").cases, 324u);
    EXPECT_TRUE(verify_ribbon_axioms(c.dd, v, Depth::Generators).check("central").passed);
  }
}

TEST(Ribbon, UnitIsNotRibbon) {
  for (const Classified* c : {&c23(), &c33()}) {
    const HopfAlgebra& D = *c->dd.dbl;
    ASSERT_NE(D.mul(c->dd.u, D.apply_antipode(c->dd.u)), D.unit());
    const AxiomReport rep = verify_ribbon_axioms(c->dd, D.unit(), Depth::Generators);
    EXPECT_FALSE(rep.check("square").passed);
    EXPECT_TRUE(rep.check("invertible").passed);
    EXPECT_TRUE(rep.check("central").passed);
  }
}

TEST(Ribbon, NonCentralElementWitness) {
  const Classified& c = c23();
  const HopfAlgebra& D = *c.dd.dbl;
  const SparseVec v = D.mul(c.dd.u, c.dd.from_base(c.f.g_x(1, 0)));
  const AxiomReport rep = verify_ribbon_axioms(c.dd, v, Depth::Generators);
  EXPECT_FALSE(rep.check("central").passed);
  EXPECT_NE(rep.check("central").witness.find("eps⋈"), std::string::npos);
  EXPECT_FALSE(verify_ribbon_axioms(c.dd, SparseVec(), Depth::Generators).check("invertible").passed);
}

TEST(Ribbon, RibbonElementCommutesWithX) {
  const Classified& c = c23();
  const HopfAlgebra& D = *c.dd.dbl;
  const SparseVec x = c.dd.from_base(c.f.g_x(0, 1));
  for (const auto& v : c.rep.ribbon_elements) EXPECT_TRUE((D.mul(v, x) - D.mul(x, v)).empty());
}
