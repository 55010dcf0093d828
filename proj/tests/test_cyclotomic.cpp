#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ribbonforge/cyclotomic.hpp"
#include "ribbonforge/error.hpp"

using namespace ribbonforge;
using cyc::CycNumber;

namespace {

using IntPoly = std::vector<long long>;  // constant term first

// Exact long division by a monic divisor.
IntPoly divide(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t s = quot.size(); s-- > 0;) {
    const long long c = num[s + dd];
    quot[s] = c;
    for (std::size_t t = 0; t <= dd; ++t) num[s + t] -= c * den[t];
  }
  for (long long r : num) EXPECT_EQ(r, 0);
  return quot;
}

IntPoly phi_oracle(int n) {
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide(p, phi_oracle(d));
  }
  return p;
}

std::complex<double> evaluate(const CycNumber& x, int order) {
  const std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / order);
  std::complex<double> out = 0;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    out += x.coeffs()[i].to_mpq().get_d() * std::pow(z, static_cast<double>(i));
  }
  return out;
}

CycNumber random_number(const cyc::CycContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<Rational> poly;
  for (int i = 0; i < 2 * ctx.degree() + 1; ++i) poly.emplace_back(c(rng), 1 + (c(rng) + 9) % 4);
  return CycNumber::from_polynomial(ctx, poly);
}

}  // namespace

TEST(Cyclotomic, PolynomialsMatchDivisionOracle) {
  for (int n = 1; n <= 36; ++n) {
    const auto ctx = cyc::make_context(n);
    const IntPoly expect = phi_oracle(n);
    ASSERT_EQ(ctx->phi().size(), expect.size()) << "N = " << n;
    for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(ctx->phi()[i], expect[i]) << "N = " << n;
  }
  EXPECT_EQ(cyc::make_context(4)->phi(), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyc::make_context(6)->phi(), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyc::make_context(1)->degree(), 1);
}

TEST(Cyclotomic, RejectsNonPositiveOrder) {
  EXPECT_THROW(cyc::make_context(0), UsageError);
  EXPECT_THROW(cyc::make_context(-3), UsageError);
}

TEST(Cyclotomic, ContextsAreInterned) { EXPECT_EQ(cyc::make_context(12), cyc::make_context(12)); }

TEST(Cyclotomic, RootPowers) {
  const auto c4 = cyc::make_context(4);
  EXPECT_EQ(cyc::root_power(*c4, 2), CycNumber(*c4, -1));
  EXPECT_EQ(cyc::root_power(*c4, 2).coeffs().size(), 2u);
  const auto c6 = cyc::make_context(6);
  EXPECT_TRUE(cyc::root_power(*c6, 0).is_one());
  EXPECT_EQ(cyc::root_power(*c6, 7), cyc::root_power(*c6, 1));
  EXPECT_EQ(cyc::root_power(*c6, -1), cyc::root_power(*c6, 5));
}

TEST(Cyclotomic, Primitivity) {
  for (int n : {1, 2, 3, 4, 6, 8, 9, 12, 16}) {
    const auto ctx = cyc::make_context(n);
    const CycNumber z = cyc::root_power(*ctx, 1);
    EXPECT_TRUE(z.pow(n).is_one());
    for (int k = 1; k < n; ++k) EXPECT_FALSE(z.pow(k).is_one()) << n << " " << k;
  }
}

TEST(Cyclotomic, PhiVanishesAtZeta) {
  for (int n : {5, 6, 12, 18}) {
    const auto ctx = cyc::make_context(n);
    CycNumber acc(*ctx);
    for (std::size_t i = 0; i < ctx->phi().size(); ++i) {
      acc += CycNumber(*ctx, ctx->phi()[i]) * cyc::root_power(*ctx, static_cast<std::int64_t>(i));
    }
    EXPECT_TRUE(acc.is_zero());
  }
}

TEST(Cyclotomic, SmallIdentities) {
  const auto ctx = cyc::make_context(6);
  const CycNumber z = cyc::root_power(*ctx, 1);
  const CycNumber one(*ctx, 1);
  CycNumber sum(*ctx);
  for (int k = 0; k < 6; ++k) sum += z.pow(k);
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(z.inverse(), z.pow(5));
  EXPECT_EQ((one + z) * (one - z), CycNumber(*ctx, 2) - z);
  EXPECT_EQ(z.str(), "1*z (mod Phi_6)");
}

TEST(Cyclotomic, InverseOfZeroThrows) {
  const auto ctx = cyc::make_context(5);
  EXPECT_THROW(CycNumber(*ctx).inverse(), DivisionByZero);
  EXPECT_THROW(CycNumber(*ctx, 1) / CycNumber(*ctx), DivisionByZero);
}

TEST(Cyclotomic, MixedFieldsRejected) {
  const auto a = cyc::make_context(5);
  const auto b = cyc::make_context(7);
  EXPECT_THROW(cyc::root_power(*a, 1) + cyc::root_power(*b, 1), MismatchError);
}

TEST(Cyclotomic, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(11);
  for (int n : {6, 12, 9}) {
    const auto ctx = cyc::make_context(n);
    for (int t = 0; t < 40; ++t) {
      const CycNumber a = random_number(*ctx, rng), b = random_number(*ctx, rng), c = random_number(*ctx, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b - b, a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

// Numerical evaluation at exp(2 pi i / N) is an independent check of the
// reduction modulo Phi_N.
TEST(Cyclotomic, ProductsAgreeWithComplexEvaluation) {
  std::mt19937_64 rng(3);
  for (int n : {5, 8, 12, 15}) {
    const auto ctx = cyc::make_context(n);
    for (int t = 0; t < 30; ++t) {
      const CycNumber a = random_number(*ctx, rng), b = random_number(*ctx, rng);
      EXPECT_LT(std::abs(evaluate(a * b, n) - evaluate(a, n) * evaluate(b, n)), 1e-6);
      if (!b.is_zero()) EXPECT_LT(std::abs(evaluate(a / b, n) - evaluate(a, n) / evaluate(b, n)), 1e-6);
    }
  }
}
