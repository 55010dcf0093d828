#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ribbonforge/rational.hpp"

namespace ribbonforge::cyc {

/// The cyclotomic field Q(z) with z a primitive N-th root of unity, presented
/// as Q[x] / Phi_N(x). Immutable and shared; obtain instances through
/// make_context(), which interns one context per order.
class CycContext {
 public:
  explicit CycContext(std::int64_t order);

  std::int64_t order() const noexcept { return order_; }
  /// phi(N), the degree of Phi_N.
  int degree() const noexcept { return static_cast<int>(phi_.size()) - 1; }
  /// Integer coefficients of Phi_N, constant term first; monic.
  const std::vector<std::int64_t>& phi() const noexcept { return phi_; }
  const std::vector<Rational>& phi_rational() const noexcept { return phi_q_; }

 private:
  std::int64_t order_;
  std::vector<std::int64_t> phi_;
  std::vector<Rational> phi_q_;
};

using ContextPtr = std::shared_ptr<const CycContext>;

/// Interned context for Q(zeta_N). Rejects N < 1.
ContextPtr make_context(std::int64_t order);

/// Phi_N by exact division of x^N - 1 by the product of Phi_d over proper
/// divisors d of N. Constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t order);

/// Exact element of Q(zeta_N): coefficient vector in the power basis
/// 1, z, ..., z^(phi(N)-1).
///
/// Zero is stored with an empty coefficient vector; every nonzero value
/// carries exactly phi(N) coefficients. A default-constructed number is a
/// zero not yet bound to a field and adopts the field of the first operand
/// it is combined with.
class CycNumber {
 public:
  using Coeffs = boost::container::small_vector<Rational, 4>;

  CycNumber() = default;
  explicit CycNumber(const CycContext& ctx) : ctx_(&ctx) {}
  CycNumber(const CycContext& ctx, const Rational& value);

  /// Reduces an arbitrary-length polynomial in z modulo Phi_N.
  static CycNumber from_polynomial(const CycContext& ctx, std::span<const Rational> poly);

  const CycContext* context() const noexcept { return ctx_; }
  const Coeffs& coeffs() const noexcept { return c_; }
  /// Coefficient of z^i (zero if out of range).
  Rational coeff(int i) const;

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const;
  /// True when the value lies in Q.
  bool is_rational() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);
  CycNumber& operator*=(const Rational& rhs);

  /// *this += a * b without materialising the product when one side is rational.
  void add_product(const CycNumber& a, const CycNumber& b);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(CycNumber a, const Rational& b) { return a *= b; }
  friend CycNumber operator*(const Rational& b, CycNumber a) { return a *= b; }

  /// Throws DivisionByZero on zero.
  CycNumber inverse() const;
  CycNumber pow(std::int64_t k) const;
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  /// "c0 + c1*z + c2*z^2" over the nonzero terms, "0" for zero.
  std::string str_short() const;
  /// Canonical form used in reports: str_short() + " (mod Phi_N)".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const CycNumber& x);

 private:
  const CycContext* bind(const CycNumber& other) const;
  void normalize_zero();

  const CycContext* ctx_ = nullptr;
  Coeffs c_;
};

/// z^k reduced to canonical form; k is taken modulo N.
CycNumber root_power(const CycContext& ctx, std::int64_t k);

/// The rational constant r in ctx.
inline CycNumber constant(const CycContext& ctx, const Rational& r) { return CycNumber(ctx, r); }

}  // namespace ribbonforge::cyc
