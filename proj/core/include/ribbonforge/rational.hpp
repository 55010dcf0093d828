#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ribbonforge {

/// Exact rational number.
///
/// Values whose numerator and denominator both fit in an int64 are stored
/// inline; anything larger spills to a heap-allocated mpq_class. The
/// representation is canonical: a value that fits inline is never stored
/// big, so equality of two inline values is a field comparison.
///
/// Structure constants of the algebras built here are almost always small
/// integers, so the inline path (no gcd when both denominators are 1) is the
/// hot one.
class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(std::int64_t n) noexcept : num_(n), den_(1) {}  // NOLINT: implicit by design of numeric literals
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept;
  ~Rational();

  bool is_zero() const noexcept { return den_ != 0 && num_ == 0; }
  bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
  bool is_integer() const;
  bool is_inline() const noexcept { return den_ != 0; }
  int sign() const;

  mpq_class to_mpq() const;
  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  /// *this += a * b
  void add_product(const Rational& a, const Rational& b);
  /// *this -= a * b
  void sub_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(const Rational& lhs, const Rational& rhs);
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  using i128 = __int128;

  static Rational from_i128(i128 num, i128 den);
  static Rational from_mpq(mpq_class&& q);
  mpq_class* big() const noexcept { return big_; }
  void release() noexcept;

  // den_ == 0 marks the big representation; big_ then owns the value.
  union {
    std::int64_t num_;
    mpq_class* big_;
  };
  std::int64_t den_;
};

}  // namespace ribbonforge
