#include "ribbonforge/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <utility>

#include "ribbonforge/error.hpp"

namespace ribbonforge {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so that negation never overflows.
bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void set_mpz(mpz_class& z, i128 v) {
  const bool neg = v < 0;
  u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (neg) mpz_neg(z.get_mpz_t(), z.get_mpz_t());
}

bool mpz_fits_inline(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min();
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(0), den_(1) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) {
  mpq_class copy(q);
  copy.canonicalize();
  *this = from_mpq(std::move(copy));
}

Rational::Rational(const Rational& other) : den_(other.den_) {
  if (other.den_ == 0) {
    big_ = new mpq_class(*other.big_);
  } else {
    num_ = other.num_;
  }
}

Rational::Rational(Rational&& other) noexcept : den_(other.den_) {
  if (other.den_ == 0) {
    big_ = other.big_;
    other.den_ = 1;
    other.num_ = 0;
  } else {
    num_ = other.num_;
  }
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  if (other.den_ == 0) {
    if (den_ == 0) {
      *big_ = *other.big_;
    } else {
      big_ = new mpq_class(*other.big_);
      den_ = 0;
    }
  } else {
    release();
    num_ = other.num_;
    den_ = other.den_;
  }
  return *this;
}

Rational& Rational::operator=(Rational&& other) noexcept {
  if (this == &other) return *this;
  release();
  den_ = other.den_;
  if (other.den_ == 0) {
    big_ = other.big_;
    other.den_ = 1;
    other.num_ = 0;
  } else {
    num_ = other.num_;
  }
  return *this;
}

Rational::~Rational() { release(); }

void Rational::release() noexcept {
  if (den_ == 0) {
    delete big_;
    den_ = 1;
    num_ = 0;
  }
}

Rational Rational::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den != 1) {
    const u128 g = gcd128(num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num), static_cast<u128>(den));
    if (g > 1) {
      num /= static_cast<i128>(g);
      den /= static_cast<i128>(g);
    }
  }
  Rational r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q;
  mpz_class tmp;
  set_mpz(tmp, num);
  q.get_num() = tmp;
  set_mpz(tmp, den);
  q.get_den() = tmp;
  q.canonicalize();
  return from_mpq(std::move(q));
}

Rational Rational::from_mpq(mpq_class&& q) {
  Rational r;
  if (mpz_fits_inline(q.get_num()) && mpz_fits_inline(q.get_den())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.big_ = new mpq_class(std::move(q));
  r.den_ = 0;
  return r;
}

bool Rational::is_integer() const {
  if (den_ != 0) return den_ == 1;
  return big_->get_den() == 1;
}

int Rational::sign() const {
  if (den_ != 0) return (num_ > 0) - (num_ < 0);
  return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
  if (den_ == 0) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Rational::str() const {
  if (den_ == 0) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (den_ != 0) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  mpq_class q = -*big_;
  return from_mpq(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of rational zero");
  if (den_ != 0) return from_i128(den_, num_);
  mpq_class q = 1 / *big_;
  return from_mpq(std::move(q));
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ != 0 && rhs.den_ != 0) {
    if (den_ == rhs.den_) {
      const i128 n = static_cast<i128>(num_) + rhs.num_;
      if (den_ == 1 && fits(n)) {
        num_ = static_cast<std::int64_t>(n);
        return *this;
      }
      *this = from_i128(n, den_);
      return *this;
    }
    const i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    const i128 d = static_cast<i128>(den_) * rhs.den_;
    *this = from_i128(n, d);
    return *this;
  }
  mpq_class q = to_mpq() + rhs.to_mpq();
  *this = from_mpq(std::move(q));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (rhs.den_ != 0) {
    Rational neg;
    neg.num_ = -rhs.num_;
    neg.den_ = rhs.den_;
    return *this += neg;
  }
  return *this += -rhs;
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t out;
      if (!__builtin_mul_overflow(a.num_, b.num_, &out) && out != std::numeric_limits<std::int64_t>::min()) {
        return Rational(out);
      }
    }
    return Rational::from_i128(static_cast<Rational::i128>(a.num_) * b.num_,
                               static_cast<Rational::i128>(a.den_) * b.den_);
  }
  mpq_class q = a.to_mpq() * b.to_mpq();
  return Rational::from_mpq(std::move(q));
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = *this * rhs;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  *this = *this * rhs.inverse();
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    std::int64_t p;
    std::int64_t s;
    if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &s) &&
        s != std::numeric_limits<std::int64_t>::min()) {
      num_ = s;
      return;
    }
  }
  *this += a * b;
}

void Rational::sub_product(const Rational& a, const Rational& b) {
  if (den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    std::int64_t p;
    std::int64_t s;
    if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_sub_overflow(num_, p, &s) &&
        s != std::numeric_limits<std::int64_t>::min()) {
      num_ = s;
      return;
    }
  }
  *this -= a * b;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.den_ != 0 || b.den_ != 0) return false;
  return *a.big_ == *b.big_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    return static_cast<Rational::i128>(a.num_) * b.den_ < static_cast<Rational::i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ribbonforge
