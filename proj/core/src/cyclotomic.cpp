#include "ribbonforge/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "ribbonforge/error.hpp"

namespace ribbonforge::cyc {

namespace {

using Poly = std::vector<std::int64_t>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
Poly poly_div_exact(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Error("cyclotomic division: divisor degree too large");
  Poly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const std::int64_t c = num[k];
    quot[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dd; ++t) num[k - dd + t] -= c * den[t];
  }
  for (std::size_t t = 0; t < dd; ++t) {
    if (num[t] != 0) throw Error("cyclotomic division left a nonzero remainder");
  }
  return quot;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t order) {
  if (order < 1) throw UsageError("cyclotomic order must be positive, got " + std::to_string(order));
  static std::mutex mu;
  static std::map<std::int64_t, Poly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(order); it != memo.end()) return it->second;
  }
  Poly divisor{1};
  for (std::int64_t d = 1; d < order; ++d) {
    if (order % d == 0) divisor = poly_mul(divisor, cyclotomic_polynomial(d));
  }
  Poly xn(static_cast<std::size_t>(order) + 1, 0);
  xn[0] = -1;
  xn[static_cast<std::size_t>(order)] = 1;
  Poly phi = poly_div_exact(std::move(xn), divisor);
  std::lock_guard lock(mu);
  memo.emplace(order, phi);
  return phi;
}

CycContext::CycContext(std::int64_t order) : order_(order), phi_(cyclotomic_polynomial(order)) {
  phi_q_.reserve(phi_.size());
  for (auto c : phi_) phi_q_.emplace_back(c);
}

ContextPtr make_context(std::int64_t order) {
  if (order < 1) throw UsageError("cyclotomic order must be positive, got " + std::to_string(order));
  static std::mutex mu;
  static std::map<std::int64_t, ContextPtr> interned;
  std::lock_guard lock(mu);
  auto& slot = interned[order];
  if (!slot) slot = std::make_shared<const CycContext>(order);
  return slot;
}

CycNumber::CycNumber(const CycContext& ctx, const Rational& value) : ctx_(&ctx) {
  if (value.is_zero()) return;
  c_.resize(static_cast<std::size_t>(ctx.degree()));
  c_[0] = value;
}

CycNumber CycNumber::from_polynomial(const CycContext& ctx, std::span<const Rational> poly) {
  const auto d = static_cast<std::size_t>(ctx.degree());
  boost::container::small_vector<Rational, 12> raw(poly.begin(), poly.end());
  if (raw.size() < d) raw.resize(d);
  const auto& phi = ctx.phi_rational();
  for (std::size_t k = raw.size(); k-- > d;) {
    if (raw[k].is_zero()) continue;
    const Rational c = raw[k];
    for (std::size_t t = 0; t < d; ++t) {
      if (!phi[t].is_zero()) raw[k - d + t].sub_product(c, phi[t]);
    }
  }
  CycNumber out(ctx);
  out.c_.assign(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(d));
  out.normalize_zero();
  return out;
}

Rational CycNumber::coeff(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return Rational();
  return c_[static_cast<std::size_t>(i)];
}

bool CycNumber::is_one() const { return is_rational() && !c_.empty() && c_[0].is_one(); }

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

const CycContext* CycNumber::bind(const CycNumber& other) const {
  if (ctx_ == nullptr) return other.ctx_;
  if (other.ctx_ != nullptr && other.ctx_ != ctx_) {
    throw MismatchError("cyclotomic operands from different fields: Q(z_" + std::to_string(ctx_->order()) +
                        ") vs Q(z_" + std::to_string(other.ctx_->order()) + ")");
  }
  return ctx_;
}

void CycNumber::normalize_zero() {
  for (const auto& c : c_) {
    if (!c.is_zero()) return;
  }
  c_.clear();
}

CycNumber CycNumber::operator-() const {
  CycNumber out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  ctx_ = bind(rhs);
  if (rhs.c_.empty()) return *this;
  if (c_.empty()) {
    c_ = rhs.c_;
    return *this;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  normalize_zero();
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) {
  ctx_ = bind(rhs);
  if (rhs.c_.empty()) return *this;
  if (c_.empty()) {
    c_ = rhs.c_;
    for (auto& c : c_) c = -c;
    return *this;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  normalize_zero();
  return *this;
}

CycNumber& CycNumber::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= rhs;
  return *this;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  const CycContext* ctx = a.bind(b);
  CycNumber out;
  out.ctx_ = ctx;
  if (a.c_.empty() || b.c_.empty()) return out;
  if (a.is_rational()) {
    out.c_ = b.c_;
    for (auto& c : out.c_) c *= a.c_[0];
    return out;
  }
  if (b.is_rational()) {
    out.c_ = a.c_;
    for (auto& c : out.c_) c *= b.c_[0];
    return out;
  }
  const std::size_t d = a.c_.size();
  boost::container::small_vector<Rational, 12> raw(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!b.c_[j].is_zero()) raw[i + j].add_product(a.c_[i], b.c_[j]);
    }
  }
  const auto& phi = ctx->phi_rational();
  for (std::size_t k = raw.size(); k-- > d;) {
    if (raw[k].is_zero()) continue;
    const Rational c = raw[k];
    for (std::size_t t = 0; t < d; ++t) {
      if (!phi[t].is_zero()) raw[k - d + t].sub_product(c, phi[t]);
    }
  }
  out.c_.assign(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(d));
  out.normalize_zero();
  return out;
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs) {
  *this = *this * rhs;
  return *this;
}

void CycNumber::add_product(const CycNumber& a, const CycNumber& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  if (a.is_rational() && (c_.empty() || b.ctx_ == ctx_)) {
    ctx_ = bind(b);
    if (c_.empty()) c_.resize(b.c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i].add_product(a.c_[0], b.c_[i]);
    normalize_zero();
    return;
  }
  *this += a * b;
}

CycNumber CycNumber::inverse() const {
  if (c_.empty()) throw DivisionByZero("inverse of cyclotomic zero");
  if (is_rational()) return CycNumber(*ctx_, c_[0].inverse());
  // Solve (a * z^j)_j x = e_0 over Q; the multiplication matrix of a nonzero
  // field element is invertible.
  const std::size_t d = c_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  CycNumber col = *this;
  const CycNumber z = root_power(*ctx_, 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeff(static_cast<int>(i));
    col *= z;
  }
  m[0][d] = Rational(1);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && m[p][c].is_zero()) ++p;
    if (p == d) throw Error("singular multiplication matrix for a nonzero cyclotomic number");
    std::swap(m[p], m[c]);
    const Rational inv = m[c][c].inverse();
    for (auto& v : m[c]) v *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k].sub_product(f, m[c][k]);
    }
  }
  CycNumber out(*ctx_);
  out.c_.resize(d);
  for (std::size_t i = 0; i < d; ++i) out.c_[i] = m[i][d];
  out.normalize_zero();
  return out;
}

CycNumber CycNumber::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  if (ctx_ == nullptr) throw MismatchError("pow of an unbound cyclotomic number");
  CycNumber result(*ctx_, Rational(1));
  CycNumber base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.c_.empty() || b.c_.empty()) return a.c_.empty() && b.c_.empty();
  if (a.ctx_ != b.ctx_) return false;
  return a.c_ == b.c_;
}

std::string CycNumber::str_short() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[i].str();
    if (i == 1) out += "*z";
    if (i > 1) out += "*z^" + std::to_string(i);
  }
  return out;
}

std::string CycNumber::str() const {
  const std::int64_t n = ctx_ ? ctx_->order() : 1;
  return str_short() + " (mod Phi_" + std::to_string(n) + ")";
}

std::ostream& operator<<(std::ostream& os, const CycNumber& x) { return os << x.str(); }

CycNumber root_power(const CycContext& ctx, std::int64_t k) {
  const std::int64_t n = ctx.order();
  std::int64_t e = k % n;
  if (e < 0) e += n;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1);
  poly[static_cast<std::size_t>(e)] = Rational(1);
  return CycNumber::from_polynomial(ctx, poly);
}

}  // namespace ribbonforge::cyc
