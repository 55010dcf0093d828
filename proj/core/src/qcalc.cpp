#include "ribbonforge/qcalc.hpp"

#include <string>

#include "ribbonforge/error.hpp"

namespace ribbonforge::qcalc {

CycNumber q_int(const CycContext& ctx, const CycNumber& q, std::int64_t n) {
  if (n < 0) throw UsageError("q-integer of a negative number");
  CycNumber sum(ctx);
  CycNumber p(ctx, 1);
  for (std::int64_t k = 0; k < n; ++k) {
    sum += p;
    p *= q;
  }
  return sum;
}

CycNumber q_factorial(const CycContext& ctx, const CycNumber& q, std::int64_t n) {
  if (n < 0) throw UsageError("q-factorial of a negative number");
  CycNumber out(ctx, 1);
  for (std::int64_t k = 1; k <= n; ++k) out *= q_int(ctx, q, k);
  return out;
}

CycNumber q_binomial(const CycContext& ctx, const CycNumber& q, std::int64_t n, std::int64_t i) {
  return QBinomialTable(ctx, q).binomial(n, i);
}

QBinomialTable::QBinomialTable(const CycContext& ctx, CycNumber q) : ctx_(&ctx), q_(std::move(q)) {
  rows_.push_back({CycNumber(ctx, 1)});
  q_pow_.push_back(CycNumber(ctx, 1));
  fact_.push_back(CycNumber(ctx, 1));
}

void QBinomialTable::extend_to(std::int64_t n) const {
  while (static_cast<std::int64_t>(rows_.size()) <= n) {
    const std::size_t m = rows_.size();
    while (q_pow_.size() <= m) q_pow_.push_back(q_pow_.back() * q_);
    const auto& prev = rows_.back();
    std::vector<CycNumber> row(m + 1);
    row[0] = CycNumber(*ctx_, 1);
    row[m] = CycNumber(*ctx_, 1);
    for (std::size_t i = 1; i < m; ++i) row[i] = q_pow_[i] * prev[i] + prev[i - 1];
    rows_.push_back(std::move(row));
  }
}

CycNumber QBinomialTable::binomial(std::int64_t n, std::int64_t i) const {
  if (n < 0 || i < 0 || i > n) {
    throw UsageError("q-binomial needs 0 <= i <= n, got n=" + std::to_string(n) + " i=" + std::to_string(i));
  }
  std::lock_guard lock(mu_);
  extend_to(n);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

CycNumber QBinomialTable::factorial(std::int64_t n) const {
  if (n < 0) throw UsageError("q-factorial of a negative number");
  std::lock_guard lock(mu_);
  while (static_cast<std::int64_t>(fact_.size()) <= n) {
    const auto k = static_cast<std::int64_t>(fact_.size());
    fact_.push_back(fact_.back() * q_int(*ctx_, q_, k));
  }
  return fact_[static_cast<std::size_t>(n)];
}

}  // namespace ribbonforge::qcalc
