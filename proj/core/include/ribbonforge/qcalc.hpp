#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "ribbonforge/cyclotomic.hpp"

namespace ribbonforge::qcalc {

using cyc::CycContext;
using cyc::CycNumber;

/// (n)_q = 1 + q + ... + q^(n-1); (0)_q = 0.
CycNumber q_int(const CycContext& ctx, const CycNumber& q, std::int64_t n);

/// (n)!_q = (1)_q (2)_q ... (n)_q; (0)!_q = 1.
CycNumber q_factorial(const CycContext& ctx, const CycNumber& q, std::int64_t n);

/// Gaussian binomial via the q-Pascal recursion
///   [n, i] = q^i [n-1, i] + [n-1, i-1],
/// which stays well defined at roots of unity. Throws UsageError unless 0 <= i <= n.
CycNumber q_binomial(const CycContext& ctx, const CycNumber& q, std::int64_t n, std::int64_t i);

/// Memoised Pascal table for one fixed q. Thread-safe; rows are only appended.
class QBinomialTable {
 public:
  QBinomialTable(const CycContext& ctx, CycNumber q);

  const CycNumber& q() const noexcept { return q_; }
  CycNumber binomial(std::int64_t n, std::int64_t i) const;
  CycNumber factorial(std::int64_t n) const;

 private:
  void extend_to(std::int64_t n) const;

  const CycContext* ctx_;
  CycNumber q_;
  mutable std::mutex mu_;
  mutable std::vector<std::vector<CycNumber>> rows_;
  mutable std::vector<CycNumber> q_pow_;
  mutable std::vector<CycNumber> fact_;
};

}  // namespace ribbonforge::qcalc
