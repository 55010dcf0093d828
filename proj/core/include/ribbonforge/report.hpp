#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ribbonforge/double.hpp"
#include "ribbonforge/radford.hpp"
#include "ribbonforge/ribbon.hpp"
#include "ribbonforge/verify.hpp"

namespace ribbonforge {

inline constexpr const char* kReportSchema = "ribbonforge-report-v1";

struct VerifyOptions {
  Depth depth = Depth::Generators;
  std::size_t full_bound = kDefaultFullBound;
  std::size_t budget = kDefaultDoubleBudget;
  std::uint64_t seed = 0;
  std::size_t samples = 64;
};

/// Every structural suite for one family member: H, H*, (H*)^cop, the dual
/// closed forms, D(H) and its R-matrix and Drinfeld element.
struct VerifyRun {
  std::string descriptor;
  int m = 0;
  int n = 0;
  std::size_t dim_h = 0;
  std::size_t dim_d = 0;
  VerifyOptions options;
  std::vector<AxiomReport> suites;

  bool passed() const;
  std::size_t failures() const;
};

/// Full depth is used for an algebra only when requested and its dimension is
/// within options.full_bound; otherwise generator depth. BudgetExceeded
/// propagates when dim D exceeds options.budget.
VerifyRun run_verify(const Family& f, const VerifyOptions& options);

/// JSON documents with stable key order and no timing, so equal inputs give
/// byte-identical output.
std::string verify_json(const VerifyRun& run);
std::string verify_text(const VerifyRun& run);
std::string ribbon_json(const Family& f, const DoubleData& dd, const RibbonReport& rep, std::size_t full_bound);
std::string ribbon_text(const Family& f, const DoubleData& dd, const RibbonReport& rep);

}  // namespace ribbonforge
