#include "ribbonforge/integrals.hpp"

#include "ribbonforge/error.hpp"
#include "ribbonforge/linalg.hpp"

namespace ribbonforge {

namespace {

std::vector<SparseVec> acting_set(const HopfAlgebra& h, Depth depth) {
  std::vector<SparseVec> out;
  if (depth == Depth::Full) {
    for (std::uint32_t i = 0; i < h.dim(); ++i) out.push_back(h.basis(i));
  } else {
    if (h.generators().empty()) throw UsageError(h.name() + " has no generating set");
    for (const auto& g : h.generators()) out.push_back(g.value);
  }
  return out;
}

// Rows of the system x t - eps(x) t = 0 (left) or t x - eps(x) t = 0 (right),
// unknowns the coordinates of t.
std::vector<SparseVec> integral_space(const HopfAlgebra& h, Depth depth, bool left) {
  const std::uint32_t d = h.dim();
  SparseMatrix a(h.ctx(), 0, d);
  for (const auto& x : acting_set(h, depth)) {
    const CycNumber ex = h.counit(x);
    // Column c of the operator t -> x t - eps(x) t is (x e_c - eps(x) e_c).
    std::vector<std::vector<SparseVec::Term>> rows(d);
    for (std::uint32_t c = 0; c < d; ++c) {
      const SparseVec prod = left ? h.mul(x, h.basis(c)) : h.mul(h.basis(c), x);
      SparseVec col = prod - h.basis(c).scaled(ex);
      for (const auto& [r, v] : col) rows[r].emplace_back(c, v);
    }
    for (auto& r : rows) {
      if (!r.empty()) a.rows.push_back(SparseVec::from_sorted(std::move(r)));
    }
  }
  return nullspace(a);
}

SparseVec unique_vector(std::vector<SparseVec> space, const std::string& what) {
  if (space.size() != 1) {
    throw VerificationFailure(what + " has dimension " + std::to_string(space.size()) + ", expected 1");
  }
  return std::move(space.front());
}

}  // namespace

std::vector<SparseVec> left_integrals(const HopfAlgebra& h, Depth depth) { return integral_space(h, depth, true); }

std::vector<SparseVec> right_integrals(const HopfAlgebra& h, Depth depth) { return integral_space(h, depth, false); }

SparseVec left_integral(const HopfAlgebra& h, Depth depth) {
  return unique_vector(left_integrals(h, depth), "left integral space of " + h.name());
}

SparseVec right_integral(const HopfAlgebra& h, Depth depth) {
  return unique_vector(right_integrals(h, depth), "right integral space of " + h.name());
}

SparseVec dual_right_integral(const HopfAlgebra& h) {
  const std::uint64_t d = h.dim();
  SparseMatrix a(h.ctx(), 0, d);
  for (std::uint32_t b = 0; b < d; ++b) {
    // coefficient of e_k in sum T(h_1) h_2 - T(h) 1, as a linear form in T
    std::vector<SparseTensorData::Term> entries;  // keyed k * d + i
    for (const auto& [key, c] : h.comult(b)) entries.emplace_back((key % d) * d + key / d, c);
    for (const auto& [k, c] : h.unit()) entries.emplace_back(k * d + b, -c);
    auto grouped = SparseTensorData::from_unsorted(std::move(entries));
    std::uint64_t current = d;  // sentinel
    std::vector<SparseVec::Term> row;
    for (const auto& [key, c] : grouped) {
      const std::uint64_t k = key / d;
      if (k != current && !row.empty()) {
        a.rows.push_back(SparseVec::from_sorted(std::move(row)));
        row.clear();
      }
      current = k;
      row.emplace_back(static_cast<std::uint32_t>(key % d), c);
    }
    if (!row.empty()) a.rows.push_back(SparseVec::from_sorted(std::move(row)));
  }
  return unique_vector(nullspace(a), "right integral space of the dual of " + h.name());
}

SparseVec distinguished_grouplike_dual(const HopfAlgebra& h, const SparseVec& t, Depth depth) {
  if (t.empty()) throw UsageError("distinguished grouplike needs a nonzero integral");
  const auto [lead, lead_c] = *t.begin();
  std::vector<SparseVec::Term> alpha;
  for (std::uint32_t b = 0; b < h.dim(); ++b) {
    const SparseVec th = h.mul(t, h.basis(b));
    const CycNumber ratio = th.coefficient(lead) / lead_c;
    if (th != t.scaled(ratio)) {
      throw VerificationFailure("t * " + h.label(b) + " is not proportional to the integral t in " + h.name());
    }
    if (!ratio.is_zero()) alpha.emplace_back(b, ratio);
  }
  SparseVec a = SparseVec::from_sorted(std::move(alpha));
  auto value = [&](const SparseVec& v) {
    CycNumber out(h.ctx());
    for (const auto& [k, c] : v) {
      if (const CycNumber* ak = a.find(k)) out.add_product(c, *ak);
    }
    return out;
  };
  if (!value(h.unit()).is_one()) throw VerificationFailure("distinguished character is not 1 on the unit");
  const auto left = acting_set(h, depth);
  for (const auto& x : left) {
    const CycNumber vx = value(x);
    for (std::uint32_t b = 0; b < h.dim(); ++b) {
      if (value(h.mul(x, h.basis(b))) != vx * a.coefficient(b)) {
        throw VerificationFailure("distinguished functional of " + h.name() + " is not multiplicative at " +
                                  h.label(b));
      }
    }
  }
  return a;
}

SparseVec distinguished_grouplike(const HopfAlgebra& h, const SparseVec& t) {
  if (t.empty()) throw UsageError("distinguished grouplike needs a nonzero integral");
  const std::uint64_t d = h.dim();
  auto contract = [&](std::uint32_t b) {
    std::vector<SparseVec::Term> terms;
    for (const auto& [key, c] : h.comult(b)) {
      if (const CycNumber* tv = t.find(static_cast<std::uint32_t>(key % d))) {
        terms.emplace_back(static_cast<std::uint32_t>(key / d), c * *tv);
      }
    }
    return SparseVec::from_unsorted(std::move(terms));
  };
  const auto [lead, lead_c] = *t.begin();
  const SparseVec g = contract(lead).scaled(lead_c.inverse());
  for (std::uint32_t b = 0; b < d; ++b) {
    if (contract(b) != g.scaled(t.coefficient(b))) {
      throw VerificationFailure("sum h_1 T(h_2) is not proportional to T(h) at " + h.label(b) + " in " + h.name());
    }
  }
  if (h.comult(g) != tensor::outer2(g, g, d) || !h.counit(g).is_one()) {
    throw VerificationFailure("distinguished element of " + h.name() + " is not grouplike");
  }
  return g;
}

}  // namespace ribbonforge
