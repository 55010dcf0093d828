#pragma once

#include <map>
#include <utility>

#include "ribbonforge/hopf.hpp"

namespace ribbonforge::test_support {

// Re-tabulates h so single structure constants can be edited.
inline HopfSpec copy_spec(const HopfAlgebra& h) {
  HopfSpec s;
  s.name = h.name() + " (copy)";
  s.ctx = h.context_ptr();
  s.labels = h.labels();
  s.mult_table.assign(h.dim(), std::vector<SparseVec>(h.dim()));
  for (std::uint32_t i = 0; i < h.dim(); ++i) {
    for (std::uint32_t j = 0; j < h.dim(); ++j) s.mult_table[i][j] = h.product(i, j);
  }
  s.unit = h.unit();
  for (std::uint32_t k = 0; k < h.dim(); ++k) {
    s.comult.push_back(h.comult(k));
    s.counit.push_back(h.counit(k));
    s.antipode.push_back(h.antipode(k));
    s.antipode_inv.push_back(h.antipode_inv(k));
  }
  s.generators = h.generators();
  return s;
}

// Straightforward normal form for g^i x^j words in R(m,n) (m = 1 gives the
// Taft algebra): keys (i mod mn, j), coefficients in Q(zeta_mn). Kept apart
// from the library's rewriting on purpose.
struct WordAlgebra {
  const cyc::CycContext& ctx;
  int m;
  int n;
  using Poly = std::map<std::pair<int, int>, CycNumber>;

  int order() const { return m * n; }
  CycNumber q_pow(long e) const { return cyc::root_power(ctx, static_cast<long>(m) * e); }

  void add(Poly& p, int i, int j, const CycNumber& c) const {
    const auto key = std::make_pair(((i % order()) + order()) % order(), j);
    auto it = p.emplace(key, CycNumber(ctx)).first;
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }

  // x^j g^k = q^(jk) g^k x^j, then x^n = g^n - 1 repeatedly.
  Poly mul(int i, int j, int k, int l) const {
    Poly out;
    Poly pending;
    add(pending, i + k, j + l, q_pow(static_cast<long>(j) * k));
    while (!pending.empty()) {
      auto [key, c] = *pending.begin();
      pending.erase(pending.begin());
      auto [a, b] = key;
      if (b < n) {
        add(out, a, b, c);
        continue;
      }
      // g^a x^b = g^a x^(b-n) (g^n - 1); g^n commutes with x since q^n = 1.
      add(pending, a + n, b - n, c);
      add(pending, a, b - n, -c);
    }
    return out;
  }
};

}  // namespace ribbonforge::test_support
