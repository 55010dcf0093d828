#include "ribbonforge/dual.hpp"

namespace ribbonforge {

namespace {

std::vector<SparseVec> transpose_columns(const std::vector<SparseVec>& cols) {
  std::vector<std::vector<SparseVec::Term>> rows(cols.size());
  for (std::uint32_t k = 0; k < cols.size(); ++k) {
    for (const auto& [r, c] : cols[k]) rows[r].emplace_back(k, c);
  }
  std::vector<SparseVec> out(cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) out[r] = SparseVec::from_sorted(std::move(rows[r]));
  return out;
}

}  // namespace

HopfPtr dual_hopf(const HopfPtr& h, std::vector<NamedElement> generators) {
  const std::uint32_t d = h->dim();
  const std::uint64_t d64 = d;
  HopfSpec s;
  s.name = h->name() + "*";
  s.ctx = h->context_ptr();
  s.paired_with = h;
  s.generators = std::move(generators);
  s.labels.reserve(d);
  for (const auto& l : h->labels()) s.labels.push_back("(" + l + ")*");

  std::vector<std::vector<std::vector<SparseVec::Term>>> prod(d, std::vector<std::vector<SparseVec::Term>>(d));
  for (std::uint32_t k = 0; k < d; ++k) {
    for (const auto& [key, c] : h->comult(k)) {
      prod[key / d64][key % d64].emplace_back(k, c);
    }
  }
  s.mult_table.assign(d, std::vector<SparseVec>(d));
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) s.mult_table[i][j] = SparseVec::from_sorted(std::move(prod[i][j]));
  }

  std::vector<std::vector<SparseTensorData::Term>> co(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      for (const auto& [k, c] : h->product(i, j)) co[k].emplace_back(i * d64 + j, c);
    }
  }
  s.comult.reserve(d);
  for (auto& terms : co) s.comult.push_back(SparseTensorData::from_sorted(std::move(terms)));

  std::vector<SparseVec::Term> unit;
  for (std::uint32_t k = 0; k < d; ++k) {
    if (!h->counit(k).is_zero()) unit.emplace_back(k, h->counit(k));
  }
  s.unit = SparseVec::from_sorted(std::move(unit));
  s.counit.resize(d, CycNumber(h->ctx()));
  for (const auto& [k, c] : h->unit()) s.counit[k] = c;

  std::vector<SparseVec> s_cols(d);
  std::vector<SparseVec> sinv_cols(d);
  for (std::uint32_t k = 0; k < d; ++k) {
    s_cols[k] = h->antipode(k);
    sinv_cols[k] = h->antipode_inv(k);
  }
  s.antipode = transpose_columns(s_cols);
  s.antipode_inv = transpose_columns(sinv_cols);
  return HopfAlgebra::create(std::move(s));
}

HopfPtr coopposite(const HopfPtr& h) {
  const std::uint32_t d = h->dim();
  HopfSpec s;
  s.name = h->name() + "^cop";
  s.ctx = h->context_ptr();
  s.paired_with = h->paired_with();
  s.generators = h->generators();
  s.labels = h->labels();
  if (h->tabulated()) {
    s.mult_table.assign(d, std::vector<SparseVec>(d));
    for (std::uint32_t i = 0; i < d; ++i) {
      for (std::uint32_t j = 0; j < d; ++j) s.mult_table[i][j] = h->product(i, j);
    }
  } else {
    s.mult_fn = [h](std::uint32_t i, std::uint32_t j) { return h->product(i, j); };
  }
  s.unit = h->unit();
  s.comult.reserve(d);
  for (std::uint32_t k = 0; k < d; ++k) s.comult.push_back(tensor::flip2(h->comult(k), d, d));
  s.counit.reserve(d);
  for (std::uint32_t k = 0; k < d; ++k) {
    s.counit.push_back(h->counit(k));
    s.antipode.push_back(h->antipode_inv(k));
    s.antipode_inv.push_back(h->antipode(k));
  }
  return HopfAlgebra::create(std::move(s));
}

}  // namespace ribbonforge
