#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ribbonforge/cyclotomic.hpp"

namespace ribbonforge {

using cyc::CycNumber;

/// Sparse coefficient vector: strictly increasing keys, no stored zeros.
template <typename Key>
class BasicSparseVec {
 public:
  using key_type = Key;
  using Term = std::pair<Key, CycNumber>;

  BasicSparseVec() = default;

  /// Takes ownership of already-canonical terms (sorted, unique, nonzero).
  static BasicSparseVec from_sorted(std::vector<Term> terms) {
    BasicSparseVec v;
    v.terms_ = std::move(terms);
    return v;
  }

  /// Sorts, merges duplicates and drops zeros.
  static BasicSparseVec from_unsorted(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    return from_sorted(std::move(out));
  }

  static BasicSparseVec single(Key k, CycNumber c) {
    BasicSparseVec v;
    if (!c.is_zero()) v.terms_.emplace_back(k, std::move(c));
    return v;
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  /// Pointer to the coefficient of k, or nullptr when it is zero.
  const CycNumber* find(Key k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, Key key) { return t.first < key; });
    if (it == terms_.end() || it->first != k) return nullptr;
    return &it->second;
  }

  CycNumber coefficient(Key k) const {
    const CycNumber* c = find(k);
    return c ? *c : CycNumber();
  }

  BasicSparseVec scaled(const CycNumber& s) const {
    if (s.is_zero()) return {};
    BasicSparseVec out;
    out.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.terms_.emplace_back(k, c * s);
    return out;
  }

  BasicSparseVec operator-() const {
    BasicSparseVec out(*this);
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  friend BasicSparseVec operator+(const BasicSparseVec& a, const BasicSparseVec& b) { return merge(a, b, false); }
  friend BasicSparseVec operator-(const BasicSparseVec& a, const BasicSparseVec& b) { return merge(a, b, true); }

  friend bool operator==(const BasicSparseVec& a, const BasicSparseVec& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BasicSparseVec& a, const BasicSparseVec& b) { return !(a == b); }

 private:
  static BasicSparseVec merge(const BasicSparseVec& a, const BasicSparseVec& b, bool subtract) {
    BasicSparseVec out;
    out.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        out.terms_.emplace_back(j->first, subtract ? -j->second : j->second);
        ++j;
      } else {
        CycNumber c = subtract ? i->second - j->second : i->second + j->second;
        if (!c.is_zero()) out.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

using SparseVec = BasicSparseVec<std::uint32_t>;
using SparseTensorData = BasicSparseVec<std::uint64_t>;

/// Dense scratch accumulator over a fixed index range; reusable after finish().
class DenseAccumulator {
 public:
  explicit DenseAccumulator(std::size_t dim) : slots_(dim), touched_flag_(dim, 0) {}

  std::size_t dim() const noexcept { return slots_.size(); }

  CycNumber& slot(std::uint32_t k) {
    if (!touched_flag_[k]) {
      touched_flag_[k] = 1;
      touched_.push_back(k);
    }
    return slots_[k];
  }

  void add(std::uint32_t k, const CycNumber& c) {
    if (!c.is_zero()) slot(k) += c;
  }
  void add_product(std::uint32_t k, const CycNumber& a, const CycNumber& b) { slot(k).add_product(a, b); }

  /// add s * v
  void add_scaled(const SparseVec& v, const CycNumber& s) {
    if (s.is_zero()) return;
    for (const auto& [k, c] : v) slot(k).add_product(s, c);
  }

  SparseVec finish() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<SparseVec::Term> out;
    out.reserve(touched_.size());
    for (auto k : touched_) {
      if (!slots_[k].is_zero()) out.emplace_back(k, std::move(slots_[k]));
      slots_[k] = CycNumber();
      touched_flag_[k] = 0;
    }
    touched_.clear();
    return SparseVec::from_sorted(std::move(out));
  }

 private:
  std::vector<CycNumber> slots_;
  std::vector<char> touched_flag_;
  std::vector<std::uint32_t> touched_;
};

/// Hash-based accumulator for tensor keys.
class HashAccumulator {
 public:
  void reserve(std::size_t n) { map_.reserve(n); }
  void add(std::uint64_t k, const CycNumber& c) {
    if (!c.is_zero()) map_[k] += c;
  }
  void add_product(std::uint64_t k, const CycNumber& a, const CycNumber& b) {
    if (a.is_zero() || b.is_zero()) return;
    map_[k].add_product(a, b);
  }
  std::size_t size() const noexcept { return map_.size(); }

  SparseTensorData finish() {
    std::vector<SparseTensorData::Term> out;
    out.reserve(map_.size());
    for (auto& [k, c] : map_) {
      if (!c.is_zero()) out.emplace_back(k, std::move(c));
    }
    map_.clear();
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return SparseTensorData::from_sorted(std::move(out));
  }

 private:
  std::unordered_map<std::uint64_t, CycNumber> map_;
};

}  // namespace ribbonforge
