#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ribbonforge/hopf.hpp"

namespace ribbonforge {

/// A verified finite group of grouplike elements with its Cayley table.
struct GrouplikeSet {
  std::vector<NamedElement> elements;
  /// table[a][b] = index of elements[a] * elements[b]
  std::vector<std::vector<std::uint32_t>> table;
  std::vector<std::uint32_t> inverse;
  std::uint32_t identity = 0;

  std::size_t order() const noexcept { return elements.size(); }
  std::optional<std::uint32_t> index_of(const SparseVec& v) const;
  /// Order of elements[i] as a group element.
  std::size_t element_order(std::uint32_t i) const;
};

/// Empty when g is grouplike; otherwise the violated equation.
std::string grouplike_violation(const HopfAlgebra& h, const SparseVec& g);

/// Verifies every candidate, closes the set under products and inverses
/// (inverse = antipode), and asserts linear independence. Throws
/// VerificationFailure naming the candidate and the violated equation.
GrouplikeSet grouplike_set(const HopfAlgebra& h, const std::vector<NamedElement>& candidates);

/// Indices of all members whose square is `target` (exhaustive scan).
std::vector<std::uint32_t> square_root_indices(const GrouplikeSet& g, std::uint32_t target);
/// Same, returning the elements; empty when target is not a member.
std::vector<NamedElement> grouplike_square_roots(const GrouplikeSet& g, const SparseVec& target);

}  // namespace ribbonforge
