#include "ribbonforge/grouplike.hpp"

#include "ribbonforge/error.hpp"
#include "ribbonforge/linalg.hpp"

namespace ribbonforge {

namespace {

constexpr std::size_t kMaxGroupOrder = 1u << 14;

}  // namespace

std::optional<std::uint32_t> GrouplikeSet::index_of(const SparseVec& v) const {
  for (std::uint32_t i = 0; i < elements.size(); ++i) {
    if (elements[i].value == v) return i;
  }
  return std::nullopt;
}

std::size_t GrouplikeSet::element_order(std::uint32_t i) const {
  std::size_t k = 1;
  std::uint32_t p = i;
  while (p != identity) {
    p = table[p][i];
    ++k;
  }
  return k;
}

std::string grouplike_violation(const HopfAlgebra& h, const SparseVec& g) {
  if (!h.counit(g).is_one()) return "eps(g) = 1";
  if (h.comult(g) != tensor::outer2(g, g, h.dim())) return "Delta(g) = g (x) g";
  return {};
}

GrouplikeSet grouplike_set(const HopfAlgebra& h, const std::vector<NamedElement>& candidates) {
  GrouplikeSet out;
  auto add = [&](const NamedElement& e) -> std::uint32_t {
    if (auto i = out.index_of(e.value)) return *i;
    if (out.elements.size() >= kMaxGroupOrder) throw VerificationFailure("grouplike closure does not terminate");
    const std::string bad = grouplike_violation(h, e.value);
    if (!bad.empty()) throw VerificationFailure(e.name + " in " + h.name() + " violates " + bad);
    out.elements.push_back(e);
    return static_cast<std::uint32_t>(out.elements.size() - 1);
  };
  add({"1", h.unit()});
  for (const auto& c : candidates) add(c);
  // Close under products; inverses follow in a finite group.
  for (std::size_t a = 0; a < out.elements.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      const NamedElement x = out.elements[a];
      const NamedElement y = out.elements[b];
      add({x.name + "*" + y.name, h.mul(x.value, y.value)});
      add({y.name + "*" + x.name, h.mul(y.value, x.value)});
    }
  }
  const auto n = static_cast<std::uint32_t>(out.elements.size());
  out.identity = 0;
  out.table.assign(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      auto idx = out.index_of(h.mul(out.elements[a].value, out.elements[b].value));
      if (!idx) throw VerificationFailure("grouplike set of " + h.name() + " is not closed");
      out.table[a][b] = *idx;
    }
  }
  out.inverse.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    auto idx = out.index_of(h.apply_antipode(out.elements[a].value));
    if (!idx || out.table[a][*idx] != out.identity) {
      throw VerificationFailure("antipode of " + out.elements[a].name + " is not its inverse");
    }
    out.inverse[a] = *idx;
  }
  std::vector<SparseVec> vecs;
  vecs.reserve(n);
  for (const auto& e : out.elements) vecs.push_back(e.value);
  if (rank_of(vecs) != n) throw VerificationFailure("grouplike elements of " + h.name() + " are linearly dependent");
  return out;
}

std::vector<std::uint32_t> square_root_indices(const GrouplikeSet& g, std::uint32_t target) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (g.table[i][i] == target) out.push_back(i);
  }
  return out;
}

std::vector<NamedElement> grouplike_square_roots(const GrouplikeSet& g, const SparseVec& target) {
  std::vector<NamedElement> out;
  const auto t = g.index_of(target);
  if (!t) return out;
  for (auto i : square_root_indices(g, *t)) out.push_back(g.elements[i]);
  return out;
}

}  // namespace ribbonforge
