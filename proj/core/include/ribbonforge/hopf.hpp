#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ribbonforge/cyclotomic.hpp"
#include "ribbonforge/sparse.hpp"

namespace ribbonforge {

class HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

struct NamedElement {
  std::string name;
  SparseVec value;
};

/// Everything needed to build a HopfAlgebra. Exactly one of mult_table and
/// mult_fn is set; mult_fn products are computed on demand and memoised.
struct HopfSpec {
  std::string name;
  cyc::ContextPtr ctx;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> mult_table;
  std::function<SparseVec(std::uint32_t, std::uint32_t)> mult_fn;
  SparseVec unit;
  /// Delta(e_k) with keys i * dim + j.
  std::vector<SparseTensorData> comult;
  std::vector<CycNumber> counit;
  /// Columns: antipode[k] = S(e_k).
  std::vector<SparseVec> antipode;
  /// S^-1 columns; computed by matrix inversion when left empty.
  std::vector<SparseVec> antipode_inv;
  std::vector<NamedElement> generators;
  /// For a dual (or co-opposite dual) algebra: the algebra it pairs with.
  HopfPtr paired_with;
};

/// Finite-dimensional Hopf algebra given by structure constants on a basis.
/// Immutable after construction, except for the internal product memo which
/// is filled lock-free and never changes a published entry.
class HopfAlgebra {
 public:
  explicit HopfAlgebra(HopfSpec spec);
  ~HopfAlgebra();
  HopfAlgebra(const HopfAlgebra&) = delete;
  HopfAlgebra& operator=(const HopfAlgebra&) = delete;

  static HopfPtr create(HopfSpec spec) { return std::make_shared<const HopfAlgebra>(std::move(spec)); }

  const std::string& name() const noexcept { return name_; }
  std::uint32_t dim() const noexcept { return dim_; }
  const cyc::CycContext& ctx() const noexcept { return *ctx_; }
  const cyc::ContextPtr& context_ptr() const noexcept { return ctx_; }
  const std::string& label(std::uint32_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const HopfPtr& paired_with() const noexcept { return paired_with_; }
  const std::vector<NamedElement>& generators() const noexcept { return generators_; }
  bool tabulated() const noexcept { return mult_fn_ == nullptr; }

  /// Product of basis elements e_i e_j.
  const SparseVec& product(std::uint32_t i, std::uint32_t j) const;
  const SparseVec& unit() const noexcept { return unit_; }
  const SparseTensorData& comult(std::uint32_t k) const { return comult_.at(k); }
  const CycNumber& counit(std::uint32_t k) const { return counit_.at(k); }
  const SparseVec& antipode(std::uint32_t k) const { return antipode_.at(k); }
  const SparseVec& antipode_inv(std::uint32_t k) const { return antipode_inv_.at(k); }

  // Linear extensions on coefficient vectors.
  SparseVec mul(const SparseVec& a, const SparseVec& b) const;
  SparseTensorData comult(const SparseVec& a) const;
  CycNumber counit(const SparseVec& a) const;
  SparseVec apply_antipode(const SparseVec& a) const;
  SparseVec apply_antipode_inv(const SparseVec& a) const;
  SparseVec basis(std::uint32_t i) const;
  SparseVec scalar(const CycNumber& c) const;
  CycNumber one() const { return CycNumber(*ctx_, 1); }

  /// "(c) * label + ..." in ascending basis order; "0" for zero.
  std::string format(const SparseVec& v) const;

  /// Number of basis products materialised so far (lazy algebras only).
  std::size_t cached_products() const noexcept { return cached_.load(std::memory_order_relaxed); }

 private:
  std::string name_;
  cyc::ContextPtr ctx_;
  std::uint32_t dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVec>> table_;
  std::function<SparseVec(std::uint32_t, std::uint32_t)> mult_fn_;
  std::unique_ptr<std::atomic<const SparseVec*>[]> memo_;
  mutable std::atomic<std::size_t> cached_{0};
  SparseVec unit_;
  std::vector<SparseTensorData> comult_;
  std::vector<CycNumber> counit_;
  std::vector<SparseVec> antipode_;
  std::vector<SparseVec> antipode_inv_;
  std::vector<NamedElement> generators_;
  HopfPtr paired_with_;
};

inline std::uint64_t pack2(std::uint32_t i, std::uint32_t j, std::uint64_t d1) { return i * d1 + j; }

/// Element of a specific Hopf algebra.
class Element {
 public:
  Element() = default;
  Element(HopfPtr algebra, SparseVec coeffs);

  static Element basis(const HopfPtr& algebra, std::uint32_t i);
  static Element unit(const HopfPtr& algebra);

  const HopfPtr& algebra() const noexcept { return alg_; }
  const SparseVec& coeffs() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_.empty(); }
  std::string str() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const CycNumber& c, const Element& a);
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  HopfPtr alg_;
  SparseVec v_;
};

/// Element of A1 (x) A2 or A1 (x) A2 (x) A3 with mixed-radix packed keys.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(std::vector<HopfPtr> legs, SparseTensorData data);

  static TensorElement outer(const Element& a, const Element& b);
  static TensorElement outer(const Element& a, const Element& b, const Element& c);

  const std::vector<HopfPtr>& legs() const noexcept { return legs_; }
  std::size_t arity() const noexcept { return legs_.size(); }
  const SparseTensorData& data() const noexcept { return data_; }
  std::size_t nnz() const noexcept { return data_.size(); }

  /// Key of a basis tuple (size must equal arity).
  std::uint64_t key(const std::vector<std::uint32_t>& idx) const;
  std::vector<std::uint32_t> unpack(std::uint64_t key) const;

  /// Leg permutation: result leg p holds input leg perm[p].
  TensorElement permuted(const std::vector<int>& perm) const;
  TensorElement flipped() const { return permuted({1, 0}); }

  std::string str() const;

  friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
  /// Leg-wise product.
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b);
  friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

 private:
  void check_same_legs(const TensorElement& other) const;

  std::vector<HopfPtr> legs_;
  SparseTensorData data_;
};

Element multiply(const Element& a, const Element& b);
TensorElement comultiply(const Element& a);
CycNumber counit(const Element& a);
Element antipode(const Element& a);
Element antipode_inv(const Element& a);

/// <p, a> for p in the algebra paired with a's algebra.
CycNumber pairing(const Element& p, const Element& a);
/// p -> a = sum a_1 <p, a_2>
Element act_left(const Element& p, const Element& a);
/// a <- p = sum <p, a_1> a_2
Element act_right(const Element& a, const Element& p);

/// Tensor-level helpers on raw coefficient data.
namespace tensor {

/// (sum a_i (x) b_i)(sum c_j (x) d_j) for two-leg tensors over (A, B).
SparseTensorData mul2(const HopfAlgebra& a, const HopfAlgebra& b, const SparseTensorData& x,
                      const SparseTensorData& y);
/// Three-leg product over (A, B, C).
SparseTensorData mul3(const HopfAlgebra& a, const HopfAlgebra& b, const HopfAlgebra& c,
                      const SparseTensorData& x, const SparseTensorData& y);
SparseTensorData outer2(const SparseVec& a, const SparseVec& b, std::uint64_t d1);
SparseTensorData flip2(const SparseTensorData& x, std::uint64_t d0, std::uint64_t d1);
/// (Delta (x) id) x for leg 0, (id (x) Delta) x for leg 1; x lives in H (x) H.
SparseTensorData comult_leg(const HopfAlgebra& h, const SparseTensorData& x, int leg);
/// (eps (x) id) x for leg 0, (id (x) eps) x for leg 1.
SparseVec counit_leg(const HopfAlgebra& h, const SparseTensorData& x, int leg);
/// m o (f (x) g) applied to x, with f, g each the identity or the antipode.
SparseVec multiply_legs(const HopfAlgebra& h, const SparseTensorData& x, bool antipode_left, bool antipode_right);

}  // namespace tensor

}  // namespace ribbonforge
