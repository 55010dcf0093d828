#include "ribbonforge/hopf.hpp"

#include <sstream>

#include "ribbonforge/error.hpp"
#include "ribbonforge/linalg.hpp"

namespace ribbonforge {

namespace {

void check_vector(const SparseVec& v, std::uint32_t dim, const std::string& what) {
  if (!v.empty() && v.terms().back().first >= dim) throw UsageError(what + ": basis index out of range");
}

std::vector<SparseVec> invert_columns(const cyc::CycContext& ctx, const std::vector<SparseVec>& cols, std::uint32_t dim) {
  // The matrix with cols as columns, stored by rows.
  SparseMatrix m(ctx, dim, dim);
  std::vector<std::vector<SparseVec::Term>> rows(dim);
  for (std::uint32_t k = 0; k < dim; ++k) {
    for (const auto& [r, c] : cols[k]) rows[r].emplace_back(k, c);
  }
  for (std::uint32_t r = 0; r < dim; ++r) m.rows[r] = SparseVec::from_sorted(std::move(rows[r]));
  auto inv = invert_matrix(m);
  if (!inv) throw VerificationFailure("antipode matrix is singular");
  std::vector<std::vector<SparseVec::Term>> out_cols(dim);
  for (std::uint32_t r = 0; r < dim; ++r) {
    for (const auto& [k, c] : inv->rows[r]) out_cols[k].emplace_back(r, c);
  }
  std::vector<SparseVec> out(dim);
  for (std::uint32_t k = 0; k < dim; ++k) out[k] = SparseVec::from_sorted(std::move(out_cols[k]));
  return out;
}

}  // namespace

HopfAlgebra::HopfAlgebra(HopfSpec spec)
    : name_(std::move(spec.name)),
      ctx_(std::move(spec.ctx)),
      dim_(static_cast<std::uint32_t>(spec.labels.size())),
      labels_(std::move(spec.labels)),
      table_(std::move(spec.mult_table)),
      mult_fn_(std::move(spec.mult_fn)),
      unit_(std::move(spec.unit)),
      comult_(std::move(spec.comult)),
      counit_(std::move(spec.counit)),
      antipode_(std::move(spec.antipode)),
      antipode_inv_(std::move(spec.antipode_inv)),
      generators_(std::move(spec.generators)),
      paired_with_(std::move(spec.paired_with)) {
  if (!ctx_) throw UsageError("Hopf algebra without a field context");
  if (dim_ == 0) throw UsageError("Hopf algebra of dimension zero");
  if (mult_fn_ == nullptr && table_.size() != dim_) throw UsageError("multiplication table has wrong size");
  if (mult_fn_ != nullptr) {
    memo_ = std::make_unique<std::atomic<const SparseVec*>[]>(static_cast<std::size_t>(dim_) * dim_);
  }
  if (comult_.size() != dim_ || counit_.size() != dim_ || antipode_.size() != dim_) {
    throw UsageError("structure tensors do not match the basis size");
  }
  check_vector(unit_, dim_, "unit");
  for (auto& s : antipode_) check_vector(s, dim_, "antipode");
  for (auto& g : generators_) check_vector(g.value, dim_, "generator " + g.name);
  if (antipode_inv_.empty()) antipode_inv_ = invert_columns(*ctx_, antipode_, dim_);
}

HopfAlgebra::~HopfAlgebra() {
  if (!memo_) return;
  const std::size_t n = static_cast<std::size_t>(dim_) * dim_;
  for (std::size_t i = 0; i < n; ++i) delete memo_[i].load(std::memory_order_relaxed);
}

const SparseVec& HopfAlgebra::product(std::uint32_t i, std::uint32_t j) const {
  if (mult_fn_ == nullptr) return table_[i][j];
  auto& slot = memo_[static_cast<std::size_t>(i) * dim_ + j];
  if (const SparseVec* p = slot.load(std::memory_order_acquire)) return *p;
  auto* fresh = new SparseVec(mult_fn_(i, j));
  const SparseVec* expected = nullptr;
  if (slot.compare_exchange_strong(expected, fresh, std::memory_order_acq_rel)) {
    cached_.fetch_add(1, std::memory_order_relaxed);
    return *fresh;
  }
  delete fresh;
  return *expected;
}

SparseVec HopfAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
  std::vector<SparseVec::Term> terms;
  for (const auto& [i, ca] : a) {
    for (const auto& [j, cb] : b) {
      const SparseVec& p = product(i, j);
      if (p.empty()) continue;
      const CycNumber c = ca * cb;
      for (const auto& [k, ck] : p) terms.emplace_back(k, c * ck);
    }
  }
  return SparseVec::from_unsorted(std::move(terms));
}

SparseTensorData HopfAlgebra::comult(const SparseVec& a) const {
  if (a.size() == 1) return comult_[a.begin()->first].scaled(a.begin()->second);
  std::vector<SparseTensorData::Term> terms;
  for (const auto& [k, c] : a) {
    for (const auto& [key, d] : comult_[k]) terms.emplace_back(key, c * d);
  }
  return SparseTensorData::from_unsorted(std::move(terms));
}

CycNumber HopfAlgebra::counit(const SparseVec& a) const {
  CycNumber out(*ctx_);
  for (const auto& [k, c] : a) out.add_product(c, counit_[k]);
  return out;
}

SparseVec HopfAlgebra::apply_antipode(const SparseVec& a) const {
  std::vector<SparseVec::Term> terms;
  for (const auto& [k, c] : a) {
    for (const auto& [r, d] : antipode_[k]) terms.emplace_back(r, c * d);
  }
  return SparseVec::from_unsorted(std::move(terms));
}

SparseVec HopfAlgebra::apply_antipode_inv(const SparseVec& a) const {
  std::vector<SparseVec::Term> terms;
  for (const auto& [k, c] : a) {
    for (const auto& [r, d] : antipode_inv_[k]) terms.emplace_back(r, c * d);
  }
  return SparseVec::from_unsorted(std::move(terms));
}

SparseVec HopfAlgebra::basis(std::uint32_t i) const {
  if (i >= dim_) throw UsageError("basis index out of range");
  return SparseVec::single(i, one());
}

SparseVec HopfAlgebra::scalar(const CycNumber& c) const { return unit_.scaled(c); }

std::string HopfAlgebra::format(const SparseVec& v) const {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str_short() + ") * " + labels_[k];
  }
  return out;
}

// ---------------------------------------------------------------------------

Element::Element(HopfPtr algebra, SparseVec coeffs) : alg_(std::move(algebra)), v_(std::move(coeffs)) {
  if (!alg_) throw UsageError("element without an algebra");
  check_vector(v_, alg_->dim(), "element");
}

Element Element::basis(const HopfPtr& algebra, std::uint32_t i) { return Element(algebra, algebra->basis(i)); }

Element Element::unit(const HopfPtr& algebra) { return Element(algebra, algebra->unit()); }

std::string Element::str() const { return alg_ ? alg_->format(v_) : "0"; }

namespace {

void same_algebra(const Element& a, const Element& b) {
  if (a.algebra().get() != b.algebra().get()) {
    throw MismatchError("elements of different algebras: " + (a.algebra() ? a.algebra()->name() : "?") + " and " +
                        (b.algebra() ? b.algebra()->name() : "?"));
  }
}

bool paired(const HopfAlgebra& p, const HopfAlgebra& a) {
  return p.paired_with().get() == &a || a.paired_with().get() == &p;
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  same_algebra(a, b);
  return Element(a.alg_, a.v_ + b.v_);
}

Element operator-(const Element& a, const Element& b) {
  same_algebra(a, b);
  return Element(a.alg_, a.v_ - b.v_);
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

Element operator*(const CycNumber& c, const Element& a) { return Element(a.alg_, a.v_.scaled(c)); }

bool operator==(const Element& a, const Element& b) { return a.alg_.get() == b.alg_.get() && a.v_ == b.v_; }

Element multiply(const Element& a, const Element& b) {
  same_algebra(a, b);
  return Element(a.algebra(), a.algebra()->mul(a.coeffs(), b.coeffs()));
}

TensorElement comultiply(const Element& a) {
  return TensorElement({a.algebra(), a.algebra()}, a.algebra()->comult(a.coeffs()));
}

CycNumber counit(const Element& a) { return a.algebra()->counit(a.coeffs()); }

Element antipode(const Element& a) { return Element(a.algebra(), a.algebra()->apply_antipode(a.coeffs())); }

Element antipode_inv(const Element& a) { return Element(a.algebra(), a.algebra()->apply_antipode_inv(a.coeffs())); }

CycNumber pairing(const Element& p, const Element& a) {
  if (!paired(*p.algebra(), *a.algebra())) {
    throw MismatchError("pairing between unrelated algebras " + p.algebra()->name() + " and " + a.algebra()->name());
  }
  CycNumber out(a.algebra()->ctx());
  auto i = p.coeffs().begin();
  auto j = a.coeffs().begin();
  while (i != p.coeffs().end() && j != a.coeffs().end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      out.add_product(i->second, j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

Element act_left(const Element& p, const Element& a) {
  if (!paired(*p.algebra(), *a.algebra())) throw MismatchError("harpoon action between unrelated algebras");
  const HopfAlgebra& h = *a.algebra();
  const std::uint64_t d = h.dim();
  std::vector<SparseVec::Term> terms;
  for (const auto& [key, c] : h.comult(a.coeffs())) {
    const CycNumber* pv = p.coeffs().find(static_cast<std::uint32_t>(key % d));
    if (pv) terms.emplace_back(static_cast<std::uint32_t>(key / d), c * *pv);
  }
  return Element(a.algebra(), SparseVec::from_unsorted(std::move(terms)));
}

Element act_right(const Element& a, const Element& p) {
  if (!paired(*p.algebra(), *a.algebra())) throw MismatchError("harpoon action between unrelated algebras");
  const HopfAlgebra& h = *a.algebra();
  const std::uint64_t d = h.dim();
  std::vector<SparseVec::Term> terms;
  for (const auto& [key, c] : h.comult(a.coeffs())) {
    const CycNumber* pv = p.coeffs().find(static_cast<std::uint32_t>(key / d));
    if (pv) terms.emplace_back(static_cast<std::uint32_t>(key % d), c * *pv);
  }
  return Element(a.algebra(), SparseVec::from_unsorted(std::move(terms)));
}

// ---------------------------------------------------------------------------

TensorElement::TensorElement(std::vector<HopfPtr> legs, SparseTensorData data)
    : legs_(std::move(legs)), data_(std::move(data)) {
  if (legs_.size() != 2 && legs_.size() != 3) throw UsageError("tensor elements have two or three legs");
}

TensorElement TensorElement::outer(const Element& a, const Element& b) {
  return TensorElement({a.algebra(), b.algebra()}, tensor::outer2(a.coeffs(), b.coeffs(), b.algebra()->dim()));
}

TensorElement TensorElement::outer(const Element& a, const Element& b, const Element& c) {
  const std::uint64_t d1 = b.algebra()->dim();
  const std::uint64_t d2 = c.algebra()->dim();
  std::vector<SparseTensorData::Term> terms;
  for (const auto& [i, x] : a.coeffs()) {
    for (const auto& [j, y] : b.coeffs()) {
      const CycNumber xy = x * y;
      for (const auto& [k, z] : c.coeffs()) terms.emplace_back((i * d1 + j) * d2 + k, xy * z);
    }
  }
  return TensorElement({a.algebra(), b.algebra(), c.algebra()}, SparseTensorData::from_unsorted(std::move(terms)));
}

std::uint64_t TensorElement::key(const std::vector<std::uint32_t>& idx) const {
  if (idx.size() != legs_.size()) throw UsageError("tensor index arity mismatch");
  std::uint64_t k = 0;
  for (std::size_t p = 0; p < idx.size(); ++p) k = k * legs_[p]->dim() + idx[p];
  return k;
}

std::vector<std::uint32_t> TensorElement::unpack(std::uint64_t key) const {
  std::vector<std::uint32_t> idx(legs_.size());
  for (std::size_t p = legs_.size(); p-- > 0;) {
    idx[p] = static_cast<std::uint32_t>(key % legs_[p]->dim());
    key /= legs_[p]->dim();
  }
  return idx;
}

TensorElement TensorElement::permuted(const std::vector<int>& perm) const {
  if (perm.size() != legs_.size()) throw UsageError("leg permutation arity mismatch");
  std::vector<HopfPtr> legs(legs_.size());
  for (std::size_t p = 0; p < perm.size(); ++p) legs[p] = legs_.at(static_cast<std::size_t>(perm[p]));
  TensorElement out(legs, {});
  std::vector<SparseTensorData::Term> terms;
  terms.reserve(data_.size());
  std::vector<std::uint32_t> moved(legs_.size());
  for (const auto& [k, c] : data_) {
    const auto idx = unpack(k);
    for (std::size_t p = 0; p < perm.size(); ++p) moved[p] = idx[static_cast<std::size_t>(perm[p])];
    terms.emplace_back(out.key(moved), c);
  }
  out.data_ = SparseTensorData::from_unsorted(std::move(terms));
  return out;
}

std::string TensorElement::str() const {
  if (data_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : data_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str_short() + ") *";
    const auto idx = unpack(k);
    for (std::size_t p = 0; p < idx.size(); ++p) out += (p == 0 ? " " : " ⊗ ") + legs_[p]->label(idx[p]);
  }
  return out;
}

void TensorElement::check_same_legs(const TensorElement& other) const {
  bool ok = legs_.size() == other.legs_.size();
  for (std::size_t p = 0; ok && p < legs_.size(); ++p) ok = legs_[p].get() == other.legs_[p].get();
  if (!ok) throw MismatchError("tensor elements over different algebras");
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  a.check_same_legs(b);
  return TensorElement(a.legs_, a.data_ + b.data_);
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
  a.check_same_legs(b);
  return TensorElement(a.legs_, a.data_ - b.data_);
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  a.check_same_legs(b);
  if (a.arity() == 2) return TensorElement(a.legs_, tensor::mul2(*a.legs_[0], *a.legs_[1], a.data_, b.data_));
  return TensorElement(a.legs_, tensor::mul3(*a.legs_[0], *a.legs_[1], *a.legs_[2], a.data_, b.data_));
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.legs_.size() != b.legs_.size()) return false;
  for (std::size_t p = 0; p < a.legs_.size(); ++p) {
    if (a.legs_[p].get() != b.legs_[p].get()) return false;
  }
  return a.data_ == b.data_;
}

namespace tensor {

SparseTensorData mul2(const HopfAlgebra& a, const HopfAlgebra& b, const SparseTensorData& x,
                      const SparseTensorData& y) {
  const std::uint64_t d1 = b.dim();
  HashAccumulator acc;
  for (const auto& [kx, cx] : x) {
    const auto i = static_cast<std::uint32_t>(kx / d1);
    const auto j = static_cast<std::uint32_t>(kx % d1);
    for (const auto& [ky, cy] : y) {
      const SparseVec& p = a.product(i, static_cast<std::uint32_t>(ky / d1));
      if (p.empty()) continue;
      const SparseVec& q = b.product(j, static_cast<std::uint32_t>(ky % d1));
      if (q.empty()) continue;
      const CycNumber c = cx * cy;
      for (const auto& [pi, pc] : p) {
        const CycNumber cp = c * pc;
        for (const auto& [qi, qc] : q) acc.add_product(pi * d1 + qi, cp, qc);
      }
    }
  }
  return acc.finish();
}

SparseTensorData mul3(const HopfAlgebra& a, const HopfAlgebra& b, const HopfAlgebra& c,
                      const SparseTensorData& x, const SparseTensorData& y) {
  const std::uint64_t d1 = b.dim();
  const std::uint64_t d2 = c.dim();
  HashAccumulator acc;
  for (const auto& [kx, cx] : x) {
    const auto i = static_cast<std::uint32_t>(kx / (d1 * d2));
    const auto j = static_cast<std::uint32_t>((kx / d2) % d1);
    const auto k = static_cast<std::uint32_t>(kx % d2);
    for (const auto& [ky, cy] : y) {
      const SparseVec& p = a.product(i, static_cast<std::uint32_t>(ky / (d1 * d2)));
      if (p.empty()) continue;
      const SparseVec& q = b.product(j, static_cast<std::uint32_t>((ky / d2) % d1));
      if (q.empty()) continue;
      const SparseVec& r = c.product(k, static_cast<std::uint32_t>(ky % d2));
      if (r.empty()) continue;
      const CycNumber cc = cx * cy;
      for (const auto& [pi, pc] : p) {
        const CycNumber cp = cc * pc;
        for (const auto& [qi, qc] : q) {
          const CycNumber cq = cp * qc;
          for (const auto& [ri, rc] : r) acc.add_product((pi * d1 + qi) * d2 + ri, cq, rc);
        }
      }
    }
  }
  return acc.finish();
}

SparseTensorData outer2(const SparseVec& a, const SparseVec& b, std::uint64_t d1) {
  std::vector<SparseTensorData::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) terms.emplace_back(i * d1 + j, x * y);
  }
  return SparseTensorData::from_sorted(std::move(terms));
}

SparseTensorData flip2(const SparseTensorData& x, std::uint64_t d0, std::uint64_t d1) {
  std::vector<SparseTensorData::Term> terms;
  terms.reserve(x.size());
  for (const auto& [k, c] : x) terms.emplace_back((k % d1) * d0 + k / d1, c);
  return SparseTensorData::from_unsorted(std::move(terms));
}

SparseTensorData comult_leg(const HopfAlgebra& h, const SparseTensorData& x, int leg) {
  const std::uint64_t d = h.dim();
  std::vector<SparseTensorData::Term> terms;
  for (const auto& [k, c] : x) {
    const auto i = static_cast<std::uint32_t>(k / d);
    const auto j = static_cast<std::uint32_t>(k % d);
    if (leg == 0) {
      for (const auto& [kk, cc] : h.comult(i)) terms.emplace_back(kk * d + j, c * cc);
    } else {
      for (const auto& [kk, cc] : h.comult(j)) terms.emplace_back(i * d * d + kk, c * cc);
    }
  }
  return SparseTensorData::from_unsorted(std::move(terms));
}

SparseVec counit_leg(const HopfAlgebra& h, const SparseTensorData& x, int leg) {
  const std::uint64_t d = h.dim();
  std::vector<SparseVec::Term> terms;
  for (const auto& [k, c] : x) {
    const auto i = static_cast<std::uint32_t>(k / d);
    const auto j = static_cast<std::uint32_t>(k % d);
    const CycNumber& e = h.counit(leg == 0 ? i : j);
    if (!e.is_zero()) terms.emplace_back(leg == 0 ? j : i, c * e);
  }
  return SparseVec::from_unsorted(std::move(terms));
}

SparseVec multiply_legs(const HopfAlgebra& h, const SparseTensorData& x, bool antipode_left, bool antipode_right) {
  const std::uint64_t d = h.dim();
  std::vector<SparseVec::Term> terms;
  for (const auto& [k, c] : x) {
    const auto i = static_cast<std::uint32_t>(k / d);
    const auto j = static_cast<std::uint32_t>(k % d);
    const SparseVec a = antipode_left ? h.antipode(i) : h.basis(i);
    const SparseVec b = antipode_right ? h.antipode(j) : h.basis(j);
    for (const auto& [r, cr] : h.mul(a, b)) terms.emplace_back(r, c * cr);
  }
  return SparseVec::from_unsorted(std::move(terms));
}

}  // namespace tensor

}  // namespace ribbonforge
