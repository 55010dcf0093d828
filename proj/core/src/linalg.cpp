#include "ribbonforge/linalg.hpp"

#include <algorithm>
#include <limits>

#include "ribbonforge/error.hpp"

namespace ribbonforge {

namespace {

struct PivotRow {
  std::uint32_t col;
  SparseVec row;  // pivot entry normalised to 1
};

struct Reduction {
  std::vector<PivotRow> pivots;
  bool consistent = true;
};

// dst -= f * src
SparseVec axpy_neg(const SparseVec& dst, const CycNumber& f, const SparseVec& src) {
  std::vector<SparseVec::Term> out;
  out.reserve(dst.size() + src.size());
  auto i = dst.begin();
  auto j = src.begin();
  while (i != dst.end() || j != src.end()) {
    if (j == src.end() || (i != dst.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == dst.end() || j->first < i->first) {
      out.emplace_back(j->first, -(f * j->second));
      ++j;
    } else {
      CycNumber c = i->second;
      c -= f * j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return SparseVec::from_sorted(std::move(out));
}

SparseVec normalized(const SparseVec& row, std::uint32_t col) {
  const CycNumber inv = row.find(col)->inverse();
  if (inv.is_one()) return row;
  return row.scaled(inv);
}

// Gauss-Jordan elimination. Columns >= pivotable are right-hand sides and
// never chosen as pivots; a row left with only such columns is inconsistent.
Reduction eliminate_sparse(std::vector<SparseVec> rows, std::size_t pivotable) {
  Reduction red;
  std::vector<std::size_t> col_count(pivotable, 0);
  for (const auto& r : rows) {
    for (const auto& [k, c] : r) {
      if (k < pivotable) ++col_count[k];
    }
  }
  auto drop_dead = [&](std::vector<SparseVec>& rs) {
    std::vector<SparseVec> alive;
    alive.reserve(rs.size());
    for (auto& r : rs) {
      if (r.empty()) continue;
      if (r.begin()->first >= pivotable) {
        red.consistent = false;
        continue;
      }
      alive.push_back(std::move(r));
    }
    rs = std::move(alive);
  };
  drop_dead(rows);
  while (!rows.empty()) {
    // Markowitz-style choice: sparsest row, then its least-populated column.
    std::size_t best = 0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r].size() < rows[best].size()) best = r;
    }
    std::uint32_t col = 0;
    std::size_t col_best = std::numeric_limits<std::size_t>::max();
    for (const auto& [k, c] : rows[best]) {
      if (k >= pivotable) break;
      if (col_count[k] < col_best) {
        col_best = col_count[k];
        col = k;
      }
    }
    SparseVec piv = normalized(rows[best], col);
    rows[best] = SparseVec();
    for (const auto& [k, c] : piv) {
      if (k < pivotable) --col_count[k];
    }
    auto reduce = [&](SparseVec& r, bool counted) {
      const CycNumber* f = r.find(col);
      if (f == nullptr) return;
      const CycNumber factor = *f;
      if (counted) {
        for (const auto& [k, c] : r) {
          if (k < pivotable) --col_count[k];
        }
      }
      r = axpy_neg(r, factor, piv);
      if (counted) {
        for (const auto& [k, c] : r) {
          if (k < pivotable) ++col_count[k];
        }
      }
    };
    for (auto& r : rows) reduce(r, true);
    for (auto& p : red.pivots) reduce(p.row, false);
    red.pivots.push_back({col, std::move(piv)});
    drop_dead(rows);
  }
  return red;
}

Reduction eliminate_dense(const std::vector<SparseVec>& rows, std::size_t pivotable, std::size_t width) {
  Reduction red;
  std::vector<std::vector<CycNumber>> m(rows.size(), std::vector<CycNumber>(width));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [k, c] : rows[r]) m[r][k] = c;
  }
  std::size_t rank = 0;
  std::vector<std::uint32_t> pivot_cols;
  for (std::size_t c = 0; c < pivotable && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const CycNumber inv = m[rank][c].inverse();
    for (auto& v : m[rank]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const CycNumber f = m[r][c];
      for (std::size_t k = c; k < width; ++k) {
        if (!m[rank][k].is_zero()) m[r][k] -= f * m[rank][k];
      }
    }
    pivot_cols.push_back(static_cast<std::uint32_t>(c));
    ++rank;
  }
  for (std::size_t r = rank; r < m.size(); ++r) {
    for (std::size_t k = pivotable; k < width; ++k) {
      if (!m[r][k].is_zero()) red.consistent = false;
    }
  }
  for (std::size_t r = 0; r < rank; ++r) {
    std::vector<SparseVec::Term> terms;
    for (std::size_t k = 0; k < width; ++k) {
      if (!m[r][k].is_zero()) terms.emplace_back(static_cast<std::uint32_t>(k), m[r][k]);
    }
    red.pivots.push_back({pivot_cols[r], SparseVec::from_sorted(std::move(terms))});
  }
  return red;
}

Reduction eliminate(std::vector<SparseVec> rows, std::size_t pivotable, std::size_t width) {
  if (rows.size() < kDenseThreshold && width < kDenseThreshold) return eliminate_dense(rows, pivotable, width);
  return eliminate_sparse(std::move(rows), pivotable);
}

// Fully reduced echelon form with leftmost pivots; the result is unique.
std::vector<SparseVec> rref_leftmost(std::vector<SparseVec> rows) {
  std::vector<SparseVec> done;
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseVec& r) { return r.empty(); }), rows.end());
  while (!rows.empty()) {
    std::size_t best = 0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r].begin()->first < rows[best].begin()->first) best = r;
    }
    const std::uint32_t col = rows[best].begin()->first;
    SparseVec piv = normalized(rows[best], col);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    for (auto& r : rows) {
      if (const CycNumber* f = r.find(col)) r = axpy_neg(r, CycNumber(*f), piv);
    }
    for (auto& r : done) {
      if (const CycNumber* f = r.find(col)) r = axpy_neg(r, CycNumber(*f), piv);
    }
    done.push_back(std::move(piv));
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseVec& r) { return r.empty(); }), rows.end());
  }
  std::sort(done.begin(), done.end(),
            [](const SparseVec& a, const SparseVec& b) { return a.begin()->first < b.begin()->first; });
  return done;
}

void check_columns(const SparseMatrix& a) {
  for (const auto& r : a.rows) {
    if (!r.empty() && r.terms().back().first >= a.cols) throw UsageError("matrix entry outside declared column range");
  }
}

}  // namespace

SparseMatrix SparseMatrix::identity(const cyc::CycContext& c, std::size_t n) {
  SparseMatrix m(c, n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows[i] = SparseVec::single(static_cast<std::uint32_t>(i), CycNumber(c, 1));
  return m;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  std::vector<SparseVec::Term> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    CycNumber acc;
    const auto& row = rows[r];
    auto i = row.begin();
    auto j = x.begin();
    while (i != row.end() && j != x.end()) {
      if (i->first < j->first) {
        ++i;
      } else if (j->first < i->first) {
        ++j;
      } else {
        acc.add_product(i->second, j->second);
        ++i;
        ++j;
      }
    }
    if (!acc.is_zero()) out.emplace_back(static_cast<std::uint32_t>(r), std::move(acc));
  }
  return SparseVec::from_sorted(std::move(out));
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols != rhs.rows.size()) throw UsageError("matrix product with incompatible shapes");
  SparseMatrix out;
  out.ctx = ctx ? ctx : rhs.ctx;
  out.cols = rhs.cols;
  out.rows.resize(rows.size());
  DenseAccumulator acc(rhs.cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [k, c] : rows[r]) acc.add_scaled(rhs.rows[k], c);
    out.rows[r] = acc.finish();
  }
  return out;
}

std::optional<SparseVec> solve_linear(const SparseMatrix& a, const SparseVec& b) {
  check_columns(a);
  if (!b.empty() && b.terms().back().first >= a.rows.size()) throw UsageError("right-hand side longer than matrix");
  const auto aug = static_cast<std::uint32_t>(a.cols);
  std::vector<SparseVec> rows;
  rows.reserve(a.rows.size());
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    const CycNumber* br = b.find(static_cast<std::uint32_t>(r));
    if (br == nullptr) {
      rows.push_back(a.rows[r]);
    } else {
      rows.push_back(a.rows[r] + SparseVec::single(aug, *br));
    }
  }
  Reduction red = eliminate(std::move(rows), a.cols, a.cols + 1);
  if (!red.consistent) return std::nullopt;
  std::vector<SparseVec::Term> x;
  for (const auto& p : red.pivots) {
    if (const CycNumber* v = p.row.find(aug)) x.emplace_back(p.col, *v);
  }
  SparseVec sol = SparseVec::from_unsorted(std::move(x));
  if (a.apply(sol) != b) throw Error("linear solve failed back-substitution check");
  return sol;
}

std::vector<SparseVec> nullspace(const SparseMatrix& a) {
  check_columns(a);
  Reduction red = eliminate(a.rows, a.cols, a.cols);
  std::vector<char> is_pivot(a.cols, 0);
  for (const auto& p : red.pivots) is_pivot[p.col] = 1;
  std::vector<SparseVec> basis;
  for (std::size_t f = 0; f < a.cols; ++f) {
    if (is_pivot[f]) continue;
    const auto fc = static_cast<std::uint32_t>(f);
    std::vector<SparseVec::Term> v;
    v.emplace_back(fc, CycNumber(*a.ctx, 1));
    for (const auto& p : red.pivots) {
      if (const CycNumber* c = p.row.find(fc)) v.emplace_back(p.col, -*c);
    }
    basis.push_back(SparseVec::from_unsorted(std::move(v)));
  }
  basis = rref_leftmost(std::move(basis));
  for (const auto& v : basis) {
    if (!a.apply(v).empty()) throw Error("nullspace vector failed the A v = 0 check");
  }
  return basis;
}

std::optional<SparseMatrix> invert_matrix(const SparseMatrix& a) {
  check_columns(a);
  const std::size_t n = a.cols;
  if (a.rows.size() != n) throw UsageError("invert_matrix needs a square matrix");
  std::vector<SparseVec> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    rows.push_back(a.rows[r] + SparseVec::single(static_cast<std::uint32_t>(n + r), CycNumber(*a.ctx, 1)));
  }
  Reduction red = eliminate(std::move(rows), n, 2 * n);
  if (red.pivots.size() != n) return std::nullopt;
  SparseMatrix inv(*a.ctx, n, n);
  for (const auto& p : red.pivots) {
    std::vector<SparseVec::Term> t;
    for (const auto& [k, c] : p.row) {
      if (k >= n) t.emplace_back(static_cast<std::uint32_t>(k - n), c);
    }
    inv.rows[p.col] = SparseVec::from_sorted(std::move(t));
  }
  if (!(a * inv == SparseMatrix::identity(*a.ctx, n))) throw Error("matrix inverse failed the A A^-1 = I check");
  return inv;
}

std::size_t rank_of(const std::vector<SparseVec>& vectors) {
  return rref_leftmost(vectors).size();
}

}  // namespace ribbonforge
