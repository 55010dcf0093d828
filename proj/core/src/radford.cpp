#include "ribbonforge/radford.hpp"

#include "ribbonforge/dual.hpp"
#include "ribbonforge/error.hpp"
#include "ribbonforge/linalg.hpp"
#include "ribbonforge/qcalc.hpp"

namespace ribbonforge {

namespace {

using Table = std::vector<std::vector<SparseVec>>;

SparseVec table_mul(const Table& t, const SparseVec& a, const SparseVec& b) {
  std::vector<SparseVec::Term> terms;
  for (const auto& [i, ci] : a) {
    for (const auto& [j, cj] : b) {
      for (const auto& [k, ck] : t[i][j]) terms.emplace_back(k, ci * cj * ck);
    }
  }
  return SparseVec::from_unsorted(std::move(terms));
}

SparseTensorData table_mul2(const Table& t, const SparseTensorData& x, const SparseTensorData& y) {
  const std::uint64_t d = t.size();
  std::vector<SparseTensorData::Term> terms;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      const SparseVec& left = t[kx / d][ky / d];
      const SparseVec& right = t[kx % d][ky % d];
      const CycNumber c = cx * cy;
      for (const auto& [a, ca] : left) {
        for (const auto& [b, cb] : right) terms.emplace_back(a * d + b, c * ca * cb);
      }
    }
  }
  return SparseTensorData::from_unsorted(std::move(terms));
}

std::string power(const std::string& base, std::int64_t e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

void require_passed(const AxiomReport& rep) {
  for (const auto& c : rep.checks) {
    if (!c.passed) throw VerificationFailure(rep.subject + ": " + c.name + " fails: " + c.witness);
  }
}

// g has order m*n; x^n = g^n - 1. With m = 1 this is the Taft algebra.
Family build_family(int m, int n, std::string descriptor, std::string name) {
  Family f;
  f.descriptor = std::move(descriptor);
  f.m = m;
  f.n = n;
  const std::int64_t order = static_cast<std::int64_t>(m) * n;
  f.ctx = cyc::make_context(order);
  const auto& ctx = *f.ctx;
  f.xi = cyc::root_power(ctx, 1);
  f.q = cyc::root_power(ctx, m);

  const auto d = static_cast<std::uint32_t>(order * n);
  std::vector<CycNumber> qpow;
  for (int k = 0; k < n; ++k) qpow.push_back(f.q.pow(k));

  HopfSpec s;
  s.name = std::move(name);
  s.ctx = f.ctx;
  for (std::uint32_t b = 0; b < d; ++b) s.labels.push_back(monomial_label(b / n, b % n));

  Table table(d, std::vector<SparseVec>(d));
  for (std::uint32_t a = 0; a < d; ++a) {
    const std::int64_t i = a / n, j = a % n;
    for (std::uint32_t b = 0; b < d; ++b) {
      const std::int64_t k = b / n, l = b % n;
      const CycNumber& c = qpow[(j * k) % n];
      const std::int64_t gi = (i + k) % order;
      const std::int64_t s_exp = j + l;
      if (s_exp < n) {
        table[a][b] = SparseVec::single(f.index(gi, s_exp), c);
      } else {
        // x^(j+l) = (g^n - 1) x^(j+l-n)
        const std::int64_t r = s_exp - n;
        table[a][b] = SparseVec::from_unsorted({{f.index(gi + n, r), c}, {f.index(gi, r), -c}});
      }
    }
  }

  const SparseVec one = SparseVec::single(0, CycNumber(ctx, 1));
  const SparseVec g = f.g_x(1, 0);
  const SparseVec g_inv = f.g_x(order - 1, 0);
  const SparseVec x = n > 1 ? f.g_x(0, 1) : g - one;

  // Delta(x^j) by repeated multiplication of Delta(x) = x (x) g + 1 (x) x.
  std::vector<SparseTensorData> dx{SparseTensorData::single(0, CycNumber(ctx, 1))};
  if (n > 1) {
    const SparseTensorData delta_x = SparseTensorData::from_unsorted(
        {{std::uint64_t{f.index(0, 1)} * d + f.index(1, 0), CycNumber(ctx, 1)},
         {std::uint64_t{f.index(0, 0)} * d + f.index(0, 1), CycNumber(ctx, 1)}});
    for (int j = 1; j < n; ++j) dx.push_back(table_mul2(table, dx.back(), delta_x));
  }
  const SparseVec s_x = table_mul(table, x, g_inv).scaled(CycNumber(ctx, -1));
  std::vector<SparseVec> sx_pow{one};
  for (int j = 1; j < n; ++j) sx_pow.push_back(table_mul(table, sx_pow.back(), s_x));

  s.comult.reserve(d);
  s.counit.reserve(d);
  s.antipode.reserve(d);
  for (std::uint32_t b = 0; b < d; ++b) {
    const std::int64_t i = b / n, j = b % n;
    const std::uint32_t gi = f.index(i, 0);
    s.comult.push_back(table_mul2(table, SparseTensorData::single(std::uint64_t{gi} * d + gi, CycNumber(ctx, 1)), dx[j]));
    s.counit.push_back(CycNumber(ctx, j == 0 ? 1 : 0));
    // S(g^i x^j) = S(x)^j S(g)^i
    s.antipode.push_back(table_mul(table, sx_pow[j], f.g_x(-i, 0)));
  }
  s.unit = one;
  s.generators = {{"g", g}, {"x", x}};
  s.mult_table = std::move(table);
  f.base = HopfAlgebra::create(std::move(s));
  require_passed(verify_hopf_axioms(*f.base, Depth::Full, std::max<std::size_t>(d, kDefaultFullBound)));

  // The dual is generated by alpha and beta; build it once, then attach them.
  HopfPtr bare = dual_hopf(f.base);
  const AlphaBeta ab = alpha_beta(*bare, m, n);
  f.alpha = ab.alpha;
  f.beta = ab.beta;
  std::vector<NamedElement> dual_gens{{"alpha", f.alpha}};
  if (n > 1) dual_gens.push_back({"beta", f.beta});
  f.dual = dual_hopf(f.base, dual_gens);
  f.dual_cop = coopposite(f.dual);

  f.alpha_powers.push_back(f.dual->unit());
  for (std::int64_t a = 1; a < order; ++a) f.alpha_powers.push_back(f.dual->mul(f.alpha_powers.back(), f.alpha));
  f.beta_powers.push_back(f.dual->unit());
  for (int b = 1; b < n; ++b) f.beta_powers.push_back(f.dual->mul(f.beta_powers.back(), f.beta));

  for (std::int64_t i = 0; i < order; ++i) {
    f.base_grouplike_candidates.push_back({i == 0 ? "1" : power("g", i), f.g_x(i, 0)});
  }
  for (std::int64_t k = 0; k < n; ++k) {
    f.dual_grouplike_candidates.push_back({k == 0 ? "eps" : power("alpha", m * k), f.alpha_powers[m * k]});
  }
  return f;
}

}  // namespace

std::string monomial_label(std::int64_t i, std::int64_t j) {
  if (i == 0 && j == 0) return "1";
  return power("g", i) + power("x", j);
}

std::uint32_t Family::index(std::int64_t i, std::int64_t j) const {
  const std::int64_t order = group_order();
  return static_cast<std::uint32_t>((((i % order) + order) % order) * n + j);
}

SparseVec Family::g_x(std::int64_t i, std::int64_t j) const {
  return SparseVec::single(index(i, j), CycNumber(*ctx, 1));
}

SparseVec Family::alpha_beta_word(std::int64_t a, std::int64_t b) const {
  if (b >= n) return {};
  const std::int64_t order = group_order();
  const std::int64_t r = ((a % order) + order) % order;
  return dual->mul(alpha_powers[r], beta_powers[b]);
}

Family build_radford(int m, int n) {
  if (m < 2) throw UsageError("radford family needs m >= 2 (got m = " + std::to_string(m) + ")");
  if (n < 1) throw UsageError("radford family needs n >= 1 (got n = " + std::to_string(n) + ")");
  return build_family(m, n, "radford(" + std::to_string(m) + "," + std::to_string(n) + ")",
                      "R(" + std::to_string(m) + "," + std::to_string(n) + ")");
}

Family build_taft(int n) {
  if (n < 2) throw UsageError("taft family needs n >= 2 (got n = " + std::to_string(n) + ")");
  return build_family(1, n, "taft(" + std::to_string(n) + ")", "A(" + std::to_string(n) + ")");
}

AlphaBeta alpha_beta(const HopfAlgebra& hdual, int m, int n) {
  const std::int64_t order = static_cast<std::int64_t>(m) * n;
  if (hdual.dim() != static_cast<std::uint64_t>(order * n)) {
    throw MismatchError(hdual.name() + " does not have the dimension of the (" + std::to_string(m) + "," +
                        std::to_string(n) + ") dual");
  }
  const auto& ctx = hdual.ctx();
  std::vector<SparseVec::Term> a_terms, b_terms;
  for (std::int64_t i = 0; i < order; ++i) {
    a_terms.emplace_back(static_cast<std::uint32_t>(i * n), cyc::root_power(ctx, i));
    if (n > 1) b_terms.emplace_back(static_cast<std::uint32_t>(i * n + 1), CycNumber(ctx, 1));
  }
  AlphaBeta ab{SparseVec::from_sorted(std::move(a_terms)), SparseVec::from_sorted(std::move(b_terms))};

  std::vector<SparseVec> apow{hdual.unit()};
  for (std::int64_t i = 1; i <= order; ++i) apow.push_back(hdual.mul(apow.back(), ab.alpha));
  if (apow.back() != hdual.unit()) throw VerificationFailure("alpha^mn != eps in " + hdual.name());
  std::vector<SparseVec> bpow{hdual.unit()};
  for (int j = 1; j <= n; ++j) bpow.push_back(hdual.mul(bpow.back(), ab.beta));
  if (n > 1 && !bpow.back().empty()) throw VerificationFailure("beta^n != 0 in " + hdual.name());
  const CycNumber xi = cyc::root_power(ctx, 1);
  if (hdual.mul(ab.beta, ab.alpha) != hdual.mul(ab.alpha, ab.beta).scaled(xi)) {
    throw VerificationFailure("beta alpha != xi alpha beta in " + hdual.name());
  }
  std::vector<SparseVec> words;
  for (std::int64_t i = 0; i < order; ++i) {
    for (int j = 0; j < n; ++j) words.push_back(hdual.mul(apow[i], bpow[j]));
  }
  if (rank_of(words) != hdual.dim()) throw VerificationFailure("alpha and beta do not generate " + hdual.name());
  return ab;
}

AxiomReport verify_dual_structure(const Family& f, std::size_t full_bound) {
  const HopfAlgebra& hd = *f.dual;
  if (hd.dim() > full_bound) {
    throw UsageError("dual product table of " + f.descriptor + " exceeds the full-check bound");
  }
  const auto& ctx = *f.ctx;
  const std::int64_t order = f.group_order();
  const int n = f.n;
  const int m = f.m;
  qcalc::QBinomialTable qb(ctx, f.q);
  AxiomReport rep;
  rep.subject = f.descriptor + " dual";
  rep.depth = Depth::Full;
  rep.checks.reserve(8);

  AxiomCheck& table = rep.add("dual-product-table");
  for (std::uint32_t a = 0; a < hd.dim(); ++a) {
    const std::int64_t i = a / n, j = a % n;
    for (std::uint32_t b = 0; b < hd.dim(); ++b) {
      const std::int64_t k = b / n, l = b % n;
      ++table.cases;
      SparseVec expect;
      if (k == (i + j) % order && l + j < n) expect = SparseVec::single(f.index(i, j + l), qb.binomial(l + j, j));
      if (hd.product(a, b) != expect) table.fail(hd.label(a) + " * " + hd.label(b));
    }
  }

  const SparseVec& eps = hd.unit();
  AxiomCheck& rel = rep.add("alpha-beta-relations");
  rel.cases = 3;
  if (f.alpha_beta_word(order, 0) != eps || hd.mul(f.alpha_powers.back(), f.alpha) != eps) rel.fail("alpha^mn != eps");
  if (n > 1 && !hd.mul(f.beta_powers.back(), f.beta).empty()) rel.fail("beta^n != 0");
  if (hd.mul(f.beta, f.alpha) != hd.mul(f.alpha, f.beta).scaled(f.xi)) rel.fail("beta alpha != xi alpha beta");

  const HopfAlgebra& cop = *f.dual_cop;
  const std::uint64_t d = cop.dim();
  AxiomCheck& db = rep.add("coproduct-beta");
  ++db.cases;
  const SparseTensorData beta_expect =
      tensor::outer2(f.beta, eps, d) + tensor::outer2(f.alpha_beta_word(m, 0), f.beta, d);
  if (cop.comult(f.beta) != beta_expect) db.fail("Delta(beta) != beta (x) 1 + alpha^m (x) beta");

  AxiomCheck& da = rep.add("coproduct-alpha");
  ++da.cases;
  SparseTensorData alpha_expect = tensor::outer2(f.alpha, f.alpha, d);
  const CycNumber lead = f.xi.pow(n) - CycNumber(ctx, 1);
  for (int k = 1; k < n; ++k) {
    const int l = n - k;
    const CycNumber c = lead / (qb.factorial(k) * qb.factorial(l));
    alpha_expect = alpha_expect + tensor::outer2(f.alpha_beta_word(static_cast<std::int64_t>(m) * k + 1, l),
                                                 f.alpha_beta_word(1, k).scaled(c), d);
  }
  if (cop.comult(f.alpha) != alpha_expect) da.fail("Delta(alpha) differs from its closed form");

  AxiomCheck& ce = rep.add("counit-alpha-beta");
  ce.cases = 2;
  if (!cop.counit(f.alpha).is_one()) ce.fail("eps(alpha) != 1");
  if (!cop.counit(f.beta).is_zero()) ce.fail("eps(beta) != 0");

  AxiomCheck& sa = rep.add("antipode-alpha");
  ++sa.cases;
  if (cop.apply_antipode(f.alpha) != f.alpha_beta_word(order - 1, 0)) sa.fail("S(alpha) != alpha^(mn-1)");
  AxiomCheck& sb = rep.add("antipode-beta");
  ++sb.cases;
  if (cop.apply_antipode(f.beta) != f.alpha_beta_word(-m, 1).scaled(CycNumber(ctx, -1))) {
    sb.fail("S(beta) != -alpha^(-m) beta");
  }
  return rep;
}

AxiomReport verify_dual_structure(int m, int n) { return verify_dual_structure(build_radford(m, n)); }

AxiomReport verify_dual_basis_formula(const Family& f) {
  const auto& ctx = *f.ctx;
  const std::int64_t order = f.group_order();
  qcalc::QBinomialTable qb(ctx, f.q);
  AxiomReport rep;
  rep.subject = f.descriptor + " dual basis";
  rep.depth = Depth::Full;
  AxiomCheck& c = rep.add("dual-basis-expansion");
  const CycNumber inv_order = CycNumber(ctx, Rational(1, order));
  for (std::int64_t i = 0; i < order; ++i) {
    for (int j = 0; j < f.n; ++j) {
      SparseVec sum;
      for (std::int64_t k = 0; k < order; ++k) {
        sum = sum + f.alpha_beta_word(k, j).scaled(cyc::root_power(ctx, -i * k));
      }
      const SparseVec y = sum.scaled(inv_order / qb.factorial(j));
      ++c.cases;
      if (y != f.dual->basis(f.index(i, j))) c.fail("y_" + std::to_string(i) + "," + std::to_string(j));
    }
  }
  return rep;
}

AxiomReport verify_dual_basis_formula(int m, int n) { return verify_dual_basis_formula(build_radford(m, n)); }

}  // namespace ribbonforge
