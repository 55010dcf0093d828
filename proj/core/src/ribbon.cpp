#include "ribbonforge/ribbon.hpp"

#include <algorithm>
#include <future>

#include "ribbonforge/error.hpp"
#include "ribbonforge/integrals.hpp"
#include "ribbonforge/linalg.hpp"

namespace ribbonforge {

namespace {

std::vector<NamedElement> acting_elements(const HopfAlgebra& h, Depth depth) {
  std::vector<NamedElement> out;
  if (depth == Depth::Full) {
    for (std::uint32_t i = 0; i < h.dim(); ++i) out.push_back({h.label(i), h.basis(i)});
  } else {
    out = h.generators();
  }
  return out;
}

// Rescales v so that its first coordinate is 1 (the canonical spanning vector).
SparseVec normalized(const SparseVec& v) {
  if (v.empty()) return v;
  return v.scaled(v.begin()->second.inverse());
}

SparseVec counit_vector(const HopfAlgebra& h) {
  std::vector<SparseVec::Term> terms;
  for (std::uint32_t k = 0; k < h.dim(); ++k) {
    if (!h.counit(k).is_zero()) terms.emplace_back(k, h.counit(k));
  }
  return SparseVec::from_sorted(std::move(terms));
}

// S^2(a) = r^-1 a r on the generators, tested as r S^2(a) = a r.
bool s2_conjugation(const HopfAlgebra& d, const SparseVec& r) {
  for (const auto& a : d.generators()) {
    const SparseVec s2 = d.apply_antipode(d.apply_antipode(a.value));
    if (d.mul(r, s2) != d.mul(a.value, r)) return false;
  }
  return true;
}

std::string power_name(const std::string& base, std::int64_t e) {
  if (e == 0) return base == "alpha" ? "eps" : "1";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

struct Checks {
  AxiomReport& rep;
  void add(const std::string& name, bool ok, const std::string& witness, std::size_t cases = 1) {
    AxiomCheck c{name, true, cases, {}};
    if (!ok) c.fail(witness);
    rep.checks.push_back(std::move(c));
  }
};

}  // namespace

AxiomReport verify_ribbon_axioms(const DoubleData& dd, const SparseVec& v, Depth depth) {
  const HopfAlgebra& D = *dd.dbl;
  AxiomReport rep;
  rep.subject = D.name() + " ribbon axioms";
  rep.depth = depth;
  rep.checks.reserve(6);
  const SparseVec& one = D.unit();
  const SparseVec u_su = D.mul(dd.u, D.apply_antipode(dd.u));

  AxiomCheck& inv = rep.add("invertible");
  ++inv.cases;
  if (v.empty()) {
    inv.fail("v = 0");
  } else {
    // When v^2 = u S(u) the inverse is v (u S(u))^-1; otherwise decide by rank.
    const SparseVec c_inv = D.mul(D.apply_antipode(dd.u_inv), dd.u_inv);
    const SparseVec w = D.mul(v, c_inv);
    if (D.mul(v, w) != one || D.mul(w, v) != one) {
      std::vector<SparseVec> cols;
      cols.reserve(D.dim());
      for (std::uint32_t b = 0; b < D.dim(); ++b) cols.push_back(D.mul(v, D.basis(b)));
      if (rank_of(cols) != D.dim()) inv.fail("left multiplication by v is singular");
    }
  }

  AxiomCheck& central = rep.add("central");
  for (const auto& a : acting_elements(D, depth)) {
    ++central.cases;
    if (D.mul(v, a.value) != D.mul(a.value, v)) central.fail("v " + a.name + " != " + a.name + " v");
  }

  AxiomCheck& sq = rep.add("square");
  ++sq.cases;
  if (D.mul(v, v) != u_su) sq.fail("v^2 != u S(u)");

  AxiomCheck& s = rep.add("antipode-fixed");
  ++s.cases;
  if (D.apply_antipode(v) != v) s.fail("S(v) != v");

  AxiomCheck& eps = rep.add("counit");
  ++eps.cases;
  if (!D.counit(v).is_one()) eps.fail("eps(v) != 1");

  AxiomCheck& co = rep.add("coproduct");
  ++co.cases;
  const SparseTensorData lhs = tensor::mul2(D, D, dd.r_op(), tensor::mul2(D, D, dd.r, D.comult(v)));
  if (lhs != tensor::outer2(v, v, D.dim())) co.fail("R21 R Delta(v) != v (x) v");
  return rep;
}

bool is_quasi_ribbon(const AxiomReport& axioms) {
  for (const auto& c : axioms.checks) {
    if (c.name != "central" && !c.passed) return false;
  }
  return true;
}

SparseVec g_alpha_element(const DoubleData& dd, const SparseVec& alpha_d) {
  const std::uint64_t big = dd.dim();
  std::vector<SparseVec::Term> terms;
  for (const auto& [key, c] : dd.r) {
    if (const CycNumber* a = alpha_d.find(static_cast<std::uint32_t>(key % big))) {
      terms.emplace_back(static_cast<std::uint32_t>(key / big), c * *a);
    }
  }
  return SparseVec::from_unsorted(std::move(terms));
}

std::size_t expected_ribbon_count(int m, int n) {
  if (n % 2 == 0) return 0;
  return m % 2 == 1 ? 1 : 2;
}

std::size_t expected_quasi_ribbon_count(int m, int n) { return expected_ribbon_count(m, n); }

std::vector<SparseVec> explicit_ribbon_formulas(const Family& f, const DoubleData& dd) {
  std::vector<SparseVec> out;
  const std::int64_t m = f.m, n = f.n;
  if (n % 2 == 0) return out;
  const SparseVec a = f.alpha_beta_word(m * (n + 1) / 2, 0);
  out.push_back(dd.dbl->mul(dd.u, dd.pure(a, f.g_x((n - 1) / 2, 0))));
  if (m % 2 == 0) out.push_back(dd.dbl->mul(dd.u, dd.pure(a, f.g_x((n * (m + 1) - 1) / 2, 0))));
  return out;
}

RibbonReport classify_ribbon(const Family& f, const DoubleData& dd, std::size_t full_bound) {
  const HopfAlgebra& H = *f.base;
  const HopfAlgebra& D = *dd.dbl;
  const std::int64_t m = f.m, n = f.n, order = f.group_order();
  RibbonReport rep;
  rep.descriptor = f.descriptor;
  rep.m = f.m;
  rep.n = f.n;
  rep.dim_h = H.dim();
  rep.dim_d = D.dim();
  rep.depth = D.dim() <= full_bound ? Depth::Full : Depth::Generators;
  rep.u = dd.u;
  rep.r_nonzero = dd.r.size();
  rep.checks.subject = f.descriptor + " ribbon classification";
  rep.checks.depth = rep.depth;
  Checks chk{rep.checks};

  // Integrals and distinguished grouplikes of H and H*.
  rep.left_integral = left_integral(H);
  SparseVec t_expect;
  for (std::int64_t i = 0; i < order; ++i) t_expect = t_expect + f.g_x(i, n - 1);
  chk.add("base-left-integral", rep.left_integral == t_expect, "left integral " + H.format(rep.left_integral));
  chk.add("antipode-maps-left-to-right-integrals",
          normalized(H.apply_antipode(rep.left_integral)) == right_integral(H), "S(t) is not a right integral");

  rep.dual_right_integral = dual_right_integral(H);
  SparseVec T_expect;
  for (std::int64_t i = 0; i < order; ++i) {
    T_expect = T_expect + f.alpha_beta_word(i, n - 1).scaled(cyc::root_power(*f.ctx, (n - 1) * i));
  }
  chk.add("dual-right-integral", normalized(rep.dual_right_integral) == normalized(T_expect),
          "right integral " + f.dual->format(rep.dual_right_integral));
  chk.add("dual-right-integral-consistent", normalized(rep.dual_right_integral) == right_integral(*f.dual),
          "solved integral differs from the integral of the built dual");

  rep.alpha_tilde = distinguished_grouplike_dual(H, rep.left_integral);
  chk.add("base-distinguished-character", rep.alpha_tilde == f.alpha_beta_word(-m, 0),
          "alpha~ = " + f.dual->format(rep.alpha_tilde));
  rep.g_tilde = distinguished_grouplike(H, rep.dual_right_integral);
  chk.add("base-distinguished-grouplike", rep.g_tilde == f.g_x(1 - n, 0), "g~ = " + H.format(rep.g_tilde));

  // The double: unimodularity and its distinguished grouplike.
  const auto left_d = left_integrals(D, rep.depth);
  const auto right_d = right_integrals(D, rep.depth);
  chk.add("double-unimodular", left_d.size() == 1 && left_d == right_d, "left and right integrals of D differ");
  if (left_d.size() != 1) throw VerificationFailure("left integral space of " + D.name() + " is not one-dimensional");
  rep.double_left_integral = left_d.front();
  rep.double_alpha_tilde = distinguished_grouplike_dual(D, rep.double_left_integral, rep.depth);
  chk.add("double-distinguished-character", rep.double_alpha_tilde == counit_vector(D), "alpha~_D != eps_D");
  rep.double_g_tilde = distinguished_grouplike(D, dual_right_integral(D));
  chk.add("double-distinguished-grouplike", rep.double_g_tilde == dd.pure(rep.alpha_tilde, rep.g_tilde),
          "g~_D = " + D.format(rep.double_g_tilde));

  rep.g_alpha = g_alpha_element(dd, rep.double_alpha_tilde);
  chk.add("g-alpha-unit", rep.g_alpha == D.unit(), "g_alpha = " + D.format(rep.g_alpha));
  rep.h_alpha = D.mul(rep.g_alpha, D.apply_antipode(rep.double_g_tilde));
  chk.add("h-alpha-closed-form", rep.h_alpha == dd.pure(f.alpha_beta_word(m, 0), f.g_x(n - 1, 0)),
          "h_alpha = " + D.format(rep.h_alpha));

  // Grouplike groups.
  const GrouplikeSet gh = grouplike_set(H, f.base_grouplike_candidates);
  const GrouplikeSet gd = grouplike_set(*f.dual, f.dual_grouplike_candidates);
  std::vector<NamedElement> double_candidates;
  for (const auto& a : gd.elements) {
    for (const auto& b : gh.elements) double_candidates.push_back({a.name + "⋈" + b.name, dd.pure(a.value, b.value)});
  }
  const GrouplikeSet gD = grouplike_set(D, double_candidates);
  rep.grouplikes_h = gh.order();
  rep.grouplikes_dual = gd.order();
  rep.grouplikes_double = gD.order();
  chk.add("grouplike-orders",
          gh.order() == static_cast<std::size_t>(order) && gd.order() == static_cast<std::size_t>(n) &&
              gD.order() == static_cast<std::size_t>(order * n),
          "orders " + std::to_string(gh.order()) + ", " + std::to_string(gd.order()) + ", " +
              std::to_string(gD.order()));

  // Square roots of h_alpha~, in G(D) and among all monomials alpha^a ⋈ g^b.
  auto inspect = [&](std::string name, SparseVec r, bool grouplike) {
    SquareRoot sr;
    sr.name = std::move(name);
    sr.grouplike = grouplike;
    sr.s2_conjugation = s2_conjugation(D, r);
    sr.axioms = verify_ribbon_axioms(dd, D.mul(dd.u, r), rep.depth);
    sr.is_ribbon = sr.axioms.passed();
    sr.element = std::move(r);
    return sr;
  };
  if (const auto target = gD.index_of(rep.h_alpha)) {
    for (auto i : square_root_indices(gD, *target)) {
      rep.grouplike_roots.push_back(inspect(gD.elements[i].name, gD.elements[i].value, true));
    }
  }
  for (std::int64_t a = 0; a < order; ++a) {
    for (std::int64_t b = 0; b < order; ++b) {
      const SparseVec r = dd.pure(f.alpha_powers[a], f.g_x(b, 0));
      if (D.mul(r, r) != rep.h_alpha) continue;
      rep.monomial_roots.push_back(
          inspect(power_name("alpha", a) + "⋈" + power_name("g", b), r, grouplike_violation(D, r).empty()));
    }
  }

  // (gamma, h) pairs and their quasi-ribbon elements.
  const auto at = gd.index_of(rep.alpha_tilde);
  const auto gt = gh.index_of(rep.g_tilde);
  if (!at || !gt) throw VerificationFailure("distinguished grouplikes are not in the supplied grouplike groups");
  for (auto gi : square_root_indices(gd, *at)) {
    for (auto hi : square_root_indices(gh, *gt)) {
      RibbonCertificate cert;
      cert.gamma_name = gd.elements[gi].name;
      cert.h_name = gh.elements[hi].name;
      cert.gamma = gd.elements[gi].value;
      cert.h = gh.elements[hi].value;
      cert.quasi_ribbon = D.mul(dd.u, dd.pure(gd.elements[gd.inverse[gi]].value, gh.elements[gh.inverse[hi]].value));
      rep.certificates.push_back(std::move(cert));
    }
  }
  // Pairs are independent; the double's product memo is safe to fill concurrently.
  std::vector<std::future<void>> jobs;
  for (auto& cert : rep.certificates) {
    jobs.push_back(std::async(std::launch::async, [&f, &dd, &H, &cert, depth = rep.depth] {
      const HopfAlgebra& Hd = *f.dual;
      const Element g_el(f.dual, cert.gamma);
      const Element g_inv_el(f.dual, Hd.apply_antipode(cert.gamma));
      const SparseVec h_inv = H.apply_antipode(cert.h);
      cert.s2_condition = true;
      for (const auto& y : H.generators()) {
        const SparseVec s2 = H.apply_antipode(H.apply_antipode(y.value));
        const SparseVec mid = act_right(act_left(g_el, Element(f.base, y.value)), g_inv_el).coeffs();
        if (s2 != H.mul(H.mul(cert.h, mid), h_inv)) cert.s2_condition = false;
      }
      cert.axioms = verify_ribbon_axioms(dd, cert.quasi_ribbon, depth);
      cert.is_quasi_ribbon = is_quasi_ribbon(cert.axioms);
      cert.is_ribbon = cert.axioms.passed();
    }));
  }
  for (auto& j : jobs) j.get();
  for (const auto& cert : rep.certificates) {
    const std::string who = "(" + cert.gamma_name + ", " + cert.h_name + ")";
    if (!cert.is_quasi_ribbon) {
      throw VerificationFailure("u (gamma^-1 ⋈ h^-1) for " + who + " is not quasi-ribbon");
    }
    if (cert.s2_condition != cert.is_ribbon) {
      throw VerificationFailure("ribbon criterion and direct axiom check disagree for " + who);
    }
  }

  std::vector<SparseVec> distinct;
  for (const auto& c : rep.certificates) {
    if (std::find(distinct.begin(), distinct.end(), c.quasi_ribbon) == distinct.end()) distinct.push_back(c.quasi_ribbon);
    if (c.is_ribbon) rep.ribbon_elements.push_back(c.quasi_ribbon);
  }
  rep.quasi_ribbon_count = distinct.size();
  rep.ribbon_count = rep.ribbon_elements.size();
  chk.add("quasi-ribbon-bijection", distinct.size() == rep.certificates.size(),
          "distinct quasi-ribbon elements fewer than (gamma, h) pairs", rep.certificates.size());

  std::size_t root_ribbons = 0;
  for (const auto& r : rep.grouplike_roots) root_ribbons += r.is_ribbon ? 1 : 0;
  chk.add("square-root-ribbons", root_ribbons == rep.ribbon_count,
          std::to_string(root_ribbons) + " roots give ribbon elements", rep.grouplike_roots.size());

  const bool law = (rep.quasi_ribbon_count > 0) == (n % 2 == 1) && rep.ribbon_count == expected_ribbon_count(f.m, f.n);
  chk.add("ribbon-count-law", law,
          "quasi-ribbon " + std::to_string(rep.quasi_ribbon_count) + ", ribbon " + std::to_string(rep.ribbon_count));

  rep.explicit_ribbon_elements = explicit_ribbon_formulas(f, dd);
  bool same = rep.explicit_ribbon_elements.size() == rep.ribbon_elements.size();
  for (const auto& v : rep.explicit_ribbon_elements) {
    same = same && std::find(rep.ribbon_elements.begin(), rep.ribbon_elements.end(), v) != rep.ribbon_elements.end();
  }
  chk.add("explicit-ribbon-elements", same, "closed-form ribbon elements differ from the classified ones",
          rep.explicit_ribbon_elements.size());
  return rep;
}

}  // namespace ribbonforge
