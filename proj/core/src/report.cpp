#include "ribbonforge/report.hpp"

#include <json.hpp>
#include <sstream>

namespace ribbonforge {

using Json = nlohmann::ordered_json;

bool VerifyRun::passed() const { return failures() == 0; }

std::size_t VerifyRun::failures() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.failures();
  return n;
}

namespace {

Depth depth_for(const HopfAlgebra& h, const VerifyOptions& o) {
  return o.depth == Depth::Full && h.dim() <= o.full_bound ? Depth::Full : Depth::Generators;
}

std::string family_name(const Family& f) { return f.is_taft() ? "taft" : "radford"; }

Json checks_json(const AxiomReport& r) {
  Json arr = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["cases"] = c.cases;
    if (!c.passed) j["witness"] = c.witness;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json suite_json(const AxiomReport& r) {
  Json j;
  j["subject"] = r.subject;
  j["depth"] = to_string(r.depth);
  j["passed"] = r.passed();
  j["checks"] = checks_json(r);
  return j;
}

std::vector<std::string> failed_names(const AxiomReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

Json root_json(const HopfAlgebra& d, const SquareRoot& r) {
  Json j;
  j["name"] = r.name;
  j["element"] = d.format(r.element);
  j["grouplike"] = r.grouplike;
  j["s2_conjugation"] = r.s2_conjugation;
  j["ribbon"] = r.is_ribbon;
  j["failed_axioms"] = failed_names(r.axioms);
  return j;
}

Json header(const std::string& kind, const Family& f) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = kind;
  j["family"] = family_name(f);
  j["descriptor"] = f.descriptor;
  j["m"] = f.m;
  j["n"] = f.n;
  // n = 1 collapses R(m,1) to the group algebra of Z_m.
  j["degenerate"] = f.n == 1;
  return j;
}

std::string line(const AxiomCheck& c) {
  std::string s = "  " + std::string(c.passed ? "ok   " : "FAIL ") + c.name + " (" + std::to_string(c.cases) + ")";
  if (!c.passed) s += ": " + c.witness;
  return s + "\n";
}

}  // namespace

VerifyRun run_verify(const Family& f, const VerifyOptions& options) {
  VerifyRun run;
  run.descriptor = f.descriptor;
  run.m = f.m;
  run.n = f.n;
  run.options = options;
  run.dim_h = f.base->dim();
  for (const auto& h : {f.base, f.dual, f.dual_cop}) {
    run.suites.push_back(verify_hopf_axioms(*h, depth_for(*h, options), options.full_bound));
  }
  run.suites.push_back(verify_dual_structure(f, std::max<std::size_t>(options.full_bound, f.base->dim())));
  run.suites.push_back(verify_dual_basis_formula(f));

  const DoubleData dd = build_double(f, options.budget);
  const HopfAlgebra& D = *dd.dbl;
  run.dim_d = D.dim();
  const Depth dd_depth = depth_for(D, options);
  run.suites.push_back(verify_hopf_axioms(D, dd_depth, options.full_bound));
  run.suites.push_back(sample_hopf_identities(D, options.seed, options.samples));
  run.suites.push_back(verify_double_structure(dd));
  run.suites.push_back(verify_quasitriangular(dd, dd_depth));
  run.suites.push_back(verify_drinfeld_u(dd, dd_depth));
  run.suites.push_back(verify_explicit_r_and_u(f, dd));
  return run;
}

std::string verify_json(const VerifyRun& run) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = "verify";
  j["descriptor"] = run.descriptor;
  j["m"] = run.m;
  j["n"] = run.n;
  j["dim_h"] = run.dim_h;
  j["dim_d"] = run.dim_d;
  j["requested_depth"] = to_string(run.options.depth);
  j["full_bound"] = run.options.full_bound;
  j["seed"] = run.options.seed;
  j["samples"] = run.options.samples;
  j["failures"] = run.failures();
  j["passed"] = run.passed();
  Json suites = Json::array();
  for (const auto& s : run.suites) suites.push_back(suite_json(s));
  j["suites"] = std::move(suites);
  return j.dump(2) + "\n";
}

std::string verify_text(const VerifyRun& run) {
  std::ostringstream out;
  out << run.descriptor << ": dim H = " << run.dim_h << ", dim D = " << run.dim_d << "\n";
  for (const auto& s : run.suites) {
    out << s.subject << " [" << to_string(s.depth) << "]\n";
    for (const auto& c : s.checks) out << line(c);
  }
  out << "failures: " << run.failures() << "\n";
  return out.str();
}

std::string ribbon_json(const Family& f, const DoubleData& dd, const RibbonReport& rep, std::size_t full_bound) {
  const HopfAlgebra& H = *f.base;
  const HopfAlgebra& Hd = *f.dual;
  const HopfAlgebra& D = *dd.dbl;
  Json j = header("ribbon", f);
  j["dim_h"] = rep.dim_h;
  j["dim_d"] = rep.dim_d;
  j["depth"] = to_string(rep.depth);
  j["full_bound"] = full_bound;

  Json integrals;
  integrals["left_integral_h"] = H.format(rep.left_integral);
  integrals["right_integral_dual"] = Hd.format(rep.dual_right_integral);
  integrals["left_integral_d"] = D.format(rep.double_left_integral);
  j["integrals"] = std::move(integrals);

  Json dist;
  dist["alpha_tilde"] = Hd.format(rep.alpha_tilde);
  dist["g_tilde"] = H.format(rep.g_tilde);
  dist["alpha_tilde_d_is_counit"] = rep.checks.check("double-distinguished-character").passed;
  dist["g_tilde_d"] = D.format(rep.double_g_tilde);
  j["distinguished_grouplikes"] = std::move(dist);
  j["g_alpha"] = D.format(rep.g_alpha);
  j["h_alpha"] = D.format(rep.h_alpha);

  Json orders;
  orders["h"] = rep.grouplikes_h;
  orders["dual"] = rep.grouplikes_dual;
  orders["double"] = rep.grouplikes_double;
  j["grouplike_orders"] = std::move(orders);

  Json r;
  r["summands"] = dd.r_summands();
  r["nonzero_coordinates"] = rep.r_nonzero;
  j["r_matrix"] = std::move(r);
  j["drinfeld_u"] = D.format(rep.u);

  Json roots;
  roots["grouplike"] = Json::array();
  for (const auto& x : rep.grouplike_roots) roots["grouplike"].push_back(root_json(D, x));
  roots["monomial"] = Json::array();
  for (const auto& x : rep.monomial_roots) roots["monomial"].push_back(root_json(D, x));
  j["square_roots"] = std::move(roots);

  Json certs = Json::array();
  for (const auto& c : rep.certificates) {
    Json cj;
    cj["gamma"] = c.gamma_name;
    cj["h"] = c.h_name;
    cj["quasi_ribbon"] = D.format(c.quasi_ribbon);
    cj["s2_condition"] = c.s2_condition;
    cj["is_quasi_ribbon"] = c.is_quasi_ribbon;
    cj["is_ribbon"] = c.is_ribbon;
    cj["axioms"] = checks_json(c.axioms);
    certs.push_back(std::move(cj));
  }
  j["certificates"] = std::move(certs);

  Json counts;
  counts["quasi_ribbon"] = rep.quasi_ribbon_count;
  counts["ribbon"] = rep.ribbon_count;
  counts["expected_ribbon"] = expected_ribbon_count(f.m, f.n);
  j["counts"] = std::move(counts);
  j["ribbon_elements"] = Json::array();
  for (const auto& v : rep.ribbon_elements) j["ribbon_elements"].push_back(D.format(v));
  j["explicit_ribbon_elements"] = Json::array();
  for (const auto& v : rep.explicit_ribbon_elements) j["explicit_ribbon_elements"].push_back(D.format(v));
  j["checks"] = checks_json(rep.checks);
  j["passed"] = rep.passed();
  return j.dump(2) + "\n";
}

std::string ribbon_text(const Family& f, const DoubleData& dd, const RibbonReport& rep) {
  const HopfAlgebra& D = *dd.dbl;
  std::ostringstream out;
  out << f.descriptor << ": dim D = " << rep.dim_d << " (" << to_string(rep.depth) << " depth)";
  if (f.n == 1) out << ", group algebra case";
  out << "\n";
  out << "alpha~ = " << f.dual->format(rep.alpha_tilde) << ", g~ = " << f.base->format(rep.g_tilde) << "\n";
  out << "h_alpha~ = " << D.format(rep.h_alpha) << "\n";
  out << "square roots of h_alpha~:\n";
  for (const auto* list : {&rep.grouplike_roots, &rep.monomial_roots}) {
    const bool monomial = list == &rep.monomial_roots;
    for (const auto& r : *list) {
      if (monomial && r.grouplike) continue;
      out << "  " << r.name << (r.grouplike ? " grouplike" : " not grouplike") << ", u r "
          << (r.is_ribbon ? "is ribbon" : "is not ribbon") << "\n";
    }
  }
  for (const auto& c : rep.certificates) {
    out << "pair (" << c.gamma_name << ", " << c.h_name << "): " << (c.is_ribbon ? "ribbon" : "quasi-ribbon only")
        << "\n";
  }
  out << "quasi-ribbon elements: " << rep.quasi_ribbon_count << "\n";
  out << "ribbon elements: " << rep.ribbon_count << "\n";
  for (std::size_t i = 0; i < rep.ribbon_elements.size(); ++i) {
    out << "  v" << i + 1 << " = " << D.format(rep.ribbon_elements[i]) << "\n";
  }
  for (const auto& c : rep.checks.checks) out << line(c);
  return out.str();
}

}  // namespace ribbonforge
