// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "ribbonforge/error.hpp"
#include "ribbonforge/ribbon.hpp"
#include "support.hpp"

using namespace ribbonforge;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << what;
      ok = false;
    }
  }
  void require(const AxiomReport& r, const std::string& what) {
    for (const auto& c : r.checks) require(c.passed, what + ": " + c.name + " " + c.witness);
  }
};

struct Cell {
  Family f;
  DoubleData dd;
};

// Builds are shared between criteria.
const Cell& cell(int m, int n) {
  static std::map<std::pair<int, int>, Cell> cache;
  auto it = cache.find({m, n});
  if (it == cache.end()) {
    Family f = m == 1 ? build_taft(n) : build_radford(m, n);
    DoubleData dd = build_double(f);
    it = cache.emplace(std::pair{m, n}, Cell{std::move(f), std::move(dd)}).first;
  }
  return it->second;
}

const RibbonReport& ribbon(int m, int n) {
  static std::map<std::pair<int, int>, RibbonReport> cache;
  auto it = cache.find({m, n});
  if (it == cache.end()) it = cache.emplace(std::pair{m, n}, classify_ribbon(cell(m, n).f, cell(m, n).dd)).first;
  return it->second;
}

Depth depth_for(std::size_t dim) { return dim <= kDefaultFullBound ? Depth::Full : Depth::Generators; }

void structure(Outcome& o) {
  for (auto [m, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
    const Cell& c = cell(m, n);
    const std::string tag = c.f.descriptor;
    o.require(verify_hopf_axioms(*c.f.base, Depth::Full), tag);
    o.require(verify_hopf_axioms(*c.f.dual, Depth::Full), tag + " dual");
    o.require(verify_hopf_axioms(*c.f.dual_cop, Depth::Full), tag + " dual cop");
    const Depth d = depth_for(c.dd.dim());
    if ((m != 3 || n != 3) && d != Depth::Full) o.require(false, tag + " double not checked at full depth");
    o.require(verify_hopf_axioms(*c.dd.dbl, d), tag + " double");
  }
}

void product_table(Outcome& o) {
  for (auto [m, n] : {std::pair{2, 3}, {3, 3}}) {
    const AxiomReport r = verify_dual_structure(cell(m, n).f);
    const AxiomCheck& c = r.check("dual-product-table");
    o.require(c.passed && c.cases == static_cast<std::size_t>(m * m * n * n * n * n),
              cell(m, n).f.descriptor + " " + c.witness);
  }
}

void dual_structure(Outcome& o) {
  for (auto [m, n] : {std::pair{2, 3}, {3, 3}}) {
    const AxiomReport r = verify_dual_structure(cell(m, n).f);
    for (const char* name : {"alpha-beta-relations", "coproduct-beta", "coproduct-alpha", "counit-alpha-beta",
                             "antipode-alpha", "antipode-beta"}) {
      o.require(r.check(name).passed, cell(m, n).f.descriptor + " " + name + " " + r.check(name).witness);
    }
  }
}

void dual_basis(Outcome& o) {
  const AxiomReport r = verify_dual_basis_formula(cell(2, 3).f);
  o.require(r, "radford(2,3)");
  o.require(r.check("dual-basis-expansion").cases == 18, "expected 18 (i, j) cases");
}

void quasitriangular(Outcome& o) {
  for (auto [m, n] : {std::pair{2, 1}, {2, 3}}) {
    const AxiomReport r = verify_quasitriangular(cell(m, n).dd, Depth::Full);
    o.require(r, cell(m, n).f.descriptor);
    o.require(r.check("intertwining").cases == cell(m, n).dd.dim(), "intertwining not run on every basis element");
  }
}

void integrals(Outcome& o) {
  for (auto [m, n] : {std::pair{2, 3}, {3, 3}}) {
    const RibbonReport& r = ribbon(m, n);
    for (const char* name : {"base-left-integral", "dual-right-integral", "base-distinguished-character",
                             "base-distinguished-grouplike", "double-unimodular", "double-distinguished-character",
                             "double-distinguished-grouplike"}) {
      o.require(r.checks.check(name).passed, cell(m, n).f.descriptor + " " + name);
    }
  }
}

void drinfeld(Outcome& o) {
  const Cell& c = cell(2, 3);
  o.require(verify_explicit_r_and_u(c.f, c.dd).check("drinfeld-u-closed-form").passed, "closed form of u");
  const AxiomReport r = verify_drinfeld_u(c.dd, Depth::Generators);
  o.require(r.check("u-conjugation").passed, "u a u^-1 = S^2(a)");
  o.require(r.check("u-coproduct").passed, "Delta(u)");
  o.require(r, "radford(2,3)");
}

void parity(Outcome& o) {
  for (int m : {2, 3, 4}) {
    for (int n : {1, 2, 3}) {
      const RibbonReport& r = ribbon(m, n);
      const std::string tag = cell(m, n).f.descriptor;
      o.require((r.quasi_ribbon_count == 0) == (n % 2 == 0), tag + " quasi-ribbon count");
      o.require(r.ribbon_count == expected_ribbon_count(m, n),
                tag + " ribbon count " + std::to_string(r.ribbon_count));
    }
  }
}

void explicit_elements(Outcome& o) {
  for (auto [m, n] : {std::pair{2, 3}, {3, 3}}) {
    const Cell& c = cell(m, n);
    const RibbonReport& r = ribbon(m, n);
    o.require(r.checks.check("explicit-ribbon-elements").passed, c.f.descriptor + " element sets differ");
    const auto formulas = explicit_ribbon_formulas(c.f, c.dd);
    o.require(formulas.size() == expected_ribbon_count(m, n), c.f.descriptor + " formula count");
    for (const auto& v : formulas) o.require(verify_ribbon_axioms(c.dd, v, depth_for(c.dd.dim())), c.f.descriptor);
  }
}

void taft(Outcome& o) {
  o.require(ribbon(1, 2).ribbon_count == 0, "D(Taft(2)) ribbon count " + std::to_string(ribbon(1, 2).ribbon_count));
  o.require(ribbon(1, 3).ribbon_count == 1, "D(Taft(3)) ribbon count " + std::to_string(ribbon(1, 3).ribbon_count));
}

void negative_controls(Outcome& o) {
  const HopfAlgebra& h = *cell(2, 3).f.base;
  HopfSpec s = test_support::copy_spec(h);
  auto& entry = s.mult_table[1][h.dim() - 1];
  entry = entry.scaled(CycNumber(h.ctx(), 2));
  const HopfPtr bad = HopfAlgebra::create(std::move(s));
  o.require(!verify_hopf_axioms(*bad, Depth::Full).passed(), "corrupted structure constant went unnoticed");
  for (auto [m, n] : {std::pair{2, 3}, {3, 3}, {2, 1}}) {
    const DoubleData& dd = cell(m, n).dd;
    const HopfAlgebra& D = *dd.dbl;
    const bool trivial = D.mul(dd.u, D.apply_antipode(dd.u)) == D.unit();
    const AxiomReport r = verify_ribbon_axioms(dd, D.unit(), Depth::Generators);
    o.require(trivial || !r.passed(), cell(m, n).f.descriptor + " v = 1 passed the ribbon axioms");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"structure verification", structure},
      {"dual product table", product_table},
      {"dual structure of alpha and beta", dual_structure},
      {"dual basis expansion", dual_basis},
      {"quasi-triangularity", quasitriangular},
      {"integrals and distinguished grouplikes", integrals},
      {"Drinfeld element", drinfeld},
      {"ribbon parity table", parity},
      {"explicit ribbon elements", explicit_elements},
      {"Taft cross-check", taft},
      {"negative controls", negative_controls},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first;
    if (!o.ok) std::cout << " -- " << o.note.str();
    std::cout << " (" << std::fixed << std::setprecision(1) << secs << " s)" << std::endl;
    failed += o.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
