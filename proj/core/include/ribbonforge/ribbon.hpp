#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ribbonforge/double.hpp"
#include "ribbonforge/grouplike.hpp"
#include "ribbonforge/radford.hpp"
#include "ribbonforge/verify.hpp"

namespace ribbonforge {

/// Invertibility, centrality (D's generators, or every basis element at full
/// depth), v^2 = u S(u), S(v) = v, eps(v) = 1 and Delta(v) = (R^op R)^-1 (v (x) v).
AxiomReport verify_ribbon_axioms(const DoubleData& dd, const SparseVec& v, Depth depth);

/// The ribbon axioms other than centrality all passed.
bool is_quasi_ribbon(const AxiomReport& axioms);

/// g_a = sum x_i a(y_i) for R = sum x_i (x) y_i; a given in dual coordinates of D.
SparseVec g_alpha_element(const DoubleData& dd, const SparseVec& alpha_d);

/// One (gamma, h) in G(H*) x G(H) with gamma^2 = alpha~, h^2 = g~.
struct RibbonCertificate {
  std::string gamma_name;
  std::string h_name;
  SparseVec gamma;  // H* coordinates
  SparseVec h;      // H coordinates
  SparseVec quasi_ribbon;  // u (gamma^-1 ⋈ h^-1)
  /// S^2(y) = h (gamma -> y <- gamma^-1) h^-1 on the generators of H.
  bool s2_condition = false;
  AxiomReport axioms;
  bool is_quasi_ribbon = false;
  bool is_ribbon = false;
};

/// A square root r of h_alpha~ in D and the fate of u r.
struct SquareRoot {
  std::string name;
  SparseVec element;
  bool grouplike = false;
  /// S^2(a) = r^-1 a r on the generators of D.
  bool s2_conjugation = false;
  AxiomReport axioms;  // of u r
  bool is_ribbon = false;
};

struct RibbonReport {
  std::string descriptor;
  int m = 0;
  int n = 0;
  std::size_t dim_h = 0;
  std::size_t dim_d = 0;
  Depth depth = Depth::Generators;

  SparseVec left_integral;        // of H
  SparseVec dual_right_integral;  // of H*, dual coordinates
  SparseVec alpha_tilde;          // H* coordinates
  SparseVec g_tilde;              // H coordinates
  SparseVec double_left_integral;
  SparseVec double_alpha_tilde;   // D* coordinates
  SparseVec double_g_tilde;
  SparseVec g_alpha;
  SparseVec h_alpha;
  std::size_t grouplikes_h = 0;
  std::size_t grouplikes_dual = 0;
  std::size_t grouplikes_double = 0;
  std::size_t r_nonzero = 0;
  SparseVec u;

  std::vector<SquareRoot> grouplike_roots;  // square roots of h_alpha~ in G(D)
  std::vector<SquareRoot> monomial_roots;   // among all alpha^a ⋈ g^b
  std::vector<RibbonCertificate> certificates;
  std::size_t quasi_ribbon_count = 0;
  std::size_t ribbon_count = 0;
  std::vector<SparseVec> ribbon_elements;
  std::vector<SparseVec> explicit_ribbon_elements;

  /// Every comparison against a known closed form or law.
  AxiomReport checks;
  bool passed() const { return checks.passed(); }
};

/// Quasi-ribbon count > 0 iff n odd; ribbon count 1 iff m and n odd, 2 iff m
/// even and n odd (Taft(n) counts as m = 1).
std::size_t expected_ribbon_count(int m, int n);
std::size_t expected_quasi_ribbon_count(int m, int n);

/// Closed-form ribbon elements u (alpha^(m(n+1)/2) ⋈ g^((n-1)/2)) and, for m
/// even, u (alpha^(m(n+1)/2) ⋈ g^((n(m+1)-1)/2)). Empty for n even.
std::vector<SparseVec> explicit_ribbon_formulas(const Family& f, const DoubleData& dd);

/// Full pipeline: integrals and distinguished grouplikes of H, H* and D,
/// h_alpha~ and its square roots, all (gamma, h) certificates and their ribbon
/// axioms, and the comparison with the closed forms. Throws
/// VerificationFailure when the (gamma, h) test and the direct axiom check
/// disagree.
RibbonReport classify_ribbon(const Family& f, const DoubleData& dd, std::size_t full_bound = kDefaultFullBound);

}  // namespace ribbonforge
