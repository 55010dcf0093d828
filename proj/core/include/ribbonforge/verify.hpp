#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ribbonforge/hopf.hpp"

namespace ribbonforge {

enum class Depth { Generators, Full };

inline constexpr std::size_t kDefaultFullBound = 400;

std::string to_string(Depth d);
/// "generators" or "full"; throws UsageError otherwise.
Depth parse_depth(const std::string& s);

/// Outcome of one identity family. `witness` names the first (lowest-index)
/// counterexample when `passed` is false.
struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;

  void fail(std::string w) {
    if (passed) witness = std::move(w);
    passed = false;
  }
};

struct AxiomReport {
  std::string subject;
  Depth depth = Depth::Generators;
  std::vector<AxiomCheck> checks;

  bool passed() const;
  std::size_t failures() const;
  /// Throws std::out_of_range for an unknown check name.
  const AxiomCheck& check(const std::string& name) const;
  AxiomCheck& add(std::string name);
};

/// Associativity, unit, coassociativity, counit, multiplicativity of the
/// counit and comultiplication, both antipode identities and S S^-1 = id.
///
/// Full depth runs every basis pair/triple and requires dim <= full_bound
/// (UsageError otherwise). Generator depth uses the algebra's generators G and
/// the words W_k of length <= k in them: associativity on G x G x W_2,
/// multiplicativity on G x W_2, the coalgebra and antipode identities on W_3.
AxiomReport verify_hopf_axioms(const HopfAlgebra& h, Depth depth, std::size_t full_bound = kDefaultFullBound);

/// Associativity, multiplicativity of Delta and eps, and both antipode
/// identities on basis elements drawn with a seeded mt19937_64. Same seed,
/// same cases.
AxiomReport sample_hopf_identities(const HopfAlgebra& h, std::uint64_t seed, std::size_t samples);

/// Words of length <= max_len in the generators (the unit included), with names.
std::vector<NamedElement> generator_words(const HopfAlgebra& h, int max_len);

}  // namespace ribbonforge
