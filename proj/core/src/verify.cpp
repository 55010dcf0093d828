#include "ribbonforge/verify.hpp"

#include <random>
#include <stdexcept>

#include "ribbonforge/error.hpp"

namespace ribbonforge {

std::string to_string(Depth d) { return d == Depth::Full ? "full" : "generators"; }

Depth parse_depth(const std::string& s) {
  if (s == "full") return Depth::Full;
  if (s == "generators") return Depth::Generators;
  throw UsageError("unknown verification depth '" + s + "' (expected generators or full)");
}

bool AxiomReport::passed() const { return failures() == 0; }

std::size_t AxiomReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed ? 0 : 1;
  return n;
}

const AxiomCheck& AxiomReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + name);
}

AxiomCheck& AxiomReport::add(std::string name) {
  checks.push_back(AxiomCheck{std::move(name), true, 0, {}});
  return checks.back();
}

std::vector<NamedElement> generator_words(const HopfAlgebra& h, int max_len) {
  const auto& gens = h.generators();
  if (gens.empty()) throw UsageError(h.name() + " has no generating set for generator-depth checks");
  std::vector<NamedElement> words{{"1", h.unit()}};
  std::vector<NamedElement> frontier{{"1", h.unit()}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<NamedElement> next;
    for (const auto& g : gens) {
      for (const auto& w : frontier) {
        NamedElement e{len == 1 ? g.name : g.name + "*" + w.name, len == 1 ? g.value : h.mul(g.value, w.value)};
        next.push_back(e);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return words;
}

namespace {

using Named = NamedElement;

std::string paren(std::initializer_list<const std::string*> names) {
  std::string s = "(";
  bool first = true;
  for (const auto* n : names) {
    if (!first) s += ", ";
    s += *n;
    first = false;
  }
  return s + ")";
}

struct Checker {
  const HopfAlgebra& h;

  void associativity(AxiomCheck& c, const Named& a, const Named& b, const Named& d) const {
    ++c.cases;
    if (h.mul(h.mul(a.value, b.value), d.value) != h.mul(a.value, h.mul(b.value, d.value))) {
      c.fail("(ab)c != a(bc) at " + paren({&a.name, &b.name, &d.name}));
    }
  }

  void unit(AxiomCheck& c, const Named& a) const {
    ++c.cases;
    if (h.mul(h.unit(), a.value) != a.value || h.mul(a.value, h.unit()) != a.value) {
      c.fail("1*a or a*1 differs from a at " + a.name);
    }
  }

  void coassociativity(AxiomCheck& c, const Named& a) const {
    ++c.cases;
    const SparseTensorData d = h.comult(a.value);
    if (tensor::comult_leg(h, d, 0) != tensor::comult_leg(h, d, 1)) {
      c.fail("(Delta(x)id)Delta != (id(x)Delta)Delta at " + a.name);
    }
  }

  void counit(AxiomCheck& c, const Named& a) const {
    ++c.cases;
    const SparseTensorData d = h.comult(a.value);
    if (tensor::counit_leg(h, d, 0) != a.value || tensor::counit_leg(h, d, 1) != a.value) {
      c.fail("counit axiom fails at " + a.name);
    }
  }

  void counit_mult(AxiomCheck& c, const Named& a, const Named& b) const {
    ++c.cases;
    if (h.counit(h.mul(a.value, b.value)) != h.counit(a.value) * h.counit(b.value)) {
      c.fail("eps(ab) != eps(a)eps(b) at " + paren({&a.name, &b.name}));
    }
  }

  void comult_mult(AxiomCheck& c, const Named& a, const Named& b) const {
    ++c.cases;
    const SparseTensorData lhs = h.comult(h.mul(a.value, b.value));
    const SparseTensorData rhs = tensor::mul2(h, h, h.comult(a.value), h.comult(b.value));
    if (lhs != rhs) c.fail("Delta(ab) != Delta(a)Delta(b) at " + paren({&a.name, &b.name}));
  }

  void antipode(AxiomCheck& left, AxiomCheck& right, const Named& a) const {
    ++left.cases;
    ++right.cases;
    const SparseTensorData d = h.comult(a.value);
    const SparseVec expect = h.scalar(h.counit(a.value));
    if (tensor::multiply_legs(h, d, true, false) != expect) left.fail("S(a_1)a_2 != eps(a)1 at " + a.name);
    if (tensor::multiply_legs(h, d, false, true) != expect) right.fail("a_1S(a_2) != eps(a)1 at " + a.name);
  }

  void antipode_inverse(AxiomCheck& c, const Named& a) const {
    ++c.cases;
    if (h.apply_antipode(h.apply_antipode_inv(a.value)) != a.value ||
        h.apply_antipode_inv(h.apply_antipode(a.value)) != a.value) {
      c.fail("S and S^-1 are not inverse at " + a.name);
    }
  }
};

}  // namespace

AxiomReport verify_hopf_axioms(const HopfAlgebra& h, Depth depth, std::size_t full_bound) {
  if (depth == Depth::Full && h.dim() > full_bound) {
    throw UsageError("full verification of " + h.name() + " (dim " + std::to_string(h.dim()) +
                     ") exceeds the full-check bound " + std::to_string(full_bound));
  }
  AxiomReport rep;
  rep.subject = h.name();
  rep.depth = depth;
  rep.checks.reserve(9);  // references below stay valid
  Checker ck{h};
  AxiomCheck& assoc = rep.add("associativity");
  AxiomCheck& unit = rep.add("unit");
  AxiomCheck& coassoc = rep.add("coassociativity");
  AxiomCheck& counit = rep.add("counit");
  AxiomCheck& eps_mult = rep.add("counit-multiplicative");
  AxiomCheck& delta_mult = rep.add("comultiplication-multiplicative");
  AxiomCheck& s_left = rep.add("antipode-left");
  AxiomCheck& s_right = rep.add("antipode-right");
  AxiomCheck& s_inv = rep.add("antipode-invertible");

  // Unit maps: Delta(1) = 1 (x) 1 and eps(1) = 1.
  ++delta_mult.cases;
  if (h.comult(h.unit()) != tensor::outer2(h.unit(), h.unit(), h.dim())) delta_mult.fail("Delta(1) != 1(x)1");
  ++eps_mult.cases;
  if (!h.counit(h.unit()).is_one()) eps_mult.fail("eps(1) != 1");

  std::vector<Named> singles;
  std::vector<Named> pairs_right;
  std::vector<Named> coalg;
  std::vector<Named> left;
  if (depth == Depth::Full) {
    for (std::uint32_t i = 0; i < h.dim(); ++i) singles.push_back({h.label(i), h.basis(i)});
    left = singles;
    pairs_right = singles;
    coalg = singles;
  } else {
    left = h.generators();
    pairs_right = generator_words(h, 2);
    coalg = generator_words(h, 3);
    singles = pairs_right;
  }

  for (const auto& a : left) {
    for (const auto& b : left) {
      for (const auto& c : pairs_right) {
        ck.associativity(assoc, a, b, c);
        if (!assoc.passed) break;
      }
      if (!assoc.passed) break;
    }
    if (!assoc.passed) break;
  }
  for (const auto& a : coalg) ck.unit(unit, a);
  for (const auto& a : coalg) {
    ck.coassociativity(coassoc, a);
    ck.counit(counit, a);
    ck.antipode(s_left, s_right, a);
    ck.antipode_inverse(s_inv, a);
  }
  for (const auto& a : left) {
    for (const auto& b : pairs_right) {
      ck.counit_mult(eps_mult, a, b);
      if (delta_mult.passed) ck.comult_mult(delta_mult, a, b);
    }
  }
  return rep;
}

AxiomReport sample_hopf_identities(const HopfAlgebra& h, std::uint64_t seed, std::size_t samples) {
  AxiomReport rep;
  rep.subject = h.name() + " sampled";
  rep.depth = Depth::Generators;
  rep.checks.reserve(5);
  Checker ck{h};
  AxiomCheck& assoc = rep.add("associativity");
  AxiomCheck& eps_mult = rep.add("counit-multiplicative");
  AxiomCheck& delta_mult = rep.add("comultiplication-multiplicative");
  AxiomCheck& s_left = rep.add("antipode-left");
  AxiomCheck& s_right = rep.add("antipode-right");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, h.dim() - 1);
  auto draw = [&] {
    const std::uint32_t i = pick(rng);
    return Named{h.label(i), h.basis(i)};
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const Named a = draw(), b = draw(), c = draw();
    ck.associativity(assoc, a, b, c);
    ck.counit_mult(eps_mult, a, b);
    ck.comult_mult(delta_mult, a, b);
    ck.antipode(s_left, s_right, c);
  }
  return rep;
}

}  // namespace ribbonforge
