#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "mullat/decomposition.hpp"
#include "mullat/ring_bridge.hpp"

using namespace mullat;

namespace {

struct Z12Fixture {
  ZnLattice zn = ideal_lattice_zn(12);
  ElementId e1 = zn.element_of_divisor(1);
  ElementId e2 = zn.element_of_divisor(2);
  ElementId e3 = zn.element_of_divisor(3);
  ElementId e4 = zn.element_of_divisor(4);
  ElementId e6 = zn.element_of_divisor(6);
  ElementId e0 = zn.element_of_divisor(12);
  MClosedSet s13 = lift_mult_set(zn, {1, 3, 9});
  MClosedSet s1 = lift_mult_set(zn, {1});
};

Decomposition manual(ElementId target, std::vector<ElementId> comps) {
  Decomposition d;
  d.target = target;
  d.components = std::move(comps);
  return d;
}

}  // namespace

TEST_CASE("enumerate S-primary elements above a target") {
  Z12Fixture f;
  REQUIRE(enumerate_s_primary_above(f.zn.M, f.s13, f.zn.M.top()).empty());
  REQUIRE(enumerate_s_primary_above(f.zn.M, f.s1, f.e0) ==
          std::vector<ElementId>{f.e2, f.e3, f.e4});
  REQUIRE(enumerate_s_primary_above(f.zn.M, f.s13, f.e0) ==
          std::vector<ElementId>{f.e2, f.e4, f.e6, f.e0});
}

TEST_CASE("minimal decomposition of (0) at S = {1}: the Z_4 x Z_3 split") {
  Z12Fixture f;
  const auto d = find_minimal_decomposition(f.zn.M, f.s1, f.e0);
  REQUIRE(d.has_value());
  REQUIRE(d->minimal);
  REQUIRE(d->components == std::vector<ElementId>{f.e3, f.e4});
  REQUIRE(d->radicals == std::vector<ElementId>{f.e3, f.e2});
  REQUIRE(d->saturated_radicals == std::vector<ElementId>{f.e3, f.e2});
  REQUIRE(is_minimal(f.zn.M, f.s1, *d).passed());
}

TEST_CASE("S-primary targets decompose as themselves") {
  Z12Fixture f;
  const auto d = find_minimal_decomposition(f.zn.M, f.s13, f.e0);
  REQUIRE(d.has_value());
  REQUIRE(d->components == std::vector<ElementId>{f.e0});
  REQUIRE(d->witnesses.size() == 1);
  REQUIRE(d->witnesses[0].s == f.e3);
  REQUIRE(d->minimal);
}

TEST_CASE("ineligible targets raise SaturationIsTop") {
  Z12Fixture f;
  REQUIRE(helpers::error_code_of([&] {
            find_minimal_decomposition(f.zn.M, f.s13, f.e3);
          }) == ErrorCode::SaturationIsTop);
  REQUIRE(helpers::error_code_of([&] {
            find_minimal_decomposition(f.zn.M, f.s13, f.zn.M.top());
          }) == ErrorCode::SaturationIsTop);
  REQUIRE(helpers::error_code_of([&] {
            uniqueness_set_P(f.zn.M, f.s13, f.e1);
          }) == ErrorCode::SaturationIsTop);
}

TEST_CASE("eligibility flags report both readings") {
  Z12Fixture f;
  const auto e6 = decomposition_eligibility(f.zn.M, f.s13, f.e6);
  REQUIRE(e6.saturation_proper);
  REQUIRE(e6.s_disjoint);
  const auto e3 = decomposition_eligibility(f.zn.M, f.s13, f.e3);
  REQUIRE(!e3.saturation_proper);
  REQUIRE(!e3.s_disjoint);
}

TEST_CASE("minimality clauses") {
  Z12Fixture f;

  SECTION("single component decompositions are minimal") {
    const auto d = find_minimal_decomposition(f.zn.M, f.s1, f.e4);
    REQUIRE(d.has_value());
    REQUIRE(d->components == std::vector<ElementId>{f.e4});
    REQUIRE(is_minimal(f.zn.M, f.s1, *d).passed());
  }

  SECTION("{(4),(6)} for (0) at S = {(1),(3)} collides on saturated radicals") {
    const PropertyReport r = is_minimal(f.zn.M, f.s13, manual(f.e0, {f.e4, f.e6}));
    REQUIRE(r.failed());
    REQUIRE(r.detail.find("clause 1") != std::string::npos);
    REQUIRE(r.counterexample == std::vector<ElementId>{f.e4, f.e6});
  }

  SECTION("{(2),(3),(4)} for (0) at S = {1} is not minimal") {
    // (2) is redundant ((3) ^ (4) = (0) already) and shares its radical with
    // (4); the checker reports the first failing clause, which is clause 1.
    const PropertyReport r = is_minimal(f.zn.M, f.s1, manual(f.e0, {f.e2, f.e3, f.e4}));
    REQUIRE(r.failed());
    REQUIRE(r.detail.find("clause 1") != std::string::npos);
    REQUIRE(r.counterexample == std::vector<ElementId>{f.e2, f.e4});
  }

  SECTION("redundant components never slip past both clauses") {
    // In Id(Z_n) a redundant S-primary component always collides with a
    // sibling on saturated radicals (clause-2-only failures need embedded
    // primes, which principal ideal rings lack), so any redundancy is caught.
    const PropertyReport r = is_minimal(f.zn.M, f.s1, manual(f.e4, {f.e2, f.e4}));
    REQUIRE(r.failed());
    const auto d = find_minimal_decomposition(f.zn.M, f.s1, f.e4);
    REQUIRE(d.has_value());
    REQUIRE(d->components == std::vector<ElementId>{f.e4});
  }

  SECTION("malformed decompositions are errors, not failures") {
    REQUIRE(helpers::error_code_of([&] {
              is_minimal(f.zn.M, f.s1, manual(f.e0, {f.e2, f.e3}));  // meet is (6)
            }) == ErrorCode::MalformedDecomposition);
    REQUIRE(helpers::error_code_of([&] {
              is_minimal(f.zn.M, f.s1, manual(f.e6, {f.e6}));  // (6) not primary at S={1}
            }) == ErrorCode::MalformedDecomposition);
    REQUIRE(helpers::error_code_of([&] {
              is_minimal(f.zn.M, f.s1, manual(f.e0, {}));
            }) == ErrorCode::MalformedDecomposition);
  }
}

TEST_CASE("every returned decomposition is independently re-checkable") {
  Z12Fixture f;
  for (const MClosedSet* S : {&f.s1, &f.s13})
    for (ElementId a = 0; a < f.zn.M.size(); ++a) {
      if (saturation(f.zn.M, *S, a) == f.zn.M.top()) continue;
      const auto d = find_minimal_decomposition(f.zn.M, *S, a);
      REQUIRE(d.has_value());
      ElementId m = f.zn.M.top();
      for (ElementId q : d->components) m = f.zn.M.meet(m, q);
      REQUIRE(m == a);
      for (std::size_t i = 0; i < d->components.size(); ++i) {
        const SWitnessResult w = is_s_primary(f.zn.M, *S, d->components[i]);
        REQUIRE(w.ok());
        REQUIRE(w.witness->s == d->witnesses[i].s);
        REQUIRE(f.zn.M.radical(d->components[i]) == d->radicals[i]);
      }
      REQUIRE(d->minimal);
      REQUIRE(is_minimal(f.zn.M, *S, *d).passed());
    }
}

TEST_CASE("uniqueness set P") {
  Z12Fixture f;
  REQUIRE(uniqueness_set_P(f.zn.M, f.s1, f.e0) == std::vector<ElementId>{f.e2, f.e3});
  REQUIRE(uniqueness_set_P(f.zn.M, f.s13, f.e0) == std::vector<ElementId>{f.e2});
  REQUIRE(uniqueness_set_P(f.zn.M, f.s13, f.e6) == std::vector<ElementId>{f.e2});
  REQUIRE(uniqueness_set_P(f.zn.M, f.s1, f.e4) == std::vector<ElementId>{f.e2});
}

TEST_CASE("first uniqueness") {
  Z12Fixture f;

  SECTION("(0) at S = {1}: one minimal decomposition, saturated radicals = P") {
    const auto all = enumerate_minimal_decompositions(f.zn.M, f.s1, f.e0);
    REQUIRE(all.size() == 1);
    REQUIRE(all[0].components == std::vector<ElementId>{f.e3, f.e4});
    REQUIRE(verify_first_uniqueness(f.zn.M, f.s1, f.e0).passed());
  }

  SECTION("(0) at S = {(1),(3)}: the {(4),(6)} candidate is rejected") {
    const auto all = enumerate_minimal_decompositions(f.zn.M, f.s13, f.e0);
    REQUIRE(all.size() == 1);
    REQUIRE(all[0].components == std::vector<ElementId>{f.e0});
    REQUIRE(verify_first_uniqueness(f.zn.M, f.s13, f.e0).passed());
  }

  SECTION("single-component case ties {(sqrt a)_S} to P") {
    REQUIRE(verify_first_uniqueness(f.zn.M, f.s1, f.e4).passed());
  }

  SECTION("every eligible target in both S contexts") {
    for (const MClosedSet* S : {&f.s1, &f.s13})
      for (ElementId a = 0; a < f.zn.M.size(); ++a) {
        if (saturation(f.zn.M, *S, a) == f.zn.M.top()) continue;
        REQUIRE(verify_first_uniqueness(f.zn.M, *S, a).passed());
      }
  }

  SECTION("three distinct minimal decompositions share one saturated-radical set") {
    // Z_30 with S = powers of 2: (0) = (3)^(10) = (5)^(6) = (6)^(10), and all
    // three land on {(3),(5)} = P.
    const ZnLattice z30 = ideal_lattice_zn(30);
    const MClosedSet S = lift_mult_set(z30, {1, 2, 4, 8, 16});
    REQUIRE(S.members() ==
            std::vector<ElementId>{z30.element_of_divisor(1), z30.element_of_divisor(2)});
    const ElementId zero = z30.element_of_divisor(30);
    const auto all = enumerate_minimal_decompositions(z30.M, S, zero);
    REQUIRE(all.size() == 3);
    auto comp = [&](const Decomposition& d) {
      std::vector<int> out;
      for (ElementId c : d.components) out.push_back(z30.divisor_of(c));
      return out;
    };
    REQUIRE(comp(all[0]) == std::vector<int>{3, 10});
    REQUIRE(comp(all[1]) == std::vector<int>{5, 6});
    REQUIRE(comp(all[2]) == std::vector<int>{6, 10});
    const std::vector<ElementId> P = uniqueness_set_P(z30.M, S, zero);
    REQUIRE(P == std::vector<ElementId>{z30.element_of_divisor(3), z30.element_of_divisor(5)});
    for (const auto& d : all) {
      std::set<ElementId> sats(d.saturated_radicals.begin(), d.saturated_radicals.end());
      REQUIRE(std::vector<ElementId>(sats.begin(), sats.end()) == P);
    }
    REQUIRE(verify_first_uniqueness(z30.M, S, zero).passed());
  }
}

TEST_CASE("irreducible implies primary") {
  Z12Fixture f;
  REQUIRE(verify_irreducible_implies_primary(f.zn.M, f.s13).passed());
  REQUIRE(verify_irreducible_implies_primary(f.zn.M, f.s1).passed());

  SECTION("prime power chains: all proper elements irreducible and primary") {
    for (int n : {8, 27}) {
      const ZnLattice zn = ideal_lattice_zn(n);
      const MClosedSet s1 = lift_mult_set(zn, {1});
      for (ElementId q = 0; q < zn.M.size(); ++q) {
        if (q == zn.M.top()) continue;
        REQUIRE(is_s_irreducible(zn.M, s1, q).value);
        REQUIRE(is_s_primary(zn.M, s1, q).ok());
      }
      REQUIRE(verify_irreducible_implies_primary(zn.M, s1).passed());
    }
  }
}

TEST_CASE("radical corollary") {
  Z12Fixture f;
  REQUIRE(verify_radical_corollary(f.zn.M, f.s13).passed());

  SECTION("Z_30: (0) is the meet of the primes (2), (3), (5)") {
    const ZnLattice z30 = ideal_lattice_zn(30);
    const MClosedSet s1 = lift_mult_set(z30, {1});
    for (int d : {2, 3, 5}) REQUIRE(is_s_prime(z30.M, s1, z30.element_of_divisor(d)).ok());
    const ElementId zero = z30.element_of_divisor(30);
    REQUIRE(z30.M.radical(zero) == zero);  // 30 is squarefree
    REQUIRE(z30.M.meet(z30.M.meet(z30.element_of_divisor(2), z30.element_of_divisor(3)),
                       z30.element_of_divisor(5)) == zero);
    REQUIRE(verify_radical_corollary(z30.M, s1).passed());
  }
}
