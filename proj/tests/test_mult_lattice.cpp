#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "mullat/mult_lattice.hpp"
#include "mullat/ring_bridge.hpp"

using namespace mullat;

TEST_CASE("classification ladder") {
  SECTION("2-chain with meet is an r-lattice (Id of a field)") {
    REQUIRE(helpers::chain_with_meet(2).axiom_class() == AxiomClass::RLattice);
  }

  SECTION("Id(Z_12) with ideal multiplication is an r-lattice") {
    REQUIRE(ideal_lattice_zn(12).M.axiom_class() == AxiomClass::RLattice);
  }

  SECTION("M2 with meet classifies at least multiplicative") {
    const auto M = helpers::attach_meet(helpers::m2_lattice());
    REQUIRE(M.at_least(AxiomClass::Multiplicative));
    REQUIRE(M.axiom_class() == AxiomClass::RLattice);  // Boolean square
  }

  SECTION("N5 with meet is only a V-lattice (meet does not distribute)") {
    const auto M = helpers::attach_meet(helpers::n5_lattice());
    REQUIRE(M.axiom_class() == AxiomClass::VLattice);
    REQUIRE(helpers::error_code_of([&] { M.residual(0, 1); }) == ErrorCode::WrongClass);
    REQUIRE(helpers::error_code_of([&] { M.radical(0); }) == ErrorCode::WrongClass);
    bool saw_modular_fail = false;
    for (const auto& r : M.class_reports())
      if (r.name == "modular") saw_modular_fail = r.failed();
    REQUIRE(saw_modular_fail);
  }

  SECTION("3-chain with meet stalls at c-lattice: middle element not principal") {
    const auto M = helpers::chain_with_meet(3);
    REQUIRE(M.axiom_class() == AxiomClass::CLattice);
    const PropertyReport jp = M.is_join_principal(1);
    REQUIRE(jp.failed());
    REQUIRE(jp.counterexample == std::vector<ElementId>{1, 0});
    REQUIRE(M.is_meet_principal(1).passed());
  }

  SECTION("Id(Z_p^k) chains are r-lattices under ideal multiplication") {
    REQUIRE(ideal_lattice_zn(8).M.axiom_class() == AxiomClass::RLattice);
    REQUIRE(ideal_lattice_zn(27).M.axiom_class() == AxiomClass::RLattice);
  }

  SECTION("1-element lattice is rejected") {
    FiniteLattice one = FiniteLattice::build_from_leq({"*"}, {});
    REQUIRE(helpers::error_code_of([&] {
              MultiplicativeLattice::attach_mult(std::move(one), {{0}});
            }) == ErrorCode::DegenerateLattice);
  }
}

TEST_CASE("V-lattice axiom violations abort with witnesses") {
  FiniteLattice two = FiniteLattice::build_from_leq({"0", "1"}, {{0, 1}});

  SECTION("not commutative") {
    REQUIRE(helpers::error_code_of([&] {
              MultiplicativeLattice::attach_mult(two, {{0, 1}, {0, 1}});
            }) == ErrorCode::NotCommutative);
  }

  SECTION("no identity") {
    REQUIRE(helpers::error_code_of([&] {
              MultiplicativeLattice::attach_mult(two, {{0, 0}, {0, 0}});
            }) == ErrorCode::NoIdentity);
  }

  SECTION("not monotone") {
    // 0 * 0 = 1 passes associativity and identity but reverses the order.
    REQUIRE(helpers::error_code_of([&] {
              MultiplicativeLattice::attach_mult(two, {{1, 0}, {0, 1}});
            }) == ErrorCode::NotMonotone);
  }

  SECTION("not associative") {
    // 4-chain 0 < x < y < 1 with y*y = x and x*y = 0: (x*y)*y = 0 but
    // x*(y*y) = x*x = x.
    FiniteLattice four = FiniteLattice::build_from_leq({"0", "x", "y", "1"},
                                                       {{0, 1}, {1, 2}, {2, 3}});
    MultTable t{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 2}, {0, 1, 2, 3}};
    try {
      MultiplicativeLattice::attach_mult(std::move(four), t);
      FAIL("expected NotAssociative");
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::NotAssociative);
      REQUIRE(e.witness() == std::vector<ElementId>{1, 2, 2});
    }
  }

  SECTION("table shape is validated") {
    REQUIRE(helpers::error_code_of([&] {
              MultiplicativeLattice::attach_mult(two, {{0, 0}});
            }) == ErrorCode::SizeMismatch);
  }
}

TEST_CASE("residuals on Id(Z_12)") {
  const ZnLattice zn = ideal_lattice_zn(12);
  const MultiplicativeLattice& M = zn.M;
  const ElementId e0 = zn.element_of_divisor(12), e2 = zn.element_of_divisor(2),
                  e4 = zn.element_of_divisor(4), e6 = zn.element_of_divisor(6);

  for (ElementId a = 0; a < M.size(); ++a) REQUIRE(M.residual(a, M.top()) == a);
  REQUIRE(M.residual(e0, e2) == e6);
  REQUIRE(M.residual(e4, e2) == e2);

  SECTION("matches the divisor oracle everywhere") {
    for (ElementId a = 0; a < M.size(); ++a)
      for (ElementId b = 0; b < M.size(); ++b)
        REQUIRE(zn.divisor_of(M.residual(a, b)) ==
                oracle::residual(zn.divisor_of(a), zn.divisor_of(b), 12));
  }

  SECTION("Galois adjunction, exhaustively") {
    for (ElementId a = 0; a < M.size(); ++a)
      for (ElementId b = 0; b < M.size(); ++b)
        for (ElementId x = 0; x < M.size(); ++x)
          REQUIRE(M.leq(M.mult(x, b), a) == M.leq(x, M.residual(a, b)));
  }
}

TEST_CASE("radicals on Id(Z_12)") {
  const ZnLattice zn = ideal_lattice_zn(12);
  const MultiplicativeLattice& M = zn.M;
  REQUIRE(M.radical(M.top()) == M.top());
  REQUIRE(M.radical(zn.element_of_divisor(4)) == zn.element_of_divisor(2));
  REQUIRE(M.radical(zn.element_of_divisor(12)) == zn.element_of_divisor(6));

  SECTION("matches the divisor oracle everywhere, also for n = 30, 36") {
    for (int n : {12, 30, 36}) {
      const ZnLattice z = ideal_lattice_zn(n);
      for (ElementId a = 0; a < z.M.size(); ++a)
        REQUIRE(z.divisor_of(z.M.radical(a)) == oracle::radical(z.divisor_of(a), n));
    }
  }

  SECTION("closure operator laws") {
    for (ElementId a = 0; a < M.size(); ++a) {
      REQUIRE(M.leq(a, M.radical(a)));
      REQUIRE(M.radical(M.radical(a)) == M.radical(a));
      for (ElementId b = 0; b < M.size(); ++b)
        if (M.leq(a, b)) REQUIRE(M.leq(M.radical(a), M.radical(b)));
    }
  }

  SECTION("radical of a meet splits") {
    for (ElementId a = 0; a < M.size(); ++a)
      for (ElementId b = 0; b < M.size(); ++b)
        REQUIRE(M.radical(M.meet(a, b)) == M.meet(M.radical(a), M.radical(b)));
  }
}

TEST_CASE("principal element checks") {
  const ZnLattice zn = ideal_lattice_zn(12);
  const MultiplicativeLattice& M = zn.M;

  REQUIRE(M.is_meet_principal(M.top()).passed());
  REQUIRE(M.is_join_principal(M.top()).passed());
  REQUIRE(M.is_meet_principal(zn.element_of_divisor(2)).passed());
  REQUIRE(M.is_meet_principal(zn.element_of_divisor(12)).passed());
  // Every ideal of Z_n is principal.
  for (ElementId m = 0; m < M.size(); ++m) {
    REQUIRE(M.is_meet_principal(m).passed());
    REQUIRE(M.is_join_principal(m).passed());
    REQUIRE(M.is_principal(m));
  }

  SECTION("principal elements are compact") {
    const auto compact = M.lattice().compact_elements();
    for (ElementId m : M.principal_elements())
      REQUIRE(std::find(compact.begin(), compact.end(), m) != compact.end());
  }
}

TEST_CASE("prime and primary elements of Id(Z_12)") {
  const ZnLattice zn = ideal_lattice_zn(12);
  const MultiplicativeLattice& M = zn.M;
  const ElementId e2 = zn.element_of_divisor(2), e3 = zn.element_of_divisor(3),
                  e4 = zn.element_of_divisor(4), e6 = zn.element_of_divisor(6),
                  e0 = zn.element_of_divisor(12);

  REQUIRE(M.is_prime(e2));
  REQUIRE(M.is_prime(e3));
  REQUIRE(!M.is_prime(e4));
  REQUIRE(!M.is_prime(e6));
  REQUIRE(!M.is_prime(e0));

  REQUIRE(M.is_primary(e4));
  REQUIRE(M.is_primary(e2));
  REQUIRE(M.is_primary(e3));
  REQUIRE(!M.is_primary(e6));
  REQUIRE(!M.is_primary(e0));

  REQUIRE(helpers::error_code_of([&] { M.is_prime(M.top()); }) == ErrorCode::NotProper);
  REQUIRE(helpers::error_code_of([&] { M.is_primary(M.top()); }) == ErrorCode::NotProper);
}

TEST_CASE("product below meet in every accepted lattice") {
  const auto check = [](const MultiplicativeLattice& M) {
    for (ElementId a = 0; a < M.size(); ++a)
      for (ElementId b = 0; b < M.size(); ++b) REQUIRE(M.leq(M.mult(a, b), M.meet(a, b)));
  };
  check(ideal_lattice_zn(12).M);
  check(helpers::attach_meet(helpers::n5_lattice()));
  check(helpers::chain_with_meet(3));
}

TEST_CASE("product of multiplicative lattices mirrors the CRT isomorphism") {
  const ZnLattice z4 = ideal_lattice_zn(4);
  const ZnLattice z9 = ideal_lattice_zn(9);
  const MultiplicativeLattice prod = product_mult_lattice(z4.M, z9.M);
  REQUIRE(prod.axiom_class() == AxiomClass::RLattice);

  const ZnLattice z36 = ideal_lattice_zn(36);
  REQUIRE(prod.size() == z36.M.size());

  // (d1, d2) -> the divisor of 36 generating d1 Z_4 x d2 Z_9 under CRT.
  auto image = [&](ElementId e) {
    const int d1 = z4.divisor_of(e / z9.M.size());
    const int d2 = z9.divisor_of(e % z9.M.size());
    return z36.element_of_divisor(d1 * d2);
  };
  for (ElementId a = 0; a < prod.size(); ++a)
    for (ElementId b = 0; b < prod.size(); ++b) {
      REQUIRE(prod.leq(a, b) == z36.M.leq(image(a), image(b)));
      REQUIRE(image(prod.mult(a, b)) == z36.M.mult(image(a), image(b)));
    }
}
