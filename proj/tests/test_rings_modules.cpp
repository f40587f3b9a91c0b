#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "parreg/catalog.hpp"
#include "parreg/errors.hpp"
#include "parreg/module.hpp"
#include "parreg/ring.hpp"
#include "parreg/rng.hpp"

using namespace parreg;

namespace {

RingElement scalar(long v) { return RingElement(Int(v)); }
RingElement poly(std::vector<long> coeffs) {
  IntVector c(coeffs.begin(), coeffs.end());
  return RingElement(std::move(c));
}

const RingDescriptor kZ = RingDescriptor::integers();
const RingDescriptor kZ6 = RingDescriptor::cyclic(6);
const RingDescriptor kF4 = RingDescriptor::poly_quotient(Int(2), {1, 1, 1});
const RingDescriptor kDual = RingDescriptor::poly_quotient(Int(2), {0, 0, 1});
const RingDescriptor kGauss = RingDescriptor::poly_quotient(std::nullopt, {1, 0, 1});

}  // namespace

TEST_CASE("normalize worked examples") {
  CHECK(kZ6.normalize(scalar(10)) == scalar(4));
  CHECK(kF4.normalize(poly({0, 0, 1})) == poly({1, 1}));   // x^2 = x + 1
  CHECK(kDual.normalize(poly({0, 0, 1})) == poly({0, 0}));  // x^2 = 0

  SUBCASE("idempotent") {
    RingElement once = kF4.normalize(poly({5, 7, 9, 11}));
    CHECK(kF4.normalize(once) == once);
    CHECK(kZ6.normalize(kZ6.normalize(scalar(-1))) == scalar(5));
  }
  SUBCASE("malformed payloads are rejected") {
    CHECK_THROWS_AS(kZ6.normalize(poly({1, 2})), MalformedElement);
    CHECK_THROWS_AS(kZ.normalize(RingElement(std::vector<RingElement>{scalar(1)})),
                    MalformedElement);
    RingDescriptor pr = RingDescriptor::product({kZ6, kZ6});
    CHECK_THROWS_AS(pr.normalize(RingElement(std::vector<RingElement>{scalar(1)})),
                    MalformedElement);
    CHECK_THROWS_AS(pr.normalize(scalar(1)), MalformedElement);
  }
}

TEST_CASE("multiplication worked examples") {
  CHECK(kZ6.mul(scalar(4), scalar(5)) == scalar(2));
  CHECK(kF4.mul(poly({0, 1}), poly({0, 1})) == poly({1, 1}));  // x * x = x + 1
  CHECK(kDual.mul(poly({0, 1}), poly({0, 1})) == kDual.zero());
  for (const auto& r : {kZ6, kF4, kDual})
    for (const auto& e : r.enumerate()) CHECK(r.mul(r.one(), e) == e);
  CHECK(kZ.mul(scalar(-3), scalar(7)) == scalar(-21));
  CHECK(kGauss.mul(poly({0, 1}), poly({0, 1})) == poly({-1, 0}));  // x^2 = -1
}

TEST_CASE("enumeration order and cardinality") {
  SUBCASE("dual numbers enumerate 0, 1, x, 1+x") {
    auto elems = kDual.enumerate();
    REQUIRE(elems.size() == 4);
    CHECK(elems[0] == poly({0, 0}));
    CHECK(elems[1] == poly({1, 0}));
    CHECK(elems[2] == poly({0, 1}));
    CHECK(elems[3] == poly({1, 1}));
  }
  SUBCASE("product rings multiply their sizes") {
    RingDescriptor z2xz3 = *catalog_ring("z2xz3");
    auto elems = z2xz3.enumerate();
    CHECK(elems.size() == 6);
    CHECK(*z2xz3.cardinality() == 6);
  }
  SUBCASE("infinite rings refuse enumeration") {
    CHECK_THROWS_AS(kZ.enumerate(), InfiniteRing);
    CHECK_THROWS_AS(kGauss.enumerate(), InfiniteRing);
    CHECK(!kGauss.cardinality());
  }
  SUBCASE("advertised cardinality matches the element count") {
    for (const auto& name : catalog_names()) {
      RingDescriptor r = *catalog_ring(name);
      CHECK(Int(static_cast<long>(r.enumerate().size())) == *r.cardinality());
    }
  }
}

TEST_CASE("ring axioms hold exhaustively on small catalog rings") {
  for (const auto& name : catalog_names()) {
    RingDescriptor r = *catalog_ring(name);
    if (*r.cardinality() > 8) continue;
    auto elems = r.enumerate();
    for (const auto& a : elems) {
      CHECK(r.add(a, r.zero()) == a);
      CHECK(r.mul(a, r.one()) == a);
      CHECK(r.add(a, r.neg(a)) == r.zero());
      for (const auto& b : elems) {
        CHECK(r.add(a, b) == r.add(b, a));
        CHECK(r.mul(a, b) == r.mul(b, a));
        for (const auto& c : elems) {
          CHECK(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
          CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
          CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("additive presentation worked examples") {
  SUBCASE("dual numbers: generators 1 and x with characteristic 2") {
    AdditivePresentation pres = kDual.additive_presentation();
    CHECK(pres.group.generator_count == 2);
    CHECK(pres.group.relations == IntMatrix::from_rows({{2, 0}, {0, 2}}));
    // multiplication by x sends 1 to x and x to 0
    CHECK(pres.actions[1] == IntMatrix::from_rows({{0, 0}, {1, 0}}));
  }
  SUBCASE("integers: one free generator") {
    AdditivePresentation pres = kZ.additive_presentation();
    CHECK(pres.group.generator_count == 1);
    CHECK(pres.group.relations.rows() == 0);
    CHECK(pres.actions[0] == IntMatrix::identity(1));
  }
  SUBCASE("Gaussian integers: x rotates") {
    AdditivePresentation pres = kGauss.additive_presentation();
    CHECK(pres.group.generator_count == 2);
    CHECK(pres.group.relations.rows() == 0);
    CHECK(pres.actions[1] == IntMatrix::from_rows({{0, -1}, {1, 0}}));
  }
}

TEST_CASE("action matrices agree with ring multiplication") {
  // exhaustive on the finite catalog rings
  for (const auto& name : catalog_names()) {
    RingDescriptor r = *catalog_ring(name);
    if (*r.cardinality() > 16) continue;
    ModuleDescriptor self = ModuleDescriptor::self_module(r);
    for (const auto& a : r.enumerate())
      for (const auto& b : r.enumerate()) {
        IntVector via_action =
            self.reduce(self.action_matrix(r.element_coords(a)).apply(r.element_coords(b)));
        CHECK(via_action == r.element_coords(r.mul(a, b)));
      }
  }

  // randomized on the Gaussian integers
  CounterRng rng(201);
  ModuleDescriptor self = ModuleDescriptor::self_module(kGauss);
  for (int iter = 0; iter < 1000; ++iter) {
    RingElement a = poly({rng.uniform(-50, 50), rng.uniform(-50, 50)});
    RingElement b = poly({rng.uniform(-50, 50), rng.uniform(-50, 50)});
    IntVector via_action =
        self.reduce(self.action_matrix(kGauss.element_coords(a)).apply(kGauss.element_coords(b)));
    CHECK(via_action == kGauss.element_coords(kGauss.mul(a, b)));
  }
}

TEST_CASE("element_action worked examples") {
  SUBCASE("1 acts as the identity and 0 as zero") {
    ModuleDescriptor m = ModuleDescriptor::self_module(kF4);
    for (const auto& e : kF4.enumerate()) {
      IntVector t = kF4.element_coords(e);
      CHECK(element_action(kF4, m, kF4.one(), t) == t);
      CHECK(element_action(kF4, m, kF4.zero(), t) == m.zero());
    }
  }
  SUBCASE("Z_4 as a Z-module: 2 * 3 = 2") {
    ModuleDescriptor m =
        ModuleDescriptor::explicit_module(kZ, {Int(4)}, {IntMatrix::identity(1)});
    CHECK(element_action(kZ, m, scalar(2), {Int(3)}) == IntVector{2});
  }
}

TEST_CASE("module validation rejects ill-formed data") {
  SUBCASE("wrong action matrix count") {
    CHECK_THROWS_AS(ModuleDescriptor::explicit_module(kF4, {Int(2)}, {IntMatrix::identity(1)}),
                    InvalidModule);
  }
  SUBCASE("wrong action matrix shape") {
    CHECK_THROWS_AS(
        ModuleDescriptor::explicit_module(kZ, {Int(4)}, {IntMatrix::identity(2)}),
        InvalidModule);
  }
  SUBCASE("Z_3 is not a Z_4-module") {
    RingDescriptor z4 = RingDescriptor::cyclic(4);
    CHECK_THROWS_AS(
        ModuleDescriptor::explicit_module(z4, {Int(3)}, {IntMatrix::identity(1)}),
        InvalidModule);
  }
  SUBCASE("1 must act as the identity") {
    IntMatrix twice(1, 1);
    twice.at(0, 0) = 2;
    CHECK_THROWS_AS(ModuleDescriptor::explicit_module(kZ, {Int(4)}, {twice}), InvalidModule);
  }
  SUBCASE("generator actions must compose like ring multiplication") {
    // swap on Z_2 x Z_2 squares to the identity, but x * x = x + 1 in F_4
    std::vector<IntMatrix> actions{IntMatrix::identity(2),
                                   IntMatrix::from_rows({{0, 1}, {1, 0}})};
    CHECK_THROWS_AS(ModuleDescriptor::explicit_module(kF4, {Int(2), Int(2)}, actions),
                    InvalidModule);
  }
  SUBCASE("valid explicit and free modules load") {
    CHECK_NOTHROW(ModuleDescriptor::explicit_module(kZ, {Int(4)}, {IntMatrix::identity(1)}));
    CHECK_NOTHROW(ModuleDescriptor::free_module(kZ, 2));
    CHECK_NOTHROW(ModuleDescriptor::free_module(kDual, 2));
  }
}

TEST_CASE("module element enumeration") {
  SUBCASE("dual numbers in box order: 0, x, 1, 1+x") {
    ModuleDescriptor m = ModuleDescriptor::self_module(kDual);
    REQUIRE(*m.order() == 4);
    auto elems = m.elements(std::nullopt);
    CHECK(elems[0] == IntVector{0, 0});
    CHECK(elems[1] == IntVector{0, 1});
    CHECK(elems[2] == IntVector{1, 0});
    CHECK(elems[3] == IntVector{1, 1});
  }
  SUBCASE("caps and infinities") {
    ModuleDescriptor z9 = ModuleDescriptor::self_module(RingDescriptor::cyclic(9));
    CHECK_THROWS_AS(z9.elements(Int(8)), ModuleTooLarge);
    CHECK(z9.elements(std::nullopt).size() == 9);
    ModuleDescriptor z = ModuleDescriptor::self_module(kZ);
    CHECK(!z.order());
    CHECK_THROWS_AS(z.elements(std::nullopt), InfiniteModule);
  }
  SUBCASE("free module order multiplies") {
    ModuleDescriptor m = ModuleDescriptor::free_module(kDual, 2);
    CHECK(*m.order() == 16);
  }
}
