#include "doctest.h"

#include <set>

#include "amalg/finite.hpp"

using namespace amalg;

namespace {

FiniteHom identity(const FiniteRing& r) {
  std::vector<int> images(r.order());
  for (int a = 0; a < r.order(); ++a) images[a] = a;
  return finite_hom_check(FiniteHom{"id", r, r, images});
}

FiniteHom reduction(const FiniteRing& from, const FiniteRing& to) {
  std::vector<int> images(from.order());
  for (int a = 0; a < from.order(); ++a) images[a] = a % to.order();
  return finite_hom_check(FiniteHom{"red", from, to, images});
}

std::set<int> members(const FiniteIdeal& i) {
  std::set<int> s;
  for (std::size_t k = 0; k < i.elements.size(); ++k)
    if (i.elements.test(k)) s.insert(static_cast<int>(k));
  return s;
}

}  // namespace

TEST_SUITE("finite") {
  TEST_CASE("building rings") {
    CHECK(FiniteRing::zmod(6).order() == 6);
    const FiniteRing p = FiniteRing::product(FiniteRing::zmod(4), FiniteRing::zmod(2));
    CHECK(p.order() == 8);
    CHECK(FiniteRing::pair_label(1, 1, 2) == 1);
    CHECK(p.mul(1, 5) == 5);
    const FiniteRing z8 = FiniteRing::zmod(8);
    const FiniteRing q = quotient(z8, ideal_generated(z8, {4}));
    CHECK(q.order() == 4);
    CHECK_FALSE(find_isomorphism(q, FiniteRing::zmod(4)).empty());
    CHECK(find_isomorphism(q, FiniteRing::product(FiniteRing::zmod(2), FiniteRing::zmod(2))).empty());
  }

  TEST_CASE("bad tables are rejected") {
    // Z/3 addition with a non-distributive multiplication.
    std::vector<std::uint16_t> add = {0, 1, 2, 1, 2, 0, 2, 0, 1};
    std::vector<std::uint16_t> mul = {0, 0, 0, 0, 1, 2, 0, 2, 2};
    CHECK_THROWS_AS(FiniteRing(3, add, mul), Error);
  }

  TEST_CASE("prime ideals") {
    const FiniteRing z6 = FiniteRing::zmod(6);
    const std::vector<FiniteIdeal> p6 = enumerate_primes(z6);
    CHECK(p6.size() == 2);
    std::set<std::set<int>> got;
    for (const FiniteIdeal& p : p6) got.insert(members(p));
    CHECK(got == std::set<std::set<int>>{{0, 2, 4}, {0, 3}});
    CHECK(enumerate_primes(FiniteRing::zmod(4)).size() == 1);
    const FiniteRing p42 = FiniteRing::product(FiniteRing::zmod(4), FiniteRing::zmod(2));
    const std::vector<FiniteIdeal> pp = enumerate_primes(p42);
    CHECK(pp.size() == 2);
    for (const FiniteIdeal& p : pp) CHECK(p.size() == 4);
    CHECK(maximal_ideals(p42).size() == 2);
  }

  TEST_CASE("ideal lattice") {
    CHECK(ideal_lattice(FiniteRing::zmod(12)).size() == 6);
    CHECK(ideal_lattice(FiniteRing::zmod(8)).size() == 4);
  }

  TEST_CASE("homomorphism checks") {
    const FiniteRing z6 = FiniteRing::zmod(6), z4 = FiniteRing::zmod(4);
    std::vector<int> images(6);
    for (int a = 0; a < 6; ++a) images[a] = a % 4;
    CHECK_THROWS_AS(finite_hom_check(FiniteHom{"bad", z6, z4, images}), Error);
    CHECK_NOTHROW(reduction(FiniteRing::zmod(8), z4));
  }

  TEST_CASE("amalgams and their spectra") {
    const FiniteRing z6 = FiniteRing::zmod(6);
    const FiniteAmalgam w = build_amalgam(identity(z6), ideal_generated(z6, {3}));
    CHECK(w.ring.order() == 12);
    CHECK(embedding_holds(w));
    const PrimeClassification c = classify_primes(w);
    CHECK(c.spectrum.size() == 3);
    CHECK(c.candidates.size() == 3);
    CHECK(c.match());

    const FiniteAmalgam zero = build_amalgam(identity(z6), ideal_generated(z6, {0}));
    CHECK(zero.ring.order() == 6);
    CHECK_FALSE(find_isomorphism(zero.ring, z6).empty());
    const PrimeClassification cz = classify_primes(zero);
    CHECK(cz.match());
    for (const PrimeLabel& l : cz.candidates) CHECK(l.tag == PrimeLabel::Tag::FromA);

    const FiniteRing z8 = FiniteRing::zmod(8), z4 = FiniteRing::zmod(4);
    const FiniteAmalgam w84 = build_amalgam(reduction(z8, z4), ideal_generated(z4, {2}));
    CHECK(w84.ring.order() == 16);
    const PrimeClassification c84 = classify_primes(w84);
    CHECK(c84.spectrum.size() == 1);
    CHECK(c84.candidates.size() == 1);
    CHECK(c84.match());
  }

  TEST_CASE("isomorphism search") {
    const FiniteRing z6 = FiniteRing::zmod(6);
    const FiniteRing p = FiniteRing::product(FiniteRing::zmod(2), FiniteRing::zmod(3));
    const std::vector<int> iso = find_isomorphism(z6, p);
    REQUIRE(iso.size() == 6);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        CHECK(iso[z6.add(a, b)] == p.add(iso[a], iso[b]));
        CHECK(iso[z6.mul(a, b)] == p.mul(iso[a], iso[b]));
      }
    CHECK(find_isomorphism(FiniteRing::zmod(4), FiniteRing::product(FiniteRing::zmod(2), FiniteRing::zmod(2))).empty());
  }
}
