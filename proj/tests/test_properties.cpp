#include "doctest.h"

#include <algorithm>
#include <random>

#include "amalg/classify.hpp"
#include "amalg/finite.hpp"
#include "amalg/module.hpp"
#include "oracle.hpp"

using namespace amalg;

namespace {

Polynomial random_homogeneous(const RingPtr& r, int d, std::mt19937& rng, int max_terms = 4) {
  const std::vector<Monomial> monos = monomials_of_degree(*r, d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<long long> coeff(1, r->modulus() - 1);
  std::vector<Term> terms;
  const int n = std::uniform_int_distribution<int>(1, max_terms)(rng);
  for (int i = 0; i < n; ++i) terms.push_back({monos[pick(rng)], static_cast<Coeff>(coeff(rng))});
  return Polynomial::from_terms(r, terms);
}

Polynomial random_poly(const RingPtr& r, std::mt19937& rng) {
  Polynomial f(r);
  const int top = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int d = 0; d <= top; ++d) f = f + random_homogeneous(r, d, rng, 3);
  return f;
}

Monomial random_monomial(const PolyRing& r, std::mt19937& rng) {
  std::vector<int> e(r.nvars());
  for (int& x : e) x = std::uniform_int_distribution<int>(0, 4)(rng);
  return mono_from_exponents(r, e);
}

std::vector<Polynomial> random_ideal(const RingPtr& r, std::mt19937& rng, int count) {
  std::vector<Polynomial> gens;
  while (static_cast<int>(gens.size()) < count) {
    Polynomial g = random_homogeneous(r, std::uniform_int_distribution<int>(2, 3)(rng), rng, 3);
    if (!g.is_zero()) gens.push_back(g);
  }
  return gens;
}

int sign(int x) { return (x > 0) - (x < 0); }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("polynomial ring axioms") {
    std::mt19937 rng(11);
    for (std::uint32_t p : {101u, 32003u}) {
      const RingPtr r = make_poly_ring(p, {"x", "y", "z"}, {1, 1, 2});
      for (int i = 0; i < 600; ++i) {
        const Polynomial f = random_poly(r, rng), g = random_poly(r, rng), h = random_poly(r, rng);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f - f).is_zero());
        CHECK(parse_polynomial(r, f.to_string()) == f);
      }
    }
  }

  TEST_CASE("monomial orders are multiplicative and total") {
    std::mt19937 rng(12);
    const RingPtr r = make_poly_ring(101, {"a", "b", "c", "d"}, {1, 2, 1, 3});
    for (const MonomialOrder& ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(2)}) {
      for (int i = 0; i < 1000; ++i) {
        const Monomial a = random_monomial(*r, rng), b = random_monomial(*r, rng), c = random_monomial(*r, rng);
        const int ab = ord.compare(a, b, *r);
        CHECK(sign(ab) == -sign(ord.compare(b, a, *r)));
        CHECK(sign(ab) == sign(ord.compare(mono_mul(a, c), mono_mul(b, c), *r)));
        CHECK((ab == 0) == (a == b));
        if (!c.is_one()) CHECK(ord.compare(mono_mul(a, c), a, *r) > 0);
      }
    }
  }

  TEST_CASE("normal forms are idempotent and linear") {
    std::mt19937 rng(13);
    const RingPtr r = make_poly_ring(101, {"x", "y", "z"}, {1, 1, 1});
    for (int trial = 0; trial < 20; ++trial) {
      const GroebnerBasis gb = buchberger(IdealBasis::of(r, random_ideal(r, rng, 3)));
      for (int i = 0; i < 20; ++i) {
        const Polynomial f = random_poly(r, rng), g = random_poly(r, rng);
        const Coeff a = std::uniform_int_distribution<Coeff>(1, 100)(rng);
        const Polynomial nf = normal_form(f, gb);
        CHECK(normal_form(nf, gb) == nf);
        CHECK(normal_form(f.scaled(a) + g, gb) == nf.scaled(a) + normal_form(g, gb));
        CHECK(ideal_member(f - nf, gb));
      }
    }
  }

  TEST_CASE("reduced bases do not depend on generator order") {
    std::mt19937 rng(14);
    const RingPtr r = make_poly_ring(101, {"x", "y", "z", "w"}, {1, 1, 1, 1});
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Polynomial> gens = random_ideal(r, rng, 3);
      const GroebnerBasis first = buchberger(IdealBasis::of(r, gens));
      std::shuffle(gens.begin(), gens.end(), rng);
      for (Polynomial& g : gens) g = g.scaled(7);
      CHECK(buchberger(IdealBasis::of(r, gens)) == first);
    }
  }

  TEST_CASE("hilbert series agree with hilbert functions and linear algebra") {
    std::mt19937 rng(15);
    const RingPtr r = make_poly_ring(101, {"x", "y", "z"}, {1, 1, 1});
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<Polynomial> gens = random_ideal(r, rng, 2 + trial % 3);
      const PresentedRing q = PresentedRing::make(r, gens);
      const FPModule m = FPModule::cyclic(q);
      const HilbertSeries hs = hilbert_series(m);
      CHECK(hs == hilbert_series_from_gb(m));
      CHECK(hs == hilbert_series(q));
      for (int d = 0; d <= 8; ++d) {
        const long long oracle_value =
            static_cast<long long>(oracle::basis(*r, d).monos.size()) - oracle::piece_dim(r, gens, d);
        CHECK(hs.coefficient(d) == oracle_value);
        CHECK(hilbert_function(m, d) == oracle_value);
      }
    }
  }

  TEST_CASE("resolutions satisfy Auslander-Buchsbaum and the classification implications") {
    std::mt19937 rng(16);
    const RingPtr r = make_poly_ring(101, {"x", "y", "z"}, {1, 1, 1});
    for (int trial = 0; trial < 10; ++trial) {
      const PresentedRing q = PresentedRing::make(r, random_ideal(r, rng, 1 + trial % 4));
      const FreeResolution res = free_resolution(FPModule::cyclic(q));
      CHECK(res.is_complex());
      CHECK(res.is_minimal());
      CHECK(res.length() <= r->nvars());
      const ClassifyReport c = classify(q);
      CHECK(c.depth == r->nvars() - res.length());
      CHECK(c.depth <= c.dim);
      if (c.is_gorenstein) CHECK(c.is_quasi_gorenstein);
      if (c.is_cm) CHECK(c.is_generalized_cm);
      if (c.is_cm) CHECK(c.serre_level == 4);
    }
  }

  TEST_CASE("module resolutions") {
    std::mt19937 rng(17);
    const RingPtr r = make_poly_ring(101, {"x", "y", "z"}, {1, 1, 1});
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Column> rels;
      for (int k = 0; k < 2; ++k)
        rels.push_back({random_homogeneous(r, 2, rng, 2), random_homogeneous(r, 1, rng, 2)});
      const FPModule m(r, {0, 1}, rels);
      const FreeResolution res = free_resolution(m);
      CHECK(res.is_complex());
      CHECK(hilbert_series(res) == hilbert_series_from_gb(m));
      for (int d = 0; d <= 6; ++d) CHECK(hilbert_series(res).coefficient(d) == hilbert_function(m, d));
      CHECK(hilbert_series(prune(m)) == hilbert_series_from_gb(m));
    }
  }

  TEST_CASE("finite ring axioms on products and quotients") {
    const std::vector<FiniteRing> rings = {
        FiniteRing::product(FiniteRing::zmod(4), FiniteRing::zmod(6)),
        FiniteRing::product(FiniteRing::zmod(3), FiniteRing::product(FiniteRing::zmod(2), FiniteRing::zmod(2))),
        quotient(FiniteRing::zmod(36), ideal_generated(FiniteRing::zmod(36), {12})),
    };
    std::mt19937 rng(18);
    for (const FiniteRing& f : rings) {
      std::uniform_int_distribution<int> pick(0, f.order() - 1);
      for (int i = 0; i < 1000; ++i) {
        const int a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.add(a, f.neg(a)) == 0);
        CHECK(f.mul(1, a) == a);
      }
      for (const FiniteIdeal& p : enumerate_primes(f)) CHECK(is_ideal(f, p.elements));
    }
  }
}
