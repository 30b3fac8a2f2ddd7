#include "doctest.h"

#include "amalg/poly.hpp"

using namespace amalg;

namespace {

RingPtr xuv(std::uint32_t p = 101) { return make_poly_ring(p, {"x", "u", "v"}, {1, 1, 1}); }

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("field inverses") {
    CHECK(field_inverse(FieldElem(1, 101)).value() == 1);
    CHECK(field_inverse(FieldElem(2, 101)).value() == 51);
    CHECK(field_inverse(FieldElem(3, 7)).value() == 5);
    CHECK_THROWS_AS(field_inverse(FieldElem(0, 101)), Error);
    CHECK(FieldElem(-1, 101).value() == 100);
  }

  TEST_CASE("field elements from different fields do not mix") {
    CHECK_THROWS_AS(FieldElem(1, 101) + FieldElem(1, 7), Error);
    CHECK_THROWS_AS(FieldElem(1, 100), Error);
  }

  TEST_CASE("multiplication") {
    const RingPtr r = xuv();
    const Polynomial f = parse_polynomial(r, "x + u");
    const Polynomial g = parse_polynomial(r, "x - u");
    CHECK((f * g).to_string() == "x^2 - u^2");
    CHECK((f * Polynomial(r)).is_zero());

    const RingPtr r2 = make_poly_ring(2, {"x"}, {1});
    const Polynomial h = parse_polynomial(r2, "x + 1");
    CHECK((h * h).to_string() == "x^2 + 1");
  }

  TEST_CASE("leading terms") {
    const RingPtr r = xuv();
    const Polynomial f = parse_polynomial(r, "x^2*u + x*v^2");
    CHECK(monomial_to_string(*r, leading_term(f, MonomialOrder::grevlex()).first) == "x^2*u");
    const Polynomial g = parse_polynomial(r, "x + u^2");
    CHECK(monomial_to_string(*r, leading_term(g, MonomialOrder::lex()).first) == "x");
    CHECK(monomial_to_string(*r, leading_term(g, MonomialOrder::grevlex()).first) == "u^2");
    CHECK_THROWS_AS(leading_term(Polynomial(r), MonomialOrder::grevlex()), Error);
  }

  TEST_CASE("weighted degrees") {
    const RingPtr r = make_poly_ring(101, {"x", "z"}, {1, 2});
    const Polynomial f = parse_polynomial(r, "x^2*z - z^2");
    CHECK(f.degree() == 4);
    CHECK(f.is_homogeneous());
    CHECK_FALSE(parse_polynomial(r, "x + z").is_homogeneous());
  }

  TEST_CASE("parsing and display") {
    const RingPtr r = xuv();
    CHECK(parse_polynomial(r, "2x*(u - 1)").to_string() == "2*x*u - 2*x");
    CHECK(parse_polynomial(r, "100*x").to_string() == "-x");
    CHECK(parse_polynomial(r, "(x+u)^2 - x^2 - u^2").to_string() == "2*x*u");
    CHECK_THROWS_AS(parse_polynomial(r, "x + w"), Error);
    CHECK_THROWS_AS(parse_polynomial(r, "x +"), Error);
  }

  TEST_CASE("exact division and substitution") {
    const RingPtr r = xuv();
    const Polynomial f = parse_polynomial(r, "x^2 - u^2");
    CHECK(divide_exact(f, parse_polynomial(r, "x - u")).to_string() == "x + u");
    CHECK_THROWS_AS(divide_exact(f, parse_polynomial(r, "x - v")), Error);
    const Polynomial s = substitute(f, {parse_polynomial(r, "u"), parse_polynomial(r, "x"), parse_polynomial(r, "v")}, r);
    CHECK(s.to_string() == "-x^2 + u^2");
  }

  TEST_CASE("ring mismatch") {
    const RingPtr a = xuv();
    const RingPtr b = make_poly_ring(101, {"x", "y"}, {1, 1});
    CHECK_THROWS_AS(parse_polynomial(a, "x") + parse_polynomial(b, "x"), Error);
  }
}
