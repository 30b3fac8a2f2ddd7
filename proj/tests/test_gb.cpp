#include "doctest.h"

#include <string>
#include <vector>

#include "amalg/gb.hpp"
#include "oracle.hpp"

using namespace amalg;

namespace {

std::vector<Polynomial> polys(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const std::string& t : texts) out.push_back(parse_polynomial(r, t));
  return out;
}

IdealBasis ideal(const RingPtr& r, const std::vector<std::string>& texts) { return IdealBasis::of(r, polys(r, texts)); }

std::string show(const std::vector<Polynomial>& gens) {
  std::string s;
  for (const Polynomial& g : gens) s += (s.empty() ? "" : ", ") + g.to_string();
  return s.empty() ? "0" : s;
}

std::string show(const IdealBasis& i) { return show(buchberger(i).elements()); }

RingPtr xzz() { return make_poly_ring(101, {"x", "z1", "z2"}, {1, 1, 1}); }

}  // namespace

TEST_SUITE("gb") {
  TEST_CASE("buchberger on small inputs") {
    const RingPtr r = make_poly_ring(101, {"x", "u"}, {1, 1});
    CHECK(show(ideal(r, {"x", "u"})) == "x, u");
    const RingPtr c = xzz();
    CHECK(show(ideal(c, {"x*z1 - z1^2", "x*z2 - z1*z2"})) == "x*z1 - z1^2, x*z2 - z1*z2");
    CHECK(show(ideal(c, {"2*x*z1 - 2*z1^2"})) == "x*z1 - z1^2");
    const RingPtr xz = make_poly_ring(101, {"x", "z"}, {1, 1});
    CHECK(show(ideal(xz, {"z^2 - x*z"})) == "x*z - z^2");
  }

  TEST_CASE("normal forms and membership") {
    const RingPtr c = xzz();
    const GroebnerBasis gb = buchberger(ideal(c, {"x*z1 - z1^2", "x*z2 - z1*z2"}));
    CHECK(normal_form(parse_polynomial(c, "x^2*z2"), gb).to_string() == "z1^2*z2");
    CHECK(normal_form(parse_polynomial(c, "x*z1 - z1^2"), gb).is_zero());
    CHECK(normal_form(parse_polynomial(c, "1"), gb).to_string() == "1");
    CHECK(ideal_member(parse_polynomial(c, "z1*(x - z1)"), gb));
    CHECK(ideal_member(Polynomial(c), gb));
    const GroebnerBasis single = buchberger(ideal(c, {"x*z1 - z1^2"}));
    CHECK_FALSE(ideal_member(parse_polynomial(c, "x"), single));
  }

  TEST_CASE("elimination of the cusp parameter") {
    const RingPtr r = make_poly_ring(101, {"t", "x", "y"}, {1, 1, 1});
    const IdealBasis e = eliminate(ideal(r, {"x - t^2", "y - t^3"}), {0});
    const std::vector<Polynomial> g = buchberger(e).elements();
    REQUIRE(g.size() == 1);
    CHECK(same_ideal(e, ideal(r, {"y^2 - x^3"})));
    // The parametrization kills the generator, and the generator is in the original ideal.
    const Polynomial t = parse_polynomial(r, "t");
    CHECK(substitute(g[0], {t, t * t, t * t * t}, r).is_zero());
    CHECK(ideal_member(g[0], buchberger(ideal(r, {"x - t^2", "y - t^3"}))));

    CHECK(eliminate(ideal(r, {"t"}), {0}).is_zero());
    CHECK(same_ideal(eliminate(ideal(r, {"x*y"}), {}), ideal(r, {"x*y"})));
  }

  TEST_CASE("intersection") {
    const RingPtr c = xzz();
    const IdealBasis k = intersect(ideal(c, {"z1", "z2"}), ideal(c, {"x - z1"}));
    CHECK(show(k) == "x*z1 - z1^2, x*z2 - z1*z2");
    const IdealBasis i = ideal(c, {"x^2", "z1*z2"});
    CHECK(same_ideal(intersect(i, i), i));
    CHECK(same_ideal(intersect(i, IdealBasis::unit(c)), i));
  }

  TEST_CASE("colon") {
    const RingPtr xz = make_poly_ring(101, {"x", "z"}, {1, 1});
    CHECK(same_ideal(colon(ideal(xz, {"z^2 - x*z"}), ideal(xz, {"z"})), ideal(xz, {"z - x"})));
    const IdealBasis i = ideal(xz, {"x^3", "x*z"});
    CHECK(same_ideal(colon(i, IdealBasis::unit(xz)), i));
    const RingPtr c = xzz();
    CHECK(colon(IdealBasis::of(c, {}), ideal(c, {"z1", "z2"})).is_zero());
  }

  TEST_CASE("kernel of a map") {
    const RingPtr c = xzz();
    const RingPtr b = make_poly_ring(101, {"X", "Y"}, {1, 1});
    const Polynomial X = parse_polynomial(b, "X"), Y = parse_polynomial(b, "Y");
    CHECK(same_ideal(kernel_of_map(c, {X, X, Y}, IdealBasis::of(b, {})), ideal(c, {"x - z1"})));
    const RingPtr a = make_poly_ring(101, {"x"}, {1});
    CHECK(kernel_of_map(a, {X}, IdealBasis::of(b, {})).is_zero());
    const RingPtr xz = make_poly_ring(101, {"x", "z"}, {1, 1});
    CHECK(same_ideal(kernel_of_map(xz, {X, Polynomial(b)}, IdealBasis::of(b, {})), ideal(xz, {"z"})));
  }

  TEST_CASE("intersection and colon agree with degreewise linear algebra") {
    const RingPtr r = make_poly_ring(101, {"x", "y", "z"}, {1, 1, 1});
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> cases = {
        {{"x^2", "y*z"}, {"x*y", "z^2"}},
        {{"x*y - z^2", "x^3"}, {"x - y", "y*z^2"}},
        {{"x^2*y", "y^2*z", "z^2*x"}, {"x + y + z"}},
        {{"x*z - y^2"}, {"x", "y"}},
    };
    for (const auto& [ia, ja] : cases) {
      const IdealBasis i = ideal(r, ia), j = ideal(r, ja);
      const std::vector<Polynomial> meet = intersect(i, j).generators;
      const std::vector<Polynomial> quot = colon(i, j).generators;
      std::vector<Polynomial> both = i.generators;
      both.insert(both.end(), j.generators.begin(), j.generators.end());
      for (int d = 0; d <= 6; ++d) {
        const int expected_meet = oracle::piece_dim(r, i.generators, d) + oracle::piece_dim(r, j.generators, d) -
                                  oracle::piece_dim(r, both, d);
        CHECK(oracle::piece_dim(r, meet, d) == expected_meet);
        CHECK(oracle::piece_dim(r, quot, d) == oracle::colon_dim(r, i.generators, j.generators, d));
      }
    }
  }

  TEST_CASE("degree cap") {
    const RingPtr r = make_poly_ring(101, {"x", "y", "z"}, {1, 1, 1});
    detail::DegreeCapGuard cap(3);
    CHECK_THROWS_AS(buchberger(ideal(r, {"x^2 - y*z", "y^2 - x*z", "x^3 + z^3"})), Error);
  }
}
