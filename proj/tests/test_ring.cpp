#include "doctest.h"

#include <functional>

#include "amalg/ring.hpp"
#include "oracle.hpp"

using namespace amalg;

namespace {

PresentedRing ring(const std::vector<std::pair<std::string, int>>& vars, const std::vector<std::string>& gens) {
  return PresentedRing::make(101, vars, gens);
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("making rings") {
    const PresentedRing kx = ring({{"x", 1}}, {});
    CHECK(kx.is_polynomial_ring());
    const PresentedRing a0 = ring({{"x", 1}, {"y", 1}}, {"x^2", "x*y", "y^2"});
    CHECK(hilbert_function(a0, 0) == 1);
    CHECK(hilbert_function(a0, 1) == 2);
    CHECK(hilbert_function(a0, 2) == 0);
    CHECK(code_of([] { ring({{"x", 1}}, {"x", "1 + x"}); }) == Errc::UnitIdeal);
    CHECK(code_of([] { ring({{"x", 1}, {"y", 1}}, {"x^2 - y"}); }) == Errc::NotHomogeneous);
  }

  TEST_CASE("homomorphism checks") {
    const PresentedRing a = ring({{"x", 1}}, {});
    const PresentedRing b = ring({{"X", 1}, {"Y", 1}}, {});
    RingHom f{"f", a, b, {b.parse("X")}};
    CHECK_NOTHROW(hom_check(f));

    const PresentedRing a2 = ring({{"x", 1}}, {"x^2"});
    const PresentedRing bx = ring({{"X", 1}}, {});
    CHECK(code_of([&] { hom_check(RingHom{"g", a2, bx, {bx.parse("X")}}); }) == Errc::NotWellDefined);

    const PresentedRing w = ring({{"x", 2}}, {});
    CHECK_NOTHROW(hom_check(RingHom{"h", w, b, {b.parse("X^2")}}));
    CHECK(code_of([&] { hom_check(RingHom{"h", a, b, {b.parse("X^2")}}); }) == Errc::DegreeMismatch);
  }

  TEST_CASE("contraction") {
    const PresentedRing a = ring({{"x", 1}}, {});
    const PresentedRing b = ring({{"X", 1}, {"Y", 1}}, {});
    const RingHom f = hom_check(RingHom{"f", a, b, {b.parse("X")}});
    const IdealHandle c = contract_ideal(f, make_ideal(b, std::vector<std::string>{"X", "Y"}));
    CHECK(same_ideal(c.lifted(), IdealBasis::of(a.poly_ring(), {a.parse("x")})));
    CHECK(contract_ideal(f, make_ideal(b, std::vector<Polynomial>{})).lifted().is_zero());
    const IdealHandle cx = contract_ideal(f, make_ideal(b, std::vector<std::string>{"X"}));
    CHECK(same_ideal(cx.lifted(), IdealBasis::of(a.poly_ring(), {a.parse("x")})));
  }

  TEST_CASE("hilbert functions") {
    CHECK(hilbert_function(ring({{"x", 1}}, {}), 5) == 1);
    const PresentedRing d = ring({{"x", 1}, {"z", 1}}, {"z^2 - x*z"});
    CHECK(hilbert_function(d, 3) == 2);
    const PresentedRing b = ring({{"X", 1}, {"Y", 1}}, {});
    CHECK(hilbert_function(make_ideal(b, std::vector<std::string>{"X", "Y"}), 1) == 2);
    CHECK(hilbert_series(d).to_string() == "(1 + t)/(1-t)");
  }

  TEST_CASE("hilbert function of quotients matches linear algebra") {
    const PresentedRing r = ring({{"x", 1}, {"y", 1}, {"z", 2}}, {"x*z - y^3", "z^2 - x^4"});
    for (int d = 0; d <= 8; ++d) {
      const int total = static_cast<int>(oracle::basis(*r.poly_ring(), d).monos.size());
      CHECK(hilbert_function(r, d) == total - oracle::piece_dim(r.poly_ring(), r.generators(), d));
      CHECK(hilbert_series(r).coefficient(d) == hilbert_function(r, d));
    }
  }

  TEST_CASE("quotient rings") {
    const PresentedRing b = ring({{"X", 1}, {"Y", 1}}, {});
    const PresentedRing q = quotient(b, make_ideal(b, std::vector<std::string>{"X"}), "Q");
    CHECK(hilbert_function(q, 4) == 1);
    CHECK(code_of([&] { quotient(b, make_ideal(b, std::vector<std::string>{"1"})); }) == Errc::UnitIdeal);
  }
}
