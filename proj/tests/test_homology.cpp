#include "doctest.h"

#include "amalg/classify.hpp"
#include "amalg/module.hpp"

using namespace amalg;

namespace {

PresentedRing ring(const std::vector<std::pair<std::string, int>>& vars, const std::vector<std::string>& gens) {
  return PresentedRing::make(101, vars, gens);
}

PresentedRing axis() { return ring({{"x", 1}, {"z1", 1}, {"z2", 1}}, {"x*z1 - z1^2", "x*z2 - z1*z2"}); }

IdealBasis ideal(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial> g;
  for (const std::string& t : texts) g.push_back(parse_polynomial(r, t));
  return IdealBasis::of(r, g);
}

HilbertSeries series(std::vector<std::pair<int, long long>> num, std::vector<int> weights) {
  LaurentPoly n;
  for (const auto& [e, c] : num) n = n + LaurentPoly::monomial(e, c);
  return HilbertSeries(n, std::move(weights));
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("free resolutions") {
    const FreeResolution res = free_resolution(FPModule::cyclic(axis()));
    CHECK(res.betti() == std::vector<int>{1, 2, 1});
    CHECK(res.twists == std::vector<std::vector<int>>{{0}, {2, 2}, {3}});
    CHECK(res.length() == 2);
    CHECK(res.is_minimal());
    CHECK(res.is_complex());

    const RingPtr s = make_poly_ring(101, {"x", "z"}, {1, 1});
    CHECK(free_resolution(FPModule::free(s, {0})).length() == 0);
    const FreeResolution hyp = free_resolution(FPModule::cyclic(s, ideal(s, {"z^2"})));
    CHECK(hyp.length() == 1);
    CHECK(hyp.twists == std::vector<std::vector<int>>{{0}, {2}});
  }

  TEST_CASE("hilbert series of modules") {
    const RingPtr s = make_poly_ring(101, {"x", "z"}, {1, 1});
    CHECK(hilbert_series(FPModule::cyclic(s, ideal(s, {"z^2 - x*z"}))) == series({{0, 1}, {1, 1}}, {1}));
    CHECK(hilbert_series(FPModule::free(s, {0})) == series({{0, 1}}, {1, 1}));
    const RingPtr w = make_poly_ring(101, {"x", "z"}, {1, 2});
    CHECK(hilbert_series(FPModule::free(w, {0})).to_string() == "1/((1-t)(1-t^2))");
    CHECK(hilbert_series(FPModule::cyclic(axis())) == series({{0, 1}, {2, -2}, {3, 1}}, {1, 1, 1}));
    CHECK(hilbert_series(FPModule::cyclic(axis())).to_string() == "(1 + t - t^2)/(1-t)^2");
  }

  TEST_CASE("hilbert series arithmetic with mixed weights") {
    const HilbertSeries a = series({{0, 1}}, {2});
    const HilbertSeries b = series({{0, 1}, {1, 1}}, {1, 2});
    CHECK(a + a.shifted(1) == series({{0, 1}}, {1}));
    CHECK(b == series({{0, 1}}, {1, 1}));
    CHECK(a + HilbertSeries{} == a);
    CHECK(a.pole_order() == 1);
    CHECK(a.to_string() == "1/(1-t^2)");
    CHECK(series({{0, 1}, {4, -1}}, {1, 2}).to_string() == "(1 + t^2)/(1-t)");
    CHECK((a - a).is_zero());
  }

  TEST_CASE("dimension and depth") {
    CHECK(krull_dim(axis()) == 2);
    CHECK(krull_dim(ring({{"x", 1}}, {})) == 1);
    CHECK(krull_dim(ring({{"x", 1}, {"y", 1}}, {"x^2", "x*y", "y^2"})) == 0);
    CHECK(depth_ab(FPModule::cyclic(axis())) == 1);
    const RingPtr s = make_poly_ring(101, {"x", "z"}, {1, 1});
    CHECK(depth_ab(FPModule::cyclic(s, ideal(s, {"z^2 - x*z"}))) == 1);
    CHECK(depth_ab(FPModule::free(s, {0, 1})) == 2);
    CHECK_THROWS_AS(depth_ab(FPModule::cyclic(s, IdealBasis::unit(s))), Error);
  }

  TEST_CASE("ext modules") {
    const PresentedRing r = axis();
    const RingPtr s = r.poly_ring();
    const FPModule e2 = ext_module(FPModule::cyclic(r), 2);
    CHECK(e2.num_generators() == 1);
    CHECK(e2.degrees() == std::vector<int>{-3});
    CHECK(krull_dim(e2) == 1);
    CHECK(same_ideal(annihilator(e2), ideal(s, {"z1", "z2"})));
    CHECK(is_zero_module(ext_module(FPModule::cyclic(r), 0)));

    const RingPtr xz = make_poly_ring(101, {"x", "z"}, {1, 1});
    const FPModule e1 = ext_module(FPModule::cyclic(xz, ideal(xz, {"z^2"})), 1);
    CHECK(e1.degrees() == std::vector<int>{-2});
    CHECK(same_ideal(annihilator(e1), ideal(xz, {"z^2"})));
  }

  TEST_CASE("canonical modules") {
    const FPModule w = canonical_module(ring({{"x", 1}}, {}));
    CHECK(w.num_generators() == 1);
    CHECK(w.degrees() == std::vector<int>{1});
    CHECK(is_zero_module(FPModule(w.ring(), w.degrees(), {})) == false);
    CHECK(annihilator(w).is_zero());

    const PresentedRing d = ring({{"x", 1}, {"z", 1}}, {"z^2 - x*z"});
    const FPModule wd = canonical_module(d);
    CHECK(wd.num_generators() == 1);
    CHECK(same_ideal(annihilator(wd), d.defining_ideal()));
    CHECK(canonical_module(ring({{"x", 1}, {"y", 1}}, {"x^2", "x*y", "y^2"})).num_generators() == 2);
  }

  TEST_CASE("hom modules") {
    const PresentedRing d = ring({{"x", 1}, {"z", 1}}, {"z^2 - x*z"});
    const FPModule r = FPModule::cyclic(d);
    CHECK(hilbert_series(hom_modules(r, r)) == hilbert_series(r));

    const PresentedRing kx = ring({{"x", 1}}, {});
    const FPModule j = FPModule::ideal_module(make_ideal(kx, std::vector<std::string>{"x"}));
    const FPModule end = prune(hom_modules(j, j));
    CHECK(end.num_generators() == 1);
    CHECK(hilbert_series(end) == series({{0, 1}}, {1}));

    const FPModule k = FPModule::cyclic(kx.poly_ring(), ideal(kx.poly_ring(), {"x"}));
    CHECK(is_zero_module(hom_modules(k, FPModule::cyclic(kx))));
  }

  TEST_CASE("annihilators") {
    const RingPtr s = axis().poly_ring();
    CHECK(same_ideal(annihilator(FPModule::cyclic(s, ideal(s, {"z1", "z2"}))), ideal(s, {"z1", "z2"})));
    CHECK(annihilator(FPModule::free(s, {0})).is_zero());
    const FPModule w = canonical_module(axis());
    CHECK(krull_dim(buchberger(annihilator(w))) == 2);
    CHECK(krull_dim(w) == 2);
  }

  TEST_CASE("pruning removes unit entries") {
    const RingPtr s = make_poly_ring(101, {"x", "y"}, {1, 1});
    const Polynomial x = parse_polynomial(s, "x"), y = parse_polynomial(s, "y"), one = parse_polynomial(s, "1");
    // Generators e0 (deg 0), e1 (deg 1) with relations x*e0 - e1 and y*e1.
    const FPModule m(s, {0, 1}, {{x, -one}, {Polynomial(s), y}});
    const FPModule p = prune(m);
    CHECK(p.num_generators() == 1);
    CHECK(hilbert_series(p) == hilbert_series(m));
    CHECK(same_ideal(annihilator(p), ideal(s, {"x*y"})));
  }

  TEST_CASE("classification") {
    const ClassifyReport a = classify(axis());
    CHECK(a.dim == 2);
    CHECK(a.depth == 1);
    CHECK_FALSE(a.is_cm);

    const PresentedRing planes = ring({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}}, {"a*c", "a*d", "b*c", "b*d"});
    const ClassifyReport p = classify(planes, {true});
    CHECK(p.dim == 2);
    CHECK(p.depth == 1);
    CHECK(p.serre_level == 1);
    CHECK(p.is_generalized_cm);
    CHECK(p.ext_dims[3] == 0);
    CHECK(p.ext_dims[2] == 2);
    CHECK(p.to_string().find("serre = S1\n") != std::string::npos);
    CHECK(classify(planes).to_string().find("serre = S1?\n") != std::string::npos);

    const ClassifyReport t = classify(ring({{"x", 1}, {"z", 1}}, {"x*z", "z^2"}));
    CHECK(t.dim == 1);
    CHECK(t.depth == 0);
    CHECK_FALSE(t.is_cm);
    CHECK(t.is_generalized_cm);
  }

  TEST_CASE("report layout") {
    const ClassifyReport r = classify(ring({{"x", 1}}, {}));
    std::vector<std::string> keys;
    for (const auto& [k, v] : r.lines()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"dim", "depth", "codim", "cm", "gorenstein", "quasi_gorenstein",
                                           "generalized_cm", "serre", "type", "betti"});
  }
}
