#include "amalg/ring.hpp"

#include <algorithm>
#include <map>

namespace amalg {

PresentedRing PresentedRing::make(const RingPtr& ring, std::vector<Polynomial> generators, std::string name) {
  IdealBasis basis = IdealBasis::of(ring, generators);
  GroebnerBasis gb = buchberger(basis);
  if (gb.is_unit()) throw Error(Errc::UnitIdeal, "defining ideal of " + (name.empty() ? "ring" : name) + " contains 1");
  for (const Polynomial& g : basis.generators)
    if (!g.is_homogeneous())
      throw Error(Errc::NotHomogeneous, "generator " + g.to_string() + " is not homogeneous");
  PresentedRing r;
  r.data_ = std::make_shared<const Data>(Data{std::move(name), ring, std::move(basis.generators), std::move(gb)});
  return r;
}

PresentedRing PresentedRing::make(std::uint32_t p, const std::vector<std::pair<std::string, int>>& vars,
                                  const std::vector<std::string>& generators, std::string name) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const auto& [n, w] : vars) {
    names.push_back(n);
    weights.push_back(w);
  }
  RingPtr ring = make_poly_ring(p, names, weights);
  std::vector<Polynomial> gens;
  for (const std::string& g : generators) gens.push_back(parse_polynomial(ring, g));
  return make(ring, std::move(gens), std::move(name));
}

bool operator==(const PresentedRing& a, const PresentedRing& b) {
  return a.poly_ring()->same_as(*b.poly_ring()) && a.ideal() == b.ideal();
}

RingHom hom_check(RingHom f) {
  const PolyRing& src = *f.source.poly_ring();
  if (static_cast<int>(f.images.size()) != src.nvars())
    throw Error(Errc::InvalidArgument, "hom " + f.name + ": expected " + std::to_string(src.nvars()) + " images");
  for (int i = 0; i < src.nvars(); ++i) {
    Polynomial& img = f.images[i];
    if (!img.ring()) img = Polynomial(f.target.poly_ring());
    check_same_ring(*img.ring(), *f.target.poly_ring());
    if (img.is_zero()) continue;
    if (!img.is_homogeneous() || img.degree() != src.weight(i))
      throw Error(Errc::DegreeMismatch, "hom " + f.name + ": image of " + src.name(i) + " is not homogeneous of degree " +
                                            std::to_string(src.weight(i)));
  }
  for (const Polynomial& g : f.source.ideal().elements()) {
    Polynomial image = f.target.reduce(substitute(g, f.images, f.target.poly_ring()));
    if (!image.is_zero())
      throw Error(Errc::NotWellDefined, "hom " + f.name + ": " + g.to_string() + " maps to " + image.to_string() +
                                            " != 0");
  }
  return f;
}

RingHom compose(const RingHom& g, const RingHom& f) {
  RingHom h{g.name + "." + f.name, f.source, g.target, {}};
  for (const Polynomial& img : f.images)
    h.images.push_back(g.target.reduce(substitute(img, g.images, g.target.poly_ring())));
  return hom_check(std::move(h));
}

IdealBasis IdealHandle::lifted() const {
  return ideal_sum(IdealBasis::of(ambient.poly_ring(), generators), ambient.defining_ideal());
}

IdealHandle make_ideal(const PresentedRing& ring, std::vector<Polynomial> generators) {
  IdealHandle h{ring, {}};
  for (Polynomial& g : generators) {
    check_same_ring(*g.ring(), *ring.poly_ring());
    if (!g.is_homogeneous()) throw Error(Errc::NotHomogeneous, "ideal generator " + g.to_string() + " is not homogeneous");
    if (ring.reduce(g).is_zero()) continue;
    h.generators.push_back(std::move(g));
  }
  return h;
}

IdealHandle make_ideal(const PresentedRing& ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const std::string& g : generators) gens.push_back(ring.parse(g));
  return make_ideal(ring, std::move(gens));
}

IdealHandle contract_ideal(const RingHom& f, const IdealHandle& j) {
  IdealBasis kernel = kernel_of_map(f.source.poly_ring(), f.images, j.lifted());
  IdealHandle out{f.source, {}};
  for (const Polynomial& g : kernel.generators)
    if (!f.source.reduce(g).is_zero()) out.generators.push_back(g);
  return out;
}

PresentedRing quotient(const PresentedRing& r, const IdealHandle& j, std::string name) {
  return PresentedRing::make(r.poly_ring(), j.lifted().generators, std::move(name));
}

namespace {

void enumerate(const PolyRing& r, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == r.nvars()) {
    if (remaining == 0) {
      Monomial m = cur;
      m.degree = recompute_degree(r, m);
      out.push_back(m);
    }
    return;
  }
  const int w = r.weight(var);
  for (int e = remaining / w; e >= 0; --e) {
    cur.exp[var] = static_cast<std::uint16_t>(e);
    enumerate(r, var + 1, remaining - e * w, cur, out);
  }
  cur.exp[var] = 0;
}

// Rank of the span of the given polynomials (all of one degree) over GF(p).
long long span_dimension(const std::vector<Polynomial>& polys) {
  if (polys.empty()) return 0;
  const std::uint32_t p = polys.front().ring()->modulus();
  // rows keyed by pivot monomial (leading under grevlex)
  std::vector<std::vector<Term>> pivots;
  auto find_pivot = [&](const Monomial& m) -> const std::vector<Term>* {
    for (const auto& row : pivots)
      if (row.front().mono == m) return &row;
    return nullptr;
  };
  for (const Polynomial& f : polys) {
    Polynomial cur = f;
    while (!cur.is_zero()) {
      const Term& lead = cur.terms().front();
      const std::vector<Term>* row = find_pivot(lead.mono);
      if (!row) break;
      Polynomial pr = Polynomial::from_terms(cur.ring(), *row);
      cur = cur - pr.scaled(Zp::mul(lead.coeff, Zp::inv(row->front().coeff, p), p));
    }
    if (!cur.is_zero()) pivots.push_back(cur.terms());
  }
  return static_cast<long long>(pivots.size());
}

std::vector<Polynomial> degree_multiples(const std::vector<Polynomial>& gens, int d) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const Monomial& m : monomials_of_degree(*g.ring(), d - g.degree())) out.push_back(g.times_monomial(m));
  }
  return out;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  enumerate(ring, 0, d, cur, out);
  return out;
}

long long hilbert_function(const PresentedRing& r, int d) {
  const std::vector<Monomial> leads = r.ideal().leading_monomials();
  long long count = 0;
  for (const Monomial& m : monomials_of_degree(*r.poly_ring(), d))
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return divides(l, m); })) ++count;
  return count;
}

long long hilbert_function(const IdealHandle& j, int d) {
  const std::vector<Polynomial> base = j.ambient.generators();
  std::vector<Polynomial> all = base;
  all.insert(all.end(), j.generators.begin(), j.generators.end());
  return span_dimension(degree_multiples(all, d)) - span_dimension(degree_multiples(base, d));
}

HilbertSeries hilbert_series(const PresentedRing& r) {
  return monomial_quotient_series(*r.poly_ring(), r.ideal().leading_monomials());
}

HilbertSeries hilbert_series(const IdealHandle& j) {
  return hilbert_series(j.ambient) - hilbert_series(quotient(j.ambient, j));
}

}  // namespace amalg
