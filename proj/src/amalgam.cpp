#include "amalg/amalgam.hpp"

#include <algorithm>
#include <numeric>

namespace amalg {

std::string CertStatus::to_string() const {
  switch (kind) {
    case CertKind::Certified: return "Certified";
    case CertKind::NotSurjective: return "NotSurjective";
    case CertKind::Unchecked: break;
  }
  return "Unchecked";
}

namespace {

// `base` or base1..baseN, extended until no name collides with `taken`.
std::vector<std::string> fresh_names(std::string base, int count, const std::vector<std::string>& taken) {
  for (;;) {
    std::vector<std::string> names;
    for (int i = 0; i < count; ++i) names.push_back(count == 1 ? base : base + std::to_string(i + 1));
    const bool clash = std::any_of(names.begin(), names.end(), [&](const std::string& n) {
      return std::find(taken.begin(), taken.end(), n) != taken.end();
    });
    if (!clash) return names;
    base += base.substr(0, 1);
  }
}

std::vector<Polynomial> embed(const std::vector<Polynomial>& polys, const RingPtr& target) {
  std::vector<int> var_map(polys.empty() ? 0 : polys.front().ring()->nvars());
  std::iota(var_map.begin(), var_map.end(), 0);
  std::vector<Polynomial> out;
  for (const Polynomial& g : polys) out.push_back(map_variables(g, target, var_map));
  return out;
}

std::vector<Polynomial> identity_images(const PresentedRing& src, const PresentedRing& tgt) {
  std::vector<Polynomial> images;
  for (int i = 0; i < src.nvars(); ++i) images.push_back(Polynomial::variable(tgt.poly_ring(), i));
  return images;
}

}  // namespace

AmalgamPresentation amalgam_present(const AmalgamSpec& spec) {
  if (buchberger(spec.j.lifted()).is_unit()) throw Error(Errc::JUnit, "J is the unit ideal of " + spec.b.name());
  std::vector<Polynomial> gens;
  for (const Polynomial& g : spec.j_generators()) {
    check_same_ring(*g.ring(), *spec.b.poly_ring());
    if (!g.is_homogeneous()) throw Error(Errc::NotHomogeneous, "J generator " + g.to_string() + " is not homogeneous");
    if (!spec.b.reduce(g).is_zero()) gens.push_back(g);
  }

  const PolyRing& ra = *spec.a.poly_ring();
  std::vector<std::string> names = ra.names();
  std::vector<int> weights = ra.weights();
  AmalgamPresentation p;
  for (const std::string& z : fresh_names("z", static_cast<int>(gens.size()), names)) {
    p.z_vars.push_back(static_cast<int>(names.size()));
    names.push_back(z);
  }
  for (const Polynomial& g : gens) weights.push_back(g.degree());
  p.c = make_poly_ring(ra.modulus(), names, weights);
  p.spec = spec;

  std::vector<Polynomial> ka = embed(spec.a.ideal().elements(), p.c);
  for (int z : p.z_vars) ka.push_back(Polynomial::variable(p.c, z));
  const IdealBasis k_a = IdealBasis::of(p.c, ka);
  p.k_a = buchberger(k_a);

  std::vector<Polynomial> images = spec.f.images;
  images.insert(images.end(), gens.begin(), gens.end());
  const IdealBasis k_b = kernel_of_map(p.c, images, spec.b.defining_ideal());
  p.k_b = buchberger(k_b);

  p.ring = PresentedRing::make(p.c, buchberger(intersect(k_a, k_b)).elements(), spec.name);
  return p;
}

HilbertSeries j_series(const AmalgamSpec& spec) {
  if (spec.j.generators.empty()) return HilbertSeries{};
  return hilbert_series(spec.j);
}

CertStatus verify_presentation(const AmalgamPresentation& p) {
  const HilbertSeries diff = hilbert_series(p.ring) - (hilbert_series(p.spec.a) + j_series(p.spec));
  if (diff.is_zero()) return {CertKind::Certified, 0};
  return {CertKind::NotSurjective, diff.numerator().low_degree()};
}

AmalgamSpec duplication(const PresentedRing& a, const IdealHandle& i, std::string name) {
  if (!(i.ambient == a)) throw Error(Errc::ContextMismatch, "duplication ideal does not live in " + a.name());
  AmalgamSpec s;
  s.name = std::move(name);
  s.a = a;
  s.b = a;
  s.f = hom_check(RingHom{"id", a, a, identity_images(a, a)});
  s.j = i;
  s.kind = AmalgamKind::Duplication;
  s.j_module = FPModule::ideal_module(i);
  return s;
}

AmalgamSpec trivial_extension(const PresentedRing& a, const FPModule& m_in, std::string name) {
  check_same_ring(*m_in.ring(), *a.poly_ring());
  FPModule m = prune(m_in);
  if (m.num_generators() > 0) {
    const int low = *std::min_element(m.degrees().begin(), m.degrees().end());
    m = m.twisted(low - 1);
  }
  const int s = m.num_generators();
  const RingPtr& sa = a.poly_ring();

  std::vector<Column> rels = m.relations();
  for (const Polynomial& g : a.ideal().elements())
    for (int i = 0; i < s; ++i) {
      Column col(s, Polynomial(sa));
      col[i] = g;
      rels.push_back(std::move(col));
    }
  m = FPModule(sa, m.degrees(), std::move(rels));

  std::vector<std::string> names = sa->names();
  std::vector<int> weights = sa->weights();
  std::vector<int> e_vars;
  for (const std::string& e : fresh_names("e", s, names)) {
    e_vars.push_back(static_cast<int>(names.size()));
    names.push_back(e);
  }
  weights.insert(weights.end(), m.degrees().begin(), m.degrees().end());
  const RingPtr sb = make_poly_ring(sa->modulus(), names, weights);

  std::vector<Polynomial> ib = embed(a.ideal().elements(), sb);
  std::vector<int> var_map(sa->nvars());
  std::iota(var_map.begin(), var_map.end(), 0);
  for (const Column& col : m.relations()) {
    Polynomial r(sb);
    for (int i = 0; i < s; ++i)
      if (!col[i].is_zero()) r = r + map_variables(col[i], sb, var_map) * Polynomial::variable(sb, e_vars[i]);
    ib.push_back(r);
  }
  for (int i = 0; i < s; ++i)
    for (int j = i; j < s; ++j) ib.push_back(Polynomial::variable(sb, e_vars[i]) * Polynomial::variable(sb, e_vars[j]));

  AmalgamSpec spec;
  spec.name = std::move(name);
  spec.a = a;
  spec.b = PresentedRing::make(sb, std::move(ib), spec.name.empty() ? "" : spec.name + "_B");
  spec.f = hom_check(RingHom{"incl", a, spec.b, identity_images(a, spec.b)});
  std::vector<Polynomial> es;
  for (int v : e_vars) es.push_back(Polynomial::variable(sb, v));
  spec.j = make_ideal(spec.b, std::move(es));
  spec.kind = AmalgamKind::TrivialExtension;
  spec.j_module = prune(m);
  return spec;
}

namespace {

IdealBasis hom_colon(const AmalgamPresentation& p) {
  std::vector<Polynomial> zs;
  for (int z : p.z_vars) zs.push_back(Polynomial::variable(p.c, z));
  return colon(p.ring.defining_ideal(), IdealBasis::of(p.c, zs));
}

}  // namespace

IdealHandle hom_A_into_R(const AmalgamPresentation& p) { return make_ideal(p.ring, hom_colon(p).generators); }

HilbertSeries hom_A_into_R_series(const AmalgamPresentation& p) {
  const GroebnerBasis col = buchberger(hom_colon(p));
  if (col.is_unit()) return hilbert_series(p.ring);
  return hilbert_series(p.ring) - monomial_quotient_series(*p.c, col.leading_monomials());
}

}  // namespace amalg
