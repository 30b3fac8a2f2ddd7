#include "amalg/gb.hpp"

#include <algorithm>
#include <numeric>

namespace amalg {

using detail::ModOrder;
using detail::Vec;

IdealBasis IdealBasis::of(RingPtr ring, std::vector<Polynomial> gens) {
  IdealBasis b{std::move(ring), {}};
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    check_same_ring(*b.ring, *g.ring());
    b.generators.push_back(std::move(g));
  }
  return b;
}

IdealBasis IdealBasis::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return {std::move(ring), {std::move(one)}};
}

bool IdealBasis::homogeneous() const {
  return std::all_of(generators.begin(), generators.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Vec> elements)
    : ring_(std::move(ring)), order_(order), mod_order_{ring_, order, {0}}, elements_(std::move(elements)) {}

std::vector<Polynomial> GroebnerBasis::elements() const {
  std::vector<Polynomial> out;
  out.reserve(elements_.size());
  for (const Vec& v : elements_) out.push_back(detail::to_poly(v, ring_));
  return out;
}

bool GroebnerBasis::is_unit() const { return elements_.size() == 1 && elements_[0].front().mono.is_one(); }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const Vec& v : elements_) out.push_back(v.front().mono);
  return out;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.elements_.size() != b.elements_.size() || !(a.order_ == b.order_)) return false;
  if (a.ring_ && b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.elements_.size(); ++i) {
    const Vec& x = a.elements_[i];
    const Vec& y = b.elements_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!(x[k].mono == y[k].mono) || x[k].coeff != y[k].coeff) return false;
  }
  return true;
}

GroebnerBasis buchberger(const IdealBasis& basis, const MonomialOrder& ord) {
  ModOrder mo{basis.ring, ord, {0}};
  std::vector<Vec> gens;
  gens.reserve(basis.generators.size());
  for (const Polynomial& g : basis.generators) {
    check_same_ring(*basis.ring, *g.ring());
    gens.push_back(detail::from_poly(g, 0, mo));
  }
  return GroebnerBasis(basis.ring, ord, detail::groebner(std::move(gens), mo));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.ring() && gb.ring()) check_same_ring(*f.ring(), *gb.ring());
  if (f.is_zero()) return Polynomial(gb.ring());
  Vec v = detail::from_poly(f, 0, gb.mod_order());
  return detail::to_poly(detail::normal_form(std::move(v), gb.raw(), gb.mod_order()), gb.ring());
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

bool same_ideal(const IdealBasis& a, const IdealBasis& b) {
  check_same_ring(*a.ring, *b.ring);
  return buchberger(a) == buchberger(b);
}

bool ideal_contains(const IdealBasis& big, const IdealBasis& small) {
  GroebnerBasis gb = buchberger(big);
  return std::all_of(small.generators.begin(), small.generators.end(),
                     [&](const Polynomial& g) { return ideal_member(g, gb); });
}

IdealBasis ideal_sum(const IdealBasis& i, const IdealBasis& j) {
  check_same_ring(*i.ring, *j.ring);
  std::vector<Polynomial> gens = i.generators;
  gens.insert(gens.end(), j.generators.begin(), j.generators.end());
  return IdealBasis::of(i.ring, std::move(gens));
}

IdealBasis eliminate(const IdealBasis& basis, const std::vector<int>& front_vars) {
  if (front_vars.empty()) return basis;
  const PolyRing& r = *basis.ring;
  const int n = r.nvars();
  std::vector<int> perm;  // new position -> old index
  std::vector<bool> is_front(n, false);
  for (int v : front_vars) {
    if (v < 0 || v >= n || is_front[v]) throw Error(Errc::InvalidArgument, "bad elimination variable set");
    is_front[v] = true;
    perm.push_back(v);
  }
  for (int i = 0; i < n; ++i)
    if (!is_front[i]) perm.push_back(i);

  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<int> to_new(n), to_old(n);
  for (int k = 0; k < n; ++k) {
    names.push_back(r.name(perm[k]));
    weights.push_back(r.weight(perm[k]));
    to_new[perm[k]] = k;
    to_old[k] = perm[k];
  }
  RingPtr permuted = make_poly_ring(r.modulus(), names, weights);
  IdealBasis moved{permuted, {}};
  for (const Polynomial& g : basis.generators) moved.generators.push_back(map_variables(g, permuted, to_new));

  const int front = static_cast<int>(front_vars.size());
  GroebnerBasis gb = buchberger(moved, MonomialOrder::block(front));
  IdealBasis out{basis.ring, {}};
  for (const Polynomial& g : gb.elements()) {
    bool free_of_front = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (int k = 0; k < front; ++k)
        if (t.mono.exp[k] != 0) return false;
      return true;
    });
    if (free_of_front) out.generators.push_back(map_variables(g, basis.ring, to_old));
  }
  return out;
}

namespace {

// The ring with one extra variable of weight 1 in front.
RingPtr with_front_variable(const PolyRing& r, const std::string& name) {
  std::vector<std::string> names{name};
  std::vector<int> weights{1};
  names.insert(names.end(), r.names().begin(), r.names().end());
  weights.insert(weights.end(), r.weights().begin(), r.weights().end());
  return make_poly_ring(r.modulus(), names, weights);
}

}  // namespace

IdealBasis intersect(const IdealBasis& i, const IdealBasis& j) {
  check_same_ring(*i.ring, *j.ring);
  if (i.is_zero() || j.is_zero()) return IdealBasis{i.ring, {}};
  const PolyRing& r = *i.ring;
  RingPtr big = with_front_variable(r, "_t");
  std::vector<int> shift(r.nvars());
  std::iota(shift.begin(), shift.end(), 1);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;

  IdealBasis joint{big, {}};
  for (const Polynomial& g : i.generators) joint.generators.push_back(t * map_variables(g, big, shift));
  for (const Polynomial& g : j.generators) joint.generators.push_back(one_minus_t * map_variables(g, big, shift));

  IdealBasis elim = eliminate(joint, {0});
  std::vector<int> back(r.nvars() + 1);
  back[0] = -1;
  for (int k = 0; k < r.nvars(); ++k) back[k + 1] = k;
  IdealBasis out{i.ring, {}};
  for (const Polynomial& g : elim.generators) out.generators.push_back(map_variables(g, i.ring, back));
  return out;
}

IdealBasis colon(const IdealBasis& i, const IdealBasis& j) {
  check_same_ring(*i.ring, *j.ring);
  if (j.is_zero()) return IdealBasis::unit(i.ring);
  IdealBasis result;
  bool first = true;
  for (const Polynomial& g : j.generators) {
    // (I : g) = (I ∩ <g>) / g
    IdealBasis meet = intersect(i, IdealBasis::of(i.ring, {g}));
    IdealBasis quotient{i.ring, {}};
    for (const Polynomial& h : meet.generators) quotient.generators.push_back(divide_exact(h, g));
    if (first) {
      result = std::move(quotient);
      first = false;
    } else {
      result = intersect(result, quotient);
    }
  }
  return buchberger(result).as_basis();
}

IdealBasis kernel_of_map(const RingPtr& source, const std::vector<Polynomial>& images,
                         const IdealBasis& target_ideal) {
  const PolyRing& src = *source;
  const PolyRing& tgt = *target_ideal.ring;
  if (static_cast<int>(images.size()) != src.nvars())
    throw Error(Errc::InvalidArgument, "one image per source variable is required");
  if (src.modulus() != tgt.modulus()) throw Error(Errc::ContextMismatch, "source and target fields differ");
  for (const Polynomial& img : images)
    if (img.ring()) check_same_ring(*img.ring(), tgt);

  const int nt = tgt.nvars();
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int k = 0; k < nt; ++k) {
    names.push_back("_" + tgt.name(k));
    weights.push_back(tgt.weight(k));
  }
  for (int k = 0; k < src.nvars(); ++k) {
    names.push_back(src.name(k));
    weights.push_back(src.weight(k));
  }
  RingPtr joint = make_poly_ring(src.modulus(), names, weights);
  std::vector<int> from_target(nt);
  std::iota(from_target.begin(), from_target.end(), 0);

  IdealBasis gens{joint, {}};
  for (const Polynomial& g : target_ideal.generators) gens.generators.push_back(map_variables(g, joint, from_target));
  for (int k = 0; k < src.nvars(); ++k) {
    Polynomial img = images[k].ring() ? map_variables(images[k], joint, from_target) : Polynomial(joint);
    gens.generators.push_back(Polynomial::variable(joint, nt + k) - img);
  }
  std::vector<int> front(nt);
  std::iota(front.begin(), front.end(), 0);
  IdealBasis elim = eliminate(gens, front);

  std::vector<int> back(nt + src.nvars(), -1);
  for (int k = 0; k < src.nvars(); ++k) back[nt + k] = k;
  IdealBasis out{source, {}};
  for (const Polynomial& g : elim.generators) out.generators.push_back(map_variables(g, source, back));
  return out;
}

}  // namespace amalg
