#pragma once

#include <vector>

#include "amalg/detail/vec.hpp"
#include "amalg/poly.hpp"

namespace amalg {

// A generating set of an ideal. The zero ideal has no generators.
struct IdealBasis {
  RingPtr ring;
  std::vector<Polynomial> generators;

  static IdealBasis of(RingPtr ring, std::vector<Polynomial> gens);
  static IdealBasis unit(RingPtr ring);

  bool homogeneous() const;
  bool is_zero() const { return generators.empty(); }
};

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<detail::Vec> elements);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  // Monic, reduced, sorted by decreasing leading monomial.
  std::vector<Polynomial> elements() const;
  const std::vector<detail::Vec>& raw() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;
  const detail::ModOrder& mod_order() const { return mod_order_; }

  IdealBasis as_basis() const { return IdealBasis::of(ring_, elements()); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  RingPtr ring_;
  MonomialOrder order_;
  detail::ModOrder mod_order_;
  std::vector<detail::Vec> elements_;
};

GroebnerBasis buchberger(const IdealBasis& basis, const MonomialOrder& ord = MonomialOrder::grevlex());
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);
// Ideal equality via reduced grevlex bases.
bool same_ideal(const IdealBasis& a, const IdealBasis& b);
bool ideal_contains(const IdealBasis& big, const IdealBasis& small);

// Contraction to the subring on the variables not in `front_vars`. The result
// lives in the same ring and does not involve the eliminated variables.
IdealBasis eliminate(const IdealBasis& basis, const std::vector<int>& front_vars);
IdealBasis intersect(const IdealBasis& i, const IdealBasis& j);
IdealBasis colon(const IdealBasis& i, const IdealBasis& j);
IdealBasis ideal_sum(const IdealBasis& i, const IdealBasis& j);

// ker(k[source] -> k[target]/target_ideal), x_i -> images[i].
IdealBasis kernel_of_map(const RingPtr& source, const std::vector<Polynomial>& images,
                         const IdealBasis& target_ideal);

}  // namespace amalg
