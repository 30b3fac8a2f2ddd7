#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "amalg/gb.hpp"
#include "amalg/hilbert.hpp"

namespace amalg {

// k[x_1..x_n]/I for a homogeneous proper ideal I, stored with its reduced
// grevlex Groebner basis. Cheap to copy; the data is shared and immutable.
class PresentedRing {
 public:
  PresentedRing() = default;

  // Throws UnitIdeal when 1 is in the ideal, NotHomogeneous for mixed degrees.
  static PresentedRing make(const RingPtr& ring, std::vector<Polynomial> generators, std::string name = "");
  static PresentedRing make(std::uint32_t p, const std::vector<std::pair<std::string, int>>& vars,
                            const std::vector<std::string>& generators, std::string name = "");

  const std::string& name() const { return data_->name; }
  const RingPtr& poly_ring() const { return data_->ring; }
  int nvars() const { return data_->ring->nvars(); }
  std::uint32_t modulus() const { return data_->ring->modulus(); }
  const GroebnerBasis& ideal() const { return data_->gb; }
  IdealBasis defining_ideal() const { return data_->gb.as_basis(); }
  const std::vector<Polynomial>& generators() const { return data_->generators; }
  bool is_polynomial_ring() const { return data_->gb.is_zero_ideal(); }

  Polynomial parse(std::string_view text) const { return parse_polynomial(data_->ring, text); }
  Polynomial reduce(const Polynomial& f) const { return normal_form(f, data_->gb); }

  // Same polynomial ring and same defining ideal.
  friend bool operator==(const PresentedRing& a, const PresentedRing& b);

 private:
  struct Data {
    std::string name;
    RingPtr ring;
    std::vector<Polynomial> generators;
    GroebnerBasis gb;
  };
  std::shared_ptr<const Data> data_;
};

struct RingHom {
  std::string name;
  PresentedRing source;
  PresentedRing target;
  std::vector<Polynomial> images;  // one per source variable, in the target ring
};

// Returns `f` after checking it is graded (DegreeMismatch) and well defined
// (NotWellDefined).
RingHom hom_check(RingHom f);

// Composite g∘f (apply f, then g).
RingHom compose(const RingHom& g, const RingHom& f);

struct IdealHandle {
  PresentedRing ambient;
  std::vector<Polynomial> generators;

  IdealBasis lifted() const;  // generators plus the ambient defining ideal
};

// Drops representatives that vanish in the ring; throws NotHomogeneous.
IdealHandle make_ideal(const PresentedRing& ring, std::vector<Polynomial> generators);
IdealHandle make_ideal(const PresentedRing& ring, const std::vector<std::string>& generators);

IdealHandle contract_ideal(const RingHom& f, const IdealHandle& j);

PresentedRing quotient(const PresentedRing& r, const IdealHandle& j, std::string name = "");

// All monomials of weighted degree d.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int d);

// Standard monomials count.
long long hilbert_function(const PresentedRing& r, int d);
// dim_k of the degree-d piece of the ideal inside its ring, by linear algebra
// on generator multiples.
long long hilbert_function(const IdealHandle& j, int d);

HilbertSeries hilbert_series(const PresentedRing& r);
HilbertSeries hilbert_series(const IdealHandle& j);

}  // namespace amalg
