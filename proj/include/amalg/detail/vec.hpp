#pragma once

#include <vector>

#include "amalg/poly.hpp"

// Internal representation shared by the ideal and module Groebner engines:
// an element of a graded free module S^r as a list of terms tagged with a
// component index, sorted descending under a ModOrder.
namespace amalg::detail {

struct MTerm {
  Monomial mono;
  int comp;
  Coeff coeff;
};

using Vec = std::vector<MTerm>;

// Position-over-term: a lower component index ranks higher, then the monomial
// order decides. For a rank-one module this is just the monomial order.
struct ModOrder {
  RingPtr ring;
  MonomialOrder mono;
  std::vector<int> shifts;  // degree of each free generator

  int rank() const { return static_cast<int>(shifts.size()); }
  int compare(const MTerm& a, const MTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return mono.compare(a.mono, b.mono, *ring);
  }
  int degree(const MTerm& t) const { return t.mono.degree + shifts[t.comp]; }
};

void sort_vec(Vec& v, const ModOrder& ord);
// f - c*m*g, all sorted.
Vec sub_mul(const Vec& f, Coeff c, const Monomial& m, const Vec& g, const ModOrder& ord);
Vec add_vecs(const Vec& f, const Vec& g, const ModOrder& ord);
Vec scale_vec(const Vec& f, Coeff c, std::uint32_t p);
Vec mul_poly(const Vec& f, const Polynomial& g, const ModOrder& ord);
void make_monic(Vec& v, std::uint32_t p);
bool is_homogeneous(const Vec& v, const ModOrder& ord);
int max_mono_degree(const Vec& v);

Vec from_poly(const Polynomial& f, int comp, const ModOrder& ord);
Polynomial to_poly(const Vec& v, const RingPtr& ring, int comp = 0);
// Column of polynomials (component i = entry i) and back.
Vec from_column(const std::vector<Polynomial>& col, const ModOrder& ord, int comp_offset = 0);
std::vector<Polynomial> to_column(const Vec& v, const RingPtr& ring, int rank, int comp_offset = 0);

// Reduced Groebner basis of the submodule generated by `gens`; elements are
// monic and sorted by decreasing leading term. Throws DegreeCapExceeded.
std::vector<Vec> groebner(std::vector<Vec> gens, const ModOrder& ord);

// Fully reduced normal form with respect to a Groebner basis.
Vec normal_form(Vec f, const std::vector<Vec>& gb, const ModOrder& ord);

// Degree cap applied to every intermediate result of `groebner` (weighted
// monomial degree). Thread-local; restored by the guard.
int degree_cap();
class DegreeCapGuard {
 public:
  explicit DegreeCapGuard(int cap);
  ~DegreeCapGuard();
  DegreeCapGuard(const DegreeCapGuard&) = delete;
  DegreeCapGuard& operator=(const DegreeCapGuard&) = delete;

 private:
  int saved_;
};

}  // namespace amalg::detail
