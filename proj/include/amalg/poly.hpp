#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amalg/field.hpp"

namespace amalg {

inline constexpr int kMaxVars = 24;

// Variable names, positive integer weights and the coefficient field of a
// polynomial ring. Shared by every polynomial living in that ring.
class PolyRing {
 public:
  PolyRing(std::uint32_t modulus, std::vector<std::string> names, std::vector<int> weights);

  std::uint32_t modulus() const { return modulus_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int weight(int i) const { return weights_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  int weight_sum() const;
  // -1 when absent.
  int index_of(std::string_view name) const;

  bool same_as(const PolyRing& other) const;

 private:
  std::uint32_t modulus_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_poly_ring(std::uint32_t modulus, std::vector<std::string> names,
                       std::vector<int> weights);

// Throws ContextMismatch unless both rings are the same (structurally).
void check_same_ring(const PolyRing& a, const PolyRing& b);

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  int degree = 0;  // weighted degree, kept in sync with exp

  bool is_one() const { return degree == 0; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

Monomial mono_one();
Monomial mono_var(const PolyRing& r, int var, int power = 1);
Monomial mono_from_exponents(const PolyRing& r, const std::vector<int>& exps);
Monomial mono_mul(const Monomial& a, const Monomial& b);
// Requires divides(b, a).
Monomial mono_div(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_lcm(const PolyRing& r, const Monomial& a, const Monomial& b);
Monomial mono_gcd(const PolyRing& r, const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
int recompute_degree(const PolyRing& r, const Monomial& m);

enum class OrderKind { Grevlex, Lex, Block };

// grevlex and block compare weighted degree first. Block orders compare the
// first `front` variables with grevlex, then the remaining ones with grevlex.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  int front = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder block(int front) { return {OrderKind::Block, front}; }

  // <0, 0, >0 as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b, const PolyRing& r) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct Term {
  Monomial mono;
  Coeff coeff;
};

// Sparse polynomial. Terms are kept sorted descending under grevlex with no
// zero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, int var);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t size() const { return terms_.size(); }

  bool is_homogeneous() const;
  // Largest weighted degree of a term; -1 for zero.
  int degree() const;
  // Coefficient of the constant term.
  Coeff constant_coeff() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Coeff c) const;
  Polynomial times_monomial(const Monomial& m, Coeff c = 1) const;
  Polynomial monic(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  // Display syntax: `x^2*u - v`, descending under `ord`.
  std::string to_string(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

// Throws ZeroPolynomial for f = 0.
std::pair<Monomial, FieldElem> leading_term(const Polynomial& f, const MonomialOrder& ord);

std::string monomial_to_string(const PolyRing& r, const Monomial& m);
std::string coeff_to_string(Coeff c, std::uint32_t p);

// Exact quotient f / g; throws InvalidArgument when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

// Rewrites f into `target`, sending variable i of f's ring to variable
// var_map[i] of `target` (var_map[i] < 0 requires the variable to be absent).
Polynomial map_variables(const Polynomial& f, const RingPtr& target, const std::vector<int>& var_map);

// Substitutes images[i] for variable i; images live in a common ring.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target);

// Parses the display syntax: integers, variables, `+ - * ^` and parentheses.
// Juxtaposed factors multiply (`2x`).
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace amalg
