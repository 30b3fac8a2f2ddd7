#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amalg/poly.hpp"

namespace amalg {

// Integer Laurent polynomial in t.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, long long c = 1);
  static LaurentPoly one() { return monomial(0); }

  const std::map<int, long long>& coeffs() const { return coeffs_; }
  long long coeff(int e) const;
  bool is_zero() const { return coeffs_.empty(); }
  int low_degree() const { return coeffs_.begin()->first; }
  int high_degree() const { return coeffs_.rbegin()->first; }
  long long value_at_one() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly shifted(int e) const;
  // Exact division by (1 - t); requires value_at_one() == 0.
  LaurentPoly divided_by_one_minus_t() const;
  // Exact quotient by a divisor with constant term 1, if it exists.
  std::optional<LaurentPoly> divided_exactly(const LaurentPoly& d) const;

  std::string to_string() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(int e, long long c);
  std::map<int, long long> coeffs_;
};

// numerator / prod_i (1 - t^{w_i}).
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(LaurentPoly numerator, std::vector<int> denominator_weights);

  const LaurentPoly& numerator() const { return numerator_; }
  const std::vector<int>& denominator_weights() const { return weights_; }

  // The form N/(1-t)^k with N a Laurent polynomial and N(1) != 0, when one
  // exists; the zero series is (0, 0).
  std::optional<std::pair<LaurentPoly, int>> standard_form() const;
  // Order of the pole at t = 1 (the Krull dimension); -1 for the zero series.
  int pole_order() const;
  bool is_zero() const { return numerator_.is_zero(); }

  // Coefficient of t^d in the series expansion.
  long long coefficient(int d) const;
  std::vector<long long> expand(int lo, int hi) const;

  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  HilbertSeries shifted(int e) const;  // multiply by t^e

  // "(1 + t - t^2)/(1-t)^2", or over the weighted denominator when no
  // standard form exists, e.g. "1/(1-t^2)".
  std::string to_string() const;

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);

 private:
  LaurentPoly numerator_;
  std::vector<int> weights_;
};

// Numerator of HS(S/M) over prod (1 - t^{w_i}) for a monomial ideal M.
LaurentPoly monomial_quotient_numerator(const PolyRing& ring, std::vector<Monomial> gens);
HilbertSeries monomial_quotient_series(const PolyRing& ring, std::vector<Monomial> gens);

}  // namespace amalg
