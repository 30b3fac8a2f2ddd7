#include "amalg/hilbert.hpp"

#include <algorithm>

namespace amalg {

LaurentPoly LaurentPoly::monomial(int exponent, long long c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int e, long long c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

long long LaurentPoly::coeff(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? 0 : it->second;
}

long long LaurentPoly::value_at_one() const {
  long long s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r;
  for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k + e, c);
  return r;
}

LaurentPoly LaurentPoly::divided_by_one_minus_t() const {
  LaurentPoly q;
  if (is_zero()) return q;
  long long running = 0;
  for (int e = low_degree(); e < high_degree(); ++e) {
    running += coeff(e);
    q.add_term(e, running);
  }
  return q;
}

std::optional<LaurentPoly> LaurentPoly::divided_exactly(const LaurentPoly& d) const {
  LaurentPoly r = *this, q;
  const int d0 = d.low_degree();
  const long long lead = d.coeff(d0);
  while (!r.is_zero()) {
    const int e = r.low_degree();
    if (r.high_degree() - e < d.high_degree() - d0) return std::nullopt;
    const long long c = r.coeff(e);
    if (c % lead != 0) return std::nullopt;
    const LaurentPoly step = monomial(e - d0, c / lead);
    q = q + step;
    r = r - step * d;
  }
  return q;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    long long mag = c < 0 ? -c : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

HilbertSeries::HilbertSeries(LaurentPoly numerator, std::vector<int> denominator_weights)
    : numerator_(std::move(numerator)), weights_(std::move(denominator_weights)) {
  std::sort(weights_.begin(), weights_.end());
}

namespace {

LaurentPoly geometric(int w) {
  LaurentPoly g;
  for (int e = 0; e < w; ++e) g = g + LaurentPoly::monomial(e);
  return g;
}

LaurentPoly denominator_of(const std::vector<int>& weights) {
  LaurentPoly d = LaurentPoly::one();
  for (int w : weights) d = d * (LaurentPoly::one() - LaurentPoly::monomial(w));
  return d;
}

}  // namespace

std::optional<std::pair<LaurentPoly, int>> HilbertSeries::standard_form() const {
  if (numerator_.is_zero()) return std::pair<LaurentPoly, int>{LaurentPoly{}, 0};
  // 1 - t^w = (1 - t)(1 + t + ... + t^{w-1})
  LaurentPoly rest = LaurentPoly::one();
  for (int w : weights_) rest = rest * geometric(w);
  LaurentPoly n = numerator_;
  int k = static_cast<int>(weights_.size());
  while (k > 0 && n.value_at_one() == 0) {
    n = n.divided_by_one_minus_t();
    --k;
  }
  std::optional<LaurentPoly> q = n.divided_exactly(rest);
  if (!q) return std::nullopt;
  return std::pair<LaurentPoly, int>{*q, k};
}

int HilbertSeries::pole_order() const {
  if (is_zero()) return -1;
  LaurentPoly n = numerator_;
  int k = static_cast<int>(weights_.size());
  while (k > 0 && n.value_at_one() == 0) {
    n = n.divided_by_one_minus_t();
    --k;
  }
  return k;
}

std::vector<long long> HilbertSeries::expand(int lo, int hi) const {
  if (hi < lo) return {};
  if (numerator_.is_zero()) return std::vector<long long>(hi - lo + 1, 0);
  const int base = std::min(lo, numerator_.low_degree());
  std::vector<long long> a(hi - base + 1, 0);
  for (const auto& [e, c] : numerator_.coeffs())
    if (e <= hi) a[e - base] += c;
  for (int w : weights_)
    for (std::size_t i = w; i < a.size(); ++i) a[i] += a[i - w];
  return std::vector<long long>(a.begin() + (lo - base), a.end());
}

long long HilbertSeries::coefficient(int d) const { return expand(d, d).front(); }

namespace {

HilbertSeries combine(const HilbertSeries& a, const HilbertSeries& b, bool subtract) {
  // Common denominator: each weight with the larger of its two multiplicities.
  std::map<int, int> ma, mb;
  for (int w : a.denominator_weights()) ++ma[w];
  for (int w : b.denominator_weights()) ++mb[w];
  std::vector<int> common, extra_a, extra_b;
  std::map<int, int> all = ma;
  for (const auto& [w, m] : mb) all[w] = std::max(all[w], m);
  for (const auto& [w, m] : all) {
    for (int i = 0; i < m; ++i) common.push_back(w);
    for (int i = ma[w]; i < m; ++i) extra_a.push_back(w);
    for (int i = mb[w]; i < m; ++i) extra_b.push_back(w);
  }
  const LaurentPoly x = a.numerator() * denominator_of(extra_a);
  const LaurentPoly y = b.numerator() * denominator_of(extra_b);
  return HilbertSeries(subtract ? x - y : x + y, common);
}

}  // namespace

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const { return combine(*this, o, false); }
HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const { return combine(*this, o, true); }
HilbertSeries HilbertSeries::shifted(int e) const { return HilbertSeries(numerator_.shifted(e), weights_); }

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
  return a.numerator() * denominator_of(b.denominator_weights()) ==
         b.numerator() * denominator_of(a.denominator_weights());
}

std::string HilbertSeries::to_string() const {
  if (const auto form = standard_form()) {
    const auto& [n, k] = *form;
    if (k == 0) return n.to_string();
    std::string num = n.coeffs().size() > 1 ? "(" + n.to_string() + ")" : n.to_string();
    return num + "/(1-t)" + (k > 1 ? "^" + std::to_string(k) : "");
  }
  std::string num = numerator_.coeffs().size() > 1 ? "(" + numerator_.to_string() + ")" : numerator_.to_string();
  std::string den;
  for (int w : weights_) den += w == 1 ? "(1-t)" : "(1-t^" + std::to_string(w) + ")";
  return num + "/" + (weights_.size() > 1 ? "(" + den + ")" : den);
}

// ---------------------------------------------------------------------------

namespace {

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exp < b.exp;
  });
  std::vector<Monomial> out;
  for (const Monomial& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return divides(o, m); });
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

LaurentPoly numerator_rec(const PolyRing& r, std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return LaurentPoly::one();
  if (gens.front().is_one()) return LaurentPoly{};

  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j)
      pairwise_coprime = coprime(gens[i], gens[j]);
  if (pairwise_coprime) {
    LaurentPoly n = LaurentPoly::one();
    for (const Monomial& m : gens) n = n * (LaurentPoly::one() - LaurentPoly::monomial(m.degree));
    return n;
  }

  // Pivot on the variable shared by the most generators:
  // HS(S/M) = HS(S/(M + x)) + t^w HS(S/(M : x)).
  int best = 0, best_count = -1;
  for (int v = 0; v < r.nvars(); ++v) {
    int count = 0;
    for (const Monomial& m : gens) count += m.exp[v] > 0;
    if (count > best_count) {
      best = v;
      best_count = count;
    }
  }
  const Monomial x = mono_var(r, best);
  std::vector<Monomial> plus = gens;
  plus.push_back(x);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const Monomial& m : gens) {
    Monomial q = m;
    if (q.exp[best] > 0) {
      --q.exp[best];
      q.degree -= r.weight(best);
    }
    quotient.push_back(q);
  }
  return numerator_rec(r, std::move(plus)) + numerator_rec(r, std::move(quotient)).shifted(r.weight(best));
}

}  // namespace

LaurentPoly monomial_quotient_numerator(const PolyRing& ring, std::vector<Monomial> gens) {
  return numerator_rec(ring, std::move(gens));
}

HilbertSeries monomial_quotient_series(const PolyRing& ring, std::vector<Monomial> gens) {
  return HilbertSeries(numerator_rec(ring, std::move(gens)), ring.weights());
}

}  // namespace amalg
