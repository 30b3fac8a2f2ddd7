#include "amalg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace amalg {

PolyRing::PolyRing(std::uint32_t modulus, std::vector<std::string> names, std::vector<int> weights)
    : modulus_(modulus), names_(std::move(names)), weights_(std::move(weights)) {
  if (modulus < 2 || modulus >= (1u << 31) || !is_prime(modulus))
    throw Error(Errc::InvalidArgument, "modulus " + std::to_string(modulus) + " is not a prime below 2^31");
  if (names_.size() != weights_.size())
    throw Error(Errc::InvalidArgument, "variable names and weights differ in length");
  if (names_.size() > static_cast<std::size_t>(kMaxVars))
    throw Error(Errc::InvalidArgument, "at most " + std::to_string(kMaxVars) + " variables are supported");
  for (int w : weights_)
    if (w < 1) throw Error(Errc::InvalidArgument, "variable weights must be positive");
}

int PolyRing::weight_sum() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

int PolyRing::index_of(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

bool PolyRing::same_as(const PolyRing& other) const {
  return this == &other ||
         (modulus_ == other.modulus_ && names_ == other.names_ && weights_ == other.weights_);
}

RingPtr make_poly_ring(std::uint32_t modulus, std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<const PolyRing>(modulus, std::move(names), std::move(weights));
}

void check_same_ring(const PolyRing& a, const PolyRing& b) {
  if (!a.same_as(b)) throw Error(Errc::ContextMismatch, "polynomials live in different rings");
}

// ---------------------------------------------------------------------------
// monomials

Monomial mono_one() { return {}; }

Monomial mono_var(const PolyRing& r, int var, int power) {
  Monomial m;
  m.exp[var] = static_cast<std::uint16_t>(power);
  m.degree = r.weight(var) * power;
  return m;
}

Monomial mono_from_exponents(const PolyRing& r, const std::vector<int>& exps) {
  Monomial m;
  for (int i = 0; i < r.nvars(); ++i) {
    m.exp[i] = static_cast<std::uint16_t>(exps.at(i));
    m.degree += exps[i] * r.weight(i);
  }
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  m.degree = a.degree + b.degree;
  return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  m.degree = a.degree - b.degree;
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

int recompute_degree(const PolyRing& r, const Monomial& m) {
  int d = 0;
  for (int i = 0; i < r.nvars(); ++i) d += m.exp[i] * r.weight(i);
  return d;
}

Monomial mono_lcm(const PolyRing& r, const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
  m.degree = recompute_degree(r, m);
  return m;
}

Monomial mono_gcd(const PolyRing& r, const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = std::min(a.exp[i], b.exp[i]);
  m.degree = recompute_degree(r, m);
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, const PolyRing& r, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exp[i] * r.weight(i);
    db += b.exp[i] * r.weight(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, const PolyRing& r) const {
  const int n = r.nvars();
  switch (kind) {
    case OrderKind::Grevlex: {
      if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
      for (int i = n - 1; i >= 0; --i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
      return 0;
    }
    case OrderKind::Lex:
      for (int i = 0; i < n; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
      return 0;
    case OrderKind::Block: {
      int c = grevlex_range(a, b, r, 0, front);
      return c != 0 ? c : grevlex_range(a, b, r, front, n);
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// polynomials

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

// Merges a + c*b, both sorted descending under grevlex.
std::vector<Term> merge_add(const PolyRing& r, const std::vector<Term>& a, const std::vector<Term>& b, Coeff c) {
  const std::uint32_t p = r.modulus();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = kGrevlex.compare(a[i].mono, b[j].mono, r);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Coeff v = Zp::mul(b[j].coeff, c, p);
      if (v != 0) out.push_back({b[j].mono, v});
      ++j;
    } else {
      Coeff v = Zp::add(a[i].coeff, Zp::mul(b[j].coeff, c, p), p);
      if (v != 0) out.push_back({a[i].mono, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  Polynomial f(std::move(ring));
  Coeff v = Zp::from_int(c, f.ring_->modulus());
  if (v != 0) f.terms_.push_back({mono_one(), v});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
  Monomial m = mono_var(*ring, var);
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial f(std::move(ring));
  c %= f.ring_->modulus();
  if (c != 0) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  const PolyRing& r = *f.ring_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return kGrevlex.compare(a.mono, b.mono, r) > 0; });
  for (const Term& t : terms) {
    Coeff c = t.coeff % r.modulus();
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = Zp::add(f.terms_.back().coeff, c, r.modulus());
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (c != 0) {
      f.terms_.push_back({t.mono, c});
    }
  }
  return f;
}

bool Polynomial::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.mono.degree != terms_.front().mono.degree) return false;
  return true;
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree);
  return d;
}

Coeff Polynomial::constant_coeff() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (is_zero() && !ring_) return o;
  if (o.is_zero() && !o.ring_) return *this;
  check_same_ring(*ring_, *o.ring_);
  Polynomial f(ring_);
  f.terms_ = merge_add(*ring_, terms_, o.terms_, 1);
  return f;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (o.is_zero() && !o.ring_) return *this;
  if (!ring_) return -o;
  check_same_ring(*ring_, *o.ring_);
  Polynomial f(ring_);
  f.terms_ = merge_add(*ring_, terms_, o.terms_, ring_->modulus() - 1);
  return f;
}

Polynomial Polynomial::operator-() const { return scaled(ring_ ? ring_->modulus() - 1 : 0); }

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial f(ring_);
  if (!ring_) return f;
  c %= ring_->modulus();
  if (c == 0) return f;
  f.terms_.reserve(terms_.size());
  for (const Term& t : terms_) f.terms_.push_back({t.mono, Zp::mul(t.coeff, c, ring_->modulus())});
  return f;
}

Polynomial Polynomial::times_monomial(const Monomial& m, Coeff c) const {
  Polynomial f(ring_);
  if (!ring_) return f;
  c %= ring_->modulus();
  if (c == 0) return f;
  f.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    f.terms_.push_back({mono_mul(t.mono, m), Zp::mul(t.coeff, c, ring_->modulus())});
  return f;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return Polynomial(ring_ ? ring_ : o.ring_);
  check_same_ring(*ring_, *o.ring_);
  Polynomial f(ring_);
  const Polynomial& small = size() <= o.size() ? *this : o;
  const Polynomial& big = size() <= o.size() ? o : *this;
  for (const Term& t : small.terms_) {
    // multiplication by a monomial preserves the order, so the shifted
    // copy of `big` is already sorted
    Polynomial shifted = big.times_monomial(t.mono, t.coeff);
    f.terms_ = merge_add(*ring_, f.terms_, shifted.terms_, 1);
  }
  return f;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return scaled(Zp::inv(leading_term(*this, ord).second.value(), ring_->modulus()));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::pair<Monomial, FieldElem> leading_term(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "leading term of the zero polynomial");
  const PolyRing& r = *f.ring();
  const Term* best = &f.terms().front();
  if (!(ord == kGrevlex))
    for (const Term& t : f.terms())
      if (ord.compare(t.mono, best->mono, r) > 0) best = &t;
  return {best->mono, FieldElem(best->coeff, r.modulus())};
}

std::string monomial_to_string(const PolyRing& r, const Monomial& m) {
  std::string out;
  for (int i = 0; i < r.nvars(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += r.name(i);
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

std::string coeff_to_string(Coeff c, std::uint32_t p) { return std::to_string(Zp::signed_value(c, p)); }

std::string Polynomial::to_string(const MonomialOrder& ord) const {
  if (is_zero()) return "0";
  const PolyRing& r = *ring_;
  std::vector<Term> sorted = terms_;
  if (!(ord == kGrevlex))
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono, r) > 0; });
  std::string out;
  for (const Term& t : sorted) {
    long long v = Zp::signed_value(t.coeff, r.modulus());
    bool negative = v < 0;
    long long mag = negative ? -v : v;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (t.mono.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += monomial_to_string(r, t.mono);
    }
  }
  return out;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(Errc::InvalidArgument, "division by zero polynomial");
  check_same_ring(*f.ring(), *g.ring());
  const std::uint32_t p = g.ring()->modulus();
  const Term& lg = g.terms().front();
  Coeff inv = Zp::inv(lg.coeff, p);
  Polynomial q(g.ring()), r = f;
  while (!r.is_zero()) {
    const Term& lr = r.terms().front();
    if (!divides(lg.mono, lr.mono)) throw Error(Errc::InvalidArgument, "inexact polynomial division");
    Monomial m = mono_div(lr.mono, lg.mono);
    Coeff c = Zp::mul(lr.coeff, inv, p);
    q = q + Polynomial::monomial(g.ring(), m, c);
    r = r - g.times_monomial(m, c);
  }
  return q;
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target, const std::vector<int>& var_map) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  const PolyRing& src = *f.ring();
  for (const Term& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < src.nvars(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (var_map[i] < 0) throw Error(Errc::InvalidArgument, "variable " + src.name(i) + " has no image");
      m.exp[var_map[i]] = static_cast<std::uint16_t>(m.exp[var_map[i]] + t.mono.exp[i]);
    }
    m.degree = recompute_degree(*target, m);
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target) {
  const PolyRing& src = *f.ring();
  Polynomial out(target);
  // cache powers per variable
  std::vector<std::vector<Polynomial>> powers(src.nvars());
  auto power = [&](int var, int e) -> const Polynomial& {
    auto& pw = powers[var];
    if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[var]);
    return pw[e];
  };
  for (const Term& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (int i = 0; i < src.nvars(); ++i)
      if (t.mono.exp[i] != 0) term = term * power(i, t.mono.exp[i]);
    out = out + term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, msg + " in polynomial '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '_' || std::isalnum(static_cast<unsigned char>(c));
  }

  Polynomial expr() {
    Polynomial f = Polynomial::constant(ring_, 0);
    bool negate = false;
    if (peek('+')) ++pos_;
    else if (peek('-')) { ++pos_; negate = true; }
    Polynomial t = term();
    f = negate ? f - t : f + t;
    while (true) {
      if (peek('+')) { ++pos_; f = f + term(); }
      else if (peek('-')) { ++pos_; f = f - term(); }
      else break;
    }
    return f;
  }

  Polynomial term() {
    Polynomial f = power();
    while (true) {
      if (peek('*')) { ++pos_; f = f * power(); }
      else if (starts_factor()) f = f * power();
      else break;
    }
    return f;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      Polynomial r = Polynomial::constant(ring_, 1);
      for (int i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint32_t p = ring_->modulus();
      Coeff v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        v = Zp::add(Zp::mul(v, 10, p), static_cast<Coeff>(text_[pos_++] - '0') % p, p);
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) fail("unknown variable '" + std::string(name) + "'");
      return Polynomial::variable(ring_, idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

}  // namespace amalg
