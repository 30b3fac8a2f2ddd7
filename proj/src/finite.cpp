#include "amalg/finite.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "amalg/error.hpp"

namespace amalg {

namespace {

constexpr int kSizeCap = 4096;

void not_a_ring(const std::string& name, const std::string& why) {
  throw Error(Errc::NotARing, (name.empty() ? std::string("tables") : name) + ": " + why);
}

}  // namespace

FiniteRing::FiniteRing(int order, std::vector<std::uint16_t> add, std::vector<std::uint16_t> mul, std::string name)
    : n_(order), add_(std::move(add)), mul_(std::move(mul)), name_(std::move(name)) {
  if (n_ < 2) not_a_ring(name_, "order must be at least 2");
  if (n_ > 65535) throw Error(Errc::SizeCap, "ring order exceeds the label range");
  const std::size_t cells = static_cast<std::size_t>(n_) * n_;
  if (add_.size() != cells || mul_.size() != cells) not_a_ring(name_, "table size does not match the order");
  for (std::size_t i = 0; i < cells; ++i)
    if (add_[i] >= n_ || mul_[i] >= n_) not_a_ring(name_, "table entry out of range");

  for (int a = 0; a < n_; ++a) {
    if (this->add(0, a) != a) not_a_ring(name_, "0 is not an additive identity");
    if (this->mul(1, a) != a) not_a_ring(name_, "1 is not a multiplicative identity");
    bool has_neg = false;
    for (int b = 0; b < n_ && !has_neg; ++b) has_neg = this->add(a, b) == 0;
    if (!has_neg) not_a_ring(name_, "element " + std::to_string(a) + " has no additive inverse");
    for (int b = 0; b < n_; ++b)
      if (this->add(a, b) != this->add(b, a) || this->mul(a, b) != this->mul(b, a)) not_a_ring(name_, "not commutative");
  }

  auto check = [&](int a, int b, int c) {
    if (this->add(this->add(a, b), c) != this->add(a, this->add(b, c))) not_a_ring(name_, "addition not associative");
    if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c))) not_a_ring(name_, "multiplication not associative");
    if (this->mul(a, this->add(b, c)) != this->add(this->mul(a, b), this->mul(a, c))) not_a_ring(name_, "not distributive");
  };
  if (n_ <= 64) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (int k = 0; k < 20000; ++k) check(pick(rng), pick(rng), pick(rng));
  }
}

int FiniteRing::neg(int a) const {
  for (int b = 0; b < n_; ++b)
    if (add(a, b) == 0) return b;
  return 0;
}

FiniteRing FiniteRing::zmod(int n, std::string name) {
  if (n < 2) throw Error(Errc::InvalidArgument, "Z/n needs n >= 2");
  if (n > kSizeCap) throw Error(Errc::SizeCap, "Z/" + std::to_string(n) + " exceeds the size cap");
  std::vector<std::uint16_t> add(static_cast<std::size_t>(n) * n), mul(add.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
      mul[a * n + b] = static_cast<std::uint16_t>((a * b) % n);
    }
  return FiniteRing(n, std::move(add), std::move(mul), std::move(name));
}

int FiniteRing::pair_label(int a, int b, int n2) {
  const int raw = a * n2 + b;
  if (raw == 1) return n2 + 1;
  if (raw == n2 + 1) return 1;
  return raw;
}

std::pair<int, int> FiniteRing::pair_of(int label, int n2) {
  if (label == 1) label = n2 + 1;
  else if (label == n2 + 1) label = 1;
  return {label / n2, label % n2};
}

FiniteRing FiniteRing::product(const FiniteRing& r1, const FiniteRing& r2, std::string name) {
  const int n1 = r1.order(), n2 = r2.order();
  if (n1 * n2 > kSizeCap) throw Error(Errc::SizeCap, "product exceeds the size cap");
  const int n = n1 * n2;
  std::vector<std::uint16_t> add(static_cast<std::size_t>(n) * n), mul(add.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a1, b1] = pair_of(x, n2);
      auto [a2, b2] = pair_of(y, n2);
      add[x * n + y] = static_cast<std::uint16_t>(pair_label(r1.add(a1, a2), r2.add(b1, b2), n2));
      mul[x * n + y] = static_cast<std::uint16_t>(pair_label(r1.mul(a1, a2), r2.mul(b1, b2), n2));
    }
  return FiniteRing(n, std::move(add), std::move(mul), std::move(name));
}

// ---------------------------------------------------------------------------

bool is_ideal(const FiniteRing& r, const ElementSet& s) {
  if (!s.test(0)) return false;
  for (std::size_t a = s.find_first(); a != ElementSet::npos; a = s.find_next(a)) {
    for (std::size_t b = s.find_first(); b != ElementSet::npos; b = s.find_next(b))
      if (!s.test(r.add(static_cast<int>(a), static_cast<int>(b)))) return false;
    for (int x = 0; x < r.order(); ++x)
      if (!s.test(r.mul(x, static_cast<int>(a)))) return false;
  }
  return true;
}

namespace {

ElementSet principal(const FiniteRing& r, int a) {
  ElementSet s(r.order());
  for (int x = 0; x < r.order(); ++x) s.set(r.mul(x, a));
  return s;
}

ElementSet ideal_sum(const FiniteRing& r, const ElementSet& x, const ElementSet& y) {
  ElementSet s(r.order());
  for (std::size_t a = x.find_first(); a != ElementSet::npos; a = x.find_next(a))
    for (std::size_t b = y.find_first(); b != ElementSet::npos; b = y.find_next(b))
      s.set(r.add(static_cast<int>(a), static_cast<int>(b)));
  return s;
}

}  // namespace

FiniteIdeal ideal_generated(const FiniteRing& r, const std::vector<int>& gens) {
  ElementSet s(r.order());
  s.set(0);
  for (int g : gens) {
    if (g < 0 || g >= r.order()) throw Error(Errc::InvalidArgument, "element " + std::to_string(g) + " out of range");
    s = ideal_sum(r, s, principal(r, g));
  }
  return {s};
}

FiniteRing quotient(const FiniteRing& r, const FiniteIdeal& i, std::string name) {
  if (!is_ideal(r, i.elements)) throw Error(Errc::InvalidArgument, "quotient by a non-ideal");
  if (i.contains(1)) throw Error(Errc::InvalidArgument, "quotient by the unit ideal");
  const int n = r.order();
  std::vector<int> rep(n, -1);  // element -> smallest coset representative
  for (int x = 0; x < n; ++x) {
    if (rep[x] >= 0) continue;
    for (std::size_t a = i.elements.find_first(); a != ElementSet::npos; a = i.elements.find_next(a))
      rep[r.add(x, static_cast<int>(a))] = x;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  // 0 and 1 are the two smallest representatives already.
  std::vector<int> label(n, -1);
  for (std::size_t k = 0; k < reps.size(); ++k) label[reps[k]] = static_cast<int>(k);
  const int m = static_cast<int>(reps.size());
  std::vector<std::uint16_t> add(static_cast<std::size_t>(m) * m), mul(add.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      add[a * m + b] = static_cast<std::uint16_t>(label[rep[r.add(reps[a], reps[b])]]);
      mul[a * m + b] = static_cast<std::uint16_t>(label[rep[r.mul(reps[a], reps[b])]]);
    }
  return FiniteRing(m, std::move(add), std::move(mul), std::move(name));
}

std::vector<FiniteIdeal> ideal_lattice(const FiniteRing& r) {
  if (r.order() > kSizeCap) throw Error(Errc::SizeCap, "ring of order " + std::to_string(r.order()) + " exceeds the size cap");
  std::set<ElementSet> seen;
  std::vector<ElementSet> all;
  for (int a = 0; a < r.order(); ++a) {
    ElementSet p = principal(r, a);
    if (seen.insert(p).second) all.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet s = ideal_sum(r, all[i], all[j]);
      if (seen.insert(s).second) all.push_back(std::move(s));
    }
  std::vector<FiniteIdeal> out;
  for (const ElementSet& s : seen) out.push_back({s});
  return out;
}

bool is_prime(const FiniteRing& r, const FiniteIdeal& p) {
  if (p.contains(1)) return false;
  for (int a = 0; a < r.order(); ++a) {
    if (p.contains(a)) continue;
    for (int b = 0; b < r.order(); ++b)
      if (!p.contains(b) && p.contains(r.mul(a, b))) return false;
  }
  return true;
}

std::vector<FiniteIdeal> enumerate_primes(const FiniteRing& r) {
  std::vector<FiniteIdeal> out;
  for (const FiniteIdeal& i : ideal_lattice(r))
    if (is_prime(r, i)) out.push_back(i);
  return out;
}

std::vector<FiniteIdeal> maximal_ideals(const FiniteRing& r) {
  std::vector<FiniteIdeal> proper;
  for (const FiniteIdeal& i : ideal_lattice(r))
    if (!i.contains(1)) proper.push_back(i);
  std::vector<FiniteIdeal> out;
  for (const FiniteIdeal& i : proper) {
    const bool dominated = std::any_of(proper.begin(), proper.end(), [&](const FiniteIdeal& j) {
      return j.elements != i.elements && i.elements.is_subset_of(j.elements);
    });
    if (!dominated) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

FiniteHom finite_hom_check(FiniteHom f) {
  const FiniteRing& a = f.source;
  const FiniteRing& b = f.target;
  auto fail = [&](const std::string& why) { throw Error(Errc::NotAHom, "fhom " + f.name + ": " + why); };
  if (static_cast<int>(f.images.size()) != a.order()) fail("expected " + std::to_string(a.order()) + " images");
  for (int y : f.images)
    if (y < 0 || y >= b.order()) fail("image " + std::to_string(y) + " out of range");
  if (f.images[0] != 0 || f.images[1] != 1) fail("not unital");
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y) {
      if (f.images[a.add(x, y)] != b.add(f.images[x], f.images[y])) fail("not additive");
      if (f.images[a.mul(x, y)] != b.mul(f.images[x], f.images[y])) fail("not multiplicative");
    }
  return f;
}

int FiniteAmalgam::label_of_host(int h) const {
  auto it = std::find(members.begin(), members.end(), h);
  return it == members.end() ? -1 : static_cast<int>(it - members.begin());
}

FiniteAmalgam build_amalgam(const FiniteHom& f_in, const FiniteIdeal& j, std::string name) {
  FiniteAmalgam w;
  w.name = std::move(name);
  w.f = finite_hom_check(f_in);
  w.j = j;
  const FiniteRing& a = w.f.source;
  const FiniteRing& b = w.f.target;
  if (static_cast<int>(j.elements.size()) != b.order() || !is_ideal(b, j.elements))
    throw Error(Errc::InvalidArgument, "J is not an ideal of " + b.name());
  w.host = FiniteRing::product(a, b, a.name() + "x" + b.name());
  const int n2 = b.order();

  std::set<int> member_set;
  for (int x = 0; x < a.order(); ++x)
    for (std::size_t y = j.elements.find_first(); y != ElementSet::npos; y = j.elements.find_next(y))
      member_set.insert(FiniteRing::pair_label(x, b.add(w.f.images[x], static_cast<int>(y)), n2));
  if (static_cast<long>(member_set.size()) != static_cast<long>(a.order()) * j.size())
    throw Error(Errc::InvalidArgument, "amalgam cardinality differs from |A|*|J|");
  w.members.assign(member_set.begin(), member_set.end());
  if (w.members.size() < 2 || w.members[0] != 0 || w.members[1] != 1)
    throw Error(Errc::InvalidArgument, "amalgam does not contain (1, 1)");

  const int m = static_cast<int>(w.members.size());
  std::vector<int> index(w.host.order(), -1);
  for (int k = 0; k < m; ++k) index[w.members[k]] = k;
  std::vector<std::uint16_t> add(static_cast<std::size_t>(m) * m), mul(add.size());
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const int s = index[w.host.add(w.members[x], w.members[y])];
      const int p = index[w.host.mul(w.members[x], w.members[y])];
      if (s < 0 || p < 0) throw Error(Errc::InvalidArgument, "amalgam is not closed under the product ring operations");
      add[x * m + y] = static_cast<std::uint16_t>(s);
      mul[x * m + y] = static_cast<std::uint16_t>(p);
    }
  w.ring = FiniteRing(m, std::move(add), std::move(mul), w.name);

  for (int x = 0; x < a.order(); ++x) w.iota_a.push_back(index[FiniteRing::pair_label(x, w.f.images[x], n2)]);
  for (int k = 0; k < m; ++k) w.p_a.push_back(FiniteRing::pair_of(w.members[k], n2).first);
  return w;
}

bool embedding_holds(const FiniteAmalgam& w) {
  const FiniteRing& a = w.f.source;
  std::set<int> seen;
  for (int x = 0; x < a.order(); ++x) {
    const int ix = w.iota_a[x];
    if (ix < 0 || !seen.insert(ix).second) return false;
    if (w.p_a[ix] != x) return false;
    for (int y = 0; y < a.order(); ++y) {
      if (w.ring.add(ix, w.iota_a[y]) != w.iota_a[a.add(x, y)]) return false;
      if (w.ring.mul(ix, w.iota_a[y]) != w.iota_a[a.mul(x, y)]) return false;
    }
  }
  return w.iota_a[1] == 1;
}

namespace {

std::vector<PrimeLabel> candidate_ideals(const FiniteAmalgam& w, const std::vector<FiniteIdeal>& primes_a,
                                         const std::vector<FiniteIdeal>& primes_b) {
  const int m = w.ring.order();
  const int n2 = w.f.target.order();
  std::vector<PrimeLabel> out;
  for (const FiniteIdeal& p : primes_a) {
    ElementSet s(m);
    for (int k = 0; k < m; ++k)
      if (p.contains(w.p_a[k])) s.set(k);
    out.push_back({PrimeLabel::Tag::FromA, p, {s}});
  }
  for (const FiniteIdeal& q : primes_b) {
    if (w.j.elements.is_subset_of(q.elements)) continue;
    ElementSet s(m);
    for (int k = 0; k < m; ++k)
      if (q.contains(FiniteRing::pair_of(w.members[k], n2).second)) s.set(k);
    out.push_back({PrimeLabel::Tag::FromB, q, {s}});
  }
  return out;
}

bool same_sets(const std::vector<FiniteIdeal>& found, const std::vector<PrimeLabel>& candidates) {
  std::set<ElementSet> a, b;
  for (const FiniteIdeal& i : found) a.insert(i.elements);
  for (const PrimeLabel& l : candidates) b.insert(l.image.elements);
  return a == b && candidates.size() == b.size();
}

}  // namespace

PrimeClassification classify_primes(const FiniteAmalgam& w) {
  if (static_cast<long>(w.f.source.order()) * w.f.target.order() > kSizeCap)
    throw Error(Errc::SizeCap, "|A|*|B| exceeds the size cap");
  PrimeClassification c;
  c.spectrum = enumerate_primes(w.ring);
  c.candidates = candidate_ideals(w, enumerate_primes(w.f.source), enumerate_primes(w.f.target));
  c.primes_match = same_sets(c.spectrum, c.candidates);
  const auto max_candidates = candidate_ideals(w, maximal_ideals(w.f.source), maximal_ideals(w.f.target));
  c.maximal_match = same_sets(maximal_ideals(w.ring), max_candidates);
  return c;
}

// ---------------------------------------------------------------------------

namespace {

bool extend(const FiniteRing& r1, const FiniteRing& r2, std::vector<int>& map, std::vector<bool>& used, int next) {
  const int n = r1.order();
  if (next == n) return true;
  for (int y = 0; y < n; ++y) {
    if (used[y]) continue;
    map[next] = y;
    bool ok = true;
    for (int u = 0; u <= next && ok; ++u)
      for (int v = 0; v <= u && ok; ++v) {
        const int s = r1.add(u, v), p = r1.mul(u, v);
        const bool fresh_pair = u == next || v == next;
        if (s <= next && (fresh_pair || s == next) && map[s] != r2.add(map[u], map[v])) ok = false;
        if (p <= next && (fresh_pair || p == next) && map[p] != r2.mul(map[u], map[v])) ok = false;
      }
    if (ok) {
      used[y] = true;
      if (extend(r1, r2, map, used, next + 1)) return true;
      used[y] = false;
    }
    map[next] = -1;
  }
  return false;
}

}  // namespace

std::vector<int> find_isomorphism(const FiniteRing& r1, const FiniteRing& r2) {
  if (r1.order() != r2.order()) return {};
  const int n = r1.order();
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  map[0] = 0;
  map[1] = 1;
  used[0] = used[1] = true;
  if (r1.add(0, 0) != 0) return {};
  if (!extend(r1, r2, map, used, 2)) return {};
  return map;
}

}  // namespace amalg
