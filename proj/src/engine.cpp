#include <algorithm>
#include <set>
#include <tuple>

#include "amalg/detail/vec.hpp"

namespace amalg::detail {

namespace {
thread_local int g_degree_cap = 64;
}

int degree_cap() { return g_degree_cap; }

DegreeCapGuard::DegreeCapGuard(int cap) : saved_(g_degree_cap) { g_degree_cap = cap; }
DegreeCapGuard::~DegreeCapGuard() { g_degree_cap = saved_; }

void sort_vec(Vec& v, const ModOrder& ord) {
  const std::uint32_t p = ord.ring->modulus();
  std::sort(v.begin(), v.end(), [&](const MTerm& a, const MTerm& b) { return ord.compare(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (const MTerm& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = Zp::add(out.back().coeff, t.coeff, p);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(t);
    }
  }
  v = std::move(out);
}

Vec sub_mul(const Vec& f, Coeff c, const Monomial& m, const Vec& g, const ModOrder& ord) {
  const std::uint32_t p = ord.ring->modulus();
  const Coeff nc = Zp::neg(c, p);
  Vec out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  MTerm shifted{};
  bool have_shifted = false;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !have_shifted) {
      shifted = {mono_mul(g[j].mono, m), g[j].comp, Zp::mul(g[j].coeff, nc, p)};
      have_shifted = true;
    }
    int cmp;
    if (i == f.size()) cmp = -1;
    else if (j == g.size()) cmp = 1;
    else cmp = ord.compare(f[i], shifted);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(shifted);
      ++j;
      have_shifted = false;
    } else {
      Coeff v = Zp::add(f[i].coeff, shifted.coeff, p);
      if (v != 0) out.push_back({f[i].mono, f[i].comp, v});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  return out;
}

Vec add_vecs(const Vec& f, const Vec& g, const ModOrder& ord) {
  const std::uint32_t p = ord.ring->modulus();
  return sub_mul(f, p - 1, mono_one(), g, ord);
}

Vec scale_vec(const Vec& f, Coeff c, std::uint32_t p) {
  Vec out;
  if (c % p == 0) return out;
  out.reserve(f.size());
  for (const MTerm& t : f) out.push_back({t.mono, t.comp, Zp::mul(t.coeff, c, p)});
  return out;
}

Vec mul_poly(const Vec& f, const Polynomial& g, const ModOrder& ord) {
  Vec out;
  const std::uint32_t p = ord.ring->modulus();
  for (const Term& t : g.terms()) out = sub_mul(out, Zp::neg(t.coeff, p), t.mono, f, ord);
  return out;
}

void make_monic(Vec& v, std::uint32_t p) {
  if (v.empty() || v.front().coeff == 1) return;
  Coeff inv = Zp::inv(v.front().coeff, p);
  for (MTerm& t : v) t.coeff = Zp::mul(t.coeff, inv, p);
}

bool is_homogeneous(const Vec& v, const ModOrder& ord) {
  for (const MTerm& t : v)
    if (ord.degree(t) != ord.degree(v.front())) return false;
  return true;
}

int max_mono_degree(const Vec& v) {
  int d = -1;
  for (const MTerm& t : v) d = std::max(d, t.mono.degree);
  return d;
}

Vec from_poly(const Polynomial& f, int comp, const ModOrder& ord) {
  Vec v;
  v.reserve(f.size());
  for (const Term& t : f.terms()) v.push_back({t.mono, comp, t.coeff});
  if (!(ord.mono == MonomialOrder::grevlex())) sort_vec(v, ord);
  return v;
}

Polynomial to_poly(const Vec& v, const RingPtr& ring, int comp) {
  std::vector<Term> terms;
  for (const MTerm& t : v)
    if (t.comp == comp) terms.push_back({t.mono, t.coeff});
  return Polynomial::from_terms(ring, std::move(terms));
}

Vec from_column(const std::vector<Polynomial>& col, const ModOrder& ord, int comp_offset) {
  Vec v;
  for (std::size_t i = 0; i < col.size(); ++i)
    for (const Term& t : col[i].terms()) v.push_back({t.mono, static_cast<int>(i) + comp_offset, t.coeff});
  sort_vec(v, ord);
  return v;
}

std::vector<Polynomial> to_column(const Vec& v, const RingPtr& ring, int rank, int comp_offset) {
  std::vector<std::vector<Term>> parts(rank);
  for (const MTerm& t : v) {
    int c = t.comp - comp_offset;
    if (c >= 0 && c < rank) parts[c].push_back({t.mono, t.coeff});
  }
  std::vector<Polynomial> col;
  col.reserve(rank);
  for (auto& terms : parts) col.push_back(Polynomial::from_terms(ring, std::move(terms)));
  return col;
}

namespace {

const Vec* find_reducer(const MTerm& lead, const std::vector<Vec>& gb) {
  for (const Vec& g : gb)
    if (g.front().comp == lead.comp && divides(g.front().mono, lead.mono)) return &g;
  return nullptr;
}

void check_cap(int degree) {
  if (degree > g_degree_cap)
    throw Error(Errc::DegreeCapExceeded,
                "intermediate degree " + std::to_string(degree) + " exceeds cap " + std::to_string(g_degree_cap));
}

// Reduces with a basis whose elements are all monic.
Vec reduce_full(Vec f, const std::vector<Vec>& gb, const ModOrder& ord) {
  Vec rem;
  std::size_t start = 0;
  while (start < f.size()) {
    const MTerm lead = f[start];
    const Vec* g = find_reducer(lead, gb);
    if (g == nullptr) {
      rem.push_back(lead);
      ++start;
      continue;
    }
    Vec tail(f.begin() + static_cast<std::ptrdiff_t>(start), f.end());
    f = sub_mul(tail, lead.coeff, mono_div(lead.mono, g->front().mono), *g, ord);
    start = 0;
  }
  return rem;
}

struct Pair {
  int degree;
  int i, j;
  Monomial lcm;
};

struct PairKey {
  bool operator()(const Pair& a, const Pair& b) const {
    return std::tie(a.degree, a.i, a.j) < std::tie(b.degree, b.i, b.j);
  }
};

}  // namespace

Vec normal_form(Vec f, const std::vector<Vec>& gb, const ModOrder& ord) { return reduce_full(std::move(f), gb, ord); }

std::vector<Vec> groebner(std::vector<Vec> gens, const ModOrder& ord) {
  const std::uint32_t p = ord.ring->modulus();
  const PolyRing& r = *ord.ring;
  const bool rank_one = ord.rank() == 1;

  std::vector<Vec> basis;
  std::set<Pair, PairKey> queue;
  std::set<std::pair<int, int>> pending;

  auto add = [&](Vec h) {
    make_monic(h, p);
    const int k = static_cast<int>(basis.size());
    for (int i = 0; i < k; ++i) {
      if (basis[i].front().comp != h.front().comp) continue;
      Monomial l = mono_lcm(r, basis[i].front().mono, h.front().mono);
      queue.insert({l.degree + ord.shifts[h.front().comp], i, k, l});
      pending.insert({i, k});
    }
    basis.push_back(std::move(h));
  };

  // Inputs of low degree first so that early pairs are cheap.
  for (Vec& g : gens) sort_vec(g, ord);
  std::stable_sort(gens.begin(), gens.end(), [&](const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return !a.empty() && b.empty();
    return ord.degree(a.front()) < ord.degree(b.front());
  });
  for (Vec& g : gens) {
    if (g.empty()) continue;
    check_cap(max_mono_degree(g));
    make_monic(g, p);
    Vec h = reduce_full(std::move(g), basis, ord);
    if (!h.empty()) add(std::move(h));
  }

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});
    const Vec& gi = basis[pr.i];
    const Vec& gj = basis[pr.j];

    if (rank_one && coprime(gi.front().mono, gj.front().mono)) continue;

    bool chain = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      const MTerm& lk = basis[k].front();
      if (lk.comp != gi.front().comp || !divides(lk.mono, pr.lcm)) continue;
      auto key = [](int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
      if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chain = true;
    }
    if (chain) continue;

    check_cap(pr.lcm.degree);
    // both monic: the S-vector is mi*tail(gi) - mj*tail(gj)
    const Monomial mi = mono_div(pr.lcm, gi.front().mono);
    const Monomial mj = mono_div(pr.lcm, gj.front().mono);
    Vec s = sub_mul(Vec{}, p - 1, mi, Vec(gi.begin() + 1, gi.end()), ord);
    s = sub_mul(s, 1, mj, Vec(gj.begin() + 1, gj.end()), ord);
    Vec h = reduce_full(std::move(s), basis, ord);
    if (h.empty()) continue;
    check_cap(max_mono_degree(h));
    add(std::move(h));
  }

  // Minimal basis: drop elements whose leading term another one divides.
  std::vector<Vec> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || basis[j].front().comp != basis[i].front().comp) continue;
      if (!divides(basis[j].front().mono, basis[i].front().mono)) continue;
      // equal leading monomials: keep the first one
      redundant = !(basis[j].front().mono == basis[i].front().mono) || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Tail reduction against the other elements.
  std::vector<Vec> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Vec tail(minimal[i].begin() + 1, minimal[i].end());
    Vec red = reduce_full(std::move(tail), others, ord);
    Vec g{minimal[i].front()};
    g.insert(g.end(), red.begin(), red.end());
    reduced.push_back(std::move(g));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Vec& a, const Vec& b) { return ord.compare(a.front(), b.front()) > 0; });
  return reduced;
}

}  // namespace amalg::detail
