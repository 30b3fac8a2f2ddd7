#pragma once

// Degreewise linear algebra over GF(p), independent of the Groebner engine.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "amalg/poly.hpp"

namespace oracle {

using Exps = std::array<std::uint16_t, amalg::kMaxVars>;
using Row = std::vector<std::uint32_t>;

inline std::uint32_t pmul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t pinv(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

inline void enumerate(const amalg::PolyRing& r, int var, int left, Exps& cur, std::vector<Exps>& out) {
  if (var == r.nvars()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e * r.weight(var) <= left; ++e) {
    cur[var] = static_cast<std::uint16_t>(e);
    enumerate(r, var + 1, left - e * r.weight(var), cur, out);
  }
  cur[var] = 0;
}

// Monomials of weighted degree d, indexed.
struct Basis {
  std::vector<Exps> monos;
  std::map<Exps, int> index;
};

inline Basis basis(const amalg::PolyRing& r, int d) {
  Basis b;
  if (d < 0) return b;
  Exps cur{};
  enumerate(r, 0, d, cur, b.monos);
  for (int i = 0; i < static_cast<int>(b.monos.size()); ++i) b.index[b.monos[i]] = i;
  return b;
}

// Row echelon form with pivots normalized to 1 and cleared above and below.
struct Echelon {
  std::uint32_t p;
  std::vector<Row> rows;
  std::vector<int> pivots;

  Row reduce(Row v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::uint32_t c = v[pivots[i]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = (v[k] + p - pmul(c, rows[i][k], p)) % p;
    }
    return v;
  }
  bool add(Row v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k]) {
        piv = static_cast<int>(k);
        break;
      }
    if (piv < 0) return false;
    const std::uint32_t inv = pinv(v[piv], p);
    for (auto& x : v) x = pmul(x, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::uint32_t c = rows[i][piv];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) rows[i][k] = (rows[i][k] + p - pmul(c, v[k], p)) % p;
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }
  int rank() const { return static_cast<int>(rows.size()); }
};

inline Row to_row(const amalg::Polynomial& f, const Basis& b) {
  Row v(b.monos.size(), 0);
  for (const amalg::Term& t : f.terms()) v[b.index.at(t.mono.exp)] = t.coeff;
  return v;
}

inline amalg::Polynomial shifted(const amalg::Polynomial& g, const Exps& e) {
  amalg::Monomial m = amalg::mono_one();
  m.exp = e;
  m.degree = amalg::recompute_degree(*g.ring(), m);
  return g.times_monomial(m);
}

// The degree-d piece of the ideal generated by `gens`.
inline Echelon piece(const amalg::RingPtr& r, const std::vector<amalg::Polynomial>& gens, int d) {
  const Basis b = basis(*r, d);
  Echelon e{r->modulus(), {}, {}};
  for (const amalg::Polynomial& g : gens) {
    if (g.is_zero()) continue;
    for (const Exps& m : basis(*r, d - g.degree()).monos) e.add(to_row(shifted(g, m), b));
  }
  return e;
}

inline int piece_dim(const amalg::RingPtr& r, const std::vector<amalg::Polynomial>& gens, int d) {
  return piece(r, gens, d).rank();
}

inline bool in_piece(const Echelon& e, const amalg::Polynomial& f, const Basis& b) {
  for (std::uint32_t x : e.reduce(to_row(f, b)))
    if (x) return false;
  return true;
}

// dim_k (I : J)_d = dim S_d - rank of S_d -> prod_g S_{d+deg g} / I.
inline int colon_dim(const amalg::RingPtr& r, const std::vector<amalg::Polynomial>& i,
                     const std::vector<amalg::Polynomial>& j, int d) {
  const Basis src = basis(*r, d);
  std::vector<Basis> tb;
  std::vector<Echelon> ti;
  for (const amalg::Polynomial& g : j) {
    tb.push_back(basis(*r, d + g.degree()));
    ti.push_back(piece(r, i, d + g.degree()));
  }
  Echelon image{r->modulus(), {}, {}};
  for (const Exps& m : src.monos) {
    Row v;
    for (std::size_t k = 0; k < j.size(); ++k) {
      const Row part = ti[k].reduce(to_row(shifted(j[k], m), tb[k]));
      v.insert(v.end(), part.begin(), part.end());
    }
    image.add(v);
  }
  return static_cast<int>(src.monos.size()) - image.rank();
}

}  // namespace oracle
