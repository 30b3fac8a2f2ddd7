#include "amalg/module.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "amalg/detail/vec.hpp"

namespace amalg {

using detail::ModOrder;
using detail::MTerm;
using detail::Vec;

namespace {

ModOrder module_order(const RingPtr& ring, std::vector<int> degrees) {
  return ModOrder{ring, MonomialOrder::grevlex(), std::move(degrees)};
}

Column zero_column(const RingPtr& ring, int rank) { return Column(rank, Polynomial(ring)); }

bool column_is_zero(const Column& c) {
  return std::all_of(c.begin(), c.end(), [](const Polynomial& f) { return f.is_zero(); });
}

// Degree of a homogeneous column; throws NotHomogeneous otherwise. Zero
// columns report INT_MIN.
int column_degree(const Column& col, const std::vector<int>& degrees) {
  int deg = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < col.size(); ++i) {
    const Polynomial& f = col[i];
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw Error(Errc::NotHomogeneous, "relation entry " + f.to_string() + " is not homogeneous");
    const int d = f.degree() + degrees[i];
    if (deg == std::numeric_limits<int>::min()) deg = d;
    else if (deg != d) throw Error(Errc::NotHomogeneous, "relation column mixes degrees " + std::to_string(deg) + " and " + std::to_string(d));
  }
  return deg;
}

// Row echelon form over GF(p) keyed by leading (monomial, component).
class Echelon {
 public:
  explicit Echelon(const ModOrder& ord) : ord_(ord) {}

  bool insert(Vec v) {
    const std::uint32_t p = ord_.ring->modulus();
    while (!v.empty()) {
      const MTerm& lead = v.front();
      auto it = std::find_if(rows_.begin(), rows_.end(), [&](const Vec& r) {
        return r.front().comp == lead.comp && r.front().mono == lead.mono;
      });
      if (it == rows_.end()) {
        detail::make_monic(v, p);
        rows_.push_back(std::move(v));
        return true;
      }
      v = detail::sub_mul(v, lead.coeff, mono_one(), *it, ord_);
    }
    return false;
  }

 private:
  const ModOrder& ord_;
  std::vector<Vec> rows_;
};

Column sub_scaled(const Column& a, const Polynomial& f, const Column& b) {
  Column out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!b[i].is_zero()) out[i] = out[i] - f * b[i];
  return out;
}

}  // namespace

bool GradedMap::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), column_is_zero);
}

GradedMap GradedMap::dual() const {
  GradedMap d{ring, {}, {}, {}};
  for (int s : source_degrees) d.target_degrees.push_back(-s);
  for (int t : target_degrees) d.source_degrees.push_back(-t);
  for (int i = 0; i < rows(); ++i) {
    Column col;
    col.reserve(cols());
    for (int j = 0; j < cols(); ++j) col.push_back(entry(i, j));
    d.columns.push_back(std::move(col));
  }
  return d;
}

GradedMap compose(const GradedMap& outer, const GradedMap& inner) {
  if (outer.cols() != inner.rows()) throw Error(Errc::InvalidArgument, "compose: size mismatch");
  GradedMap out{inner.ring, outer.target_degrees, inner.source_degrees, {}};
  for (int j = 0; j < inner.cols(); ++j) {
    Column col = zero_column(inner.ring, outer.rows());
    for (int k = 0; k < inner.rows(); ++k) {
      const Polynomial& c = inner.entry(k, j);
      if (c.is_zero()) continue;
      for (int i = 0; i < outer.rows(); ++i)
        if (!outer.entry(i, k).is_zero()) col[i] = col[i] + c * outer.entry(i, k);
    }
    out.columns.push_back(std::move(col));
  }
  return out;
}

// ---------------------------------------------------------------------------

FPModule::FPModule(RingPtr ring, std::vector<int> degrees, std::vector<Column> relations)
    : ring_(std::move(ring)), degrees_(std::move(degrees)) {
  for (Column& col : relations) {
    if (col.size() != degrees_.size()) throw Error(Errc::InvalidArgument, "relation column has the wrong length");
    for (Polynomial& f : col) {
      if (!f.ring()) f = Polynomial(ring_);
      check_same_ring(*f.ring(), *ring_);
    }
    const int d = column_degree(col, degrees_);
    if (d == std::numeric_limits<int>::min()) continue;
    relations_.push_back(std::move(col));
    relation_degrees_.push_back(d);
  }
}

FPModule FPModule::free(RingPtr ring, std::vector<int> degrees) { return FPModule(std::move(ring), std::move(degrees), {}); }

FPModule FPModule::cyclic(const PresentedRing& r) { return cyclic(r.poly_ring(), r.defining_ideal(), 0); }

FPModule FPModule::cyclic(const RingPtr& ring, const IdealBasis& ideal, int degree) {
  std::vector<Column> rels;
  for (const Polynomial& g : ideal.generators) rels.push_back({g});
  return FPModule(ring, {degree}, std::move(rels));
}

FPModule FPModule::ideal_module(const IdealHandle& j) {
  const RingPtr& ring = j.ambient.poly_ring();
  std::vector<Column> gens, rels;
  std::vector<int> gdeg, rdeg;
  for (const Polynomial& g : j.generators) {
    gens.push_back({g});
    gdeg.push_back(g.degree());
  }
  for (const Polynomial& g : j.ambient.ideal().elements()) {
    rels.push_back({g});
    rdeg.push_back(g.degree());
  }
  return subquotient(ring, {0}, gens, gdeg, rels, rdeg);
}

FPModule FPModule::twisted(int a) const {
  FPModule m = *this;
  for (int& d : m.degrees_) d -= a;
  for (int& d : m.relation_degrees_) d -= a;
  return m;
}

FPModule FPModule::direct_sum(const FPModule& other) const {
  check_same_ring(*ring_, *other.ring_);
  std::vector<int> degrees = degrees_;
  degrees.insert(degrees.end(), other.degrees_.begin(), other.degrees_.end());
  std::vector<Column> rels;
  for (const Column& c : relations_) {
    Column col = c;
    col.resize(degrees.size(), Polynomial(ring_));
    rels.push_back(std::move(col));
  }
  for (const Column& c : other.relations_) {
    Column col = zero_column(ring_, num_generators());
    col.insert(col.end(), c.begin(), c.end());
    rels.push_back(std::move(col));
  }
  return FPModule(ring_, std::move(degrees), std::move(rels));
}

// ---------------------------------------------------------------------------

std::vector<int> minimal_generator_indices(const RingPtr& ring, const std::vector<int>& degrees,
                                           const std::vector<Column>& columns, const std::vector<int>& column_degrees) {
  const ModOrder ord = module_order(ring, degrees);
  std::vector<int> order(columns.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return column_degrees[a] < column_degrees[b]; });

  std::vector<int> chosen;
  std::vector<Vec> kept;
  std::vector<Vec> gb;
  bool stale = false;
  std::size_t pos = 0;
  while (pos < order.size()) {
    const int deg = column_degrees[order[pos]];
    if (stale) {
      gb = detail::groebner(kept, ord);
      stale = false;
    }
    Echelon echelon(ord);
    for (; pos < order.size() && column_degrees[order[pos]] == deg; ++pos) {
      Vec v = detail::from_column(columns[order[pos]], ord);
      if (v.empty()) continue;
      if (echelon.insert(detail::normal_form(v, gb, ord))) {
        chosen.push_back(order[pos]);
        kept.push_back(std::move(v));
        stale = true;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

GradedMap kernel(const GradedMap& map) {
  const int s = map.rows();
  const int r = map.cols();
  std::vector<int> shifts = map.target_degrees;
  shifts.insert(shifts.end(), map.source_degrees.begin(), map.source_degrees.end());
  const ModOrder ord = module_order(map.ring, shifts);

  std::vector<Vec> gens;
  for (int j = 0; j < r; ++j) {
    Vec v = detail::from_column(map.columns[j], ord);
    v.push_back({mono_one(), s + j, 1});
    detail::sort_vec(v, ord);
    gens.push_back(std::move(v));
  }
  std::vector<Column> syz;
  std::vector<int> syz_degrees;
  for (const Vec& g : detail::groebner(std::move(gens), ord)) {
    if (g.front().comp < s) continue;
    syz.push_back(detail::to_column(g, map.ring, r, s));
    syz_degrees.push_back(ord.degree(g.front()));
  }
  GradedMap out{map.ring, map.source_degrees, {}, {}};
  for (int idx : minimal_generator_indices(map.ring, map.source_degrees, syz, syz_degrees)) {
    out.columns.push_back(std::move(syz[idx]));
    out.source_degrees.push_back(syz_degrees[idx]);
  }
  return out;
}

FPModule prune(const FPModule& m) {
  const RingPtr& ring = m.ring();
  std::vector<int> degrees = m.degrees();
  std::vector<Column> cols = m.relations();
  std::vector<int> col_degrees = m.relation_degrees();
  const std::uint32_t p = ring->modulus();

  for (;;) {
    int row = -1, col = -1;
    for (std::size_t j = 0; j < cols.size() && row < 0; ++j)
      for (std::size_t i = 0; i < degrees.size(); ++i)
        if (!cols[j][i].is_zero() && cols[j][i].is_constant()) {
          row = static_cast<int>(i);
          col = static_cast<int>(j);
          break;
        }
    if (row < 0) break;
    const Coeff u_inv = Zp::inv(cols[col][row].constant_coeff(), p);
    const Column pivot = cols[col];
    std::vector<Column> next;
    std::vector<int> next_degrees;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (static_cast<int>(j) == col) continue;
      Column c = cols[j];
      if (!c[row].is_zero()) c = sub_scaled(c, c[row].scaled(u_inv), pivot);
      c.erase(c.begin() + row);
      if (column_is_zero(c)) continue;
      next.push_back(std::move(c));
      next_degrees.push_back(col_degrees[j]);
    }
    degrees.erase(degrees.begin() + row);
    cols = std::move(next);
    col_degrees = std::move(next_degrees);
  }

  std::vector<Column> kept;
  for (int idx : minimal_generator_indices(ring, degrees, cols, col_degrees)) kept.push_back(std::move(cols[idx]));
  return FPModule(ring, std::move(degrees), std::move(kept));
}

FPModule subquotient(const RingPtr& ring, const std::vector<int>& degrees, const std::vector<Column>& gens,
                     const std::vector<int>& gen_degrees, const std::vector<Column>& rels,
                     const std::vector<int>& rel_degrees) {
  GradedMap map{ring, degrees, gen_degrees, gens};
  map.columns.insert(map.columns.end(), rels.begin(), rels.end());
  map.source_degrees.insert(map.source_degrees.end(), rel_degrees.begin(), rel_degrees.end());
  const GradedMap k = kernel(map);
  std::vector<Column> projected;
  for (const Column& c : k.columns) projected.emplace_back(c.begin(), c.begin() + static_cast<long>(gens.size()));
  return prune(FPModule(ring, gen_degrees, std::move(projected)));
}

// ---------------------------------------------------------------------------

std::vector<int> FreeResolution::betti() const {
  std::vector<int> b;
  for (const auto& t : twists) b.push_back(static_cast<int>(t.size()));
  return b;
}

bool FreeResolution::is_minimal() const {
  for (const GradedMap& m : maps)
    for (const Column& c : m.columns)
      for (const Polynomial& f : c)
        if (!f.is_zero() && f.is_constant()) return false;
  return true;
}

bool FreeResolution::is_complex() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!compose(maps[i], maps[i + 1]).is_zero()) return false;
  return true;
}

FreeResolution free_resolution(const FPModule& m) {
  FreeResolution res{m.ring(), {}, {}};
  const FPModule p = prune(m);
  if (p.num_generators() == 0) return res;
  res.twists.push_back(p.degrees());
  GradedMap current = p.presentation();
  while (current.cols() > 0) {
    if (static_cast<int>(res.maps.size()) > m.ring()->nvars())
      throw Error(Errc::InvalidArgument, "resolution exceeds the number of variables");
    res.twists.push_back(current.source_degrees);
    res.maps.push_back(current);
    current = kernel(current);
  }
  return res;
}

HilbertSeries hilbert_series(const FreeResolution& res) {
  LaurentPoly n;
  for (std::size_t i = 0; i < res.twists.size(); ++i)
    for (int d : res.twists[i]) n = n + LaurentPoly::monomial(d, i % 2 == 0 ? 1 : -1);
  return HilbertSeries(n, res.ring->weights());
}

HilbertSeries hilbert_series(const FPModule& m) { return hilbert_series(free_resolution(m)); }

namespace {

std::vector<std::vector<Monomial>> leading_by_component(const FPModule& m) {
  const ModOrder ord = module_order(m.ring(), m.degrees());
  std::vector<Vec> gens;
  for (const Column& c : m.relations()) gens.push_back(detail::from_column(c, ord));
  std::vector<std::vector<Monomial>> leads(m.num_generators());
  for (const Vec& g : detail::groebner(std::move(gens), ord)) leads[g.front().comp].push_back(g.front().mono);
  return leads;
}

}  // namespace

HilbertSeries hilbert_series_from_gb(const FPModule& m) {
  const auto leads = leading_by_component(m);
  LaurentPoly n;
  for (int i = 0; i < m.num_generators(); ++i)
    n = n + monomial_quotient_numerator(*m.ring(), leads[i]).shifted(m.degrees()[i]);
  return HilbertSeries(n, m.ring()->weights());
}

long long hilbert_function(const FPModule& m, int d) {
  const auto leads = leading_by_component(m);
  long long count = 0;
  for (int i = 0; i < m.num_generators(); ++i)
    for (const Monomial& mono : monomials_of_degree(*m.ring(), d - m.degrees()[i]))
      if (std::none_of(leads[i].begin(), leads[i].end(), [&](const Monomial& l) { return divides(l, mono); })) ++count;
  return count;
}

// ---------------------------------------------------------------------------

namespace {

// Largest set of variables containing the support of no leading monomial.
int max_independent(const std::vector<std::uint32_t>& supports, int nvars, int var, std::uint32_t chosen, int size,
                    int best) {
  if (size + (nvars - var) <= best) return best;
  if (var == nvars) return size;
  const std::uint32_t with = chosen | (1u << var);
  const bool ok = std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & with) == s; });
  if (ok) best = std::max(best, max_independent(supports, nvars, var + 1, with, size + 1, best));
  return std::max(best, max_independent(supports, nvars, var + 1, chosen, size, best));
}

}  // namespace

int krull_dim(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  std::vector<std::uint32_t> supports;
  for (const Monomial& m : gb.leading_monomials()) {
    std::uint32_t s = 0;
    for (int v = 0; v < gb.ring()->nvars(); ++v)
      if (m.exp[v] > 0) s |= 1u << v;
    supports.push_back(s);
  }
  return max_independent(supports, gb.ring()->nvars(), 0, 0, 0, 0);
}

int krull_dim(const PresentedRing& r) { return krull_dim(r.ideal()); }

int krull_dim(const FPModule& m) { return krull_dim(buchberger(annihilator(m))); }

bool is_zero_module(const FPModule& m) { return prune(m).num_generators() == 0; }

int depth_ab(const FreeResolution& res) {
  if (res.length() < 0) throw Error(Errc::ZeroModule, "depth of the zero module");
  return res.ring->nvars() - res.length();
}

int depth_ab(const FPModule& m) { return depth_ab(free_resolution(m)); }

// ---------------------------------------------------------------------------

FPModule ext_module(const FreeResolution& res, int j) {
  if (j < 0) throw Error(Errc::InvalidArgument, "negative Ext index");
  const int n = res.length();
  if (j > n) return FPModule(res.ring, {}, {});
  std::vector<int> dual_degrees;
  for (int d : res.twists[j]) dual_degrees.push_back(-d);

  std::vector<Column> cycles;
  std::vector<int> cycle_degrees;
  if (j < n) {
    const GradedMap k = kernel(res.maps[j].dual());
    cycles = k.columns;
    cycle_degrees = k.source_degrees;
  } else {
    for (std::size_t i = 0; i < dual_degrees.size(); ++i) {
      Column c = zero_column(res.ring, static_cast<int>(dual_degrees.size()));
      c[i] = Polynomial::constant(res.ring, 1);
      cycles.push_back(std::move(c));
    }
    cycle_degrees = dual_degrees;
  }

  std::vector<Column> boundaries;
  std::vector<int> boundary_degrees;
  if (j >= 1) {
    const GradedMap d = res.maps[j - 1].dual();
    boundaries = d.columns;
    boundary_degrees = d.source_degrees;
  }
  return subquotient(res.ring, dual_degrees, cycles, cycle_degrees, boundaries, boundary_degrees);
}

FPModule ext_module(const FPModule& m, int j) { return ext_module(free_resolution(m), j); }

FPModule canonical_module(const PresentedRing& r) {
  const int codim = r.nvars() - krull_dim(r);
  return ext_module(FPModule::cyclic(r), codim).twisted(-r.poly_ring()->weight_sum());
}

FPModule hom_modules(const FPModule& m_in, const FPModule& n_in) {
  check_same_ring(*m_in.ring(), *n_in.ring());
  const FPModule m = prune(m_in);
  const FPModule n = prune(n_in);
  const RingPtr& ring = m.ring();
  const int s = m.num_generators(), r = m.num_relations();
  const int q = n.num_generators(), u = n.num_relations();
  const auto& d = m.degrees();
  const auto& e = m.relation_degrees();
  const auto& g = n.degrees();
  const auto& h = n.relation_degrees();

  // Hom(F1, G0) with basis (c, k) -> c*q + k.
  std::vector<int> f1_degrees;
  for (int c = 0; c < r; ++c)
    for (int k = 0; k < q; ++k) f1_degrees.push_back(g[k] - e[c]);
  // Hom(F0, G0) with basis (i, k) -> i*q + k.
  std::vector<int> f0_degrees;
  for (int i = 0; i < s; ++i)
    for (int k = 0; k < q; ++k) f0_degrees.push_back(g[k] - d[i]);

  // Precompose with the presentation of M, modulo the relations of N.
  GradedMap phi{ring, f1_degrees, {}, {}};
  for (int i = 0; i < s; ++i)
    for (int k = 0; k < q; ++k) {
      Column col = zero_column(ring, r * q);
      for (int c = 0; c < r; ++c) col[c * q + k] = m.relations()[c][i];
      phi.columns.push_back(std::move(col));
      phi.source_degrees.push_back(g[k] - d[i]);
    }
  for (int c = 0; c < r; ++c)
    for (int l = 0; l < u; ++l) {
      Column col = zero_column(ring, r * q);
      for (int k = 0; k < q; ++k) col[c * q + k] = n.relations()[l][k];
      phi.columns.push_back(std::move(col));
      phi.source_degrees.push_back(h[l] - e[c]);
    }
  const GradedMap k = kernel(phi);
  std::vector<Column> cycles;
  std::vector<int> cycle_degrees;
  for (int c = 0; c < k.cols(); ++c) {
    Column col(k.columns[c].begin(), k.columns[c].begin() + s * q);
    if (column_is_zero(col)) continue;
    cycles.push_back(std::move(col));
    cycle_degrees.push_back(k.source_degrees[c]);
  }

  std::vector<Column> boundaries;
  std::vector<int> boundary_degrees;
  for (int i = 0; i < s; ++i)
    for (int l = 0; l < u; ++l) {
      Column col = zero_column(ring, s * q);
      for (int kk = 0; kk < q; ++kk) col[i * q + kk] = n.relations()[l][kk];
      boundaries.push_back(std::move(col));
      boundary_degrees.push_back(h[l] - d[i]);
    }
  return subquotient(ring, f0_degrees, cycles, cycle_degrees, boundaries, boundary_degrees);
}

IdealBasis annihilator(const FPModule& m_in) {
  const FPModule m = prune(m_in);
  const RingPtr& ring = m.ring();
  if (m.num_generators() == 0) return IdealBasis::unit(ring);
  IdealBasis acc;
  for (int i = 0; i < m.num_generators(); ++i) {
    Column e = zero_column(ring, m.num_generators());
    e[i] = Polynomial::constant(ring, 1);
    GradedMap map{ring, m.degrees(), {m.degrees()[i]}, {e}};
    map.columns.insert(map.columns.end(), m.relations().begin(), m.relations().end());
    map.source_degrees.insert(map.source_degrees.end(), m.relation_degrees().begin(), m.relation_degrees().end());
    std::vector<Polynomial> gens;
    for (const Column& c : kernel(map).columns)
      if (!c[0].is_zero()) gens.push_back(c[0]);
    IdealBasis part = IdealBasis::of(ring, std::move(gens));
    acc = i == 0 ? part : intersect(acc, part);
  }
  return acc;
}

}  // namespace amalg
