#include "amalg/classify.hpp"

#include <sstream>

namespace amalg {

int serre_level(const std::vector<int>& ext_dims, int codim, int max_level) {
  const int n = static_cast<int>(ext_dims.size()) - 1;
  int level = 0;
  for (int s = 1; s <= max_level; ++s) {
    bool holds = true;
    for (int j = codim + 1; j <= n && holds; ++j) holds = ext_dims[j] < 0 || ext_dims[j] <= n - j - s;
    if (!holds) break;
    level = s;
  }
  return level;
}

bool is_generalized_cm(const FPModule& m) {
  const int n = m.ring()->nvars();
  const int d = krull_dim(m);
  if (d < 0) return true;
  const FreeResolution res = free_resolution(m);
  for (int j = n - d + 1; j <= n; ++j)
    if (krull_dim(ext_module(res, j)) > 0) return false;
  return true;
}

ClassifyReport classify(const PresentedRing& r, const ClassifyOptions& options) {
  ClassifyReport rep;
  const int n = r.nvars();
  const FreeResolution res = free_resolution(FPModule::cyclic(r));
  rep.dim = krull_dim(r);
  rep.depth = depth_ab(res);
  rep.codim = n - rep.dim;
  rep.betti = res.betti();
  rep.type = rep.betti.back();
  rep.is_cm = rep.dim == rep.depth;
  rep.is_gorenstein = rep.is_cm && rep.type == 1;
  rep.equidimensional_assumed = options.assume_equidimensional;

  rep.ext_dims.assign(n + 1, -1);
  FPModule omega;
  for (int j = 0; j <= n; ++j) {
    if (j > res.length()) break;
    FPModule e = ext_module(res, j);
    rep.ext_dims[j] = krull_dim(e);
    if (j == rep.codim) omega = e.twisted(-r.poly_ring()->weight_sum());
  }

  rep.is_generalized_cm = true;
  for (int j = rep.codim + 1; j <= n; ++j)
    if (rep.ext_dims[j] > 0) rep.is_generalized_cm = false;
  rep.serre_level = serre_level(rep.ext_dims, rep.codim);

  if (omega.num_generators() == 1) rep.is_quasi_gorenstein = same_ideal(annihilator(omega), r.defining_ideal());
  return rep;
}

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<std::pair<std::string, std::string>> ClassifyReport::lines() const {
  std::string serre = "S" + std::to_string(serre_level);
  if (!equidimensional_assumed && !is_cm) serre += "?";
  std::string b;
  for (std::size_t i = 0; i < betti.size(); ++i) b += (i ? ";" : "") + std::to_string(betti[i]);
  return {{"dim", std::to_string(dim)},
          {"depth", std::to_string(depth)},
          {"codim", std::to_string(codim)},
          {"cm", flag(is_cm)},
          {"gorenstein", flag(is_gorenstein)},
          {"quasi_gorenstein", flag(is_quasi_gorenstein)},
          {"generalized_cm", flag(is_generalized_cm)},
          {"serre", serre},
          {"type", std::to_string(type)},
          {"betti", b}};
}

std::string ClassifyReport::to_string() const {
  std::ostringstream out;
  for (const auto& [k, v] : lines()) out << k << " = " << v << "\n";
  return out.str();
}

}  // namespace amalg
