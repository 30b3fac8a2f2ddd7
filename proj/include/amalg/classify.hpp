#pragma once

#include <string>
#include <utility>
#include <vector>

#include "amalg/module.hpp"
#include "amalg/ring.hpp"

namespace amalg {

struct ClassifyOptions {
  bool assume_equidimensional = false;
};

struct ClassifyReport {
  int dim = 0;
  int depth = 0;
  int codim = 0;
  int type = 0;
  std::vector<int> betti;
  bool is_cm = false;
  bool is_gorenstein = false;
  bool is_quasi_gorenstein = false;
  bool is_generalized_cm = false;
  int serre_level = 0;  // largest n <= 4 with (S_1)..(S_n) asserted
  bool equidimensional_assumed = false;
  std::vector<int> ext_dims;  // dim Ext^j(R, S) for j = 0..#vars, -1 when zero

  std::vector<std::pair<std::string, std::string>> lines() const;
  std::string to_string() const;
};

ClassifyReport classify(const PresentedRing& r, const ClassifyOptions& options = {});

// Every local cohomology module below the top dimension has finite length,
// read off from dim Ext^j(M, S) for j > #vars - dim M.
bool is_generalized_cm(const FPModule& m);

// Serre level from the Ext dimensions; exact for equidimensional rings.
int serre_level(const std::vector<int>& ext_dims, int codim, int max_level = 4);

}  // namespace amalg
