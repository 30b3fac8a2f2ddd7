#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amalg/session.hpp"

namespace amalg {

const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixtures();
std::string_view fixture_text(std::string_view file);
Session load_fixture(std::string_view file, std::uint32_t prime, int max_degree = 8);

struct HarnessItem {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
};

struct HarnessResult {
  std::uint32_t prime = 101;
  std::vector<HarnessItem> items;

  bool all_pass() const;
  const HarnessItem& item(int id) const;
  Report to_report() const;
};

// Items 1-9 at one prime.
HarnessResult run_harness_items(std::uint32_t prime, int max_degree = 8);
// Items 1-9 plus the determinism and characteristic item.
HarnessResult verify_paper(std::uint32_t prime, int max_degree = 8);

// dim_k of the socle of an artinian ring, by linear algebra on the standard
// monomial basis.
long long socle_dimension(const PresentedRing& r);

}  // namespace amalg
