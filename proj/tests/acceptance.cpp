#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "amalg/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::optional<int> criterion;
  std::uint32_t prime = 101;
  bool verbose = false;
  app.add_option("--criterion", criterion, "Run a single criterion")->check(CLI::Range(1, 10));
  app.add_option("--prime", prime, "Field characteristic");
  app.add_flag("-v,--verbose", verbose, "Print the individual checks");
  CLI11_PARSE(app, argc, argv);

  const bool need_all = !criterion || *criterion == 10;
  const amalg::HarnessResult result = need_all ? amalg::verify_paper(prime) : amalg::run_harness_items(prime);
  bool ok = true;
  for (const amalg::HarnessItem& item : result.items) {
    if (criterion && item.id != *criterion) continue;
    ok = ok && item.pass;
    std::cout << "criterion " << item.id << ": " << (item.pass ? "PASS" : "FAIL") << "  " << item.title << "\n";
    if (verbose || !item.pass || criterion)
      for (const std::string& d : item.details) std::cout << "    " << d << "\n";
  }
  return ok ? 0 : 1;
}
