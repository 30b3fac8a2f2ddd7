#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amalg/detail/vec.hpp"
#include "amalg/harness.hpp"
#include "amalg/session.hpp"

namespace {

int exit_code(amalg::Errc code) {
  return code == amalg::Errc::ParseError || code == amalg::Errc::UnknownReference ? 2 : 1;
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Amalgamated algebras: presentations, classification and finite spectra"};
  std::vector<std::string> args;
  std::optional<std::uint32_t> prime;
  int degree_cap = 64;
  int max_degree = 8;
  std::vector<std::string> equidim;
  app.add_option("--prime", prime, "Field characteristic, overrides the input file");
  app.add_option("--degree-cap", degree_cap, "Abort Groebner computations beyond this degree")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", max_degree, "Hilbert-function cross-check bound")->check(CLI::NonNegativeNumber);
  app.add_option("--assume-equidim", equidim, "Treat the named ring as equidimensional")->allow_extra_args(false);
  app.add_option("args", args, "verify-paper | <input> <command...>")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << one_line(e.what()) << "\n";
    return 2;
  }

  amalg::SessionOptions options;
  options.prime = prime;
  options.max_degree = max_degree;
  options.assume_equidim = equidim;
  try {
    amalg::detail::DegreeCapGuard cap(degree_cap);
    amalg::Report report;
    if (args.size() == 1 && args[0] == "verify-paper") {
      report = amalg::verify_paper(prime.value_or(101), max_degree).to_report();
    } else {
      if (args.size() < 2) {
        std::cerr << "error: expected an input file and a command\n";
        return 2;
      }
      std::ifstream in(args[0]);
      if (!in) {
        std::cerr << "error: cannot read " << args[0] << "\n";
        return 2;
      }
      std::ostringstream text;
      text << in.rdbuf();
      std::string command;
      for (std::size_t i = 1; i < args.size(); ++i) command += (i > 1 ? " " : "") + args[i];
      const amalg::Session session = amalg::Session::parse(text.str(), options);
      report = session.run(command);
    }
    std::cout << report.to_string();
    return report.exit_status;
  } catch (const amalg::Error& e) {
    std::cerr << "error: " << one_line(e.what()) << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << one_line(e.what()) << "\n";
    return 1;
  }
}
