#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amalg/amalgam.hpp"
#include "amalg/classify.hpp"
#include "amalg/finite.hpp"
#include "amalg/ring.hpp"

namespace amalg {

struct SessionOptions {
  std::optional<std::uint32_t> prime;  // overrides `field p=...`
  int max_degree = 8;                  // Hilbert-function cross-check bound
  std::vector<std::string> assume_equidim;
};

// `key = value` lines followed by free-text notes.
struct Report {
  std::vector<std::pair<std::string, std::string>> lines;
  std::vector<std::string> notes;
  int exit_status = 0;

  void add(std::string key, std::string value) { lines.emplace_back(std::move(key), std::move(value)); }
  void note(std::string text) { notes.push_back(std::move(text)); }
  std::string value(std::string_view key) const;
  std::string to_string() const;
};

class Session {
 public:
  // Throws Error with a "line N: " prefix; ParseError and UnknownReference
  // for grammar problems, the computation error code otherwise.
  static Session parse(std::string_view text, const SessionOptions& options = {});

  Report run(std::string_view command) const;

  std::uint32_t prime() const { return prime_; }
  // Declarations other than `field`.
  std::size_t declaration_count() const { return kinds_.size(); }
  bool has(const std::string& name) const { return kinds_.count(name) > 0; }

  const PresentedRing& ring(const std::string& name) const;
  const RingHom& hom(const std::string& name) const;
  const IdealHandle& ideal(const std::string& name) const;
  const AmalgamSpec& amalgam_spec(const std::string& name) const;
  const AmalgamPresentation& presentation(const std::string& name) const;
  const FiniteRing& finite_ring(const std::string& name) const;
  const FiniteIdeal& finite_ideal(const std::string& name) const;
  const FiniteAmalgam& finite_amalgam(const std::string& name) const;
  bool equidimensional(const std::string& name) const { return equidim_.count(name) > 0; }
  int max_degree() const { return options_.max_degree; }

  Report present(const std::string& name) const;
  Report classify_report(const std::string& name) const;
  Report canonical(const std::string& name) const;
  Report hom_into(const std::string& name) const;
  Report finite_check(const std::string& name) const;

 private:
  enum class Kind { Ring, Hom, Ideal, Amalgam, FiniteRing, FiniteIdeal, FiniteHom, FiniteAmalgam, Directive };

  void declare(const std::string& name, Kind kind);
  const std::string& require(const std::string& name, Kind kind) const;
  void parse_line(std::string_view line);

  SessionOptions options_;
  std::uint32_t prime_ = 101;
  std::map<std::string, Kind> kinds_;
  std::map<std::string, PresentedRing> rings_;
  std::map<std::string, RingHom> homs_;
  std::map<std::string, IdealHandle> ideals_;
  std::map<std::string, AmalgamSpec> amalgams_;
  mutable std::map<std::string, AmalgamPresentation> presentations_;
  std::map<std::string, FiniteRing> frings_;
  std::map<std::string, int> fproduct_right_;  // second-factor order of product rings
  std::map<std::string, FiniteIdeal> fideals_;
  std::map<std::string, std::string> fideal_ring_;
  std::map<std::string, FiniteHom> fhoms_;
  std::map<std::string, FiniteAmalgam> famalgams_;
  std::set<std::string> equidim_;
};

// Reduced generators as `g1, g2, ...`, or `0`.
std::string ideal_to_string(const GroebnerBasis& gb);

}  // namespace amalg
