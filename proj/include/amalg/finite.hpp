#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "amalg/error.hpp"

namespace amalg {

// Commutative unital ring on labels 0..n-1 with 0 the zero and 1 the one.
class FiniteRing {
 public:
  FiniteRing() = default;
  // Throws NotARing when the tables violate an axiom (exhaustive for n <= 64,
  // sampled above).
  FiniteRing(int order, std::vector<std::uint16_t> add, std::vector<std::uint16_t> mul, std::string name = "");

  static FiniteRing zmod(int n, std::string name = "");
  // Labels (a, b) -> a*|R2| + b, except that labels 1 and |R2|+1 trade places
  // so that 1 = (1, 1).
  static FiniteRing product(const FiniteRing& r1, const FiniteRing& r2, std::string name = "");

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  int add(int a, int b) const { return add_[a * n_ + b]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int neg(int a) const;

  // Label of (a, b) in a product built by `product`.
  static int pair_label(int a, int b, int n2);
  static std::pair<int, int> pair_of(int label, int n2);

 private:
  int n_ = 0;
  std::vector<std::uint16_t> add_, mul_;
  std::string name_;
};

using ElementSet = boost::dynamic_bitset<>;

struct FiniteIdeal {
  ElementSet elements;

  int size() const { return static_cast<int>(elements.count()); }
  bool contains(int a) const { return elements.test(a); }
  friend bool operator==(const FiniteIdeal& a, const FiniteIdeal& b) { return a.elements == b.elements; }
  friend bool operator<(const FiniteIdeal& a, const FiniteIdeal& b) { return a.elements < b.elements; }
};

bool is_ideal(const FiniteRing& r, const ElementSet& s);
FiniteIdeal ideal_generated(const FiniteRing& r, const std::vector<int>& gens);
// Cosets relabelled with 0 and 1 first; throws InvalidArgument for I = R.
FiniteRing quotient(const FiniteRing& r, const FiniteIdeal& i, std::string name = "");

// Every ideal, as the join closure of the principal ideals. Throws SizeCap
// above 4096 elements.
std::vector<FiniteIdeal> ideal_lattice(const FiniteRing& r);
bool is_prime(const FiniteRing& r, const FiniteIdeal& p);
std::vector<FiniteIdeal> enumerate_primes(const FiniteRing& r);
std::vector<FiniteIdeal> maximal_ideals(const FiniteRing& r);

struct FiniteHom {
  std::string name;
  FiniteRing source;
  FiniteRing target;
  std::vector<int> images;  // one per source label
};

// Throws NotAHom unless f is a unital ring homomorphism.
FiniteHom finite_hom_check(FiniteHom f);

struct FiniteAmalgam {
  std::string name;
  FiniteHom f;
  FiniteIdeal j;
  FiniteRing host;              // A x B
  std::vector<int> members;     // host labels of the amalgam, 0 and 1 first
  FiniteRing ring;              // the amalgam with its own labels
  std::vector<int> iota_a;      // a -> amalgam label of (a, f(a))
  std::vector<int> p_a;         // amalgam label -> a

  int label_of_host(int h) const;
};

FiniteAmalgam build_amalgam(const FiniteHom& f, const FiniteIdeal& j, std::string name = "");

// iota_A is an injective unital homomorphism and P_A after iota_A is the identity.
bool embedding_holds(const FiniteAmalgam& w);

struct PrimeLabel {
  enum class Tag { FromA, FromB } tag;
  FiniteIdeal source;  // prime of A or of B
  FiniteIdeal image;   // the corresponding ideal of the amalgam
};

struct PrimeClassification {
  std::vector<FiniteIdeal> spectrum;  // brute force
  std::vector<PrimeLabel> candidates;
  bool primes_match = false;
  bool maximal_match = false;
  bool match() const { return primes_match && maximal_match; }
};

PrimeClassification classify_primes(const FiniteAmalgam& w);

// Backtracking search for a ring isomorphism; empty when none exists.
std::vector<int> find_isomorphism(const FiniteRing& r1, const FiniteRing& r2);

}  // namespace amalg
