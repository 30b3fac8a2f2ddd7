#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalg/hilbert.hpp"
#include "amalg/module.hpp"
#include "amalg/ring.hpp"

namespace amalg {

enum class AmalgamKind { General, Duplication, TrivialExtension };

struct AmalgamSpec {
  std::string name;
  PresentedRing a;
  PresentedRing b;
  RingHom f;
  IdealHandle j;
  // Algebra generators j_t of the second factor; the generators of `j` when empty.
  std::vector<Polynomial> generators;
  AmalgamKind kind = AmalgamKind::General;
  // J as a module over the ambient ring of A (duplications and trivial extensions).
  std::optional<FPModule> j_module;

  const std::vector<Polynomial>& j_generators() const { return generators.empty() ? j.generators : generators; }
};

enum class CertKind { Unchecked, Certified, NotSurjective };

struct CertStatus {
  CertKind kind = CertKind::Unchecked;
  int witness_degree = 0;

  std::string to_string() const;
  friend bool operator==(const CertStatus&, const CertStatus&) = default;
};

struct AmalgamPresentation {
  AmalgamSpec spec;
  RingPtr c;                  // k[x_1..x_n, z_1..z_m]
  std::vector<int> z_vars;    // indices of the z variables in c
  GroebnerBasis k_a;          // I_A C + <z>
  GroebnerBasis k_b;          // ker(C -> B)
  PresentedRing ring;         // C / (K_A ∩ K_B)
  CertStatus certificate;

  const GroebnerBasis& k() const { return ring.ideal(); }
};

// Throws JUnit when J is the unit ideal of B.
AmalgamPresentation amalgam_present(const AmalgamSpec& spec);

// HS(C/K) = HS(A) + HS(J); on failure the lowest degree where they differ.
CertStatus verify_presentation(const AmalgamPresentation& p);

AmalgamSpec duplication(const PresentedRing& a, const IdealHandle& i, std::string name = "");
AmalgamSpec trivial_extension(const PresentedRing& a, const FPModule& m, std::string name = "");

// (K : <z>) / K inside C/K.
IdealHandle hom_A_into_R(const AmalgamPresentation& p);
HilbertSeries hom_A_into_R_series(const AmalgamPresentation& p);

// HS(J) = HS(B) - HS(B/J).
HilbertSeries j_series(const AmalgamSpec& spec);

}  // namespace amalg
