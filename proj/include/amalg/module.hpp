#pragma once

#include <vector>

#include "amalg/gb.hpp"
#include "amalg/hilbert.hpp"
#include "amalg/ring.hpp"

namespace amalg {

using Column = std::vector<Polynomial>;

// A homogeneous map of graded free modules over the ambient polynomial ring.
// Column j is the image of the j-th source generator in the target basis;
// entry (i, j) has degree source_degrees[j] - target_degrees[i].
struct GradedMap {
  RingPtr ring;
  std::vector<int> target_degrees;
  std::vector<int> source_degrees;
  std::vector<Column> columns;

  int rows() const { return static_cast<int>(target_degrees.size()); }
  int cols() const { return static_cast<int>(source_degrees.size()); }
  const Polynomial& entry(int i, int j) const { return columns[j][i]; }
  bool is_zero() const;
  // Hom(-, S): the transposed map between the dual free modules.
  GradedMap dual() const;
};

GradedMap compose(const GradedMap& outer, const GradedMap& inner);

// coker(S^r -> S^s): generators in degrees `degrees`, relations as columns.
class FPModule {
 public:
  FPModule() = default;
  // Throws NotHomogeneous when a relation column is not homogeneous with
  // respect to the generator degrees. Zero columns are dropped.
  FPModule(RingPtr ring, std::vector<int> degrees, std::vector<Column> relations);

  static FPModule free(RingPtr ring, std::vector<int> degrees);
  // S/I
  static FPModule cyclic(const PresentedRing& r);
  static FPModule cyclic(const RingPtr& ring, const IdealBasis& ideal, int degree = 0);
  // An ideal J of R = S/I as an S-module (equivalently an R-module).
  static FPModule ideal_module(const IdealHandle& j);

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<Column>& relations() const { return relations_; }
  const std::vector<int>& relation_degrees() const { return relation_degrees_; }
  int num_generators() const { return static_cast<int>(degrees_.size()); }
  int num_relations() const { return static_cast<int>(relations_.size()); }
  GradedMap presentation() const { return {ring_, degrees_, relation_degrees_, relations_}; }

  // M(a): the degree-d piece is M_{a+d}, so generator degrees drop by a.
  FPModule twisted(int a) const;
  FPModule direct_sum(const FPModule& other) const;

 private:
  RingPtr ring_;
  std::vector<int> degrees_;
  std::vector<Column> relations_;
  std::vector<int> relation_degrees_;
};

// Minimal presentation: cancels unit entries of the relation matrix, then
// keeps a minimal homogeneous generating set of the relations.
FPModule prune(const FPModule& m);

// Generators of ker(map), as columns over the source basis; minimal.
GradedMap kernel(const GradedMap& map);

// Minimal homogeneous generating subset of the submodule spanned by `columns`
// (each of the given degree) inside the free module with `degrees`.
std::vector<int> minimal_generator_indices(const RingPtr& ring, const std::vector<int>& degrees,
                                           const std::vector<Column>& columns, const std::vector<int>& column_degrees);

// (<gens> + <rels>) / <rels>, presented on the given generators.
FPModule subquotient(const RingPtr& ring, const std::vector<int>& degrees, const std::vector<Column>& gens,
                     const std::vector<int>& gen_degrees, const std::vector<Column>& rels,
                     const std::vector<int>& rel_degrees);

struct FreeResolution {
  RingPtr ring;
  std::vector<std::vector<int>> twists;  // generator degrees of F_0, F_1, ...
  std::vector<GradedMap> maps;           // maps[i] : F_{i+1} -> F_i

  // Projective dimension; -1 for the zero module.
  int length() const { return static_cast<int>(twists.size()) - 1; }
  std::vector<int> betti() const;
  bool is_minimal() const;
  bool is_complex() const;
};

FreeResolution free_resolution(const FPModule& m);

// Alternating sum of the twists of the minimal resolution.
HilbertSeries hilbert_series(const FreeResolution& res);
HilbertSeries hilbert_series(const FPModule& m);
// Sum over generators of the leading-term quotients of a module Groebner
// basis of the relations (no resolution involved).
HilbertSeries hilbert_series_from_gb(const FPModule& m);
long long hilbert_function(const FPModule& m, int d);

// Combinatorial dimension of S/I from the leading monomials; -1 for the unit
// ideal.
int krull_dim(const GroebnerBasis& gb);
int krull_dim(const PresentedRing& r);
// dim S/Ann(M); -1 for the zero module.
int krull_dim(const FPModule& m);

// #vars - pdim. Throws ZeroModule.
int depth_ab(const FPModule& m);
int depth_ab(const FreeResolution& res);

bool is_zero_module(const FPModule& m);

// Ext^j_S(M, S) from the dualized minimal resolution.
FPModule ext_module(const FreeResolution& res, int j);
FPModule ext_module(const FPModule& m, int j);

// Ext^c_S(R, S)(-sum of weights), c = codim R.
FPModule canonical_module(const PresentedRing& r);

FPModule hom_modules(const FPModule& m, const FPModule& n);

IdealBasis annihilator(const FPModule& m);

}  // namespace amalg
