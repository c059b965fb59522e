#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cherednik/cherednik_algebra.hpp"
#include "cherednik/dunkl.hpp"

namespace cherednik {

/// Degree -> multiplicity vector over Irr(W), truncated at degree N.
struct GradedCharacter {
  int N = 0;
  std::vector<std::string> irreps;
  std::vector<int> dims;
  std::vector<std::vector<long>> mults;  // mults[n][F]

  /// dim M_n = sum_F mults[n][F] dim F.
  std::vector<long> dimensions() const;
  friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;
};

GradedCharacter delta_character(const ReflectionGroup& g, int irrep, int N);
/// Character of the costandard module, computed from S(V) (x) E^dual on the
/// dual side and read back through E -> E^dual.
GradedCharacter nabla_character(const ReflectionGroup& g, int irrep, int N);

/// Radical of the contravariant form on Delta(E), degree by degree.
/// Row space of functionals(n) is the annihilator of rad_n, so rank = dim L(E)_n.
class ContravariantTower {
 public:
  ContravariantTower(const ReflectionGroup& g, const CherednikParams& p, int irrep);
  ContravariantTower(ContravariantTower&&) noexcept;
  ~ContravariantTower();

  const StandardModule& module() const { return *module_; }
  const ExactMatrix& functionals(int n);
  std::size_t rank(int n);
  /// Basis (columns) of rad_n.
  ExactMatrix radical(int n);
  /// Multiplicity of each irrep in L(E)_n.
  std::vector<long> isotype_multiplicities(int n);
  /// Dimension of e_F L(E)_n for each F.
  std::vector<std::size_t> isotype_ranks(int n);
  /// Matrix of the isotypic projector of F on layer n.
  ExactMatrix projector(int irrep, int n) const;

 private:
  const ReflectionGroup* group_;
  int irrep_;
  std::unique_ptr<StandardModule> module_;
  std::vector<ExactMatrix> q_;
};

struct ShapovalovRank {
  std::size_t total = 0;
  std::vector<std::size_t> per_isotype;  // dim e_F L(E)_n
};
ShapovalovRank shapovalov_rank(const ReflectionGroup& g, const CherednikParams& p, int irrep, int n);

GradedCharacter simple_character(const ReflectionGroup& g, const CherednikParams& p, int irrep, int N);

struct BlockPartition {
  std::vector<ExactScalar> c;             // c-function per irrep
  std::vector<std::vector<int>> blocks;   // irreps sorted by index inside each block
  /// Pairs (E, F) with E < F, i.e. c_F - c_E a positive integer.
  std::vector<std::pair<int, int>> order;
  int block_of(int irrep) const;
};
BlockPartition blocks(const ReflectionGroup& g, const CherednikParams& p);

/// True when c_F - c_E is a positive integer (E < F).
bool precedes(const ExactScalar& c_e, const ExactScalar& c_f);

struct DecompositionMatrix {
  std::vector<int> irreps;                   // the block, in the listed order
  std::vector<std::vector<long>> entries;    // entries[F][E] = [Delta(F) : L(E)]
  std::vector<std::vector<bool>> certified;
  int N = 0;
  bool all_certified() const;
};

/// Smallest truncation that certifies every entry of the block, plus a margin of 4.
int default_truncation(const ReflectionGroup& g, const CherednikParams& p, const std::vector<int>& block);

/// Throws Uncertified when some entry is not determined by degrees <= N,
/// unless allow_uncertified is set.
DecompositionMatrix decomposition_matrix(const ReflectionGroup& g, const CherednikParams& p,
                                         const std::vector<int>& block, int N, bool allow_uncertified = false);

struct SingularSpace {
  int isotype = 0;                // F
  std::size_t multiplicity = 0;   // copies of F
  ExactMatrix basis;              // columns in layer coordinates
  bool degree_law_holds = false;  // n == c_E - c_F
};
std::vector<SingularSpace> singular_vectors(const ReflectionGroup& g, const CherednikParams& p, int irrep, int n);

struct VarietyDimension {
  int dimension = 0;
  bool certified = false;
};
/// Growth degree of n -> dim M_n (0 for finite-dimensional modules).
VarietyDimension ch_variety_dim(const GradedCharacter& ch);

struct EndomorphismCount {
  long total = 0;       // sum_E rank Delta(E)_reg * rank nabla(E)_reg
  long group_order = 0;
  long sum_of_squares = 0;
  bool holds() const { return total == group_order && sum_of_squares == group_order; }
};
/// Generic ranks are read off the characters at degree `degree`.
EndomorphismCount endomorphism_count_check(const ReflectionGroup& g, const CherednikParams& p, int degree = 6);

}  // namespace cherednik
