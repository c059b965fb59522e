#pragma once

#include <map>
#include <string>
#include <vector>

#include "cherednik/exact_matrix.hpp"

namespace cherednik {

/// Element of the group algebra, dense over the element list of a group.
struct GroupAlgebraElement {
  std::vector<ExactScalar> coeffs;

  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(std::size_t order) : coeffs(order) {}

  bool is_zero() const;
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(const ExactScalar& s);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const ExactScalar& s) { return a *= s; }
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;
};

struct Hyperplane {
  std::vector<ExactScalar> alpha;  // linear form in the coordinates x_1..x_n
  std::vector<ExactScalar> v;      // spans the W_H-stable complement, alpha(v) = order
  int order = 0;                   // e_H = |W_H|
  std::vector<int> stabilizer;     // W_H as powers s^0, s^1, ... of the distinguished generator
  int orbit = 0;

  /// Distinguished generator of W_H: det(s) = exp(-2 pi i / e_H).
  int generator() const { return stabilizer.at(1); }
};

struct HyperplaneOrbit {
  std::string label;
  std::vector<int> hyperplanes;
  int order = 0;
};

struct Irrep {
  std::string label;
  int dim = 0;
  std::vector<ExactMatrix> matrices;     // indexed by group element
  std::vector<ExactScalar> character;    // indexed by group element
};

/// Input description of an irreducible representation: images of generators.
struct IrrepSpec {
  std::string label;
  std::vector<ExactMatrix> generator_images;
};

/// Finite complex reflection group acting on V = C^n by explicit matrices.
class ReflectionGroup {
 public:
  ReflectionGroup(std::string name, std::vector<ExactMatrix> generators, std::vector<IrrepSpec> irreps);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int order() const { return static_cast<int>(matrices_.size()); }
  static constexpr int identity() { return 0; }

  const ExactMatrix& matrix(int w) const { return matrices_[w]; }
  /// Action on coefficient vectors of linear forms: (M_w^{-1})^T.
  const ExactMatrix& dual_matrix(int w) const { return dual_[w]; }
  const ExactScalar& det(int w) const { return det_[w]; }
  int mul(int a, int b) const { return table_[a * order() + b]; }
  int inverse(int w) const { return inverse_[w]; }
  /// Shortest word in the generators (indices into generators()).
  const std::vector<int>& word(int w) const { return words_[w]; }
  const std::vector<int>& generators() const { return generators_; }
  int find_element(const ExactMatrix& m) const;

  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const std::vector<HyperplaneOrbit>& orbits() const { return orbits_; }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  const Irrep& irrep(int e) const { return irreps_.at(e); }
  int find_irrep(const std::string& label) const;

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  /// Rows: irreps, columns: conjugacy classes.
  std::vector<std::vector<ExactScalar>> character_table() const;

  /// Index of the irrep with character w -> chi_E(w^{-1}).
  int dual_irrep(int e) const;
  /// Index of E (x) F; F must be one-dimensional.
  int twist_irrep(int e, int linear) const;
  /// Index of the irrep with the given character, or -1.
  int irrep_with_character(const std::vector<ExactScalar>& chi) const;
  /// All irreps self-dual (true for the real groups).
  bool is_real() const;

  GroupAlgebraElement element(int w, const ExactScalar& c = 1) const;
  GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const;
  ExactMatrix represent(int irrep, const GroupAlgebraElement& a) const;

  /// epsilon_{H,j} = (1/e_H) sum_{w in W_H} det(w)^j w.
  GroupAlgebraElement idempotent(int hyperplane, int j) const;
  /// e_E = (dim E / |W|) sum_w chi_E(w^{-1}) w.
  GroupAlgebraElement isotypic_projector(int irrep) const;

 private:
  void close_under_multiplication(const std::vector<ExactMatrix>& generators);
  void find_hyperplanes();
  void build_irreps(const std::vector<IrrepSpec>& specs);

  std::string name_;
  int rank_ = 0;
  std::vector<ExactMatrix> matrices_;
  std::vector<ExactMatrix> dual_;
  std::vector<ExactScalar> det_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> words_;
  std::vector<int> generators_;
  std::map<std::string, int> lookup_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<HyperplaneOrbit> orbits_;
  std::vector<Irrep> irreps_;
  std::vector<std::vector<int>> classes_;
};

/// Z/e acting on C by zeta_e; irreps det^j.
ReflectionGroup build_cyclic(int e);
/// Dihedral group of order 2m in its geometric representation.
ReflectionGroup build_dihedral(int m);
/// S_n on C^n (permutation) or on its (n-1)-dimensional reflection summand.
ReflectionGroup build_symmetric(int n, bool reflection_rep = true);

struct GroupSpec {
  std::string family;  // "cyclic", "dihedral", "symmetric"
  int param = 0;
  bool reflection_rep = true;
};

/// Parses "cyclic:3", "dihedral:4", "symmetric:3", "symmetric:3:perm".
GroupSpec parse_group_spec(const std::string& text);
ReflectionGroup build_group(const GroupSpec& spec);

}  // namespace cherednik
