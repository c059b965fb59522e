#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/polynomial.hpp"
#include "cherednik/reflection_group.hpp"

namespace cherednik {

/// Parameters k_{H,1..e_H-1}, stored once per hyperplane orbit.
/// Indices are read modulo e_H with k_{H,0} = k_{H,e_H} = 0.
class CherednikParams {
 public:
  CherednikParams() = default;
  /// All parameters zero.
  explicit CherednikParams(const ReflectionGroup& g);
  /// Every k_{H,j} (j >= 1) equal to k.
  static CherednikParams uniform(const ReflectionGroup& g, const ExactScalar& k);
  /// "1/5" (every orbit) or "O0=1/5;O1=1/3,1/7"; a single value per orbit is broadcast.
  static CherednikParams parse(const ReflectionGroup& g, const std::string& text);

  std::size_t orbit_count() const { return k_.size(); }
  int orbit_order(int orbit) const { return static_cast<int>(k_.at(orbit).size()) + 1; }
  ExactScalar k(int orbit, int j) const;
  const std::vector<ExactScalar>& orbit_values(int orbit) const { return k_.at(orbit); }
  void set(int orbit, std::vector<ExactScalar> values);

  CherednikParams operator+(const CherednikParams& o) const;
  CherednikParams operator*(const ExactScalar& s) const;
  friend bool operator==(const CherednikParams&, const CherednikParams&) = default;

  std::string to_string() const;

 private:
  std::vector<std::vector<ExactScalar>> k_;
};

/// gamma_H for every hyperplane (index-aligned with g.hyperplanes()).
std::vector<GroupAlgebraElement> gamma_from_k(const ReflectionGroup& g, const CherednikParams& p);
/// Recovers k_{H,1..e_H-1} from an element of kW_H; throws if gamma has nonzero trace.
std::vector<ExactScalar> k_from_gamma(const ReflectionGroup& g, int hyperplane, const GroupAlgebraElement& gamma);
/// Rebuilds parameters from one gamma per hyperplane (orbit representatives are used).
CherednikParams params_from_gamma(const ReflectionGroup& g, const std::vector<GroupAlgebraElement>& gamma);

/// a_H = sum_{i >= 1} e_H k_{H,i} epsilon_{H,i}.
GroupAlgebraElement a_element(const ReflectionGroup& g, const CherednikParams& p, int hyperplane);
/// z = sum over all hyperplanes of a_H.
GroupAlgebraElement z_element(const ReflectionGroup& g, const CherednikParams& p);

/// Scalar by which z acts on the irrep; throws NonScalarAction otherwise.
ExactScalar c_function(const ReflectionGroup& g, const CherednikParams& p, int irrep);
std::vector<ExactScalar> c_table(const ReflectionGroup& g, const CherednikParams& p);

/// Parameters of the twisted gamma: sum_w c_w zeta(w) w on every W_H.
CherednikParams twist_parameters(const ReflectionGroup& g, const CherednikParams& p, int linear_char);

struct TwistReport {
  bool holds = false;
  /// c_E(gamma) - c_{E (x) zeta^{-1}}(tau gamma) for each E.
  std::vector<ExactScalar> differences;
  /// sum_H e_H k_{H, e_H - d_H}; the differences must all equal this.
  ExactScalar expected_shift;
};
TwistReport twist_report(const ReflectionGroup& g, const CherednikParams& p, int linear_char);
bool twist_check(const ReflectionGroup& g, const CherednikParams& p, int linear_char);

/// Basis key of the PBW basis x^a w xi^b.
struct PbwKey {
  Exponent x;
  int w = 0;
  Exponent xi;
  auto operator<=>(const PbwKey&) const = default;
};

/// Element of the algebra in normal form P (x) kW (x) S.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  const std::map<PbwKey, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const PbwKey& key, const ExactScalar& c);
  ExactScalar coeff(const PbwKey& key) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const ExactScalar& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const ExactScalar& s) { return a *= s; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// Grading deg x - deg xi, or nullopt when inhomogeneous or zero.
  std::optional<int> homogeneous_degree() const;
  std::string to_string() const;

 private:
  std::map<PbwKey, ExactScalar> terms_;
};

/// Expression tree over generators of the algebra.
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  enum class Kind { Scalar, X, Xi, Group, Sum, Product };

  static ExprPtr scalar(const ExactScalar& c);
  static ExprPtr x(int i);
  static ExprPtr xi(int i);
  static ExprPtr group(int w);
  static ExprPtr sum(std::vector<ExprPtr> terms);
  static ExprPtr product(std::vector<ExprPtr> factors);

  Kind kind() const { return kind_; }
  int index() const { return index_; }
  const ExactScalar& value() const { return value_; }
  const std::vector<ExprPtr>& children() const { return children_; }
  std::string to_string() const;

 private:
  Expr(Kind k, int index, ExactScalar value, std::vector<ExprPtr> children)
      : kind_(k), index_(index), value_(std::move(value)), children_(std::move(children)) {}

  Kind kind_;
  int index_;
  ExactScalar value_;
  std::vector<ExprPtr> children_;
};

/// The algebra generated by V*, V and W for a fixed group and parameter.
/// The group must outlive the algebra.
class CherednikAlgebra {
 public:
  CherednikAlgebra(const ReflectionGroup& g, CherednikParams params);
  CherednikAlgebra(CherednikAlgebra&&) noexcept;
  CherednikAlgebra& operator=(CherednikAlgebra&&) noexcept;
  ~CherednikAlgebra();

  const ReflectionGroup& group() const { return *group_; }
  const CherednikParams& params() const { return params_; }
  int rank() const { return group_->rank(); }
  const std::vector<GroupAlgebraElement>& gamma() const { return gamma_; }
  /// [xi_i, x_j] as an element of kW.
  const GroupAlgebraElement& commutator_coefficient(int i, int j) const { return c_[i * rank() + j]; }

  AlgebraElement one() const { return scalar(1); }
  AlgebraElement scalar(const ExactScalar& c) const;
  AlgebraElement x(int i) const;
  AlgebraElement xi(int i) const;
  AlgebraElement group_element(int w) const;
  AlgebraElement from_group_algebra(const GroupAlgebraElement& a) const;
  AlgebraElement from_polynomial(const Polynomial& p) const;

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) const;

  /// [xi_i, x^a] in P (x) kW.
  AlgebraElement xi_commutator(int i, const Exponent& a) const;

 private:
  AlgebraElement left_multiply_xi(int i, const AlgebraElement& b) const;
  AlgebraElement left_multiply_group(int w, const AlgebraElement& b) const;
  const Polynomial& monomial_image(int w, const Exponent& a) const;

  const ReflectionGroup* group_;
  CherednikParams params_;
  std::vector<GroupAlgebraElement> gamma_;
  std::vector<GroupAlgebraElement> c_;

  struct Cache;
  std::unique_ptr<Cache> cache_;
};

/// Normal form of an expression by evaluation in the algebra.
AlgebraElement normal_form(const CherednikAlgebra& a, const ExprPtr& e);

struct EulerElements {
  AlgebraElement eu_k;     // sum_i x_i xi_i
  GroupAlgebraElement z;
  AlgebraElement eu;       // eu_k - z
};
EulerElements euler_elements(const CherednikAlgebra& a);

}  // namespace cherednik
