#pragma once

#include <map>
#include <string>
#include <vector>

#include "cherednik/exact_matrix.hpp"
#include "cherednik/reflection_group.hpp"

namespace cherednik {

using Exponent = std::vector<int>;

/// Polynomial in the coordinates x_1..x_n of V, sparse over exponent vectors.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const ExactScalar& c);
  static Polynomial monomial(const Exponent& a, const ExactScalar& c = 1);
  static Polynomial variable(int nvars, int i);
  /// sum_i coeffs[i] x_i.
  static Polynomial linear(const std::vector<ExactScalar>& coeffs);

  int nvars() const { return nvars_; }
  const std::map<Exponent, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  ExactScalar coeff(const Exponent& a) const;

  void add_term(const Exponent& a, const ExactScalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const ExactScalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const ExactScalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial pow(int e) const;
  /// Partial derivative in x_i.
  Polynomial derivative(int i) const;
  /// Directional derivative along the vector xi of V.
  Polynomial directional_derivative(const std::vector<ExactScalar>& xi) const;

  std::string to_string() const;

 private:
  int nvars_;
  std::map<Exponent, ExactScalar> terms_;
};

/// Exact quotient p / alpha for a nonzero linear form; throws NotExactlyDivisible.
Polynomial divide_by_linear(const Polynomial& p, const std::vector<ExactScalar>& alpha);

/// (w . p)(v) = p(w^{-1} v).
Polynomial act(const ReflectionGroup& g, int w, const Polynomial& p);
/// Action of a group algebra element on a polynomial.
Polynomial act(const ReflectionGroup& g, const GroupAlgebraElement& a, const Polynomial& p);

/// Exponents of total degree d in n variables, x_1^d first (lex descending).
std::vector<Exponent> monomials(int nvars, int degree);
/// Binomial(n + d - 1, d).
std::size_t monomial_count(int nvars, int degree);

/// Matrix of w on the degree-d monomial basis.
ExactMatrix degree_action_matrix(const ReflectionGroup& g, int w, int degree);

/// Coefficient vector of a homogeneous polynomial in the degree-d monomial basis.
std::vector<ExactScalar> to_coordinates(const Polynomial& p, int degree);
Polynomial from_coordinates(const std::vector<ExactScalar>& c, int nvars, int degree);

}  // namespace cherednik
