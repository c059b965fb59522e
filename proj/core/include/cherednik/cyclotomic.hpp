#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cherednik {

using Rational = mpq_class;

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int conductor);

/// Euler's totient.
int euler_phi(int n);

/// Element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, z, ..., z^{phi(N)-1} modulo Phi_N.
///
/// Mixed-conductor arithmetic promotes both operands to lcm(N_a, N_b).
/// Values lying in Q are always stored with conductor 1, so the
/// textual form of a rational never mentions z.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}  // NOLINT implicit
  Cyclotomic(const Rational& q) : conductor_(1), coeffs_{q} {}  // NOLINT implicit
  Cyclotomic(long num, long den);

  /// zeta_N^k with zeta_N = exp(2 pi i / N).
  static Cyclotomic root_of_unity(int conductor, long k);

  /// Parses "p/q" or "c0 + c1*z + c2*z^2; N".
  static Cyclotomic parse(std::string_view text);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return conductor_ == 1; }
  /// Only valid when is_rational().
  const Rational& rational() const { return coeffs_[0]; }

  /// Same value expressed over Q(zeta_M); requires conductor() | M.
  Cyclotomic promoted(int target_conductor) const;

  Cyclotomic inverse() const;
  /// Complex conjugate (z -> z^{-1}).
  Cyclotomic conj() const;
  Cyclotomic pow(long e) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  Cyclotomic(int conductor, std::vector<Rational> coeffs);
  void canonicalize();

  int conductor_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

using ExactScalar = Cyclotomic;

}  // namespace cherednik
