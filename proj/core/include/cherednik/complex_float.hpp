#pragma once

#include <complex>
#include <string>

#include <mpfr.h>

#include "cherednik/cyclotomic.hpp"

namespace cherednik {

/// Default working precision in bits for numerical embeddings.
inline constexpr int kDefaultPrecision = 128;

/// Complex number with MPFR real and imaginary parts at a fixed precision.
class ComplexFloat {
 public:
  explicit ComplexFloat(int precision = kDefaultPrecision);
  ComplexFloat(const ComplexFloat& o);
  ComplexFloat(ComplexFloat&& o) noexcept;
  ComplexFloat& operator=(ComplexFloat o) noexcept;
  ~ComplexFloat();

  /// exp(2 pi i q).
  static ComplexFloat exp_2pi_i(const Rational& q, int precision = kDefaultPrecision);
  static ComplexFloat from_rational(const Rational& q, int precision = kDefaultPrecision);

  int precision() const { return precision_; }
  mpfr_srcptr re() const { return re_; }
  mpfr_srcptr im() const { return im_; }

  ComplexFloat& operator+=(const ComplexFloat& o);
  ComplexFloat& operator-=(const ComplexFloat& o);
  ComplexFloat& operator*=(const ComplexFloat& o);
  friend ComplexFloat operator+(ComplexFloat a, const ComplexFloat& b) { return a += b; }
  friend ComplexFloat operator-(ComplexFloat a, const ComplexFloat& b) { return a -= b; }
  friend ComplexFloat operator*(ComplexFloat a, const ComplexFloat& b) { return a *= b; }

  /// |z| rounded to long double.
  long double abs() const;
  std::complex<long double> to_std() const;
  /// Decimal rendering with the given number of significant digits.
  std::string to_string(int digits = 20) const;

 private:
  void swap(ComplexFloat& o) noexcept;

  int precision_;
  mpfr_t re_;
  mpfr_t im_;
};

/// Numerical embedding sending zeta_N to exp(2 pi i / N).
ComplexFloat to_complex(const ExactScalar& a, int precision = kDefaultPrecision);

/// Shortcut: to_complex(a).to_std().
std::complex<long double> to_complex_ld(const ExactScalar& a);

}  // namespace cherednik
