#include "cherednik/complex_float.hpp"

#include <sstream>
#include <utility>

#include "cherednik/errors.hpp"

namespace cherednik {

ComplexFloat::ComplexFloat(int precision) : precision_(precision) {
  if (precision < MPFR_PREC_MIN || precision > 1 << 20) throw InvalidArgument("unsupported precision");
  mpfr_init2(re_, precision);
  mpfr_init2(im_, precision);
  mpfr_set_zero(re_, 1);
  mpfr_set_zero(im_, 1);
}

ComplexFloat::ComplexFloat(const ComplexFloat& o) : precision_(o.precision_) {
  mpfr_init2(re_, precision_);
  mpfr_init2(im_, precision_);
  mpfr_set(re_, o.re_, MPFR_RNDN);
  mpfr_set(im_, o.im_, MPFR_RNDN);
}

ComplexFloat::ComplexFloat(ComplexFloat&& o) noexcept : precision_(o.precision_) {
  mpfr_init2(re_, precision_);
  mpfr_init2(im_, precision_);
  mpfr_swap(re_, o.re_);
  mpfr_swap(im_, o.im_);
}

ComplexFloat& ComplexFloat::operator=(ComplexFloat o) noexcept {
  swap(o);
  return *this;
}

ComplexFloat::~ComplexFloat() {
  mpfr_clear(re_);
  mpfr_clear(im_);
}

void ComplexFloat::swap(ComplexFloat& o) noexcept {
  std::swap(precision_, o.precision_);
  mpfr_swap(re_, o.re_);
  mpfr_swap(im_, o.im_);
}

ComplexFloat ComplexFloat::from_rational(const Rational& q, int precision) {
  ComplexFloat z(precision);
  mpfr_set_q(z.re_, q.get_mpq_t(), MPFR_RNDN);
  return z;
}

ComplexFloat ComplexFloat::exp_2pi_i(const Rational& q, int precision) {
  // Reduce q mod 1 exactly before touching floating point.
  Rational frac = q - Rational(mpz_class(q.get_num() / q.get_den()));
  if (frac < 0) frac += 1;
  ComplexFloat z(precision);
  mpfr_t angle;
  mpfr_init2(angle, precision + 16);
  mpfr_const_pi(angle, MPFR_RNDN);
  mpfr_mul_q(angle, angle, frac.get_mpq_t(), MPFR_RNDN);
  mpfr_mul_ui(angle, angle, 2, MPFR_RNDN);
  mpfr_sin_cos(z.im_, z.re_, angle, MPFR_RNDN);
  mpfr_clear(angle);
  return z;
}

ComplexFloat& ComplexFloat::operator+=(const ComplexFloat& o) {
  mpfr_add(re_, re_, o.re_, MPFR_RNDN);
  mpfr_add(im_, im_, o.im_, MPFR_RNDN);
  return *this;
}

ComplexFloat& ComplexFloat::operator-=(const ComplexFloat& o) {
  mpfr_sub(re_, re_, o.re_, MPFR_RNDN);
  mpfr_sub(im_, im_, o.im_, MPFR_RNDN);
  return *this;
}

ComplexFloat& ComplexFloat::operator*=(const ComplexFloat& o) {
  const int p = std::max(precision_, o.precision_) + 8;
  mpfr_t ac, bd, ad, bc;
  mpfr_inits2(p, ac, bd, ad, bc, static_cast<mpfr_ptr>(nullptr));
  mpfr_mul(ac, re_, o.re_, MPFR_RNDN);
  mpfr_mul(bd, im_, o.im_, MPFR_RNDN);
  mpfr_mul(ad, re_, o.im_, MPFR_RNDN);
  mpfr_mul(bc, im_, o.re_, MPFR_RNDN);
  mpfr_sub(re_, ac, bd, MPFR_RNDN);
  mpfr_add(im_, ad, bc, MPFR_RNDN);
  mpfr_clears(ac, bd, ad, bc, static_cast<mpfr_ptr>(nullptr));
  return *this;
}

long double ComplexFloat::abs() const {
  mpfr_t r;
  mpfr_init2(r, precision_);
  mpfr_hypot(r, re_, im_, MPFR_RNDN);
  const long double out = mpfr_get_ld(r, MPFR_RNDN);
  mpfr_clear(r);
  return out;
}

std::complex<long double> ComplexFloat::to_std() const {
  return {mpfr_get_ld(re_, MPFR_RNDN), mpfr_get_ld(im_, MPFR_RNDN)};
}

std::string ComplexFloat::to_string(int digits) const {
  char* buf = nullptr;
  std::ostringstream os;
  mpfr_asprintf(&buf, "%.*Rg", digits, re_);
  os << buf;
  mpfr_free_str(buf);
  mpfr_asprintf(&buf, "%+.*Rg", digits, im_);
  os << buf << 'i';
  mpfr_free_str(buf);
  return os.str();
}

ComplexFloat to_complex(const ExactScalar& a, int precision) {
  // Guard bits absorb the rounding of phi(N) products and sums.
  const int work = precision + 32;
  ComplexFloat acc(work);
  const int n = a.conductor();
  const auto& c = a.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    acc += ComplexFloat::from_rational(c[j], work) * ComplexFloat::exp_2pi_i(Rational(mpz_class(static_cast<long>(j)), mpz_class(n)), work);
  }
  ComplexFloat out(precision);
  out += acc;
  return out;
}

std::complex<long double> to_complex_ld(const ExactScalar& a) { return to_complex(a, 96).to_std(); }

}  // namespace cherednik
