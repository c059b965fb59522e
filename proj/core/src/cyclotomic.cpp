#include "cherednik/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {
namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic integer polynomial m.
void reduce_mod(Poly& p, const std::vector<long>& m) {
  const std::size_t d = m.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (p[i] == 0) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j <= d; ++j) p[i - d + j] -= c * m[j];
  }
  p.resize(d);
}

// q, r with a = q b + r over Q.
void divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const Rational lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  r = std::move(a);
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::vector<long> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const long c = num[i];
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int conductor) {
  if (conductor < 1) throw InvalidArgument("conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> poly = conductor == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic(conductor);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(conductor, std::move(poly)).first->second;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic(long num, long den) : conductor_(1), coeffs_(1) {
  if (den == 0) throw DivisionByZero();
  coeffs_[0] = Rational(mpz_class(num), mpz_class(den));
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  canonicalize();
}

void Cyclotomic::canonicalize() {
  if (conductor_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return;
  conductor_ = 1;
  coeffs_.resize(1);
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, long k) {
  if (conductor < 1) throw InvalidArgument("conductor must be positive");
  long e = k % conductor;
  if (e < 0) e += conductor;
  Poly p(conductor, 0);
  p[e] = 1;
  reduce_mod(p, cyclotomic_polynomial(conductor));
  return Cyclotomic(conductor, std::move(p));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }

Cyclotomic Cyclotomic::promoted(int target) const {
  if (target == conductor_) return *this;
  if (target % conductor_ != 0) throw InvalidArgument("promotion requires N | M");
  const int step = target / conductor_;
  Poly p(target, 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) p[(j * step) % target] += coeffs_[j];
  reduce_mod(p, cyclotomic_polynomial(target));
  Cyclotomic out;
  out.conductor_ = target;
  out.coeffs_ = std::move(p);
  return out;  // deliberately not canonicalized: callers operate in Q(zeta_M)
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  const int n = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = promoted(n);
  const Cyclotomic b = o.promoted(n);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.canonicalize();
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.conductor_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    canonicalize();
    return *this;
  }
  if (conductor_ == 1) {
    const Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    canonicalize();
    return *this;
  }
  const int n = std::lcm(conductor_, o.conductor_);
  const Cyclotomic a = promoted(n);
  const Cyclotomic b = o.promoted(n);
  Poly p = mul(a.coeffs_, b.coeffs_);
  if (p.size() < a.coeffs_.size()) p.resize(a.coeffs_.size(), 0);
  reduce_mod(p, cyclotomic_polynomial(n));
  return *this = Cyclotomic(n, std::move(p));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Extended Euclid: a u + Phi v = 1.
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0{}, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Rational c = r1[0];
  for (auto& x : s1) x /= c;
  s1.resize(std::max<std::size_t>(s1.size(), phi_int.size() - 1), 0);
  reduce_mod(s1, phi_int);
  return Cyclotomic(conductor_, std::move(s1));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ == 1) return *this;
  Poly p(conductor_, 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) p[(conductor_ - j) % conductor_] += coeffs_[j];
  reduce_mod(p, cyclotomic_polynomial(conductor_));
  return Cyclotomic(conductor_, std::move(p));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.conductor_ == 1 || b.conductor_ == 1) return false;  // canonical rationals
  const int n = std::lcm(a.conductor_, b.conductor_);
  return a.promoted(n).coeffs_ == b.promoted(n).coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (conductor_ == 1) return coeffs_[0].get_str();
  std::ostringstream os;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j > 0) os << " + ";
    os << coeffs_[j].get_str();
    if (j == 1) os << "*z";
    if (j > 1) os << "*z^" << j;
  }
  os << "; " << conductor_;
  return os.str();
}

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  for (char ch : text)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
      throw ParseError("malformed rational '" + text + "'");
  std::string t = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(t, 10) != 0) throw ParseError("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) return Cyclotomic(parse_rational(strip(text)));
  const std::string tail = strip(text.substr(semi + 1));
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(tail, &used);
    if (used != tail.size()) throw ParseError("");
  } catch (...) {
    throw ParseError("malformed conductor '" + tail + "'");
  }
  if (n < 1) throw ParseError("conductor must be positive");

  // Normalise " - " separators into "+ -".
  std::string body;
  const std::string raw(text.substr(0, semi));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '-' && i > 0) {
      std::size_t k = i;
      while (k > 0 && std::isspace(static_cast<unsigned char>(raw[k - 1]))) --k;
      if (k > 0 && raw[k - 1] != '+' && raw[k - 1] != '*' && raw[k - 1] != '^') {
        body += "+-";
        continue;
      }
    }
    body += raw[i];
  }

  Poly p(std::max(n, 1), 0);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t plus = body.find('+', start);
    if (plus == std::string::npos) plus = body.size();
    std::string term = strip(std::string_view(body).substr(start, plus - start));
    start = plus + 1;
    if (term.empty()) {
      if (plus == body.size()) break;
      continue;
    }
    std::erase_if(term, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    Rational coeff = 1;
    long power = 0;
    const auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      std::string c = term.substr(0, zpos);
      if (!c.empty() && c.back() == '*') c.pop_back();
      if (c.empty() || c == "+") coeff = 1;
      else if (c == "-") coeff = -1;
      else coeff = parse_rational(c);
      const std::string rest = term.substr(zpos + 1);
      if (rest.empty()) power = 1;
      else if (rest[0] == '^') {
        try {
          std::size_t used = 0;
          power = std::stol(rest.substr(1), &used);
          if (used != rest.size() - 1 || power < 0) throw ParseError("");
        } catch (...) {
          throw ParseError("malformed power in '" + term + "'");
        }
      } else {
        throw ParseError("malformed term '" + term + "'");
      }
    }
    p[power % n] += coeff;
    if (plus == body.size()) break;
  }
  reduce_mod(p, cyclotomic_polynomial(n));
  return Cyclotomic(n, std::move(p));
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

}  // namespace cherednik
