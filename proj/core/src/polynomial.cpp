#include "cherednik/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

Polynomial Polynomial::constant(int nvars, const ExactScalar& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& a, const ExactScalar& c) {
  Polynomial p(static_cast<int>(a.size()));
  p.add_term(a, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Exponent a(nvars, 0);
  a.at(i) = 1;
  return monomial(a);
}

Polynomial Polynomial::linear(const std::vector<ExactScalar>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Exponent a(n, 0);
    a[i] = 1;
    p.add_term(a, coeffs[i]);
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [a, c] : terms_) d = std::max(d, std::accumulate(a.begin(), a.end(), 0));
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [a, c] : terms_) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    if (d >= 0 && da != d) return false;
    d = da;
  }
  return true;
}

ExactScalar Polynomial::coeff(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? ExactScalar(0) : it->second;
}

void Polynomial::add_term(const Exponent& a, const ExactScalar& c) {
  if (static_cast<int>(a.size()) != nvars_) throw InvalidArgument("exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const ExactScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial result = constant(nvars_, 1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial out(nvars_);
  for (const auto& [a, c] : terms_) {
    if (a[i] == 0) continue;
    Exponent b = a;
    --b[i];
    out.add_term(b, c * ExactScalar(a[i]));
  }
  return out;
}

Polynomial Polynomial::directional_derivative(const std::vector<ExactScalar>& xi) const {
  Polynomial out(nvars_);
  for (int i = 0; i < nvars_; ++i)
    if (!xi[i].is_zero()) out += derivative(i) * xi[i];
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const bool constant_term = std::all_of(it->first.begin(), it->first.end(), [](int e) { return e == 0; });
    const bool bracket = !it->second.is_rational();
    if (bracket) os << '(';
    os << it->second.to_string();
    if (bracket) os << ')';
    if (constant_term) continue;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      os << "*x" << (i + 1);
      if (it->first[i] > 1) os << '^' << it->first[i];
    }
  }
  return os.str();
}

Polynomial divide_by_linear(const Polynomial& p, const std::vector<ExactScalar>& alpha) {
  const int n = p.nvars();
  int j = 0;
  while (j < n && alpha[j].is_zero()) ++j;
  if (j == n) throw DivisionByZero();
  const ExactScalar lead_inv = alpha[j].inverse();
  Polynomial q(n), r = p;
  while (true) {
    // Term with the largest power of x_j.
    const Exponent* best = nullptr;
    for (const auto& [a, c] : r.terms())
      if (a[j] > 0 && (!best || a[j] > (*best)[j])) best = &a;
    if (!best) break;
    Exponent b = *best;
    const ExactScalar c = r.coeff(b) * lead_inv;
    --b[j];
    q.add_term(b, c);
    for (int k = 0; k < n; ++k) {
      if (alpha[k].is_zero()) continue;
      Exponent t = b;
      ++t[k];
      r.add_term(t, -c * alpha[k]);
    }
  }
  if (!r.is_zero()) throw NotExactlyDivisible("polynomial " + p.to_string() + " is not divisible by the linear form");
  return q;
}

Polynomial act(const ReflectionGroup& g, int w, const Polynomial& p) {
  const int n = p.nvars();
  const ExactMatrix& d = g.dual_matrix(w);
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) images.push_back(Polynomial::linear(d.col(i)));
  Polynomial out(n);
  for (const auto& [a, c] : p.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (int i = 0; i < n; ++i)
      if (a[i] > 0) t = t * images[i].pow(a[i]);
    out += t;
  }
  return out;
}

Polynomial act(const ReflectionGroup& g, const GroupAlgebraElement& a, const Polynomial& p) {
  Polynomial out(p.nvars());
  for (std::size_t w = 0; w < a.coeffs.size(); ++w)
    if (!a.coeffs[w].is_zero()) out += act(g, static_cast<int>(w), p) * a.coeffs[w];
  return out;
}

std::vector<Exponent> monomials(int nvars, int degree) {
  std::vector<Exponent> out;
  Exponent cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == nvars - 1) {
      cur[i] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[i] = e;
      rec(i + 1, remaining - e);
    }
  };
  if (nvars == 0) return degree == 0 ? std::vector<Exponent>{Exponent{}} : std::vector<Exponent>{};
  rec(0, degree);
  return out;
}

std::size_t monomial_count(int nvars, int degree) {
  if (nvars == 0) return degree == 0 ? 1 : 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), nvars + degree - 1, degree);
  return b.get_ui();
}

std::vector<ExactScalar> to_coordinates(const Polynomial& p, int degree) {
  const auto basis = monomials(p.nvars(), degree);
  std::vector<ExactScalar> out(basis.size());
  std::size_t matched = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = p.terms().find(basis[i]);
    if (it != p.terms().end()) {
      out[i] = it->second;
      ++matched;
    }
  }
  if (matched != p.terms().size()) throw InvalidArgument("polynomial is not homogeneous of the requested degree");
  return out;
}

Polynomial from_coordinates(const std::vector<ExactScalar>& c, int nvars, int degree) {
  const auto basis = monomials(nvars, degree);
  Polynomial p(nvars);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], c[i]);
  return p;
}

ExactMatrix degree_action_matrix(const ReflectionGroup& g, int w, int degree) {
  const int n = g.rank();
  const auto basis = monomials(n, degree);
  ExactMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto col = to_coordinates(act(g, w, Polynomial::monomial(basis[j])), degree);
    for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace cherednik
