#include "cherednik/cherednik_algebra.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

// ---------------------------------------------------------------- parameters

CherednikParams::CherednikParams(const ReflectionGroup& g) {
  for (const auto& o : g.orbits()) k_.emplace_back(o.order - 1, ExactScalar(0));
}

CherednikParams CherednikParams::uniform(const ReflectionGroup& g, const ExactScalar& k) {
  CherednikParams p(g);
  for (auto& v : p.k_)
    for (auto& x : v) x = k;
  return p;
}

CherednikParams CherednikParams::parse(const ReflectionGroup& g, const std::string& text) {
  if (text.find('=') == std::string::npos) return uniform(g, ExactScalar::parse(text));
  CherednikParams p(g);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("parameter entry '" + item + "' lacks '='");
    std::string label = item.substr(0, eq);
    label.erase(0, label.find_first_not_of(" \t"));
    label.erase(label.find_last_not_of(" \t") + 1);
    int orbit = -1;
    for (std::size_t o = 0; o < g.orbits().size(); ++o)
      if (g.orbits()[o].label == label) orbit = static_cast<int>(o);
    if (orbit < 0) throw ParseError("unknown hyperplane orbit '" + label + "'");
    std::vector<ExactScalar> values;
    std::stringstream vs(item.substr(eq + 1));
    std::string v;
    while (std::getline(vs, v, ',')) values.push_back(ExactScalar::parse(v));
    const std::size_t need = g.orbits()[orbit].order - 1;
    if (values.size() == 1 && need > 1) values.assign(need, values.front());
    p.set(orbit, std::move(values));
  }
  return p;
}

ExactScalar CherednikParams::k(int orbit, int j) const {
  const auto& v = k_.at(orbit);
  const int e = static_cast<int>(v.size()) + 1;
  const int r = ((j % e) + e) % e;
  return r == 0 ? ExactScalar(0) : v[r - 1];
}

void CherednikParams::set(int orbit, std::vector<ExactScalar> values) {
  if (values.size() != k_.at(orbit).size())
    throw InvalidArgument("orbit " + std::to_string(orbit) + " expects " + std::to_string(k_[orbit].size()) +
                          " parameter(s)");
  k_[orbit] = std::move(values);
}

CherednikParams CherednikParams::operator+(const CherednikParams& o) const {
  CherednikParams out = *this;
  for (std::size_t a = 0; a < k_.size(); ++a)
    for (std::size_t j = 0; j < k_[a].size(); ++j) out.k_[a][j] += o.k_.at(a).at(j);
  return out;
}

CherednikParams CherednikParams::operator*(const ExactScalar& s) const {
  CherednikParams out = *this;
  for (auto& v : out.k_)
    for (auto& x : v) x *= s;
  return out;
}

std::string CherednikParams::to_string() const {
  std::ostringstream os;
  for (std::size_t o = 0; o < k_.size(); ++o) {
    os << (o ? ";" : "") << 'O' << o << '=';
    for (std::size_t j = 0; j < k_[o].size(); ++j) os << (j ? "," : "") << k_[o][j].to_string();
  }
  return os.str();
}

// ------------------------------------------------------ gamma, a_H, z, c_E

std::vector<GroupAlgebraElement> gamma_from_k(const ReflectionGroup& g, const CherednikParams& p) {
  std::vector<GroupAlgebraElement> out;
  for (const auto& h : g.hyperplanes()) {
    GroupAlgebraElement gamma(g.order());
    for (int w : h.stabilizer) {
      if (w == ReflectionGroup::identity()) continue;
      ExactScalar c;
      for (int j = 0; j < h.order; ++j) {
        const ExactScalar diff = p.k(h.orbit, j + 1) - p.k(h.orbit, j);
        if (!diff.is_zero()) c += g.det(w).pow(j) * diff;
      }
      gamma.coeffs[w] = c;
    }
    out.push_back(std::move(gamma));
  }
  return out;
}

std::vector<ExactScalar> k_from_gamma(const ReflectionGroup& g, int hyperplane, const GroupAlgebraElement& gamma) {
  const Hyperplane& h = g.hyperplanes().at(hyperplane);
  for (std::size_t w = 0; w < gamma.coeffs.size(); ++w)
    if (!gamma.coeffs[w].is_zero() &&
        std::find(h.stabilizer.begin(), h.stabilizer.end(), static_cast<int>(w)) == h.stabilizer.end())
      throw InvalidArgument("gamma is not supported on W_H");
  std::vector<ExactScalar> k(h.order, ExactScalar(0));  // k[0] .. k[e-1]
  ExactScalar running;
  for (int j = 0; j < h.order; ++j) {
    ExactScalar gj;
    for (int w : h.stabilizer)
      if (w < static_cast<int>(gamma.coeffs.size()) && !gamma.coeffs[w].is_zero())
        gj += gamma.coeffs[w] * g.det(w).pow(-j);
    running += gj / ExactScalar(h.order);
    if (j + 1 < h.order) k[j + 1] = running;
  }
  if (!running.is_zero()) throw InvalidArgument("gamma does not have trace zero on W_H");
  return {k.begin() + 1, k.end()};
}

CherednikParams params_from_gamma(const ReflectionGroup& g, const std::vector<GroupAlgebraElement>& gamma) {
  CherednikParams p(g);
  for (std::size_t o = 0; o < g.orbits().size(); ++o) {
    const int h = g.orbits()[o].hyperplanes.front();
    p.set(static_cast<int>(o), k_from_gamma(g, h, gamma.at(h)));
  }
  return p;
}

GroupAlgebraElement a_element(const ReflectionGroup& g, const CherednikParams& p, int hyperplane) {
  const Hyperplane& h = g.hyperplanes().at(hyperplane);
  GroupAlgebraElement a(g.order());
  for (int i = 1; i < h.order; ++i) {
    const ExactScalar k = p.k(h.orbit, i);
    if (k.is_zero()) continue;
    a += g.idempotent(hyperplane, i) * (ExactScalar(h.order) * k);
  }
  return a;
}

GroupAlgebraElement z_element(const ReflectionGroup& g, const CherednikParams& p) {
  GroupAlgebraElement z(g.order());
  for (std::size_t h = 0; h < g.hyperplanes().size(); ++h) z += a_element(g, p, static_cast<int>(h));
  return z;
}

ExactScalar c_function(const ReflectionGroup& g, const CherednikParams& p, int irrep) {
  const ExactMatrix m = g.represent(irrep, z_element(g, p));
  ExactScalar c;
  if (!m.is_scalar(&c))
    throw NonScalarAction("z does not act by a scalar on " + g.irrep(irrep).label);
  return c;
}

std::vector<ExactScalar> c_table(const ReflectionGroup& g, const CherednikParams& p) {
  const GroupAlgebraElement z = z_element(g, p);
  std::vector<ExactScalar> out;
  for (std::size_t e = 0; e < g.irreps().size(); ++e) {
    const ExactMatrix m = g.represent(static_cast<int>(e), z);
    ExactScalar c;
    if (!m.is_scalar(&c)) throw NonScalarAction("z does not act by a scalar on " + g.irreps()[e].label);
    out.push_back(c);
  }
  return out;
}

CherednikParams twist_parameters(const ReflectionGroup& g, const CherednikParams& p, int linear_char) {
  const Irrep& zeta = g.irrep(linear_char);
  if (zeta.dim != 1) throw InvalidArgument("twist requires a one-dimensional character");
  auto gamma = gamma_from_k(g, p);
  for (auto& gh : gamma)
    for (std::size_t w = 0; w < gh.coeffs.size(); ++w)
      if (!gh.coeffs[w].is_zero()) gh.coeffs[w] *= zeta.character[w];
  return params_from_gamma(g, gamma);
}

TwistReport twist_report(const ReflectionGroup& g, const CherednikParams& p, int linear_char) {
  TwistReport r;
  const CherednikParams twisted = twist_parameters(g, p, linear_char);
  const auto c = c_table(g, p);
  const auto c_twisted = c_table(g, twisted);
  const int zeta_inv = g.dual_irrep(linear_char);
  for (const auto& h : g.hyperplanes()) {
    const ExactScalar value = g.irrep(linear_char).character[h.generator()];
    int d = -1;
    for (int j = 0; j < h.order; ++j)
      if (g.det(h.generator()).pow(j) == value) d = j;
    if (d < 0) throw InvalidArgument("character restricted to W_H is not a power of det");
    r.expected_shift += ExactScalar(h.order) * p.k(h.orbit, h.order - d);
  }
  r.holds = true;
  for (std::size_t e = 0; e < g.irreps().size(); ++e) {
    const int f = g.twist_irrep(static_cast<int>(e), zeta_inv);
    r.differences.push_back(c[e] - c_twisted[f]);
    if (!(r.differences.back() == r.expected_shift)) r.holds = false;
  }
  return r;
}

bool twist_check(const ReflectionGroup& g, const CherednikParams& p, int linear_char) {
  return twist_report(g, p, linear_char).holds;
}

// ------------------------------------------------------------ AlgebraElement

void AlgebraElement::add_term(const PbwKey& key, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExactScalar AlgebraElement::coeff(const PbwKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? ExactScalar(0) : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const ExactScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::optional<int> AlgebraElement::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [k, c] : terms_) {
    const int dk = std::accumulate(k.x.begin(), k.x.end(), 0) - std::accumulate(k.xi.begin(), k.xi.end(), 0);
    if (d && *d != dk) return std::nullopt;
    d = dk;
  }
  return d;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ");
    first = false;
    os << '(' << c.to_string() << ')';
    for (std::size_t i = 0; i < k.x.size(); ++i)
      if (k.x[i]) os << "*x" << i + 1 << (k.x[i] > 1 ? "^" + std::to_string(k.x[i]) : "");
    if (k.w) os << "*g" << k.w;
    for (std::size_t i = 0; i < k.xi.size(); ++i)
      if (k.xi[i]) os << "*y" << i + 1 << (k.xi[i] > 1 ? "^" + std::to_string(k.xi[i]) : "");
  }
  return os.str();
}

// ---------------------------------------------------------------- Expr

ExprPtr Expr::scalar(const ExactScalar& c) { return ExprPtr(new Expr(Kind::Scalar, 0, c, {})); }
ExprPtr Expr::x(int i) { return ExprPtr(new Expr(Kind::X, i, 0, {})); }
ExprPtr Expr::xi(int i) { return ExprPtr(new Expr(Kind::Xi, i, 0, {})); }
ExprPtr Expr::group(int w) { return ExprPtr(new Expr(Kind::Group, w, 0, {})); }
ExprPtr Expr::sum(std::vector<ExprPtr> terms) { return ExprPtr(new Expr(Kind::Sum, 0, 0, std::move(terms))); }
ExprPtr Expr::product(std::vector<ExprPtr> factors) {
  return ExprPtr(new Expr(Kind::Product, 0, 0, std::move(factors)));
}

std::string Expr::to_string() const {
  switch (kind_) {
    case Kind::Scalar: return "(" + value_.to_string() + ")";
    case Kind::X: return "x" + std::to_string(index_ + 1);
    case Kind::Xi: return "y" + std::to_string(index_ + 1);
    case Kind::Group: return "g" + std::to_string(index_);
    case Kind::Sum:
    case Kind::Product: {
      std::string out = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += kind_ == Kind::Sum ? " + " : " * ";
        out += children_[i]->to_string();
      }
      return out + ")";
    }
  }
  return "";
}

// ---------------------------------------------------------------- algebra

struct CherednikAlgebra::Cache {
  std::mutex mutex;
  std::map<std::pair<int, Exponent>, AlgebraElement> commutators;
  std::map<std::pair<int, Exponent>, Polynomial> images;
};

CherednikAlgebra::CherednikAlgebra(const ReflectionGroup& g, CherednikParams params)
    : group_(&g), params_(std::move(params)), cache_(std::make_unique<Cache>()) {
  if (params_.orbit_count() != g.orbits().size()) throw InvalidArgument("parameters do not match the group");
  gamma_ = gamma_from_k(g, params_);
  const int n = g.rank();
  c_.assign(static_cast<std::size_t>(n) * n, GroupAlgebraElement(g.order()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GroupAlgebraElement& c = c_[i * n + j];
      if (i == j) c.coeffs[ReflectionGroup::identity()] = 1;
      for (std::size_t h = 0; h < g.hyperplanes().size(); ++h) {
        const Hyperplane& hp = g.hyperplanes()[h];
        const ExactScalar f = hp.alpha[i] * hp.v[j];
        if (f.is_zero()) continue;
        ExactScalar pairing;
        for (int t = 0; t < n; ++t) pairing += hp.alpha[t] * hp.v[t];
        c += gamma_[h] * (f / pairing);
      }
    }
}

CherednikAlgebra::CherednikAlgebra(CherednikAlgebra&&) noexcept = default;
CherednikAlgebra& CherednikAlgebra::operator=(CherednikAlgebra&&) noexcept = default;
CherednikAlgebra::~CherednikAlgebra() = default;

AlgebraElement CherednikAlgebra::scalar(const ExactScalar& c) const {
  AlgebraElement a;
  a.add_term({Exponent(rank(), 0), 0, Exponent(rank(), 0)}, c);
  return a;
}

AlgebraElement CherednikAlgebra::x(int i) const {
  PbwKey k{Exponent(rank(), 0), 0, Exponent(rank(), 0)};
  k.x.at(i) = 1;
  AlgebraElement a;
  a.add_term(k, 1);
  return a;
}

AlgebraElement CherednikAlgebra::xi(int i) const {
  PbwKey k{Exponent(rank(), 0), 0, Exponent(rank(), 0)};
  k.xi.at(i) = 1;
  AlgebraElement a;
  a.add_term(k, 1);
  return a;
}

AlgebraElement CherednikAlgebra::group_element(int w) const {
  AlgebraElement a;
  a.add_term({Exponent(rank(), 0), w, Exponent(rank(), 0)}, 1);
  return a;
}

AlgebraElement CherednikAlgebra::from_group_algebra(const GroupAlgebraElement& ga) const {
  AlgebraElement a;
  for (std::size_t w = 0; w < ga.coeffs.size(); ++w)
    a.add_term({Exponent(rank(), 0), static_cast<int>(w), Exponent(rank(), 0)}, ga.coeffs[w]);
  return a;
}

AlgebraElement CherednikAlgebra::from_polynomial(const Polynomial& p) const {
  AlgebraElement a;
  for (const auto& [e, c] : p.terms()) a.add_term({e, 0, Exponent(rank(), 0)}, c);
  return a;
}

const Polynomial& CherednikAlgebra::monomial_image(int w, const Exponent& a) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->images.find({w, a});
    if (it != cache_->images.end()) return it->second;
  }
  Polynomial img = act(*group_, w, Polynomial::monomial(a));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->images.emplace(std::make_pair(w, a), std::move(img)).first->second;
}

AlgebraElement CherednikAlgebra::xi_commutator(int i, const Exponent& a) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->commutators.find({i, a});
    if (it != cache_->commutators.end()) return it->second;
  }
  AlgebraElement out;
  std::size_t j = 0;
  while (j < a.size() && a[j] == 0) ++j;
  if (j < a.size()) {
    Exponent rest = a;
    --rest[j];
    // [xi_i, x_j x^rest] = [xi_i, x_j] x^rest + x_j [xi_i, x^rest]
    const GroupAlgebraElement& cij = commutator_coefficient(i, static_cast<int>(j));
    for (std::size_t w = 0; w < cij.coeffs.size(); ++w) {
      if (cij.coeffs[w].is_zero()) continue;
      for (const auto& [e, c] : monomial_image(static_cast<int>(w), rest).terms())
        out.add_term({e, static_cast<int>(w), Exponent(rank(), 0)}, cij.coeffs[w] * c);
    }
    const AlgebraElement inner = xi_commutator(i, rest);
    for (const auto& [k, c] : inner.terms()) {
      PbwKey shifted = k;
      ++shifted.x[j];
      out.add_term(shifted, c);
    }
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->commutators.emplace(std::make_pair(i, a), out);
  return out;
}

AlgebraElement CherednikAlgebra::left_multiply_xi(int i, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [k, c] : b.terms()) {
    // xi_i h = h (h^{-1} . xi_i), and h^{-1} . xi_i = sum_j (M_{h^{-1}})_{ji} xi_j.
    const ExactMatrix& m = group_->matrix(group_->inverse(k.w));
    for (int j = 0; j < rank(); ++j) {
      if (m(j, i).is_zero()) continue;
      PbwKey t = k;
      ++t.xi[j];
      out.add_term(t, c * m(j, i));
    }
    const AlgebraElement comm = xi_commutator(i, k.x);
    for (const auto& [ck, cc] : comm.terms()) {
      out.add_term({ck.x, group_->mul(ck.w, k.w), k.xi}, c * cc);
    }
  }
  return out;
}

AlgebraElement CherednikAlgebra::left_multiply_group(int w, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [k, c] : b.terms()) {
    const int wh = group_->mul(w, k.w);
    for (const auto& [e, ce] : monomial_image(w, k.x).terms()) out.add_term({e, wh, k.xi}, c * ce);
  }
  return out;
}

AlgebraElement CherednikAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [k, c] : a.terms()) {
    AlgebraElement r = b;
    for (int i = rank() - 1; i >= 0; --i)
      for (int t = 0; t < k.xi[i]; ++t) r = left_multiply_xi(i, r);
    if (k.w != ReflectionGroup::identity()) r = left_multiply_group(k.w, r);
    for (const auto& [rk, rc] : r.terms()) {
      PbwKey t = rk;
      for (int i = 0; i < rank(); ++i) t.x[i] += k.x[i];
      out.add_term(t, c * rc);
    }
  }
  return out;
}

AlgebraElement CherednikAlgebra::commutator(const AlgebraElement& a, const AlgebraElement& b) const {
  return multiply(a, b) - multiply(b, a);
}

AlgebraElement normal_form(const CherednikAlgebra& a, const ExprPtr& e) {
  switch (e->kind()) {
    case Expr::Kind::Scalar: return a.scalar(e->value());
    case Expr::Kind::X: return a.x(e->index());
    case Expr::Kind::Xi: return a.xi(e->index());
    case Expr::Kind::Group: return a.group_element(e->index());
    case Expr::Kind::Sum: {
      AlgebraElement out;
      for (const auto& c : e->children()) out += normal_form(a, c);
      return out;
    }
    case Expr::Kind::Product: {
      AlgebraElement out = a.one();
      for (const auto& c : e->children()) out = a.multiply(out, normal_form(a, c));
      return out;
    }
  }
  return {};
}

EulerElements euler_elements(const CherednikAlgebra& a) {
  EulerElements out;
  for (int i = 0; i < a.rank(); ++i) out.eu_k += a.multiply(a.x(i), a.xi(i));
  out.z = z_element(a.group(), a.params());
  out.eu = out.eu_k - a.from_group_algebra(out.z);
  return out;
}

}  // namespace cherednik
