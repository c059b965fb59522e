#include "cherednik/dunkl.hpp"

#include <map>
#include <mutex>
#include <random>

#include "cherednik/errors.hpp"

namespace cherednik {

DunklOperators::DunklOperators(const ReflectionGroup& g, const CherednikParams& p) : group_(&g) {
  for (std::size_t h = 0; h < g.hyperplanes().size(); ++h) a_.push_back(a_element(g, p, static_cast<int>(h)));
}

Polynomial DunklOperators::apply(const std::vector<ExactScalar>& xi, const Polynomial& p) const {
  Polynomial out = p.directional_derivative(xi);
  for (std::size_t h = 0; h < a_.size(); ++h) {
    const Hyperplane& hp = group_->hyperplanes()[h];
    ExactScalar pairing;
    for (std::size_t i = 0; i < xi.size(); ++i) pairing += hp.alpha[i] * xi[i];
    if (pairing.is_zero() || a_[h].is_zero()) continue;
    out += divide_by_linear(act(*group_, a_[h], p), hp.alpha) * pairing;
  }
  return out;
}

Polynomial DunklOperators::apply(int i, const Polynomial& p) const {
  std::vector<ExactScalar> xi(group_->rank());
  xi.at(i) = 1;
  return apply(xi, p);
}

Polynomial dunkl_apply(const ReflectionGroup& g, const CherednikParams& p, const std::vector<ExactScalar>& xi,
                       const Polynomial& poly) {
  return DunklOperators(g, p).apply(xi, poly);
}

struct StandardModule::Cache {
  std::mutex mutex;
  std::map<std::pair<int, int>, ExactMatrix> xi;
  std::map<std::pair<int, int>, ExactMatrix> group;
  std::map<std::pair<int, int>, ExactMatrix> poly_group;
};

StandardModule::StandardModule(const ReflectionGroup& g, const CherednikParams& p, int irrep)
    : group_(&g), params_(p), irrep_(irrep), cache_(std::make_unique<Cache>()) {
  g.irrep(irrep);
  for (std::size_t h = 0; h < g.hyperplanes().size(); ++h) {
    const Hyperplane& hp = g.hyperplanes()[h];
    std::vector<ExactMatrix> per_i;
    for (int i = 0; i < hp.order; ++i) {
      GroupAlgebraElement combo(g.order());
      for (int j = 0; j < hp.order; ++j) {
        const ExactScalar c = ExactScalar(hp.order) * (p.k(hp.orbit, i + j) - p.k(hp.orbit, j));
        if (!c.is_zero()) combo += g.idempotent(static_cast<int>(h), j) * c;
      }
      per_i.push_back(g.represent(irrep, combo));
    }
    b_.push_back(std::move(per_i));
  }
}

StandardModule::StandardModule(StandardModule&&) noexcept = default;
StandardModule::~StandardModule() = default;

std::size_t StandardModule::layer_dim(int n) const {
  if (n < 0) return 0;
  return monomial_count(group_->rank(), n) * group_->irrep(irrep_).dim;
}

const ExactMatrix& StandardModule::polynomial_group_matrix(int w, int n) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->poly_group.find({w, n});
    if (it != cache_->poly_group.end()) return it->second;
  }
  ExactMatrix m = degree_action_matrix(*group_, w, n);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->poly_group.emplace(std::make_pair(w, n), std::move(m)).first->second;
}

const ExactMatrix& StandardModule::group_matrix(int w, int n) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->group.find({w, n});
    if (it != cache_->group.end()) return it->second;
  }
  ExactMatrix m = ExactMatrix::kron(polynomial_group_matrix(w, n), group_->irrep(irrep_).matrices[w]);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->group.emplace(std::make_pair(w, n), std::move(m)).first->second;
}

ExactMatrix StandardModule::group_algebra_matrix(const GroupAlgebraElement& a, int n) const {
  ExactMatrix m(layer_dim(n), layer_dim(n));
  for (std::size_t w = 0; w < a.coeffs.size(); ++w)
    if (!a.coeffs[w].is_zero()) m += group_matrix(static_cast<int>(w), n) * a.coeffs[w];
  return m;
}

ExactMatrix StandardModule::build_xi_matrix(int i, int n) const {
  const int r = group_->rank();
  const int dim_e = group_->irrep(irrep_).dim;
  const auto src = monomials(r, n);
  const std::size_t rows = monomial_count(r, n - 1);
  // Derivative part.
  ExactMatrix deriv(rows, src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    if (src[c][i] == 0) continue;
    const auto col = to_coordinates(Polynomial::monomial(src[c]).derivative(i), n - 1);
    for (std::size_t k = 0; k < rows; ++k) deriv(k, c) = col[k];
  }
  ExactMatrix out = ExactMatrix::kron(deriv, ExactMatrix::identity(dim_e));
  for (std::size_t h = 0; h < group_->hyperplanes().size(); ++h) {
    const Hyperplane& hp = group_->hyperplanes()[h];
    if (hp.alpha[i].is_zero()) continue;
    for (int e = 1; e < hp.order; ++e) {
      if (b_[h][e].is_zero()) continue;
      // q(m) = eps_e(m) / alpha_H.
      const GroupAlgebraElement eps = group_->idempotent(static_cast<int>(h), e);
      ExactMatrix eps_n(src.size(), src.size());
      for (int w : hp.stabilizer)
        if (!eps.coeffs[w].is_zero()) eps_n += polynomial_group_matrix(w, n) * eps.coeffs[w];
      ExactMatrix q(rows, src.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        bool zero = true;
        for (std::size_t k = 0; k < src.size(); ++k) zero = zero && eps_n(k, c).is_zero();
        if (zero) continue;
        const Polynomial image = from_coordinates(eps_n.col(c), r, n);
        const auto col = to_coordinates(divide_by_linear(image, hp.alpha), n - 1);
        for (std::size_t k = 0; k < rows; ++k) q(k, c) = col[k];
      }
      out += ExactMatrix::kron(q, b_[h][e]) * hp.alpha[i];
    }
  }
  return out;
}

const ExactMatrix& StandardModule::xi_matrix(int i, int n) const {
  if (n < 1) throw InvalidArgument("xi maps layer n to layer n-1; n must be at least 1");
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->xi.find({i, n});
    if (it != cache_->xi.end()) return it->second;
  }
  ExactMatrix m = build_xi_matrix(i, n);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->xi.emplace(std::make_pair(i, n), std::move(m)).first->second;
}

ExactMatrix StandardModule::action_matrix(const std::vector<ExactScalar>& xi, int n) const {
  ExactMatrix m(layer_dim(n - 1), layer_dim(n));
  for (int i = 0; i < group_->rank(); ++i)
    if (!xi.at(i).is_zero()) m += xi_matrix(i, n) * xi[i];
  return m;
}

ExactMatrix delta_action_matrix(const ReflectionGroup& g, const CherednikParams& p, int irrep,
                                const std::vector<ExactScalar>& xi, int n) {
  return StandardModule(g, p, irrep).action_matrix(xi, n);
}

Polynomial act_on_polynomial(const CherednikAlgebra& a, const DunklOperators& t, const AlgebraElement& e,
                             const Polynomial& p) {
  const int n = a.rank();
  Polynomial out(n);
  for (const auto& [k, c] : e.terms()) {
    Polynomial q = p;
    for (int i = 0; i < n && !q.is_zero(); ++i)
      for (int s = 0; s < k.xi[i] && !q.is_zero(); ++s) q = t.apply(i, q);
    if (q.is_zero()) continue;
    q = act(a.group(), k.w, q);
    out += Polynomial::monomial(k.x, c) * q;
  }
  return out;
}

FaithfulnessReport faithfulness_probe(const CherednikAlgebra& a, int N, std::size_t samples, std::uint64_t seed) {
  FaithfulnessReport report;
  const int n = a.rank();
  const ReflectionGroup& g = a.group();
  const DunklOperators t(g, a.params());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, N), coeff(-3, 3), elem(0, g.order() - 1), nterms(1, 4);
  // Test polynomials: all monomials up to degree N + 2.
  std::vector<Polynomial> probes;
  for (int d = 0; d <= N + 2; ++d)
    for (const auto& m : monomials(n, d)) probes.push_back(Polynomial::monomial(m));
  while (report.samples < samples) {
    AlgebraElement e;
    const int terms = nterms(rng);
    for (int s = 0; s < terms; ++s) {
      PbwKey k{Exponent(n, 0), elem(rng), Exponent(n, 0)};
      const int dx = deg(rng), dxi = deg(rng);
      for (int j = 0; j < dx; ++j) ++k.x[std::uniform_int_distribution<int>(0, n - 1)(rng)];
      for (int j = 0; j < dxi; ++j) ++k.xi[std::uniform_int_distribution<int>(0, n - 1)(rng)];
      e.add_term(k, coeff(rng));
    }
    if (e.is_zero()) continue;
    ++report.samples;
    bool nonzero = false;
    for (const auto& p : probes)
      if (!act_on_polynomial(a, t, e, p).is_zero()) {
        nonzero = true;
        break;
      }
    if (!nonzero) {
      ++report.violations;
      report.offending.push_back(e.to_string());
    }
  }
  return report;
}

}  // namespace cherednik
