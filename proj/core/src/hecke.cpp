#include "cherednik/hecke.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "cherednik/errors.hpp"

namespace cherednik {

Complex exp_2pi_i(const ExactScalar& k, int precision) {
  if (k.is_rational()) return ComplexFloat::exp_2pi_i(k.rational(), precision).to_std();
  const Complex z = to_complex(k, precision).to_std();
  return std::exp(Complex(0, 2 * std::numbers::pi_v<long double>) * z);
}

HeckeParams hecke_parameters(const ReflectionGroup& g, const CherednikParams& p, int precision) {
  HeckeParams r;
  for (std::size_t o = 0; o < g.orbits().size(); ++o) {
    const int e = g.orbits()[o].order;
    std::vector<Complex> roots{Complex(1)};
    for (int j = 1; j < e; ++j) {
      // det(s)^{-j} = zeta_e^j for the distinguished generator.
      const Complex det_power = ComplexFloat::exp_2pi_i(Rational(mpz_class(j), mpz_class(e)), precision).to_std();
      roots.push_back(det_power * exp_2pi_i(p.k(static_cast<int>(o), j), precision));
    }
    r.roots.push_back(std::move(roots));
  }
  return r;
}

SpechtOracle specht_matrices(const Partition& shape, Complex q) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  const auto tabs = standard_tableaux(shape);
  const auto dim = static_cast<Eigen::Index>(tabs.size());
  const bool classical = std::abs(q - Complex(1)) < 1e-12L;
  auto f = [&](int rho) -> Complex {
    if (classical) return Complex(1.0L / rho);
    const Complex denom = Complex(1) - std::pow(q, rho);
    if (std::abs(denom) < 1e-12L) {
      throw DegenerateParameter("1 - q^" + std::to_string(rho) + " vanishes for shape " + partition_label(shape));
    }
    return (Complex(1) - q) / denom;
  };
  SpechtOracle oracle;
  oracle.shape = shape;
  oracle.q = q;
  for (int i = 1; i < n; ++i) {
    CMatrix m = CMatrix::Zero(dim, dim);
    for (std::size_t t = 0; t < tabs.size(); ++t) {
      const int rho = content(tabs[t], i + 1) - content(tabs[t], i);
      const auto ti = static_cast<Eigen::Index>(t);
      m(ti, ti) = f(rho);
      const int u = swapped_tableau(tabs, t, i);
      if (u < 0) continue;
      m(u, ti) = leads_pair(tabs[t], i) ? Complex(1) : f(rho) * f(-rho) + q;
    }
    oracle.generators.push_back(std::move(m));
  }
  return oracle;
}

std::map<std::string, Rational> a_plus_A_from_c(const ReflectionGroup& g, const CherednikParams& p) {
  if (g.orbits().empty()) throw InvalidArgument("group has no reflections");
  const ExactScalar k1 = p.k(0, 1);
  for (std::size_t o = 0; o < g.orbits().size(); ++o) {
    if (!(p.k(static_cast<int>(o), 1) == k1)) throw InvalidArgument("parameters k_{H,1} are not equal");
  }
  if (k1.is_zero()) throw InvalidArgument("k_1 must be nonzero");
  std::map<std::string, Rational> r;
  const auto c = c_table(g, p);
  for (std::size_t e = 0; e < c.size(); ++e) {
    const ExactScalar v = c[e] / k1;
    if (!v.is_rational() || v.rational().get_den() != 1 || v.rational() < 0) {
      throw NumericalFailure("c_E / k_1 = " + v.to_string() + " for " + g.irrep(static_cast<int>(e)).label +
                             " is not a non-negative integer");
    }
    r[g.irrep(static_cast<int>(e)).label] = v.rational();
  }
  return r;
}

std::vector<Complex> word_traces(const std::vector<CMatrix>& generators, int dim,
                                 const std::vector<std::vector<int>>& words) {
  std::vector<Complex> r;
  for (const auto& word : words) {
    CMatrix m = CMatrix::Identity(dim, dim);
    for (int letter : word) {
      if (letter < 0 || static_cast<std::size_t>(letter) >= generators.size()) {
        throw InvalidArgument("word letter " + std::to_string(letter + 1) + " exceeds the number of generators");
      }
      m = m * generators[static_cast<std::size_t>(letter)];
    }
    r.push_back(m.trace());
  }
  return r;
}

SpechtComparison compare_with_monodromy(const MonodromyRep& rep, const SpechtOracle& oracle,
                                        const std::vector<std::vector<int>>& words, long double tol) {
  SpechtComparison r;
  r.kz_dim = rep.dim;
  r.oracle_dim = oracle.generators.empty() ? 1 : static_cast<int>(oracle.generators.front().rows());
  r.dims_match = r.kz_dim == r.oracle_dim && rep.generators.size() == oracle.generators.size();
  if (!r.dims_match) {
    r.message = "dimension mismatch: monodromy " + std::to_string(r.kz_dim) + " with " +
                std::to_string(rep.generators.size()) + " generators, Specht " + std::to_string(r.oracle_dim) +
                " with " + std::to_string(oracle.generators.size()) + " generators";
    return r;
  }
  r.kz_traces = monodromy_character(rep, words);
  r.oracle_traces = word_traces(oracle.generators, r.oracle_dim, words);
  for (std::size_t i = 0; i < words.size(); ++i) {
    r.max_difference = std::max(r.max_difference, std::abs(r.kz_traces[i] - r.oracle_traces[i]));
  }
  r.pass = r.max_difference < tol;
  r.message = r.pass ? "traces agree" : "trace difference exceeds tolerance";
  return r;
}

}  // namespace cherednik
