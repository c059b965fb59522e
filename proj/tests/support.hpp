#pragma once

#include <random>
#include <string>
#include <vector>

#include "cherednik/cherednik_algebra.hpp"
#include "cherednik/polynomial.hpp"

namespace testing_support {

using namespace cherednik;

/// Groups exercised throughout: Z/2, Z/3, I2(3), I2(4), S3.
inline std::vector<std::string> core_groups() {
  return {"cyclic:2", "cyclic:3", "dihedral:3", "dihedral:4", "symmetric:3"};
}

inline ExactScalar random_rational(std::mt19937& rng, int max_num = 9, int max_den = 9) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  return ExactScalar(num(rng), den(rng));
}

inline CherednikParams random_params(const ReflectionGroup& g, std::mt19937& rng) {
  CherednikParams p(g);
  for (std::size_t o = 0; o < p.orbit_count(); ++o) {
    std::vector<ExactScalar> v;
    for (int j = 1; j < p.orbit_order(static_cast<int>(o)); ++j) v.push_back(random_rational(rng));
    p.set(static_cast<int>(o), v);
  }
  return p;
}

inline Polynomial random_polynomial(int nvars, int max_degree, std::mt19937& rng) {
  Polynomial p = Polynomial::constant(nvars, 0);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& m : monomials(nvars, d)) {
      if (coin(rng) == 0) p.add_term(m, random_rational(rng, 5, 3));
    }
  }
  return p;
}

}  // namespace testing_support
