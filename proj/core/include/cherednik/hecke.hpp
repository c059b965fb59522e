#pragma once

#include <map>
#include <string>
#include <vector>

#include "cherednik/kz.hpp"
#include "cherednik/young.hpp"

namespace cherednik {

/// Roots of the Hecke polynomial per hyperplane orbit: roots[o][0] = 1 and
/// roots[o][j] = det(s)^{-j} exp(2 pi i k_{o,j}) for 1 <= j < e.
struct HeckeParams {
  std::vector<std::vector<Complex>> roots;
};

HeckeParams hecke_parameters(const ReflectionGroup& g, const CherednikParams& p, int precision = kDefaultPrecision);

/// exp(2 pi i k) for an exact (possibly non-rational) parameter.
Complex exp_2pi_i(const ExactScalar& k, int precision = kDefaultPrecision);

/// Seminormal matrices of the type A Hecke algebra with (T - 1)(T + q) = 0.
struct SpechtOracle {
  Partition shape;
  Complex q;
  std::vector<CMatrix> generators;  // T_1 .. T_{n-1}
};

/// Throws DegenerateParameter when some 1 - q^rho vanishes.
SpechtOracle specht_matrices(const Partition& shape, Complex q);

/// c_E / k_1 for each irrep; throws InvalidArgument unless all parameters
/// k_{H,1} agree and are nonzero, NumericalFailure if a value is not a
/// non-negative integer.
std::map<std::string, Rational> a_plus_A_from_c(const ReflectionGroup& g, const CherednikParams& p);

struct SpechtComparison {
  bool pass = false;
  bool dims_match = false;
  int kz_dim = 0;
  int oracle_dim = 0;
  std::vector<Complex> kz_traces;
  std::vector<Complex> oracle_traces;
  long double max_difference = 0;
  std::string message;
};

/// Words index generators from 0 in both representations.
SpechtComparison compare_with_monodromy(const MonodromyRep& rep, const SpechtOracle& oracle,
                                        const std::vector<std::vector<int>>& words, long double tol);

/// Traces of word images for any list of generator matrices.
std::vector<Complex> word_traces(const std::vector<CMatrix>& generators, int dim,
                                 const std::vector<std::vector<int>>& words);

}  // namespace cherednik
