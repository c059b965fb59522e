#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cherednik/cherednik_algebra.hpp"
#include "cherednik/complex_float.hpp"

namespace cherednik {

using Complex = std::complex<long double>;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

/// The connection d - sum_H (d alpha_H / alpha_H) A_H on V_reg x E.
struct KZConnection {
  const ReflectionGroup* group = nullptr;
  int irrep = 0;
  int dim = 0;
  std::vector<CMatrix> residues;       // A_H, one per hyperplane
  std::vector<CVector> forms;          // alpha_H as complex coefficient vectors
  std::vector<ExactScalar> base_point; // exact rational point of V_reg

  /// Omega(x; dx) = sum_H alpha_H(dx) / alpha_H(x) A_H.
  CMatrix omega(const CVector& x, const CVector& dx) const;
  CVector base() const;
  /// max ||[Omega(x;u), Omega(x;v)]|| over random x, u, v.
  long double flatness_residual(int samples = 16, std::uint64_t seed = 3) const;
  /// max ||A_{wH} - rho(w) A_H rho(w)^{-1}|| over generators w and all H.
  long double equivariance_residual() const;
  /// min_H |alpha_H(x)| / (|alpha_H| |x|).
  long double relative_clearance(const CVector& x) const;
};

KZConnection assemble_connection(const ReflectionGroup& g, const CherednikParams& p, int irrep,
                                 int precision = kDefaultPrecision);

/// Exact rational point of a small integer grid farthest (in angle) from the arrangement.
std::vector<ExactScalar> choose_base_point(const ReflectionGroup& g);

struct PathSegment {
  std::string name;
  std::function<CVector(long double)> point;       // t in [0, 1]
  std::function<CVector(long double)> derivative;
};

struct BraidPath {
  std::vector<PathSegment> segments;
  long double min_clearance = 0;  // sampled minimum of relative_clearance along the path
};

/// Standard path x0 -> s^{-1} x0 turning counterclockwise by 2 pi / e_H in the
/// alpha_H coordinate; `radius` is the turning radius as a fraction of |alpha_H(x0)|.
BraidPath standard_path(const KZConnection& conn, int hyperplane, long double radius = 0.5L);
/// Reversed path.
BraidPath reverse_path(const BraidPath& p);
BraidPath concatenate(const BraidPath& first, const BraidPath& second);

struct TransportOptions {
  long double tol = 1e-10L;
  long double min_step = 1e-14L;
  std::size_t max_steps = 2000000;
};

/// Fundamental solution along the path (adaptive Dormand-Prince 5(4)).
CMatrix parallel_transport(const KZConnection& conn, const BraidPath& path, const TransportOptions& opt = {});

/// Reflections generating the braid group at x0 (simple reflections of the
/// chamber of x0 for real groups), ordered along the Coxeter graph.
std::vector<int> braid_generators(const KZConnection& conn);

/// T_s = rho_E(s) P(x0 -> s^{-1} x0) for the distinguished generator s of W_H.
CMatrix braid_generator_monodromy(const KZConnection& conn, int hyperplane, const TransportOptions& opt = {},
                                  long double radius = 0.5L);

/// Operator 2-norm of (T - 1) prod_j (T - q_{H,j}).
long double hecke_relation_residual(const CMatrix& t, const std::vector<Complex>& roots);

struct MonodromyGenerator {
  int hyperplane = 0;
  int reflection = 0;  // group element s
  CMatrix matrix;
  long double hecke_residual = 0;
  std::vector<Complex> eigenvalues;
};

struct MonodromyRep {
  std::string irrep;
  int dim = 0;
  long double tol = 0;
  std::vector<MonodromyGenerator> generators;
  long double braid_residual = 0;
};

struct MonodromyOptions {
  TransportOptions transport;
  long double radius = 0.5L;
  int precision = kDefaultPrecision;
};

MonodromyRep compute_monodromy(const ReflectionGroup& g, const CherednikParams& p, int irrep,
                               const MonodromyOptions& opt = {});

/// max over generator pairs of ||sts... - tst...|| (m(s,t) factors each side).
long double braid_relation_residual(const MonodromyRep& rep, const ReflectionGroup& g);

/// Word entries are 0-based generator positions; the empty word is the identity.
std::vector<Complex> monodromy_character(const MonodromyRep& rep, const std::vector<std::vector<int>>& words);

/// Eigenvalues of a complex matrix.
std::vector<Complex> eigenvalues(const CMatrix& m);
long double operator_norm(const CMatrix& m);
CMatrix to_numeric(const ExactMatrix& m, int precision = kDefaultPrecision);

}  // namespace cherednik
