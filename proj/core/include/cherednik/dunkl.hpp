#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cherednik/cherednik_algebra.hpp"
#include "cherednik/polynomial.hpp"

namespace cherednik {

/// Dunkl operators T_xi = d_xi + sum_H (alpha_H(xi) / alpha_H) a_H on P.
class DunklOperators {
 public:
  DunklOperators(const ReflectionGroup& g, const CherednikParams& p);
  Polynomial apply(const std::vector<ExactScalar>& xi, const Polynomial& p) const;
  /// T along the i-th basis vector of V.
  Polynomial apply(int i, const Polynomial& p) const;

 private:
  const ReflectionGroup* group_;
  std::vector<GroupAlgebraElement> a_;
};

Polynomial dunkl_apply(const ReflectionGroup& g, const CherednikParams& p, const std::vector<ExactScalar>& xi,
                       const Polynomial& poly);

/// Graded layers Delta(E)_n = P_n (x) E with the action of V and W.
/// Basis of layer n: (monomial index) * dim E + (index in E), monomials as in monomials().
class StandardModule {
 public:
  StandardModule(const ReflectionGroup& g, const CherednikParams& p, int irrep);
  StandardModule(StandardModule&&) noexcept;
  ~StandardModule();

  const ReflectionGroup& group() const { return *group_; }
  int irrep() const { return irrep_; }
  std::size_t layer_dim(int n) const;

  /// Matrix of the i-th basis vector of V: layer n -> layer n-1.
  const ExactMatrix& xi_matrix(int i, int n) const;
  ExactMatrix action_matrix(const std::vector<ExactScalar>& xi, int n) const;
  /// Diagonal W-action on layer n.
  const ExactMatrix& group_matrix(int w, int n) const;
  ExactMatrix group_algebra_matrix(const GroupAlgebraElement& a, int n) const;
  /// Action of w on P_n alone.
  const ExactMatrix& polynomial_group_matrix(int w, int n) const;

 private:
  ExactMatrix build_xi_matrix(int i, int n) const;

  const ReflectionGroup* group_;
  CherednikParams params_;
  int irrep_;
  std::vector<std::vector<ExactMatrix>> b_;  // per hyperplane, index i: sum_j e(k_{i+j}-k_j) eps_j on E
  struct Cache;
  std::unique_ptr<Cache> cache_;
};

ExactMatrix delta_action_matrix(const ReflectionGroup& g, const CherednikParams& p, int irrep,
                                const std::vector<ExactScalar>& xi, int n);

/// Action of a normal-form element on P through Dunkl operators.
Polynomial act_on_polynomial(const CherednikAlgebra& a, const DunklOperators& t, const AlgebraElement& e,
                             const Polynomial& p);

struct FaithfulnessReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::vector<std::string> offending;
};

/// Random nonzero elements of bidegree <= (N, N) must act nonzero on P.
FaithfulnessReport faithfulness_probe(const CherednikAlgebra& a, int N, std::size_t samples = 100,
                                      std::uint64_t seed = 1);

}  // namespace cherednik
