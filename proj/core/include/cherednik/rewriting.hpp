#pragma once

#include <cstdint>
#include <vector>

#include "cherednik/cherednik_algebra.hpp"

namespace cherednik {

/// Second, independent route to the normal form: rewriting words in the
/// letters x_i, w, xi_i with the defining relations as oriented rules.
class WordRewriter {
 public:
  enum class Strategy { RightmostFirst, Random };

  explicit WordRewriter(const CherednikAlgebra& algebra, Strategy strategy = Strategy::RightmostFirst,
                        std::uint64_t seed = 0);

  AlgebraElement rewrite(const ExprPtr& e) const;

  /// Total number of rule applications in the last call (diagnostics).
  std::size_t last_steps() const { return steps_; }

 private:
  const CherednikAlgebra* algebra_;
  Strategy strategy_;
  std::uint64_t seed_;
  mutable std::size_t steps_ = 0;
};

}  // namespace cherednik
