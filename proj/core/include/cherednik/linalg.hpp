#pragma once

#include <optional>
#include <vector>

#include "cherednik/exact_matrix.hpp"

namespace cherednik {

/// Rank by fraction-free (Bareiss) elimination.
std::size_t exact_rank(const ExactMatrix& m);

struct RowEchelon {
  ExactMatrix reduced;               // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

RowEchelon rref(const ExactMatrix& m);

/// Columns form a basis of {v : m v = 0}.
ExactMatrix kernel(const ExactMatrix& m);

/// Basis of the row space, in reduced echelon form.
ExactMatrix row_basis(const ExactMatrix& m);

/// Basis of the column space (a subset of the columns of m).
ExactMatrix column_basis(const ExactMatrix& m);

/// Some x with a x = b, or nullopt if inconsistent.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

ExactMatrix inverse(const ExactMatrix& m);
ExactScalar determinant(const ExactMatrix& m);

}  // namespace cherednik
