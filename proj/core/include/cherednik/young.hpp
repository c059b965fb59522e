#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cherednik/exact_matrix.hpp"

namespace cherednik {

using Partition = std::vector<int>;

/// Partitions of n, largest first part first: (n), (n-1,1), (n-2,2), ...
std::vector<Partition> partitions(int n);

/// "(2,1)" style label.
std::string partition_label(const Partition& p);

/// Standard Young tableau stored as (row, column) of each entry 1..n.
using Tableau = std::vector<std::pair<int, int>>;

/// All standard tableaux of shape p in a fixed deterministic order
/// (the row-reading tableau first).
std::vector<Tableau> standard_tableaux(const Partition& p);

/// Content (column - row) of entry m (1-based) in t.
inline int content(const Tableau& t, int m) { return t[m - 1].second - t[m - 1].first; }

/// Index of the tableau obtained by swapping i and i+1, or -1 when not standard.
int swapped_tableau(const std::vector<Tableau>& all, std::size_t t, int i);

/// Whether, in the pair {t, s_i t}, tableau t is the one listed first in the
/// seminormal construction (i+1 sits in a lower row than i).
bool leads_pair(const Tableau& t, int i);

/// Young's seminormal matrix of the transposition (i, i+1), 1 <= i < n.
ExactMatrix young_seminormal(const Partition& p, int i);

}  // namespace cherednik
