#include <numeric>

#include <gtest/gtest.h>

#include "cherednik/young.hpp"

using namespace cherednik;

namespace {

// Hook length formula.
long hook_count(const Partition& p) {
  long n = std::accumulate(p.begin(), p.end(), 0);
  long num = 1;
  for (long i = 2; i <= n; ++i) num *= i;
  long den = 1;
  for (std::size_t r = 0; r < p.size(); ++r) {
    for (int c = 0; c < p[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < p.size(); ++rr)
        if (p[rr] > c) ++below;
      den *= (p[r] - c - 1) + below + 1;
    }
  }
  return num / den;
}

}  // namespace

TEST(Young, PartitionCounts) {
  const std::vector<std::size_t> expected{1, 2, 3, 5, 7, 11};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(partitions(n).size(), expected[n - 1]);
  EXPECT_EQ(partitions(3).front(), (Partition{3}));
  EXPECT_EQ(partition_label({2, 1}), "(2,1)");
}

TEST(Young, TableauCountsMatchHookFormula) {
  for (int n = 1; n <= 6; ++n) {
    long total = 0, fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const auto& p : partitions(n)) {
      const auto count = static_cast<long>(standard_tableaux(p).size());
      EXPECT_EQ(count, hook_count(p)) << partition_label(p);
      total += count * count;
    }
    EXPECT_EQ(total, fact);
  }
}

TEST(Young, SeminormalMatricesSatisfyCoxeterRelations) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& p : partitions(n)) {
      std::vector<ExactMatrix> s;
      for (int i = 1; i < n; ++i) s.push_back(young_seminormal(p, i));
      for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_TRUE((s[i] * s[i]).is_identity()) << partition_label(p);
        for (std::size_t j = i + 1; j < s.size(); ++j) {
          if (j == i + 1) EXPECT_EQ(s[i] * s[j] * s[i], s[j] * s[i] * s[j]);
          else EXPECT_EQ(s[i] * s[j], s[j] * s[i]);
        }
      }
    }
  }
}

TEST(Young, TranspositionCharacterValues) {
  // chi_lambda(transposition) = f_lambda * sum of contents / binom(n, 2).
  for (int n = 2; n <= 5; ++n) {
    for (const auto& p : partitions(n)) {
      long contents = 0;
      for (std::size_t r = 0; r < p.size(); ++r)
        for (int c = 0; c < p[r]; ++c) contents += c - static_cast<long>(r);
      const ExactScalar expected = ExactScalar(hook_count(p) * contents * 2, n * (n - 1));
      EXPECT_EQ(young_seminormal(p, 1).trace(), expected) << partition_label(p);
    }
  }
}
