#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "cherednik/errors.hpp"
#include "cherednik/hecke.hpp"

using namespace cherednik;

namespace {

double dist(const CMatrix& a, const CMatrix& b) { return static_cast<double>(operator_norm(a - b)); }

}  // namespace

TEST(HeckeParams, Examples) {
  const auto z2 = build_cyclic(2);
  const auto half = hecke_parameters(z2, CherednikParams::uniform(z2, ExactScalar(1, 2)));
  EXPECT_LT(std::abs(half.roots[0][1] - Complex(1)), 1e-15L);
  const auto z3 = build_cyclic(3);
  const auto zero = hecke_parameters(z3, CherednikParams(z3));
  for (int j = 0; j < 3; ++j) {
    EXPECT_LT(std::abs(zero.roots[0][j] - to_complex_ld(ExactScalar::root_of_unity(3, j))), 1e-15L);
  }
  const auto s3 = build_symmetric(3);
  const auto fifth = hecke_parameters(s3, CherednikParams::uniform(s3, ExactScalar(1, 5)));
  EXPECT_LT(std::abs(fifth.roots[0][1] + exp_2pi_i(ExactScalar(1, 5))), 1e-15L);
  for (const auto& r : fifth.roots[0]) EXPECT_NEAR(static_cast<double>(std::abs(r)), 1.0, 1e-15);
}

TEST(Specht, QuadraticAndBraidRelations) {
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> angle(0.05, 0.45);
  for (int trial = 0; trial < 5; ++trial) {
    const Complex q = std::polar<long double>(1, 2 * 3.14159265358979323846L * angle(rng));
    for (int n = 2; n <= 4; ++n) {
      for (const auto& shape : partitions(n)) {
        const auto o = specht_matrices(shape, q);
        const auto d = o.generators.front().rows();
        const CMatrix id = CMatrix::Identity(d, d);
        for (std::size_t i = 0; i < o.generators.size(); ++i) {
          const auto& t = o.generators[i];
          EXPECT_LT(operator_norm((t - id) * (t + q * id)), 1e-10L);
          for (std::size_t j = i + 1; j < o.generators.size(); ++j) {
            const auto& u = o.generators[j];
            if (j == i + 1) EXPECT_LT(dist(t * u * t, u * t * u), 1e-10);
            else EXPECT_LT(dist(t * u, u * t), 1e-10);
          }
        }
      }
    }
  }
}

TEST(Specht, ExtremeShapesAndClassicalLimit) {
  const Complex q = exp_2pi_i(ExactScalar(1, 5));
  for (const auto& t : specht_matrices({4}, q).generators) EXPECT_LT(std::abs(t(0, 0) - Complex(1)), 1e-15L);
  for (const auto& t : specht_matrices({1, 1, 1, 1}, q).generators) EXPECT_LT(std::abs(t(0, 0) + q), 1e-15L);
  for (int i = 1; i <= 3; ++i) {
    const auto classical = specht_matrices({3, 1}, Complex(1)).generators[i - 1];
    EXPECT_LT(dist(classical, to_numeric(young_seminormal({3, 1}, i))), 1e-15);
  }
}

TEST(Specht, DimensionsSquareSumToFactorial) {
  const Complex q = exp_2pi_i(ExactScalar(1, 7));
  for (int n = 2; n <= 4; ++n) {
    long total = 0;
    for (const auto& shape : partitions(n)) {
      const auto o = specht_matrices(shape, q);
      const auto tr = word_traces(o.generators, static_cast<int>(o.generators.front().rows()), {{}});
      total += std::lround(static_cast<double>(tr[0].real() * tr[0].real()));
    }
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    EXPECT_EQ(total, fact);
  }
}

TEST(Specht, DegenerateParameterIsReported) {
  EXPECT_THROW(specht_matrices({2, 1}, Complex(-1)), DegenerateParameter);
  EXPECT_NO_THROW(specht_matrices({2, 1}, exp_2pi_i(ExactScalar(1, 5))));
}

TEST(CFunctionIntegrality, EqualParameterValues) {
  const auto s3 = build_symmetric(3);
  const auto v = a_plus_A_from_c(s3, CherednikParams::uniform(s3, ExactScalar(1, 5)));
  EXPECT_EQ(v.at("(3)"), 0);
  EXPECT_EQ(v.at("(2,1)"), 3);
  EXPECT_EQ(v.at("(1,1,1)"), 6);
  const auto z2 = build_cyclic(2);
  const auto w = a_plus_A_from_c(z2, CherednikParams::uniform(z2, ExactScalar(1, 3)));
  EXPECT_EQ(w.at("triv"), 0);
  EXPECT_EQ(w.at("sgn"), 2);
  const auto s4 = build_symmetric(4);
  for (const auto& [label, value] : a_plus_A_from_c(s4, CherednikParams::uniform(s4, ExactScalar(1)))) {
    EXPECT_GE(value, 0) << label;
  }
  const auto d4 = build_dihedral(4);
  EXPECT_THROW(a_plus_A_from_c(d4, CherednikParams::parse(d4, "O0=1;O1=2")), InvalidArgument);
  EXPECT_THROW(a_plus_A_from_c(s3, CherednikParams(s3)), InvalidArgument);
}

TEST(Comparison, SymmetricGroupsMatchSpecht) {
  const std::vector<std::vector<int>> words{{}, {0}, {1}, {0, 1}, {0, 1, 0}};
  for (int n : {3, 4}) {
    const auto g = build_symmetric(n);
    const auto k = ExactScalar(1, 5);
    const auto p = CherednikParams::uniform(g, k);
    for (std::size_t e = 0; e < g.irreps().size(); ++e) {
      const auto rep = compute_monodromy(g, p, static_cast<int>(e));
      const auto shape = partitions(n)[e];
      ASSERT_EQ(partition_label(shape), rep.irrep);
      const auto cmp = compare_with_monodromy(rep, specht_matrices(shape, exp_2pi_i(k)), words, 1e-5L);
      EXPECT_TRUE(cmp.pass) << rep.irrep << " " << cmp.message << " " << cmp.max_difference;
    }
  }
}

TEST(Comparison, ZeroParameterMatchesClassicalCharacters) {
  const auto g = build_symmetric(3);
  for (std::size_t e = 0; e < g.irreps().size(); ++e) {
    const auto rep = compute_monodromy(g, CherednikParams(g), static_cast<int>(e));
    const auto cmp = compare_with_monodromy(rep, specht_matrices(partitions(3)[e], Complex(1)), {{}, {0}, {0, 1}}, 1e-8L);
    EXPECT_TRUE(cmp.pass) << rep.irrep;
  }
}

TEST(Comparison, DimensionMismatchFails) {
  const auto g = build_symmetric(3);
  const auto rep = compute_monodromy(g, CherednikParams::uniform(g, ExactScalar(1, 5)), 0);
  const auto cmp = compare_with_monodromy(rep, specht_matrices({2, 1}, exp_2pi_i(ExactScalar(1, 5))), {{}}, 1e-5L);
  EXPECT_FALSE(cmp.pass);
  EXPECT_FALSE(cmp.dims_match);
  EXPECT_NE(cmp.message.find("1"), std::string::npos);
  EXPECT_NE(cmp.message.find("2"), std::string::npos);
}
