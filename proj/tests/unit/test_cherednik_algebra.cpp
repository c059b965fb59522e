#include <random>

#include <gtest/gtest.h>

#include "cherednik/cherednik_algebra.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/rewriting.hpp"
#include "support.hpp"

using namespace cherednik;

namespace {

// [xi_i, x_j] = delta_ij + sum_H alpha_H(e_i) v_H(e_j) / alpha_H(v_H) sum_{w in W_H} c_w w, where
// c_w = sum_j det(w)^j (k_{j+1} - k_j), written out directly from the hyperplane data.
GroupAlgebraElement expected_commutator(const ReflectionGroup& g, const CherednikParams& p, int i, int j) {
  GroupAlgebraElement r(static_cast<std::size_t>(g.order()));
  if (i == j) r += g.element(ReflectionGroup::identity());
  for (const auto& h : g.hyperplanes()) {
    ExactScalar pairing = 0;
    for (std::size_t t = 0; t < h.alpha.size(); ++t) pairing += h.alpha[t] * h.v[t];
    const ExactScalar scale = h.alpha[i] * h.v[j] / pairing;
    if (scale.is_zero()) continue;
    for (int w : h.stabilizer) {
      ExactScalar c = 0;
      for (int t = 0; t < h.order; ++t) c += g.det(w).pow(t) * (p.k(h.orbit, t + 1) - p.k(h.orbit, t));
      r += g.element(w, c * scale);
    }
  }
  return r;
}

std::vector<AlgebraElement> generators(const CherednikAlgebra& a) {
  std::vector<AlgebraElement> r;
  for (int i = 0; i < a.rank(); ++i) {
    r.push_back(a.x(i));
    r.push_back(a.xi(i));
  }
  for (int w : a.group().generators()) r.push_back(a.group_element(w));
  return r;
}

ExprPtr random_word(const ReflectionGroup& g, std::mt19937& rng, int length) {
  std::vector<ExprPtr> letters;
  std::uniform_int_distribution<int> kind(0, 2), var(0, g.rank() - 1), elem(0, g.order() - 1);
  for (int t = 0; t < length; ++t) {
    switch (kind(rng)) {
      case 0: letters.push_back(Expr::x(var(rng))); break;
      case 1: letters.push_back(Expr::xi(var(rng))); break;
      default: letters.push_back(Expr::group(elem(rng))); break;
    }
  }
  return Expr::product(letters);
}

}  // namespace

TEST(Parameters, GammaRoundTrip) {
  std::mt19937 rng(1);
  for (const auto& spec : testing_support::core_groups()) {
    const auto g = build_group(parse_group_spec(spec));
    for (int trial = 0; trial < 5; ++trial) {
      const auto p = testing_support::random_params(g, rng);
      const auto gamma = gamma_from_k(g, p);
      for (std::size_t h = 0; h < g.hyperplanes().size(); ++h) {
        const auto k = k_from_gamma(g, static_cast<int>(h), gamma[h]);
        const int orbit = g.hyperplanes()[h].orbit;
        for (std::size_t j = 0; j < k.size(); ++j) EXPECT_EQ(k[j], p.k(orbit, static_cast<int>(j) + 1));
      }
    }
  }
}

TEST(Parameters, ParseForms) {
  const auto d4 = build_dihedral(4);
  const auto p = CherednikParams::parse(d4, "O0=1/3;O1=1/5");
  EXPECT_EQ(p.k(0, 1), ExactScalar(1, 3));
  EXPECT_EQ(p.k(1, 1), ExactScalar(1, 5));
  const auto z3 = build_cyclic(3);
  const auto q = CherednikParams::parse(z3, "O0=2/7,1/5");
  EXPECT_EQ(q.k(0, 1), ExactScalar(2, 7));
  EXPECT_EQ(q.k(0, 2), ExactScalar(1, 5));
  EXPECT_EQ(q.k(0, 3), ExactScalar(0));
  EXPECT_EQ(CherednikParams::parse(z3, "1/4").k(0, 2), ExactScalar(1, 4));
  EXPECT_THROW(CherednikParams::parse(z3, "O7=1"), Error);
  EXPECT_THROW(CherednikParams::parse(z3, "O0=1,2,3"), Error);
}

TEST(Relations, DefiningCommutatorsAsNormalForms) {
  std::mt19937 rng(2);
  for (const auto& spec : testing_support::core_groups()) {
    const auto g = build_group(parse_group_spec(spec));
    for (int trial = 0; trial < 3; ++trial) {
      const auto p = testing_support::random_params(g, rng);
      const CherednikAlgebra a(g, p);
      for (int i = 0; i < g.rank(); ++i) {
        for (int j = 0; j < g.rank(); ++j) {
          EXPECT_TRUE(a.commutator(a.x(i), a.x(j)).is_zero());
          EXPECT_TRUE(a.commutator(a.xi(i), a.xi(j)).is_zero()) << spec;
          EXPECT_EQ(a.commutator(a.xi(i), a.x(j)), a.from_group_algebra(expected_commutator(g, p, i, j))) << spec;
        }
      }
      for (int w = 0; w < g.order(); ++w) {
        for (int i = 0; i < g.rank(); ++i) {
          // w x_i w^{-1} is the linear form w . x_i.
          const auto lhs = a.multiply(a.multiply(a.group_element(w), a.x(i)), a.group_element(g.inverse(w)));
          const auto col = g.dual_matrix(w).col(static_cast<std::size_t>(i));
          EXPECT_EQ(lhs, a.from_polynomial(Polynomial::linear(col)));
        }
      }
    }
  }
}

TEST(Relations, EulerElement) {
  std::mt19937 rng(3);
  for (const auto& spec : testing_support::core_groups()) {
    const auto g = build_group(parse_group_spec(spec));
    const CherednikAlgebra a(g, testing_support::random_params(g, rng));
    const auto eu = euler_elements(a).eu;
    for (int i = 0; i < g.rank(); ++i) {
      EXPECT_EQ(a.commutator(eu, a.x(i)), a.x(i)) << spec;
      EXPECT_EQ(a.commutator(eu, a.xi(i)), a.xi(i) * ExactScalar(-1)) << spec;
    }
    for (int w = 0; w < g.order(); ++w) EXPECT_TRUE(a.commutator(eu, a.group_element(w)).is_zero());
  }
}

TEST(Relations, ZeroParameterGivesWeylAlgebraSmashProduct) {
  for (const auto& spec : testing_support::core_groups()) {
    const auto g = build_group(parse_group_spec(spec));
    const CherednikAlgebra a(g, CherednikParams(g));
    for (int i = 0; i < g.rank(); ++i)
      for (int j = 0; j < g.rank(); ++j)
        if (i == j) EXPECT_EQ(a.commutator(a.xi(i), a.x(j)), a.one());
        else EXPECT_TRUE(a.commutator(a.xi(i), a.x(j)).is_zero());
    EXPECT_TRUE(euler_elements(a).z.is_zero());
  }
}

TEST(NormalForm, AssociativityOnRandomTriples) {
  std::mt19937 rng(4);
  for (const auto& spec : testing_support::core_groups()) {
    const auto g = build_group(parse_group_spec(spec));
    const CherednikAlgebra a(g, testing_support::random_params(g, rng));
    const auto gens = generators(a);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      const auto& u = gens[pick(rng)];
      const auto v = a.multiply(gens[pick(rng)], gens[pick(rng)]);
      const auto& w = gens[pick(rng)];
      EXPECT_EQ(a.multiply(a.multiply(u, v), w), a.multiply(u, a.multiply(v, w))) << spec;
    }
  }
}

TEST(NormalForm, RewritingStrategiesAgree) {
  std::mt19937 rng(5);
  for (const auto& spec : testing_support::core_groups()) {
    const auto g = build_group(parse_group_spec(spec));
    const CherednikAlgebra a(g, testing_support::random_params(g, rng));
    const WordRewriter rightmost(a, WordRewriter::Strategy::RightmostFirst);
    const WordRewriter random(a, WordRewriter::Strategy::Random, 99);
    for (int trial = 0; trial < 10; ++trial) {
      const auto word = random_word(g, rng, 5);
      const auto nf = normal_form(a, word);
      EXPECT_EQ(rightmost.rewrite(word), nf) << word->to_string();
      EXPECT_EQ(random.rewrite(word), nf) << word->to_string();
    }
  }
}

TEST(NormalForm, Grading) {
  const auto g = build_symmetric(3);
  const CherednikAlgebra a(g, CherednikParams::uniform(g, ExactScalar(1, 3)));
  EXPECT_EQ(a.x(0).homogeneous_degree(), 1);
  EXPECT_EQ(a.xi(1).homogeneous_degree(), -1);
  EXPECT_EQ(a.group_element(3).homogeneous_degree(), 0);
  EXPECT_EQ(a.multiply(a.xi(0), a.x(1)).homogeneous_degree(), 0);
  EXPECT_FALSE((a.x(0) + a.scalar(1)).homogeneous_degree().has_value());
}

TEST(CFunction, SymmetricGroupValues) {
  const auto g = build_symmetric(3);
  const auto c = c_table(g, CherednikParams::uniform(g, ExactScalar(1)));
  EXPECT_EQ(c, (std::vector<ExactScalar>{0, 3, 6}));
  const auto ck = c_table(g, CherednikParams::uniform(g, ExactScalar(2, 7)));
  EXPECT_EQ(ck, (std::vector<ExactScalar>{0, ExactScalar(6, 7), ExactScalar(12, 7)}));
  const auto z2 = build_cyclic(2);
  EXPECT_EQ(c_table(z2, CherednikParams::uniform(z2, ExactScalar(1, 2))), (std::vector<ExactScalar>{0, 1}));
}

TEST(CFunction, LinearWithNonNegativeIntegerUnitValues) {
  std::mt19937 rng(6);
  for (const auto& spec : testing_support::core_groups()) {
    const auto g = build_group(parse_group_spec(spec));
    CherednikParams zero(g);
    for (std::size_t o = 0; o < zero.orbit_count(); ++o) {
      for (int j = 1; j < zero.orbit_order(static_cast<int>(o)); ++j) {
        auto unit = zero;
        auto v = unit.orbit_values(static_cast<int>(o));
        v[static_cast<std::size_t>(j - 1)] = 1;
        unit.set(static_cast<int>(o), v);
        for (const auto& c : c_table(g, unit)) {
          ASSERT_TRUE(c.is_rational()) << spec;
          EXPECT_EQ(c.rational().get_den(), 1) << spec;
          EXPECT_GE(c.rational(), 0) << spec;
        }
      }
    }
    for (int trial = 0; trial < 5; ++trial) {
      const auto p = testing_support::random_params(g, rng), q = testing_support::random_params(g, rng);
      const auto s = testing_support::random_rational(rng);
      const auto lhs = c_table(g, p * s + q);
      const auto cp = c_table(g, p), cq = c_table(g, q);
      for (std::size_t e = 0; e < lhs.size(); ++e) EXPECT_EQ(lhs[e], cp[e] * s + cq[e]);
    }
    EXPECT_EQ(c_table(g, zero)[0], ExactScalar(0));
  }
}

TEST(CFunction, ZIsCentralAndActsByC) {
  std::mt19937 rng(8);
  for (const auto& spec : testing_support::core_groups()) {
    const auto g = build_group(parse_group_spec(spec));
    const auto p = testing_support::random_params(g, rng);
    const auto z = z_element(g, p);
    for (int w = 0; w < g.order(); ++w) EXPECT_EQ(g.multiply(z, g.element(w)), g.multiply(g.element(w), z));
    for (std::size_t e = 0; e < g.irreps().size(); ++e) {
      ExactScalar c;
      ASSERT_TRUE(g.represent(static_cast<int>(e), z).is_scalar(&c));
      EXPECT_EQ(c, c_function(g, p, static_cast<int>(e)));
    }
  }
}

TEST(CFunction, TwistByLinearCharactersShiftsUniformly) {
  std::mt19937 rng(10);
  for (const auto& spec : testing_support::core_groups()) {
    const auto g = build_group(parse_group_spec(spec));
    const auto p = testing_support::random_params(g, rng);
    for (std::size_t e = 0; e < g.irreps().size(); ++e) {
      if (g.irrep(static_cast<int>(e)).dim != 1) continue;
      EXPECT_TRUE(twist_check(g, p, static_cast<int>(e))) << spec << " " << g.irrep(static_cast<int>(e)).label;
    }
  }
}
