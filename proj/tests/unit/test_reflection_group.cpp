#include <gtest/gtest.h>

#include "cherednik/errors.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/reflection_group.hpp"
#include "support.hpp"

using namespace cherednik;

namespace {

struct Expected {
  std::string spec;
  int order;
  int hyperplanes;
  int orbits;
  int irreps;
};

const std::vector<Expected> kTable{
    {"cyclic:2", 2, 1, 1, 2},      {"cyclic:3", 3, 1, 1, 3},      {"cyclic:5", 5, 1, 1, 5},
    {"dihedral:3", 6, 3, 1, 3},    {"dihedral:4", 8, 4, 2, 5},    {"dihedral:5", 10, 5, 1, 4},
    {"dihedral:6", 12, 6, 2, 6},   {"symmetric:2", 2, 1, 1, 2},   {"symmetric:3", 6, 3, 1, 3},
    {"symmetric:4", 24, 6, 1, 5},  {"symmetric:3:perm", 6, 3, 1, 3},
};

}  // namespace

TEST(ReflectionGroup, OrdersHyperplanesOrbitsIrreps) {
  for (const auto& row : kTable) {
    const auto g = build_group(parse_group_spec(row.spec));
    EXPECT_EQ(g.order(), row.order) << row.spec;
    EXPECT_EQ(static_cast<int>(g.hyperplanes().size()), row.hyperplanes) << row.spec;
    EXPECT_EQ(static_cast<int>(g.orbits().size()), row.orbits) << row.spec;
    EXPECT_EQ(static_cast<int>(g.irreps().size()), row.irreps) << row.spec;
    EXPECT_EQ(g.classes().size(), g.irreps().size()) << row.spec;
    int sum = 0;
    for (const auto& e : g.irreps()) sum += e.dim * e.dim;
    EXPECT_EQ(sum, g.order()) << row.spec;
  }
}

TEST(ReflectionGroup, IrrepsAreHomomorphisms) {
  for (const auto& spec : testing_support::core_groups()) {
    const auto g = build_group(parse_group_spec(spec));
    for (const auto& e : g.irreps()) {
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) EXPECT_EQ(e.matrices[a] * e.matrices[b], e.matrices[g.mul(a, b)]);
    }
  }
}

TEST(ReflectionGroup, CharacterOrthogonality) {
  for (const auto& row : kTable) {
    const auto g = build_group(parse_group_spec(row.spec));
    for (const auto& e : g.irreps()) {
      for (const auto& f : g.irreps()) {
        ExactScalar s = 0;
        for (int w = 0; w < g.order(); ++w) s += e.character[w] * f.character[g.inverse(w)];
        EXPECT_EQ(s, ExactScalar(&e == &f ? g.order() : 0)) << row.spec << " " << e.label << " " << f.label;
      }
    }
  }
}

TEST(ReflectionGroup, HyperplaneData) {
  for (const auto& row : kTable) {
    const auto g = build_group(parse_group_spec(row.spec));
    for (const auto& h : g.hyperplanes()) {
      const int s = h.generator();
      EXPECT_EQ(static_cast<int>(h.stabilizer.size()), h.order);
      EXPECT_EQ(g.det(s), ExactScalar::root_of_unity(h.order, -1)) << row.spec;
      const ExactMatrix v = ExactMatrix::column(h.v);
      EXPECT_EQ(g.matrix(s) * v, v * g.det(s));
      const auto diff = g.matrix(s) - ExactMatrix::identity(static_cast<std::size_t>(g.rank()));
      EXPECT_EQ(exact_rank(diff), 1u);
      ExactScalar av = 0;
      for (std::size_t i = 0; i < h.alpha.size(); ++i) av += h.alpha[i] * h.v[i];
      EXPECT_EQ(av, ExactScalar(h.order));
      // alpha vanishes on the fixed space of s: alpha (M_s - I) = (det s - 1) alpha.
      const ExactMatrix a = ExactMatrix::column(h.alpha).transpose();
      EXPECT_EQ(a * diff, a * (g.det(s) - ExactScalar(1)));
    }
  }
}

TEST(ReflectionGroup, Realness) {
  EXPECT_TRUE(build_cyclic(2).is_real());
  EXPECT_FALSE(build_cyclic(3).is_real());
  EXPECT_TRUE(build_dihedral(4).is_real());
  EXPECT_TRUE(build_symmetric(4).is_real());
}

TEST(ReflectionGroup, IdempotentsAndProjectors) {
  for (const auto& spec : testing_support::core_groups()) {
    const auto g = build_group(parse_group_spec(spec));
    for (std::size_t h = 0; h < g.hyperplanes().size(); ++h) {
      const int e = g.hyperplanes()[h].order;
      GroupAlgebraElement total(static_cast<std::size_t>(g.order()));
      for (int j = 0; j < e; ++j) {
        const auto eps = g.idempotent(static_cast<int>(h), j);
        total += eps;
        for (int i = 0; i < e; ++i) {
          const auto prod = g.multiply(eps, g.idempotent(static_cast<int>(h), i));
          EXPECT_EQ(prod, i == j ? eps : GroupAlgebraElement(static_cast<std::size_t>(g.order())));
        }
      }
      EXPECT_EQ(total, g.element(ReflectionGroup::identity()));
    }
    for (std::size_t e = 0; e < g.irreps().size(); ++e) {
      const auto proj = g.isotypic_projector(static_cast<int>(e));
      for (std::size_t f = 0; f < g.irreps().size(); ++f) {
        const auto m = g.represent(static_cast<int>(f), proj);
        if (e == f) EXPECT_TRUE(m.is_identity());
        else EXPECT_TRUE(m.is_zero());
      }
    }
  }
}

TEST(ReflectionGroup, DualAndTwist) {
  const auto z3 = build_cyclic(3);
  EXPECT_EQ(z3.dual_irrep(z3.find_irrep("det^1")), z3.find_irrep("det^2"));
  EXPECT_EQ(z3.dual_irrep(0), 0);
  const auto s3 = build_symmetric(3);
  EXPECT_EQ(s3.twist_irrep(s3.find_irrep("(2,1)"), s3.find_irrep("(1,1,1)")), s3.find_irrep("(2,1)"));
  EXPECT_EQ(s3.twist_irrep(s3.find_irrep("(3)"), s3.find_irrep("(1,1,1)")), s3.find_irrep("(1,1,1)"));
  const auto d4 = build_dihedral(4);
  EXPECT_EQ(d4.twist_irrep(d4.find_irrep("eps1"), d4.find_irrep("sgn")), d4.find_irrep("eps2"));
}

TEST(ReflectionGroup, WordsReproduceElements) {
  for (const auto& spec : testing_support::core_groups()) {
    const auto g = build_group(parse_group_spec(spec));
    for (int w = 0; w < g.order(); ++w) {
      ExactMatrix m = ExactMatrix::identity(static_cast<std::size_t>(g.rank()));
      for (int s : g.word(w)) m = m * g.matrix(g.generators()[s]);
      EXPECT_EQ(m, g.matrix(w));
      EXPECT_EQ(g.find_element(m), w);
    }
  }
}

TEST(ReflectionGroup, SpecErrors) {
  EXPECT_THROW(parse_group_spec("cyclic"), ParseError);
  EXPECT_THROW(parse_group_spec("cyclic:x"), ParseError);
  EXPECT_THROW(parse_group_spec("symmetric:3:weird"), ParseError);
  EXPECT_THROW(build_group(parse_group_spec("banana:3")), Error);
  EXPECT_THROW(build_group(parse_group_spec("symmetric:9")), Error);
  EXPECT_THROW(build_cyclic(3).find_irrep("nope"), InvalidArgument);
}
