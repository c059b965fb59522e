// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cherednik/category_o.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/hecke.hpp"
#include "cli/cli.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cherednik;

namespace {

constexpr long double kIntegratorTol = 1e-10L;
constexpr long double kRelationTol = 1e-6L;
constexpr long double kEigenvalueTol = 1e-6L;
constexpr long double kSpechtTol = 1e-5L;
constexpr long double kDegenerationTol = 1e-8L;

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::vector<std::string> kGroups = testing_support::core_groups();

ReflectionGroup group(const std::string& spec) { return build_group(parse_group_spec(spec)); }

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

Outcome dunkl_commutativity() {
  std::mt19937 rng(2024);
  std::size_t checks = 0;
  for (const auto& spec : kGroups) {
    const auto g = group(spec);
    for (int trial = 0; trial < 5; ++trial) {
      const DunklOperators t(g, testing_support::random_params(g, rng));
      for (int d = 0; d <= 6; ++d) {
        for (const auto& m : monomials(g.rank(), d)) {
          const auto p = Polynomial::monomial(m);
          for (int i = 0; i < g.rank(); ++i) {
            for (int j = i + 1; j < g.rank(); ++j) {
              ++checks;
              if (!(t.apply(i, t.apply(j, p)) == t.apply(j, t.apply(i, p)))) {
                return {false, spec + ": [T_" + std::to_string(i) + ", T_" + std::to_string(j) + "] != 0"};
              }
            }
          }
        }
      }
    }
  }
  return {true, std::to_string(checks) + " commutators vanish exactly"};
}

Outcome pbw_relations() {
  std::mt19937 rng(7);
  std::size_t checks = 0;
  for (const auto& spec : kGroups) {
    const auto g = group(spec);
    const auto p = testing_support::random_params(g, rng);
    const CherednikAlgebra a(g, p);
    const auto eu = euler_elements(a).eu;
    for (int i = 0; i < g.rank(); ++i) {
      for (int j = 0; j < g.rank(); ++j) {
        checks += 3;
        if (!a.commutator(a.x(i), a.x(j)).is_zero()) return {false, spec + ": [x, y] != 0"};
        if (!a.commutator(a.xi(i), a.xi(j)).is_zero()) return {false, spec + ": [xi, eta] != 0"};
        if (!(a.commutator(a.xi(i), a.x(j)) == a.from_group_algebra(expected_commutator(g, p, i, j)))) {
          return {false, spec + ": defining commutator differs"};
        }
      }
      checks += 2;
      if (!(a.commutator(eu, a.x(i)) == a.x(i))) return {false, spec + ": [eu, x] != x"};
      if (!(a.commutator(eu, a.xi(i)) == a.xi(i) * ExactScalar(-1))) return {false, spec + ": [eu, xi] != -xi"};
    }
  }
  return {true, std::to_string(checks) + " identities hold in normal form"};
}

Outcome c_function_checks() {
  std::mt19937 rng(11);
  for (const auto& spec : kGroups) {
    const auto g = group(spec);
    CherednikParams zero(g);
    for (std::size_t o = 0; o < zero.orbit_count(); ++o) {
      for (int j = 1; j < zero.orbit_order(static_cast<int>(o)); ++j) {
        auto unit = zero;
        auto v = unit.orbit_values(static_cast<int>(o));
        v[static_cast<std::size_t>(j - 1)] = 1;
        unit.set(static_cast<int>(o), v);
        for (const auto& c : c_table(g, unit)) {
          if (!c.is_rational() || c.rational().get_den() != 1 || c.rational() < 0) {
            return {false, spec + ": unit-vector value " + c.to_string() + " is not a non-negative integer"};
          }
        }
      }
    }
    for (int trial = 0; trial < 5; ++trial) {
      const auto p = testing_support::random_params(g, rng), q = testing_support::random_params(g, rng);
      const auto s = testing_support::random_rational(rng);
      const auto lhs = c_table(g, p * s + q);
      const auto cp = c_table(g, p), cq = c_table(g, q);
      for (std::size_t e = 0; e < lhs.size(); ++e) {
        if (!(lhs[e] == cp[e] * s + cq[e])) return {false, spec + ": c is not linear in k"};
      }
    }
  }
  const auto s3 = group("symmetric:3");
  for (int trial = 0; trial < 5; ++trial) {
    const auto k = testing_support::random_rational(rng);
    const auto c = c_table(s3, CherednikParams::uniform(s3, k));
    if (!(c[0] == ExactScalar(0) && c[1] == k * ExactScalar(3) && c[2] == k * ExactScalar(6))) {
      return {false, "S3 equal-parameter values differ from (0, 3k, 6k)"};
    }
  }
  std::string integral;
  for (const auto& spec : {"cyclic:2", "symmetric:3", "symmetric:4", "dihedral:4", "dihedral:6"}) {
    const auto g = group(spec);
    try {
      a_plus_A_from_c(g, CherednikParams::uniform(g, ExactScalar(1, 5)));
      integral += std::string(" ") + spec;
    } catch (const Error& e) {
      return {false, std::string(spec) + ": " + e.what()};
    }
  }
  return {true, "linear with non-negative integer unit values; S3 = (0,3k,6k); c/k1 integral for" + integral};
}

Outcome semisimplicity() {
  std::size_t ranks = 0;
  for (const auto& spec : kGroups) {
    const auto g = group(spec);
    const auto p = CherednikParams::uniform(g, ExactScalar(1, 7));
    const auto b = blocks(g, p);
    if (!b.order.empty()) return {false, spec + ": linked irreps at k = 1/7"};
    for (std::size_t e = 0; e < g.irreps().size(); ++e) {
      ContravariantTower tower(g, p, static_cast<int>(e));
      for (int n = 0; n <= 8; ++n) {
        ++ranks;
        if (tower.rank(n) != tower.module().layer_dim(n)) {
          return {false, spec + ": Gram rank deficient in degree " + std::to_string(n)};
        }
      }
    }
    for (const auto& block : b.blocks) {
      const auto d = decomposition_matrix(g, p, block, 8);
      for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = 0; j < block.size(); ++j)
          if (d.entries[i][j] != (i == j ? 1 : 0)) return {false, spec + ": decomposition matrix not identity"};
    }
  }
  return {true, std::to_string(ranks) + " Gram ranks full up to degree 8; identity decomposition matrices"};
}

Outcome rank_one_block() {
  const auto g = group("cyclic:2");
  const auto p = CherednikParams::uniform(g, ExactScalar(-1, 2));
  const oracle::Z2Oracle z2{Rational(-1, 2)};
  if (z2.dunkl_coefficient(1, 1) != 0) return {false, "oracle: T(x) != 0 at k = -1/2"};
  const int N = 10;
  // Oracle decomposition: peel simple characters off the standard characters.
  std::map<int, std::vector<int>> simple;
  for (int eps : {1, -1})
    for (int m = 0; m <= N; ++m) simple[eps].push_back(z2.simple_dim(m, eps));
  for (int e = 0; e < 2; ++e) {
    const auto ch = simple_character(g, p, e, N).dimensions();
    for (int m = 0; m <= N; ++m) {
      if (ch[m] != simple[e == 0 ? 1 : -1][m]) return {false, "L character differs from the one-variable oracle"};
    }
  }
  // In Delta(triv), degree m >= 1 carries x^m, so the remainder after L(triv) is Delta(sgn) shifted by c_triv - c_sgn.
  const Rational shift = z2.c(1) - z2.c(-1);
  std::vector<std::vector<long>> oracle_matrix{{1, 0}, {0, 1}};
  bool remainder_is_shifted_standard = shift == 1;
  for (int m = 1; m <= N; ++m) remainder_is_shifted_standard &= simple[1][m] == 0;
  if (remainder_is_shifted_standard) oracle_matrix[0][1] = 1;

  const auto l = simple_character(g, p, 0, N);
  const auto dims = l.dimensions();
  long total = 0;
  for (long d : dims) total += d;
  const auto v = ch_variety_dim(l);
  const auto b = blocks(g, p);
  if (b.blocks.size() != 1) return {false, "triv and sgn are not linked"};
  const auto d = decomposition_matrix(g, p, b.blocks[0], default_truncation(g, p, b.blocks[0]));
  if (total != 1) return {false, "dim L(triv) = " + std::to_string(total)};
  if (v.dimension != 0 || !v.certified) return {false, "characteristic variety of L(triv) not zero-dimensional"};
  if (d.entries != oracle_matrix) return {false, "decomposition matrix differs from the oracle"};
  if (!d.all_certified()) return {false, "decomposition not certified"};
  return {true, "dim L(triv) = 1, growth 0, matrix [[1,1],[0,1]] matches the one-variable oracle"};
}

Outcome standard_costandard() {
  std::size_t checked = 0;
  for (const auto& spec : kGroups) {
    const auto g = group(spec);
    for (std::size_t e = 0; e < g.irreps().size(); ++e) {
      ++checked;
      if (!(delta_character(g, static_cast<int>(e), 8) == nabla_character(g, static_cast<int>(e), 8))) {
        return {false, spec + " " + g.irrep(static_cast<int>(e)).label + ": [Delta] != [Nabla]"};
      }
    }
  }
  return {true, std::to_string(checked) + " modules agree degreewise up to N = 8"};
}

CherednikParams random_linked_params(const ReflectionGroup& g, std::mt19937& rng) {
  static const int dens[] = {1, 2, 3, 4, 6};
  std::uniform_int_distribution<int> num(-6, 6), den(0, 4);
  while (true) {
    CherednikParams p(g);
    for (std::size_t o = 0; o < p.orbit_count(); ++o) {
      std::vector<ExactScalar> v;
      for (int j = 1; j < p.orbit_order(static_cast<int>(o)); ++j) v.emplace_back(num(rng), dens[den(rng)]);
      p.set(static_cast<int>(o), v);
    }
    if (!blocks(g, p).order.empty()) return p;
  }
}

Outcome singular_degree_law() {
  std::mt19937 rng(99);
  std::size_t found = 0, violations = 0;
  for (const auto& spec : kGroups) {
    const auto g = group(spec);
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = random_linked_params(g, rng);
      for (std::size_t e = 0; e < g.irreps().size(); ++e) {
        for (int n = 1; n <= 6; ++n) {
          for (const auto& s : singular_vectors(g, p, static_cast<int>(e), n)) {
            ++found;
            const bool law = c_function(g, p, static_cast<int>(e)) - c_function(g, p, s.isotype) == ExactScalar(n);
            if (!law || !s.degree_law_holds) ++violations;
          }
        }
      }
    }
  }
  if (found == 0) return {false, "no singular vectors found in the sweep"};
  return {violations == 0, std::to_string(found) + " singular spaces, " + std::to_string(violations) + " violations"};
}

struct KzRun {
  std::string spec;
  ExactScalar k;
  int irrep;
  int expected_dim;
  MonodromyRep rep;
  HeckeParams hecke;
};

double kz_seconds = 0;

const std::vector<KzRun>& kz_runs() {
  static const std::vector<KzRun> runs = [] {
    const auto start = std::chrono::steady_clock::now();
    std::vector<KzRun> r;
    MonodromyOptions opt;
    opt.transport.tol = kIntegratorTol;
    for (const auto& spec : kGroups) {
      const auto g = group(spec);
      for (const auto& k : {ExactScalar(1, 5), ExactScalar(1, 3)}) {
        const auto p = CherednikParams::uniform(g, k);
        const auto hecke = hecke_parameters(g, p);
        for (std::size_t e = 0; e < g.irreps().size(); ++e) {
          r.push_back({spec, k, static_cast<int>(e), g.irrep(static_cast<int>(e)).dim,
                       compute_monodromy(g, p, static_cast<int>(e), opt), hecke});
        }
      }
    }
    kz_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }();
  return runs;
}

Outcome kz_rank() {
  for (const auto& run : kz_runs()) {
    if (run.rep.dim != run.expected_dim) return {false, run.spec + " " + run.rep.irrep + ": rank mismatch"};
    for (const auto& gen : run.rep.generators) {
      if (gen.matrix.rows() != run.expected_dim || gen.matrix.cols() != run.expected_dim) {
        return {false, run.spec + " " + run.rep.irrep + ": generator size mismatch"};
      }
    }
  }
  return {true, std::to_string(kz_runs().size()) + " representations have dimension dim E"};
}

Outcome hecke_braid() {
  long double worst_hecke = 0, worst_braid = 0;
  for (const auto& run : kz_runs()) {
    for (const auto& gen : run.rep.generators) worst_hecke = std::max(worst_hecke, gen.hecke_residual);
    worst_braid = std::max(worst_braid, run.rep.braid_residual);
  }
  // Closed form on Z/2: T = -exp(2 pi i k) on sgn.
  long double closed = 0;
  for (const auto& run : kz_runs()) {
    if (run.spec == "cyclic:2" && run.irrep == 1) {
      closed = std::max(closed, std::abs(run.rep.generators[0].matrix(0, 0) + exp_2pi_i(run.k)));
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "max Hecke residual %.2Le, max braid residual %.2Le, Z/2 closed-form error %.2Le, monodromy %.2fs",
                worst_hecke, worst_braid, closed, kz_seconds);
  const bool within_budget = kz_seconds < 300;
  return {worst_hecke < kRelationTol && worst_braid < kRelationTol && closed < kRelationTol && within_budget, buf};
}

Outcome eigenvalue_containment() {
  long double worst = 0;
  std::size_t count = 0;
  for (const auto& run : kz_runs()) {
    const auto g = group(run.spec);
    for (const auto& gen : run.rep.generators) {
      const auto& roots = run.hecke.roots.at(g.hyperplanes()[gen.hyperplane].orbit);
      for (const auto& z : gen.eigenvalues) {
        ++count;
        long double best = std::numeric_limits<long double>::infinity();
        for (const auto& q : roots) best = std::min(best, std::abs(z - q));
        worst = std::max(worst, best);
      }
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "%zu eigenvalues, max distance to the root set %.2Le", count, worst);
  return {worst < kEigenvalueTol, buf};
}

Outcome specht_comparison() {
  const std::vector<std::vector<int>> words{{}, {0}, {1}, {0, 1}, {0, 1, 0}};
  long double worst = 0;
  std::size_t compared = 0;
  for (int n : {3, 4}) {
    const auto g = build_symmetric(n);
    const auto k = ExactScalar(1, 5);
    const auto p = CherednikParams::uniform(g, k);
    MonodromyOptions opt;
    opt.transport.tol = kIntegratorTol;
    for (std::size_t e = 0; e < g.irreps().size(); ++e) {
      const auto rep = compute_monodromy(g, p, static_cast<int>(e), opt);
      const auto shape = partitions(n)[e];
      const auto cmp = compare_with_monodromy(rep, specht_matrices(shape, exp_2pi_i(k)), words, kSpechtTol);
      if (!cmp.pass) return {false, "S" + std::to_string(n) + " " + rep.irrep + ": " + cmp.message};
      worst = std::max(worst, cmp.max_difference);
      ++compared;
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "S3 and S4, %zu irreps, max trace difference %.2Le", compared, worst);
  return {true, buf};
}

Outcome degeneration() {
  long double worst = 0;
  for (const auto& spec : kGroups) {
    const auto g = group(spec);
    const auto zero = CherednikParams(g);
    for (std::size_t e = 0; e < g.irreps().size(); ++e) {
      const auto rep = compute_monodromy(g, zero, static_cast<int>(e));
      for (const auto& gen : rep.generators) {
        worst = std::max(worst, operator_norm(gen.matrix - to_numeric(g.irrep(static_cast<int>(e)).matrices[gen.reflection])));
      }
    }
    const CherednikAlgebra a(g, zero);
    for (int i = 0; i < g.rank(); ++i) {
      for (int j = 0; j < g.rank(); ++j) {
        const auto c = a.commutator(a.xi(i), a.x(j));
        if (i == j ? !(c == a.one()) : !c.is_zero()) return {false, spec + ": [xi_i, x_j] != delta_ij at k = 0"};
      }
      for (int w = 0; w < g.order(); ++w) {
        const auto conj_x = a.multiply(a.multiply(a.group_element(w), a.x(i)), a.group_element(g.inverse(w)));
        if (!(conj_x == a.from_polynomial(Polynomial::linear(g.dual_matrix(w).col(static_cast<std::size_t>(i)))))) {
          return {false, spec + ": w x w^-1 != w.x"};
        }
        const auto conj_xi = a.multiply(a.multiply(a.group_element(w), a.xi(i)), a.group_element(g.inverse(w)));
        AlgebraElement expected;
        for (int r = 0; r < g.rank(); ++r) expected += a.xi(r) * g.matrix(w)(static_cast<std::size_t>(r), static_cast<std::size_t>(i));
        if (!(conj_xi == expected)) return {false, spec + ": w xi w^-1 != w.xi"};
      }
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "max |T_s - rho_E(s)| = %.2Le; Weyl algebra relations exact", worst);
  return {worst < kDegenerationTol, buf};
}

Outcome counting_identity() {
  std::string detail;
  for (const auto& spec : {"cyclic:2", "cyclic:3", "dihedral:3", "dihedral:4", "symmetric:3", "symmetric:4"}) {
    const auto g = group(spec);
    const auto r = endomorphism_count_check(g, CherednikParams::uniform(g, ExactScalar(1, 5)));
    if (!r.holds()) return {false, std::string(spec) + ": sum = " + std::to_string(r.total)};
    detail += std::string(detail.empty() ? "" : ", ") + spec + " " + std::to_string(r.total);
  }
  return {true, detail};
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> jobs{
      {"describe-group", "--group", "dihedral:4"},
      {"c-function", "--group", "cyclic:3", "--param", "O0=2/7,1/5"},
      {"blocks", "--group", "symmetric:3", "--param", "1/3"},
      {"char-L", "--group", "symmetric:3", "--param", "1/3", "--N", "8"},
      {"decomp", "--group", "cyclic:2", "--param", "-1/2"},
      {"kz", "--group", "symmetric:3", "--param", "1/5"},
      {"kz", "--group", "dihedral:4", "--param", "1/3", "--format", "csv"},
  };
  for (const auto& job : jobs) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run(job, a, ea);
    const int cb = cli::run(job, b, eb);
    if (ca != cb || a.str() != b.str() || a.str().empty()) return {false, "output differs for " + job[0]};
  }
  return {true, std::to_string(jobs.size()) + " commands produce byte-identical output"};
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> check;
    double budget_seconds = 0;  // 0: no runtime limit
  };
  const std::vector<Criterion> criteria{
      {"Dunkl commutativity", dunkl_commutativity, 60},
      {"PBW relations", pbw_relations, 10},
      {"c-function", c_function_checks},
      {"semisimplicity at k = 1/7", semisimplicity, 300},
      {"Z/2 block at k = -1/2", rank_one_block},
      {"[Delta] = [Nabla]", standard_costandard},
      {"singular-vector degree law", singular_degree_law},
      {"KZ rank law", kz_rank},
      {"Hecke and braid residuals", hecke_braid, 300},
      {"eigenvalue containment", eigenvalue_containment},
      {"Specht comparison", specht_comparison},
      {"k = 0 degeneration", degeneration},
      {"counting identity", counting_identity},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].budget_seconds > 0 && secs > criteria[i].budget_seconds) {
      o.pass = false;
      o.detail += "; exceeded the " + std::to_string(static_cast<int>(criteria[i].budget_seconds)) + "s budget";
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
