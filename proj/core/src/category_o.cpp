#include "cherednik/category_o.hpp"

#include <algorithm>
#include <numeric>

#include "cherednik/errors.hpp"
#include "cherednik/linalg.hpp"

namespace cherednik {
namespace {

// Complete homogeneous symmetric functions h_0..h_N of the eigenvalues of m.
std::vector<ExactScalar> complete_homogeneous(const ExactMatrix& m, int N) {
  std::vector<ExactScalar> power_sums(N + 1);
  ExactMatrix pw = ExactMatrix::identity(m.rows());
  for (int k = 1; k <= N; ++k) {
    pw = pw * m;
    power_sums[k] = pw.trace();
  }
  std::vector<ExactScalar> h(N + 1);
  h[0] = 1;
  for (int n = 1; n <= N; ++n) {
    ExactScalar s;
    for (int k = 1; k <= n; ++k) s += power_sums[k] * h[n - k];
    h[n] = s / ExactScalar(n);
  }
  return h;
}

long to_multiplicity(const ExactScalar& x) {
  if (!x.is_rational() || x.rational().get_den() != 1 || x.rational() < 0)
    throw Error("character inner product is not a natural number: " + x.to_string());
  return x.rational().get_num().get_si();
}

GradedCharacter empty_character(const ReflectionGroup& g, int N) {
  GradedCharacter ch;
  ch.N = N;
  for (const auto& irr : g.irreps()) {
    ch.irreps.push_back(irr.label);
    ch.dims.push_back(irr.dim);
  }
  ch.mults.assign(N + 1, std::vector<long>(g.irreps().size(), 0));
  return ch;
}

// Graded character of S(U) (x) X where U has matrices u(w) and X has character chi_x,
// read against the irreducible characters chi_F(w^{sign}).
GradedCharacter symmetric_tensor_character(const ReflectionGroup& g, int N, bool dual_side, int irrep) {
  GradedCharacter ch = empty_character(g, N);
  const int order = g.order();
  std::vector<std::vector<ExactScalar>> h(order);
  for (int w = 0; w < order; ++w) h[w] = complete_homogeneous(dual_side ? g.matrix(w) : g.dual_matrix(w), N);
  const ExactScalar inv_order(1, order);
  for (int n = 0; n <= N; ++n)
    for (std::size_t f = 0; f < g.irreps().size(); ++f) {
      ExactScalar s;
      for (int w = 0; w < order; ++w) {
        const int wi = g.inverse(w);
        if (dual_side)
          s += h[w][n] * g.irrep(irrep).character[wi] * g.irreps()[f].character[w];
        else
          s += h[w][n] * g.irrep(irrep).character[w] * g.irreps()[f].character[wi];
      }
      ch.mults[n][f] = to_multiplicity(s * inv_order);
    }
  return ch;
}

}  // namespace

std::vector<long> GradedCharacter::dimensions() const {
  std::vector<long> out;
  for (const auto& row : mults) {
    long d = 0;
    for (std::size_t f = 0; f < row.size(); ++f) d += row[f] * dims[f];
    out.push_back(d);
  }
  return out;
}

GradedCharacter delta_character(const ReflectionGroup& g, int irrep, int N) {
  return symmetric_tensor_character(g, N, false, irrep);
}

GradedCharacter nabla_character(const ReflectionGroup& g, int irrep, int N) {
  return symmetric_tensor_character(g, N, true, irrep);
}

// ------------------------------------------------------------- tower

ContravariantTower::ContravariantTower(const ReflectionGroup& g, const CherednikParams& p, int irrep)
    : group_(&g), irrep_(irrep), module_(std::make_unique<StandardModule>(g, p, irrep)) {
  q_.push_back(ExactMatrix::identity(g.irrep(irrep).dim));
}

ContravariantTower::ContravariantTower(ContravariantTower&&) noexcept = default;
ContravariantTower::~ContravariantTower() = default;

const ExactMatrix& ContravariantTower::functionals(int n) {
  if (n < 0) throw InvalidArgument("negative degree");
  while (static_cast<int>(q_.size()) <= n) {
    const int m = static_cast<int>(q_.size());
    const ExactMatrix& prev = q_.back();
    ExactMatrix stacked(0, module_->layer_dim(m));
    if (prev.rows() > 0)
      for (int i = 0; i < group_->rank(); ++i) stacked = ExactMatrix::vstack(stacked, prev * module_->xi_matrix(i, m));
    q_.push_back(stacked.rows() ? row_basis(stacked) : stacked);
  }
  return q_[n];
}

std::size_t ContravariantTower::rank(int n) { return functionals(n).rows(); }

ExactMatrix ContravariantTower::radical(int n) {
  const ExactMatrix& q = functionals(n);
  if (q.rows() == 0) return ExactMatrix::identity(module_->layer_dim(n));
  return kernel(q);
}

ExactMatrix ContravariantTower::projector(int irrep, int n) const {
  const Irrep& f = group_->irrep(irrep);
  const ExactScalar scale(f.dim, group_->order());
  ExactMatrix m(module_->layer_dim(n), module_->layer_dim(n));
  for (int w = 0; w < group_->order(); ++w) {
    const ExactScalar c = f.character[group_->inverse(w)];
    if (!c.is_zero()) m += module_->group_matrix(w, n) * (c * scale);
  }
  return m;
}

std::vector<std::size_t> ContravariantTower::isotype_ranks(int n) {
  const std::size_t r = rank(n);
  std::vector<std::size_t> out(group_->irreps().size(), 0);
  if (r == 0) return out;
  if (r == module_->layer_dim(n)) {
    const auto full = delta_character(*group_, irrep_, n);
    for (std::size_t f = 0; f < out.size(); ++f) out[f] = full.mults[n][f] * full.dims[f];
    return out;
  }
  const ExactMatrix& q = functionals(n);
  for (std::size_t f = 0; f < out.size(); ++f) out[f] = exact_rank(q * projector(static_cast<int>(f), n));
  return out;
}

std::vector<long> ContravariantTower::isotype_multiplicities(int n) {
  const auto ranks = isotype_ranks(n);
  std::vector<long> out;
  for (std::size_t f = 0; f < ranks.size(); ++f) {
    const int d = group_->irreps()[f].dim;
    if (ranks[f] % d != 0) throw Error("isotypic rank is not a multiple of the irrep dimension");
    out.push_back(static_cast<long>(ranks[f] / d));
  }
  return out;
}

ShapovalovRank shapovalov_rank(const ReflectionGroup& g, const CherednikParams& p, int irrep, int n) {
  ContravariantTower t(g, p, irrep);
  return {t.rank(n), t.isotype_ranks(n)};
}

GradedCharacter simple_character(const ReflectionGroup& g, const CherednikParams& p, int irrep, int N) {
  GradedCharacter ch = empty_character(g, N);
  ContravariantTower t(g, p, irrep);
  for (int n = 0; n <= N; ++n) ch.mults[n] = t.isotype_multiplicities(n);
  return ch;
}

// ------------------------------------------------------------- blocks

bool precedes(const ExactScalar& c_e, const ExactScalar& c_f) {
  const ExactScalar d = c_f - c_e;
  return d.is_rational() && d.rational().get_den() == 1 && d.rational() > 0;
}

namespace {
bool integral_difference(const ExactScalar& a, const ExactScalar& b) {
  const ExactScalar d = a - b;
  return d.is_rational() && d.rational().get_den() == 1;
}
}  // namespace

int BlockPartition::block_of(int irrep) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (std::find(blocks[b].begin(), blocks[b].end(), irrep) != blocks[b].end()) return static_cast<int>(b);
  throw InvalidArgument("irrep not in any block");
}

BlockPartition blocks(const ReflectionGroup& g, const CherednikParams& p) {
  BlockPartition out;
  out.c = c_table(g, p);
  const int n = static_cast<int>(out.c.size());
  std::vector<int> block(n, -1);
  for (int e = 0; e < n; ++e) {
    if (block[e] >= 0) continue;
    block[e] = static_cast<int>(out.blocks.size());
    out.blocks.push_back({});
    // Integral difference is already transitive, so one sweep suffices.
    for (int f = e; f < n; ++f)
      if (block[f] < 0 || f == e)
        if (integral_difference(out.c[e], out.c[f])) {
          block[f] = block[e];
          out.blocks.back().push_back(f);
        }
  }
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f)
      if (block[e] == block[f] && precedes(out.c[e], out.c[f])) out.order.emplace_back(e, f);
  return out;
}

// ------------------------------------------------------- decomposition

bool DecompositionMatrix::all_certified() const {
  for (const auto& row : certified)
    for (bool b : row)
      if (!b) return false;
  return true;
}

int default_truncation(const ReflectionGroup& g, const CherednikParams& p, const std::vector<int>& block) {
  const auto c = c_table(g, p);
  long gap = 0;
  for (int e : block)
    for (int f : block)
      if (precedes(c[e], c[f])) gap = std::max(gap, (c[f] - c[e]).rational().get_num().get_si());
  return static_cast<int>(gap) + 4;
}

DecompositionMatrix decomposition_matrix(const ReflectionGroup& g, const CherednikParams& p,
                                         const std::vector<int>& block, int N, bool allow_uncertified) {
  const auto c = c_table(g, p);
  DecompositionMatrix dm;
  dm.irreps = block;
  dm.N = N;
  const std::size_t b = block.size();
  dm.entries.assign(b, std::vector<long>(b, 0));
  dm.certified.assign(b, std::vector<bool>(b, true));

  std::vector<GradedCharacter> simple;
  for (int e : block) simple.push_back(simple_character(g, p, e, N));

  for (std::size_t fi = 0; fi < b; ++fi) {
    const int f = block[fi];
    const GradedCharacter delta = delta_character(g, f, N);
    std::vector<std::vector<long>> residual = delta.mults;
    for (int n = 0; n <= N; ++n)
      for (std::size_t x = 0; x < residual[n].size(); ++x) residual[n][x] -= simple[fi].mults[n][x];
    dm.entries[fi][fi] = 1;
    for (int n = 0; n <= N; ++n) {
      for (std::size_t x = 0; x < residual[n].size(); ++x) {
        const long m = residual[n][x];
        if (m == 0) continue;
        if (m < 0) throw Error("negative residual multiplicity while peeling simple characters");
        auto it = std::find(block.begin(), block.end(), static_cast<int>(x));
        if (it == block.end() || !(c[f] - c[x] == ExactScalar(n)))
          throw Error("constituent " + g.irreps()[x].label + " of the standard module of " + g.irreps()[f].label +
                      " violates the degree law at degree " + std::to_string(n));
        const std::size_t ei = it - block.begin();
        dm.entries[fi][ei] += m;
        for (int d = 0; n + d <= N; ++d)
          for (std::size_t y = 0; y < residual[n + d].size(); ++y) residual[n + d][y] -= m * simple[ei].mults[d][y];
      }
    }
    // An entry is determined once the top of every candidate constituent lies within the window.
    for (std::size_t ei = 0; ei < b; ++ei) {
      const int e = block[ei];
      if (precedes(c[e], c[f]) && (c[f] - c[e]).rational() > N) dm.certified[fi][ei] = false;
    }
  }
  if (!allow_uncertified && !dm.all_certified())
    throw Uncertified("decomposition matrix needs a truncation degree above " + std::to_string(N));
  return dm;
}

// ------------------------------------------------------- singular vectors

std::vector<SingularSpace> singular_vectors(const ReflectionGroup& g, const CherednikParams& p, int irrep, int n) {
  if (n < 1) throw InvalidArgument("singular vectors live in degrees n >= 1");
  ContravariantTower t(g, p, irrep);
  const StandardModule& m = t.module();
  ExactMatrix stacked(0, m.layer_dim(n));
  for (int i = 0; i < g.rank(); ++i) stacked = ExactMatrix::vstack(stacked, m.xi_matrix(i, n));
  const ExactMatrix k = kernel(stacked);
  std::vector<SingularSpace> out;
  if (k.cols() == 0) return out;
  const auto c = c_table(g, p);
  for (std::size_t f = 0; f < g.irreps().size(); ++f) {
    ExactMatrix basis = column_basis(t.projector(static_cast<int>(f), n) * k);
    if (basis.cols() == 0) continue;
    SingularSpace s;
    s.isotype = static_cast<int>(f);
    s.multiplicity = basis.cols() / g.irreps()[f].dim;
    s.basis = std::move(basis);
    s.degree_law_holds = c[irrep] - c[f] == ExactScalar(n);
    out.push_back(std::move(s));
  }
  return out;
}

// ------------------------------------------------------- growth

VarietyDimension ch_variety_dim(const GradedCharacter& ch) {
  if (ch.N < 8) throw InvalidArgument("growth estimate needs a character truncated at N >= 8");
  const std::vector<long> dims = ch.dimensions();
  const int window = (ch.N + 2) / 3;
  auto vanishes = [&](const std::vector<long>& s) {
    if (static_cast<int>(s.size()) < window) return false;
    return std::all_of(s.end() - window, s.end(), [](long v) { return v == 0; });
  };
  std::vector<long> seq = dims;
  std::vector<long> previous;
  for (int j = 0; j + window <= static_cast<int>(dims.size()); ++j) {
    if (vanishes(seq)) {
      VarietyDimension out{j, true};
      if (j > 0) {
        // The previous difference must be a nonzero constant on the window.
        const long v = previous.back();
        out.certified = v != 0 && std::all_of(previous.end() - window, previous.end(), [v](long x) { return x == v; });
      }
      return out;
    }
    previous = seq;
    std::vector<long> next;
    for (std::size_t i = 1; i < seq.size(); ++i) next.push_back(seq[i] - seq[i - 1]);
    seq = std::move(next);
  }
  return {static_cast<int>(dims.size()) - window + 1, false};
}

EndomorphismCount endomorphism_count_check(const ReflectionGroup& g, const CherednikParams& p, int degree) {
  (void)p;  // generic ranks do not depend on the parameter
  EndomorphismCount out;
  out.group_order = g.order();
  const long p_dim = static_cast<long>(monomial_count(g.rank(), degree));
  for (std::size_t e = 0; e < g.irreps().size(); ++e) {
    const long d = g.irreps()[e].dim;
    out.sum_of_squares += d * d;
    const long delta_total = delta_character(g, static_cast<int>(e), degree).dimensions()[degree];
    const long nabla_total = nabla_character(g, static_cast<int>(e), degree).dimensions()[degree];
    if (delta_total % p_dim != 0 || nabla_total % p_dim != 0)
      throw Error("standard module is not free of constant rank over P");
    out.total += (delta_total / p_dim) * (nabla_total / p_dim);
  }
  return out;
}

}  // namespace cherednik
