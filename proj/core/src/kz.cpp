#include "cherednik/kz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <numbers>
#include <random>

#include "cherednik/errors.hpp"
#include "cherednik/hecke.hpp"

namespace cherednik {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

Complex dot(const CVector& f, const CVector& x) { return (f.transpose() * x)(0, 0); }

long double max_abs(const CMatrix& m) {
  long double r = 0;
  for (Eigen::Index i = 0; i < m.size(); ++i) r = std::max(r, std::abs(m.data()[i]));
  return r;
}

bool finite(const CMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!std::isfinite(m.data()[i].real()) || !std::isfinite(m.data()[i].imag())) return false;
  }
  return true;
}

CVector to_numeric_vector(const std::vector<ExactScalar>& v, int precision) {
  CVector r(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) r(static_cast<Eigen::Index>(i)) = to_complex(v[i], precision).to_std();
  return r;
}

// Scales a linear form so that its first nonzero coefficient is 1.
std::vector<ExactScalar> monic(std::vector<ExactScalar> v) {
  for (const auto& c : v) {
    if (!c.is_zero()) {
      const ExactScalar inv = c.inverse();
      for (auto& x : v) x *= inv;
      break;
    }
  }
  return v;
}

int element_order(const ReflectionGroup& g, int w) {
  int m = 1;
  for (int p = w; p != ReflectionGroup::identity(); p = g.mul(p, w)) ++m;
  return m;
}

}  // namespace

CMatrix to_numeric(const ExactMatrix& m, int precision) {
  CMatrix r(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_complex(m(i, j), precision).to_std();
    }
  }
  return r;
}

long double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

std::vector<Complex> eigenvalues(const CMatrix& m) {
  if (m.size() == 0) return {};
  Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
  if (solver.info() != Eigen::Success) throw NumericalFailure("eigenvalue computation did not converge");
  std::vector<Complex> r(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(r.begin(), r.end(), [](const Complex& a, const Complex& b) {
    const long double ta = std::arg(a), tb = std::arg(b);
    if (std::abs(ta - tb) > 1e-9L) return ta < tb;
    return std::abs(a) < std::abs(b);
  });
  return r;
}

CVector KZConnection::base() const {
  CVector r(static_cast<Eigen::Index>(base_point.size()));
  for (std::size_t i = 0; i < base_point.size(); ++i) r(static_cast<Eigen::Index>(i)) = to_complex_ld(base_point[i]);
  return r;
}

CMatrix KZConnection::omega(const CVector& x, const CVector& dx) const {
  CMatrix r = CMatrix::Zero(dim, dim);
  for (std::size_t h = 0; h < residues.size(); ++h) {
    r += (dot(forms[h], dx) / dot(forms[h], x)) * residues[h];
  }
  return r;
}

long double KZConnection::relative_clearance(const CVector& x) const {
  long double best = std::numeric_limits<long double>::infinity();
  const long double nx = x.norm();
  for (const auto& f : forms) best = std::min(best, std::abs(dot(f, x)) / (f.norm() * nx));
  return best;
}

long double KZConnection::flatness_residual(int samples, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Eigen::Index n = static_cast<Eigen::Index>(forms.empty() ? 0 : forms.front().size());
  auto random_vector = [&] {
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(u(rng), u(rng));
    return v;
  };
  long double worst = 0;
  for (int s = 0; s < samples;) {
    const CVector x = random_vector();
    if (relative_clearance(x) < 0.05L) continue;
    ++s;
    const CMatrix a = omega(x, random_vector());
    const CMatrix b = omega(x, random_vector());
    const long double scale = std::max<long double>(1, max_abs(a) * max_abs(b));
    worst = std::max(worst, max_abs(a * b - b * a) / scale);
  }
  return worst;
}

long double KZConnection::equivariance_residual() const {
  const auto& hs = group->hyperplanes();
  std::vector<std::vector<ExactScalar>> keys;
  for (const auto& h : hs) keys.push_back(monic(h.alpha));
  long double worst = 0;
  for (int w : group->generators()) {
    const CMatrix rho = to_numeric(group->irrep(irrep).matrices[w]);
    const CMatrix rho_inv = to_numeric(group->irrep(irrep).matrices[group->inverse(w)]);
    for (std::size_t h = 0; h < hs.size(); ++h) {
      const ExactMatrix image = group->dual_matrix(w) * ExactMatrix::column(hs[h].alpha);
      const auto key = monic(image.col(0));
      const auto it = std::find(keys.begin(), keys.end(), key);
      if (it == keys.end()) throw NumericalFailure("hyperplane arrangement is not stable under the group");
      const auto target = static_cast<std::size_t>(it - keys.begin());
      worst = std::max(worst, max_abs(residues[target] - rho * residues[h] * rho_inv));
    }
  }
  return worst;
}

std::vector<ExactScalar> choose_base_point(const ReflectionGroup& g) {
  static constexpr std::array<int, 7> kValues{1, -1, 2, -2, 3, -3, 0};
  const int n = g.rank();
  std::vector<CVector> forms;
  for (const auto& h : g.hyperplanes()) forms.push_back(to_numeric_vector(h.alpha, kDefaultPrecision));
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  std::vector<int> best;
  long double best_score = 0;
  while (true) {
    CVector x(n);
    for (int i = 0; i < n; ++i) x(i) = static_cast<long double>(kValues[digits[i]]);
    if (x.norm() > 0) {
      long double score = std::numeric_limits<long double>::infinity();
      for (const auto& f : forms) score = std::min(score, std::abs(dot(f, x)) / (f.norm() * x.norm()));
      if (score > best_score + 1e-12L) {
        best_score = score;
        best = digits;
      }
    }
    int i = n - 1;
    while (i >= 0 && digits[i] == static_cast<int>(kValues.size()) - 1) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  if (best.empty()) throw NumericalFailure("no regular base point on the search grid");
  std::vector<ExactScalar> r;
  for (int d : best) r.emplace_back(static_cast<long>(kValues[d]));
  return r;
}

KZConnection assemble_connection(const ReflectionGroup& g, const CherednikParams& p, int irrep, int precision) {
  KZConnection c;
  c.group = &g;
  c.irrep = irrep;
  c.dim = g.irrep(irrep).dim;
  for (std::size_t h = 0; h < g.hyperplanes().size(); ++h) {
    c.residues.push_back(to_numeric(g.represent(irrep, a_element(g, p, static_cast<int>(h))), precision));
    c.forms.push_back(to_numeric_vector(g.hyperplanes()[h].alpha, precision));
  }
  c.base_point = choose_base_point(g);
  return c;
}

BraidPath standard_path(const KZConnection& conn, int hyperplane, long double radius) {
  if (!(radius > 0) || radius > 1) throw InvalidArgument("path radius must lie in (0, 1]");
  const Hyperplane& hp = conn.group->hyperplanes().at(static_cast<std::size_t>(hyperplane));
  const CVector f = conn.forms[static_cast<std::size_t>(hyperplane)];
  const CVector x0 = conn.base();
  const CVector v = to_numeric_vector(hp.v, kDefaultPrecision);
  const CVector u = v / dot(f, v);
  const Complex a = dot(f, x0);
  const CVector h = x0 - a * u;
  const long double turn = 2 * kPi / hp.order;
  const Complex zeta = std::polar<long double>(1, turn);
  const long double shrink = 1 - radius;
  const long double r = radius * std::abs(a);
  const long double theta = std::arg(a);

  BraidPath path;
  if (shrink > 0) {
    path.segments.push_back({"inbound", [=](long double t) -> CVector { return h + (a * (1 - t * shrink)) * u; },
                             [=](long double) -> CVector { return (-a * shrink) * u; }});
  }
  path.segments.push_back({"arc",
                           [=](long double t) -> CVector { return h + std::polar(r, theta + t * turn) * u; },
                           [=](long double t) -> CVector {
                             return (Complex(0, turn) * std::polar(r, theta + t * turn)) * u;
                           }});
  if (shrink > 0) {
    path.segments.push_back(
        {"outbound", [=](long double t) -> CVector { return h + (zeta * a * (radius + t * shrink)) * u; },
         [=](long double) -> CVector { return (zeta * a * shrink) * u; }});
  }
  path.min_clearance = std::numeric_limits<long double>::infinity();
  for (const auto& seg : path.segments) {
    for (int i = 0; i <= 64; ++i) {
      path.min_clearance = std::min(path.min_clearance, conn.relative_clearance(seg.point(i / 64.0L)));
    }
  }
  return path;
}

BraidPath reverse_path(const BraidPath& p) {
  BraidPath r;
  r.min_clearance = p.min_clearance;
  for (auto it = p.segments.rbegin(); it != p.segments.rend(); ++it) {
    const auto point = it->point;
    const auto derivative = it->derivative;
    r.segments.push_back({it->name + " (reversed)", [point](long double t) { return point(1 - t); },
                          [derivative](long double t) -> CVector { return -derivative(1 - t); }});
  }
  return r;
}

BraidPath concatenate(const BraidPath& first, const BraidPath& second) {
  BraidPath r = first;
  r.segments.insert(r.segments.end(), second.segments.begin(), second.segments.end());
  r.min_clearance = std::min(first.min_clearance, second.min_clearance);
  return r;
}

CMatrix parallel_transport(const KZConnection& conn, const BraidPath& path, const TransportOptions& opt) {
  // Dormand-Prince 5(4) tableau.
  static constexpr long double c[7] = {0, 1.0L / 5, 3.0L / 10, 4.0L / 5, 8.0L / 9, 1, 1};
  static constexpr long double a[7][6] = {
      {},
      {1.0L / 5},
      {3.0L / 40, 9.0L / 40},
      {44.0L / 45, -56.0L / 15, 32.0L / 9},
      {19372.0L / 6561, -25360.0L / 2187, 64448.0L / 6561, -212.0L / 729},
      {9017.0L / 3168, -355.0L / 33, 46732.0L / 5247, 49.0L / 176, -5103.0L / 18656},
      {35.0L / 384, 0, 500.0L / 1113, 125.0L / 192, -2187.0L / 6784, 11.0L / 84}};
  static constexpr long double b5[7] = {35.0L / 384, 0, 500.0L / 1113, 125.0L / 192, -2187.0L / 6784, 11.0L / 84, 0};
  static constexpr long double b4[7] = {5179.0L / 57600,    0,           7571.0L / 16695, 393.0L / 640,
                                        -92097.0L / 339200, 187.0L / 2100, 1.0L / 40};

  CMatrix phi = CMatrix::Identity(conn.dim, conn.dim);
  if (conn.dim == 0) return phi;
  for (const auto& seg : path.segments) {
    auto rhs = [&](long double t, const CMatrix& y) -> CMatrix {
      return conn.omega(seg.point(t), seg.derivative(t)) * y;
    };
    long double t = 0;
    long double h = 1.0L / 64;
    std::size_t steps = 0;
    std::array<CMatrix, 7> k;
    k[0] = rhs(0, phi);
    while (t < 1) {
      if (++steps > opt.max_steps) throw NumericalFailure("integrator exceeded the step limit on segment " + seg.name);
      h = std::min(h, 1 - t);
      for (int s = 1; s < 7; ++s) {
        CMatrix y = phi;
        for (int j = 0; j < s; ++j) {
          if (a[s][j] != 0) y += (h * a[s][j]) * k[j];
        }
        k[s] = rhs(t + c[s] * h, y);
      }
      CMatrix next = phi;
      CMatrix err = CMatrix::Zero(conn.dim, conn.dim);
      for (int s = 0; s < 7; ++s) {
        if (b5[s] != 0) next += (h * b5[s]) * k[s];
        err += (h * (b5[s] - b4[s])) * k[s];
      }
      if (!finite(next) || !finite(err)) {
        throw NumericalFailure("non-finite values while integrating segment " + seg.name);
      }
      // Error per unit step: the accumulated error over [0, 1] stays below tol.
      const long double allowed = opt.tol * h * std::max<long double>(1, max_abs(next));
      const long double ratio = max_abs(err) / allowed;
      if (ratio <= 1) {
        t += h;
        phi = next;
        k[0] = k[6];
      }
      const long double factor = ratio == 0 ? 5 : std::clamp(0.9L * std::pow(ratio, -0.2L), 0.2L, 5.0L);
      h *= factor;
      if (t < 1 && h < opt.min_step) {
        throw NumericalFailure("step size underflow on segment " + seg.name + " (path too close to a wall)");
      }
    }
  }
  return phi;
}

std::vector<int> braid_generators(const KZConnection& conn) {
  const ReflectionGroup& g = *conn.group;
  const auto& hs = g.hyperplanes();
  std::vector<int> chosen;
  if (!g.is_real()) {
    for (std::size_t h = 0; h < hs.size(); ++h) chosen.push_back(static_cast<int>(h));
  } else {
    const CVector x0 = conn.base();
    for (std::size_t h = 0; h < hs.size(); ++h) {
      const CVector sx = to_numeric(g.matrix(hs[h].generator())) * x0;
      bool simple = true;
      for (std::size_t o = 0; o < hs.size() && simple; ++o) {
        if (o == h) continue;
        simple = dot(conn.forms[o], x0).real() * dot(conn.forms[o], sx).real() > 0;
      }
      if (simple) chosen.push_back(static_cast<int>(h));
    }
  }
  if (chosen.size() <= 2) return chosen;
  // Order along the Coxeter graph, which is a path for the groups in scope.
  const std::size_t m = chosen.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const int st = g.mul(hs[chosen[i]].generator(), hs[chosen[j]].generator());
      if (element_order(g, st) >= 3) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  std::size_t start = 0;
  while (start < m && adj[start].size() > 1) ++start;
  if (start == m) return chosen;
  std::vector<int> ordered;
  std::vector<bool> seen(m, false);
  for (std::size_t cur = start;;) {
    seen[cur] = true;
    ordered.push_back(chosen[cur]);
    auto next = std::find_if(adj[cur].begin(), adj[cur].end(), [&](std::size_t j) { return !seen[j]; });
    if (next == adj[cur].end()) break;
    cur = *next;
  }
  if (ordered.size() != m) return chosen;
  return ordered;
}

CMatrix braid_generator_monodromy(const KZConnection& conn, int hyperplane, const TransportOptions& opt,
                                  long double radius) {
  const int s = conn.group->hyperplanes().at(static_cast<std::size_t>(hyperplane)).generator();
  const CMatrix rho = to_numeric(conn.group->irrep(conn.irrep).matrices[s]);
  return rho * parallel_transport(conn, standard_path(conn, hyperplane, radius), opt);
}

long double hecke_relation_residual(const CMatrix& t, const std::vector<Complex>& roots) {
  const Eigen::Index n = t.rows();
  CMatrix p = CMatrix::Identity(n, n);
  for (const auto& q : roots) p = p * (t - q * CMatrix::Identity(n, n));
  return operator_norm(p);
}

long double braid_relation_residual(const MonodromyRep& rep, const ReflectionGroup& g) {
  long double worst = 0;
  const auto& gens = rep.generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const int m = element_order(g, g.mul(gens[i].reflection, gens[j].reflection));
      CMatrix lhs = CMatrix::Identity(rep.dim, rep.dim);
      CMatrix rhs = lhs;
      for (int f = 0; f < m; ++f) {
        lhs = lhs * (f % 2 == 0 ? gens[i].matrix : gens[j].matrix);
        rhs = rhs * (f % 2 == 0 ? gens[j].matrix : gens[i].matrix);
      }
      worst = std::max(worst, operator_norm(lhs - rhs));
    }
  }
  return worst;
}

MonodromyRep compute_monodromy(const ReflectionGroup& g, const CherednikParams& p, int irrep,
                               const MonodromyOptions& opt) {
  const KZConnection conn = assemble_connection(g, p, irrep, opt.precision);
  const HeckeParams hecke = hecke_parameters(g, p, opt.precision);
  const auto hyperplanes = braid_generators(conn);

  std::vector<std::future<CMatrix>> jobs;
  for (int h : hyperplanes) {
    jobs.push_back(std::async(std::launch::async, [&conn, h, &opt] {
      return braid_generator_monodromy(conn, h, opt.transport, opt.radius);
    }));
  }
  MonodromyRep rep;
  rep.irrep = g.irrep(irrep).label;
  rep.dim = conn.dim;
  rep.tol = opt.transport.tol;
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    MonodromyGenerator gen;
    gen.hyperplane = hyperplanes[i];
    gen.reflection = g.hyperplanes()[hyperplanes[i]].generator();
    gen.matrix = jobs[i].get();
    gen.hecke_residual =
        hecke_relation_residual(gen.matrix, hecke.roots.at(g.hyperplanes()[hyperplanes[i]].orbit));
    gen.eigenvalues = eigenvalues(gen.matrix);
    rep.generators.push_back(std::move(gen));
  }
  rep.braid_residual = braid_relation_residual(rep, g);
  return rep;
}

std::vector<Complex> monodromy_character(const MonodromyRep& rep, const std::vector<std::vector<int>>& words) {
  std::vector<CMatrix> mats;
  for (const auto& gen : rep.generators) mats.push_back(gen.matrix);
  return word_traces(mats, rep.dim, words);
}

}  // namespace cherednik
