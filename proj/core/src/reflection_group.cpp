#include "cherednik/reflection_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "cherednik/errors.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/young.hpp"

namespace cherednik {

bool GroupAlgebraElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const ExactScalar& c) { return c.is_zero(); });
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size());
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size());
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const ExactScalar& s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

namespace {

// Scale a nonzero linear form so its first nonzero entry is 1; rational forms
// are further scaled to primitive integer vectors.
std::vector<ExactScalar> normalize_form(std::vector<ExactScalar> a) {
  std::size_t first = 0;
  while (first < a.size() && a[first].is_zero()) ++first;
  if (first == a.size()) throw InvalidArgument("zero linear form");
  const ExactScalar inv = a[first].inverse();
  for (auto& c : a) c *= inv;
  if (std::all_of(a.begin(), a.end(), [](const ExactScalar& c) { return c.is_rational(); })) {
    mpz_class den = 1, num = 0;
    for (const auto& c : a) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
    }
    for (const auto& c : a) {
      const mpz_class scaled = c.rational().get_num() * (den / c.rational().get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
    }
    const ExactScalar factor(Rational(den, num));
    for (auto& c : a) c *= factor;
  }
  return a;
}

std::vector<ExactScalar> row_times(const std::vector<ExactScalar>& row, const ExactMatrix& m) {
  std::vector<ExactScalar> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!row[i].is_zero() && !m(i, j).is_zero()) out[j] += row[i] * m(i, j);
  return out;
}

}  // namespace

ReflectionGroup::ReflectionGroup(std::string name, std::vector<ExactMatrix> generators,
                                 std::vector<IrrepSpec> irreps)
    : name_(std::move(name)) {
  if (generators.empty()) throw InvalidArgument("a group needs at least one generator");
  rank_ = static_cast<int>(generators.front().rows());
  close_under_multiplication(generators);
  find_hyperplanes();
  build_irreps(irreps);
}

int ReflectionGroup::find_element(const ExactMatrix& m) const {
  auto it = lookup_.find(m.to_string());
  return it == lookup_.end() ? -1 : it->second;
}

void ReflectionGroup::close_under_multiplication(const std::vector<ExactMatrix>& gens) {
  const ExactMatrix id = ExactMatrix::identity(rank_);
  matrices_.push_back(id);
  words_.push_back({});
  lookup_[id.to_string()] = 0;
  std::vector<int> gen_index(gens.size(), -1);
  // Breadth-first search by right multiplication keeps words shortest.
  for (std::size_t w = 0; w < matrices_.size(); ++w) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      ExactMatrix prod = matrices_[w] * gens[g];
      const std::string key = prod.to_string();
      if (lookup_.count(key)) continue;
      if (matrices_.size() > 4096) throw InvalidArgument("group generated is too large or infinite");
      lookup_[key] = static_cast<int>(matrices_.size());
      auto word = words_[w];
      word.push_back(static_cast<int>(g));
      matrices_.push_back(std::move(prod));
      words_.push_back(std::move(word));
    }
  }
  for (const auto& g : gens) generators_.push_back(find_element(g));
  const int n = order();
  table_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int c = find_element(matrices_[a] * matrices_[b]);
      if (c < 0) throw InvalidArgument("generated set is not closed");
      table_[a * n + b] = c;
    }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) inverse_[a] = b;
  for (int a = 0; a < n; ++a) {
    dual_.push_back(matrices_[inverse_[a]].transpose());
    det_.push_back(determinant(matrices_[a]));
  }
  std::vector<bool> seen(n, false);
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<int> cls;
    for (int g = 0; g < n; ++g) {
      const int c = mul(mul(g, a), inverse_[g]);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

void ReflectionGroup::find_hyperplanes() {
  const ExactMatrix id = ExactMatrix::identity(rank_);
  std::map<std::string, int> by_form;
  std::vector<std::vector<int>> reflections;
  for (int w = 1; w < order(); ++w) {
    const ExactMatrix d = matrices_[w] - id;
    if (exact_rank(d) != 1) continue;
    std::size_t r = 0;
    while (d.row(r) == std::vector<ExactScalar>(rank_)) ++r;
    auto alpha = normalize_form(d.row(r));
    std::string key;
    for (const auto& c : alpha) key += c.to_string() + "|";
    auto [it, inserted] = by_form.emplace(key, static_cast<int>(hyperplanes_.size()));
    if (inserted) {
      Hyperplane h;
      h.alpha = alpha;
      std::size_t c = 0;
      while (d.col(c) == std::vector<ExactScalar>(rank_)) ++c;
      h.v = d.col(c);
      hyperplanes_.push_back(std::move(h));
      reflections.push_back({});
    }
    reflections[it->second].push_back(w);
  }
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    Hyperplane& h = hyperplanes_[i];
    h.order = static_cast<int>(reflections[i].size()) + 1;
    const ExactScalar target = ExactScalar::root_of_unity(h.order, -1);
    int s = -1;
    for (int w : reflections[i])
      if (det_[w] == target) s = w;
    if (s < 0) throw InvalidArgument("reflection subgroup is not cyclic of the expected order");
    h.stabilizer = {0};
    for (int k = 1; k < h.order; ++k) h.stabilizer.push_back(mul(h.stabilizer.back(), s));
    ExactScalar pairing;
    for (int j = 0; j < rank_; ++j) pairing += h.alpha[j] * h.v[j];
    const ExactScalar scale = ExactScalar(h.order) / pairing;
    for (auto& c : h.v) c *= scale;
  }
  // Orbits: alpha_{gH} is proportional to alpha_H o g^{-1}.
  std::vector<int> parent(hyperplanes_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
    for (int g : generators_) {
      auto image = normalize_form(row_times(hyperplanes_[i].alpha, matrices_[inverse_[g]]));
      std::string key;
      for (const auto& c : image) key += c.to_string() + "|";
      auto it = by_form.find(key);
      if (it == by_form.end()) throw InvalidArgument("arrangement is not W-stable");
      parent[find(static_cast<int>(i))] = find(it->second);
    }
  std::map<int, int> orbit_of_root;
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    const int root = find(static_cast<int>(i));
    auto [it, inserted] = orbit_of_root.emplace(root, static_cast<int>(orbits_.size()));
    if (inserted) {
      HyperplaneOrbit o;
      o.label = "O" + std::to_string(orbits_.size());
      o.order = hyperplanes_[i].order;
      orbits_.push_back(o);
    }
    hyperplanes_[i].orbit = it->second;
    orbits_[it->second].hyperplanes.push_back(static_cast<int>(i));
  }
}

void ReflectionGroup::build_irreps(const std::vector<IrrepSpec>& specs) {
  for (const auto& spec : specs) {
    if (spec.generator_images.size() != generators_.size())
      throw InvalidArgument("irrep " + spec.label + ": wrong number of generator images");
    Irrep irr;
    irr.label = spec.label;
    irr.dim = static_cast<int>(spec.generator_images.front().rows());
    for (int w = 0; w < order(); ++w) {
      ExactMatrix m = ExactMatrix::identity(irr.dim);
      for (int g : words_[w]) m = m * spec.generator_images[g];
      irr.character.push_back(m.trace());
      irr.matrices.push_back(std::move(m));
    }
    for (int a = 0; a < order(); ++a)
      for (std::size_t g = 0; g < generators_.size(); ++g)
        if (!(irr.matrices[a] * spec.generator_images[g] == irr.matrices[mul(a, generators_[g])]))
          throw InvalidArgument("irrep " + spec.label + " violates the group relations");
    irreps_.push_back(std::move(irr));
  }
}

int ReflectionGroup::find_irrep(const std::string& label) const {
  for (std::size_t i = 0; i < irreps_.size(); ++i)
    if (irreps_[i].label == label) return static_cast<int>(i);
  throw InvalidArgument("unknown irrep '" + label + "' for group " + name_);
}

std::vector<std::vector<ExactScalar>> ReflectionGroup::character_table() const {
  std::vector<std::vector<ExactScalar>> table;
  for (const auto& irr : irreps_) {
    std::vector<ExactScalar> row;
    for (const auto& cls : classes_) row.push_back(irr.character[cls.front()]);
    table.push_back(std::move(row));
  }
  return table;
}

int ReflectionGroup::irrep_with_character(const std::vector<ExactScalar>& chi) const {
  for (std::size_t i = 0; i < irreps_.size(); ++i)
    if (irreps_[i].character == chi) return static_cast<int>(i);
  return -1;
}

int ReflectionGroup::dual_irrep(int e) const {
  std::vector<ExactScalar> chi(order());
  for (int w = 0; w < order(); ++w) chi[w] = irreps_[e].character[inverse_[w]];
  const int d = irrep_with_character(chi);
  if (d < 0) throw InvalidArgument("irrep list is not closed under duality");
  return d;
}

int ReflectionGroup::twist_irrep(int e, int linear) const {
  if (irreps_[linear].dim != 1) throw InvalidArgument("twisting requires a one-dimensional character");
  std::vector<ExactScalar> chi(order());
  for (int w = 0; w < order(); ++w) chi[w] = irreps_[e].character[w] * irreps_[linear].character[w];
  const int t = irrep_with_character(chi);
  if (t < 0) throw InvalidArgument("irrep list is not closed under twisting");
  return t;
}

bool ReflectionGroup::is_real() const {
  for (std::size_t e = 0; e < irreps_.size(); ++e)
    if (dual_irrep(static_cast<int>(e)) != static_cast<int>(e)) return false;
  return true;
}

GroupAlgebraElement ReflectionGroup::element(int w, const ExactScalar& c) const {
  GroupAlgebraElement a(order());
  a.coeffs[w] = c;
  return a;
}

GroupAlgebraElement ReflectionGroup::multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const {
  GroupAlgebraElement out(order());
  for (std::size_t x = 0; x < a.coeffs.size(); ++x) {
    if (a.coeffs[x].is_zero()) continue;
    for (std::size_t y = 0; y < b.coeffs.size(); ++y)
      if (!b.coeffs[y].is_zero()) out.coeffs[mul(static_cast<int>(x), static_cast<int>(y))] += a.coeffs[x] * b.coeffs[y];
  }
  return out;
}

ExactMatrix ReflectionGroup::represent(int irrep, const GroupAlgebraElement& a) const {
  const Irrep& irr = irreps_.at(irrep);
  ExactMatrix m(irr.dim, irr.dim);
  for (std::size_t w = 0; w < a.coeffs.size(); ++w)
    if (!a.coeffs[w].is_zero()) m += irr.matrices[w] * a.coeffs[w];
  return m;
}

GroupAlgebraElement ReflectionGroup::idempotent(int hyperplane, int j) const {
  const Hyperplane& h = hyperplanes_.at(hyperplane);
  if (j < 0 || j >= h.order) throw InvalidArgument("idempotent index out of range");
  GroupAlgebraElement out(order());
  const ExactScalar inv(1, h.order);
  for (int w : h.stabilizer) out.coeffs[w] += det_[w].pow(j) * inv;
  return out;
}

GroupAlgebraElement ReflectionGroup::isotypic_projector(int irrep) const {
  const Irrep& irr = irreps_.at(irrep);
  GroupAlgebraElement out(order());
  const ExactScalar scale(irr.dim, order());
  for (int w = 0; w < order(); ++w) out.coeffs[w] = irr.character[inverse_[w]] * scale;
  return out;
}

ReflectionGroup build_cyclic(int e) {
  if (e < 2 || e > 12) throw InvalidArgument("cyclic groups are supported for 2 <= e <= 12");
  const ExactScalar z = ExactScalar::root_of_unity(e, 1);
  std::vector<IrrepSpec> irreps;
  for (int j = 0; j < e; ++j) {
    std::string label = "det^" + std::to_string(j);
    if (e == 2) label = j == 0 ? "triv" : "sgn";
    irreps.push_back({label, {ExactMatrix{{z.pow(j)}}}});
  }
  return ReflectionGroup("cyclic:" + std::to_string(e), {ExactMatrix{{z}}}, irreps);
}

ReflectionGroup build_dihedral(int m) {
  if (m < 3 || m > 8) throw InvalidArgument("dihedral groups are supported for 3 <= m <= 8");
  const ExactScalar zeta2m = ExactScalar::root_of_unity(2 * m, 1);
  const ExactScalar c = zeta2m + zeta2m.inverse();  // 2 cos(pi/m)
  const ExactMatrix s1{{-1, c}, {0, 1}};
  const ExactMatrix s2{{1, 0}, {c, -1}};
  std::vector<IrrepSpec> irreps;
  irreps.push_back({"triv", {ExactMatrix{{1}}, ExactMatrix{{1}}}});
  irreps.push_back({"sgn", {ExactMatrix{{-1}}, ExactMatrix{{-1}}}});
  if (m % 2 == 0) {
    irreps.push_back({"eps1", {ExactMatrix{{1}}, ExactMatrix{{-1}}}});
    irreps.push_back({"eps2", {ExactMatrix{{-1}}, ExactMatrix{{1}}}});
  }
  for (int j = 1; 2 * j < m; ++j) {
    const ExactScalar zj = ExactScalar::root_of_unity(m, j);
    irreps.push_back({"rho" + std::to_string(j),
                      {ExactMatrix{{0, 1}, {1, 0}}, ExactMatrix{{0, zj.inverse()}, {zj, 0}}}});
  }
  return ReflectionGroup("dihedral:" + std::to_string(m), {s1, s2}, irreps);
}

ReflectionGroup build_symmetric(int n, bool reflection_rep) {
  if (n < 2 || n > 4) throw InvalidArgument("symmetric groups are supported for 2 <= n <= 4");
  std::vector<ExactMatrix> gens;
  for (int i = 0; i + 1 < n; ++i) {
    if (reflection_rep) {
      // Basis f_j = e_j - e_{j+1}.
      ExactMatrix s = ExactMatrix::identity(n - 1);
      s(i, i) = -1;
      if (i > 0) s(i, i - 1) = 1;
      if (i + 2 < n) s(i, i + 1) = 1;
      gens.push_back(s);
    } else {
      ExactMatrix s = ExactMatrix::identity(n);
      s(i, i) = 0;
      s(i + 1, i + 1) = 0;
      s(i, i + 1) = 1;
      s(i + 1, i) = 1;
      gens.push_back(s);
    }
  }
  std::vector<IrrepSpec> irreps;
  for (const auto& p : partitions(n)) {
    IrrepSpec spec{partition_label(p), {}};
    for (int i = 1; i < n; ++i) spec.generator_images.push_back(young_seminormal(p, i));
    irreps.push_back(std::move(spec));
  }
  return ReflectionGroup("symmetric:" + std::to_string(n) + (reflection_rep ? "" : ":perm"), gens, irreps);
}

GroupSpec parse_group_spec(const std::string& text) {
  GroupSpec spec;
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) throw ParseError("group spec must look like family:param");
  spec.family = parts[0];
  try {
    std::size_t used = 0;
    spec.param = std::stoi(parts[1], &used);
    if (used != parts[1].size()) throw ParseError("");
  } catch (...) {
    throw ParseError("group parameter '" + parts[1] + "' is not an integer");
  }
  if (parts.size() == 3) {
    if (parts[2] == "perm") spec.reflection_rep = false;
    else if (parts[2] == "refl") spec.reflection_rep = true;
    else throw ParseError("unknown group variant '" + parts[2] + "'");
  }
  return spec;
}

ReflectionGroup build_group(const GroupSpec& spec) {
  if (spec.family == "cyclic") return build_cyclic(spec.param);
  if (spec.family == "dihedral") return build_dihedral(spec.param);
  if (spec.family == "symmetric") return build_symmetric(spec.param, spec.reflection_rep);
  throw InvalidArgument("unknown group family '" + spec.family + "'");
}

}  // namespace cherednik
