#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace cherednik::cli {

namespace {

std::string word_label(const ReflectionGroup& g, int w) {
  const auto& word = g.word(w);
  if (word.empty()) return "e";
  std::string r;
  for (int s : word) r += "s" + std::to_string(s + 1);
  return r;
}

std::string csv_number(long double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", fixed(v));
  return buf;
}

// Quotes a CSV field when it contains a separator.
std::string field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + '"';
}

}  // namespace

double stable(long double v) {
  if (!std::isfinite(v)) return static_cast<double>(v);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", static_cast<double>(v));
  const double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;
}

double fixed(long double v) {
  if (!std::isfinite(v)) return static_cast<double>(v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", static_cast<double>(v));
  const double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;
}

Json complex_json(const Complex& z) { return Json::array({fixed(z.real()), fixed(z.imag())}); }

Json matrix_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json group_json(const ReflectionGroup& g) {
  Json j;
  j["name"] = g.name();
  j["rank"] = g.rank();
  j["order"] = g.order();
  j["real"] = g.is_real();
  j["hyperplanes"] = g.hyperplanes().size();
  Json orbits = Json::array();
  for (const auto& o : g.orbits()) {
    orbits.push_back({{"label", o.label}, {"order", o.order}, {"hyperplanes", o.hyperplanes.size()}});
  }
  j["orbits"] = std::move(orbits);
  Json irreps = Json::array();
  for (const auto& e : g.irreps()) irreps.push_back({{"label", e.label}, {"dim", e.dim}});
  j["irreps"] = std::move(irreps);
  Json classes = Json::array();
  for (const auto& c : g.classes()) {
    classes.push_back({{"representative", word_label(g, c.front())}, {"size", c.size()}});
  }
  j["classes"] = std::move(classes);
  Json table = Json::array();
  for (const auto& row : g.character_table()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    table.push_back(std::move(r));
  }
  j["character_table"] = std::move(table);
  return j;
}

Json c_table_json(const ReflectionGroup& g, const CherednikParams& p) {
  Json c = Json::object();
  const auto values = c_table(g, p);
  for (std::size_t e = 0; e < values.size(); ++e) c[g.irrep(static_cast<int>(e)).label] = values[e].to_string();
  return c;
}

Json blocks_json(const ReflectionGroup& g, const BlockPartition& b) {
  Json j;
  Json c = Json::object();
  for (std::size_t e = 0; e < b.c.size(); ++e) c[g.irrep(static_cast<int>(e)).label] = b.c[e].to_string();
  j["c"] = std::move(c);
  Json blocks = Json::array();
  for (const auto& block : b.blocks) {
    Json labels = Json::array();
    for (int e : block) labels.push_back(g.irrep(e).label);
    blocks.push_back(std::move(labels));
  }
  j["blocks"] = std::move(blocks);
  Json order = Json::array();
  for (const auto& [e, f] : b.order) order.push_back(Json::array({g.irrep(e).label, g.irrep(f).label}));
  j["order"] = std::move(order);
  return j;
}

Json character_json(const GradedCharacter& ch) {
  Json j;
  j["N"] = ch.N;
  Json degrees = Json::array();
  for (std::size_t n = 0; n < ch.mults.size(); ++n) {
    Json m = Json::object();
    for (std::size_t f = 0; f < ch.irreps.size(); ++f) m[ch.irreps[f]] = ch.mults[n][f];
    degrees.push_back({{"degree", n}, {"multiplicities", std::move(m)}});
  }
  j["degrees"] = std::move(degrees);
  j["dimensions"] = ch.dimensions();
  return j;
}

Json decomposition_json(const ReflectionGroup& g, const DecompositionMatrix& d) {
  Json j;
  Json labels = Json::array();
  for (int e : d.irreps) labels.push_back(g.irrep(e).label);
  j["irreps"] = std::move(labels);
  j["N"] = d.N;
  j["matrix"] = d.entries;
  j["certified"] = d.certified;
  j["all_certified"] = d.all_certified();
  return j;
}

Json monodromy_json(const MonodromyRep& rep) {
  Json j;
  j["irrep"] = rep.irrep;
  Json gens = Json::array();
  for (const auto& gen : rep.generators) {
    Json eig = Json::array();
    for (const auto& z : gen.eigenvalues) eig.push_back(complex_json(z));
    gens.push_back({{"hyperplane", gen.hyperplane},
                    {"matrix", matrix_json(gen.matrix)},
                    {"hecke_residual", stable(gen.hecke_residual)},
                    {"eigenvalues", std::move(eig)}});
  }
  j["generators"] = std::move(gens);
  j["braid_residual"] = stable(rep.braid_residual);
  j["tol"] = stable(rep.tol);
  return j;
}

Json specht_json(const SpechtOracle& o) {
  Json j;
  j["shape"] = partition_label(o.shape);
  j["q"] = complex_json(o.q);
  Json gens = Json::array();
  for (const auto& m : o.generators) gens.push_back(matrix_json(m));
  j["generators"] = std::move(gens);
  return j;
}

Json comparison_json(const SpechtComparison& c) {
  Json j;
  j["pass"] = c.pass;
  j["dims_match"] = c.dims_match;
  j["monodromy_dim"] = c.kz_dim;
  j["specht_dim"] = c.oracle_dim;
  Json kz = Json::array(), oracle = Json::array();
  for (const auto& z : c.kz_traces) kz.push_back(complex_json(z));
  for (const auto& z : c.oracle_traces) oracle.push_back(complex_json(z));
  j["monodromy_traces"] = std::move(kz);
  j["specht_traces"] = std::move(oracle);
  j["max_difference"] = stable(c.max_difference);
  j["message"] = c.message;
  return j;
}

std::string c_table_csv(const ReflectionGroup& g, const CherednikParams& p) {
  std::ostringstream os;
  os << "irrep,c\n";
  const auto values = c_table(g, p);
  for (std::size_t e = 0; e < values.size(); ++e) {
    os << field(g.irrep(static_cast<int>(e)).label) << ',' << values[e].to_string() << '\n';
  }
  return os.str();
}

std::string blocks_csv(const ReflectionGroup& g, const BlockPartition& b) {
  std::ostringstream os;
  os << "block,irrep,c\n";
  for (std::size_t i = 0; i < b.blocks.size(); ++i) {
    for (int e : b.blocks[i]) os << i << ',' << field(g.irrep(e).label) << ',' << b.c[e].to_string() << '\n';
  }
  return os.str();
}

std::string characters_csv(const std::vector<std::pair<std::string, GradedCharacter>>& chars) {
  std::ostringstream os;
  os << "module,degree";
  if (!chars.empty()) {
    for (const auto& label : chars.front().second.irreps) os << ',' << field(label);
  }
  os << '\n';
  for (const auto& [name, ch] : chars) {
    for (std::size_t n = 0; n < ch.mults.size(); ++n) {
      os << field(name) << ',' << n;
      for (long m : ch.mults[n]) os << ',' << m;
      os << '\n';
    }
  }
  return os.str();
}

std::string decompositions_csv(const ReflectionGroup& g, const std::vector<DecompositionMatrix>& ds) {
  std::ostringstream os;
  os << "block,standard,simple,multiplicity,certified\n";
  for (std::size_t b = 0; b < ds.size(); ++b) {
    const auto& d = ds[b];
    for (std::size_t f = 0; f < d.irreps.size(); ++f) {
      for (std::size_t e = 0; e < d.irreps.size(); ++e) {
        os << b << ',' << field(g.irrep(d.irreps[f]).label) << ',' << field(g.irrep(d.irreps[e]).label) << ','
           << d.entries[f][e] << ',' << (d.certified[f][e] ? "true" : "false") << '\n';
      }
    }
  }
  return os.str();
}

std::string group_csv(const ReflectionGroup& g) {
  std::ostringstream os;
  os << "irrep,dim";
  for (const auto& c : g.classes()) os << ',' << word_label(g, c.front());
  os << '\n';
  const auto table = g.character_table();
  for (std::size_t e = 0; e < table.size(); ++e) {
    os << field(g.irrep(static_cast<int>(e)).label) << ',' << g.irrep(static_cast<int>(e)).dim;
    for (const auto& v : table[e]) os << ',' << v.to_string();
    os << '\n';
  }
  return os.str();
}

std::string monodromy_csv(const std::vector<MonodromyRep>& reps) {
  std::ostringstream os;
  os << "irrep,generator,hyperplane,eigenvalue_re,eigenvalue_im,hecke_residual,braid_residual\n";
  for (const auto& rep : reps) {
    for (std::size_t i = 0; i < rep.generators.size(); ++i) {
      const auto& gen = rep.generators[i];
      for (const auto& z : gen.eigenvalues) {
        os << field(rep.irrep) << ",T" << i + 1 << ',' << gen.hyperplane << ',' << csv_number(z.real()) << ','
           << csv_number(z.imag()) << ',' << stable(gen.hecke_residual) << ',' << stable(rep.braid_residual)
           << '\n';
      }
    }
  }
  return os.str();
}

std::string specht_csv(const SpechtOracle& o) {
  std::ostringstream os;
  os << "generator,row,col,re,im\n";
  for (std::size_t i = 0; i < o.generators.size(); ++i) {
    const auto& m = o.generators[i];
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        os << 'T' << i + 1 << ',' << r << ',' << c << ',' << csv_number(m(r, c).real()) << ','
           << csv_number(m(r, c).imag()) << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace cherednik::cli
