#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cherednik/errors.hpp"
#include "serialize.hpp"

namespace cherednik::cli {

namespace {

constexpr long double kSpechtTolerance = 1e-5L;
const std::vector<std::pair<std::string, std::string>> kCommands{
    {"describe-group", "reflections, hyperplanes, orbits and irreducible representations"},
    {"c-function", "c-function value on every irreducible representation"},
    {"blocks", "blocks of category O and the linkage order"},
    {"char-L", "graded characters of the standard and simple modules up to degree N"},
    {"decomp", "decomposition matrices [Delta(F) : L(E)] per block"},
    {"kz", "monodromy of the KZ connection with Hecke and braid checks"},
    {"specht", "seminormal Specht module matrices of the type A Hecke algebra"},
};

// Failure of a result check; carries the exit code and is reported after the output is written.
struct CheckFailure {
  int code = kOk;
  std::string message;
  void raise(int c, std::string m) {
    if (code == kOk) {
      code = c;
      message = std::move(m);
    }
  }
};

template <typename T>
T field(const Json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("config field '" + key + "' has the wrong type");
  }
}

ReflectionGroup make_group(const JobConfig& cfg) {
  if (cfg.group.empty()) throw InvalidArgument("group: no group given (use --group family:param)");
  try {
    return build_group(parse_group_spec(cfg.group));
  } catch (const Error& e) {
    throw InvalidArgument(std::string("group: ") + e.what());
  }
}

CherednikParams make_params(const ReflectionGroup& g, const JobConfig& cfg) {
  try {
    return CherednikParams::parse(g, cfg.param);
  } catch (const Error& e) {
    throw InvalidArgument(std::string("param: ") + e.what());
  }
}

std::vector<int> selected_irreps(const ReflectionGroup& g, const JobConfig& cfg) {
  if (!cfg.irrep.empty()) {
    try {
      return {g.find_irrep(cfg.irrep)};
    } catch (const Error& e) {
      throw InvalidArgument(std::string("irrep: ") + e.what());
    }
  }
  std::vector<int> all(g.irreps().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return all;
}

// "e,T1,T2,T1T2" -> {{}, {0}, {1}, {0, 1}}.
std::vector<std::vector<int>> parse_words(const std::string& text) {
  std::vector<std::vector<int>> words;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    std::vector<int> word;
    if (item != "e" && item != "1") {
      std::size_t pos = 0;
      while (pos < item.size()) {
        if (item[pos] != 'T') throw InvalidArgument("words: cannot parse '" + item + "'");
        std::size_t end = pos + 1;
        while (end < item.size() && std::isdigit(static_cast<unsigned char>(item[end]))) ++end;
        if (end == pos + 1) throw InvalidArgument("words: missing generator index in '" + item + "'");
        const int index = std::stoi(item.substr(pos + 1, end - pos - 1));
        if (index < 1) throw InvalidArgument("words: generator indices start at 1");
        word.push_back(index - 1);
        pos = end;
      }
    }
    words.push_back(std::move(word));
  }
  if (words.empty()) throw InvalidArgument("words: empty word list");
  return words;
}

std::string word_label(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string r;
  for (int i : word) r += "T" + std::to_string(i + 1);
  return r;
}

std::vector<std::vector<int>> default_words(std::size_t generators) {
  std::vector<std::vector<int>> words{{}};
  for (std::size_t i = 0; i < generators; ++i) words.push_back({static_cast<int>(i)});
  if (generators >= 2) {
    std::vector<int> coxeter;
    for (std::size_t i = 0; i < generators; ++i) coxeter.push_back(static_cast<int>(i));
    words.push_back(coxeter);
  }
  return words;
}

Partition parse_shape(const std::string& text) {
  Partition p;
  std::string digits;
  for (char c : text + ",") {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == ',' || c == ')') {
      if (!digits.empty()) p.push_back(std::stoi(digits));
      digits.clear();
    } else if (c != '(' && !std::isspace(static_cast<unsigned char>(c))) {
      throw InvalidArgument("shape: cannot parse '" + text + "'");
    }
  }
  if (p.empty() || !std::is_sorted(p.rbegin(), p.rend()) || p.back() < 1) {
    throw InvalidArgument("shape: '" + text + "' is not a partition");
  }
  return p;
}

Json header(const ReflectionGroup& g, const CherednikParams& p) {
  Json j;
  j["group"] = g.name();
  j["params"] = p.to_string();
  return j;
}

struct Output {
  Json json;
  std::string csv;
};

Output cmd_describe_group(const JobConfig& cfg, CheckFailure&) {
  const auto g = make_group(cfg);
  return {group_json(g), group_csv(g)};
}

Output cmd_c_function(const JobConfig& cfg, CheckFailure&) {
  const auto g = make_group(cfg);
  const auto p = make_params(g, cfg);
  Json j = header(g, p);
  j["c"] = c_table_json(g, p);
  return {j, c_table_csv(g, p)};
}

Output cmd_blocks(const JobConfig& cfg, CheckFailure&) {
  const auto g = make_group(cfg);
  const auto p = make_params(g, cfg);
  const auto b = blocks(g, p);
  Json j = header(g, p);
  j.update(blocks_json(g, b));
  return {j, blocks_csv(g, b)};
}

Output cmd_char_l(const JobConfig& cfg, CheckFailure& check) {
  const auto g = make_group(cfg);
  const auto p = make_params(g, cfg);
  const int N = cfg.N.value_or(8);
  if (N < 0) throw InvalidArgument("N: must be non-negative");
  Json j = header(g, p);
  j["N"] = N;
  Json modules = Json::array();
  std::vector<std::pair<std::string, GradedCharacter>> rows;
  for (int e : selected_irreps(g, cfg)) {
    const auto ch = simple_character(g, p, e, N);
    Json m;
    m["irrep"] = g.irrep(e).label;
    m["character"] = character_json(ch);
    if (N >= 8) {
      const auto v = ch_variety_dim(ch);
      m["variety_dimension"] = {{"value", v.dimension}, {"certified", v.certified}};
      if (!v.certified) {
        check.raise(kUncertified, "growth of L(" + g.irrep(e).label + ") is not determined up to degree " +
                                      std::to_string(N));
      }
    }
    modules.push_back(std::move(m));
    rows.emplace_back("L" + g.irrep(e).label, ch);
  }
  j["modules"] = std::move(modules);
  return {j, characters_csv(rows)};
}

Output cmd_decomp(const JobConfig& cfg, CheckFailure& check) {
  const auto g = make_group(cfg);
  const auto p = make_params(g, cfg);
  const auto b = blocks(g, p);
  Json j = header(g, p);
  j["convention"] = "matrix[F][E] = [Delta(F) : L(E)], rows and columns in the listed irrep order";
  Json out = Json::array();
  std::vector<DecompositionMatrix> ds;
  for (const auto& block : b.blocks) {
    const int N = cfg.N.value_or(default_truncation(g, p, block));
    auto d = decomposition_matrix(g, p, block, N, true);
    if (!d.all_certified()) {
      check.raise(kUncertified, "decomposition numbers not certified at N = " + std::to_string(N) +
                                    " (raise --N or pass --allow-uncertified)");
    }
    out.push_back(decomposition_json(g, d));
    ds.push_back(std::move(d));
  }
  j["blocks"] = std::move(out);
  return {j, decompositions_csv(g, ds)};
}

Output cmd_kz(const JobConfig& cfg, CheckFailure& check) {
  const auto g = make_group(cfg);
  const auto p = make_params(g, cfg);
  if (!(cfg.tol > 0)) throw InvalidArgument("tol: must be positive");
  if (cfg.precision < 53) throw InvalidArgument("precision: must be at least 53 bits");
  MonodromyOptions opt;
  opt.transport.tol = cfg.tol;
  opt.precision = cfg.precision;

  const auto spec = parse_group_spec(cfg.group);
  std::optional<SpechtOracle> oracle_q;
  const HeckeParams hecke = hecke_parameters(g, p, cfg.precision);

  Json j = header(g, p);
  j["convention"] = "T_s = rho_E(s) P(x0 -> s^-1 x0), turning counterclockwise by 2 pi / e_H in alpha_H";
  {
    Json base = Json::array();
    const auto conn = assemble_connection(g, p, 0, cfg.precision);
    for (const auto& x : conn.base_point) base.push_back(x.to_string());
    j["base_point"] = std::move(base);
  }
  Json roots = Json::array();
  for (std::size_t o = 0; o < hecke.roots.size(); ++o) {
    Json r = Json::array();
    for (const auto& z : hecke.roots[o]) r.push_back(complex_json(z));
    roots.push_back({{"orbit", g.orbits()[o].label}, {"roots", std::move(r)}});
  }
  j["hecke_roots"] = std::move(roots);

  Json reps = Json::array();
  std::vector<MonodromyRep> all;
  for (int e : selected_irreps(g, cfg)) {
    const auto rep = compute_monodromy(g, p, e, opt);
    const auto words = cfg.words.empty() ? default_words(rep.generators.size()) : parse_words(cfg.words);
    for (const auto& w : words) {
      for (int letter : w) {
        if (static_cast<std::size_t>(letter) >= rep.generators.size()) {
          throw InvalidArgument("words: generator T" + std::to_string(letter + 1) + " does not exist (" +
                                std::to_string(rep.generators.size()) + " generators)");
        }
      }
    }
    Json r = monodromy_json(rep);
    for (const auto& gen : rep.generators) {
      if (gen.hecke_residual > cfg.check_tol) {
        check.raise(kNumericalFailure, "Hecke relation residual above check tolerance for " + rep.irrep);
      }
    }
    if (rep.braid_residual > cfg.check_tol) {
      check.raise(kNumericalFailure, "braid relation residual above check tolerance for " + rep.irrep);
    }
    const auto traces = monodromy_character(rep, words);
    Json t = Json::array();
    for (std::size_t i = 0; i < words.size(); ++i) {
      t.push_back({{"word", word_label(words[i])}, {"trace", complex_json(traces[i])}});
    }
    r["traces"] = std::move(t);
    if (spec.family == "symmetric" && !g.orbits().empty()) {
      const ExactScalar k = p.k(0, 1);
      if (k.is_rational() && k.rational() > 0) {
        try {
          const auto oracle = specht_matrices(parse_shape(rep.irrep), exp_2pi_i(k, cfg.precision));
          const auto cmp = compare_with_monodromy(rep, oracle, words, kSpechtTolerance);
          r["specht"] = comparison_json(cmp);
          if (!cmp.pass) check.raise(kNumericalFailure, "Specht comparison failed for " + rep.irrep);
        } catch (const DegenerateParameter& e) {
          r["specht"] = {{"available", false}, {"message", e.what()}};
        }
      }
    }
    reps.push_back(std::move(r));
    all.push_back(rep);
  }
  j["representations"] = std::move(reps);
  return {j, monodromy_csv(all)};
}

Output cmd_specht(const JobConfig& cfg, CheckFailure&) {
  if (cfg.shape.empty()) throw InvalidArgument("shape: no partition given (use --shape 2,1)");
  const Partition shape = parse_shape(cfg.shape);
  ExactScalar k;
  try {
    k = ExactScalar::parse(cfg.param);
  } catch (const Error& e) {
    throw InvalidArgument(std::string("param: ") + e.what());
  }
  const auto oracle = specht_matrices(shape, exp_2pi_i(k, cfg.precision));
  Json j = specht_json(oracle);
  j["k"] = k.to_string();
  return {j, specht_csv(oracle)};
}

void merge(JobConfig& base, const JobConfig& flags, const CLI::App& app) {
  auto given = [&](const char* name) { return app.count(name) > 0; };
  if (given("--group")) base.group = flags.group;
  if (given("--param")) base.param = flags.param;
  if (given("--N")) base.N = flags.N;
  if (given("--tol")) base.tol = flags.tol;
  if (given("--check-tol")) base.check_tol = flags.check_tol;
  if (given("--precision")) base.precision = flags.precision;
  if (given("--format")) base.format = flags.format;
  if (given("--out")) base.out = flags.out;
  if (given("--allow-uncertified")) base.allow_uncertified = true;
  if (given("--irrep")) base.irrep = flags.irrep;
  if (given("--words")) base.words = flags.words;
  if (given("--shape")) base.shape = flags.shape;
}

}  // namespace

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("config: cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("config: invalid JSON in '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ParseError("config: top level must be an object");
  JobConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "command") c.command = field<std::string>(j, key);
    else if (key == "group") c.group = field<std::string>(j, key);
    else if (key == "param") c.param = value.is_string() ? value.get<std::string>() : value.dump();
    else if (key == "N") c.N = field<int>(j, key);
    else if (key == "tol") c.tol = field<double>(j, key);
    else if (key == "check_tol") c.check_tol = field<double>(j, key);
    else if (key == "precision") c.precision = field<int>(j, key);
    else if (key == "format") c.format = field<std::string>(j, key);
    else if (key == "out") c.out = field<std::string>(j, key);
    else if (key == "allow_uncertified") c.allow_uncertified = field<bool>(j, key);
    else if (key == "irrep") c.irrep = field<std::string>(j, key);
    else if (key == "words") c.words = field<std::string>(j, key);
    else if (key == "shape") c.shape = field<std::string>(j, key);
    else throw ParseError("config: unknown field '" + key + "'");
  }
  return c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational Cherednik algebras of small reflection groups", "cherednik"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  JobConfig flags;
  std::string config_path;
  app.add_option("--config", config_path, "JSON job file; flags override its fields");
  app.add_option("--group", flags.group, "cyclic:e, dihedral:m, symmetric:n or symmetric:n:perm");
  app.add_option("--param", flags.param, "k (one value for all orbits) or O0=k1,k2;O1=...");
  app.add_option("--N", flags.N, "truncation degree");
  app.add_option("--tol", flags.tol, "integrator tolerance");
  app.add_option("--check-tol", flags.check_tol, "bound for Hecke and braid residuals");
  app.add_option("--precision", flags.precision, "bits used when embedding exact values");
  app.add_option("--format", flags.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", flags.out, "output file (default: stdout)");
  app.add_flag("--allow-uncertified", flags.allow_uncertified, "exit 0 even when checks are inconclusive");
  app.add_option("--irrep", flags.irrep, "restrict to one irreducible representation");
  app.add_option("--words", flags.words, "comma separated generator words, e.g. e,T1,T1T2");
  app.add_option("--shape", flags.shape, "partition for the specht command, e.g. 2,1");
  for (const auto& [name, description] : kCommands) app.add_subcommand(name, description);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  JobConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  merge(cfg, flags, app);
  if (!app.get_subcommands().empty()) cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command.empty()) {
    err << "error: command: no command given (one of describe-group, c-function, blocks, char-L, decomp, kz, "
           "specht)\n";
    return kConfigError;
  }
  if (std::none_of(kCommands.begin(), kCommands.end(), [&](const auto& c) { return c.first == cfg.command; })) {
    err << "error: command: unknown command '" << cfg.command << "'\n";
    return kConfigError;
  }
  if (cfg.format != "json" && cfg.format != "csv") {
    err << "error: format: must be json or csv\n";
    return kConfigError;
  }

  Output result;
  CheckFailure check;
  try {
    if (cfg.command == "describe-group") result = cmd_describe_group(cfg, check);
    else if (cfg.command == "c-function") result = cmd_c_function(cfg, check);
    else if (cfg.command == "blocks") result = cmd_blocks(cfg, check);
    else if (cfg.command == "char-L") result = cmd_char_l(cfg, check);
    else if (cfg.command == "decomp") result = cmd_decomp(cfg, check);
    else if (cfg.command == "kz") result = cmd_kz(cfg, check);
    else result = cmd_specht(cfg, check);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Uncertified& e) {
    err << "error: " << e.what() << '\n';
    return kUncertified;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }

  const std::string text = cfg.format == "json" ? result.json.dump(2) + "\n" : result.csv;
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: out: cannot write '" << cfg.out << "'\n";
      return kConfigError;
    }
    file << text;
  }
  if (check.code != kOk) {
    err << (cfg.allow_uncertified ? "warning: " : "error: ") << check.message << '\n';
    if (!cfg.allow_uncertified) return check.code;
  }
  return kOk;
}

}  // namespace cherednik::cli
