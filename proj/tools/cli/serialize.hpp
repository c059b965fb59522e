#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cherednik/category_o.hpp"
#include "cherednik/hecke.hpp"

namespace cherednik::cli {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so repeated runs print identical text.
double stable(long double v);
/// Rounds to 12 decimal places (values that are O(1) by construction).
double fixed(long double v);
Json complex_json(const Complex& z);
Json matrix_json(const CMatrix& m);

Json group_json(const ReflectionGroup& g);
Json c_table_json(const ReflectionGroup& g, const CherednikParams& p);
Json blocks_json(const ReflectionGroup& g, const BlockPartition& b);
Json character_json(const GradedCharacter& ch);
Json decomposition_json(const ReflectionGroup& g, const DecompositionMatrix& d);
Json monodromy_json(const MonodromyRep& rep);
Json specht_json(const SpechtOracle& o);
Json comparison_json(const SpechtComparison& c);

/// CSV renderings: a header line followed by one record per line.
std::string c_table_csv(const ReflectionGroup& g, const CherednikParams& p);
std::string blocks_csv(const ReflectionGroup& g, const BlockPartition& b);
std::string characters_csv(const std::vector<std::pair<std::string, GradedCharacter>>& chars);
std::string decompositions_csv(const ReflectionGroup& g, const std::vector<DecompositionMatrix>& ds);
std::string group_csv(const ReflectionGroup& g);
std::string monodromy_csv(const std::vector<MonodromyRep>& reps);
std::string specht_csv(const SpechtOracle& o);

}  // namespace cherednik::cli
