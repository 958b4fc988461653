#pragma once

// JSON forms shared by the CLI and the tests.
//
//   sequence:  {"k": 0, "l": 2, "values": "--+++"}
//   monomial:  {"coefficient": 1, "factors": [{"site": 0, "dagger": true}, ...]}
//              (factors in written, left-to-right order)
//   word:      {"k", "l", "start", "target", "steps": [{k, l, values, adjoint}],
//               "predicted_sign"}

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "nicolai/charges.h"
#include "nicolai/fock.h"
#include "nicolai/ground_states.h"

namespace nicolai {

using Json = nlohmann::ordered_json;

Json to_json(const ConservationSequence& f);
ConservationSequence sequence_from_json(const Json& j);

Json to_json(const FermionMonomial& m);
FermionMonomial monomial_from_json(const Json& j);

Json to_json(const GenerationWord& w);
GenerationWord word_from_json(const Json& j);

struct FixtureRow {
  std::string label;
  std::string values;
  std::string op;  // written operator, empty when the table has none
};

struct FixtureTable {
  std::string name;
  std::string kind;  // "conservation_sequences" or "ground_configs"
  int k;
  int l;
  std::string comment;
  std::vector<FixtureRow> rows;
};

FixtureTable load_fixture(const std::filesystem::path& file);
/// Every *.json table under `dir`, sorted by name.
std::vector<FixtureTable> load_fixtures(const std::filesystem::path& dir);

/// Data directory baked in at build time.
std::filesystem::path default_fixture_dir();

}  // namespace nicolai
