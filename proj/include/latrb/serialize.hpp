#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "latrb/derived.hpp"
#include "latrb/enumerate.hpp"

namespace latrb {

using json = nlohmann::json;

/// {"size": n, "covers": [[lo, hi], ...], "labels": [...]}
json lattice_to_json(const FiniteLattice& l);

/// Inverse of lattice_to_json; "labels" is optional. Throws BadSpec on a
/// malformed document and the usual construction errors otherwise.
FiniteLattice lattice_from_json(const json& j);

json map_to_json(const LatticeMap& f);
LatticeMap map_from_json(const FiniteLattice& l, const json& j);

json classification_to_json(const IsoClassification& c);

json enumeration_to_json(std::string_view spec, Predicate p, const std::vector<LatticeMap>& ops,
                         const IsoClassification* classification, bool include_operators = true);

json table_to_json(std::string_view spec, const BinOpTable& t);

/// Pinned regression values, keyed "spec|quantity" (e.g. "n8|rbo", "n8|aut").
struct PinnedValue {
  std::uint64_t count = 0;
  std::string provenance;
};

struct ExpectedValues {
  int version = 1;
  std::map<std::string, PinnedValue> values;
};

json expected_values_to_json(const ExpectedValues& ev);
ExpectedValues expected_values_from_json(const json& j);

ExpectedValues read_expected_values(const std::string& path);
void write_expected_values(const std::string& path, const ExpectedValues& ev);

}  // namespace latrb
