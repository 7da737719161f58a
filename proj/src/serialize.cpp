#include "latrb/serialize.hpp"

#include <fstream>

namespace latrb {

json lattice_to_json(const FiniteLattice& l) {
  json covers = json::array();
  for (const auto& [lo, hi] : l.covers()) covers.push_back({lo, hi});
  json labels = json::array();
  for (const auto& s : l.labels()) labels.push_back(s);
  return {{"size", l.size()}, {"covers", covers}, {"labels", labels}};
}

FiniteLattice lattice_from_json(const json& j) {
  try {
    if (!j.is_object()) throw BadSpec("lattice document must be an object");
    const auto size = j.at("size").get<std::size_t>();
    std::vector<Cover> covers;
    for (const auto& edge : j.at("covers")) {
      if (!edge.is_array() || edge.size() != 2) throw BadSpec("cover must be a [lo, hi] pair");
      covers.emplace_back(edge[0].get<Element>(), edge[1].get<Element>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteLattice::from_covers(size, covers, std::move(labels));
  } catch (const json::exception& e) {
    throw BadSpec(std::string("malformed lattice document: ") + e.what());
  }
}

json map_to_json(const LatticeMap& f) {
  return json(std::vector<Element>(f.image().begin(), f.image().end()));
}

LatticeMap map_from_json(const FiniteLattice& l, const json& j) {
  try {
    return LatticeMap(l, j.get<std::vector<Element>>());
  } catch (const json::exception& e) {
    throw BadSpec(std::string("malformed operator: ") + e.what());
  }
}

json classification_to_json(const IsoClassification& c) {
  json classes = json::array();
  for (const auto& cls : c.classes)
    classes.push_back(
        {{"representative", map_to_json(cls.representative)}, {"orbit_size", cls.orbit_size}});
  return {{"class_count", c.class_count()}, {"classes", classes}};
}

json enumeration_to_json(std::string_view spec, Predicate p, const std::vector<LatticeMap>& ops,
                         const IsoClassification* classification, bool include_operators) {
  json out = {{"lattice", spec}, {"predicate", to_string(p)}, {"count", ops.size()}};
  if (include_operators) {
    json list = json::array();
    for (const auto& f : ops) list.push_back(map_to_json(f));
    out["operators"] = list;
  }
  if (classification) out["classification"] = classification_to_json(*classification);
  return out;
}

json table_to_json(std::string_view spec, const BinOpTable& t) {
  json rows = json::array();
  for (Element x = 0; x < t.size(); ++x) {
    json row = json::array();
    for (Element y = 0; y < t.size(); ++y) row.push_back(t(x, y));
    rows.push_back(row);
  }
  return {{"lattice", spec}, {"op", to_string(t.kind())}, {"table", rows}};
}

json expected_values_to_json(const ExpectedValues& ev) {
  json values = json::object();
  for (const auto& [key, v] : ev.values)
    values[key] = {{"count", v.count}, {"provenance", v.provenance}};
  return {{"version", ev.version}, {"values", values}};
}

ExpectedValues expected_values_from_json(const json& j) {
  try {
    ExpectedValues ev;
    ev.version = j.at("version").get<int>();
    for (const auto& [key, v] : j.at("values").items())
      ev.values[key] = {v.at("count").get<std::uint64_t>(), v.value("provenance", "")};
    return ev;
  } catch (const json::exception& e) {
    throw BadSpec(std::string("malformed expected-values file: ") + e.what());
  }
}

ExpectedValues read_expected_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadSpec("cannot open expected-values file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw BadSpec("malformed expected-values file '" + path + "': " + e.what());
  }
  return expected_values_from_json(j);
}

void write_expected_values(const std::string& path, const ExpectedValues& ev) {
  std::ofstream out(path);
  if (!out) throw BadSpec("cannot write '" + path + "'");
  out << expected_values_to_json(ev).dump(2) << '\n';
}

}  // namespace latrb
