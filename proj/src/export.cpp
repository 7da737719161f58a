#include "latrb/export.hpp"

#include <algorithm>
#include <sstream>

namespace latrb {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string export_dot(const FiniteLattice& l) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (Element x = 0; x < l.size(); ++x)
    out << "  n" << x << " [label=" << quoted(l.label(x)) << "];\n";
  for (const auto& [lo, hi] : l.covers()) out << "  n" << lo << " -> n" << hi << ";\n";

  const auto h = heights(l);
  const std::size_t levels = h.empty() ? 0 : *std::max_element(h.begin(), h.end()) + 1;
  for (std::size_t level = 0; level < levels; ++level) {
    out << "  { rank=same;";
    for (Element x = 0; x < l.size(); ++x)
      if (h[x] == level) out << " n" << x << ";";
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace latrb
