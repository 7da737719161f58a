#pragma once

#include <string>

#include "latrb/lattice.hpp"

namespace latrb {

/// Graphviz digraph of the Hasse diagram: one node per element (labelled),
/// one edge per cover oriented lower to upper, same-rank groups by height.
std::string export_dot(const FiniteLattice& l);

}  // namespace latrb
