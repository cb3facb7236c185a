#pragma once

#include <iosfwd>
#include <string>

#include "eon/network_state.hpp"

namespace eon {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NetworkSpec {
    Topology topo;
    ModulationTable mods;
};

/// Topology file: `slots N`, `modulation <index> <name> <reach_km>` lines and
/// `link <a> <b> <distance_km>` records; `#` starts a comment. A missing
/// modulation section falls back to the default table. slots_override, when
/// positive, replaces the file's slot count.
NetworkSpec load_topology(const std::string& path, int slots_override = 0);
NetworkSpec parse_topology(std::istream& in, const std::string& name, int slots_override = 0);

/// Occupancy file: `occ <a> <b> <start-end>[,<start-end>...]` with 1-based
/// inclusive ranges; applied on top of the given state.
void load_occupancy(NetworkState& state, const std::string& path);
void parse_occupancy(NetworkState& state, std::istream& in, const std::string& name);

/// Stable CSV header shared by sweep outputs and golden tests.
std::string metrics_csv_header();

}  // namespace eon
