#pragma once

#include <optional>

#include "eon/solver.hpp"

namespace eon {

struct OracleSolution {
    std::vector<int> path;
    int level = 0;
    int start_fsu = 0;
    int slot_count = 0;
    Fitness fitness;
};

struct InstanceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exhaustive search over all simple paths x levels x feasible windows under
/// the same constraints and tie-breaking as the ACO solver. Small instances
/// only; throws InstanceTooLarge past max_paths enumerated paths.
std::optional<OracleSolution> oracle_solve(const NetworkState& state, const Request& request,
                                           const ModulationTable& mods,
                                           long max_paths = 200000);

}  // namespace eon
