#pragma once

#include "eon/solver.hpp"

namespace eon {

/// Loopless k-shortest paths by total distance (Yen), shortest first.
std::vector<std::vector<int>> yen_ksp(const Topology& topo, int source, int destination,
                                      int k_paths);

/// KSP(k) + first-fit RMLSA: paths in length order, highest reach-feasible
/// level first, lower levels on the same path before the next path.
SolveOutcome ksp_first_fit(const NetworkState& state, const Request& request,
                           const ModulationTable& mods, int k_paths = 3);

/// ACO over the plain topology for routing only (distance fitness), then
/// highest reach-feasible level and first-fit window on the chosen route.
SolveOutcome aco_routing_only(const NetworkState& state, const Request& request,
                              const ModulationTable& mods, const SolverConfig& cfg);

/// Lowest-indexed window of fs slots free on every listed link, or 0.
int first_fit_window(const NetworkState& state, const std::vector<int>& link_ids, int fs);

}  // namespace eon
