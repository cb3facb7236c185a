#pragma once

#include <vector>

#include "eon/network_state.hpp"

namespace eon {

/// One feasible (neighbor, modulation, start-FSU) first hop at the source.
struct AuxLink {
    int neighbor = 0;
    int link = 0;  // topology link index (source, neighbor)
    int level = 0;
    int start_fsu = 0;
    int slot_count = 0;
};

struct AuxGraph {
    const Topology* topo = nullptr;
    int source = 0;
    int destination = 0;
    double data_rate_gbps = 0.0;
    std::vector<int> fs_per_level;        // fs_per_level[l-1] = FS_{m_l}
    std::vector<double> reach_per_level;  // reach_per_level[l-1] = d_{m_l}
    std::vector<AuxLink> links;

    /// Distinct neighbors of the source reachable via at least one aux link.
    std::vector<int> effective_neighbors() const;
};

/// All free contiguous windows on the source's incident links, for every
/// modulation level; empty set means immediate blocking.
AuxGraph build_auxiliary_graph(const NetworkState& state, const Request& request,
                               const ModulationTable& mods);

struct ContiguityStats {
    double count_without = 0.0;  // sum over levels of C(N, FS_l)
    double count_with = 0.0;     // sum over levels of N - FS_l + 1
    double reduction = 0.0;      // 1 - with/without
};

ContiguityStats contiguity_reduction_stats(int slots, const std::vector<int>& fs_per_level);

/// Fraction of links stripped of aux links when only the source keeps them.
double continuity_reduction_stats(int link_count, int source_degree);

}  // namespace eon
