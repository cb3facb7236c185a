#include "eon/aux_graph.hpp"

#include <algorithm>

namespace eon {

std::vector<int> AuxGraph::effective_neighbors() const {
    std::vector<int> nbrs;
    for (const AuxLink& al : links) nbrs.push_back(al.neighbor);
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    return nbrs;
}

AuxGraph build_auxiliary_graph(const NetworkState& state, const Request& request,
                               const ModulationTable& mods) {
    const Topology& topo = state.topology();
    const int n = state.slots();

    AuxGraph ag;
    ag.topo = &topo;
    ag.source = request.source;
    ag.destination = request.destination;
    ag.data_rate_gbps = request.data_rate_gbps;
    for (int l = 1; l <= mods.size(); ++l) {
        ag.fs_per_level.push_back(required_slots(request.data_rate_gbps, l, mods));
        ag.reach_per_level.push_back(mods.level(l).reach_km);
    }

    for (auto [nbr, li] : topo.adjacency(request.source)) {
        for (int l = 1; l <= mods.size(); ++l) {
            const int fs = ag.fs_per_level[static_cast<std::size_t>(l - 1)];
            // windows past N - FS + 1 would run off the grid
            for (int k = 1; k <= n - fs + 1; ++k)
                if (state.window_free(li, k, fs)) ag.links.push_back({nbr, li, l, k, fs});
        }
    }
    return ag;
}

ContiguityStats contiguity_reduction_stats(int slots, const std::vector<int>& fs_per_level) {
    ContiguityStats st;
    for (int fs : fs_per_level) {
        if (fs < 1 || fs > slots) throw std::invalid_argument("FS out of range for slot count");
        double binom = 1.0;
        for (int i = 0; i < fs; ++i) binom = binom * (slots - i) / (i + 1);
        st.count_without += binom;
        st.count_with += slots - fs + 1;
    }
    st.reduction = 1.0 - st.count_with / st.count_without;
    return st;
}

double continuity_reduction_stats(int link_count, int source_degree) {
    if (source_degree < 1 || source_degree > link_count)
        throw std::invalid_argument("source degree must be in [1, link count]");
    return static_cast<double>(link_count - source_degree) / link_count;
}

}  // namespace eon
