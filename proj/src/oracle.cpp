#include "eon/oracle.hpp"

#include <functional>

namespace eon {

std::optional<OracleSolution> oracle_solve(const NetworkState& state, const Request& request,
                                           const ModulationTable& mods, long max_paths) {
    const Topology& topo = state.topology();
    const int n = state.slots();

    std::vector<int> fs(static_cast<std::size_t>(mods.size()));
    for (int l = 1; l <= mods.size(); ++l)
        fs[static_cast<std::size_t>(l - 1)] = required_slots(request.data_rate_gbps, l, mods);

    std::optional<OracleSolution> best;
    double best_km = 0.0;
    long paths_seen = 0;

    std::vector<int> path{request.source};
    std::vector<char> visited(static_cast<std::size_t>(topo.num_nodes()) + 1, 0);
    visited[static_cast<std::size_t>(request.source)] = 1;

    // same chain as the solver: fitness, start-FSU, distance, path order
    auto cand_better = [&](const OracleSolution& c, double ckm) {
        if (!best) return true;
        if (c.fitness != best->fitness) return c.fitness < best->fitness;
        if (c.start_fsu != best->start_fsu) return c.start_fsu < best->start_fsu;
        if (ckm != best_km) return ckm < best_km;
        return c.path < best->path;
    };

    auto consider = [&](double km) {
        for (int l = 1; l <= mods.size(); ++l) {
            if (!(km < mods.level(l).reach_km)) continue;  // strict, as in traversal
            const int w = fs[static_cast<std::size_t>(l - 1)];
            for (int k = 1; k <= n - w + 1; ++k) {
                int delta_f = 0;
                bool ok = true;
                for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) {
                    int li = topo.link_index(path[i], path[i + 1]);
                    if (!state.window_free(li, k, w)) {
                        ok = false;
                        break;
                    }
                    delta_f += fragment_change(state.link_occupancy(li), k, w);
                }
                if (!ok) continue;
                OracleSolution cand{path, l, k, w,
                                    Fitness{delta_f, static_cast<int>(path.size()) - 1, w}};
                if (cand_better(cand, km)) {
                    best = std::move(cand);
                    best_km = km;
                }
            }
        }
    };

    std::function<void(double)> dfs = [&](double km) {
        int cn = path.back();
        if (cn == request.destination) {
            if (++paths_seen > max_paths) throw InstanceTooLarge("oracle path budget exceeded");
            consider(km);
            return;
        }
        for (auto [u, li] : topo.adjacency(cn)) {
            if (visited[static_cast<std::size_t>(u)]) continue;
            visited[static_cast<std::size_t>(u)] = 1;
            path.push_back(u);
            dfs(km + topo.link(li).km);
            path.pop_back();
            visited[static_cast<std::size_t>(u)] = 0;
        }
    };
    dfs(0.0);
    return best;
}

}  // namespace eon
