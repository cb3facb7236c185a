#include "eon/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

namespace eon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dijkstra with banned nodes/links; returns empty path when unreachable.
std::vector<int> shortest_path(const Topology& topo, int s, int d, const std::set<int>& banned_nodes,
                               const std::set<std::pair<int, int>>& banned_edges) {
    std::vector<double> dist(static_cast<std::size_t>(topo.num_nodes()) + 1, kInf);
    std::vector<int> prev(static_cast<std::size_t>(topo.num_nodes()) + 1, 0);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[static_cast<std::size_t>(s)] = 0.0;
    pq.emplace(0.0, s);
    while (!pq.empty()) {
        auto [dv, v] = pq.top();
        pq.pop();
        if (dv > dist[static_cast<std::size_t>(v)]) continue;
        if (v == d) break;
        for (auto [u, li] : topo.adjacency(v)) {
            if (banned_nodes.count(u)) continue;
            if (banned_edges.count(std::minmax(v, u))) continue;
            double nd = dv + topo.link(li).km;
            if (nd < dist[static_cast<std::size_t>(u)]) {
                dist[static_cast<std::size_t>(u)] = nd;
                prev[static_cast<std::size_t>(u)] = v;
                pq.emplace(nd, u);
            }
        }
    }
    if (dist[static_cast<std::size_t>(d)] == kInf) return {};
    std::vector<int> path;
    for (int v = d; v != s; v = prev[static_cast<std::size_t>(v)]) path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> path_links(const Topology& topo, const std::vector<int>& path) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        out.push_back(topo.link_index(path[i], path[i + 1]));
    return out;
}

// Highest level first; returns an allocated outcome or nothing.
std::optional<Allocation> fit_on_path(const NetworkState& state, const Request& request,
                                      const ModulationTable& mods, const std::vector<int>& path) {
    double km = path_length(state.topology(), path);
    auto links = path_links(state.topology(), path);
    for (int l = mods.size(); l >= 1; --l) {
        if (mods.level(l).reach_km < km) continue;
        int fs = required_slots(request.data_rate_gbps, l, mods);
        int k = first_fit_window(state, links, fs);
        if (k > 0) return Allocation{request.id, path, l, k, fs};
    }
    return std::nullopt;
}

Fitness allocation_fitness(const NetworkState& state, const Allocation& a) {
    int delta_f = 0;
    for (std::size_t i = 0; i + 1 < a.path.size(); ++i) {
        int li = state.topology().link_index(a.path[i], a.path[i + 1]);
        delta_f += fragment_change(state.link_occupancy(li), a.start_fsu, a.slot_count);
    }
    return {delta_f, static_cast<int>(a.path.size()) - 1, a.slot_count};
}

}  // namespace

int first_fit_window(const NetworkState& state, const std::vector<int>& link_ids, int fs) {
    for (int k = 1; k <= state.slots() - fs + 1; ++k) {
        bool free = true;
        for (int li : link_ids)
            if (!state.window_free(li, k, fs)) {
                free = false;
                break;
            }
        if (free) return k;
    }
    return 0;
}

std::vector<std::vector<int>> yen_ksp(const Topology& topo, int source, int destination,
                                      int k_paths) {
    std::vector<std::vector<int>> result;
    auto first = shortest_path(topo, source, destination, {}, {});
    if (first.empty()) return result;
    result.push_back(first);

    using Cand = std::pair<double, std::vector<int>>;
    auto cmp = [](const Cand& a, const Cand& b) { return a > b; };
    std::priority_queue<Cand, std::vector<Cand>, decltype(cmp)> candidates(cmp);
    std::set<std::vector<int>> seen{first};

    while (static_cast<int>(result.size()) < k_paths) {
        const std::vector<int>& last = result.back();
        for (std::size_t spur = 0; spur + 1 < last.size(); ++spur) {
            std::vector<int> root(last.begin(), last.begin() + static_cast<long>(spur) + 1);
            std::set<std::pair<int, int>> banned_edges;
            for (const auto& p : result)
                if (p.size() > spur + 1 &&
                    std::equal(root.begin(), root.end(), p.begin()))
                    banned_edges.insert(std::minmax(p[spur], p[spur + 1]));
            std::set<int> banned_nodes(root.begin(), root.end() - 1);
            auto tail = shortest_path(topo, last[spur], destination, banned_nodes, banned_edges);
            if (tail.empty()) continue;
            std::vector<int> full = root;
            full.insert(full.end(), tail.begin() + 1, tail.end());
            if (seen.insert(full).second) candidates.emplace(path_length(topo, full), full);
        }
        if (candidates.empty()) break;
        result.push_back(candidates.top().second);
        candidates.pop();
    }
    return result;
}

SolveOutcome ksp_first_fit(const NetworkState& state, const Request& request,
                           const ModulationTable& mods, int k_paths) {
    SolveOutcome out;
    auto paths = yen_ksp(state.topology(), request.source, request.destination, k_paths);
    for (const auto& path : paths) {
        if (auto alloc = fit_on_path(state, request, mods, path)) {
            out.best_fitness = allocation_fitness(state, *alloc);
            out.allocation = std::move(alloc);
            return out;
        }
    }
    out.reason = BlockReason::NoFeasibleSolution;
    return out;
}

SolveOutcome aco_routing_only(const NetworkState& state, const Request& request,
                              const ModulationTable& mods, const SolverConfig& cfg) {
    const Topology& topo = state.topology();
    SolveOutcome out;
    const int deg = topo.degree(request.source);
    const int total = static_cast<int>(std::ceil(cfg.z * deg));
    out.ants_deployed = total;

    std::vector<double> tau, utau;
    for (const Link& l : topo.links()) tau.push_back(1.0 / l.km);
    utau = tau;

    std::optional<std::vector<int>> best_route;
    double best_km = kInf;

    for (int ite = 1; ite <= cfg.max_iterations; ++ite) {
        auto [n_explore, n_exploit] = split_ants(total, ite);
        (void)n_exploit;
        for (int label = 1; label <= total; ++label) {
            const std::vector<double>& ph = label <= n_explore ? tau : utau;
            auto rng = ant_rng(cfg.seed ^ 0x5eedull, ite, label);
            std::vector<int> route{request.source};
            std::vector<char> visited(static_cast<std::size_t>(topo.num_nodes()) + 1, 0);
            visited[static_cast<std::size_t>(request.source)] = 1;
            double km = 0.0;
            bool reached = false;
            while (static_cast<int>(route.size()) < topo.num_nodes()) {
                const auto& adj = topo.adjacency(route.back());
                std::vector<double> w(adj.size(), 0.0);
                double sum = 0.0;
                for (std::size_t i = 0; i < adj.size(); ++i)
                    if (!visited[static_cast<std::size_t>(adj[i].first)])
                        sum += w[i] = ph[static_cast<std::size_t>(adj[i].second)];
                if (sum <= 0.0) break;
                double r = std::uniform_real_distribution<double>(0.0, sum)(rng);
                std::size_t pick = 0;
                for (double acc = 0.0; pick < w.size(); ++pick) {
                    acc += w[pick];
                    if (r < acc) break;
                }
                if (pick >= w.size()) pick = w.size() - 1;
                auto [nn, li] = adj[pick];
                route.push_back(nn);
                visited[static_cast<std::size_t>(nn)] = 1;
                km += topo.link(li).km;
                if (nn == request.destination) {
                    reached = true;
                    break;
                }
            }
            if (!reached) continue;
            double deposit = 1.0 / km;
            for (std::size_t i = 0; i + 1 < route.size(); ++i)
                utau[static_cast<std::size_t>(topo.link_index(route[i], route[i + 1]))] += deposit;
            if (km < best_km || (km == best_km && route < *best_route)) {
                best_km = km;
                best_route = route;
            }
        }
        for (double& v : utau) v *= 1.0 - cfg.sigma;
        out.iterations_used = ite;
    }

    if (!best_route) {
        out.reason = BlockReason::NoFeasibleSolution;
        return out;
    }
    if (auto alloc = fit_on_path(state, request, mods, *best_route)) {
        out.best_fitness = allocation_fitness(state, *alloc);
        out.allocation = std::move(alloc);
        return out;
    }
    out.reason = BlockReason::NoFeasibleSolution;  // no crankback
    return out;
}

}  // namespace eon
