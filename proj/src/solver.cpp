#include "eon/solver.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eon {

const char* to_string(AntStatus s) {
    switch (s) {
        case AntStatus::Reached: return "reached";
        case AntStatus::NoAuxLink: return "no-aux-link";
        case AntStatus::NoFeasibleNode: return "no-feasible-node";
        case AntStatus::ContinuityIssue: return "continuity-issue";
        case AntStatus::ReachIssue: return "reach-issue";
    }
    return "?";
}

const char* to_string(BlockReason r) {
    switch (r) {
        case BlockReason::None: return "none";
        case BlockReason::NoAuxLinks: return "no auxiliary links";
        case BlockReason::NoFeasibleSolution: return "no feasible solution";
    }
    return "?";
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::mt19937_64 ant_rng(std::uint64_t seed, int iteration, int label) {
    std::uint64_t s = mix64(seed);
    s = mix64(s ^ (static_cast<std::uint64_t>(iteration) << 32));
    s = mix64(s ^ static_cast<std::uint64_t>(label));
    return std::mt19937_64(s);
}

PheromoneStore init_pheromones(const AuxGraph& ag) {
    PheromoneStore ph;
    ph.edge_tau.reserve(static_cast<std::size_t>(ag.topo->num_links()));
    for (const Link& l : ag.topo->links()) ph.edge_tau.push_back(1.0 / l.km);
    ph.aux_tau.reserve(ag.links.size());
    for (const AuxLink& al : ag.links) ph.aux_tau.push_back(1.0 / (al.level + al.start_fsu));
    ph.edge_utau = ph.edge_tau;
    ph.aux_utau = ph.aux_tau;
    return ph;
}

int ant_count(const AuxGraph& ag, double z) {
    auto nbrs = ag.effective_neighbors();
    if (nbrs.empty()) return 0;
    return static_cast<int>(std::ceil(z * static_cast<double>(nbrs.size())));
}

std::pair<int, int> split_ants(int total_ants, int iteration) {
    int n_explore = (total_ants + iteration - 1) / iteration;  // ceil(A/Ite)
    return {n_explore, total_ants - n_explore};
}

namespace {

// Roulette wheel over non-negative weights; -1 when the total is zero.
int roulette(std::span<const double> weights, std::mt19937_64& rng) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (total <= 0.0) return -1;
    double r = std::uniform_real_distribution<double>(0.0, total)(rng);
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (r < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
}

}  // namespace

Ant traverse(const AuxGraph& ag, const NetworkState& state, std::span<const double> edge_ph,
             std::span<const double> aux_ph, std::mt19937_64& rng) {
    Ant ant;
    ant.tour = {ag.source};
    if (ag.links.empty()) {
        ant.status = AntStatus::NoAuxLink;
        return ant;
    }

    // First hop: one roulette over every aux link jointly.
    int pick = roulette(aux_ph, rng);
    const AuxLink& al = ag.links[static_cast<std::size_t>(pick)];
    ant.aux_index = pick;
    ant.start_fsu = al.start_fsu;
    ant.level = al.level;
    ant.slot_count = al.slot_count;
    ant.delta_f += fragment_change(state.link_occupancy(al.link), al.start_fsu, al.slot_count);
    ant.dis += ag.topo->link(al.link).km;
    ant.tour.push_back(al.neighbor);

    const double level_reach = ag.reach_per_level[static_cast<std::size_t>(al.level - 1)];
    if (!(ant.dis < level_reach)) {
        ant.status = AntStatus::ReachIssue;
        return ant;
    }
    if (al.neighbor == ag.destination) {
        ant.status = AntStatus::Reached;
        ant.fitness = Fitness{ant.delta_f, static_cast<int>(ant.tour.size()) - 1, ant.slot_count};
        return ant;
    }

    std::vector<char> visited(static_cast<std::size_t>(ag.topo->num_nodes()) + 1, 0);
    visited[static_cast<std::size_t>(ag.source)] = 1;
    visited[static_cast<std::size_t>(al.neighbor)] = 1;

    while (static_cast<int>(ant.tour.size()) < ag.topo->num_nodes()) {
        int cn = ant.tour.back();
        const auto& adj = ag.topo->adjacency(cn);
        std::vector<double> weights(adj.size(), 0.0);
        for (std::size_t i = 0; i < adj.size(); ++i)
            if (!visited[static_cast<std::size_t>(adj[i].first)])
                weights[i] = edge_ph[static_cast<std::size_t>(adj[i].second)];

        int next = roulette(weights, rng);
        if (next < 0) {
            ant.status = AntStatus::NoFeasibleNode;
            return ant;
        }
        auto [nn, li] = adj[static_cast<std::size_t>(next)];
        if (!state.window_free(li, ant.start_fsu, ant.slot_count)) {
            ant.status = AntStatus::ContinuityIssue;
            return ant;
        }
        ant.delta_f += fragment_change(state.link_occupancy(li), ant.start_fsu, ant.slot_count);
        ant.dis += ag.topo->link(li).km;
        ant.tour.push_back(nn);
        visited[static_cast<std::size_t>(nn)] = 1;
        if (!(ant.dis < level_reach)) {
            ant.status = AntStatus::ReachIssue;
            return ant;
        }
        if (nn == ag.destination) {
            ant.status = AntStatus::Reached;
            ant.fitness =
                Fitness{ant.delta_f, static_cast<int>(ant.tour.size()) - 1, ant.slot_count};
            return ant;
        }
    }
    ant.status = AntStatus::NoFeasibleNode;
    return ant;
}

void update_pheromones(PheromoneStore& store, const AuxGraph& ag, std::span<const Ant> ants,
                       double sigma) {
    for (const Ant& ant : ants) {
        if (ant.status != AntStatus::Reached) continue;
        double deposit = 1.0 / ant.fitness->value();
        for (std::size_t i = 0; i + 1 < ant.tour.size(); ++i) {
            int li = ag.topo->link_index(ant.tour[i], ant.tour[i + 1]);
            store.edge_utau[static_cast<std::size_t>(li)] += deposit;
        }
        store.aux_utau[static_cast<std::size_t>(ant.aux_index)] += deposit;
    }
    const double keep = 1.0 - sigma;
    for (double& v : store.edge_utau) v *= keep;
    for (double& v : store.aux_utau) v *= keep;
}

bool better_candidate(const Ant& a, const Ant& b) {
    if (*a.fitness != *b.fitness) return *a.fitness < *b.fitness;
    if (a.start_fsu != b.start_fsu) return a.start_fsu < b.start_fsu;
    if (a.dis != b.dis) return a.dis < b.dis;
    return a.tour < b.tour;
}

SolveOutcome solve(const NetworkState& state, const Request& request, const ModulationTable& mods,
                   const SolverConfig& cfg, SolveTrace* trace) {
    AuxGraph ag = build_auxiliary_graph(state, request, mods);
    SolveOutcome out;
    out.ants_deployed = ant_count(ag, cfg.z);
    if (ag.links.empty()) {
        out.reason = BlockReason::NoAuxLinks;
        return out;
    }

    PheromoneStore ph = init_pheromones(ag);
    const int total = out.ants_deployed;
    std::optional<Ant> best;

    for (int ite = 1; ite <= cfg.max_iterations; ++ite) {
        auto [n_explore, n_exploit] = split_ants(total, ite);
        (void)n_exploit;
        std::vector<Ant> ants(static_cast<std::size_t>(total));

        auto run_ant = [&](int idx) {
            int label = idx + 1;
            bool exploring = label <= n_explore;
            auto rng = ant_rng(cfg.seed, ite, label);
            Ant a = traverse(ag, state, exploring ? ph.edge_tau : ph.edge_utau,
                             exploring ? ph.aux_tau : ph.aux_utau, rng);
            a.label = label;
            a.exploring = exploring;
            ants[static_cast<std::size_t>(idx)] = std::move(a);
        };

        if (cfg.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (int idx = 0; idx < total; ++idx) run_ant(idx);
        } else {
            for (int idx = 0; idx < total; ++idx) run_ant(idx);
        }

        for (const Ant& a : ants) {
            if (a.status == AntStatus::Reached && (!best || better_candidate(a, *best))) best = a;
            if (trace) trace->rows.push_back({ite, a});
        }
        update_pheromones(ph, ag, ants, cfg.sigma);
        out.iterations_used = ite;

        if (ite >= 2 && best) {
            int same = 0;
            for (const Ant& a : ants)
                if (a.status == AntStatus::Reached && *a.fitness == *best->fitness) ++same;
            if (static_cast<double>(same) >= cfg.quorum * total) break;
        }
    }

    if (!best) {
        out.reason = BlockReason::NoFeasibleSolution;
        return out;
    }
    out.best_fitness = best->fitness;
    out.allocation =
        Allocation{request.id, best->tour, best->level, best->start_fsu, best->slot_count};
    return out;
}

}  // namespace eon
