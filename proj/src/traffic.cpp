#include "eon/traffic.hpp"

#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>

#include "eon/metrics.hpp"

namespace eon {

const char* to_string(SolverChoice s) {
    switch (s) {
        case SolverChoice::A3G: return "a3g";
        case SolverChoice::Ksp: return "ksp";
        case SolverChoice::AcoR: return "aco-r";
    }
    return "?";
}

std::vector<Request> generate_stream(const Topology& topo, const TrafficConfig& cfg) {
    if (cfg.lambda <= 0.0) throw std::invalid_argument("arrival rate must be positive");
    if (cfg.rate_lo_gbps <= 0.0 || cfg.rate_lo_gbps > cfg.rate_hi_gbps)
        throw std::invalid_argument("bad data-rate range");

    std::mt19937_64 rng(mix64(cfg.seed));
    std::exponential_distribution<double> inter(cfg.lambda);
    std::uniform_int_distribution<int> node(1, topo.num_nodes());
    std::uniform_real_distribution<double> rate(cfg.rate_lo_gbps, cfg.rate_hi_gbps);
    const bool infinite_hold = std::isinf(cfg.mean_hold);
    std::exponential_distribution<double> hold(infinite_hold ? 1.0 : 1.0 / cfg.mean_hold);

    std::vector<Request> out;
    out.reserve(static_cast<std::size_t>(cfg.request_count));
    double t = 0.0;
    for (int id = 1; id <= cfg.request_count; ++id) {
        t += inter(rng);
        int s = node(rng);
        int d = node(rng);
        while (d == s) d = node(rng);
        Request r;
        r.id = id;
        r.source = s;
        r.destination = d;
        r.data_rate_gbps = rate(rng);
        r.arrival_time = t;
        r.hold_time = infinite_hold ? std::numeric_limits<double>::infinity() : hold(rng);
        out.push_back(r);
    }
    return out;
}

SolveOutcome dispatch_solver(const NetworkState& state, const Request& request,
                             const ModulationTable& mods, const RunConfig& cfg,
                             std::uint64_t request_seed) {
    SolverConfig sc = cfg.solver_cfg;
    sc.seed = request_seed;
    switch (cfg.solver) {
        case SolverChoice::A3G: return solve(state, request, mods, sc);
        case SolverChoice::Ksp: return ksp_first_fit(state, request, mods, cfg.k_paths);
        case SolverChoice::AcoR: return aco_routing_only(state, request, mods, sc);
    }
    throw std::logic_error("unknown solver");
}

SimulationReport run_simulation(const Topology& topo, const ModulationTable& mods,
                                const TrafficConfig& traffic, const RunConfig& run) {
    auto stream = generate_stream(topo, traffic);
    NetworkState state(topo);
    SimulationReport rep;

    // departures sort before arrivals at equal timestamps
    struct Ev {
        double time;
        int kind;  // 0 = departure, 1 = arrival
        int idx;   // stream index (arrival) or request id (departure)
        bool operator>(const Ev& o) const {
            if (time != o.time) return time > o.time;
            if (kind != o.kind) return kind > o.kind;
            return idx > o.idx;
        }
    };
    std::priority_queue<Ev, std::vector<Ev>, std::greater<>> events;
    for (std::size_t i = 0; i < stream.size(); ++i)
        events.push({stream[i].arrival_time, 1, static_cast<int>(i)});

    const int warmup = static_cast<int>(run.warmup_fraction * traffic.request_count);
    double next_checkpoint = run.checkpoint_gbps;
    double naf_sum = 0.0;
    long naf_samples = 0;
    int arrivals_seen = 0;
    bool stopped = false;

    while (!events.empty() && !stopped) {
        Ev ev = events.top();
        events.pop();
        if (ev.kind == 0) {
            state.release(ev.idx);
        } else {
            const Request& r = stream[static_cast<std::size_t>(ev.idx)];
            ++arrivals_seen;
            rep.requests += 1;
            rep.requested_gbps += r.data_rate_gbps;
            const bool in_window = arrivals_seen > warmup;
            if (in_window) rep.window_requested_gbps += r.data_rate_gbps;

            SolveOutcome sol =
                dispatch_solver(state, r, mods, run, mix64(traffic.seed ^ (0xA110C8ull + r.id)));
            if (sol.allocated()) {
                state.allocate(*sol.allocation);
                rep.allocated += 1;
                rep.admitted_gbps += r.data_rate_gbps;
                if (!std::isinf(r.hold_time))
                    events.push({r.arrival_time + r.hold_time, 0, r.id});
                while (rep.admitted_gbps >= next_checkpoint) {
                    rep.checkpoints.push_back({next_checkpoint, state.occupied_slot_links(),
                                               network_average_fragmentation(state)});
                    next_checkpoint += run.checkpoint_gbps;
                }
                if (run.stop_admitted_gbps > 0.0 && rep.admitted_gbps >= run.stop_admitted_gbps)
                    stopped = true;
            } else {
                rep.blocked += 1;
                rep.blocked_gbps += r.data_rate_gbps;
                if (in_window) rep.window_blocked_gbps += r.data_rate_gbps;
            }
            if (in_window) {
                naf_sum += network_average_fragmentation(state);
                ++naf_samples;
            }
        }
        if (run.validate_each_event) state.check_invariants();
    }

    if (rep.window_requested_gbps > 0.0)
        rep.bbp = rep.window_blocked_gbps / rep.window_requested_gbps;
    if (naf_samples > 0) rep.mean_naf = naf_sum / static_cast<double>(naf_samples);
    return rep;
}

}  // namespace eon
