#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "eon/baselines.hpp"
#include "eon/solver.hpp"

namespace eon {

enum class SolverChoice { A3G, Ksp, AcoR };

const char* to_string(SolverChoice s);

struct TrafficConfig {
    double lambda = 1.0;  // arrivals per unit time
    double mean_hold = std::numeric_limits<double>::infinity();
    double rate_lo_gbps = 50.0;
    double rate_hi_gbps = 500.0;
    int request_count = 0;
    std::uint64_t seed = 0;
};

/// Poisson arrivals, exponential (or infinite) holds, uniform ordered (s, d)
/// pairs and uniform data rates; fully determined by the seed.
std::vector<Request> generate_stream(const Topology& topo, const TrafficConfig& cfg);

struct RunConfig {
    SolverChoice solver = SolverChoice::A3G;
    SolverConfig solver_cfg;
    int k_paths = 3;
    double warmup_fraction = 0.2;        // arrivals excluded from the window
    double checkpoint_gbps = 1000.0;     // admitted-load checkpoint spacing
    double stop_admitted_gbps = 0.0;     // 0 = process the whole stream
    bool validate_each_event = false;
};

struct Checkpoint {
    double admitted_gbps = 0.0;
    long occupied_slot_links = 0;
    double naf = 0.0;
};

struct SimulationReport {
    int requests = 0;
    int allocated = 0;
    int blocked = 0;
    double requested_gbps = 0.0;
    double admitted_gbps = 0.0;
    double blocked_gbps = 0.0;
    // steady-state window, after warm-up
    double window_requested_gbps = 0.0;
    double window_blocked_gbps = 0.0;
    double bbp = 0.0;
    double mean_naf = 0.0;
    std::vector<Checkpoint> checkpoints;
};

SolveOutcome dispatch_solver(const NetworkState& state, const Request& request,
                             const ModulationTable& mods, const RunConfig& cfg,
                             std::uint64_t request_seed);

/// Discrete-event loop: each arrival is solved against the current state and
/// either applied or counted as blocked; departures free their slots.
SimulationReport run_simulation(const Topology& topo, const ModulationTable& mods,
                                const TrafficConfig& traffic, const RunConfig& run);

}  // namespace eon
