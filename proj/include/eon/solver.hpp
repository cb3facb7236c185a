#pragma once

#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>

#include "eon/aux_graph.hpp"
#include "eon/fitness.hpp"

namespace eon {

struct SolverConfig {
    double z = 2.0;          // ant-count scaling, A = ceil(z * effective degree)
    int max_iterations = 5;
    double sigma = 0.5;      // evaporation
    double quorum = 0.40;    // identical-fitness fraction for early termination
    std::uint64_t seed = 0;
    bool parallel = true;    // OpenMP ant loop; serial path kept as reference
};

enum class AntStatus { Reached, NoAuxLink, NoFeasibleNode, ContinuityIssue, ReachIssue };

const char* to_string(AntStatus s);

struct Ant {
    int label = 0;
    bool exploring = true;
    std::vector<int> tour;  // starts at the source
    double dis = 0.0;
    int start_fsu = 0;
    int level = 0;
    int slot_count = 0;
    int aux_index = -1;  // chosen AuxGraph::links entry
    int delta_f = 0;
    AntStatus status = AntStatus::NoAuxLink;
    std::optional<Fitness> fitness;  // finite iff status == Reached
};

enum class BlockReason { None, NoAuxLinks, NoFeasibleSolution };

const char* to_string(BlockReason r);

struct SolveOutcome {
    std::optional<Allocation> allocation;
    BlockReason reason = BlockReason::None;
    int iterations_used = 0;
    int ants_deployed = 0;
    std::optional<Fitness> best_fitness;

    bool allocated() const { return allocation.has_value(); }
};

/// Edge pheromones live per topology link, aux pheromones per AuxGraph link,
/// in the same order. Initial stores are never mutated during a solve.
struct PheromoneStore {
    std::vector<double> edge_tau;
    std::vector<double> aux_tau;
    std::vector<double> edge_utau;
    std::vector<double> aux_utau;
};

PheromoneStore init_pheromones(const AuxGraph& ag);

/// A = ceil(z * effective source degree); 0 iff the aux graph is empty.
int ant_count(const AuxGraph& ag, double z);

/// (n_explore, n_exploit) for a given iteration; explorers are labels
/// 1..ceil(A/iteration).
std::pair<int, int> split_ants(int total_ants, int iteration);

/// Per-ant RNG stream, deterministic in (seed, iteration, label) so ants may
/// run in any order or in parallel.
std::mt19937_64 ant_rng(std::uint64_t seed, int iteration, int label);

/// One constrained walk: roulette first hop over aux links, then roulette over
/// unvisited neighbors with window, loop and reach checks per hop.
Ant traverse(const AuxGraph& ag, const NetworkState& state, std::span<const double> edge_ph,
             std::span<const double> aux_ph, std::mt19937_64& rng);

/// Deposit 1/fitness on every tour edge and the chosen aux link of each
/// reached ant, then evaporate everything by (1 - sigma).
void update_pheromones(PheromoneStore& store, const AuxGraph& ag, std::span<const Ant> ants,
                       double sigma);

struct SolveTrace {
    struct Row {
        int iteration = 0;
        Ant ant;
    };
    std::vector<Row> rows;
};

/// Candidate ordering for final allocation: minimum fitness, then least
/// start-FSU, then shorter distance, then lexicographically smaller tour.
bool better_candidate(const Ant& a, const Ant& b);

SolveOutcome solve(const NetworkState& state, const Request& request, const ModulationTable& mods,
                   const SolverConfig& cfg, SolveTrace* trace = nullptr);

std::uint64_t mix64(std::uint64_t x);

}  // namespace eon
