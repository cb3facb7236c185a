#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eon/aux_graph.hpp"
#include "eon/io.hpp"
#include "eon/metrics.hpp"
#include "eon/traffic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBlocked = 2;
constexpr int kExitConfig = 3;
constexpr int kExitContract = 4;

struct Common {
    std::string topology;
    std::string occupancy;
    int slots = 0;
};

eon::NetworkSpec load_spec(const Common& c) { return eon::load_topology(c.topology, c.slots); }

eon::SolverChoice parse_solver(const std::string& s) {
    if (s == "a3g") return eon::SolverChoice::A3G;
    if (s == "ksp") return eon::SolverChoice::Ksp;
    if (s == "aco-r") return eon::SolverChoice::AcoR;
    throw CLI::ValidationError("--solver", "unknown solver '" + s + "' (a3g, ksp, aco-r)");
}

void add_common(CLI::App* app, Common& c) {
    app->add_option("--topology", c.topology, "topology file")
        ->envname("EONSIM_TOPOLOGY")
        ->required();
    app->add_option("--occupancy", c.occupancy, "occupancy file applied before solving");
    app->add_option("--slots", c.slots, "override the per-link slot count");
}

void add_solver_opts(CLI::App* app, eon::SolverConfig& cfg) {
    app->add_option("--z", cfg.z, "ant-count scale (A = ceil(z * degree))");
    app->add_option("--sigma", cfg.sigma, "pheromone evaporation rate");
    app->add_option("--max-iters", cfg.max_iterations, "iteration cap");
    app->add_option("--quorum", cfg.quorum, "identical-fitness fraction for early stop");
    app->add_flag("--serial", [&cfg](std::int64_t) { cfg.parallel = false; },
                  "disable the parallel ant loop");
}

void print_allocation(const eon::Allocation& a, const eon::Topology& topo) {
    std::cout << "path:";
    for (int n : a.path) std::cout << ' ' << n;
    std::cout << "\nlevel: " << a.level << "\nstart_fsu: " << a.start_fsu
              << "\nslot_count: " << a.slot_count
              << "\ndistance_km: " << eon::path_length(topo, a.path) << '\n';
}

int run_solve(const Common& common, int source, int dest, double rate, const std::string& solver,
              std::uint64_t seed, int k_paths, eon::SolverConfig scfg) {
    auto spec = load_spec(common);
    eon::NetworkState state(spec.topo);
    if (!common.occupancy.empty()) eon::load_occupancy(state, common.occupancy);
    if (source < 1 || source > spec.topo.num_nodes() || dest < 1 ||
        dest > spec.topo.num_nodes() || source == dest) {
        std::cerr << "error: invalid source/destination pair\n";
        return kExitConfig;
    }
    eon::Request req{1, source, dest, rate};
    scfg.seed = seed;
    eon::RunConfig rc;
    rc.solver = parse_solver(solver);
    rc.solver_cfg = scfg;
    rc.k_paths = k_paths;
    eon::SolveOutcome out = eon::dispatch_solver(state, req, spec.mods, rc, seed);
    if (!out.allocated()) {
        std::cout << "blocked: " << eon::to_string(out.reason) << '\n';
        return kExitBlocked;
    }
    std::string why;
    if (!eon::allocation_feasible(state, *out.allocation, spec.mods, &why)) {
        std::cerr << "contract violation: " << why << '\n';
        return kExitContract;
    }
    print_allocation(*out.allocation, spec.topo);
    if (out.best_fitness) std::cout << "fitness: " << out.best_fitness->value() << '\n';
    std::cout << "iterations: " << out.iterations_used << "\nants: " << out.ants_deployed << '\n';
    return kExitOk;
}

int run_sweep(const Common& common, const std::vector<std::string>& solvers, double lambda,
              double hold, int seeds, std::uint64_t seed0, int requests, double stop_load,
              double checkpoint, int k_paths, const eon::SolverConfig& scfg,
              const std::string& out_dir) {
    auto spec = load_spec(common);
    std::filesystem::create_directories(out_dir);
    std::ofstream runs(out_dir + "/runs.csv");
    std::ofstream summary(out_dir + "/summary.csv");
    if (!runs || !summary) {
        std::cerr << "error: cannot write into " << out_dir << '\n';
        return kExitConfig;
    }
    runs << eon::metrics_csv_header() << '\n';
    summary << "solver,lambda,hold_time,seeds,mean_bbp,mean_naf,mean_admitted_gbps,"
               "extra_load_gbps\n";

    const std::string hold_str =
        std::isinf(hold) ? "inf" : ([&] { std::ostringstream o; o << hold; return o.str(); })();
    std::vector<double> mean_admitted;
    std::vector<double> mean_bbp, mean_naf;
    int run_id = 0;
    for (const std::string& sname : solvers) {
        eon::SolverChoice choice = parse_solver(sname);
        double adm = 0.0, bbp = 0.0, naf = 0.0;
        for (int s = 0; s < seeds; ++s) {
            eon::TrafficConfig tc;
            tc.lambda = lambda;
            tc.mean_hold = hold;
            tc.request_count = requests;
            tc.seed = seed0 + static_cast<std::uint64_t>(s);
            eon::RunConfig rc;
            rc.solver = choice;
            rc.solver_cfg = scfg;
            rc.k_paths = k_paths;
            rc.checkpoint_gbps = checkpoint;
            rc.stop_admitted_gbps = stop_load;
            auto rep = eon::run_simulation(spec.topo, spec.mods, tc, rc);
            ++run_id;
            for (const auto& cp : rep.checkpoints)
                runs << run_id << ',' << sname << ',' << tc.seed << ',' << lambda << ','
                     << hold_str << ',' << cp.admitted_gbps << ',' << cp.naf << ',' << rep.bbp
                     << ',' << cp.occupied_slot_links << ',' << rep.admitted_gbps << ','
                     << rep.blocked_gbps << '\n';
            if (rep.checkpoints.empty())
                runs << run_id << ',' << sname << ',' << tc.seed << ',' << lambda << ','
                     << hold_str << ",0," << rep.mean_naf << ',' << rep.bbp << ",0,"
                     << rep.admitted_gbps << ',' << rep.blocked_gbps << '\n';
            adm += rep.admitted_gbps;
            bbp += rep.bbp;
            naf += rep.mean_naf;
        }
        mean_admitted.push_back(adm / seeds);
        mean_bbp.push_back(bbp / seeds);
        mean_naf.push_back(naf / seeds);
    }
    auto extra = eon::extra_load_handled(mean_admitted);
    for (std::size_t i = 0; i < solvers.size(); ++i)
        summary << solvers[i] << ',' << lambda << ',' << hold_str << ',' << seeds << ','
                << mean_bbp[i] << ',' << mean_naf[i] << ',' << mean_admitted[i] << ',' << extra[i]
                << '\n';
    std::cout << "wrote " << out_dir << "/runs.csv and " << out_dir << "/summary.csv\n";
    return kExitOk;
}

int run_explain(const Common& common, int source, int dest, double rate, std::uint64_t seed,
                eon::SolverConfig scfg) {
    auto spec = load_spec(common);
    eon::NetworkState state(spec.topo);
    if (!common.occupancy.empty()) eon::load_occupancy(state, common.occupancy);
    eon::Request req{1, source, dest, rate};
    eon::AuxGraph ag = eon::build_auxiliary_graph(state, req, spec.mods);

    std::cout << "auxiliary links (" << ag.links.size() << "):\n";
    std::cout << "  neighbor  level  start_fsu  slot_count\n";
    for (const eon::AuxLink& al : ag.links)
        std::cout << "  " << al.neighbor << "         " << al.level << "      " << al.start_fsu
                  << "          " << al.slot_count << '\n';

    auto cs = eon::contiguity_reduction_stats(spec.topo.slots_per_link(), ag.fs_per_level);
    std::cout << "contiguity reduction: " << cs.count_without << " -> " << cs.count_with << " ("
              << 100.0 * cs.reduction << "%)\n";
    std::cout << "continuity reduction: "
              << 100.0 * eon::continuity_reduction_stats(spec.topo.num_links(),
                                                         spec.topo.degree(source))
              << "% of links stripped\n";

    scfg.seed = seed;
    eon::SolveTrace trace;
    eon::SolveOutcome out = eon::solve(state, req, spec.mods, scfg, &trace);
    std::cout << "ant walks:\n";
    for (const auto& row : trace.rows) {
        std::cout << "  ite " << row.iteration << " ant " << row.ant.label << " ("
                  << (row.ant.exploring ? "explore" : "exploit") << ") "
                  << eon::to_string(row.ant.status) << " tour:";
        for (int n : row.ant.tour) std::cout << ' ' << n;
        if (row.ant.fitness)
            std::cout << " level=" << row.ant.level << " k=" << row.ant.start_fsu
                      << " fitness=" << row.ant.fitness->value();
        std::cout << '\n';
    }
    if (!out.allocated()) {
        std::cout << "blocked: " << eon::to_string(out.reason) << '\n';
        return kExitBlocked;
    }
    print_allocation(*out.allocation, spec.topo);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elastic optical network RMLSA solver and simulator"};
    app.require_subcommand(1);

    Common c_solve, c_sweep, c_explain;
    int source = 0, dest = 0, seeds = 1, requests = 2000, k_paths = 3;
    double rate = 100.0, lambda = 1.0, hold = std::numeric_limits<double>::infinity();
    double stop_load = 0.0, checkpoint = 1000.0;
    std::uint64_t seed = 0;
    std::string solver = "a3g", out_dir = "sweep-out";
    std::vector<std::string> solvers{"a3g", "ksp", "aco-r"};
    eon::SolverConfig scfg;

    CLI::App* solve = app.add_subcommand("solve", "solve one request against a network state");
    add_common(solve, c_solve);
    solve->add_option("--source", source)->required();
    solve->add_option("--dest", dest)->required();
    solve->add_option("--rate", rate, "data rate in Gbps")->required();
    solve->add_option("--solver", solver, "a3g, ksp or aco-r");
    solve->add_option("--seed", seed)->envname("EONSIM_SEED");
    solve->add_option("--k-paths", k_paths, "candidate paths for the ksp solver");
    add_solver_opts(solve, scfg);

    CLI::App* sweep = app.add_subcommand("sweep", "run traffic simulations and write CSVs");
    add_common(sweep, c_sweep);
    sweep->add_option("--solvers", solvers, "solvers to compare")->delimiter(',');
    sweep->add_option("--lambda", lambda, "arrival rate");
    sweep->add_option("--hold", hold, "mean hold time (omit for infinite holds)");
    sweep->add_option("--seeds", seeds, "number of seeds per solver");
    sweep->add_option("--seed", seed, "first seed")->envname("EONSIM_SEED");
    sweep->add_option("--requests", requests, "arrivals per run");
    sweep->add_option("--stop-load", stop_load, "stop once admitted load reaches this (Gbps)");
    sweep->add_option("--checkpoint", checkpoint, "checkpoint spacing (Gbps)");
    sweep->add_option("--k-paths", k_paths);
    sweep->add_option("--out", out_dir, "output directory");
    add_solver_opts(sweep, scfg);

    CLI::App* explain = app.add_subcommand("explain", "show the auxiliary graph and ant walks");
    add_common(explain, c_explain);
    explain->add_option("--source", source)->required();
    explain->add_option("--dest", dest)->required();
    explain->add_option("--rate", rate)->required();
    explain->add_option("--seed", seed)->envname("EONSIM_SEED");
    add_solver_opts(explain, scfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return run_solve(c_solve, source, dest, rate, solver, seed, k_paths, scfg);
        if (sweep->parsed())
            return run_sweep(c_sweep, solvers, lambda, hold, seeds, seed, requests, stop_load,
                             checkpoint, k_paths, scfg, out_dir);
        if (explain->parsed()) return run_explain(c_explain, source, dest, rate, seed, scfg);
    } catch (const eon::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitContract;
    }
    return kExitConfig;
}
