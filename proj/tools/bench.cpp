// Throughput comparison between the serial reference solver and the
// OpenMP-parallel ant loop on identical request batches.
#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "eon/io.hpp"
#include "eon/solver.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double run_batch(const eon::NetworkSpec& spec, const std::vector<eon::Request>& reqs, bool parallel,
                 int repeats, std::uint64_t& checksum) {
    eon::SolverConfig cfg;
    cfg.z = 8.0;  // large colonies make the ant loop the hot path
    cfg.parallel = parallel;
    checksum = 0;
    auto t0 = Clock::now();
    for (int rep = 0; rep < repeats; ++rep) {
        eon::NetworkState state(spec.topo);
        for (const auto& r : reqs) {
            cfg.seed = static_cast<std::uint64_t>(r.id) * 1000003u + rep;
            auto out = eon::solve(state, r, spec.mods, cfg);
            if (out.allocated()) {
                state.allocate(*out.allocation);
                checksum = checksum * 31 +
                           static_cast<std::uint64_t>(out.allocation->start_fsu * 131 +
                                                      out.allocation->level);
            } else {
                checksum = checksum * 31 + 7;
            }
        }
    }
    auto t1 = Clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::string topo_path = argc > 1 ? argv[1] : std::string(EON_DATA_DIR "/nsfnet14.topo");
    int n_requests = argc > 2 ? std::stoi(argv[2]) : 200;
    int repeats = argc > 3 ? std::stoi(argv[3]) : 3;

    auto spec = eon::load_topology(topo_path);
    std::mt19937_64 rng(99);
    std::vector<eon::Request> reqs;
    for (int i = 0; i < n_requests; ++i) {
        int s = 1 + static_cast<int>(rng() % spec.topo.num_nodes());
        int d = s;
        while (d == s) d = 1 + static_cast<int>(rng() % spec.topo.num_nodes());
        double rate = 50.0 + static_cast<double>(rng() % 451);
        reqs.push_back({i + 1, s, d, rate});
    }

    std::uint64_t sum_serial = 0, sum_parallel = 0;
    double t_serial = run_batch(spec, reqs, false, repeats, sum_serial);
    double t_parallel = run_batch(spec, reqs, true, repeats, sum_parallel);

    long solved = static_cast<long>(n_requests) * repeats;
    std::cout << "requests per batch: " << n_requests << ", repeats: " << repeats << '\n';
    std::cout << "serial:   " << t_serial << " s  (" << solved / t_serial << " solves/s)\n";
    std::cout << "parallel: " << t_parallel << " s  (" << solved / t_parallel << " solves/s)\n";
    std::cout << "speedup:  " << t_serial / t_parallel << "x\n";
    if (sum_serial != sum_parallel) {
        std::cout << "MISMATCH: serial and parallel runs diverged\n";
        return 1;
    }
    std::cout << "checksums match: " << sum_serial << '\n';
    return 0;
}
