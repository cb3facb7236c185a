#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "eon/baselines.hpp"
#include "eon/io.hpp"

using namespace eon;

TEST_CASE("yen returns distinct simple paths sorted by distance") {
    auto spec = load_topology(EON_DATA_DIR "/nsfnet14.topo");
    auto paths = yen_ksp(spec.topo, 1, 9, 3);
    REQUIRE(paths.size() == 3);
    double prev = 0.0;
    std::set<std::vector<int>> uniq;
    for (const auto& p : paths) {
        CHECK(p.front() == 1);
        CHECK(p.back() == 9);
        std::set<int> nodes(p.begin(), p.end());
        CHECK(nodes.size() == p.size());  // simple
        double km = path_length(spec.topo, p);
        CHECK(km >= prev);
        prev = km;
        uniq.insert(p);
    }
    CHECK(uniq.size() == 3);
}

TEST_CASE("yen's first path is the shortest path") {
    auto spec = load_topology(EON_DATA_DIR "/nsfnet14.topo");
    // enumerate all simple paths 1 -> 5 and compare
    std::vector<std::vector<int>> all;
    std::vector<int> cur{1};
    std::vector<char> vis(15, 0);
    vis[1] = 1;
    std::function<void()> dfs = [&] {
        if (cur.back() == 5) {
            all.push_back(cur);
            return;
        }
        for (auto [u, li] : spec.topo.adjacency(cur.back())) {
            if (vis[static_cast<std::size_t>(u)]) continue;
            vis[static_cast<std::size_t>(u)] = 1;
            cur.push_back(u);
            dfs();
            cur.pop_back();
            vis[static_cast<std::size_t>(u)] = 0;
        }
    };
    dfs();
    double best = 1e18;
    for (const auto& p : all) best = std::min(best, path_length(spec.topo, p));
    auto paths = yen_ksp(spec.topo, 1, 5, 1);
    REQUIRE(paths.size() == 1);
    CHECK(path_length(spec.topo, paths[0]) == doctest::Approx(best));
}

TEST_CASE("ksp first-fit picks the direct link at the highest feasible level") {
    Topology topo(3, {{1, 2, 500.0}, {2, 3, 500.0}, {1, 3, 1100.0}}, 16);
    NetworkState st(topo);
    auto mods = ModulationTable::default_table();
    SolveOutcome out = ksp_first_fit(st, {1, 1, 3, 100.0}, mods, 3);
    REQUIRE(out.allocated());
    CHECK(out.allocation->path == std::vector<int>{1, 2, 3});  // 1000 km beats 1100 km
    CHECK(out.allocation->level == 3);                         // 8QAM reaches 1200 km
    CHECK(out.allocation->start_fsu == 1);
}

TEST_CASE("ksp falls through full paths to one with a window") {
    Topology topo(4, {{1, 2, 100.0}, {2, 4, 100.0}, {1, 3, 150.0}, {3, 4, 150.0}}, 8);
    NetworkState st(topo);
    ModulationTable mods({{1, "a", 3000.0}});
    // shortest path 1-2-4 is full; 1-3-4 has a window starting at 4
    for (int k = 1; k <= 8; ++k) st.set_slot(topo.link_index(1, 2), k, true);
    for (int k = 1; k <= 3; ++k) st.set_slot(topo.link_index(3, 4), k, true);
    SolveOutcome out = ksp_first_fit(st, {1, 1, 4, 30.0}, mods, 3);
    REQUIRE(out.allocated());
    CHECK(out.allocation->path == std::vector<int>{1, 3, 4});
    CHECK(out.allocation->start_fsu == 4);
}

TEST_CASE("ksp blocks when no path has a common window") {
    Topology topo(3, {{1, 2, 500.0}, {2, 3, 500.0}}, 4);
    NetworkState st(topo);
    st.set_slot(0, 2, true);
    st.set_slot(1, 4, true);
    ModulationTable mods({{1, "a", 3000.0}});
    SolveOutcome out = ksp_first_fit(st, {1, 1, 3, 30.0}, mods, 3);  // needs 3 contiguous
    CHECK_FALSE(out.allocated());
    CHECK(out.reason == BlockReason::NoFeasibleSolution);
}

TEST_CASE("first-fit returns the minimal feasible window start") {
    Topology topo(2, {{1, 2, 100.0}}, 12);
    NetworkState st(topo);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        NetworkState s2(topo);
        for (int k = 1; k <= 12; ++k)
            if (rng() % 2) s2.set_slot(0, k, true);
        int fs = 1 + static_cast<int>(rng() % 4);
        int got = first_fit_window(s2, {0}, fs);
        int expect = 0;
        for (int k = 1; k + fs - 1 <= 12 && !expect; ++k)
            if (s2.window_free(0, k, fs)) expect = k;
        CHECK(got == expect);
    }
}

TEST_CASE("aco-r reduces to first-fit on the only route") {
    Topology topo(3, {{1, 2, 400.0}, {2, 3, 400.0}}, 8);
    NetworkState st(topo);
    st.set_slot(0, 1, true);
    auto mods = ModulationTable::default_table();
    SolverConfig cfg;
    SolveOutcome out = aco_routing_only(st, {1, 1, 3, 50.0}, mods, cfg);
    REQUIRE(out.allocated());
    CHECK(out.allocation->path == std::vector<int>{1, 2, 3});
    CHECK(out.allocation->level == 3);  // 800 km: 8QAM reaches
    CHECK(out.allocation->start_fsu == 2);
}

TEST_CASE("aco-r blocks without crankback when its route has no window") {
    Topology topo(3, {{1, 2, 400.0}, {2, 3, 400.0}}, 4);
    NetworkState st(topo);
    for (int k = 1; k <= 4; ++k) st.set_slot(1, k, true);
    SolverConfig cfg;
    SolveOutcome out = aco_routing_only(st, {1, 1, 3, 30.0}, ModulationTable::default_table(), cfg);
    CHECK_FALSE(out.allocated());
}

TEST_CASE("aco-r mostly follows the distance-shortest route on an empty grid") {
    auto spec = load_topology(EON_DATA_DIR "/nsfnet14.topo");
    auto shortest = yen_ksp(spec.topo, 1, 3, 1)[0];
    NetworkState st(spec.topo);
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SolverConfig cfg;
        cfg.seed = seed;
        SolveOutcome out = aco_routing_only(st, {1, 1, 3, 100.0}, spec.mods, cfg);
        REQUIRE(out.allocated());
        if (out.allocation->path == shortest) ++hits;
    }
    CHECK(hits > 50);
}

TEST_CASE("baseline allocations pass the shared validator") {
    auto spec = load_topology(EON_DATA_DIR "/sixnode.topo");
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        NetworkState st(spec.topo);
        for (int li = 0; li < spec.topo.num_links(); ++li)
            for (int k = 1; k <= st.slots(); ++k)
                if (rng() % 3 == 0) st.set_slot(li, k, true);
        int s = 1 + static_cast<int>(rng() % 6), d = 1 + static_cast<int>(rng() % 6);
        if (s == d) continue;
        Request req{trial, s, d, 10.0 * (1 + rng() % 6)};
        SolverConfig cfg;
        cfg.seed = trial;
        for (auto out : {ksp_first_fit(st, req, spec.mods, 3),
                         aco_routing_only(st, req, spec.mods, cfg)}) {
            if (!out.allocated()) continue;
            std::string why;
            CHECK_MESSAGE(allocation_feasible(st, *out.allocation, spec.mods, &why), why);
        }
    }
}
