#include <random>
#include <algorithm>
#include <set>

#include "doctest.h"
#include "eon/aux_graph.hpp"
#include "eon/io.hpp"

using namespace eon;

namespace {

// Independent enumeration of free contiguous windows at the source.
std::set<std::tuple<int, int, int>> brute_force_windows(const NetworkState& st, int source,
                                                        const std::vector<int>& fs_per_level) {
    std::set<std::tuple<int, int, int>> out;  // (neighbor, level, k)
    for (auto [nbr, li] : st.topology().adjacency(source)) {
        for (std::size_t l = 0; l < fs_per_level.size(); ++l) {
            int fs = fs_per_level[l];
            for (int k = 1; k + fs - 1 <= st.slots(); ++k) {
                bool free = true;
                for (int q = k; q < k + fs; ++q) free = free && !st.slot_occupied(li, q);
                if (free) out.emplace(nbr, static_cast<int>(l) + 1, k);
            }
        }
    }
    return out;
}

std::set<std::tuple<int, int, int>> as_set(const AuxGraph& ag) {
    std::set<std::tuple<int, int, int>> out;
    for (const AuxLink& al : ag.links) out.emplace(al.neighbor, al.level, al.start_fsu);
    return out;
}

}  // namespace

TEST_CASE("fully free link yields N-FS+1 windows per (neighbor, level)") {
    Topology topo(2, {{1, 2, 100.0}}, 6);
    ModulationTable mods({{1, "a", 3000.0}, {2, "b", 1500.0}});
    NetworkState st(topo);
    Request req{1, 1, 2, 20.0};  // FS = 2 at level 1, FS = 1 at level 2
    AuxGraph ag = build_auxiliary_graph(st, req, mods);
    int fs2_links = 0, fs1_links = 0;
    for (const AuxLink& al : ag.links) (al.slot_count == 2 ? fs2_links : fs1_links)++;
    CHECK(fs2_links == 5);  // N - FS + 1 = 6 - 2 + 1
    CHECK(fs1_links == 6);
}

TEST_CASE("fully occupied source links yield an empty aux-link set") {
    Topology topo(3, {{1, 2, 100.0}, {2, 3, 100.0}}, 6);
    NetworkState st(topo);
    for (int k = 1; k <= 6; ++k) st.set_slot(0, k, true);
    AuxGraph ag = build_auxiliary_graph(st, {1, 1, 3, 20.0}, ModulationTable::default_table());
    CHECK(ag.links.empty());
    CHECK(ag.effective_neighbors().empty());
}

TEST_CASE("occupancy fixture removes 54% of the aux links") {
    auto spec = load_topology(EON_DATA_DIR "/sixnode.topo");
    Request req{1, 1, 6, 20.0};  // FS = {2, 1}

    NetworkState empty(spec.topo);
    AuxGraph free_ag = build_auxiliary_graph(empty, req, spec.mods);
    CHECK(free_ag.links.size() == 22);  // deg(s)=2, (6-2+1)+(6-1+1) per link

    NetworkState st(spec.topo);
    load_occupancy(st, EON_DATA_DIR "/fig5.occ");
    AuxGraph ag = build_auxiliary_graph(st, req, spec.mods);
    CHECK(ag.links.size() == 10);
    double reduction = 100.0 * (1.0 - static_cast<double>(ag.links.size()) / free_ag.links.size());
    CHECK(reduction == doctest::Approx(54.0).epsilon(0.02));
}

TEST_CASE("aux links are sound and complete against brute force") {
    std::mt19937 rng(23);
    Topology topo(5, {{1, 2, 100.0}, {1, 3, 150.0}, {2, 4, 100.0}, {3, 4, 100.0}, {4, 5, 100.0}},
                  12);
    ModulationTable mods({{1, "a", 3000.0}, {2, "b", 1500.0}});
    for (int trial = 0; trial < 300; ++trial) {
        NetworkState st(topo);
        for (int li = 0; li < topo.num_links(); ++li)
            for (int k = 1; k <= 12; ++k)
                if (rng() % 3 == 0) st.set_slot(li, k, true);
        double rho = 10.0 * (1 + rng() % 6);
        Request req{1, 1, 5, rho};
        AuxGraph ag = build_auxiliary_graph(st, req, mods);

        // soundness: every advertised window is actually free
        for (const AuxLink& al : ag.links) {
            CHECK(al.start_fsu + al.slot_count - 1 <= st.slots());
            for (int q = al.start_fsu; q < al.start_fsu + al.slot_count; ++q)
                CHECK_FALSE(st.slot_occupied(al.link, q));
        }
        // completeness
        CHECK(as_set(ag) == brute_force_windows(st, 1, ag.fs_per_level));
    }
}

TEST_CASE("occupying an extra slot never adds aux links") {
    std::mt19937 rng(31);
    Topology topo(3, {{1, 2, 100.0}, {1, 3, 150.0}, {2, 3, 100.0}}, 10);
    ModulationTable mods({{1, "a", 3000.0}, {2, "b", 1500.0}});
    Request req{1, 1, 3, 30.0};
    for (int trial = 0; trial < 100; ++trial) {
        NetworkState st(topo);
        for (int li = 0; li < topo.num_links(); ++li)
            for (int k = 1; k <= 10; ++k)
                if (rng() % 4 == 0) st.set_slot(li, k, true);
        auto before = as_set(build_auxiliary_graph(st, req, mods));
        // occupy one more free slot at a source link, if any
        int li = rng() % 2 == 0 ? 0 : 1;
        std::vector<int> free;
        for (int k = 1; k <= 10; ++k)
            if (!st.slot_occupied(li, k)) free.push_back(k);
        if (free.empty()) continue;
        st.set_slot(li, free[rng() % free.size()], true);
        auto after = as_set(build_auxiliary_graph(st, req, mods));
        CHECK(std::includes(before.begin(), before.end(), after.begin(), after.end()));
    }
}

TEST_CASE("count bound: |aux_links| <= deg(s) * sum(N - FS_l + 1)") {
    auto spec = load_topology(EON_DATA_DIR "/sixnode.topo");
    NetworkState st(spec.topo);
    AuxGraph ag = build_auxiliary_graph(st, {1, 2, 6, 40.0}, spec.mods);
    long bound = 0;
    for (int fs : ag.fs_per_level) bound += spec.topo.slots_per_link() - fs + 1;
    bound *= spec.topo.degree(2);
    CHECK(static_cast<long>(ag.links.size()) <= bound);
}

TEST_CASE("contiguity reduction stats reproduce the closed form") {
    auto s100 = contiguity_reduction_stats(100, {1, 2});
    CHECK(s100.count_without == doctest::Approx(5050.0));
    CHECK(s100.count_with == doctest::Approx(199.0));
    CHECK(s100.reduction == doctest::Approx(0.9606).epsilon(1e-3));

    auto s320 = contiguity_reduction_stats(320, {1, 2});
    CHECK(s320.count_without == doctest::Approx(51360.0));
    CHECK(s320.count_with == doctest::Approx(639.0));
    CHECK(s320.reduction == doctest::Approx(0.98756).epsilon(1e-4));

    // the formula value, not the rounded figure sometimes quoted for N=6
    auto s6 = contiguity_reduction_stats(6, {1, 2});
    CHECK(s6.count_without == doctest::Approx(21.0));
    CHECK(s6.count_with == doctest::Approx(11.0));
    CHECK(s6.reduction == doctest::Approx(10.0 / 21.0).epsilon(1e-9));
}

TEST_CASE("continuity reduction stats") {
    CHECK(continuity_reduction_stats(21, 2) == doctest::Approx(19.0 / 21.0));  // ~0.9047
    CHECK(continuity_reduction_stats(21, 4) == doctest::Approx(17.0 / 21.0));  // ~0.8095
    CHECK(continuity_reduction_stats(21, 21) == 0.0);
    CHECK_THROWS(continuity_reduction_stats(21, 0));
}
