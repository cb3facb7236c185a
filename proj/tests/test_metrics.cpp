#include <random>

#include "doctest.h"
#include "eon/metrics.hpp"

using namespace eon;

namespace {

// independent per-link scan used as the NAF oracle
double naf_oracle(const NetworkState& st) {
    double sum = 0.0;
    for (int li = 0; li < st.topology().num_links(); ++li) {
        int total_free = 0, best_run = 0, run = 0;
        for (int k = 1; k <= st.slots(); ++k) {
            if (st.slot_occupied(li, k)) {
                run = 0;
            } else {
                ++total_free;
                best_run = std::max(best_run, ++run);
            }
        }
        if (total_free > 0) sum += 1.0 - static_cast<double>(best_run) / total_free;
    }
    return sum / st.topology().num_links();
}

}  // namespace

TEST_CASE("network average fragmentation examples") {
    Topology topo(3, {{1, 2, 100.0}, {2, 3, 100.0}}, 8);

    SUBCASE("empty network has zero fragmentation") {
        NetworkState st(topo);
        CHECK(network_average_fragmentation(st) == 0.0);
    }
    SUBCASE("two equal runs on one link") {
        NetworkState st(topo);
        // link 0: free runs {2, 2} -> 1 - 2/4 = 0.5; link 1 untouched -> 0
        st.set_slot(0, 1, true);
        st.set_slot(0, 4, true);
        st.set_slot(0, 7, true);
        st.set_slot(0, 8, true);
        CHECK(network_average_fragmentation(st) == doctest::Approx(0.25));
    }
    SUBCASE("a fully occupied link contributes zero") {
        NetworkState st(topo);
        for (int k = 1; k <= 8; ++k) st.set_slot(0, k, true);
        CHECK(network_average_fragmentation(st) == 0.0);
    }
}

TEST_CASE("network average fragmentation matches an independent scanner") {
    Topology topo(4, {{1, 2, 100.0}, {2, 3, 100.0}, {3, 4, 100.0}, {1, 4, 100.0}}, 16);
    std::mt19937 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        NetworkState st(topo);
        for (int li = 0; li < topo.num_links(); ++li)
            for (int k = 1; k <= 16; ++k)
                if (rng() % 3 == 0) st.set_slot(li, k, true);
        CHECK(network_average_fragmentation(st) == doctest::Approx(naf_oracle(st)));
    }
}

TEST_CASE("bandwidth blocking probability") {
    CHECK(bandwidth_blocking_probability(0.0, 1000.0) == 0.0);
    CHECK(bandwidth_blocking_probability(1000.0, 1000.0) == 1.0);
    CHECK(bandwidth_blocking_probability(200.0, 1000.0) == doctest::Approx(0.2));
    CHECK_THROWS(bandwidth_blocking_probability(0.0, 0.0));
}

TEST_CASE("fsu savings percent") {
    CHECK(fsu_savings_percent(945, 1000) == doctest::Approx(5.5));
    CHECK(fsu_savings_percent(1000, 1000) == 0.0);
    // antisymmetry up to the changed denominator
    CHECK(fsu_savings_percent(50, 100) == doctest::Approx(50.0));
    CHECK(fsu_savings_percent(100, 50) == doctest::Approx(-100.0));
}

TEST_CASE("extra load handled subtracts the weakest solver") {
    auto extra = extra_load_handled({21.1, 20.0, 20.5});
    REQUIRE(extra.size() == 3);
    CHECK(extra[0] == doctest::Approx(1.1));
    CHECK(extra[1] == 0.0);
    CHECK(extra[2] == doctest::Approx(0.5));

    // permutation of inputs permutes outputs
    auto p = extra_load_handled({20.0, 20.5, 21.1});
    CHECK(p[0] == 0.0);
    CHECK(p[1] == doctest::Approx(0.5));
    CHECK(p[2] == doctest::Approx(1.1));
}
