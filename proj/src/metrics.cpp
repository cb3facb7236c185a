#include "eon/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "eon/fitness.hpp"

namespace eon {

double network_average_fragmentation(const NetworkState& state) {
    const int num_links = state.topology().num_links();
    double sum = 0.0;
    for (int li = 0; li < num_links; ++li) {
        const auto& occ = state.link_occupancy(li);
        int vacant = free_slot_count(occ);
        if (vacant == 0) continue;  // nothing left to fragment
        sum += 1.0 - static_cast<double>(largest_free_run(occ)) / vacant;
    }
    return sum / num_links;
}

double bandwidth_blocking_probability(double blocked_gbps, double requested_gbps) {
    if (requested_gbps <= 0.0) throw std::invalid_argument("empty measurement window");
    return blocked_gbps / requested_gbps;
}

double fsu_savings_percent(long slots_a, long slots_b) {
    if (slots_b == 0) throw std::invalid_argument("reference slot count is zero");
    return 100.0 * static_cast<double>(slots_b - slots_a) / static_cast<double>(slots_b);
}

std::vector<double> extra_load_handled(const std::vector<double>& mean_admitted) {
    if (mean_admitted.empty()) return {};
    double lo = *std::min_element(mean_admitted.begin(), mean_admitted.end());
    std::vector<double> out;
    out.reserve(mean_admitted.size());
    for (double v : mean_admitted) out.push_back(v - lo);
    return out;
}

}  // namespace eon
