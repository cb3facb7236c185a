#pragma once

#include <vector>

#include "eon/network_state.hpp"

namespace eon {

/// Eq-style per-link fragmentation, averaged over all links: 1 minus the
/// largest free run over total free slots; a fully occupied link contributes 0.
double network_average_fragmentation(const NetworkState& state);

/// Blocked requested data rate over total requested data rate.
double bandwidth_blocking_probability(double blocked_gbps, double requested_gbps);

/// 100 * (slots_b - slots_a) / slots_b.
double fsu_savings_percent(long slots_a, long slots_b);

/// Per-solver mean admitted load minus the smallest mean across solvers.
std::vector<double> extra_load_handled(const std::vector<double>& mean_admitted);

}  // namespace eon
