#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace eon {

struct ModulationLevel {
    int index = 0;          // 1-based level index
    std::string name;
    double reach_km = 0.0;  // maximum transparent reach
};

/// Ordered modulation table; level indices are 1..M with strictly
/// decreasing reach.
class ModulationTable {
public:
    ModulationTable() = default;
    explicit ModulationTable(std::vector<ModulationLevel> levels);

    static ModulationTable default_table();

    int size() const { return static_cast<int>(levels_.size()); }
    const ModulationLevel& level(int index) const;  // 1-based
    const std::vector<ModulationLevel>& levels() const { return levels_; }

private:
    std::vector<ModulationLevel> levels_;
};

/// Slots needed to carry data_rate_gbps at modulation level m_l,
/// assuming 10 Gbps per slot per level step.
int required_slots(double data_rate_gbps, int level_index, const ModulationTable& table);

}  // namespace eon
