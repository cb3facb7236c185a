#include "eon/modulation.hpp"

namespace eon {

ModulationTable::ModulationTable(std::vector<ModulationLevel> levels) : levels_(std::move(levels)) {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (levels_[i].index != static_cast<int>(i) + 1)
            throw std::invalid_argument("modulation level indices must be 1..M in order");
        if (levels_[i].reach_km <= 0.0)
            throw std::invalid_argument("modulation reach must be positive");
        if (i > 0 && levels_[i].reach_km >= levels_[i - 1].reach_km)
            throw std::invalid_argument("modulation reach must strictly decrease with level");
    }
}

ModulationTable ModulationTable::default_table() {
    return ModulationTable({{1, "BPSK", 3600.0},
                            {2, "QPSK", 2400.0},
                            {3, "8QAM", 1200.0},
                            {4, "16QAM", 600.0}});
}

const ModulationLevel& ModulationTable::level(int index) const {
    if (index < 1 || index > size()) throw std::out_of_range("modulation level index out of range");
    return levels_[static_cast<std::size_t>(index) - 1];
}

int required_slots(double data_rate_gbps, int level_index, const ModulationTable& table) {
    if (data_rate_gbps <= 0.0) throw std::invalid_argument("data rate must be positive");
    table.level(level_index);  // range check
    return static_cast<int>(std::ceil(data_rate_gbps / (10.0 * level_index)));
}

}  // namespace eon
