#include "eon/fitness.hpp"

#include <stdexcept>

namespace eon {

int count_fragments(std::span<const std::uint8_t> occ) {
    int runs = 0;
    bool in_run = false;
    for (std::uint8_t s : occ) {
        if (!s && !in_run) ++runs;
        in_run = !s;
    }
    return runs;
}

int largest_free_run(std::span<const std::uint8_t> occ) {
    int best = 0, cur = 0;
    for (std::uint8_t s : occ) {
        cur = s ? 0 : cur + 1;
        if (cur > best) best = cur;
    }
    return best;
}

int free_slot_count(std::span<const std::uint8_t> occ) {
    int n = 0;
    for (std::uint8_t s : occ)
        if (!s) ++n;
    return n;
}

int fragment_change(std::span<const std::uint8_t> occ, int k, int fs) {
    const int n = static_cast<int>(occ.size());
    if (k < 1 || fs < 1 || k + fs - 1 > n) throw std::invalid_argument("window outside grid");
    for (int q = k; q < k + fs; ++q)
        if (occ[static_cast<std::size_t>(q - 1)]) throw std::invalid_argument("window not free");
    // grid edges count as occupied
    bool left = (k == 1) || occ[static_cast<std::size_t>(k - 2)];
    bool right = (k + fs - 1 == n) || occ[static_cast<std::size_t>(k + fs - 1)];
    int cf = static_cast<int>(left) + static_cast<int>(right);
    return 1 - cf;  // cf = 2,1,0 -> -1,0,+1
}

}  // namespace eon
