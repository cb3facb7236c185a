#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace eon {

/// Number of maximal free runs in a link occupancy array.
int count_fragments(std::span<const std::uint8_t> occ);

/// Length of the largest free run.
int largest_free_run(std::span<const std::uint8_t> occ);

int free_slot_count(std::span<const std::uint8_t> occ);

/// Fragment delta caused by occupying [k, k+fs-1] (1-based, window must be
/// free): -1 if both boundary neighbors are occupied, 0 if exactly one, +1 if
/// neither. Grid edges count as occupied.
int fragment_change(std::span<const std::uint8_t> occ, int k, int fs);

/// Exact rational fitness delta_f/(2*lt) + fs*lt over integer components,
/// so equality and ordering are not subject to float rounding.
struct Fitness {
    int delta_f = 0;
    int lt = 0;  // links traversed, >= 1
    int fs = 0;  // slots per link

    double value() const { return delta_f / (2.0 * lt) + static_cast<double>(fs) * lt; }

    // f = (delta_f + 2*fs*lt^2) / (2*lt); compare by cross-multiplication.
    std::int64_t numerator() const {
        return delta_f + 2ll * fs * static_cast<std::int64_t>(lt) * lt;
    }
    friend bool operator==(const Fitness& x, const Fitness& y) {
        return x.numerator() * y.lt == y.numerator() * x.lt;
    }
    friend std::strong_ordering operator<=>(const Fitness& x, const Fitness& y) {
        return x.numerator() * y.lt <=> y.numerator() * x.lt;
    }
};

}  // namespace eon
