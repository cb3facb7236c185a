#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "eon/topology.hpp"

namespace eon {

struct Request {
    int id = 0;
    int source = 0;
    int destination = 0;
    double data_rate_gbps = 0.0;
    double arrival_time = 0.0;
    double hold_time = std::numeric_limits<double>::infinity();
};

struct Allocation {
    int request_id = 0;
    std::vector<int> path;  // node sequence, source first
    int level = 0;          // modulation level index
    int start_fsu = 0;      // 1-based slot index
    int slot_count = 0;
};

struct OverlapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownRequestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Topology plus per-link slot occupancy and the active-connection table.
/// Slot indices are 1-based at the interface.
class NetworkState {
public:
    explicit NetworkState(const Topology& topo);

    const Topology& topology() const { return *topo_; }
    int slots() const { return topo_->slots_per_link(); }

    bool slot_occupied(int link, int k) const {
        return occ_[static_cast<std::size_t>(link)][static_cast<std::size_t>(k - 1)] != 0;
    }
    bool window_free(int link, int k, int fs) const;
    const std::vector<std::uint8_t>& link_occupancy(int link) const {
        return occ_[static_cast<std::size_t>(link)];
    }

    /// Marks the allocation's slots occupied on every path link and registers
    /// the connection. Throws OverlapError if any target slot is taken.
    void allocate(const Allocation& alloc);

    /// Frees exactly the slots of the named request. Throws UnknownRequestError.
    void release(int request_id);

    /// Injects occupancy directly (fixtures and occupancy files); bypasses the
    /// connection table.
    void set_slot(int link, int k, bool occupied);

    const std::map<int, Allocation>& active() const { return active_; }
    long occupied_slot_links() const;

    /// Conservation + non-overlap audit; throws on violation.
    void check_invariants() const;

private:
    const Topology* topo_;
    std::vector<std::vector<std::uint8_t>> occ_;
    std::map<int, Allocation> active_;
    long injected_ = 0;  // slots set via set_slot, outside the connection table
};

/// Shared feasibility validator: simple path from s to d, window free on every
/// link, window inside the grid, path length within the level's reach.
bool allocation_feasible(const NetworkState& state, const Allocation& alloc,
                         const ModulationTable& mods, std::string* why = nullptr);

}  // namespace eon
