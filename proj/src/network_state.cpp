#include "eon/network_state.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace eon {

NetworkState::NetworkState(const Topology& topo) : topo_(&topo) {
    occ_.assign(static_cast<std::size_t>(topo.num_links()),
                std::vector<std::uint8_t>(static_cast<std::size_t>(topo.slots_per_link()), 0));
}

bool NetworkState::window_free(int link, int k, int fs) const {
    if (k < 1 || k + fs - 1 > slots()) return false;
    const auto& o = occ_[static_cast<std::size_t>(link)];
    for (int q = k; q < k + fs; ++q)
        if (o[static_cast<std::size_t>(q - 1)]) return false;
    return true;
}

void NetworkState::allocate(const Allocation& alloc) {
    if (alloc.path.size() < 2 || alloc.slot_count < 1 || alloc.start_fsu < 1 ||
        alloc.start_fsu + alloc.slot_count - 1 > slots())
        throw OverlapError("malformed allocation for request " + std::to_string(alloc.request_id));
    if (active_.count(alloc.request_id))
        throw OverlapError("request " + std::to_string(alloc.request_id) + " already active");

    std::vector<int> link_ids;
    for (std::size_t i = 0; i + 1 < alloc.path.size(); ++i) {
        int li = topo_->link_index(alloc.path[i], alloc.path[i + 1]);
        if (li < 0) throw OverlapError("allocation path hop is not a link");
        if (!window_free(li, alloc.start_fsu, alloc.slot_count))
            throw OverlapError("slot overlap on link " + std::to_string(li) + " for request " +
                               std::to_string(alloc.request_id));
        link_ids.push_back(li);
    }
    for (int li : link_ids)
        for (int q = alloc.start_fsu; q < alloc.start_fsu + alloc.slot_count; ++q)
            occ_[static_cast<std::size_t>(li)][static_cast<std::size_t>(q - 1)] = 1;
    active_.emplace(alloc.request_id, alloc);
}

void NetworkState::release(int request_id) {
    auto it = active_.find(request_id);
    if (it == active_.end())
        throw UnknownRequestError("release of unknown request " + std::to_string(request_id));
    const Allocation& a = it->second;
    for (std::size_t i = 0; i + 1 < a.path.size(); ++i) {
        int li = topo_->link_index(a.path[i], a.path[i + 1]);
        for (int q = a.start_fsu; q < a.start_fsu + a.slot_count; ++q)
            occ_[static_cast<std::size_t>(li)][static_cast<std::size_t>(q - 1)] = 0;
    }
    active_.erase(it);
}

void NetworkState::set_slot(int link, int k, bool occupied) {
    auto& cell = occ_.at(static_cast<std::size_t>(link)).at(static_cast<std::size_t>(k - 1));
    if (cell != static_cast<std::uint8_t>(occupied)) injected_ += occupied ? 1 : -1;
    cell = occupied ? 1 : 0;
}

long NetworkState::occupied_slot_links() const {
    long n = 0;
    for (const auto& o : occ_) n += std::count(o.begin(), o.end(), std::uint8_t{1});
    return n;
}

void NetworkState::check_invariants() const {
    std::vector<std::vector<int>> claims(occ_.size(),
                                         std::vector<int>(static_cast<std::size_t>(slots()), 0));
    long expected = injected_;
    for (const auto& [id, a] : active_) {
        expected += static_cast<long>(a.path.size() - 1) * a.slot_count;
        std::set<int> uniq(a.path.begin(), a.path.end());
        if (uniq.size() != a.path.size()) throw std::logic_error("active allocation path not simple");
        for (std::size_t i = 0; i + 1 < a.path.size(); ++i) {
            int li = topo_->link_index(a.path[i], a.path[i + 1]);
            if (li < 0) throw std::logic_error("active allocation path off-topology");
            for (int q = a.start_fsu; q < a.start_fsu + a.slot_count; ++q) {
                int& c = claims[static_cast<std::size_t>(li)][static_cast<std::size_t>(q - 1)];
                if (++c > 1) throw std::logic_error("slot claimed by more than one connection");
                if (!slot_occupied(li, q)) throw std::logic_error("claimed slot not marked occupied");
            }
        }
    }
    if (occupied_slot_links() != expected)
        throw std::logic_error("occupied slot count does not match active allocations");
}

bool allocation_feasible(const NetworkState& state, const Allocation& alloc,
                         const ModulationTable& mods, std::string* why) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (alloc.path.size() < 2) return fail("path too short");
    std::set<int> uniq(alloc.path.begin(), alloc.path.end());
    if (uniq.size() != alloc.path.size()) return fail("path not simple");
    if (alloc.start_fsu < 1 || alloc.start_fsu + alloc.slot_count - 1 > state.slots())
        return fail("window outside grid");
    double km = 0.0;
    for (std::size_t i = 0; i + 1 < alloc.path.size(); ++i) {
        int li = state.topology().link_index(alloc.path[i], alloc.path[i + 1]);
        if (li < 0) return fail("hop is not a link");
        if (!state.window_free(li, alloc.start_fsu, alloc.slot_count))
            return fail("window not free on a path link");
        km += state.topology().link(li).km;
    }
    if (km > mods.level(alloc.level).reach_km) return fail("path exceeds modulation reach");
    return true;
}

}  // namespace eon
