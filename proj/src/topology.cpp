#include "eon/topology.hpp"

#include <algorithm>
#include <functional>

namespace eon {

Topology::Topology(int num_nodes, std::vector<Link> links, int slots_per_link)
    : num_nodes_(num_nodes), slots_per_link_(slots_per_link), links_(std::move(links)) {
    if (num_nodes_ < 2) throw std::invalid_argument("topology needs at least two nodes");
    if (slots_per_link_ < 1) throw std::invalid_argument("slots_per_link must be positive");
    adj_.assign(static_cast<std::size_t>(num_nodes_) + 1, {});
    for (int i = 0; i < num_links(); ++i) {
        const Link& l = links_[static_cast<std::size_t>(i)];
        if (l.a < 1 || l.a > num_nodes_ || l.b < 1 || l.b > num_nodes_)
            throw std::invalid_argument("link endpoint out of range");
        if (l.a == l.b) throw std::invalid_argument("self-loop link");
        if (l.km <= 0.0) throw std::invalid_argument("link distance must be positive");
        auto key = std::minmax(l.a, l.b);
        if (!index_.emplace(key, i).second) throw std::invalid_argument("duplicate link");
        adj_[static_cast<std::size_t>(l.a)].emplace_back(l.b, i);
        adj_[static_cast<std::size_t>(l.b)].emplace_back(l.a, i);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    // connectivity check
    std::vector<char> seen(static_cast<std::size_t>(num_nodes_) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [u, li] : adjacency(v))
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
            }
    }
    for (int v = 1; v <= num_nodes_; ++v)
        if (!seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("topology is not connected");
}

int Topology::link_index(int a, int b) const {
    auto it = index_.find(std::minmax(a, b));
    return it == index_.end() ? -1 : it->second;
}

const std::vector<std::pair<int, int>>& Topology::adjacency(int node) const {
    if (node < 1 || node > num_nodes_) throw std::out_of_range("node id out of range");
    return adj_[static_cast<std::size_t>(node)];
}

double path_length(const Topology& topo, const std::vector<int>& path) {
    if (path.size() < 2) throw std::invalid_argument("path needs at least two nodes");
    double km = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int li = topo.link_index(path[i], path[i + 1]);
        if (li < 0)
            throw std::invalid_argument("no link between " + std::to_string(path[i]) + " and " +
                                        std::to_string(path[i + 1]));
        km += topo.link(li).km;
    }
    return km;
}

}  // namespace eon
