#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eon/modulation.hpp"

namespace eon {

struct Link {
    int a = 0;
    int b = 0;
    double km = 0.0;
};

/// Undirected topology with a fixed per-link slot count. Nodes are 1..V.
class Topology {
public:
    Topology() = default;
    Topology(int num_nodes, std::vector<Link> links, int slots_per_link);

    int num_nodes() const { return num_nodes_; }
    int num_links() const { return static_cast<int>(links_.size()); }
    int slots_per_link() const { return slots_per_link_; }
    const std::vector<Link>& links() const { return links_; }
    const Link& link(int idx) const { return links_.at(static_cast<std::size_t>(idx)); }

    /// Link index for (a, b) in either order, or -1 if absent.
    int link_index(int a, int b) const;

    /// (neighbor, link index) pairs, sorted by neighbor id.
    const std::vector<std::pair<int, int>>& adjacency(int node) const;
    int degree(int node) const { return static_cast<int>(adjacency(node).size()); }

private:
    int num_nodes_ = 0;
    int slots_per_link_ = 0;
    std::vector<Link> links_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::map<std::pair<int, int>, int> index_;
};

/// Sum of link distances along a node sequence; throws if a hop is not a link.
double path_length(const Topology& topo, const std::vector<int>& path);

}  // namespace eon
