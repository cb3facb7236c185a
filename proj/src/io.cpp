#include "eon/io.hpp"

#include <fstream>
#include <sstream>

namespace eon {

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
    throw ParseError(name + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

NetworkSpec parse_topology(std::istream& in, const std::string& name, int slots_override) {
    int slots = 0;
    int max_node = 0;
    std::vector<Link> links;
    std::vector<ModulationLevel> levels;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string kw;
        if (!(ss >> kw)) continue;
        if (kw == "slots") {
            if (!(ss >> slots) || slots < 1) fail(name, lineno, "bad slot count");
        } else if (kw == "modulation") {
            ModulationLevel ml;
            if (!(ss >> ml.index >> ml.name >> ml.reach_km)) fail(name, lineno, "bad modulation record");
            levels.push_back(ml);
        } else if (kw == "link") {
            Link l;
            if (!(ss >> l.a >> l.b >> l.km)) fail(name, lineno, "bad link record");
            max_node = std::max({max_node, l.a, l.b});
            links.push_back(l);
        } else {
            fail(name, lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (slots_override > 0) slots = slots_override;
    if (slots < 1) fail(name, lineno, "missing slots header");
    if (links.empty()) fail(name, lineno, "no links");
    NetworkSpec spec{Topology(max_node, std::move(links), slots),
                     levels.empty() ? ModulationTable::default_table()
                                    : ModulationTable(std::move(levels))};
    return spec;
}

NetworkSpec load_topology(const std::string& path, int slots_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open topology file " + path);
    return parse_topology(in, path, slots_override);
}

void parse_occupancy(NetworkState& state, std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string kw;
        if (!(ss >> kw)) continue;
        if (kw != "occ") fail(name, lineno, "unknown keyword '" + kw + "'");
        int a = 0, b = 0;
        std::string ranges;
        if (!(ss >> a >> b >> ranges)) fail(name, lineno, "bad occupancy record");
        int li = state.topology().link_index(a, b);
        if (li < 0) fail(name, lineno, "no such link");
        std::istringstream rs(ranges);
        std::string tok;
        while (std::getline(rs, tok, ',')) {
            int lo = 0, hi = 0;
            char dash = 0;
            std::istringstream ts(tok);
            if (ts >> lo) {
                hi = lo;
                if (ts >> dash >> hi && dash != '-') fail(name, lineno, "bad range '" + tok + "'");
            } else {
                fail(name, lineno, "bad range '" + tok + "'");
            }
            if (lo < 1 || hi > state.slots() || lo > hi) fail(name, lineno, "range outside grid");
            for (int k = lo; k <= hi; ++k) state.set_slot(li, k, true);
        }
    }
}

void load_occupancy(NetworkState& state, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open occupancy file " + path);
    parse_occupancy(state, in, path);
}

std::string metrics_csv_header() {
    return "run_id,solver,seed,lambda,hold_time,checkpoint_load_gbps,naf,bbp,"
           "occupied_slot_links,admitted_gbps,blocked_gbps";
}

}  // namespace eon
