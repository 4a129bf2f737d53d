#pragma once

#include <json.hpp>

#include "kmetric/audit.hpp"

namespace kmetric {

inline nlohmann::json json_of(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n}, {"m", g.edge_count()}, {"edges", edges}};
}

inline nlohmann::json json_of(const SolveReport& rep, bool with_basis, bool with_stats) {
    nlohmann::json j{{"k", rep.k}, {"dim", rep.dim}};
    if (with_basis) j["basis"] = rep.basis;
    if (with_stats) {
        j["nodes_explored"] = rep.nodes_explored;
        j["lower_bound"] = rep.lower_bound_used;
        j["forced_count"] = rep.forced_count;
    }
    return j;
}

inline nlohmann::json json_of(const DimProfile& prof) {
    return {{"k_max", prof.k_max}, {"dims", prof.dims}};
}

inline nlohmann::json json_of(const BranchStructure& bs) {
    nlohmann::json majors = nlohmann::json::array();
    for (const auto& b : bs.majors) {
        nlohmann::json legs = nlohmann::json::array();
        for (const auto& leg : b.legs)
            legs.push_back({{"leaf", leg.leaf}, {"length", leg.length}, {"path", leg.path}});
        majors.push_back({{"vertex", b.vertex},
                          {"terminal_degree", b.terminal_degree},
                          {"min_leg_length", b.min_leg_length},
                          {"min_leg_pair_sum", b.min_leg_pair_sum},
                          {"legs", legs}});
    }
    nlohmann::json j{{"majors", majors}, {"mu", bs.total_terminal_degree}};
    if (bs.min_leg_pair_sum)
        j["zeta"] = *bs.min_leg_pair_sum;
    else
        j["zeta"] = nullptr;
    return j;
}

inline nlohmann::json json_of(const AuditReport& rep, const Graph& g) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"claim_id", c.claim_id},
                          {"applicable", c.applicable},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"pass", c.pass}});
    return {{"graph", json_of(g)}, {"k_max", rep.k_max}, {"checks", checks}};
}

}  // namespace kmetric
