#pragma once

// Authoring aid: which rules can fire within a bounded number of steps?
// Exhaustive breadth-first rewriting, exact within the depth bound.

#include <queue>

#include "phatic/engine.hpp"

namespace phatic {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(size_t cap)
        : std::runtime_error("reachability search exceeded state budget of " +
                             std::to_string(cap)) {}
};

inline constexpr int kMaxReachabilityDepth = 12;

// Flag per rule: true iff the rule fires in some sequence of <= depth steps
// from init. Monotone in depth; depth 0 is vacuously all-false.
inline std::map<std::string, bool> check_reachability(const Program& p, const State& init,
                                                      int depth,
                                                      size_t state_cap = 1000000) {
    if (depth < 0 || depth > kMaxReachabilityDepth)
        throw std::invalid_argument("reachability depth must be in 0.." +
                                    std::to_string(kMaxReachabilityDepth));
    std::map<std::string, bool> flags;
    for (const Rule& r : p.rules) flags[r.name.text()] = false;
    if (depth == 0) return flags;

    std::set<std::string> visited;
    std::queue<std::pair<State, int>> frontier;
    visited.insert(init.str());
    frontier.emplace(init, 0);
    while (!frontier.empty()) {
        auto [s, d] = std::move(frontier.front());
        frontier.pop();
        std::vector<Instance> inst = applicable_instances(s, p);
        for (const Instance& i : inst) flags[i.rule->name.text()] = true;
        if (d + 1 >= depth) continue;
        for (const Instance& i : inst) {
            State ns = s;
            detail::apply_instance(ns, i, 0);
            if (visited.insert(ns.str()).second) {
                if (visited.size() > state_cap) throw BudgetExceeded(state_cap);
                frontier.emplace(std::move(ns), d + 1);
            }
        }
    }
    return flags;
}

}  // namespace phatic
