#pragma once

// Forward-chaining executor: enumerate applicable rule instances, pick one
// (seeded, weight-proportional), rewrite the state, record a trace.

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "phatic/kernel.hpp"
#include "phatic/rng.hpp"
#include "phatic/rules.hpp"

namespace phatic {

using Binding = std::map<std::string, Symbol>;

struct Instance {
    const Rule* rule;
    Binding binding;
};

inline Atom substitute(const Pattern& p, const Binding& b) {
    Atom a{p.pred, {}};
    a.args.reserve(p.args.size());
    for (const Term& t : p.args) {
        if (const Symbol* s = std::get_if<Symbol>(&t))
            a.args.push_back(*s);
        else
            a.args.push_back(b.at(std::get<Variable>(t).name));
    }
    return a;
}

namespace detail {

inline std::optional<Rational> eval_affine(const Affine& a, const Binding& b) {
    Rational acc = a.constant;
    if (a.var) {
        auto it = b.find(a.var->name);
        if (it == b.end()) return std::nullopt;
        auto n = symbol_number(it->second);
        if (!n) return std::nullopt;  // guard over a non-numeric symbol never holds
        acc = acc + a.coeff * Rational{*n, 1};
    }
    return acc;
}

inline bool cmp_holds(Cmp cmp, const Rational& l, const Rational& r) {
    int c = rational_cmp(l, r);
    switch (cmp) {
        case Cmp::Lt: return c < 0;
        case Cmp::Le: return c <= 0;
        case Cmp::Eq: return c == 0;
        case Cmp::Ge: return c >= 0;
        case Cmp::Gt: return c > 0;
    }
    return false;
}

// Enumerates all bindings of one rule against one state. Built once per
// state; occurrence counts are borrowed and restored during backtracking.
class InstanceFinder {
public:
    explicit InstanceFinder(const State& s) : state_(&s) {
        for (const auto& [a, n] : s.atoms()) occs_.push_back({&a, n});
        size_t i = 0;
        while (i < occs_.size()) {
            size_t j = i;
            while (j < occs_.size() && occs_[j].atom->pred == occs_[i].atom->pred) ++j;
            ranges_.emplace(occs_[i].atom->pred, std::make_pair(i, j));
            i = j;
        }
    }

    std::set<Binding> bindings_for(const Rule& r) {
        rule_ = &r;
        results_.clear();
        binding_.clear();
        recurse(0);
        return std::move(results_);
    }

private:
    struct Occ {
        const Atom* atom;
        int avail;
    };

    const State* state_;
    std::vector<Occ> occs_;
    std::map<Symbol, std::pair<size_t, size_t>> ranges_;
    const Rule* rule_ = nullptr;
    Binding binding_;
    std::set<Binding> results_;

    // Unifies pattern args against a ground atom, extending binding_.
    // Returns the variables newly bound, or nullopt (binding_ unchanged).
    std::optional<std::vector<std::string>> unify(const Pattern& p, const Atom& a) {
        if (p.args.size() != a.args.size()) return std::nullopt;
        std::vector<std::string> trail;
        for (size_t i = 0; i < p.args.size(); ++i) {
            if (const Symbol* s = std::get_if<Symbol>(&p.args[i])) {
                if (*s != a.args[i]) {
                    undo(trail);
                    return std::nullopt;
                }
            } else {
                const std::string& name = std::get<Variable>(p.args[i]).name;
                auto it = binding_.find(name);
                if (it != binding_.end()) {
                    if (it->second != a.args[i]) {
                        undo(trail);
                        return std::nullopt;
                    }
                } else {
                    binding_.emplace(name, a.args[i]);
                    trail.push_back(name);
                }
            }
        }
        return trail;
    }

    void undo(const std::vector<std::string>& trail) {
        for (const std::string& name : trail) binding_.erase(name);
    }

    // Absence is judged against the full pre-step state; variables not in
    // the binding act as wildcards local to the pattern.
    bool absent_holds(const Pattern& p) const {
        auto rit = ranges_.find(p.pred);
        if (rit == ranges_.end()) return true;
        for (size_t k = rit->second.first; k < rit->second.second; ++k) {
            const Atom& a = *occs_[k].atom;
            if (p.args.size() != a.args.size()) continue;
            std::map<std::string, Symbol> local;
            bool match = true;
            for (size_t i = 0; i < p.args.size() && match; ++i) {
                if (const Symbol* s = std::get_if<Symbol>(&p.args[i])) {
                    match = *s == a.args[i];
                } else {
                    const std::string& name = std::get<Variable>(p.args[i]).name;
                    auto bit = binding_.find(name);
                    if (bit != binding_.end()) {
                        match = bit->second == a.args[i];
                    } else {
                        auto [lit, fresh] = local.emplace(name, a.args[i]);
                        if (!fresh) match = lit->second == a.args[i];
                    }
                }
            }
            if (match) return false;
        }
        return true;
    }

    void recurse(size_t idx) {
        if (idx == rule_->preconditions.size()) {
            for (const PreItem& item : rule_->preconditions)
                if (const AbsentCheck* ab = std::get_if<AbsentCheck>(&item))
                    if (!absent_holds(ab->pattern)) return;
            results_.insert(binding_);
            return;
        }
        const PreItem& item = rule_->preconditions[idx];
        if (const Pattern* p = std::get_if<Pattern>(&item)) {
            auto rit = ranges_.find(p->pred);
            if (rit == ranges_.end()) return;
            for (size_t k = rit->second.first; k < rit->second.second; ++k) {
                if (occs_[k].avail == 0) continue;
                auto trail = unify(*p, *occs_[k].atom);
                if (!trail) continue;
                --occs_[k].avail;
                recurse(idx + 1);
                ++occs_[k].avail;
                undo(*trail);
            }
        } else if (const Guard* g = std::get_if<Guard>(&item)) {
            bool binds = g->lhs.is_bare_var() && g->cmp == Cmp::Eq &&
                         binding_.find(g->lhs.var->name) == binding_.end();
            if (binds) {
                auto v = eval_affine(g->rhs, binding_);
                if (!v || v->den != 1) return;  // non-integer value: no instance
                long n = std::clamp(v->num, 0L, static_cast<long>(kCounterMax));
                binding_.emplace(g->lhs.var->name, num_symbol(static_cast<int>(n)));
                recurse(idx + 1);
                binding_.erase(g->lhs.var->name);
            } else {
                auto l = eval_affine(g->lhs, binding_);
                auto r = eval_affine(g->rhs, binding_);
                if (!l || !r || !cmp_holds(g->cmp, *l, *r)) return;
                recurse(idx + 1);
            }
        } else {
            recurse(idx + 1);  // absence checks run once the binding is complete
        }
    }
};

}  // namespace detail

// Complete and exact: one entry per (rule, binding) that consumes matchable
// occurrences, passes all guards, and violates no absence check. Ordered by
// rule name, then binding.
inline std::vector<Instance> applicable_instances(const State& s, const Program& p) {
    detail::InstanceFinder finder(s);
    std::vector<Instance> out;
    for (const Rule& r : p.rules)
        for (const Binding& b : finder.bindings_for(r)) out.push_back({&r, b});
    std::sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) {
        if (a.rule->name != b.rule->name) return a.rule->name < b.rule->name;
        return a.binding < b.binding;
    });
    return out;
}

struct TraceStep {
    int index = 0;
    Symbol rule;
    Binding binding;
    std::vector<Atom> consumed;  // in precondition order, substituted
    std::vector<Atom> produced;  // in effect order, substituted

    bool operator==(const TraceStep&) const = default;
};

enum class Termination { Quiescence, StepCap };

struct Trace {
    std::string scenario;
    uint64_t seed = 0;
    State initial;
    std::vector<TraceStep> steps;
    State final_state;
    Termination termination = Termination::Quiescence;

    bool operator==(const Trace&) const = default;
};

namespace detail {

inline TraceStep apply_instance(State& s, const Instance& inst, int index) {
    TraceStep ts{index, inst.rule->name, inst.binding, {}, {}};
    for (const Pattern* p : inst.rule->consumed_patterns()) {
        Atom a = substitute(*p, inst.binding);
        s.remove(a);  // AtomAbsent here means the instance was not applicable
        ts.consumed.push_back(std::move(a));
    }
    for (const Pattern& p : inst.rule->effects) {
        Atom a = substitute(p, inst.binding);
        s.insert(a);
        ts.produced.push_back(std::move(a));
    }
    return ts;
}

// Weight-proportional choice in exact integer arithmetic.
inline size_t choose_instance(const std::vector<Instance>& inst, Rng& rng) {
    long scale = 1;
    for (const Instance& i : inst) scale = std::lcm(scale, i.rule->weight.den);
    long total = 0;
    for (const Instance& i : inst) total += i.rule->weight.num * (scale / i.rule->weight.den);
    long draw = static_cast<long>(rng.below(static_cast<uint64_t>(total)));
    for (size_t k = 0; k < inst.size(); ++k) {
        draw -= inst[k].rule->weight.num * (scale / inst[k].rule->weight.den);
        if (draw < 0) return k;
    }
    return inst.size() - 1;
}

}  // namespace detail

struct StepResult {
    State state;
    TraceStep step;
};

// One engine step; empty optional marks quiescence.
inline std::optional<StepResult> step(const State& s, const Program& p, Rng& rng,
                                      int index = 0) {
    std::vector<Instance> inst = applicable_instances(s, p);
    if (inst.empty()) return std::nullopt;
    size_t chosen = detail::choose_instance(inst, rng);
    State next = s;
    TraceStep ts = detail::apply_instance(next, inst[chosen], index);
    return StepResult{std::move(next), std::move(ts)};
}

inline constexpr int kDefaultStepCap = 200;

inline Trace run(const State& initial, const Program& p, uint64_t seed,
                 int step_cap = kDefaultStepCap, std::string scenario_id = "default") {
    Trace t;
    t.scenario = std::move(scenario_id);
    t.seed = seed;
    t.initial = initial;
    Rng rng(seed);
    State cur = initial;
    for (int i = 0; i < step_cap; ++i) {
        auto r = step(cur, p, rng, i);
        if (!r) break;
        cur = std::move(r->state);
        t.steps.push_back(std::move(r->step));
    }
    t.termination = applicable_instances(cur, p).empty() ? Termination::Quiescence
                                                         : Termination::StepCap;
    t.final_state = std::move(cur);
    return t;
}

struct InapplicableStep : std::runtime_error {
    int index;
    InapplicableStep(int i, const std::string& rule)
        : std::runtime_error("step " + std::to_string(i) + " is not applicable: " + rule),
          index(i) {}
};

struct ReplayStep {
    std::string rule;
    Binding binding;  // may be partial; must pin down a unique choice point
};

// Applies the given instances in order, bypassing random choice. A step's
// binding may omit variables; the first applicable binding (in enumeration
// order) extending it is taken.
inline Trace replay(const State& initial, const Program& p,
                    const std::vector<ReplayStep>& script,
                    std::string scenario_id = "default", uint64_t seed = 0) {
    Trace t;
    t.scenario = std::move(scenario_id);
    t.seed = seed;
    t.initial = initial;
    State cur = initial;
    for (size_t i = 0; i < script.size(); ++i) {
        const ReplayStep& rs = script[i];
        const Rule* rule = nullptr;
        for (const Rule& r : p.rules)
            if (r.name.text() == rs.rule) rule = &r;
        if (!rule) throw InapplicableStep(static_cast<int>(i), rs.rule + " (unknown rule)");
        detail::InstanceFinder finder(cur);
        const Binding* match = nullptr;
        std::set<Binding> bindings = finder.bindings_for(*rule);
        for (const Binding& b : bindings) {
            bool extends = true;
            for (const auto& [name, sym] : rs.binding) {
                auto it = b.find(name);
                if (it == b.end() || it->second != sym) {
                    extends = false;
                    break;
                }
            }
            if (extends) {
                match = &b;
                break;
            }
        }
        if (!match) throw InapplicableStep(static_cast<int>(i), rs.rule);
        TraceStep ts = detail::apply_instance(cur, Instance{rule, *match}, static_cast<int>(i));
        t.steps.push_back(std::move(ts));
    }
    t.termination = applicable_instances(cur, p).empty() ? Termination::Quiescence
                                                         : Termination::StepCap;
    t.final_state = std::move(cur);
    return t;
}

struct CausalEdge {
    int producer;  // step index; initial-state occurrences yield no edge
    Atom atom;
    int consumer;

    bool operator==(const CausalEdge&) const = default;
};

struct CausalGraph {
    std::vector<CausalEdge> edges;
};

// Occurrences are matched producer-to-consumer in FIFO order per atom value;
// occurrences already in the initial state have no producer and no edge.
inline CausalGraph causal_links(const Trace& t) {
    std::map<Atom, std::deque<int>, AtomLess> pool;
    for (const auto& [a, n] : t.initial.atoms())
        for (int k = 0; k < n; ++k) pool[a].push_back(-1);
    CausalGraph g;
    for (const TraceStep& st : t.steps) {
        for (const Atom& a : st.consumed) {
            auto& q = pool[a];
            if (q.empty()) continue;  // malformed trace; tolerated here
            int producer = q.front();
            q.pop_front();
            if (producer >= 0) g.edges.push_back({producer, a, st.index});
        }
        for (const Atom& a : st.produced) pool[a].push_back(st.index);
    }
    return g;
}

}  // namespace phatic
