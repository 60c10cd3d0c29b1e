#pragma once

// Reference implementations used only by tests. The matcher here enumerates
// blind injective assignments of patterns to explicit atom occurrences and
// filters, rather than backtracking over multiset counts like the engine,
// so the two sides can check each other.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "phatic/engine.hpp"

namespace oracle {

inline std::optional<long> numeral(const std::string& t) {
    if (t.empty() || t.size() > 3) return std::nullopt;
    if (t.size() > 1 && t[0] == '0') return std::nullopt;
    long v = 0;
    for (char c : t) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + (c - '0');
    }
    if (v > 255) return std::nullopt;
    return v;
}

struct Frac {
    long n = 0;
    long d = 1;  // positive; never reduced
};

inline std::optional<Frac> eval(const phatic::Affine& a, const phatic::Binding& b) {
    Frac acc{a.constant.num, a.constant.den};
    if (a.var) {
        auto it = b.find(a.var->name);
        if (it == b.end()) return std::nullopt;
        auto v = numeral(it->second.text());
        if (!v) return std::nullopt;
        long tn = a.coeff.num * *v;
        acc = Frac{tn * acc.d + acc.n * a.coeff.den, a.coeff.den * acc.d};
    }
    return acc;
}

inline int fcmp(Frac a, Frac b) {
    long l = a.n * b.d;
    long r = b.n * a.d;
    return (l > r) - (l < r);
}

inline bool pattern_matches(const phatic::Pattern& p, const phatic::Atom& atom,
                            const phatic::Binding& bound) {
    using namespace phatic;
    if (p.args.size() != atom.args.size() || !(p.pred == atom.pred)) return false;
    std::map<std::string, Symbol> local;
    for (size_t i = 0; i < p.args.size(); ++i) {
        if (const Symbol* s = std::get_if<Symbol>(&p.args[i])) {
            if (!(*s == atom.args[i])) return false;
        } else {
            const std::string& name = std::get<Variable>(p.args[i]).name;
            auto bit = bound.find(name);
            if (bit != bound.end()) {
                if (!(bit->second == atom.args[i])) return false;
            } else {
                auto [lit, fresh] = local.emplace(name, atom.args[i]);
                if (!fresh && !(lit->second == atom.args[i])) return false;
            }
        }
    }
    return true;
}

inline std::set<phatic::Binding> oracle_bindings(const phatic::State& s,
                                                 const phatic::Rule& rule) {
    using namespace phatic;
    std::vector<Atom> occ;
    for (const auto& [a, n] : s.atoms())
        for (int i = 0; i < n; ++i) occ.push_back(a);
    std::vector<const Pattern*> pats = rule.consumed_patterns();
    const size_t m = pats.size();
    std::set<Binding> out;

    std::vector<size_t> pick(m, 0);
    std::vector<char> used(occ.size(), 0);

    auto check_assignment = [&]() {
        Binding binding;
        size_t j = 0;
        for (const PreItem& item : rule.preconditions) {
            if (const Pattern* p = std::get_if<Pattern>(&item)) {
                const Atom& atom = occ[pick[j++]];
                if (p->args.size() != atom.args.size() || !(p->pred == atom.pred)) return;
                for (size_t i = 0; i < p->args.size(); ++i) {
                    if (const Symbol* sym = std::get_if<Symbol>(&p->args[i])) {
                        if (!(*sym == atom.args[i])) return;
                    } else {
                        const std::string& name = std::get<Variable>(p->args[i]).name;
                        auto [it, fresh] = binding.emplace(name, atom.args[i]);
                        if (!fresh && !(it->second == atom.args[i])) return;
                    }
                }
            } else if (const Guard* g = std::get_if<Guard>(&item)) {
                bool binds = g->lhs.is_bare_var() && g->cmp == Cmp::Eq &&
                             binding.find(g->lhs.var->name) == binding.end();
                if (binds) {
                    auto v = eval(g->rhs, binding);
                    if (!v || v->n % v->d != 0) return;
                    long val = v->n / v->d;
                    if (val < 0) val = 0;
                    if (val > 255) val = 255;
                    binding.emplace(g->lhs.var->name, Symbol(std::to_string(val)));
                } else {
                    auto l = eval(g->lhs, binding);
                    auto r = eval(g->rhs, binding);
                    if (!l || !r) return;
                    int c = fcmp(*l, *r);
                    bool ok = false;
                    switch (g->cmp) {
                        case Cmp::Lt: ok = c < 0; break;
                        case Cmp::Le: ok = c <= 0; break;
                        case Cmp::Eq: ok = c == 0; break;
                        case Cmp::Ge: ok = c >= 0; break;
                        case Cmp::Gt: ok = c > 0; break;
                    }
                    if (!ok) return;
                }
            }
        }
        for (const PreItem& item : rule.preconditions)
            if (const AbsentCheck* ab = std::get_if<AbsentCheck>(&item))
                for (const Atom& atom : occ)
                    if (pattern_matches(ab->pattern, atom, binding)) return;
        out.insert(std::move(binding));
    };

    std::function<void(size_t)> assign = [&](size_t i) {
        if (i == m) {
            check_assignment();
            return;
        }
        for (size_t k = 0; k < occ.size(); ++k) {
            if (used[k]) continue;
            used[k] = 1;
            pick[i] = k;
            assign(i + 1);
            used[k] = 0;
        }
    };
    assign(0);
    return out;
}

inline std::vector<std::pair<std::string, phatic::Binding>> oracle_instances(
    const phatic::State& s, const phatic::Program& p) {
    std::vector<std::pair<std::string, phatic::Binding>> out;
    std::vector<const phatic::Rule*> rules;
    for (const phatic::Rule& r : p.rules) rules.push_back(&r);
    std::sort(rules.begin(), rules.end(),
              [](const phatic::Rule* a, const phatic::Rule* b) { return a->name < b->name; });
    for (const phatic::Rule* r : rules)
        for (const phatic::Binding& b : oracle_bindings(s, *r))
            out.emplace_back(r->name.text(), b);
    return out;
}

// Random micro-programs (<= 4 rules, <= 6 state atoms) exercising multiset
// matching, shared variables, guards, bindings, and absence checks.
struct MicroCase {
    phatic::Program program;
    phatic::State state;
};

inline MicroCase random_micro_case(phatic::Rng& rng) {
    using namespace phatic;
    const std::pair<const char*, int> preds[] = {{"z0", 0}, {"u1", 1}, {"v2", 2}, {"w3", 3}};
    const char* syms[] = {"a", "b", "0", "1", "2"};
    const char* vars[] = {"X", "Y", "Z"};
    const char* names[] = {"ra", "rb", "rc", "rd"};

    MicroCase mc;
    int natoms = static_cast<int>(rng.below(7));
    for (int i = 0; i < natoms; ++i) {
        auto [pname, arity] = preds[rng.below(4)];
        Atom a{Symbol(pname), {}};
        for (int k = 0; k < arity; ++k) a.args.emplace_back(syms[rng.below(5)]);
        mc.state.insert(a);
    }

    int nrules = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < nrules; ++i) {
        Rule rule{Symbol(names[i]), {}, {}, Rational{1, 1}};
        std::vector<Variable> bound;
        auto make_pattern = [&](bool may_bind, bool wildcard_ok = false) {
            auto [pname, arity] = preds[rng.below(4)];
            Pattern p{Symbol(pname), {}};
            for (int k = 0; k < arity; ++k) {
                uint64_t roll = rng.below(3);
                if (roll == 1 && may_bind) {
                    Variable v{vars[rng.below(3)]};
                    bound.push_back(v);
                    p.args.emplace_back(v);
                } else if (roll == 1 && wildcard_ok) {
                    p.args.emplace_back(Variable{"Q"});  // never bound: wildcard
                } else if (roll == 2 && !bound.empty()) {
                    p.args.emplace_back(bound[rng.below(bound.size())]);
                } else {
                    p.args.emplace_back(Symbol(syms[rng.below(5)]));
                }
            }
            return p;
        };
        int npre = 1 + static_cast<int>(rng.below(3));
        for (int k = 0; k < npre; ++k) rule.preconditions.emplace_back(make_pattern(true));
        if (!bound.empty() && rng.below(3) == 0) {
            Affine lhs = Affine::of_var(bound[rng.below(bound.size())]);
            if (rng.below(3) == 0)
                lhs.coeff = Rational{1 + static_cast<long>(rng.below(3)),
                                     1 + static_cast<long>(rng.below(2))};
            Affine rhs = Affine::of_constant(Rational{static_cast<long>(rng.below(4)), 1});
            if (rng.below(2) == 0) {
                rhs = Affine::of_var(bound[rng.below(bound.size())]);
                rhs.constant = Rational{static_cast<long>(rng.below(3)) - 1, 1};
            }
            Cmp cmps[] = {Cmp::Lt, Cmp::Le, Cmp::Eq, Cmp::Ge, Cmp::Gt};
            rule.preconditions.emplace_back(Guard{lhs, cmps[rng.below(5)], rhs});
        }
        if (!bound.empty() && rng.below(4) == 0) {
            Variable fresh{"M"};
            Affine rhs = Affine::of_var(bound[rng.below(bound.size())]);
            rhs.constant = Rational{static_cast<long>(rng.below(5)) - 2, 1};
            if (rng.below(4) == 0) rhs.coeff = Rational{1, 2};
            rule.preconditions.emplace_back(Guard{Affine::of_var(fresh), Cmp::Eq, rhs});
            bound.push_back(fresh);
        }
        if (rng.below(3) == 0)
            rule.preconditions.emplace_back(AbsentCheck{make_pattern(false, true)});
        int neff = static_cast<int>(rng.below(3));
        for (int k = 0; k < neff; ++k) rule.effects.push_back(make_pattern(false));
        mc.program.rules.push_back(std::move(rule));
    }
    for (const Rule& r : mc.program.rules) {
        auto note = [&](const Pattern& p) {
            mc.program.signature.emplace(p.pred.text(), static_cast<int>(p.args.size()));
        };
        for (const PreItem& item : r.preconditions) {
            if (const Pattern* p = std::get_if<Pattern>(&item)) note(*p);
            if (const AbsentCheck* a = std::get_if<AbsentCheck>(&item)) note(a->pattern);
        }
        for (const Pattern& p : r.effects) note(p);
    }
    return mc;
}

}  // namespace oracle
