#pragma once

// AST for the rule language: named rewrite rules over patterns with
// variables, arithmetic guards, and negative (absence) checks.

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "phatic/kernel.hpp"

namespace phatic {

struct Variable {
    std::string name;  // uppercase-initial identifier, apostrophes allowed (C, C', T2)

    bool operator==(const Variable&) const = default;
    bool operator<(const Variable& other) const { return name < other.name; }
};

using Term = std::variant<Symbol, Variable>;

inline std::string term_str(const Term& t) {
    if (const Symbol* s = std::get_if<Symbol>(&t)) return s->text();
    return std::get<Variable>(t).name;
}

struct Pattern {
    Symbol pred;
    std::vector<Term> args;

    bool operator==(const Pattern&) const = default;
};

// Exact rational, normalized with positive denominator.
struct Rational {
    long num = 0;
    long den = 1;

    Rational() = default;
    Rational(long n, long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational&) const = default;
    bool positive() const { return num > 0; }
    std::string str() const {
        std::string out = std::to_string(num);
        if (den != 1) out += "/" + std::to_string(den);
        return out;
    }
};

inline Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
inline Rational operator*(Rational a, Rational b) {
    return Rational(a.num * b.num, a.den * b.den);
}
inline Rational operator-(Rational a) { return Rational(-a.num, a.den); }

// -1 / 0 / +1 ordering by cross-multiplication; denominators are positive.
inline int rational_cmp(Rational a, Rational b) {
    long l = a.num * b.den;
    long r = b.num * a.den;
    return (l > r) - (l < r);
}

// coeff * var + constant; canonical form drops the variable when coeff = 0.
struct Affine {
    Rational coeff{0, 1};
    std::optional<Variable> var;
    Rational constant{0, 1};

    bool operator==(const Affine&) const = default;

    static Affine of_constant(Rational c) { return {{0, 1}, std::nullopt, c}; }
    static Affine of_var(Variable v) { return {{1, 1}, std::move(v), {0, 1}}; }
    bool is_bare_var() const {
        return var && coeff == Rational{1, 1} && constant == Rational{0, 1};
    }
};

enum class Cmp { Lt, Le, Eq, Ge, Gt };

inline const char* cmp_str(Cmp c) {
    switch (c) {
        case Cmp::Lt: return "<";
        case Cmp::Le: return "<=";
        case Cmp::Eq: return "=";
        case Cmp::Ge: return ">=";
        case Cmp::Gt: return ">";
    }
    return "?";
}

// A guard is one item in a rule's precondition list. An `=` guard whose
// left side is a bare variable unbound by any earlier item binds that
// variable to the right side's value instead of comparing.
struct Guard {
    Affine lhs;
    Cmp cmp = Cmp::Eq;
    Affine rhs;

    bool operator==(const Guard&) const = default;
};

// Checked against the state without being consumed.
struct AbsentCheck {
    Pattern pattern;

    bool operator==(const AbsentCheck&) const = default;
};

using PreItem = std::variant<Pattern, AbsentCheck, Guard>;

struct Rule {
    Symbol name;
    std::vector<PreItem> preconditions;
    std::vector<Pattern> effects;
    Rational weight{1, 1};

    bool operator==(const Rule&) const = default;

    std::vector<const Pattern*> consumed_patterns() const {
        std::vector<const Pattern*> out;
        for (const PreItem& item : preconditions)
            if (const Pattern* p = std::get_if<Pattern>(&item)) out.push_back(p);
        return out;
    }
};

struct Program {
    std::vector<Rule> rules;                // kept sorted by rule name
    std::map<std::string, int> signature;   // predicate name -> arity

    bool operator==(const Program& other) const { return rules == other.rules; }

    const Rule* find_rule(const Symbol& name) const {
        for (const Rule& r : rules)
            if (r.name == name) return &r;
        return nullptr;
    }
};

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    std::string rule;  // empty when the diagnostic is not tied to a rule
    int line = 0;      // 1-based
    int col = 0;       // 1-based
    std::string message;

    std::string format(const std::string& file) const {
        std::string out = file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": ";
        out += severity == Severity::Error ? "error: " : "warning: ";
        out += message;
        return out;
    }
};

}  // namespace phatic
