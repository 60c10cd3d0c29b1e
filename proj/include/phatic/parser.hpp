#pragma once

// Parser and serializer for `.phatic` rule files.
//
// Grammar (whitespace-insensitive, `%` starts a line comment):
//   program  := rule*
//   rule     := "rule" NAME ":" ["weight" RAT ":"] pre ("*" pre)* "-o" effects "."
//   pre      := pattern | "!" "absent" pattern | guard
//   pattern  := SYMBOL ["(" term ("," term)* ")"]
//   term     := SYMBOL | VARIABLE
//   guard    := "(" affine CMP affine ")"
//   affine   := ["-"] aterm (("+"|"-") aterm)*
//   aterm    := RAT ["*" VARIABLE] | VARIABLE ["*" RAT]
//   RAT      := INT ["/" INT]
//   CMP      := "<" | "<=" | "=" | ">=" | ">"
//   effects  := "()" | pattern ("*" pattern)*
//   SYMBOL   := [a-z0-9][a-z0-9_]*
//   VARIABLE := [A-Z][A-Za-z0-9_']*
//
// An `=` guard whose left side is a bare variable not bound by any earlier
// precondition item binds that variable to the value of the right side.
// Variables in `!absent` patterns that are otherwise unbound act as
// wildcards; they never bind.

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "phatic/rules.hpp"

namespace phatic {

struct ParseResult {
    std::optional<Program> program;  // engaged iff no error diagnostics
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return program.has_value(); }
};

namespace detail {

inline bool sym_start(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }
inline bool sym_cont(char c) { return sym_start(c) || c == '_'; }
inline bool var_start(char c) { return c >= 'A' && c <= 'Z'; }
inline bool var_cont(char c) {
    return var_start(c) || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

class RuleParser {
public:
    explicit RuleParser(std::string_view src) : src_(src) {}

    ParseResult parse() {
        Program prog;
        while (true) {
            skip_trivia();
            if (at_end()) break;
            if (!parse_rule_stmt(prog)) recover();
        }
        ParseResult result;
        for (const Diagnostic& d : diags_)
            if (d.severity == Diagnostic::Severity::Error) {
                result.diagnostics = std::move(diags_);
                return result;
            }
        std::sort(prog.rules.begin(), prog.rules.end(),
                  [](const Rule& a, const Rule& b) { return a.name < b.name; });
        result.program = std::move(prog);
        result.diagnostics = std::move(diags_);
        return result;
    }

private:
    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    std::string current_rule_;
    std::vector<Diagnostic> diags_;

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void advance() {
        if (at_end()) return;
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (!at_end()) {
            char c = peek();
            if (c == '%') {
                while (!at_end() && peek() != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    void error(int line, int col, std::string msg) {
        diags_.push_back({Diagnostic::Severity::Error, current_rule_, line, col, std::move(msg)});
    }
    void error_here(std::string msg) { error(line_, col_, std::move(msg)); }

    // Skips past the next statement terminator so later rules still parse.
    void recover() {
        while (!at_end() && peek() != '.') advance();
        if (!at_end()) advance();
    }

    bool eat(char c) {
        skip_trivia();
        if (peek() != c) return false;
        advance();
        return true;
    }

    bool expect(char c) {
        if (eat(c)) return true;
        error_here(std::string("expected '") + c + "'");
        return false;
    }

    std::optional<std::string> read_symbol() {
        skip_trivia();
        if (!sym_start(peek())) return std::nullopt;
        size_t start = pos_;
        while (!at_end() && sym_cont(peek())) advance();
        return std::string(src_.substr(start, pos_ - start));
    }

    std::optional<std::string> read_variable() {
        skip_trivia();
        if (!var_start(peek())) return std::nullopt;
        size_t start = pos_;
        while (!at_end() && var_cont(peek())) advance();
        return std::string(src_.substr(start, pos_ - start));
    }

    std::optional<long> read_int() {
        skip_trivia();
        if (!isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
        long value = 0;
        while (!at_end() && isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1000000) {
                error_here("number too large");
                return std::nullopt;
            }
            advance();
        }
        return value;
    }

    std::optional<Rational> read_rational() {
        auto num = read_int();
        if (!num) return std::nullopt;
        size_t mark = pos_;
        int mline = line_, mcol = col_;
        skip_trivia();
        if (peek() == '/') {
            advance();
            auto den = read_int();
            if (!den) {
                error_here("expected denominator");
                return std::nullopt;
            }
            if (*den == 0) {
                error_here("zero denominator");
                return std::nullopt;
            }
            return Rational(*num, *den);
        }
        pos_ = mark;
        line_ = mline;
        col_ = mcol;
        return Rational(*num, 1);
    }

    struct VarUse {
        Variable var;
        int line, col;
    };

    std::optional<Pattern> parse_pattern(std::vector<VarUse>* uses, Program& prog) {
        skip_trivia();
        int pline = line_, pcol = col_;
        auto pred = read_symbol();
        if (!pred) {
            error_here("expected predicate");
            return std::nullopt;
        }
        Pattern p{Symbol(*pred), {}};
        skip_trivia();
        if (peek() == '(') {
            advance();
            while (true) {
                skip_trivia();
                int tline = line_, tcol = col_;
                if (sym_start(peek())) {
                    p.args.emplace_back(Symbol(*read_symbol()));
                } else if (var_start(peek())) {
                    Variable v{*read_variable()};
                    if (uses) uses->push_back({v, tline, tcol});
                    p.args.emplace_back(std::move(v));
                } else {
                    error_here("expected argument");
                    return std::nullopt;
                }
                skip_trivia();
                if (peek() == ',') {
                    advance();
                    continue;
                }
                break;
            }
            if (!expect(')')) return std::nullopt;
        }
        if (p.args.size() > 3) {
            error(pline, pcol, "predicate " + *pred + " has arity " +
                                   std::to_string(p.args.size()) + "; maximum is 3");
            return std::nullopt;
        }
        auto [it, fresh] = prog.signature.emplace(*pred, static_cast<int>(p.args.size()));
        if (!fresh && it->second != static_cast<int>(p.args.size())) {
            error(pline, pcol, "predicate " + *pred + " used with arity " +
                                   std::to_string(p.args.size()) + " but earlier with arity " +
                                   std::to_string(it->second));
            return std::nullopt;
        }
        return p;
    }

    std::optional<Affine> parse_affine(std::vector<VarUse>& uses) {
        Affine acc;
        int sign = 1;
        skip_trivia();
        if (peek() == '-') {
            advance();
            sign = -1;
        }
        while (true) {
            if (!parse_affine_term(acc, sign, uses)) return std::nullopt;
            skip_trivia();
            if (peek() == '+') {
                advance();
                sign = 1;
            } else if (peek() == '-') {
                advance();
                sign = -1;
            } else {
                break;
            }
        }
        return acc;
    }

    bool parse_affine_term(Affine& acc, int sign, std::vector<VarUse>& uses) {
        skip_trivia();
        Rational coeff{1, 1};
        std::optional<Variable> var;
        int vline = line_, vcol = col_;
        if (isdigit(static_cast<unsigned char>(peek()))) {
            auto r = read_rational();
            if (!r) return false;
            coeff = *r;
            skip_trivia();
            if (peek() == '*') {
                advance();
                skip_trivia();
                vline = line_;
                vcol = col_;
                auto v = read_variable();
                if (!v) {
                    error_here("expected variable after '*'");
                    return false;
                }
                var = Variable{*v};
            }
        } else if (var_start(peek())) {
            var = Variable{*read_variable()};
            skip_trivia();
            if (peek() == '*') {
                advance();
                auto r = read_rational();
                if (!r) {
                    error_here("expected number after '*'");
                    return false;
                }
                coeff = *r;
            }
        } else {
            error_here("expected number or variable");
            return false;
        }
        if (sign < 0) coeff = -coeff;
        if (var) {
            uses.push_back({*var, vline, vcol});
            if (acc.var && !(*acc.var == *var)) {
                error(vline, vcol, "guard side uses more than one variable");
                return false;
            }
            acc.var = var;
            acc.coeff = acc.coeff + coeff;
            if (acc.coeff == Rational{0, 1}) acc.var.reset();
        } else {
            acc.constant = acc.constant + coeff;
        }
        return true;
    }

    std::optional<Cmp> parse_cmp() {
        skip_trivia();
        switch (peek()) {
            case '<':
                advance();
                if (peek() == '=') {
                    advance();
                    return Cmp::Le;
                }
                return Cmp::Lt;
            case '>':
                advance();
                if (peek() == '=') {
                    advance();
                    return Cmp::Ge;
                }
                return Cmp::Gt;
            case '=':
                advance();
                return Cmp::Eq;
            default:
                error_here("expected comparison operator");
                return std::nullopt;
        }
    }

    bool parse_rule_stmt(Program& prog) {
        current_rule_.clear();
        skip_trivia();
        int kline = line_, kcol = col_;
        auto kw = read_symbol();
        if (!kw || *kw != "rule") {
            error(kline, kcol, "expected 'rule'");
            return false;
        }
        skip_trivia();
        int nline = line_, ncol = col_;
        auto name = read_symbol();
        if (!name) {
            error_here("expected rule name");
            return false;
        }
        current_rule_ = *name;
        for (const Rule& r : prog.rules)
            if (r.name.text() == *name) {
                error(nline, ncol, "duplicate rule name " + *name);
                return false;
            }
        if (!expect(':')) return false;

        Rule rule{Symbol(*name), {}, {}, Rational{1, 1}};

        // `weight` here is an annotation only when a number follows; a
        // pattern whose predicate happens to be named weight stays a pattern.
        skip_trivia();
        size_t mark = pos_;
        int mline = line_, mcol = col_;
        auto lookahead = read_symbol();
        if (lookahead && *lookahead == "weight") {
            skip_trivia();
            if (isdigit(static_cast<unsigned char>(peek()))) {
                int wline = line_, wcol = col_;
                auto w = read_rational();
                if (!w) return false;
                if (!w->positive()) {
                    error(wline, wcol, "weight must be positive");
                    return false;
                }
                rule.weight = *w;
                if (!expect(':')) return false;
            } else {
                pos_ = mark;
                line_ = mline;
                col_ = mcol;
            }
        } else {
            pos_ = mark;
            line_ = mline;
            col_ = mcol;
        }

        // Variables bound so far; guards and effects may only use these.
        std::set<std::string> bound;
        int consuming = 0;
        while (true) {
            skip_trivia();
            if (peek() == '(') {
                int gline = line_, gcol = col_;
                advance();
                std::vector<VarUse> lhs_uses, rhs_uses;
                auto lhs = parse_affine(lhs_uses);
                if (!lhs) return false;
                auto cmp = parse_cmp();
                if (!cmp) return false;
                auto rhs = parse_affine(rhs_uses);
                if (!rhs) return false;
                if (!expect(')')) return false;
                bool binding = lhs->is_bare_var() && *cmp == Cmp::Eq &&
                               bound.find(lhs->var->name) == bound.end();
                if (binding) {
                    for (const VarUse& u : rhs_uses)
                        if (bound.find(u.var.name) == bound.end()) {
                            error(u.line, u.col, "unbound variable " + u.var.name + " in guard");
                            return false;
                        }
                    bound.insert(lhs->var->name);
                } else {
                    for (const auto* uses : {&lhs_uses, &rhs_uses})
                        for (const VarUse& u : *uses)
                            if (bound.find(u.var.name) == bound.end()) {
                                error(u.line, u.col,
                                      "unbound variable " + u.var.name + " in guard");
                                return false;
                            }
                }
                (void)gline;
                (void)gcol;
                rule.preconditions.emplace_back(Guard{*lhs, *cmp, *rhs});
            } else if (peek() == '!') {
                advance();
                auto kw2 = read_symbol();
                if (!kw2 || *kw2 != "absent") {
                    error_here("expected 'absent' after '!'");
                    return false;
                }
                auto p = parse_pattern(nullptr, prog);
                if (!p) return false;
                rule.preconditions.emplace_back(AbsentCheck{std::move(*p)});
            } else {
                std::vector<VarUse> uses;
                auto p = parse_pattern(&uses, prog);
                if (!p) return false;
                for (const VarUse& u : uses) bound.insert(u.var.name);
                rule.preconditions.emplace_back(std::move(*p));
                ++consuming;
            }
            skip_trivia();
            if (peek() == '*') {
                advance();
                continue;
            }
            break;
        }
        if (consuming == 0) {
            error(nline, ncol, "rule " + *name + " consumes nothing");
            return false;
        }

        skip_trivia();
        if (peek() != '-') {
            error_here("expected '-o'");
            return false;
        }
        advance();
        if (peek() != 'o') {
            error_here("expected '-o'");
            return false;
        }
        advance();
        if (sym_cont(peek())) {
            error_here("expected '-o'");
            return false;
        }

        skip_trivia();
        if (peek() == '(') {
            advance();
            if (!expect(')')) return false;
        } else {
            while (true) {
                std::vector<VarUse> uses;
                auto p = parse_pattern(&uses, prog);
                if (!p) return false;
                for (const VarUse& u : uses)
                    if (bound.find(u.var.name) == bound.end()) {
                        error(u.line, u.col, "unbound variable " + u.var.name + " in effect");
                        return false;
                    }
                rule.effects.push_back(std::move(*p));
                skip_trivia();
                if (peek() == '*') {
                    advance();
                    continue;
                }
                break;
            }
        }
        if (!expect('.')) return false;
        prog.rules.push_back(std::move(rule));
        return true;
    }
};

}  // namespace detail

inline ParseResult parse_program(std::string_view source) {
    return detail::RuleParser(source).parse();
}

inline std::string serialize_affine(const Affine& a) {
    std::string out;
    if (a.var) {
        if (a.coeff == Rational{1, 1}) {
            out = a.var->name;
        } else if (a.coeff.num < 0) {
            out = "-" + (-a.coeff).str() + " * " + a.var->name;
        } else {
            out = a.coeff.str() + " * " + a.var->name;
        }
        if (a.constant.num > 0)
            out += " + " + a.constant.str();
        else if (a.constant.num < 0)
            out += " - " + (-a.constant).str();
    } else {
        out = a.constant.str();
    }
    return out;
}

inline std::string serialize_pattern(const Pattern& p) {
    std::string out = p.pred.text();
    if (!p.args.empty()) {
        out += '(';
        for (size_t i = 0; i < p.args.size(); ++i) {
            if (i) out += ',';
            out += term_str(p.args[i]);
        }
        out += ')';
    }
    return out;
}

inline std::string serialize_rule(const Rule& r) {
    std::string out = "rule " + r.name.text() + ":";
    if (r.weight != Rational{1, 1}) out += " weight " + r.weight.str() + ":";
    for (size_t i = 0; i < r.preconditions.size(); ++i) {
        out += i ? " * " : " ";
        const PreItem& item = r.preconditions[i];
        if (const Pattern* p = std::get_if<Pattern>(&item)) {
            out += serialize_pattern(*p);
        } else if (const AbsentCheck* a = std::get_if<AbsentCheck>(&item)) {
            out += "!absent " + serialize_pattern(a->pattern);
        } else {
            const Guard& g = std::get<Guard>(item);
            out += "(" + serialize_affine(g.lhs) + " " + cmp_str(g.cmp) + " " +
                   serialize_affine(g.rhs) + ")";
        }
    }
    out += " -o ";
    if (r.effects.empty()) {
        out += "()";
    } else {
        for (size_t i = 0; i < r.effects.size(); ++i) {
            if (i) out += " * ";
            out += serialize_pattern(r.effects[i]);
        }
    }
    out += ".";
    return out;
}

inline std::string serialize_program(const Program& p) {
    std::string out;
    for (const Rule& r : p.rules) {
        out += serialize_rule(r);
        out += '\n';
    }
    return out;
}

}  // namespace phatic
