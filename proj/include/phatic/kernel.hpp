#pragma once

// Ground terms, atoms, and the multiset state the rewriting engine operates on.

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace phatic {

namespace detail {

// Global intern table. Symbols keep a stable pointer into `texts`, so
// equality is pointer comparison and text access needs no lock.
struct SymbolTable {
    std::mutex mu;
    std::deque<std::string> texts;
    std::unordered_map<std::string_view, const std::string*> index;

    static SymbolTable& instance() {
        static SymbolTable table;
        return table;
    }

    const std::string* intern(std::string_view name) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        texts.emplace_back(name);
        const std::string* entry = &texts.back();
        index.emplace(std::string_view(*entry), entry);
        return entry;
    }
};

}  // namespace detail

class Symbol {
public:
    explicit Symbol(std::string_view name)
        : text_(detail::SymbolTable::instance().intern(name)) {
        if (name.empty()) throw std::invalid_argument("empty symbol name");
    }

    const std::string& text() const { return *text_; }

    bool operator==(const Symbol& other) const { return text_ == other.text_; }
    bool operator!=(const Symbol& other) const { return text_ != other.text_; }
    // Ordered by text, not by interning history, so container iteration
    // order is independent of which symbol happened to be created first.
    bool operator<(const Symbol& other) const {
        return text_ != other.text_ && *text_ < *other.text_;
    }

private:
    const std::string* text_;
};

// Numeric symbols encode counter values; domain 0..255.
inline constexpr int kCounterMax = 255;

inline Symbol num_symbol(int value) {
    if (value < 0 || value > kCounterMax)
        throw std::out_of_range("counter value out of domain: " + std::to_string(value));
    return Symbol(std::to_string(value));
}

// Canonical numerals only: "0" or nonzero without leading zeros, at most 255.
inline std::optional<int> symbol_number(const Symbol& s) {
    const std::string& t = s.text();
    if (t.empty() || t.size() > 3) return std::nullopt;
    if (t.size() > 1 && t[0] == '0') return std::nullopt;
    int value = 0;
    for (char c : t) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
    }
    if (value > kCounterMax) return std::nullopt;
    return value;
}

struct Atom {
    Symbol pred;
    std::vector<Symbol> args;  // arity 0..3, fixed per predicate by the DSL checker

    bool operator==(const Atom& other) const {
        return pred == other.pred && args == other.args;
    }
    bool operator!=(const Atom& other) const { return !(*this == other); }

    std::string str() const {
        std::string out = pred.text();
        if (!args.empty()) {
            out += '(';
            for (size_t i = 0; i < args.size(); ++i) {
                if (i) out += ',';
                out += args[i].text();
            }
            out += ')';
        }
        return out;
    }
};

inline Atom atom(std::string_view pred, std::initializer_list<std::string_view> args = {}) {
    Atom a{Symbol(pred), {}};
    for (auto s : args) a.args.emplace_back(s);
    return a;
}

// Parses the canonical `pred(arg1,arg2)` form produced by Atom::str.
inline std::optional<Atom> atom_from_str(std::string_view text) {
    auto is_sym_char = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    };
    size_t i = 0;
    auto take_symbol = [&]() -> std::optional<std::string_view> {
        size_t start = i;
        while (i < text.size() && is_sym_char(text[i])) ++i;
        if (i == start) return std::nullopt;
        return text.substr(start, i - start);
    };
    auto pred = take_symbol();
    if (!pred) return std::nullopt;
    Atom a{Symbol(*pred), {}};
    if (i == text.size()) return a;
    if (text[i] != '(') return std::nullopt;
    ++i;
    while (true) {
        auto arg = take_symbol();
        if (!arg) return std::nullopt;
        a.args.emplace_back(*arg);
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    if (i >= text.size() || text[i] != ')') return std::nullopt;
    ++i;
    if (i != text.size()) return std::nullopt;
    if (a.args.size() > 3) return std::nullopt;
    return a;
}

struct AtomLess {
    bool operator()(const Atom& a, const Atom& b) const {
        if (a.pred != b.pred) return a.pred < b.pred;
        size_t n = std::min(a.args.size(), b.args.size());
        for (size_t i = 0; i < n; ++i)
            if (a.args[i] != b.args[i]) return a.args[i] < b.args[i];
        return a.args.size() < b.args.size();
    }
};

struct AtomAbsent : std::runtime_error {
    explicit AtomAbsent(const Atom& a)
        : std::runtime_error("atom not present in state: " + a.str()) {}
};

// Multiset of ground atoms. Keyed in text order, so iteration (and hence
// serialization and instance enumeration downstream) is deterministic
// regardless of insertion history.
class State {
public:
    using Map = std::map<Atom, int, AtomLess>;

    State() = default;

    void insert(const Atom& a, int n = 1) {
        if (n <= 0) throw std::invalid_argument("insert count must be positive");
        atoms_[a] += n;
        total_ += n;
    }

    void remove(const Atom& a) {
        auto it = atoms_.find(a);
        if (it == atoms_.end()) throw AtomAbsent(a);
        if (--it->second == 0) atoms_.erase(it);
        --total_;
    }

    int count(const Atom& a) const {
        auto it = atoms_.find(a);
        return it == atoms_.end() ? 0 : it->second;
    }

    bool contains(const Atom& a) const { return atoms_.find(a) != atoms_.end(); }
    bool empty() const { return atoms_.empty(); }
    // Total multiplicity, not the number of distinct atoms.
    int size() const { return total_; }
    const Map& atoms() const { return atoms_; }

    bool operator==(const State& other) const { return atoms_ == other.atoms_; }
    bool operator!=(const State& other) const { return !(*this == other); }

    // One atom per line, lexicographic, ` xN` marking multiplicity > 1.
    std::string str() const {
        std::string out;
        for (const auto& [a, n] : atoms_) {
            out += a.str();
            if (n > 1) {
                out += " x";
                out += std::to_string(n);
            }
            out += '\n';
        }
        return out;
    }

private:
    Map atoms_;
    int total_ = 0;
};

// Functional views of the three state operations.
inline State state_insert(State s, const Atom& a) {
    s.insert(a);
    return s;
}

inline State state_remove(State s, const Atom& a) {
    s.remove(a);
    return s;
}

inline int state_count(const State& s, const Atom& a) { return s.count(a); }

}  // namespace phatic
