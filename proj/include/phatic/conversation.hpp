// Two-agent phatic conversation model: scenario data, ruleset generation,
// norm classification, and batch statistics over engine traces.
//
// The model tracks the floor (open or waiting on a question), the current
// topic, per-agent spoken counts, elapsed content turns, feelings, and
// pairwise affinity. Greetings and goodbyes produce utterances but do not
// spend content turns; budget guards are written against the budget(B) atom
// so one generated ruleset serves any turn budget.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "engine.hpp"
#include "kernel.hpp"
#include "parser.hpp"

#include "../../vendor/json.hpp"

namespace phatic {

inline const char* kPolarityPositive = "positive";
inline const char* kPolarityNegative = "negative";

struct TopicInfo {
    std::string id;
    std::string kind;  // "small_talk", "sport", "music", ...
    bool operator==(const TopicInfo&) const = default;
};

struct Opinion {
    std::string agent;
    std::string topic;
    std::string polarity;  // positive | negative
    bool operator==(const Opinion&) const = default;
};

// Scenario is pure data; build_ruleset and initial_state derive everything
// else from it. Agent and topic ids are lowercase alphanumeric (no
// underscores) so generated rule names parse back unambiguously.
struct Scenario {
    std::string id = "default";
    std::vector<std::string> agents;          // exactly two
    std::vector<TopicInfo> topics;
    std::vector<Opinion> opinions;            // at most one per (agent, topic)
    std::set<std::pair<std::string, std::string>> related;  // undirected, stored a < b
    int turn_budget = 12;
    std::map<std::string, std::string> feelings;          // agent -> initial feeling
    std::map<std::pair<std::string, std::string>, int> affinity;  // ordered pair -> value
};

namespace detail {

inline bool plain_id(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
    return true;
}

inline std::pair<std::string, std::string> norm_pair(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

}  // namespace detail

// Returns problems as human-readable strings; empty means the scenario is
// usable. Budgets below 6 cannot fit small talk plus the goodbye exchange.
inline std::vector<std::string> validate_scenario(const Scenario& sc) {
    std::vector<std::string> errs;
    auto err = [&errs](std::string m) { errs.push_back(std::move(m)); };

    if (sc.id.empty()) err("scenario id is empty");
    if (sc.agents.size() != 2)
        err("scenario needs exactly two agents, got " + std::to_string(sc.agents.size()));
    std::set<std::string> agent_ids;
    for (const auto& a : sc.agents) {
        if (!detail::plain_id(a)) err("agent id '" + a + "' must be lowercase alphanumeric");
        if (!agent_ids.insert(a).second) err("duplicate agent '" + a + "'");
    }

    std::set<std::string> topic_ids;
    bool any_small_talk = false;
    for (const auto& t : sc.topics) {
        if (!detail::plain_id(t.id)) err("topic id '" + t.id + "' must be lowercase alphanumeric");
        if (t.id == "none") err("topic id 'none' is reserved");
        if (!topic_ids.insert(t.id).second) err("duplicate topic '" + t.id + "'");
        if (t.kind == "small_talk") any_small_talk = true;
    }
    if (!any_small_talk) err("scenario has no small-talk topic");

    std::set<std::pair<std::string, std::string>> seen_op;
    for (const auto& o : sc.opinions) {
        if (!agent_ids.count(o.agent)) err("opinion references unknown agent '" + o.agent + "'");
        if (!topic_ids.count(o.topic)) err("opinion references unknown topic '" + o.topic + "'");
        if (o.polarity != kPolarityPositive && o.polarity != kPolarityNegative)
            err("opinion polarity '" + o.polarity + "' must be positive or negative");
        if (!seen_op.insert({o.agent, o.topic}).second)
            err("agent '" + o.agent + "' has two opinions on '" + o.topic + "'");
    }

    for (const auto& [a, b] : sc.related) {
        if (a == b) err("topic '" + a + "' related to itself");
        if (!topic_ids.count(a)) err("relatedness references unknown topic '" + a + "'");
        if (!topic_ids.count(b)) err("relatedness references unknown topic '" + b + "'");
    }
    // Content topics must be reachable from small talk through relatedness.
    for (const auto& t : sc.topics) {
        if (t.kind == "small_talk") continue;
        bool linked = false;
        for (const auto& s : sc.topics) {
            if (s.kind != "small_talk") continue;
            if (sc.related.count(detail::norm_pair(t.id, s.id))) linked = true;
        }
        if (!linked) err("topic '" + t.id + "' is not related to any small-talk topic");
    }

    if (sc.turn_budget < 6)
        err("turn budget " + std::to_string(sc.turn_budget) + " is below the minimum of 6");
    if (sc.turn_budget > kCounterMax)
        err("turn budget " + std::to_string(sc.turn_budget) + " exceeds the counter cap of 255");

    for (const auto& [agent, feeling] : sc.feelings) {
        if (!agent_ids.count(agent)) err("feeling references unknown agent '" + agent + "'");
        if (feeling != "content" && feeling != "happy" && feeling != "sad" && feeling != "annoyed")
            err("unknown feeling '" + feeling + "'");
    }
    for (const auto& [pair, v] : sc.affinity) {
        if (!agent_ids.count(pair.first) || !agent_ids.count(pair.second))
            err("affinity references unknown agent pair");
        if (v < 0 || v > kCounterMax) err("affinity value out of range 0..255");
    }
    return errs;
}

inline Scenario default_scenario() {
    Scenario sc;
    sc.id = "default";
    sc.agents = {"bob", "alice"};
    sc.topics = {
        {"weekend", "small_talk"}, {"weather", "small_talk"},
        {"baseball", "sport"},     {"soccer", "sport"},   {"running", "sport"},
        {"pop", "music"},          {"country", "music"},  {"rock", "music"},
    };
    sc.opinions = {
        {"bob", "baseball", kPolarityPositive},
        {"bob", "rock", kPolarityPositive},
        {"bob", "pop", kPolarityNegative},
        {"alice", "soccer", kPolarityPositive},
        {"alice", "pop", kPolarityPositive},
        {"alice", "baseball", kPolarityNegative},
        {"alice", "rock", kPolarityPositive},
    };
    auto rel = [&sc](const std::string& a, const std::string& b) {
        sc.related.insert(detail::norm_pair(a, b));
    };
    rel("weekend", "weather");
    for (const std::string small : {"weekend", "weather"})
        for (const std::string t : {"baseball", "soccer", "running", "pop", "country", "rock"})
            rel(small, t);
    rel("baseball", "soccer");
    rel("baseball", "running");
    rel("soccer", "running");
    rel("pop", "country");
    rel("pop", "rock");
    rel("country", "rock");
    sc.turn_budget = 12;
    sc.feelings = {{"bob", "content"}, {"alice", "content"}};
    sc.affinity = {{{"bob", "alice"}, 0}, {{"alice", "bob"}, 0}};
    return sc;
}

inline void require_valid(const Scenario& sc) {
    auto errs = validate_scenario(sc);
    if (errs.empty()) return;
    std::string msg = "invalid scenario '" + sc.id + "':";
    for (const auto& e : errs) msg += "\n  " + e;
    throw std::invalid_argument(msg);
}

// -------------------------------------------------------------------------
// Scenario JSON

inline nlohmann::json scenario_to_json(const Scenario& sc) {
    nlohmann::json j;
    j["id"] = sc.id;
    j["agents"] = sc.agents;
    j["topics"] = nlohmann::json::array();
    for (const auto& t : sc.topics) j["topics"].push_back({{"id", t.id}, {"kind", t.kind}});
    j["opinions"] = nlohmann::json::array();
    for (const auto& o : sc.opinions)
        j["opinions"].push_back({{"agent", o.agent}, {"topic", o.topic}, {"polarity", o.polarity}});
    j["relatedness"] = nlohmann::json::array();
    for (const auto& [a, b] : sc.related) j["relatedness"].push_back({a, b});
    j["turn_budget"] = sc.turn_budget;
    j["feelings"] = sc.feelings;
    j["affinity"] = nlohmann::json::array();
    for (const auto& [pair, v] : sc.affinity)
        j["affinity"].push_back({pair.first, pair.second, v});
    return j;
}

inline Scenario scenario_from_json(const nlohmann::json& j) {
    Scenario sc;
    try {
        sc.id = j.at("id").get<std::string>();
        sc.agents = j.at("agents").get<std::vector<std::string>>();
        for (const auto& t : j.at("topics"))
            sc.topics.push_back({t.at("id").get<std::string>(), t.at("kind").get<std::string>()});
        for (const auto& o : j.value("opinions", nlohmann::json::array()))
            sc.opinions.push_back({o.at("agent").get<std::string>(),
                                   o.at("topic").get<std::string>(),
                                   o.at("polarity").get<std::string>()});
        for (const auto& r : j.value("relatedness", nlohmann::json::array())) {
            if (!r.is_array() || r.size() != 2)
                throw std::invalid_argument("relatedness entries must be two-element arrays");
            sc.related.insert(detail::norm_pair(r.at(0).get<std::string>(),
                                                r.at(1).get<std::string>()));
        }
        sc.turn_budget = j.value("turn_budget", 12);
        if (j.contains("feelings"))
            sc.feelings = j.at("feelings").get<std::map<std::string, std::string>>();
        for (const auto& a : j.value("affinity", nlohmann::json::array()))
            sc.affinity[{a.at(0).get<std::string>(), a.at(1).get<std::string>()}] =
                a.at(2).get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad scenario JSON: ") + e.what());
    }
    // Default missing feelings/affinity so authored files can omit them.
    for (const auto& a : sc.agents)
        if (!sc.feelings.count(a)) sc.feelings[a] = "content";
    if (sc.agents.size() == 2) {
        for (const auto& a : sc.agents)
            for (const auto& b : sc.agents)
                if (a != b && !sc.affinity.count({a, b})) sc.affinity[{a, b}] = 0;
    }
    require_valid(sc);
    return sc;
}

// -------------------------------------------------------------------------
// Initial state

inline State initial_state(const Scenario& sc) {
    require_valid(sc);
    State s;
    s.insert(atom("floor", {"open"}));
    for (const auto& a : sc.agents) s.insert(atom("may_greet", {a}));
    s.insert(atom("topic", {"none"}));
    for (const auto& a : sc.agents) {
        s.insert(Atom{Symbol("spoke"), {Symbol(a), num_symbol(0)}});
        s.insert(Atom{Symbol("feels"), {Symbol(a), Symbol(sc.feelings.at(a))}});
    }
    s.insert(Atom{Symbol("elapsed"), {num_symbol(0)}});
    s.insert(Atom{Symbol("budget"), {num_symbol(sc.turn_budget)}});
    const auto& x = sc.agents[0];
    const auto& y = sc.agents[1];
    s.insert(atom("partner", {x, y}));
    s.insert(atom("partner", {y, x}));
    s.insert(Atom{Symbol("affinity"), {Symbol(x), Symbol(y), num_symbol(sc.affinity.at({x, y}))}});
    s.insert(Atom{Symbol("affinity"), {Symbol(y), Symbol(x), num_symbol(sc.affinity.at({y, x}))}});
    for (const auto& o : sc.opinions) s.insert(atom("opinion", {o.agent, o.topic, o.polarity}));
    // segue holds the identity plus both directions of relatedness; topic
    // talk matches segue(T0, T) to stay on topic or drift to a related one.
    for (const auto& t : sc.topics) s.insert(atom("segue", {t.id, t.id}));
    for (const auto& [a, b] : sc.related) {
        s.insert(atom("segue", {a, b}));
        s.insert(atom("segue", {b, a}));
    }
    return s;
}

// -------------------------------------------------------------------------
// Ruleset generation

namespace detail {

// Topics someone holds an opinion on, in scenario topic order.
inline std::vector<std::string> askable_topics(const Scenario& sc) {
    std::vector<std::string> out;
    for (const auto& t : sc.topics) {
        bool held = false;
        for (const auto& o : sc.opinions)
            if (o.topic == t.id) held = true;
        if (held) out.push_back(t.id);
    }
    return out;
}

// Distinct (topic, polarity) pairs present in opinions, in scenario order.
inline std::vector<std::pair<std::string, std::string>> voiced_stances(const Scenario& sc) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& t : sc.topics)
        for (const char* pol : {kPolarityPositive, kPolarityNegative}) {
            bool held = false;
            for (const auto& o : sc.opinions)
                if (o.topic == t.id && o.polarity == pol) held = true;
            if (held) out.emplace_back(t.id, pol);
        }
    return out;
}

}  // namespace detail

// Emits the .phatic source for a scenario. Counters: spoke and elapsed move
// only on content moves, so a quiescent conversation fits greeting pair +
// elapsed(<= B-4) content turns + goodbye pair inside the budget.
inline std::string ruleset_text(const Scenario& sc) {
    require_valid(sc);
    std::ostringstream o;
    const std::string turn = "spoke(C,N) * elapsed(E) * budget(B)";
    const std::string gate = "(E < B - 4) * (N2 = N + 1) * (E2 = E + 1)";
    const std::string turn2 = "spoke(C,N2) * elapsed(E2) * budget(B)";

    o << "% conversation ruleset for scenario '" << sc.id << "' (generated)\n";
    o << "% floor(open|waiting) serializes moves; spoke/elapsed count content turns only\n\n";

    for (const auto& a : sc.agents)
        for (const auto& b : sc.agents) {
            if (a == b) continue;
            o << "rule greet_" << a << "_" << b << ": floor(open) * may_greet(" << a
              << ") -o floor(open).\n";
        }
    o << "\n";

    for (const auto& t : sc.topics) {
        if (t.kind != "small_talk") continue;
        o << "rule small_talk_" << t.id << ": floor(open) * topic(none) * !absent may_greet(X) * "
          << turn << " * " << gate << " -o floor(open) * topic(" << t.id << ") * chatting * "
          << turn2 << ".\n";
    }
    o << "\n";

    // An agent states each stance at most once per conversation; the voiced
    // token guards against verbatim repeats.
    for (const auto& [t, pol] : detail::voiced_stances(sc))
        for (const char* enth : {"typical", "enthusiastic"}) {
            const char* token = (std::string(enth) == "typical") ? "react_typical" : "react_enth";
            o << "rule topic_talk_" << t << "_" << enth << "_" << pol
              << ": floor(open) * topic(T0) * segue(T0," << t << ") * opinion(C," << t << ","
              << pol << ") * !absent voiced(C," << t << "," << pol << ") * " << turn << " * "
              << gate << " -o floor(open) * topic(" << t << ") * segue(T0," << t
              << ") * opinion(C," << t << "," << pol << ") * voiced(C," << t << "," << pol
              << ") * " << turn2 << " * " << token << "(C," << t << "," << pol << ").\n";
        }
    o << "\n";

    for (const auto& t : sc.topics)
        o << "rule continue_talking_" << t.id << ": floor(open) * topic(" << t.id << ") * "
          << turn << " * " << gate << " -o floor(open) * topic(" << t.id << ") * " << turn2
          << ".\n";
    o << "\n";

    for (const auto& [a, b] : sc.related)
        for (const auto& [from, to] : {std::pair{a, b}, std::pair{b, a}})
            o << "rule change_topic_" << from << "_" << to << ": floor(open) * topic(" << from
              << ") * " << turn << " * " << gate << " -o floor(open) * topic(" << to << ") * "
              << turn2 << ".\n";
    o << "\n";

    for (const auto& t : detail::askable_topics(sc)) {
        o << "rule ask_question_" << t << ": floor(open) * topic(T0) * segue(T0," << t
          << ") * partner(C,C') * opinion(C'," << t << ",P) * !absent asked(C," << t << ") * "
          << turn << " * " << gate << " -o floor(waiting) * topic(" << t << ") * segue(T0," << t
          << ") * pending(C',C," << t << ") * asked(C," << t << ") * partner(C,C') * opinion(C',"
          << t << ",P) * " << turn2 << ".\n";
        o << "rule reciprocate_question_" << t << ": floor(waiting) * pending(C,C'," << t
          << ") * opinion(C," << t << ",P) * affinity(C,C',A) * affinity(C',C,D) * " << turn
          << " * (E < B - 4) * (A2 = A + 1) * (D2 = D + 1) * (N2 = N + 1) * (E2 = E + 1)"
          << " -o floor(open) * opinion(C," << t << ",P) * affinity(C,C',A2) * affinity(C',C,D2) * "
          << turn2 << ".\n";
    }
    o << "\n";

    // Goodbyes close the floor; the named agent speaks first and the partner
    // owes the closing line. Minimum length guard keeps trivial exits rare.
    for (const auto& a : sc.agents)
        for (const auto& b : sc.agents) {
            if (a == b) continue;
            o << "rule initiate_goodbye_" << a << "_" << b
              << ": floor(F) * chatting * elapsed(E) * budget(B) * (3 * E >= B)"
              << " -o elapsed(E) * budget(B) * farewell_owed(" << b << ").\n";
        }
    for (const auto& a : sc.agents)
        for (const auto& b : sc.agents) {
            if (a == b) continue;
            o << "rule say_goodbye_" << a << "_" << b << ": farewell_owed(" << a << ") -o ().\n";
        }
    o << "rule terminate_conversation: floor(F) * chatting * feels(C,annoyed) * partner(C,C')"
      << " -o feels(C,annoyed) * partner(C,C') * farewell_owed(C').\n\n";

    o << "% bookkeeping: silent reactions and the fairness monitor\n";
    o << "rule annoyed_by_unfair_participation: chatting * feels(C,content) * partner(C,C') * "
      << "spoke(C',S) * elapsed(E) * (S > 2/3 * E)"
      << " -o chatting * feels(C,annoyed) * partner(C,C') * spoke(C',S) * elapsed(E).\n";
    o << "rule like_from_agreement: chatting * react_typical(C,T,P) * partner(C,C') * "
      << "opinion(C',T,P) * affinity(C',C,A) * (A2 = A + 1)"
      << " -o chatting * partner(C,C') * opinion(C',T,P) * affinity(C',C,A2).\n";
    o << "rule happy_from_enthusiastic_agreement: chatting * react_enth(C,T,P) * partner(C,C') * "
      << "opinion(C',T,P) * affinity(C',C,A) * feels(C',content) * (A2 = A + 1)"
      << " -o chatting * partner(C,C') * opinion(C',T,P) * affinity(C',C,A2) * feels(C',happy).\n";
    o << "rule dislike_from_disagreement_positive: chatting * react_enth(C,T,positive) * "
      << "partner(C,C') * opinion(C',T,negative) * affinity(C',C,A) * feels(C,content) * "
      << "(A2 = A - 2)"
      << " -o chatting * partner(C,C') * opinion(C',T,negative) * affinity(C',C,A2) * "
      << "feels(C,sad).\n";
    o << "rule dislike_from_disagreement_negative: chatting * react_enth(C,T,negative) * "
      << "partner(C,C') * opinion(C',T,positive) * affinity(C',C,A) * feels(C,content) * "
      << "(A2 = A - 2)"
      << " -o chatting * partner(C,C') * opinion(C',T,positive) * affinity(C',C,A2) * "
      << "feels(C,sad).\n";
    return o.str();
}

inline Program build_ruleset(const Scenario& sc) {
    auto res = parse_program(ruleset_text(sc));
    if (!res.ok()) {
        std::string msg = "generated ruleset failed to parse:";
        for (const auto& d : res.diagnostics) msg += "\n  " + d.format("<generated>");
        throw std::logic_error(msg);
    }
    return *res.program;
}

inline Program build_ruleset() { return build_ruleset(default_scenario()); }

// -------------------------------------------------------------------------
// Move families

// Family names double as name prefixes of generated rules.
inline const std::vector<std::string>& move_families() {
    static const std::vector<std::string> fams = {
        "greet",
        "small_talk",
        "topic_talk",
        "continue_talking",
        "ask_question",
        "reciprocate_question",
        "change_topic",
        "initiate_goodbye",
        "say_goodbye",
        "terminate_conversation",
        "annoyed_by_unfair_participation",
        "like_from_agreement",
        "happy_from_enthusiastic_agreement",
        "dislike_from_disagreement",
    };
    return fams;
}

inline std::optional<std::string> family_of(const std::string& rule_name) {
    std::optional<std::string> best;
    for (const auto& f : move_families())
        if (rule_name == f || (rule_name.size() > f.size() && rule_name.compare(0, f.size(), f) == 0 &&
                               rule_name[f.size()] == '_'))
            if (!best || f.size() > best->size()) best = f;
    return best;
}

// Families whose firing renders a dialogue line.
inline bool is_utterance_family(const std::string& fam) {
    return fam == "greet" || fam == "small_talk" || fam == "topic_talk" ||
           fam == "continue_talking" || fam == "ask_question" ||
           fam == "reciprocate_question" || fam == "change_topic" ||
           fam == "initiate_goodbye" || fam == "say_goodbye" ||
           fam == "terminate_conversation";
}

// Families that spend a content turn (increment spoke and elapsed).
inline bool is_content_family(const std::string& fam) {
    return fam == "small_talk" || fam == "topic_talk" || fam == "continue_talking" ||
           fam == "ask_question" || fam == "reciprocate_question" || fam == "change_topic";
}

// Speaking agent of a step, when one exists. Ground rule names carry the
// speaker right after the family prefix; bound rules use variable C.
inline std::optional<std::string> speaker_of(const std::string& rule_name,
                                             const Binding& binding) {
    auto fam = family_of(rule_name);
    if (!fam) return std::nullopt;
    if (*fam == "greet" || *fam == "initiate_goodbye" || *fam == "say_goodbye") {
        std::string rest = rule_name.substr(fam->size() + 1);
        auto us = rest.find('_');
        if (us == std::string::npos) return std::nullopt;
        return rest.substr(0, us);
    }
    if (is_content_family(*fam) || *fam == "terminate_conversation") {
        auto it = binding.find("C");
        if (it != binding.end()) return std::string(it->second.text());
    }
    return std::nullopt;
}

// -------------------------------------------------------------------------
// Norm classification

// Exact integer form of the unfair-participation trigger: the partner has
// spoken more than two thirds of the content turns so far.
inline bool annoyance_condition(int spoken_by_other, int total_turns) {
    return 3 * spoken_by_other > 2 * total_turns;
}

struct MalformedTrace : std::runtime_error {
    explicit MalformedTrace(const std::string& what) : std::runtime_error(what) {}
};

inline const char* kViolationDomination = "domination";
inline const char* kViolationVocalizedDisagreement = "vocalized_disagreement";
inline const char* kViolationEarlyTermination = "early_termination";

struct NormReport {
    bool adherent = true;
    std::vector<std::string> violations;  // fixed order: domination, vocalized, early
    std::map<std::string, std::string> final_feelings;
    std::map<std::pair<std::string, std::string>, int> final_affinity;
    int content_turns = 0;   // total spoke-incrementing steps
    int utterances = 0;      // total dialogue-line steps
};

// Reads one canonical numeral argument off the unique atom with the given
// predicate; the trace is malformed if it is missing or duplicated.
namespace detail {

inline int unique_counter(const State& s, const std::string& pred, size_t arg_index) {
    std::optional<int> found;
    for (const auto& [a, n] : s.atoms()) {
        if (a.pred.text() != pred) continue;
        if (found || n != 1) throw MalformedTrace("trace state has duplicated " + pred + " atom");
        if (a.args.size() <= arg_index) throw MalformedTrace(pred + " atom has too few args");
        auto v = symbol_number(a.args[arg_index]);
        if (!v) throw MalformedTrace(pred + " atom argument is not a numeral");
        found = *v;
    }
    if (!found) throw MalformedTrace("trace state lacks a " + pred + " atom");
    return *found;
}

}  // namespace detail

inline NormReport classify(const Trace& t) {
    NormReport rep;
    int budget = detail::unique_counter(t.initial, "budget", 0);
    bool domination = false, vocalized = false, early = false;
    int elapsed = 0;
    for (const auto& step : t.steps) {
        std::string name(step.rule.text());
        auto fam = family_of(name);
        if (!fam) throw MalformedTrace("step " + std::to_string(step.index) +
                                       " fired unknown rule '" + name + "'");
        if (*fam == "annoyed_by_unfair_participation") domination = true;
        if (*fam == "dislike_from_disagreement") vocalized = true;
        if (*fam == "terminate_conversation" && elapsed < budget) early = true;
        if (is_content_family(*fam)) {
            ++elapsed;
            ++rep.content_turns;
        }
        if (is_utterance_family(*fam)) ++rep.utterances;
    }
    if (domination) rep.violations.push_back(kViolationDomination);
    if (vocalized) rep.violations.push_back(kViolationVocalizedDisagreement);
    if (early) rep.violations.push_back(kViolationEarlyTermination);
    rep.adherent = rep.violations.empty();
    for (const auto& [a, n] : t.final_state.atoms()) {
        if (a.pred.text() == "feels" && a.args.size() == 2) {
            (void)n;
            rep.final_feelings[std::string(a.args[0].text())] = std::string(a.args[1].text());
        }
        if (a.pred.text() == "affinity" && a.args.size() == 3) {
            auto v = symbol_number(a.args[2]);
            if (!v) throw MalformedTrace("affinity atom argument is not a numeral");
            rep.final_affinity[{std::string(a.args[0].text()),
                                std::string(a.args[1].text())}] = *v;
        }
    }
    return rep;
}

// -------------------------------------------------------------------------
// Batch statistics

struct EmptyBatch : std::runtime_error {
    EmptyBatch() : std::runtime_error("batch_stats needs at least one trace") {}
};

// All fields are per-trace means or fractions, so duplicating the batch
// leaves every number unchanged.
struct BatchStats {
    int count = 0;
    double adherent_fraction = 0.0;
    std::map<std::string, double> violation_rates;     // violation -> fraction of traces
    double mean_utterances = 0.0;
    double mean_content_turns = 0.0;
    int max_utterances = 0;
    std::map<std::string, double> rule_frequency;      // rule -> mean firings per trace
    std::map<std::string, std::map<std::string, double>> feeling_distribution;
};

inline BatchStats batch_stats(const std::vector<Trace>& traces) {
    if (traces.empty()) throw EmptyBatch();
    BatchStats st;
    st.count = static_cast<int>(traces.size());
    std::map<std::string, int> viol_counts;
    std::map<std::string, long> rule_counts;
    std::map<std::string, std::map<std::string, int>> feelings;
    long adherent = 0, utt_total = 0, content_total = 0;
    for (const auto& t : traces) {
        NormReport rep = classify(t);
        if (rep.adherent) ++adherent;
        for (const auto& v : rep.violations) ++viol_counts[v];
        utt_total += rep.utterances;
        content_total += rep.content_turns;
        st.max_utterances = std::max(st.max_utterances, rep.utterances);
        for (const auto& step : t.steps) ++rule_counts[std::string(step.rule.text())];
        for (const auto& [agent, feeling] : rep.final_feelings) ++feelings[agent][feeling];
    }
    double n = static_cast<double>(st.count);
    st.adherent_fraction = adherent / n;
    for (const auto& [v, c] : viol_counts) st.violation_rates[v] = c / n;
    st.mean_utterances = utt_total / n;
    st.mean_content_turns = content_total / n;
    for (const auto& [r, c] : rule_counts) st.rule_frequency[r] = c / n;
    for (const auto& [agent, dist] : feelings)
        for (const auto& [feeling, c] : dist) st.feeling_distribution[agent][feeling] = c / n;
    return st;
}

}  // namespace phatic
