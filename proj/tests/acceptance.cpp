// Acceptance gate: one criterion per line, PASS or FAIL, nonzero exit when
// anything fails. Each criterion is self-contained; the 10,000-seed sample
// and its norm reports are shared where several criteria read them.

#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "phatic/builtin_bank.hpp"
#include "phatic/builtin_ruleset.hpp"
#include "phatic/cli.hpp"
#include "phatic/conversation.hpp"
#include "phatic/surface.hpp"
#include "phatic/trace_json.hpp"

#include "oracles.hpp"

using namespace phatic;

namespace {

int failures = 0;

// budget_ms 0 means untimed; otherwise overrunning the budget is a failure.
template <typename F>
void criterion(int n, const char* label, long budget_ms, F&& body) {
    bool ok = false;
    std::string note;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = e.what();
    }
    long ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count());
    if (ok && budget_ms > 0 && ms > budget_ms) {
        ok = false;
        note = "over the " + std::to_string(budget_ms) + " ms budget";
    }
    std::printf("%s  %d  %s (%ld ms)%s%s\n", ok ? "PASS" : "FAIL", n, label, ms,
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++failures;
}

ReplayStep rs(std::string rule) { return {std::move(rule), {}}; }
ReplayStep rs(std::string rule, std::string speaker) {
    return {std::move(rule), {{"C", Symbol(std::move(speaker))}}};
}

const Program& prog() {
    static Program p = build_ruleset();
    return p;
}

const State& start_state() {
    static State s = initial_state(default_scenario());
    return s;
}

const Bank& shipped_bank() {
    static Bank b = bank_from_text(builtin_bank_text());
    return b;
}

std::vector<ReplayStep> walk_out_script() {
    return {
        rs("greet_bob_alice"),
        rs("greet_alice_bob"),
        rs("small_talk_weather", "bob"),
        rs("change_topic_weather_baseball", "bob"),
        rs("topic_talk_baseball_typical_positive", "bob"),
        rs("continue_talking_baseball", "bob"),
        rs("annoyed_by_unfair_participation", "alice"),
        rs("terminate_conversation", "alice"),
        rs("say_goodbye_bob_alice"),
    };
}

struct Sampled {
    std::vector<Trace> traces;
    std::vector<NormReport> reports;
};

// Seeds 0..9999, generated once on first use.
const Sampled& sample10k() {
    static Sampled s = [] {
        Sampled out;
        auto pairs = cli_detail::parallel_map<std::pair<Trace, NormReport>>(10000, [](int i) {
            Trace t = run(start_state(), prog(), static_cast<uint64_t>(i));
            NormReport rep = classify(t);
            return std::make_pair(std::move(t), std::move(rep));
        });
        for (auto& [t, rep] : pairs) {
            out.traces.push_back(std::move(t));
            out.reports.push_back(std::move(rep));
        }
        return out;
    }();
    return s;
}

std::optional<std::string> fam_of_step(const TraceStep& st) {
    return family_of(std::string(st.rule.text()));
}

// Utterance-family sequence of a trace, e.g. greet>greet>small_talk>...
std::string move_signature(const Trace& t) {
    std::string sig;
    for (const auto& st : t.steps) {
        auto fam = fam_of_step(st);
        if (!fam || !is_utterance_family(*fam)) continue;
        if (!sig.empty()) sig += '>';
        sig += *fam;
    }
    return sig;
}

bool contains(const std::vector<std::string>& v, const char* key) {
    for (const auto& s : v)
        if (s == key) return true;
    return false;
}

std::optional<std::string> topic_arg(const std::vector<Atom>& atoms) {
    for (const Atom& a : atoms)
        if (a.pred.text() == "topic" && a.args.size() == 1)
            return std::string(a.args[0].text());
    return std::nullopt;
}

// ---------------------------------------------------------------------------

bool c1_golden_walk_out(std::string& note) {
    Trace t = replay(start_state(), prog(), walk_out_script());
    NormReport rep = classify(t);
    std::vector<std::string> want = {kViolationDomination, kViolationEarlyTermination};
    if (rep.violations != want) {
        note = "unexpected violation set";
        return false;
    }
    if (rep.final_feelings.at("alice") != "annoyed") {
        note = "alice is not annoyed";
        return false;
    }
    std::string first = transcript_line_text(realize_step_variant(t.steps[0], shipped_bank(), 0, 0));
    std::string last = transcript_line_text(realize_step_variant(t.steps[8], shipped_bank(), 0, 0));
    if (first != "Bob: Good morning, Alice!") {
        note = "greeting line reads '" + first + "'";
        return false;
    }
    if (last != "Bob: Take care.") {
        note = "farewell line reads '" + last + "'";
        return false;
    }
    return true;
}

// In-order content-family subsequence demanded of the balanced exemplar.
bool has_normative_shape(const Trace& t) {
    static const std::vector<std::string> req = {
        "small_talk", "topic_talk",  "ask_question", "reciprocate_question",
        "change_topic", "topic_talk", "ask_question",
    };
    size_t at = 0;
    std::string last_utt;
    for (const auto& st : t.steps) {
        auto fam = fam_of_step(st);
        if (!fam) return false;
        if (is_utterance_family(*fam)) last_utt = *fam;
        if (at < req.size() && is_content_family(*fam) && *fam == req[at]) ++at;
    }
    return at == req.size() && last_utt == "say_goodbye";
}

// One speaker holding the floor for five or more content turns running, at
// least one of them a continue, in a dominated conversation that still closes.
bool has_one_sided_shape(const Trace& t, const NormReport& rep) {
    if (!contains(rep.violations, kViolationDomination)) return false;
    std::string last_utt;
    std::string holder;
    int run = 0, continues = 0;
    bool long_run = false;
    for (const auto& st : t.steps) {
        auto fam = fam_of_step(st);
        if (!fam) return false;
        if (is_utterance_family(*fam)) last_utt = *fam;
        if (!is_content_family(*fam)) continue;
        auto who = speaker_of(std::string(st.rule.text()), st.binding);
        if (!who) return false;
        if (*who != holder) {
            holder = *who;
            run = 0;
            continues = 0;
        }
        ++run;
        if (*fam == "continue_talking") ++continues;
        if (run >= 5 && continues >= 1) long_run = true;
    }
    return long_run && last_utt == "say_goodbye";
}

bool c2_exemplar_paths(std::string& note) {
    std::vector<ReplayStep> balanced = {
        rs("greet_bob_alice"),
        rs("greet_alice_bob"),
        rs("small_talk_weekend", "alice"),
        rs("topic_talk_soccer_typical_positive", "alice"),
        rs("ask_question_soccer", "bob"),
        rs("reciprocate_question_soccer", "alice"),
        rs("change_topic_soccer_baseball", "alice"),
        rs("topic_talk_baseball_typical_negative", "alice"),
        rs("ask_question_baseball", "alice"),
        rs("initiate_goodbye_alice_bob"),
        rs("say_goodbye_bob_alice"),
    };
    Trace tb = replay(start_state(), prog(), balanced);
    if (!classify(tb).adherent || !has_normative_shape(tb)) {
        note = "balanced exemplar lost its shape";
        return false;
    }

    std::vector<ReplayStep> one_sided = {
        rs("greet_bob_alice"),
        rs("greet_alice_bob"),
        rs("small_talk_weather", "bob"),
        rs("topic_talk_baseball_typical_positive", "bob"),
        rs("continue_talking_baseball", "bob"),
        rs("continue_talking_baseball", "bob"),
        rs("continue_talking_baseball", "bob"),
        rs("continue_talking_baseball", "bob"),
        rs("annoyed_by_unfair_participation", "alice"),
        rs("initiate_goodbye_bob_alice"),
        rs("say_goodbye_alice_bob"),
    };
    Trace to = replay(start_state(), prog(), one_sided);
    if (!has_one_sided_shape(to, classify(to))) {
        note = "one-sided exemplar lost its shape";
        return false;
    }

    const Sampled& s = sample10k();
    int n_norm = 0, n_one = 0;
    for (size_t i = 0; i < s.traces.size(); ++i) {
        if (s.reports[i].adherent && has_normative_shape(s.traces[i])) ++n_norm;
        if (has_one_sided_shape(s.traces[i], s.reports[i])) ++n_one;
    }
    if (n_norm == 0 || n_one == 0) {
        note = "witnesses in 10000 seeds: normative " + std::to_string(n_norm) + ", one-sided " +
               std::to_string(n_one);
        return false;
    }
    note = "witnesses: normative " + std::to_string(n_norm) + ", one-sided " + std::to_string(n_one);
    return true;
}

std::optional<std::string> flow_defect(const Trace& t, const Scenario& sc) {
    const auto& steps = t.steps;
    if (steps.size() < 2) return "fewer than two steps";
    std::vector<std::string> fams;
    for (const auto& st : steps) {
        auto fam = fam_of_step(st);
        if (!fam) return "unknown rule family";
        fams.push_back(*fam);
    }
    if (fams[0] != "greet" || fams[1] != "greet") return "conversation does not open with greets";
    for (size_t i = 2; i < fams.size(); ++i)
        if (fams[i] == "greet") return "late greet";

    size_t wind = fams.size();
    for (size_t i = 0; i < fams.size(); ++i)
        if (fams[i] == "initiate_goodbye" || fams[i] == "terminate_conversation") {
            wind = i;
            break;
        }
    for (size_t i = wind + 1; i < fams.size(); ++i)
        if (is_utterance_family(fams[i]) && fams[i] != "say_goodbye")
            return "utterance after the goodbye began";

    bool small_seen = false;
    for (size_t i = 0; i < fams.size(); ++i) {
        if (fams[i] == "small_talk") small_seen = true;
        if (fams[i] == "topic_talk" && !small_seen) return "topic talk before small talk";
        if (is_content_family(fams[i]) && !small_seen && fams[i] != "small_talk")
            return "content before small talk";
    }

    for (size_t i = 0; i < fams.size(); ++i) {
        if (fams[i] != "ask_question" && fams[i] != "reciprocate_question") continue;
        auto asker = speaker_of(std::string(steps[i].rule.text()), steps[i].binding);
        if (!asker) return "question step without a speaker";
        size_t j = i + 1;
        while (j < fams.size() && !is_content_family(fams[j])) ++j;
        if (fams[i] == "ask_question" && j < fams.size()) {
            auto answerer = speaker_of(std::string(steps[j].rule.text()), steps[j].binding);
            if (fams[j] != "reciprocate_question" || !answerer || *answerer == *asker)
                return "question not answered before other moves";
        }
        if (fams[i] == "reciprocate_question") {
            size_t k = i;
            while (k > 0 && !is_content_family(fams[--k]))
                ;
            if (fams[k] != "ask_question") return "answer without a question";
        }
    }

    for (const auto& st : steps) {
        auto from = topic_arg(st.consumed);
        auto to = topic_arg(st.produced);
        if (!from || !to || *from == *to) continue;
        if (*from == "none") continue;
        auto a = *from, b = *to;
        if (b < a) std::swap(a, b);
        if (!sc.related.count({a, b})) return "topic move " + *from + " to " + *to + " unrelated";
    }
    return std::nullopt;
}

bool c3_flow_conformance(std::string& note) {
    Scenario sc = default_scenario();
    const Sampled& s = sample10k();
    for (size_t i = 0; i < s.traces.size(); ++i) {
        auto defect = flow_defect(s.traces[i], sc);
        if (defect) {
            note = "seed " + std::to_string(i) + ": " + *defect;
            return false;
        }
    }
    return true;
}

// Re-walks a trace with independent spoke/elapsed counters and requires the
// participation inequality for every enabled or fired annoyance instance.
std::optional<std::string> annoyance_defect(const Trace& t, const Scenario& sc) {
    State cur = t.initial;
    std::map<std::string, int> spoke;
    int elapsed = 0;
    for (const auto& st : t.steps) {
        for (const Instance& in : applicable_instances(cur, prog())) {
            auto fam = family_of(std::string(in.rule->name.text()));
            if (!fam || *fam != "annoyed_by_unfair_participation") continue;
            auto it = in.binding.find("C");
            if (it == in.binding.end()) return "annoyance instance without listener";
            std::string listener(it->second.text());
            std::string other = sc.agents[0] == listener ? sc.agents[1] : sc.agents[0];
            if (!annoyance_condition(spoke[other], elapsed))
                return "annoyance enabled at spoke=" + std::to_string(spoke[other]) +
                       " elapsed=" + std::to_string(elapsed);
        }
        for (const Atom& a : st.consumed) cur.remove(a);
        for (const Atom& a : st.produced) cur.insert(a);
        auto fam = fam_of_step(st);
        if (fam && is_content_family(*fam)) {
            auto who = speaker_of(std::string(st.rule.text()), st.binding);
            if (!who) return "content step without a speaker";
            ++spoke[*who];
            ++elapsed;
        }
    }
    return std::nullopt;
}

bool c4_annoyance_oracle(std::string& note) {
    Scenario sc = default_scenario();
    const Sampled& s = sample10k();
    auto defects = cli_detail::parallel_map<std::string>(
        static_cast<int>(s.traces.size()), [&](int i) {
            auto d = annoyance_defect(s.traces[static_cast<size_t>(i)], sc);
            return d ? *d : std::string();
        });
    int fired = 0;
    for (size_t i = 0; i < s.reports.size(); ++i)
        if (contains(s.reports[i].violations, kViolationDomination)) ++fired;
    for (size_t i = 0; i < defects.size(); ++i)
        if (!defects[i].empty()) {
            note = "seed " + std::to_string(i) + ": " + defects[i];
            return false;
        }
    if (fired == 0) {
        note = "the monitor never fired in 10000 seeds";
        return false;
    }
    note = "monitor fired in " + std::to_string(fired) + " of 10000 seeds";
    return true;
}

bool c5_matcher_oracle(std::string& note) {
    Rng gen(20257);
    for (int trial = 0; trial < 500; ++trial) {
        auto mc = oracle::random_micro_case(gen);
        auto got = applicable_instances(mc.state, mc.program);
        auto want = oracle::oracle_instances(mc.state, mc.program);
        bool same = got.size() == want.size();
        for (size_t i = 0; same && i < got.size(); ++i)
            same = got[i].rule->name.text() == want[i].first && got[i].binding == want[i].second;
        if (!same) {
            note = "trial " + std::to_string(trial) + " diverges from the oracle";
            return false;
        }
    }
    return true;
}

bool c6_determinism(std::string& note) {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        Trace a = run(start_state(), prog(), seed);
        Trace b = run(start_state(), prog(), seed);
        if (trace_json_line(a) != trace_json_line(b)) {
            note = "trace output differs at seed " + std::to_string(seed);
            return false;
        }
        auto la = realize_trace(a, shipped_bank(), seed);
        auto lb = realize_trace(b, shipped_bank(), seed);
        if (la != lb) {
            note = "transcript differs at seed " + std::to_string(seed);
            return false;
        }
    }
    // the full pipeline, flags and all, twice over
    for (const char* seed : {"0", "41"}) {
        std::ostringstream o1, e1, o2, e2;
        std::vector<std::string> argv = {"generate", "--seed", seed, "--count", "2"};
        if (run_cli(argv, o1, e1) != 0 || run_cli(argv, o2, e2) != 0 || o1.str() != o2.str()) {
            note = std::string("CLI output differs at seed ") + seed;
            return false;
        }
    }
    return true;
}

bool c7_choice_fairness(std::string& note) {
    auto pr = parse_program("rule pick: token(X) -o picked(X).");
    if (!pr.ok()) {
        note = "probe program failed to parse";
        return false;
    }
    State st;
    st.insert(atom("token", {"a"}));
    st.insert(atom("token", {"b"}));
    int picked_a = 0;
    for (uint64_t seed = 0; seed < 10000; ++seed) {
        Rng rng(seed);
        auto res = step(st, *pr.program, rng);
        if (!res) {
            note = "probe state quiesced unexpectedly";
            return false;
        }
        if (res->step.binding.at("X").text() == "a") ++picked_a;
    }
    note = "picked a " + std::to_string(picked_a) + " of 10000";
    if (picked_a < 4800 || picked_a > 5200) return false;
    return true;
}

bool c8_coverage_gate(std::string& note) {
    auto uncovered = coverage_check(shipped_bank(), prog());
    if (!uncovered.empty()) {
        note = std::to_string(uncovered.size()) + " rules uncovered";
        return false;
    }
    const auto& rules = shipped_bank().rules;
    auto pinned = [&](const char* rule, const char* text, bool guideline) {
        auto it = rules.find(rule);
        if (it == rules.end()) return false;
        const auto& v = guideline ? it->second.guidelines : it->second.utterances;
        return !v.empty() && v[0] == text;
    };
    bool ok =
        pinned("greet_bob_alice", "Good morning, {addressee}!", false) &&
        pinned("greet_bob_alice",
               "Greeting someone acknowledges them and lets them know you are open to "
               "conversation.",
               true) &&
        pinned("small_talk_weekend", "Small talk makes people more comfortable around each other.",
               true) &&
        pinned("ask_question_soccer",
               "Avoid only asking questions and never giving information about yourself; this "
               "makes the conversation one-sided.",
               true) &&
        pinned("say_goodbye_bob_alice", "Take care.", false) &&
        pinned("terminate_conversation", "Uh-huh, well...I have to go now. Goodbye.", false) &&
        pinned("annoyed_by_unfair_participation",
               "Pay attention to how much you are talking; conversations work best when both "
               "people get a turn.",
               true);
    if (!ok) {
        note = "a pinned string is missing or out of slot";
        return false;
    }
    for (const Rule& r : prog().rules) {
        auto it = rules.find(std::string(r.name.text()));
        if (it == rules.end() || it->second.guidelines.empty()) {
            note = "no guideline for " + std::string(r.name.text());
            return false;
        }
    }
    return true;
}

bool c9_variety(std::string& note) {
    const Sampled& s = sample10k();
    std::set<std::string> signatures;
    int adherent = 0, violating = 0;
    for (size_t i = 0; i < 1000; ++i) {
        signatures.insert(move_signature(s.traces[i]));
        if (s.reports[i].adherent)
            ++adherent;
        else
            ++violating;
    }
    note = std::to_string(signatures.size()) + " distinct move sequences, " +
           std::to_string(adherent) + " adherent, " + std::to_string(violating) + " violating";
    return signatures.size() >= 50 && adherent > 10 && violating > 10;
}

}  // namespace

int main() {
    criterion(1, "golden walk-out replay pins the exit lines", 1000, c1_golden_walk_out);
    criterion(2, "exemplar balanced and one-sided paths replay and recur in sampling", 30000,
              c2_exemplar_paths);
    criterion(3, "flow conformance holds across 10000 seeds", 0, c3_flow_conformance);
    criterion(4, "annoyance firings match recomputed participation counters", 0,
              c4_annoyance_oracle);
    criterion(5, "matcher equals the brute-force oracle on 500 micro-programs", 60000,
              c5_matcher_oracle);
    criterion(6, "repeat runs are byte-identical across 100 seeds", 0, c6_determinism);
    criterion(7, "two-way choice lands within two percent of even", 0, c7_choice_fairness);
    criterion(8, "shipped bank covers every rule with pinned guidance", 0, c8_coverage_gate);
    criterion(9, "a thousand seeds vary widely and mix outcomes", 0, c9_variety);
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
