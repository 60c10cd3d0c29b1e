// trace-v1 records: one-line JSON export of engine traces, import with
// validation, and replay revalidation against a ruleset and initial state.
//
// A record carries scenario id, seed, termination, and the step list (rule,
// binding, consumed, produced). States are not exported; revalidation
// rebuilds them by re-running the steps, so any edit to a recorded step
// surfaces as a divergence at that step's index.
#pragma once

#include <string>
#include <vector>

#include "engine.hpp"

#include "../../vendor/json.hpp"

namespace phatic {

inline const char* kTraceFormatName = "trace-v1";

struct TraceFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TraceRecord {
    struct Step {
        int index = 0;
        std::string rule;
        Binding binding;
        std::vector<Atom> consumed;
        std::vector<Atom> produced;
    };
    std::string scenario = "default";
    uint64_t seed = 0;
    std::string termination = "quiescence";  // quiescence | step_cap
    std::vector<Step> steps;
};

inline std::string termination_name(Termination t) {
    return t == Termination::Quiescence ? "quiescence" : "step_cap";
}

inline TraceRecord record_of(const Trace& t) {
    TraceRecord rec;
    rec.scenario = t.scenario;
    rec.seed = t.seed;
    rec.termination = termination_name(t.termination);
    for (const TraceStep& st : t.steps) {
        TraceRecord::Step s;
        s.index = st.index;
        s.rule = st.rule.text();
        s.binding = st.binding;
        s.consumed = st.consumed;
        s.produced = st.produced;
        rec.steps.push_back(std::move(s));
    }
    return rec;
}

inline nlohmann::json record_to_json(const TraceRecord& rec) {
    nlohmann::json j;
    j["format"] = kTraceFormatName;
    j["scenario"] = rec.scenario;
    j["seed"] = rec.seed;
    j["termination"] = rec.termination;
    j["steps"] = nlohmann::json::array();
    for (const auto& s : rec.steps) {
        nlohmann::json js;
        js["index"] = s.index;
        js["rule"] = s.rule;
        js["binding"] = nlohmann::json::object();
        for (const auto& [var, sym] : s.binding) js["binding"][var] = sym.text();
        js["consumed"] = nlohmann::json::array();
        for (const Atom& a : s.consumed) js["consumed"].push_back(a.str());
        js["produced"] = nlohmann::json::array();
        for (const Atom& a : s.produced) js["produced"].push_back(a.str());
        j["steps"].push_back(std::move(js));
    }
    return j;
}

inline std::string trace_json_line(const Trace& t) { return record_to_json(record_of(t)).dump(); }

namespace detail {

inline std::vector<Atom> atoms_from_json(const nlohmann::json& arr, const char* what) {
    std::vector<Atom> out;
    for (const auto& s : arr) {
        auto a = atom_from_str(s.get<std::string>());
        if (!a)
            throw TraceFormatError(std::string("bad atom text in ") + what + ": " +
                                   s.get<std::string>());
        out.push_back(*a);
    }
    return out;
}

}  // namespace detail

inline TraceRecord record_from_json(const nlohmann::json& j) {
    TraceRecord rec;
    try {
        if (j.value("format", "") != kTraceFormatName)
            throw TraceFormatError("record format is not trace-v1");
        rec.scenario = j.value("scenario", "default");
        rec.seed = j.value("seed", uint64_t{0});
        // an absent termination field means "unspecified"; revalidation then
        // accepts whichever way the replay ends
        rec.termination = j.value("termination", "");
        if (!rec.termination.empty() && rec.termination != "quiescence" &&
            rec.termination != "step_cap")
            throw TraceFormatError("unknown termination '" + rec.termination + "'");
        int pos = 0;
        const auto steps = j.value("steps", nlohmann::json::array());
        for (const auto& js : steps) {
            TraceRecord::Step s;
            s.index = js.value("index", pos);
            s.rule = js.at("rule").get<std::string>();
            // .items() on a temporary would dangle; bind the object first
            const auto binding = js.value("binding", nlohmann::json::object());
            for (const auto& [var, sym] : binding.items())
                s.binding.emplace(var, Symbol(sym.get<std::string>()));
            s.consumed =
                detail::atoms_from_json(js.value("consumed", nlohmann::json::array()), "consumed");
            s.produced =
                detail::atoms_from_json(js.value("produced", nlohmann::json::array()), "produced");
            rec.steps.push_back(std::move(s));
            ++pos;
        }
    } catch (const nlohmann::json::exception& ex) {
        throw TraceFormatError(std::string("bad trace record: ") + ex.what());
    }
    return rec;
}

inline TraceRecord record_from_line(std::string_view line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& ex) {
        throw TraceFormatError(std::string("trace record is not valid JSON: ") + ex.what());
    }
    return record_from_json(j);
}

struct ReplayDivergence : std::runtime_error {
    int index;
    ReplayDivergence(int i, const std::string& what)
        : std::runtime_error("replay divergence at step " + std::to_string(i) + ": " + what),
          index(i) {}
};

// Re-executes the recorded steps from the given initial state and compares
// every recomputed consumed/produced list against the record. The first
// difference, or an inapplicable step, raises ReplayDivergence.
inline Trace revalidate(const TraceRecord& rec, const State& initial, const Program& p) {
    std::vector<ReplayStep> script;
    for (const auto& s : rec.steps) script.push_back({s.rule, s.binding});
    Trace t;
    try {
        t = replay(initial, p, script, rec.scenario, rec.seed);
    } catch (const InapplicableStep& e) {
        throw ReplayDivergence(e.index, e.what());
    }
    for (size_t i = 0; i < rec.steps.size(); ++i) {
        if (t.steps[i].consumed != rec.steps[i].consumed)
            throw ReplayDivergence(static_cast<int>(i), "consumed atoms differ");
        if (t.steps[i].produced != rec.steps[i].produced)
            throw ReplayDivergence(static_cast<int>(i), "produced atoms differ");
    }
    if (!rec.termination.empty() && termination_name(t.termination) != rec.termination)
        throw ReplayDivergence(static_cast<int>(rec.steps.size()), "termination differs");
    return t;
}

}  // namespace phatic
