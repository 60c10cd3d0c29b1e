#pragma once
// Command-line front end. One option surface, three commands:
//
//   phatic [generate] [flags]   sample fresh conversations
//   phatic stats [flags]        aggregate a batch into summary statistics
//   phatic replay FILE [flags]  re-validate recorded traces, then re-render
//
// Content goes to stdout (or --out); a single-line run header goes to stderr
// so stdout stays machine-readable. Exit codes: 0 success, 1 usage or content
// error, 2 file error, 3 replay divergence.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "conversation.hpp"
#include "engine.hpp"
#include "parser.hpp"
#include "surface.hpp"
#include "trace_json.hpp"

#include "../../vendor/CLI11.hpp"
#include "../../vendor/json.hpp"

namespace phatic {

// what() is the user-facing message; code is the process exit status.
struct CliError : std::runtime_error {
    int code;
    CliError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
};

namespace cli_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(2, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw CliError(2, "cannot read '" + path + "'");
    return ss.str();
}

// The symbol interner is not locked. Workers must only look up symbols that
// already exist, so every numeral a guard could mint is interned up front;
// all other symbols were interned while parsing rules and building the
// initial state on the calling thread.
inline void warm_symbols() {
    for (int v = 0; v <= kCounterMax; ++v) num_symbol(v);
}

template <typename T, typename F>
std::vector<T> parallel_map(int count, F&& f) {
    std::vector<T> out(static_cast<size_t>(count));
    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = std::min<unsigned>(hw ? hw : 1, static_cast<unsigned>(count));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) out[static_cast<size_t>(i)] = f(i);
        return out;
    }
    warm_symbols();
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i; (i = next.fetch_add(1)) < count;) {
                try {
                    out[static_cast<size_t>(i)] = f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

struct RunConfig {
    std::string command = "generate";
    std::string input;  // replay's positional trace file
    uint64_t seed = 0;
    int count = 1;
    std::string format;  // empty means the command's default
    std::string scenario_path;
    std::string rules_path;
    std::string bank_path;
    std::string out_path;
    int step_cap = kDefaultStepCap;
    int turn_budget = 0;  // 0 keeps the scenario's own budget
};

// Everything resolved from flags, files, and defaults that a command needs.
struct World {
    Scenario sc;
    Program prog;
    Bank bank;
    State initial;
    std::string scenario_label = "default";
    std::string rules_label = "generated";
    std::string bank_label = "generated";
};

inline World load_world(const RunConfig& opt) {
    World w;
    w.sc = default_scenario();
    if (!opt.scenario_path.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_file(opt.scenario_path));
        } catch (const nlohmann::json::exception& ex) {
            throw CliError(1, opt.scenario_path + " is not valid JSON: " + ex.what());
        }
        try {
            w.sc = scenario_from_json(j);
        } catch (const std::invalid_argument& ex) {
            throw CliError(1, opt.scenario_path + ": " + ex.what());
        }
        w.scenario_label = opt.scenario_path;
    }
    if (opt.turn_budget != 0) {
        w.sc.turn_budget = opt.turn_budget;
        auto errs = validate_scenario(w.sc);
        if (!errs.empty())
            throw CliError(1, "turn budget " + std::to_string(opt.turn_budget) +
                                  " rejected: " + errs.front());
    }
    std::string rules_path = opt.rules_path;
    if (rules_path.empty())
        if (const char* env = std::getenv("PHATIC_RULES")) rules_path = env;
    if (!rules_path.empty()) {
        ParseResult pr = parse_program(read_file(rules_path));
        if (!pr.ok()) {
            std::string msg;
            for (const auto& d : pr.diagnostics) {
                if (!msg.empty()) msg += '\n';
                msg += d.format(rules_path);
            }
            throw CliError(1, msg);
        }
        w.prog = std::move(*pr.program);
        w.rules_label = rules_path;
    } else {
        try {
            w.prog = build_ruleset(w.sc);
        } catch (const std::invalid_argument& ex) {
            throw CliError(1, ex.what());
        }
    }
    try {
        if (!opt.bank_path.empty()) {
            w.bank = bank_from_text(read_file(opt.bank_path));
            w.bank_label = opt.bank_path;
        } else {
            w.bank = bank_from_text(bank_text_for(w.prog));
        }
    } catch (const BankError& ex) {
        throw CliError(1, std::string("bank: ") + ex.what());
    }
    auto uncovered = coverage_check(w.bank, w.prog);
    if (!uncovered.empty()) {
        std::string msg = "bank does not cover the ruleset:";
        for (const auto& name : uncovered) msg += "\n  " + name;
        throw CliError(1, msg);
    }
    w.initial = initial_state(w.sc);
    return w;
}

inline std::string format_transcript_block(const std::vector<TranscriptLine>& lines) {
    std::string s;
    for (const auto& ln : lines) {
        s += transcript_line_text(ln);
        s += '\n';
        if (!ln.guideline.empty()) {
            s += "    [";
            s += ln.guideline;
            s += "]\n";
        }
    }
    return s;
}

inline std::string format_table_rows(const std::vector<TranscriptLine>& lines) {
    std::string s;
    for (const auto& ln : lines) {
        s += transcript_line_text(ln);
        s += " | ";
        s += ln.guideline;
        s += '\n';
    }
    return s;
}

inline void check_render_format(const std::string& fmt) {
    if (fmt != "transcript" && fmt != "table" && fmt != "trace-json")
        throw CliError(1, "unknown format '" + fmt +
                              "' (expected transcript, table, trace-json, or stats)");
}

inline std::string cmd_generate(const RunConfig& opt, const World& w) {
    std::string fmt = opt.format.empty() ? "transcript" : opt.format;
    check_render_format(fmt);
    bool as_json = fmt == "trace-json";
    bool as_table = fmt == "table";
    auto blocks = parallel_map<std::string>(opt.count, [&](int i) {
        uint64_t seed = opt.seed + static_cast<uint64_t>(i);
        Trace t = run(w.initial, w.prog, seed, opt.step_cap, w.sc.id);
        if (as_json) return trace_json_line(t) + "\n";
        auto lines = realize_trace(t, w.bank, seed);
        return as_table ? format_table_rows(lines) : format_transcript_block(lines);
    });
    std::string content;
    if (as_table) content += "Dialogue | Guideline\n";
    for (int i = 0; i < opt.count; ++i) {
        if (i > 0 && !as_json) content += '\n';
        content += blocks[static_cast<size_t>(i)];
    }
    return content;
}

inline std::string fmt4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

inline double rate_or_zero(const BatchStats& st, const char* key) {
    auto it = st.violation_rates.find(key);
    return it == st.violation_rates.end() ? 0.0 : it->second;
}

inline std::string format_stats_text(const BatchStats& st) {
    std::string s;
    s += "conversations: " + std::to_string(st.count) + "\n";
    s += "adherent: " + fmt4(st.adherent_fraction) + "\n";
    s += "violations:\n";
    for (const char* key :
         {kViolationDomination, kViolationVocalizedDisagreement, kViolationEarlyTermination})
        s += "  " + std::string(key) + ": " + fmt4(rate_or_zero(st, key)) + "\n";
    s += "mean utterances: " + fmt4(st.mean_utterances) + "\n";
    s += "mean content turns: " + fmt4(st.mean_content_turns) + "\n";
    s += "max utterances: " + std::to_string(st.max_utterances) + "\n";
    s += "feelings:\n";
    for (const auto& [agent, dist] : st.feeling_distribution) {
        s += "  " + agent + ":";
        for (const auto& [feeling, frac] : dist) s += " " + feeling + "=" + fmt4(frac);
        s += "\n";
    }
    s += "rule frequency:\n";
    for (const auto& [rule, freq] : st.rule_frequency) s += "  " + rule + ": " + fmt4(freq) + "\n";
    return s;
}

inline std::string format_stats_json(const BatchStats& st) {
    nlohmann::json j;
    j["format"] = "stats-v1";
    j["count"] = st.count;
    j["adherent_fraction"] = st.adherent_fraction;
    j["violation_rates"] = nlohmann::json::object();
    for (const char* key :
         {kViolationDomination, kViolationVocalizedDisagreement, kViolationEarlyTermination})
        j["violation_rates"][key] = rate_or_zero(st, key);
    j["mean_utterances"] = st.mean_utterances;
    j["mean_content_turns"] = st.mean_content_turns;
    j["max_utterances"] = st.max_utterances;
    j["rule_frequency"] = st.rule_frequency;
    j["feeling_distribution"] = st.feeling_distribution;
    return j.dump() + "\n";
}

inline std::string cmd_stats(const RunConfig& opt, const World& w) {
    std::string fmt = opt.format;
    if (fmt.empty() || fmt == "stats") fmt = "text";
    if (fmt != "text" && fmt != "trace-json")
        throw CliError(1, "unknown stats format '" + opt.format + "' (expected text or trace-json)");
    if (opt.count < 100)
        throw CliError(1, "stats needs --count of at least 100 for stable rates (got " +
                              std::to_string(opt.count) + ")");
    auto traces = parallel_map<Trace>(opt.count, [&](int i) {
        return run(w.initial, w.prog, opt.seed + static_cast<uint64_t>(i), opt.step_cap, w.sc.id);
    });
    BatchStats st = batch_stats(traces);
    return fmt == "trace-json" ? format_stats_json(st) : format_stats_text(st);
}

inline std::string cmd_replay(const RunConfig& opt, const World& w) {
    if (opt.input.empty()) throw CliError(1, "replay needs a trace file argument");
    std::string fmt = opt.format.empty() ? "transcript" : opt.format;
    check_render_format(fmt);
    bool as_json = fmt == "trace-json";
    bool as_table = fmt == "table";
    std::istringstream in(read_file(opt.input));
    std::vector<TraceRecord> recs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            recs.push_back(record_from_line(line));
        } catch (const TraceFormatError& ex) {
            throw CliError(1, opt.input + ":" + std::to_string(lineno) + ": " + ex.what());
        }
    }
    std::string content;
    if (as_table) content += "Dialogue | Guideline\n";
    bool first = true;
    for (const auto& rec : recs) {
        if (rec.scenario != w.sc.id)
            throw CliError(1, "record for scenario '" + rec.scenario +
                                  "' does not match loaded scenario '" + w.sc.id +
                                  "'; pass --scenario");
        Trace t = revalidate(rec, w.initial, w.prog);
        std::string block;
        if (as_json) {
            block = trace_json_line(t) + "\n";
        } else {
            auto lines = realize_trace(t, w.bank, rec.seed);
            block = as_table ? format_table_rows(lines) : format_transcript_block(lines);
        }
        if (!first && !as_json) content += '\n';
        first = false;
        content += block;
    }
    return content;
}

inline std::string header_line(const RunConfig& opt, const World& w) {
    std::string h = "# phatic " + opt.command;
    if (opt.command == "replay") {
        h += " input=" + opt.input;
    } else {
        h += " seed=" + std::to_string(opt.seed);
        h += " count=" + std::to_string(opt.count);
    }
    std::string fmt = opt.format;
    if (fmt.empty() || (opt.command == "stats" && fmt == "stats"))
        fmt = opt.command == "stats" ? "text" : "transcript";
    h += " format=" + fmt;
    h += " scenario=" + w.scenario_label;
    h += " rules=" + w.rules_label;
    h += " bank=" + w.bank_label;
    h += " step-cap=" + std::to_string(opt.step_cap);
    h += " turn-budget=" + std::to_string(w.sc.turn_budget);
    return h;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using cli_detail::RunConfig;
    RunConfig opt;
    CLI::App app{"Rule-driven two-party conversation sampler"};
    app.name("phatic");
    app.add_option("command", opt.command, "generate | stats | replay")
        ->check(CLI::IsMember({"generate", "stats", "replay"}));
    app.add_option("input", opt.input, "trace file (replay only)");
    auto* seed_opt =
        app.add_option("--seed", opt.seed, "base seed; conversation i runs with seed+i");
    app.add_option("--count", opt.count, "number of conversations")->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format,
                   "generate/replay: transcript|table|trace-json; stats: text|trace-json");
    app.add_option("--scenario", opt.scenario_path, "scenario JSON file");
    app.add_option("--rules", opt.rules_path,
                   "rule program file; the PHATIC_RULES env var is the fallback");
    app.add_option("--bank", opt.bank_path, "utterance/guideline bank JSON file");
    app.add_option("--step-cap", opt.step_cap, "engine step limit per conversation")
        ->check(CLI::PositiveNumber);
    app.add_option("--turn-budget", opt.turn_budget, "override the scenario's turn budget");
    app.add_option("--out", opt.out_path, "write content to this file instead of stdout");

    // CLI11 consumes a vector back to front.
    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "phatic: " << e.what() << "\n";
        return 1;
    }

    try {
        if (!seed_opt->count()) {
            std::random_device rd;
            opt.seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
        }
        if (opt.command == "generate" && opt.format == "stats") opt.command = "stats";
        if (opt.command != "replay" && !opt.input.empty())
            throw CliError(1, "unexpected argument '" + opt.input + "'");
        cli_detail::World w = cli_detail::load_world(opt);
        err << cli_detail::header_line(opt, w) << "\n";
        std::string content;
        if (opt.command == "generate")
            content = cli_detail::cmd_generate(opt, w);
        else if (opt.command == "stats")
            content = cli_detail::cmd_stats(opt, w);
        else
            content = cli_detail::cmd_replay(opt, w);
        if (!opt.out_path.empty()) {
            std::ofstream f(opt.out_path, std::ios::binary);
            if (!f) throw CliError(2, "cannot open '" + opt.out_path + "' for writing");
            f << content;
            f.flush();
            if (!f) throw CliError(2, "cannot write '" + opt.out_path + "'");
        } else {
            out << content;
        }
        return 0;
    } catch (const ReplayDivergence& e) {
        err << "phatic: " << e.what() << "\n";
        return 3;
    } catch (const CliError& e) {
        err << "phatic: " << e.what() << "\n";
        return e.code;
    } catch (const std::exception& e) {
        err << "phatic: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace phatic
