#include "cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "symeuclid/continuants.hpp"
#include "symeuclid/euclid.hpp"
#include "symeuclid/identities.hpp"
#include "symeuclid/two_squares.hpp"
#include "verify.hpp"

namespace symeuclid::cli {

using json = nlohmann::ordered_json;

int exit_code_for(ErrorCode code) noexcept {
    return code == ErrorCode::internal ? exit_internal : exit_domain;
}

json OutputRecord::to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["status"] = ok ? "ok" : "error";
    if (ok) {
        j["payload"] = payload;
    } else {
        j["error"] = {{"code", error_code}, {"message", message}};
    }
    return j;
}

OutputRecord OutputRecord::from_json(const json& j) {
    OutputRecord r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs").get<std::vector<Int>>();
    r.ok = j.at("status").get<std::string>() == "ok";
    if (r.ok) {
        r.payload = j.at("payload");
    } else {
        r.error_code = j.at("error").at("code").get<std::string>();
        r.message = j.at("error").at("message").get<std::string>();
    }
    return r;
}

Config config_from_environment() {
    Config config;
    if (const char* raw = std::getenv("SYMEUCLID_MAX_SWEEP")) config.sweep_bound = parse_decimal(raw);
    return config;
}

namespace {

/// Thrown for malformed command-line values; maps to the usage exit code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_argument(const std::string& text, const char* what) {
    try {
        return parse_decimal(text);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::overflow) throw;
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

json fraction_json(const ReducedFraction& f) { return {{"numerator", f.numerator}, {"denominator", f.denominator}}; }

template <class Range>
std::string joined(const Range& values, const char* sep = " ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        os << (first ? "" : sep) << v;
        first = false;
    }
    return os.str();
}

struct Outcome {
    OutputRecord record;
    std::string text;  // rendered body for --format text
};

Outcome cmd_trace(Int n, Int a) {
    Outcome out;
    out.record.command = "trace";
    out.record.inputs = {n, a};
    EuclidTrace trace;
    try {
        trace = symmetric_trace(n, a);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::not_symmetric) throw;
        trace = euclid_trace(n, a);
    }
    json& p = out.record.payload;
    p["quotients"] = trace.quotients;
    p["remainders"] = trace.remainders;
    p["convention_applied"] = trace.convention_applied;
    p["symmetric"] = trace.symmetric;
    p["s"] = trace.half_length ? json(*trace.half_length) : json(nullptr);

    std::ostringstream os;
    os << "quotients:  " << joined(trace.quotients) << '\n'
       << "remainders: " << joined(trace.remainders) << '\n'
       << "convention_applied: " << (trace.convention_applied ? "true" : "false") << '\n'
       << "symmetric: " << (trace.symmetric ? "true" : "false") << '\n'
       << "s: " << (trace.half_length ? std::to_string(*trace.half_length) : "-") << '\n';
    out.text = os.str();
    return out;
}

Outcome cmd_two_squares(Int n, std::optional<Int> a, Int sweep_bound) {
    Outcome out;
    out.record.command = "two-squares";
    out.record.inputs = {n};
    std::vector<TwoSquares> reps;
    if (a) {
        out.record.inputs.push_back(*a);
        reps.push_back(brillhart(n, *a));
    } else {
        reps = all_primitive_representations(n, sweep_bound);
    }
    json list = json::array();
    std::ostringstream os;
    for (std::size_t k = 0; k < reps.size(); ++k) {
        list.push_back({{"x", reps[k].x}, {"y", reps[k].y}});
        if (a)
            os << reps[k].x << ' ' << reps[k].y;
        else
            os << (k ? " " : "") << '(' << reps[k].x << ',' << reps[k].y << ')';
    }
    if (!a && reps.empty()) os << "(none)";
    os << '\n';
    out.record.payload["representations"] = std::move(list);
    out.text = os.str();
    return out;
}

Outcome cmd_identities(Int n, Int a, bool nontrivial) {
    Outcome out;
    out.record.command = "identities";
    out.record.inputs = {n, a};
    const EuclidTrace trace = symmetric_trace(n, a);
    json list = json::array();
    std::ostringstream os;
    for (const FormIdentity& id : enumerate_identities(trace)) {
        if (nontrivial && id.degenerate) continue;
        list.push_back({{"family", to_string(id.family)},
                        {"i", id.i},
                        {"j", id.j},
                        {"factor_indices", id.factor_indices},
                        {"factor_values", id.factor_values},
                        {"multiplier", id.multiplier},
                        {"sub_cf", std::vector<Int>(id.sub_cf.terms().begin(), id.sub_cf.terms().end())},
                        {"degenerate", id.degenerate}});
        os << id.expression() << '\n';
    }
    out.record.payload["s"] = *trace.half_length;
    out.record.payload["identities"] = std::move(list);
    out.text = os.str();
    return out;
}

Outcome cmd_nest(Int n, Int a) {
    Outcome out;
    out.record.command = "nest";
    out.record.inputs = {n, a};
    const NestChain chain = nest_chain(n, a);
    json entries = json::array();
    std::vector<std::string> fractions;
    for (const ReducedFraction& f : chain.entries) {
        entries.push_back(fraction_json(f));
        fractions.push_back(to_string(f));
    }
    out.record.payload["entries"] = std::move(entries);
    out.record.payload["multipliers"] = chain.multipliers;
    out.text = "chain: " + joined(fractions) + "\nmultipliers: " + joined(chain.multipliers) + '\n';
    return out;
}

Outcome cmd_verify(const verify::Options& options, Int sweep_bound) {
    if (options.max_n > sweep_bound)
        fail(ErrorCode::resource_guard, "--max-n " + std::to_string(options.max_n) + " exceeds sweep bound " +
                                            std::to_string(sweep_bound));
    if (options.max_n < 2) throw UsageError("--max-n must be at least 2");
    Outcome out;
    out.record.command = "verify";
    out.record.inputs = {options.max_n, static_cast<Int>(options.seed), options.cases};
    const verify::Report report = verify::run_all(options);

    json list = json::array();
    std::ostringstream os;
    for (const auto& p : report.properties) {
        json entry = {{"name", p.name}, {"checked", p.checked}, {"ok", !p.reproducer.has_value()}};
        if (p.reproducer) entry["reproducer"] = *p.reproducer;
        list.push_back(std::move(entry));
        os << p.name << ": " << p.checked << " checked, " << (p.reproducer ? "FAILED at " + *p.reproducer : "ok")
           << '\n';
    }
    out.record.payload["properties"] = std::move(list);
    out.record.payload["all_ok"] = report.ok();
    if (!report.ok()) {
        out.record.ok = false;
        out.record.error_code = std::string(to_string(ErrorCode::internal));
        for (const auto& p : report.properties)
            if (p.reproducer) {
                out.record.message = p.name + " violated at " + *p.reproducer;
                break;
            }
        // Keep the per-property counts visible in machine output as well.
        out.record.payload["failed"] = true;
    }
    out.text = os.str();
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Config& config) {
    CLI::App app{"Symmetric-quotient Euclidean algorithm toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string n_text, a_text;
    auto* trace = app.add_subcommand("trace", "Euclidean trace of (n, a) with symmetry classification");
    trace->add_option("n", n_text)->required();
    trace->add_option("a", a_text)->required();

    std::string two_n_text, two_a_text;
    bool all = false;
    auto* two = app.add_subcommand("two-squares", "Primitive representations n = x^2 + y^2");
    two->add_option("n", two_n_text)->required();
    auto* a_opt = two->add_option("--a", two_a_text, "A square root of -1 mod n");
    two->add_flag("--all", all, "Every primitive representation (exhaustive scan)")->excludes(a_opt);

    bool nontrivial = false;
    auto* ids = app.add_subcommand("identities", "Quadratic-form identities in the remainders");
    ids->add_option("n", n_text)->required();
    ids->add_option("a", a_text)->required();
    ids->add_flag("--nontrivial", nontrivial, "Drop entries with a zero factor or zero multiplier");

    auto* nest = app.add_subcommand("nest", "Chain of nested palindromic continued fractions");
    nest->add_option("n", n_text)->required();
    nest->add_option("a", a_text)->required();

    std::string max_n_text = "10000", seed_text = "0", cases_text = "1000";
    auto* ver = app.add_subcommand("verify", "Exhaustive and randomized property checks");
    ver->add_option("--max-n", max_n_text, "Sweep every n in [2, max-n]");
    ver->add_option("--seed", seed_text, "Fuzzing seed");
    ver->add_option("--cases", cases_text, "Random instances per fuzz property");

    for (auto* sub : {trace, two, ids, nest, ver}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return exit_usage;
    }

    OutputRecord failure;
    failure.command = app.get_subcommands().front()->get_name();
    try {
        Outcome outcome;
        if (trace->parsed()) {
            outcome = cmd_trace(parse_argument(n_text, "n"), parse_argument(a_text, "a"));
        } else if (two->parsed()) {
            std::optional<Int> a;
            if (!two_a_text.empty()) a = parse_argument(two_a_text, "--a");
            outcome = cmd_two_squares(parse_argument(two_n_text, "n"), a, config.sweep_bound);
        } else if (ids->parsed()) {
            outcome = cmd_identities(parse_argument(n_text, "n"), parse_argument(a_text, "a"), nontrivial);
        } else if (nest->parsed()) {
            outcome = cmd_nest(parse_argument(n_text, "n"), parse_argument(a_text, "a"));
        } else {
            verify::Options options;
            options.max_n = parse_argument(max_n_text, "--max-n");
            options.seed = static_cast<std::uint64_t>(parse_argument(seed_text, "--seed"));
            options.cases = parse_argument(cases_text, "--cases");
            outcome = cmd_verify(options, config.sweep_bound);
        }

        if (format == "json")
            out << outcome.record.to_json().dump() << '\n';
        else
            out << outcome.text;
        if (!outcome.record.ok) {
            err << "error: " << outcome.record.message << '\n';
            return exit_internal;
        }
        return exit_ok;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        failure.ok = false;
        failure.error_code = std::string(to_string(e.code()));
        failure.message = e.what();
        if (format == "json") out << failure.to_json().dump() << '\n';
        err << "error [" << failure.error_code << "]: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

}  // namespace symeuclid::cli
