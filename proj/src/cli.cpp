#include "bridgecalc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bridgecalc/complexity.hpp"
#include "bridgecalc/dual_graph.hpp"
#include "bridgecalc/errors.hpp"
#include "bridgecalc/generator.hpp"
#include "bridgecalc/json_io.hpp"
#include "bridgecalc/sums.hpp"
#include "bridgecalc/validate.hpp"

namespace bridgecalc {

namespace {

struct Options {
    std::string input, second, output, outputB;
    std::string format = "text";
    std::vector<int> ms{1, 2, 3};
    bool dot = false;
    std::string script;
    bool greedy = false;
    std::string kind = "connected";
    int u = 1;
    bool flipB = false;
    bool loopA = false, loopB = false;
    std::string vpcA, vpcB, pointA, pointB;
    std::string sphere = "S";
    std::string spec;
    std::string boundKind;
    std::string b = "0", ba = "0", bb = "0", bg = "0", netwH = "0", netwL = "0";
    int n = 1, q = 1, omega = 1, g = 0, g1 = 0;
    bool lensed = false, exceptional = false, coreA = false, coreB = false;
    std::uint64_t seed = 0;
    int maxSize = 8;
    int samples = 200;
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw SchemaError("cannot write " + path);
    f << text;
}

// To `path` when given, otherwise to `out`.
void emit_state(const PairState& s, const std::string& path, std::ostream& out) {
    std::string text = state_to_json(s).dump(2) + "\n";
    if (path.empty())
        out << text;
    else
        write_text(path, text);
}

json report_json(const ValidationReport& r) {
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"code", x.code}, {"message", x.message}});
    return {{"ok", r.ok()}, {"violations", v}};
}

void print_report(const ValidationReport& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << report_json(r).dump(2) << "\n";
        return;
    }
    if (r.ok()) out << "ok\n";
    for (const auto& v : r.violations) out << v.code << ": " << v.message << "\n";
}

std::string dot_text(const PairState& s) {
    std::ostringstream os;
    os << "digraph dual {\n";
    for (const auto& v : s.vpcs) os << "  \"" << v.id << "\";\n";
    for (const auto& e : dual_edges(s))
        os << "  \"" << e.tail << "\" -> \"" << e.head << "\" [label=\"" << e.surface << "\"];\n";
    os << "}\n";
    return os.str();
}

int cmd_validate(const Options& o, std::ostream& out) {
    auto report = validate_state(read_state_file(o.input));
    print_report(report, o.format, out);
    return report.ok() ? 0 : 1;
}

int cmd_invariants(const Options& o, std::ostream& out) {
    PairState s = read_state_file(o.input);
    auto report = validate_state(s);
    if (!report.ok()) {
        print_report(report, o.format, out);
        return 1;
    }
    if (o.dot) {
        out << dot_text(s);
        return 0;
    }
    InvariantBundle b = net_invariants(s, o.ms);
    Complexity c = complexity(s);
    if (o.format == "json") {
        json j = bundle_to_json(b);
        j["complexity"] = c.entries;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "netchi " << b.netchi << "\n"
        << "netg " << b.netg << "\n"
        << "netw " << b.netw << "\n"
        << "netx " << b.netx << "\n";
    for (const auto& [m, x] : b.netx_m) out << "netx_" << m << " " << x << "\n";
    out << "complexity " << complexity_text(c) << "\n";
    return 0;
}

int report_run(const DriverResult& r, const Options& o, std::ostream& out) {
    if (o.format == "json") {
        json trace = json::array();
        for (const auto& t : r.trace) trace.push_back(trace_record_to_json(t));
        json j = {{"completed", r.completed}, {"locallyThin", r.locallyThinRelScript}, {"trace", trace}};
        if (!r.error.empty()) j["error"] = r.error;
        if (o.output.empty()) j["state"] = state_to_json(r.state);
        out << j.dump(2) << "\n";
    } else {
        for (const auto& t : r.trace) out << t.step << " " << t.op << " " << complexity_text(t.complexity) << "\n";
        if (!r.error.empty()) out << "stopped: " << r.error << "\n";
        if (r.completed) out << (r.locallyThinRelScript ? "locally thin\n" : "completed\n");
    }
    if (!o.output.empty()) write_text(o.output, state_to_json(r.state).dump(2) + "\n");
    return r.completed ? 0 : 1;
}

MoveScript read_script(const std::string& path) {
    if (path.empty()) return {};
    return script_from_json(read_json_file(path));
}

int cmd_apply(const Options& o, std::ostream& out) {
    PairState s = read_state_file(o.input);
    require_valid(s);
    return report_run(apply_script(s, read_script(o.script)), o, out);
}

int cmd_thin(const Options& o, std::ostream& out) {
    PairState s = read_state_file(o.input);
    require_valid(s);
    return report_run(thin_driver(s, read_script(o.script), o.greedy), o, out);
}

int cmd_compose(const Options& o, std::ostream& out) {
    PairState a = read_state_file(o.input);
    PairState b = read_state_file(o.second);
    require_valid(a);
    require_valid(b);
    SumSpec spec;
    spec.kind = sum_kind_from_name(o.kind);
    spec.u = o.u;
    spec.flipB = o.flipB;
    spec.loopA = o.loopA;
    spec.loopB = o.loopB;
    spec.vpcA = o.vpcA;
    spec.vpcB = o.vpcB;
    spec.pointA = o.pointA;
    spec.pointB = o.pointB;
    spec.sphereId = o.sphere;
    emit_state(compose(a, b, spec), o.output, out);
    return 0;
}

int cmd_split(const Options& o, std::ostream& out) {
    PairState s = read_state_file(o.input);
    require_valid(s);
    auto [a, b] = decompose(s, o.sphere);
    if (o.output.empty() || o.outputB.empty()) {
        out << json{{"a", state_to_json(a)}, {"b", state_to_json(b)}}.dump(2) << "\n";
        return 0;
    }
    write_text(o.output, state_to_json(a).dump(2) + "\n");
    write_text(o.outputB, state_to_json(b).dump(2) + "\n");
    return 0;
}

int cmd_crush(const Options& o, std::ostream& out) {
    PairState s = read_state_file(o.input);
    require_valid(s);
    CrushResult r = crush(s, crush_spec_from_json(read_json_file(o.spec)));
    json j = {{"v1", r.v1},
              {"v2", r.v2},
              {"netchiBefore", half_to_json(r.netchiBefore)},
              {"netchiAfter", half_to_json(r.netchiAfter)},
              {"netxBefore", half_to_json(r.netxBefore)},
              {"netxAfter", half_to_json(r.netxAfter)},
              {"accountingLhs", half_to_json(r.accountingLhs)},
              {"accountingRhs", half_to_json(r.accountingRhs)},
              {"accountingHolds", r.accountingHolds},
              {"accountingEqual", r.accountingEqual}};
    if (o.format == "json") {
        if (o.output.empty()) j["state"] = state_to_json(r.state);
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : j.items()) out << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    if (!o.output.empty()) write_text(o.output, state_to_json(r.state).dump(2) + "\n");
    return r.accountingHolds ? 0 : 1;
}

int cmd_bound(const Options& o, std::ostream& out) {
    if (o.boundKind == "handle") {
        bool holds = handle_crush_bound(Half::parse(o.netwH), Half::parse(o.netwL), o.omega, o.g1);
        out << (holds ? "true" : "false") << "\n";
        return holds ? 0 : 1;
    }
    Half result;
    if (o.boundKind == "whitehead") {
        result = whitehead_bound(o.n, Half::parse(o.b));
    } else if (o.boundKind == "cable") {
        result = cable_bound(o.q, Half::parse(o.b));
    } else if (o.boundKind == "plain") {
        SatelliteQuery q;
        q.b1K = Half::parse(o.b);
        q.omega = o.omega;
        q.lensed = o.lensed;
        q.exceptionalCompanion = o.exceptional;
        result = satellite_bounds(q);
    } else if (o.boundKind == "omega1") {
        result = omega_one_bound(Half::parse(o.bg), o.lensed);
    } else {
        result = additivity_bound(Half::parse(o.ba), Half::parse(o.bb), o.u, o.g, o.coreA, o.coreB);
    }
    out << result << "\n";
    return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
    AnnulusWord w = word_from_json(read_json_file(o.input));
    auto report = validate_word(w);
    if (!report.ok()) {
        print_report(report, o.format, out);
        return 1;
    }
    TorusClass c = classify_torus_config(w);
    auto pairs = find_matched_pairs(w);
    auto candidates = detect_crushable(w);
    if (o.format == "json") {
        json jp = json::array();
        for (const auto& p : pairs) {
            auto k = is_cancellable(w, p);
            jp.push_back({{"curved", p.curved}, {"nested", p.nested}, {"length", p.length},
                          {"cancellable", k.cancellable}, {"case", k.kind}});
        }
        json jc = json::array();
        for (const auto& x : candidates)
            jc.push_back({{"annulus", x.annulus}, {"level", x.level}, {"vpc", x.vpc}, {"discs", {x.disc1, x.disc2}}});
        json jr = json::array();
        for (const auto& r : tube_and_tower_report(w))
            jr.push_back({{"level", r.level}, {"first", r.first}, {"count", r.count}, {"label", run_label_name(r.label)}});
        out << json{{"outcome", torus_outcome_name(c.outcome)}, {"report", c.report}, {"matchedPairs", jp},
                    {"crushable", jc}, {"runs", jr}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "outcome " << torus_outcome_name(c.outcome) << "\n";
    if (!c.report.empty()) out << "report " << c.report << "\n";
    for (const auto& p : pairs) {
        auto k = is_cancellable(w, p);
        out << "pair " << p.curved << " " << p.nested << " length " << p.length;
        if (k.cancellable) out << " cancellable case " << k.kind;
        out << "\n";
    }
    for (const auto& x : candidates) out << "crushable " << x.annulus << " vpc " << x.vpc << "\n";
    return 0;
}

int cmd_gen(const Options& o, std::ostream& out) {
    std::uint64_t seed = o.seed;
    if (const char* env = std::getenv("BRIDGECALC_SEED")) {
        try {
            std::size_t used = 0;
            seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            throw SchemaError(std::string("BRIDGECALC_SEED is not an unsigned integer: ") + env);
        }
    }
    for (const auto& s : generate_states(seed, o.maxSize, o.samples)) out << state_to_json(s).dump() << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted bridge surface calculator", "bridgecalc"};
    app.require_subcommand(1);
    Options o;
    auto formats = CLI::IsMember({"text", "json"});

    auto* validate = app.add_subcommand("validate", "Report structural violations of a state");
    validate->add_option("state", o.input)->required();
    validate->add_option("--format", o.format)->check(formats);

    auto* invariants = app.add_subcommand("invariants", "Net invariants and complexity of a state");
    invariants->add_option("state", o.input)->required();
    invariants->add_option("--m", o.ms, "Values of m for netx_m")->delimiter(',');
    invariants->add_option("--format", o.format)->check(formats);
    invariants->add_flag("--dot", o.dot, "Print the dual digraph as DOT instead");

    auto* apply = app.add_subcommand("apply", "Apply a move script without a monotonicity check");
    apply->add_option("state", o.input)->required();
    apply->add_option("--script", o.script)->required();
    apply->add_option("--out", o.output, "Write the final state here");
    apply->add_option("--format", o.format)->check(formats);

    auto* thin = app.add_subcommand("thin", "Run thinning moves with a complexity trace");
    thin->add_option("state", o.input)->required();
    thin->add_option("--script", o.script);
    thin->add_flag("--greedy", o.greedy, "Consolidate whenever possible");
    thin->add_option("--out", o.output, "Write the final state here");
    thin->add_option("--format", o.format)->check(formats);

    auto* composeCmd = app.add_subcommand("compose", "Sum two states");
    composeCmd->add_option("a", o.input)->required();
    composeCmd->add_option("b", o.second)->required();
    composeCmd->add_option("--kind", o.kind)->check(CLI::IsMember({"distant", "connected", "cut-edge", "trivalent"}));
    composeCmd->add_option("--u", o.u, "Weight of the joined edges");
    composeCmd->add_flag("--flip-b", o.flipB, "Reverse the normals of the second factor");
    composeCmd->add_flag("--loop-a", o.loopA);
    composeCmd->add_flag("--loop-b", o.loopB);
    composeCmd->add_option("--vpc-a", o.vpcA);
    composeCmd->add_option("--vpc-b", o.vpcB);
    composeCmd->add_option("--point-a", o.pointA);
    composeCmd->add_option("--point-b", o.pointB);
    composeCmd->add_option("--sphere", o.sphere, "Id of the summing sphere");
    composeCmd->add_option("--out", o.output);

    auto* split = app.add_subcommand("split", "Cut a state along a summing sphere");
    split->add_option("state", o.input)->required();
    split->add_option("--sphere", o.sphere)->required();
    split->add_option("--out-a", o.output);
    split->add_option("--out-b", o.outputB);

    auto* crushCmd = app.add_subcommand("crush", "Crush a handle given by a spec file");
    crushCmd->add_option("state", o.input)->required();
    crushCmd->add_option("--spec", o.spec)->required();
    crushCmd->add_option("--out", o.output);
    crushCmd->add_option("--format", o.format)->check(formats);

    auto* bound = app.add_subcommand("bound", "Exact bridge number bounds");
    bound->add_option("kind", o.boundKind)
        ->required()
        ->check(CLI::IsMember({"whitehead", "cable", "plain", "omega1", "additivity", "handle"}));
    bound->add_option("--b", o.b, "Bridge number of the companion");
    bound->add_option("--n", o.n, "Whitehead doubling count");
    bound->add_option("--q", o.q, "Cable winding");
    bound->add_option("--omega", o.omega);
    bound->add_flag("--lensed", o.lensed);
    bound->add_flag("--exceptional", o.exceptional, "Companion is an unknot, torus knot or core loop");
    bound->add_option("--bg", o.bg, "Genus-g bridge number of the weighted pattern");
    bound->add_option("--ba", o.ba);
    bound->add_option("--bb", o.bb);
    bound->add_option("--u", o.u);
    bound->add_option("--g", o.g);
    bound->add_flag("--core-a", o.coreA);
    bound->add_flag("--core-b", o.coreB);
    bound->add_option("--netw-h", o.netwH, "netw/2 after crushing");
    bound->add_option("--netw-l", o.netwL, "netw/2 of the pattern");
    bound->add_option("--g1", o.g1);

    auto* classify = app.add_subcommand("classify", "Classify an annulus word");
    classify->add_option("word", o.input)->required();
    classify->add_option("--format", o.format)->check(formats);

    auto* gen = app.add_subcommand("gen", "Generated states, one JSON object per line");
    gen->add_option("--seed", o.seed);
    gen->add_option("--max-size", o.maxSize)->check(CLI::Range(1, 64));
    gen->add_option("--samples", o.samples)->check(CLI::Range(0, 1000000));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(o, out);
        if (*invariants) return cmd_invariants(o, out);
        if (*apply) return cmd_apply(o, out);
        if (*thin) return cmd_thin(o, out);
        if (*composeCmd) return cmd_compose(o, out);
        if (*split) return cmd_split(o, out);
        if (*crushCmd) return cmd_crush(o, out);
        if (*bound) return cmd_bound(o, out);
        if (*classify) return cmd_classify(o, out);
        if (*gen) return cmd_gen(o, out);
    } catch (const InvalidState& e) {
        err << "invalid state\n";
        for (const auto& v : e.report().violations) err << v.code << ": " << v.message << "\n";
        return 1;
    } catch (const MoveRejected& e) {
        err << "rejected: " << e.what() << "\n";
        return 1;
    } catch (const IdentityFailure& e) {
        err << "identity failure: " << e.what() << "\n";
        return 1;
    } catch (const SchemaError& e) {
        err << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "bad argument: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace bridgecalc
