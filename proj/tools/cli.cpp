#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "critwin/bounds.hpp"
#include "critwin/classifier.hpp"
#include "critwin/constructions.hpp"
#include "critwin/errors.hpp"
#include "critwin/graph_io.hpp"
#include "critwin/oracles.hpp"
#include "critwin/rational.hpp"
#include "critwin/zykov.hpp"

namespace critwin::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad input detected after CLI11 has accepted the command line.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    int workers = 1;
    std::uint64_t seed = 1;
    bool json = false;
    bool timing = false;
    std::string out_path;
};

Rational rational_flag(const std::string& name, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const Common& c, const std::string& text, std::ostream& out)
{
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file || !(file << text))
        throw UsageError("cannot write '" + c.out_path + "'");
}

GraphFormat format_flag(const std::string& name)
{
    if (name == "auto")
        return GraphFormat::automatic;
    if (name == "edge-list")
        return GraphFormat::edge_list;
    if (name == "graph6")
        return GraphFormat::graph6;
    throw UsageError("--format must be auto, edge-list or graph6");
}

std::vector<Graph> read_input(const std::string& path, const std::string& format)
{
    auto graphs = read_graphs(read_file(path), format_flag(format));
    if (graphs.empty())
        throw UsageError("no graph in '" + path + "'");
    return graphs;
}

std::string decimal(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

json members(const VertexSet& s)
{
    return json(s.to_vector());
}

// ---- bounds / sweep -----------------------------------------------------

struct BoundsArgs {
    int theorem = 1;
    int r = 0;
    std::string delta;
};

int cmd_bounds(const BoundsArgs& a, const Common& c, std::ostream& out)
{
    const auto ev = evaluate(a.theorem, a.r, rational_flag("delta", a.delta));
    std::ostringstream s;
    if (c.json) {
        json j{{"theorem", ev.theorem},       {"r", ev.r}, {"delta", to_string(ev.delta)},
               {"value", to_string(ev.value)}, {"value_decimal", to_double(ev.value)},
               {"regime", regime_name(ev.regime)}};
        s << j.dump(2) << '\n';
    } else {
        s << to_string(ev.value) << " (" << to_decimal(ev.value) << "), regime=" << regime_name(ev.regime) << '\n';
    }
    emit(c, s.str(), out);
    return 0;
}

struct SweepArgs {
    int theorem = 1;
    int r = 0;
    std::string from, to, step;
};

int cmd_sweep(const SweepArgs& a, const Common& c, std::ostream& out)
{
    const auto rows = sweep(a.theorem, a.r, rational_flag("from", a.from), rational_flag("to", a.to),
                            rational_flag("step", a.step));
    if (!c.json) {
        emit(c, sweep_csv(rows), out);
        return 0;
    }
    json j = json::array();
    for (const auto& ev : rows)
        j.push_back({{"delta", to_string(ev.delta)}, {"value", to_string(ev.value)}, {"regime", regime_name(ev.regime)}});
    emit(c, j.dump(2) + "\n", out);
    return 0;
}

// ---- construct ----------------------------------------------------------

struct ConstructArgs {
    std::string kind;
    int r = 4;
    std::string delta;
    int n = 0;
    int core_size = 0;
    double eps = 0.1;
    std::string core = "petersen";
    std::string graph_out;
    std::string graph_format = "edge-list";
};

std::string construction_text(const ConstructionReport& rep)
{
    std::ostringstream s;
    s << kind_name(rep.kind) << " r=" << rep.r << " delta=" << to_string(rep.delta) << " n=" << rep.n << '\n';
    s << "parts: core=" << rep.parts.core << " X=" << rep.parts.x << " Y=";
    for (std::size_t i = 0; i < rep.parts.y.size(); ++i)
        s << (i ? "+" : "") << rep.parts.y[i];
    s << " Z=" << rep.parts.z << '\n';
    s << "edges=" << rep.edges << " min_degree=" << rep.min_degree << '\n';
    s << "density=" << decimal(rep.density) << " target=" << to_string(rep.target) << " ("
      << to_decimal(rep.target, 6) << ") deviation=" << decimal(rep.deviation) << '\n';
    s << "clique_number=" << (rep.clique_number ? std::to_string(*rep.clique_number) : std::string("unknown"))
      << '\n';
    s << "core: " << rep.core.name << " order=" << rep.core.order << " edges=" << rep.core.edges
      << " girth=" << (rep.core.girth ? std::to_string(*rep.core.girth) : std::string("acyclic"))
      << " triangle_free=" << (rep.core.triangle_free ? "yes" : "no")
      << " chi=" << (rep.core.chi ? std::to_string(*rep.core.chi) : std::string("unknown")) << '\n';
    for (const auto& w : rep.warnings)
        s << "warning: " << w << '\n';
    return s.str();
}

int cmd_construct(const ConstructArgs& a, const Common& c, std::ostream& out)
{
    ConstructionSpec spec;
    try {
        spec.kind = parse_kind(a.kind);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    spec.r = a.r;
    spec.delta = rational_flag("delta", a.delta);
    spec.n = a.n;
    spec.core_size = a.core_size;
    spec.eps = a.eps;
    if (a.core == "c5" || a.core == "petersen" || a.core == "grotzsch")
        spec.core_name = a.core;
    else
        spec.core_graph = read_input(a.core, "auto").front();
    const auto built = build(spec);
    if (!a.graph_out.empty()) {
        const auto fmt = format_flag(a.graph_format);
        const auto text = fmt == GraphFormat::graph6 ? encode_graph6(built.graph) + "\n" : encode_edge_list(built.graph);
        emit({.out_path = a.graph_out}, text, out);
    }
    emit(c, c.json ? to_json(built.report).dump(2) + "\n" : construction_text(built.report), out);
    return 0;
}

// ---- classify -----------------------------------------------------------

struct ClassifyArgs {
    std::string in;
    std::string format = "auto";
    int max_order = 12;
};

json threshold_json(const ThresholdClass& t, bool verified)
{
    static constexpr const char* kinds[] = {"near-acyclic", "forest-in-family", "no-forest"};
    json j{{"chi", t.r},
           {"delta_chi", to_string(t.value)},
           {"kind", kinds[static_cast<int>(t.kind)]},
           {"summary", summary(t)},
           {"verified", verified}};
    if (t.near_acyclic) {
        json del = json::array();
        for (const auto& d : t.near_acyclic->deletions)
            del.push_back(members(d));
        j["witness"] = {{"deletions", del},
                        {"independent", members(t.near_acyclic->independent)},
                        {"forest", members(t.near_acyclic->forest)}};
    } else if (t.forest) {
        j["witness"] = {{"colouring", t.forest->colouring},
                        {"classes", {t.forest->class_a, t.forest->class_b}},
                        {"kept", members(t.forest->kept)},
                        {"graph", edge_string(t.forest->graph)}};
    }
    return j;
}

int cmd_classify(const ClassifyArgs& a, const Common& c, std::ostream& out)
{
    const auto graphs = read_input(a.in, a.format);
    ClassifierOptions opts;
    opts.max_order = a.max_order;
    opts.seed = c.seed;
    bool all_verified = true;
    std::ostringstream s;
    json arr = json::array();
    for (const auto& h : graphs) {
        const auto t = chromatic_threshold(h, opts);
        const bool ok = verify_witness(h, t, opts);
        all_verified = all_verified && ok;
        if (c.json)
            arr.push_back(threshold_json(t, ok));
        else
            s << summary(t) << (ok ? "" : " [witness FAILED re-verification]") << '\n';
    }
    if (c.json)
        s << (graphs.size() == 1 ? arr.front() : arr).dump(2) << '\n';
    emit(c, s.str(), out);
    return all_verified ? 0 : 1;
}

// ---- symmetrize ---------------------------------------------------------

struct SymmetrizeArgs {
    std::string in;
    std::string format = "auto";
    std::vector<int> set;
    std::string mode = "current";
    std::string graph_format = "edge-list";
};

int cmd_symmetrize(const SymmetrizeArgs& a, const Common& c, std::ostream& out)
{
    const auto g = read_input(a.in, a.format).front();
    if (a.mode != "current" && a.mode != "frozen")
        throw UsageError("--mode must be current or frozen");
    const auto mode = a.mode == "current" ? DegreeMode::current : DegreeMode::frozen;
    VertexSet s(g.order());
    for (int v : a.set) {
        if (v < 0 || v >= g.order())
            throw UsageError("--set: vertex " + std::to_string(v) + " is not in the graph");
        s.insert(v);
    }
    const auto t = symmetrize_traced(g, s, mode);
    const auto fmt = format_flag(a.graph_format);
    const auto encoded = fmt == GraphFormat::graph6 ? encode_graph6(t.graph) + "\n" : encode_edge_list(t.graph);
    std::ostringstream text;
    if (c.json) {
        json classes = json::array();
        for (const auto& cl : t.classes)
            classes.push_back({{"index", cl.index}, {"members", members(cl.members)}});
        json j{{"mode", a.mode},
               {"set", members(s)},
               {"merges", t.merges},
               {"edges_before", g.edge_count()},
               {"edges_after", t.graph.edge_count()},
               {"classes", classes},
               {"graph", edge_string(t.graph)}};
        text << j.dump(2) << '\n';
    } else {
        text << encoded;
    }
    emit(c, text.str(), out);
    return 0;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
    int n_max = 5;
    int r = 3;
    int t = 2;
    std::string in;
    std::uint64_t trials = 10'000;
    std::string mode = "both";
    std::vector<int> rs{4, 5, 6, 7, 8};
    int samples = 10;
    double grid_step = 1e-3;
    int max_side = 5;
};

std::string report_text(const OracleReport& rep, bool timing)
{
    std::ostringstream s;
    s << rep.statement << ' ' << rep.parameters.dump() << '\n';
    s << "corpus: " << rep.corpus << '\n';
    s << "graphs=" << rep.graphs << " instances=" << rep.instances << " violations=" << rep.violation_count
      << " equalities=" << rep.equality_count << '\n';
    for (const auto& w : rep.violations)
        s << "violation: " << to_json(w).dump() << '\n';
    for (const auto& w : rep.equalities)
        s << "equality: " << to_json(w).dump() << '\n';
    if (!rep.extra.empty())
        s << "extra: " << rep.extra.dump() << '\n';
    if (timing)
        s << "wall_time_ms=" << static_cast<std::int64_t>(rep.wall_time_ms) << '\n';
    s << (rep.passed() ? "PASS" : "FAIL") << '\n';
    return s.str();
}

Corpus corpus_from(const VerifyArgs& a)
{
    if (!a.in.empty())
        return Corpus::of(read_input(a.in, "graph6"));
    if (a.n_max < 1 || a.n_max > 7)
        throw UsageError("--n-max must be between 1 and 7 for the built-in enumeration; use --in for larger graphs");
    return Corpus::labeled(a.n_max);
}

int cmd_verify(const std::string& statement, const VerifyArgs& a, const Common& c, std::ostream& out)
{
    const OracleOptions opts{.workers = c.workers};
    OracleReport rep;
    if (statement == "lemma-basic") {
        rep = verify_lemma_basic(corpus_from(a), a.r, a.t, opts);
    } else if (statement == "lemma-xyz") {
        rep = verify_lemma_xyz(corpus_from(a), a.r, opts);
    } else if (statement == "aes") {
        rep = verify_aes(corpus_from(a), a.r, opts);
    } else if (statement == "zykov") {
        if (a.mode != "both" && a.mode != "current" && a.mode != "frozen")
            throw UsageError("--mode must be both, current or frozen");
        rep = verify_symmetrization({.trials = a.trials,
                                     .seed = c.seed,
                                     .n_max = a.n_max,
                                     .current_mode = a.mode != "frozen",
                                     .frozen_mode = a.mode != "current"},
                                    opts);
    } else if (statement == "claim") {
        rep = verify_claim_sweep(a.rs, a.samples, a.grid_step, opts);
    } else {
        rep = verify_hall(a.max_side, opts);
    }
    emit(c, c.json ? to_json(rep, c.timing).dump(2) + "\n" : report_text(rep, c.timing), out);
    return rep.passed() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Chromatic threshold toolkit: bounds, constructions, classifier and finite checks", "critwin"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--workers", common.workers, "worker threads for verification")->check(CLI::Range(1, 256));
    app.add_option("--seed", common.seed, "seed for randomised checks and search order");
    app.add_flag("--json", common.json, "machine-readable output");
    app.add_flag("--timing", common.timing, "include wall-clock time in reports");
    app.add_option("--out", common.out_path, "write output here instead of stdout");

    std::function<int()> action;

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate f1 or f2 at one delta");
    bounds_cmd->add_option("--theorem", bounds_args.theorem)->check(CLI::IsMember({1, 2}));
    bounds_cmd->add_option("--r", bounds_args.r)->required();
    bounds_cmd->add_option("--delta", bounds_args.delta)->required();
    bounds_cmd->callback([&] { action = [&] { return cmd_bounds(bounds_args, common, out); }; });

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "tabulate f1 or f2 over a delta grid as CSV");
    sweep_cmd->add_option("--theorem", sweep_args.theorem)->check(CLI::IsMember({1, 2}));
    sweep_cmd->add_option("--r", sweep_args.r)->required();
    sweep_cmd->add_option("--from", sweep_args.from)->required();
    sweep_cmd->add_option("--to", sweep_args.to)->required();
    sweep_cmd->add_option("--step", sweep_args.step)->required();
    sweep_cmd->callback([&] { action = [&] { return cmd_sweep(sweep_args, common, out); }; });

    ConstructArgs construct_args;
    auto* construct_cmd = app.add_subcommand("construct", "build a BH-star, BH-star-star or EG instance");
    construct_cmd->add_option("kind", construct_args.kind, "bh-star, bh-star-star or eg")->required();
    construct_cmd->add_option("--r", construct_args.r);
    construct_cmd->add_option("--delta", construct_args.delta)->required();
    construct_cmd->add_option("--n", construct_args.n)->required()->check(CLI::PositiveNumber);
    construct_cmd->add_option("--core-size", construct_args.core_size, "circle core size for the BH kinds");
    construct_cmd->add_option("--eps", construct_args.eps, "circle core angle");
    construct_cmd->add_option("--core", construct_args.core, "eg core: c5, petersen, grotzsch or a graph file");
    construct_cmd->add_option("--graph-out", construct_args.graph_out, "write the built graph here");
    construct_cmd->add_option("--graph-format", construct_args.graph_format, "edge-list or graph6");
    construct_cmd->callback([&] { action = [&] { return cmd_construct(construct_args, common, out); }; });

    ClassifyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "chromatic threshold of small graphs");
    classify_cmd->add_option("--in", classify_args.in)->required();
    classify_cmd->add_option("--format", classify_args.format, "auto, edge-list or graph6");
    classify_cmd->add_option("--max-order", classify_args.max_order);
    classify_cmd->callback([&] { action = [&] { return cmd_classify(classify_args, common, out); }; });

    SymmetrizeArgs sym_args;
    auto* sym_cmd = app.add_subcommand("symmetrize", "Zykov symmetrization on a vertex set");
    sym_cmd->add_option("--in", sym_args.in)->required();
    sym_cmd->add_option("--format", sym_args.format, "auto, edge-list or graph6");
    sym_cmd->add_option("--set", sym_args.set, "comma separated vertices")->delimiter(',')->required();
    sym_cmd->add_option("--mode", sym_args.mode, "current or frozen");
    sym_cmd->add_option("--graph-format", sym_args.graph_format, "edge-list or graph6");
    sym_cmd->callback([&] { action = [&] { return cmd_symmetrize(sym_args, common, out); }; });

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "finite checks of the supporting statements");
    verify_cmd->require_subcommand(1);
    auto add_verify = [&](const std::string& name, const std::string& help) {
        auto* sub = verify_cmd->add_subcommand(name, help);
        sub->callback([&, name] { action = [&, name] { return cmd_verify(name, verify_args, common, out); }; });
        return sub;
    };
    auto* basic = add_verify("lemma-basic", "edge bound for K_t-free A in K_r-free graphs");
    basic->add_option("--n-max", verify_args.n_max);
    basic->add_option("--r", verify_args.r);
    basic->add_option("--t", verify_args.t);
    basic->add_option("--in", verify_args.in, "graph6 corpus instead of the labelled enumeration");
    auto* xyz = add_verify("lemma-xyz", "edge bound over X, Y, Z partitions");
    xyz->add_option("--n-max", verify_args.n_max);
    xyz->add_option("--r", verify_args.r)->default_val(4);
    xyz->add_option("--in", verify_args.in, "graph6 corpus instead of the labelled enumeration");
    auto* aes = add_verify("aes", "minimum degree condition forces chi <= r-1");
    aes->add_option("--n-max", verify_args.n_max);
    aes->add_option("--r", verify_args.r);
    aes->add_option("--in", verify_args.in, "graph6 corpus instead of the labelled enumeration");
    auto* zykov = add_verify("zykov", "randomised symmetrization properties");
    zykov->add_option("--trials", verify_args.trials);
    zykov->add_option("--n-max", verify_args.n_max)->default_val(9);
    zykov->add_option("--mode", verify_args.mode, "both, current or frozen");
    auto* claim = add_verify("claim", "g(x, y) <= f1 over grids");
    claim->add_option("--r", verify_args.rs, "comma separated r values")->delimiter(',');
    claim->add_option("--samples", verify_args.samples);
    claim->add_option("--grid-step", verify_args.grid_step);
    auto* hall = add_verify("hall", "matching number against Hall deficiency");
    hall->add_option("--max-side", verify_args.max_side);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const SearchLimitExceeded& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

} // namespace critwin::cli
