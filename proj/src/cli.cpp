#include "alphawidth/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "alphawidth/brambles.hpp"
#include "alphawidth/certificates.hpp"
#include "alphawidth/domination.hpp"
#include "alphawidth/enumerate.hpp"
#include "alphawidth/errors.hpp"
#include "alphawidth/graph_algorithms.hpp"
#include "alphawidth/graph_io.hpp"
#include "alphawidth/induced_minor.hpp"
#include "alphawidth/suites.hpp"
#include "alphawidth/treedepth.hpp"
#include "alphawidth/width.hpp"

namespace alphawidth {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
public:
    using Error::Error;
};

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool json = false;
};

std::string slurp(Context& ctx, const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << ctx.in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

Json read_json_file(Context& ctx, const std::string& path) {
    const std::string text = slurp(ctx, path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what(), e.byte);
    }
}

bool looks_like_dimacs(std::string_view line) {
    return line == "c" || line.starts_with("c ") || line.starts_with("p ") || line.starts_with("e ");
}

// One DIMACS graph, or one graph per graph6 line. Bad graph6 lines become warnings unless strict.
std::vector<Graph> read_graphs(const std::string& text, bool strict, std::vector<std::string>& warnings) {
    std::istringstream in(text);
    const auto lines = read_lines(in);
    if (!lines.empty() && looks_like_dimacs(lines.front())) return {parse_dimacs(text)};
    std::vector<Graph> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            out.push_back(parse_graph6(lines[i]));
        } catch (const Error& e) {
            const std::string msg = "line " + std::to_string(i + 1) + ": " + e.what();
            if (strict) throw ParseError(msg, 0);
            warnings.push_back(msg);
        }
    }
    return out;
}

Graph read_one(Context& ctx, const std::string& path) { return parse_graph_text(slurp(ctx, path)); }

void emit(Context& ctx, const Json& j) { ctx.out << j.dump() << '\n'; }

int run_param(Context& ctx, const std::string& input, bool want_atw, bool want_atd, bool want_tw, bool want_alpha,
              bool certificate) {
    if (!want_atw && !want_atd && !want_tw && !want_alpha) want_atw = want_atd = want_tw = true;
    std::vector<std::string> warnings;
    const auto graphs = read_graphs(slurp(ctx, input), true, warnings);
    for (const Graph& g : graphs) {
        Json row;
        if (want_alpha) row["alpha"] = independence_number(g);
        if (want_atw) {
            auto r = alpha_tw_exact(g);
            row["alpha_tw"] = r.value;
            if (certificate) row["alpha_tw_decomposition"] = to_json(r.decomposition);
        }
        if (want_atd) {
            auto r = alpha_td_exact(g);
            row["alpha_td"] = r.value;
            if (certificate) row["alpha_td_forest"] = to_json(r.forest);
        }
        if (want_tw) {
            auto r = treewidth_exact(g);
            row["tw"] = r.value;
            if (certificate) row["tw_decomposition"] = to_json(r.decomposition);
        }
        emit(ctx, row);
    }
    return kOk;
}

int run_bramble_find(Context& ctx, const std::string& input, int k) {
    const Graph g = read_one(ctx, input);
    auto sb = strong_bramble_of_order(g, k);
    if (!sb) {
        if (ctx.json) {
            emit(ctx, {{"found", false}, {"k", k}});
        } else {
            ctx.out << "no " << 2 * k - 2 << "-alpha-linked set; alpha-tw <= " << 4 * k - 3 << "\n";
        }
        return kOk;
    }
    const auto order = alpha_order_exact(g, sb->bramble);
    Json cert = bramble_to_json(sb->bramble, order);
    if (ctx.json) {
        Json row{{"found", true}, {"k", k}, {"linked_set", vertex_list(sb->linked_set)}};
        row.update(cert);
        emit(ctx, row);
    } else {
        ctx.out << "strong bramble with " << sb->bramble.elements.size() << " elements, alpha-order " << order.value
                << ", cover " << order.cover.to_string() << "\n"
                << cert.dump() << "\n";
    }
    return order.value >= k ? kOk : kViolation;
}

int run_bramble_verify(Context& ctx, const std::string& input, const std::string& cert_path,
                       std::optional<int> min_order) {
    const Graph g = read_one(ctx, input);
    const StrongBramble b = bramble_from_json(read_json_file(ctx, cert_path));
    auto check = check_strong_bramble(g, b);
    if (!check) {
        if (ctx.json) {
            emit(ctx, {{"valid", false}, {"detail", check.detail}});
        } else {
            ctx.out << "invalid: " << check.detail << "\n";
        }
        return kViolation;
    }
    const auto order = alpha_order_exact(g, b);
    const bool enough = !min_order || order.value >= *min_order;
    if (ctx.json) {
        emit(ctx, {{"valid", true}, {"alpha_order", order.value}, {"cover", vertex_list(order.cover)}, {"meets_k", enough}});
    } else {
        ctx.out << "valid strong bramble, alpha-order " << order.value << " (cover " << order.cover.to_string() << ")\n";
    }
    return enough ? kOk : kViolation;
}

int run_dominate(Context& ctx, const std::string& input, const std::string& cert_path, const std::string& mode) {
    const Graph g = read_one(ctx, input);
    const StrongBramble b = bramble_from_json(read_json_file(ctx, cert_path));
    auto check = check_strong_bramble(g, b);
    if (!check) {
        ctx.err << "bramble invalid: " << check.detail << "\n";
        return kViolation;
    }
    Json row;
    if (mode == "path") {
        auto path = dominating_path(g, b);
        row["path"] = path;
        row["dominates"] = dominates(g, path, b);
        row["induced"] = is_induced_path(g, path);
    } else {
        auto res = dominating_cycle_or_vertex(g, b);
        if (res.vertex) {
            row["vertex"] = *res.vertex;
            row["dominates"] = dominates(g, {*res.vertex}, b);
        } else {
            row["cycle"] = res.cycle;
            row["dominates"] = dominates(g, res.cycle, b);
            row["induced"] = is_induced_cycle(g, res.cycle);
        }
    }
    if (ctx.json) {
        emit(ctx, row);
    } else {
        ctx.out << row.dump() << "\n";
    }
    const bool ok = row["dominates"].get<bool>() && (!row.contains("induced") || row["induced"].get<bool>());
    return ok ? kOk : kViolation;
}

Json vicinity_json(const VicinityDecomposition& v) {
    Json far = Json::array();
    for (VertexSet j : v.far_components) far.push_back(vertex_list(j));
    return {{"decomposition", to_json(v.decomposition)},
            {"f1", v.f1},
            {"f2", v.f2},
            {"far_components", far},
            {"contracted_treewidth", v.contracted_treewidth},
            {"bag_bound", v.bag_bound}};
}

int run_wheel_detect(Context& ctx, const std::string& input, int d, int l) {
    const Graph g = read_one(ctx, input);
    auto result = detect_wheel(g, d, l);
    Json row;
    if (result.model) {
        row = model_to_json(*result.model, "W" + std::to_string(l));
        row["outcome"] = "model";
    } else {
        row["outcome"] = "certificate";
        row["alpha_tw"] = *result.alpha_tw;
        row["decomposition"] = to_json(*result.decomposition);
        if (result.cycle) {
            row["cycle"] = *result.cycle;
            row["vicinity"] = vicinity_json(*result.vicinity);
        }
    }
    if (ctx.json) {
        emit(ctx, row);
    } else {
        if (result.model)
            ctx.out << "W" << l << " induced minor found\n";
        else
            ctx.out << "no W" << l << " induced minor; alpha-tw " << *result.alpha_tw << "\n";
        ctx.out << row.dump() << "\n";
    }
    return kOk;
}

int run_wheel_verify(Context& ctx, const std::string& input, const std::string& cert_path) {
    const Graph g = read_one(ctx, input);
    const Json cert = read_json_file(ctx, cert_path);
    const std::string pattern = cert.value("pattern", "");
    const Graph h = pattern_graph(pattern);
    const auto model = model_from_json(cert);
    auto check = check_model(g, h, model);
    if (ctx.json) {
        Json row{{"valid", check.valid}, {"pattern", pattern}};
        if (!check) row["detail"] = check.detail;
        emit(ctx, row);
    } else {
        ctx.out << (check ? "valid " + pattern + " model" : "invalid: " + check.detail) << "\n";
    }
    return check ? kOk : kViolation;
}

int run_tdcheck(Context& ctx, const std::string& input, const std::string& cert_path) {
    const Graph g = read_one(ctx, input);
    const auto td = tree_decomposition_from_json(read_json_file(ctx, cert_path));
    auto check = check_tree_decomposition(g, td);
    Json row{{"valid", check.valid}};
    if (check) {
        row["alpha_width"] = alpha_width(g, td);
        row["width"] = td.width();
    } else {
        row["axiom"] = check.axiom;
        row["detail"] = check.detail;
    }
    if (ctx.json) {
        emit(ctx, row);
    } else if (check) {
        ctx.out << "valid tree decomposition, alpha-width " << row["alpha_width"] << ", width " << row["width"] << "\n";
    } else {
        ctx.out << "invalid (" << check.axiom << "): " << check.detail << "\n";
    }
    return check ? kOk : kViolation;
}

int run_efcheck(Context& ctx, const std::string& input, const std::string& cert_path) {
    const Graph g = read_one(ctx, input);
    const auto f = elimination_forest_from_json(read_json_file(ctx, cert_path), g.order());
    auto check = check_elimination_forest(g, f);
    Json row{{"valid", check.valid}};
    if (check) {
        row["alpha_depth"] = alpha_depth(g, f);
    } else {
        row["detail"] = check.detail;
    }
    if (ctx.json) {
        emit(ctx, row);
    } else if (check) {
        ctx.out << "valid elimination forest, alpha-depth " << row["alpha_depth"] << "\n";
    } else {
        ctx.out << "invalid: " << check.detail << "\n";
    }
    return check ? kOk : kViolation;
}

int run_suite_verb(Context& ctx, const std::string& name, const std::string& input, const SuiteParams& params,
                   const std::string& generate, std::optional<int> max_n, bool strict, bool timing) {
    std::vector<Graph> graphs;
    std::vector<std::string> warnings;
    if (generate.empty()) {
        for (Graph& g : read_graphs(slurp(ctx, input), strict, warnings))
            if (!max_n || g.order() <= *max_n) graphs.push_back(std::move(g));
    } else {
        if (!max_n) throw UsageError("--generate needs --max-n");
        if (generate == "paths") {
            for (int k = 1; k <= *max_n; ++k) graphs.push_back(graphs::path(k));
        } else if (generate == "all" || generate == "connected") {
            for (Graph& g : enumerate_graphs_up_to(*max_n))
                if (generate == "all" || is_connected(g)) graphs.push_back(std::move(g));
        } else {
            throw UsageError("unknown generator '" + generate + "'");
        }
    }
    RunReport report = run_suite(name, graphs, params, worker_count_from_env());
    report.warnings = warnings;
    for (const auto& w : warnings) ctx.err << "warning: skipped malformed " << w << "\n";
    auto replay = [&](const GraphOutcome& o) {
        return "echo '" + o.graph6 + "' | alphawidth suite " + name + " --k " + std::to_string(params.k) + " --d " +
               std::to_string(params.d) + " --l " + std::to_string(params.l);
    };
    if (ctx.json) {
        for (const auto& o : report.outcomes) {
            Json row{{"index", o.index}, {"graph6", o.graph6}, {"status", status_name(o.status)}};
            if (!o.detail.empty()) row["detail"] = o.detail;
            row["values"] = o.values;
            if (o.status == Status::fail) row["replay"] = replay(o);
            emit(ctx, row);
        }
        emit(ctx, report.summary(timing));
    } else {
        ctx.out << "suite " << name << ": " << report.outcomes.size() << " graphs, " << report.count(Status::pass)
                << " passed, " << report.count(Status::fail) << " failed, " << report.count(Status::skip)
                << " skipped, " << warnings.size() << " malformed\n";
        if (timing) ctx.out << "wall time " << report.wall_seconds << " s\n";
        for (const auto& o : report.outcomes)
            if (o.status == Status::fail)
                ctx.out << "FAIL #" << o.index << " " << o.graph6 << ": " << o.detail << "\n  replay: " << replay(o) << "\n";
    }
    return report.failures() ? kViolation : kOk;
}

int run_convert(Context& ctx, const std::string& input, const std::string& to) {
    std::vector<std::string> warnings;
    const auto graphs = read_graphs(slurp(ctx, input), true, warnings);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (to == "graph6") {
            ctx.out << emit_graph6(graphs[i]) << "\n";
        } else if (to == "dimacs") {
            ctx.out << emit_dimacs(graphs[i]);
        } else {
            ctx.out << to_dot(graphs[i], "G" + std::to_string(i));
        }
    }
    return kOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"alphawidth: tree-independence number toolkit", "alphawidth"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{in, out, err};
    app.add_flag("--json", ctx.json, "JSON lines output");
    std::string input = "-";

    auto* param = app.add_subcommand("param", "exact alpha-tw, alpha-td and treewidth");
    bool atw = false, atd = false, tw = false, alpha = false, certificate = false;
    param->add_flag("--alpha-tw", atw);
    param->add_flag("--alpha-td", atd);
    param->add_flag("--tw", tw);
    param->add_flag("--alpha", alpha);
    param->add_flag("--certificate", certificate, "include witness decompositions");
    param->add_option("input", input, "graph file or - for stdin");

    auto* bramble = app.add_subcommand("bramble", "find, verify or evaluate strong brambles");
    bramble->require_subcommand(1);
    int k = 1;
    std::string cert;
    std::optional<int> min_order;
    auto* bfind = bramble->add_subcommand("find", "strong bramble of alpha-order >= k");
    bfind->add_option("--k", k)->check(CLI::PositiveNumber);
    bfind->add_option("input", input);
    auto* bverify = bramble->add_subcommand("verify", "check a bramble certificate");
    bverify->add_option("--cert", cert)->required();
    bverify->add_option("--k", min_order);
    bverify->add_option("input", input);
    auto* border = bramble->add_subcommand("order", "exact alpha-order of a bramble certificate");
    border->add_option("--cert", cert)->required();
    border->add_option("input", input);

    auto* dominate = app.add_subcommand("dominate", "dominating path or cycle for a bramble");
    std::string mode = "path";
    dominate->add_option("mode", mode)->check(CLI::IsMember({"path", "cycle"}))->required();
    dominate->add_option("--bramble", cert)->required();
    dominate->add_option("input", input);

    auto* wheel = app.add_subcommand("wheel", "wheel induced minors");
    wheel->require_subcommand(1);
    int d = 3, l = 4;
    auto* wdetect = wheel->add_subcommand("detect", "find W_l or certify its absence");
    wdetect->add_option("--d", d)->check(CLI::PositiveNumber);
    wdetect->add_option("--l", l)->check(CLI::Range(3, 64));
    wdetect->add_option("input", input);
    auto* wverify = wheel->add_subcommand("verify", "check a model certificate");
    wverify->add_option("--cert", cert)->required();
    wverify->add_option("input", input);

    auto* tdcheck = app.add_subcommand("tdcheck", "validate a tree decomposition certificate");
    tdcheck->add_option("--cert", cert)->required();
    tdcheck->add_option("input", input);
    auto* efcheck = app.add_subcommand("efcheck", "validate an elimination forest certificate");
    efcheck->add_option("--cert", cert)->required();
    efcheck->add_option("input", input);

    auto* suite = app.add_subcommand("suite", "run a property suite over a graph stream");
    std::string suite_name;
    SuiteParams params;
    std::string generate;
    std::optional<int> max_n;
    bool strict = false, timing = false;
    suite->add_option("name", suite_name)->required()->check(CLI::IsMember(suite_names()));
    suite->add_option("--k", params.k)->check(CLI::PositiveNumber);
    suite->add_option("--d", params.d)->check(CLI::PositiveNumber);
    suite->add_option("--l", params.l)->check(CLI::Range(3, 64));
    suite->add_option("--max-n", max_n, "skip larger graphs, or the bound for --generate");
    suite->add_option("--generate", generate, "all | connected | paths instead of reading a stream");
    suite->add_flag("--strict", strict, "fail on malformed stream lines");
    suite->add_flag("--timing", timing, "include wall time in the report");
    suite->add_option("input", input);

    auto* convert = app.add_subcommand("convert", "graph6 / DIMACS / DOT conversion");
    std::string to = "graph6";
    convert->add_option("--to", to)->check(CLI::IsMember({"graph6", "dimacs", "dot"}));
    convert->add_option("input", input);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*param) return run_param(ctx, input, atw, atd, tw, alpha, certificate);
        if (*bfind) return run_bramble_find(ctx, input, k);
        if (*bverify) return run_bramble_verify(ctx, input, cert, min_order);
        if (*border) return run_bramble_verify(ctx, input, cert, std::nullopt);
        if (*dominate) return run_dominate(ctx, input, cert, mode);
        if (*wdetect) return run_wheel_detect(ctx, input, d, l);
        if (*wverify) return run_wheel_verify(ctx, input, cert);
        if (*tdcheck) return run_tdcheck(ctx, input, cert);
        if (*efcheck) return run_efcheck(ctx, input, cert);
        if (*suite) return run_suite_verb(ctx, suite_name, input, params, generate, max_n, strict, timing);
        if (*convert) return run_convert(ctx, input, to);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return kUsage;
    } catch (const SizeCapError& e) {
        err << "size cap: " << e.what() << "\n";
        return kUsage;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kViolation;
    }
    return kUsage;
}

}  // namespace alphawidth
