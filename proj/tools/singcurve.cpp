// Command-line front end: invariants of plane curve singularities from
// fixture files, plus the coincidence-verification harness.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "singcurve/errors.hpp"
#include "singcurve/fixture.hpp"
#include "singcurve/graph.hpp"
#include "singcurve/poincare.hpp"
#include "singcurve/semigroup.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace singcurve;

namespace {

// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 internal
// inconsistency, 4 precision cap reached.
enum ExitCode { kOk = 0, kVerifyFail = 1, kInputError = 2, kInconsistency = 3, kPrecision = 4 };

struct Options {
    std::string format = "text";
    long long bound = 100;
    std::string window;
    long long jet_cap = 0;
};

JetConfig jet_config(const Options& opt) {
    JetConfig cfg = JetConfig::from_env();
    if (opt.jet_cap > 0) cfg.jet_cap = opt.jet_cap;
    return cfg;
}

std::vector<long long> parse_axis_list(const std::string& s) {
    std::vector<long long> vals;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stoll(item));
    return vals;
}

// "--window LO..HI" with comma-separated per-axis bounds, e.g. "-2,-2..8,4".
std::pair<MultiIndex, MultiIndex> parse_window(const std::string& s, int r) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw FixtureError("window must be LO..HI");
    auto lo = parse_axis_list(s.substr(0, pos));
    auto hi = parse_axis_list(s.substr(pos + 2));
    if (lo.size() == 1 && r > 1) lo.assign(r, lo[0]);
    if (hi.size() == 1 && r > 1) hi.assign(r, hi[0]);
    if (static_cast<int>(lo.size()) != r || static_cast<int>(hi.size()) != r)
        throw FixtureError("window arity does not match the fixture");
    return {MultiIndex(lo), MultiIndex(hi)};
}

int cmd_branch(const std::string& path, const Options& opt) {
    FixtureBundle f = load_fixture(path);
    if (!f.char_exponents) throw FixtureError("fixture has no char_exponents payload");

    auto data = branch_data_from_char_exponents(*f.char_exponents);
    ProductForm closed = poincare_closed_form(data);
    DualGraph g = graph_from_branch(*f.char_exponents);
    ProductForm zeta = acampo_zeta(g);

    MultiIndex w{opt.bound};
    bool pass = expand_product_form(closed, w).agrees_with(expand_product_form(zeta, w));

    if (opt.format == "json") {
        json out;
        out["name"] = f.name;
        out["generators"] = data.gens;
        out["star"] = data.star;
        out["conductor"] = data.conductor;
        out["poincare_closed_form"] = closed.to_string();
        out["acampo_zeta"] = zeta.to_string();
        out["graph_vertices"] = g.size();
        out["bound"] = opt.bound;
        out["coincide"] = pass;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "branch " << f.name << "\n";
        std::cout << "  generators:";
        for (auto x : data.gens) std::cout << " " << x;
        std::cout << "\n  star multiplicities:";
        for (auto x : data.star) std::cout << " " << x;
        std::cout << "\n  conductor: " << data.conductor << "\n";
        std::cout << "  P (closed form):   " << closed.to_string() << "\n";
        std::cout << "  graph: " << g.size() << " vertices, " << g.edges().size() << " edges\n";
        std::cout << "  zeta (resolution): " << zeta.to_string() << "\n";
        std::cout << "  coincidence up to t^" << opt.bound << ": " << (pass ? "PASS" : "FAIL")
                  << "\n";
    }
    return pass ? kOk : kVerifyFail;
}

int cmd_graph(const std::string& path, const Options& opt) {
    FixtureBundle f = load_fixture(path);
    if (!f.graph) throw FixtureError("fixture has no graph payload");
    const DualGraph& g = *f.graph;

    auto mult = solve_multiplicities(g);
    auto chi = euler_smooth_parts(g);
    ProductForm zeta = acampo_zeta(g);
    AlexanderResult alex = alexander_polynomial(g);

    long long diag_bound = opt.bound;
    bool diag_ok = true;
    std::string alex_str = alex.poly ? alex.poly->to_string() : alex.form.to_string();
    if (alex.poly) {
        TruncatedSeries lhs =
            specialize_diagonal(*alex.poly).truncate(MultiIndex{diag_bound});
        TruncatedSeries rhs =
            expand_product_form(specialize_diagonal(zeta), MultiIndex{diag_bound});
        diag_ok = lhs.agrees_with(rhs);
    }

    if (opt.format == "json") {
        json out;
        out["name"] = f.name;
        json mtable = json::array();
        for (int i = 0; i < g.size(); ++i)
            mtable.push_back({{"id", g.vertices()[i].id},
                              {"m", mult.per_branch[i]},
                              {"total", mult.total[i]},
                              {"chi", chi[i]}});
        out["multiplicities"] = mtable;
        out["zeta"] = zeta.to_string();
        out["alexander"] = alex_str;
        out["diagonal_check"] = diag_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "graph " << f.name << " (r=" << g.branch_count() << ")\n";
        for (int i = 0; i < g.size(); ++i) {
            std::cout << "  vertex " << g.vertices()[i].id << ": m =";
            for (auto m : mult.per_branch[i]) std::cout << " " << m;
            std::cout << "  total " << mult.total[i] << "  chi " << chi[i] << "\n";
        }
        std::cout << "  zeta:      " << zeta.to_string() << "\n";
        std::cout << "  alexander: " << alex_str << "\n";
        std::cout << "  diagonal check: " << (diag_ok ? "PASS" : "FAIL") << "\n";
    }
    return diag_ok ? kOk : kVerifyFail;
}

int cmd_curve(const std::string& path, const Options& opt) {
    FixtureBundle f = load_fixture(path);
    if (!f.curve) throw FixtureError("fixture has no curve payload");
    const CurveModel& curve = *f.curve;
    const int r = curve.branch_count();
    JetConfig cfg = jet_config(opt);

    MultiIndex hi = f.graph ? default_window(*f.graph) : MultiIndex::constant(r, 6);
    MultiIndex lo = MultiIndex::constant(r, -2);
    if (!opt.window.empty()) std::tie(lo, hi) = parse_window(opt.window, r);

    LaurentWindow lw = build_laurent_window(curve, lo, hi, cfg);
    IntPolynomial pp = p_prime(lw);
    PoincareObject p = poincare_from_jets(lw);
    PoincareObject x = x_series(curve, hi, cfg);

    std::optional<VerifyReport> report;
    if (f.graph) report = verify_curve(curve, *f.graph, cfg);

    if (opt.format == "json") {
        json out;
        out["name"] = f.name;
        json ctable = json::array();
        for (const auto& [v, c] : lw.values) {
            if (c == 0) continue;
            ctable.push_back({{"v", v.entries()}, {"c", c}});
        }
        out["c_table"] = ctable;
        out["p_prime"] = pp.to_string();
        out["poincare"] = p.to_string();
        out["x_series"] = x.to_string();
        if (report) {
            json checks = json::array();
            for (const auto& e : report->entries)
                checks.push_back({{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
            out["verify"] = checks;
            out["all_pass"] = report->all_pass();
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "curve " << f.name << " (r=" << r << "), window " << lo.to_string() << ".."
                  << hi.to_string() << "\n";
        std::cout << "  P': " << pp.to_string() << "\n";
        std::cout << "  P:  " << p.to_string() << "\n";
        std::cout << "  X:  " << x.to_string() << "\n";
        if (report) std::cout << report->to_string();
    }
    return (!report || report->all_pass()) ? kOk : kVerifyFail;
}

int cmd_infinity(const std::string& path, const Options& opt) {
    FixtureBundle f = load_fixture(path);
    if (!f.delta_sequence) throw FixtureError("fixture has no delta_sequence payload");

    InfinityPoincare res = poincare_at_infinity(*f.delta_sequence, opt.bound);

    if (opt.format == "json") {
        json out;
        out["name"] = f.name;
        out["series"] = res.series.to_string();
        out["gap_complement"] = res.q.to_string();
        out["conductor"] = res.conductor;
        if (res.closed) out["closed_form"] = res.closed->to_string();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "semigroup at infinity " << f.name << "\n";
        std::cout << "  series (to t^" << opt.bound << "): " << res.series.to_string() << "\n";
        std::cout << "  rational form: " << res.q.to_string() << " + t^" << res.conductor
                  << "/(1-t)\n";
        if (res.closed) std::cout << "  closed form: " << res.closed->to_string() << "\n";
    }
    return kOk;
}

struct VerifyLine {
    std::string fixture;
    std::string check;
    bool pass;
    std::string detail;
};

void run_fixture_checks(const FixtureBundle& f, const Options& opt, std::vector<VerifyLine>& lines) {
    JetConfig cfg = jet_config(opt);
    auto add = [&](const std::string& check, bool pass, const std::string& detail = "") {
        lines.push_back({f.name, check, pass, detail});
    };
    if (f.char_exponents) {
        auto data = branch_data_from_char_exponents(*f.char_exponents);
        ProductForm closed = poincare_closed_form(data);
        DualGraph g = graph_from_branch(*f.char_exponents);
        MultiIndex w{opt.bound};
        bool pass =
            expand_product_form(closed, w).agrees_with(expand_product_form(acampo_zeta(g), w));
        add("thm1_closed_form_equals_zeta", pass);
    }
    if (f.curve && f.graph) {
        VerifyReport rep = verify_curve(*f.curve, *f.graph, cfg);
        for (const auto& e : rep.entries) add(e.name, e.pass, e.detail);
    } else if (f.graph) {
        AlexanderResult alex = alexander_polynomial(*f.graph);
        bool pass = true;
        if (alex.poly) {
            MultiIndex w{opt.bound};
            pass = specialize_diagonal(*alex.poly)
                       .truncate(w)
                       .agrees_with(expand_product_form(specialize_diagonal(acampo_zeta(*f.graph)), w));
        }
        add("diagonal_alexander_equals_zeta", pass);
    }
    if (f.delta_sequence) {
        InfinityPoincare res = poincare_at_infinity(*f.delta_sequence, opt.bound);
        // enumeration vs rational form Q + t^c/(1-t)
        TruncatedSeries rational(1, MultiIndex{opt.bound});
        for (const auto& [v, c] : res.q.terms()) rational.add_term(v, c);
        for (long long v = res.conductor; v <= opt.bound; ++v) rational.add_term(MultiIndex{v}, 1);
        add("infinity_series_equals_rational_form", res.series.agrees_with(rational));
        if (res.closed)
            add("infinity_closed_form",
                expand_product_form(*res.closed, MultiIndex{opt.bound}).agrees_with(res.series));
    }
}

int cmd_verify(const std::string& dir, const Options& opt) {
    std::vector<std::string> paths;
    if (!fs::is_directory(dir)) {
        std::cerr << "not a directory: " << dir << "\n";
        return kInputError;
    }
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") paths.push_back(entry.path().string());
    if (paths.empty()) {
        std::cerr << "no fixtures in " << dir << "\n";
        return kInputError;
    }
    std::sort(paths.begin(), paths.end());

    std::vector<VerifyLine> lines;
    for (const auto& path : paths) {
        try {
            FixtureBundle f = load_fixture(path);
            run_fixture_checks(f, opt, lines);
        } catch (const std::exception& e) {
            lines.push_back({path, "load_and_check", false, e.what()});
        }
    }

    bool all_pass = std::all_of(lines.begin(), lines.end(), [](const VerifyLine& l) { return l.pass; });
    if (opt.format == "json") {
        json out = json::array();
        for (const auto& l : lines)
            out.push_back({{"fixture", l.fixture},
                           {"check", l.check},
                           {"pass", l.pass},
                           {"detail", l.detail}});
        std::cout << json{{"results", out}, {"all_pass", all_pass}}.dump(2) << "\n";
    } else {
        for (const auto& l : lines)
            std::cout << (l.pass ? "PASS" : "FAIL") << "  " << l.fixture << "  " << l.check
                      << (l.detail.empty() ? "" : "  [" + l.detail + "]") << "\n";
        std::cout << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    }
    return all_pass ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of plane curve singularities"};
    app.require_subcommand(1);

    Options opt;
    std::string input;
    std::string corpus;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) sub->add_option("input", input, "fixture file")->required();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--bound", opt.bound, "one-variable expansion bound");
        sub->add_option("--jet-cap", opt.jet_cap, "precision ladder cap");
    };

    auto* branch = app.add_subcommand("branch", "irreducible branch from characteristic exponents");
    add_common(branch, true);
    auto* graph = app.add_subcommand("graph", "resolution graph invariants");
    add_common(graph, true);
    auto* curve = app.add_subcommand("curve", "parameterized curve, jet pipeline");
    add_common(curve, true);
    curve->add_option("--window", opt.window, "c(v) window LO..HI, per-axis comma lists");
    auto* infinity = app.add_subcommand("infinity", "semigroup at infinity");
    add_common(infinity, true);
    auto* verify = app.add_subcommand("verify", "run all checks over a fixture corpus");
    verify->add_option("--corpus", corpus, "fixture directory")->required();
    add_common(verify, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (branch->parsed()) return cmd_branch(input, opt);
        if (graph->parsed()) return cmd_graph(input, opt);
        if (curve->parsed()) return cmd_curve(input, opt);
        if (infinity->parsed()) return cmd_infinity(input, opt);
        if (verify->parsed()) return cmd_verify(corpus, opt);
    } catch (const FixtureError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const PrecisionError& e) {
        std::cerr << "precision cap: " << e.what() << "\n";
        return kPrecision;
    } catch (const std::exception& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kInconsistency;
    }
    return kInputError;
}
