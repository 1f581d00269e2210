#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hagakit/ct_figure.hpp"
#include "hagakit/haga_fold.hpp"
#include "hagakit/json_writer.hpp"
#include "hagakit/svg_render.hpp"
#include "hagakit/verify.hpp"

namespace {

using namespace hagakit;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double default_eps() {
    if (const char* env = std::getenv("HAGAKIT_EPS")) {
        const double v = std::strtod(env, nullptr);
        if (v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-9;
}

void write_point(JsonWriter& w, const char* name, Point p) {
    w.key(name).begin_object().field("x", p.x).field("y", p.y).end_object();
}

void write_circle(JsonWriter& w, const char* name, const Circle& c) {
    w.key(name)
        .begin_object()
        .field("cx", c.center.x)
        .field("cy", c.center.y)
        .field("r", c.radius)
        .end_object();
}

/// The zero-bar parameter serializes as the string "zerobar", never as the
/// number 0, to keep the sentinel distinct from the real parameter 0.
void write_ct_param(JsonWriter& w, const char* name, const CtParam& n) {
    if (n.is_zero_bar()) {
        w.field(name, std::string("zerobar"));
    } else {
        w.field(name, n.value());
    }
}

void write_haga_param(JsonWriter& w, const char* name, const HagaParam& n) {
    if (n.is_zero_bar()) {
        w.field(name, std::string("zerobar"));
    } else {
        w.field(name, n.value());
    }
}

void write_assertions(JsonWriter& w, const CheckReport& report) {
    w.key("assertions").begin_array();
    for (const CheckItem& item : report.items) {
        w.begin_object()
            .field("name", std::string(item.name))
            .field("pass", item.pass)
            .field("residual", item.residual)
            .end_object();
    }
    w.end_array();
    w.field("all_pass", report.all_pass());
}

void write_svg_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open SVG output file: " + path);
    }
    out << content;
}

CtParam parse_ct_param(const std::string& text) {
    if (text == "zerobar") return CtParam::zero_bar();
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) {
        throw UsageError("--n expects a number or 'zerobar'");
    }
    return CtParam::real(v);
}

HagaParam parse_haga_param(const std::string& text) {
    if (text == "zerobar") return HagaParam::zero_bar();
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) {
        throw UsageError("--n expects a number or 'zerobar'");
    }
    return HagaParam::real(v);
}

// ---------------------------------------------------------------------------
// ct subcommand

struct CtArgs {
    std::optional<double> r;
    std::string n_text;
    std::optional<double> d1;
    std::optional<double> d2;
    std::string branch;
    std::string svg_path;
    bool with_companion = false;
    bool with_chain = false;
    double eps = 0.0;
};

int run_ct(const CtArgs& args) {
    const double eps = args.eps > 0.0 ? args.eps : default_eps();
    const Tolerance tol = Tolerance::validated(eps, eps);

    const bool by_param = args.r.has_value() || !args.n_text.empty();
    const bool by_radii = args.d1.has_value() || args.d2.has_value() || !args.branch.empty();
    if (by_param == by_radii || (by_param && (!args.r || args.n_text.empty())) ||
        (by_radii && (!args.d1 || !args.d2 || args.branch.empty()))) {
        throw UsageError("ct needs either --r with --n, or --d1 --d2 --branch");
    }

    CtFigure fig = build_ct(1.0, CtParam::real(1.0));
    if (by_param) {
        fig = build_ct(*args.r, parse_ct_param(args.n_text));
    } else {
        if (args.branch != "low" && args.branch != "high") {
            throw UsageError("--branch must be 'low' or 'high'");
        }
        const RadiusBranch branch =
            args.branch == "low" ? RadiusBranch::Low : RadiusBranch::High;
        const double r = gamma_radius_from_radii(*args.d1, *args.d2, branch);
        if (r == 0.0) {
            // Equal radii on the high branch: the degenerate figure.
            fig = build_ct(ak_length(*args.d1, *args.d2), CtParam::zero_bar());
        } else {
            const double s = std::sqrt(*args.d1 / r) - 1.0;
            fig = build_ct(r, CtParam::real(0.5 * s * s));
        }
    }

    const CompanionPair pair = companion(fig);

    CheckReport checks;
    const double scale = std::max(1.0, fig.d1());
    const double tangency = tangency_residuals(fig).max();
    checks.items.push_back({"tangency residuals", tangency <= eps * scale, tangency});
    if (fig.n.is_real() && fig.r() > 0.0) {
        const double recovered = fig.tau * fig.ak() / (2.0 * fig.r()) + 0.5;
        const double res = std::abs(recovered - fig.n.value());
        checks.items.push_back(
            {"parameter round trip", tol.near(recovered, fig.n.value(), fig.n.value()), res});
    }
    const double ak_res = std::abs(fig.ak() - ak_length(fig.d1(), fig.d2()));
    checks.items.push_back(
        {"contact length identity", tol.near(fig.ak(), ak_length(fig.d1(), fig.d2()), scale), ak_res});
    const double sum_res = std::abs(2.0 * (fig.r() + pair.r_bar()) - (fig.d1() + fig.d2()));
    checks.items.push_back(
        {"companion radius sum", sum_res <= eps * scale, sum_res});
    if (by_radii) {
        const double echo_res =
            std::max(std::abs(fig.d1() - *args.d1), std::abs(fig.d2() - *args.d2));
        checks.items.push_back(
            {"input radii reproduced", echo_res <= eps * scale, echo_res});
    }

    std::optional<ChainResult> chain;
    if (args.with_chain) {
        if (!fig.n.is_real()) {
            throw UsageError("--chain needs a positive integer parameter");
        }
        const double nv = fig.n.value();
        const int count = static_cast<int>(std::llround(nv));
        if (count < 1 || std::abs(nv - count) > 1e-9) {
            throw UsageError("--chain needs a positive integer parameter");
        }
        chain = toyoyoshi_chain(count, fig.r());
    }

    JsonWriter w;
    w.begin_object();
    w.field("schema", std::string("hagakit/1"));
    w.field("command", std::string("ct"));
    w.key("params").begin_object();
    if (by_param) {
        w.field("r", *args.r);
        write_ct_param(w, "n", fig.n);
    } else {
        w.field("d1", *args.d1);
        w.field("d2", *args.d2);
        w.field("branch", args.branch);
    }
    w.field("eps", eps);
    w.end_object();

    w.key("derived").begin_object();
    write_ct_param(w, "n", fig.n);
    w.field("tau", fig.tau);
    w.field("r", fig.r());
    w.field("d1", fig.d1());
    w.field("d2", fig.d2());
    w.field("ak", fig.ak());
    write_ct_param(w, "n_bar", pair.companion.n);
    w.field("r_bar", pair.r_bar());
    w.field("ak_bar", pair.companion.ak());
    write_circle(w, "gamma", fig.gamma);
    write_circle(w, "gamma_bar", pair.gamma_bar());
    write_point(w, "K", fig.K);
    write_point(w, "K_bar", pair.companion.K);
    write_point(w, "D1", fig.D1);
    write_point(w, "D2", fig.D2);
    if (fig.n.is_real() && fig.n.value() > 0.0) {
        const TangentFeet feet = internal_tangent_feet(fig);
        write_point(w, "E1", feet.e1);
        w.field("ratio1", feet.ratio1);
        if (feet.e2) {
            write_point(w, "E2", *feet.e2);
            w.field("ratio2", *feet.ratio2);
        }
    }
    if (chain) {
        w.key("chain").begin_array();
        for (const Circle& c : chain->circles) {
            w.begin_object()
                .field("cx", c.center.x)
                .field("cy", c.center.y)
                .field("r", c.radius)
                .end_object();
        }
        w.end_array();
        w.field("chain_d1", chain->d1);
    }
    w.end_object();

    write_assertions(w, checks);
    w.end_object();
    std::cout << w.str() << "\n";

    if (!args.svg_path.empty()) {
        CtRenderOptions options;
        options.with_companion = args.with_companion;
        if (chain) options.chain = chain->circles;
        write_svg_file(args.svg_path, render_ct(fig, RenderStyle{}, options).to_string());
    }
    return checks.all_pass() ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// haga subcommand

struct HagaArgs {
    std::optional<double> d;
    std::optional<double> e;
    std::string n_text;
    std::string svg_path;
    double eps = 0.0;
};

int run_haga(const HagaArgs& args) {
    const double eps = args.eps > 0.0 ? args.eps : default_eps();
    const Tolerance tol = Tolerance::validated(eps, eps);

    if (!args.d || (args.e.has_value() == !args.n_text.empty())) {
        throw UsageError("haga needs --d with exactly one of --e or --n");
    }
    const double d = *args.d;
    const double e = args.e ? *args.e : e_from_n(d, parse_haga_param(args.n_text));
    const HagaFigure fig = fold_from_e(d, e);

    CheckReport checks;
    const double iso_res = std::abs(distance(fig.G, fig.E) - d);
    checks.items.push_back({"fold isometry", iso_res <= eps * std::max(1.0, d), iso_res});
    const double mid_res = distance(fig.E, midpoint(fig.D, fig.K));
    checks.items.push_back({"midpoint law", mid_res <= eps * std::max(1.0, d), mid_res});
    const double e_rec = e_from_n(d, fig.n);
    checks.items.push_back(
        {"parameter round trip", tol.near(e_rec, e, std::max(d, std::abs(e))),
         std::abs(e_rec - e)});
    const bool interior_expected =
        fig.case_label == HagaCase::H3 || fig.case_label == HagaCase::H4 ||
        fig.case_label == HagaCase::H5 || fig.case_label == HagaCase::H6 ||
        (fig.case_label == HagaCase::H7 && fig.n.value() > -kRhoInverse);
    checks.items.push_back({"crease flag matches the case table",
                            fig.crease_interior == interior_expected,
                            fig.crease_interior == interior_expected ? 0.0 : 1.0});

    JsonWriter w;
    w.begin_object();
    w.field("schema", std::string("hagakit/1"));
    w.field("command", std::string("haga"));
    w.key("params").begin_object();
    w.field("d", d);
    if (args.e) {
        w.field("e", *args.e);
    } else {
        w.field("n", args.n_text);
    }
    w.field("eps", eps);
    w.end_object();

    w.key("derived").begin_object();
    w.field("e", fig.e);
    write_haga_param(w, "n", fig.n);
    w.field("case", std::string(to_string(fig.case_label)));
    w.field("crease_interior", fig.crease_interior);
    w.field("r", fig.gamma.radius);
    write_circle(w, "gamma", fig.gamma);
    write_point(w, "K", fig.K);
    if (fig.T) write_point(w, "T", *fig.T);
    write_point(w, "E", fig.E);
    write_point(w, "G", fig.G);
    if (fig.F) write_point(w, "F", *fig.F);
    w.key("m").begin_object()
        .field("a", fig.m.a)
        .field("b", fig.m.b)
        .field("c", fig.m.c)
        .end_object();
    w.end_object();

    write_assertions(w, checks);
    w.end_object();
    std::cout << w.str() << "\n";

    if (!args.svg_path.empty()) {
        write_svg_file(args.svg_path, render_haga(fig, RenderStyle{}).to_string());
    }
    return checks.all_pass() ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// problems subcommand

struct ProblemsArgs {
    int id = 0;
    double d = 1.0;
    int chain_n = 0;
    double eps = 0.0;
};

int run_problems(const ProblemsArgs& args) {
    const double eps = args.eps > 0.0 ? args.eps : default_eps();

    JsonWriter w;
    w.begin_object();
    w.field("schema", std::string("hagakit/1"));
    w.field("command", std::string("problems"));
    w.key("params").begin_object();
    w.field("id", args.id);
    w.field("d", args.d);
    if (args.id == 5) w.field("chain_n", args.chain_n);
    w.field("eps", eps);
    w.end_object();

    CheckReport checks;
    w.key("derived").begin_object();
    switch (args.id) {
        case 1:
        case 2: {
            const double r = solve_problem_1_2(args.d);
            w.field("r", r);
            // Both problems reduce to the n = 2 figure; cross-check it.
            const CtFigure fig = build_ct(r, CtParam::real(2.0));
            const double res = std::abs(fig.d1() - args.d);
            checks.items.push_back(
                {"large radius reproduced by the n = 2 figure",
                 res <= eps * std::max(1.0, args.d), res});
            break;
        }
        case 3: {
            const RefutationReport report = refute_problem_3(args.d);
            w.field("ratio", report.ratio);
            w.field("r_from_ratio", args.d / report.ratio);
            w.field("claimed_ratio", report.claimed);
            w.field("consistent", report.consistent);
            const double closed_form =
                3.0 + std::sqrt(2.0) + 2.0 * std::sqrt(2.0 + std::sqrt(2.0));
            const double res = std::abs(report.ratio - closed_form);
            checks.items.push_back({"tangency equation matches the closed form",
                                    res <= 1e-12 * closed_form, res});
            checks.items.push_back({"claimed answer is inconsistent",
                                    std::abs(report.ratio - report.claimed) > 0.8,
                                    std::abs(report.ratio - report.claimed)});
            break;
        }
        case 5: {
            if (args.chain_n < 1) {
                throw UsageError("problems --id 5 needs --chain-n >= 1");
            }
            const double s = std::sqrt(2.0 * args.chain_n);
            const double r = args.d / ((s + 1.0) * (s + 1.0));
            w.field("r", r);
            const ChainResult chain = toyoyoshi_chain(args.chain_n, r);
            w.field("d1", chain.d1);
            double worst = 0.0;
            for (std::size_t i = 1; i < chain.circles.size(); ++i) {
                const double gap = distance(chain.circles[i - 1].center,
                                            chain.circles[i].center);
                worst = std::max(worst, std::abs(gap - 2.0 * r));
            }
            checks.items.push_back({"consecutive chain circles touch",
                                    worst <= eps * std::max(1.0, args.d), worst});
            const double rel_res = std::abs(chain.d1 - args.d);
            checks.items.push_back({"chain closes against the large circle",
                                    rel_res <= eps * std::max(1.0, args.d), rel_res});
            break;
        }
        default:
            throw UsageError("problems --id must be 1, 2, 3 or 5");
    }
    w.end_object();

    write_assertions(w, checks);
    w.end_object();
    std::cout << w.str() << "\n";
    return checks.all_pass() ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// verify subcommand

struct VerifyArgs {
    int samples = 1000;
    std::uint64_t seed = 12345;
    double eps = 0.0;
    double perturb = 0.0;
};

int run_verify(const VerifyArgs& args) {
    if (args.samples < 1) {
        throw UsageError("verify needs --samples >= 1");
    }
    VerifyOptions options;
    options.samples = args.samples;
    options.seed = args.seed;
    options.eps_abs = args.eps > 0.0 ? args.eps : default_eps();
    options.eps_rel = options.eps_abs;
    options.perturb = args.perturb;

    const std::vector<CheckResult> results = run_verification(options);

    JsonWriter w;
    w.begin_object();
    w.field("schema", std::string("hagakit/1"));
    w.field("command", std::string("verify"));
    w.key("params").begin_object();
    w.field("samples", args.samples);
    w.key("seed").value(static_cast<long long>(args.seed));
    w.field("eps_abs", options.eps_abs);
    w.field("eps_rel", options.eps_rel);
    w.field("perturb", options.perturb);
    w.end_object();
    w.key("checks").begin_array();
    for (const CheckResult& check : results) {
        w.begin_object()
            .field("name", check.name)
            .field("samples", check.samples)
            .field("max_residual", check.max_residual)
            .field("tolerance", check.tolerance)
            .field("pass", check.pass)
            .end_object();
    }
    w.end_array();
    w.field("all_pass", all_pass(results));
    w.end_object();
    std::cout << w.str() << "\n";
    return all_pass(results) ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tangent-circle figures, generalized Haga folds and their verification suite"};
    app.require_subcommand(1);

    CtArgs ct_args;
    CLI::App* ct = app.add_subcommand("ct", "Build and check a tangent-circle figure");
    ct->add_option("--r", ct_args.r, "Radius of the inner circle (placement length for --n zerobar)");
    ct->add_option("--n", ct_args.n_text, "Parameter: nonnegative number or 'zerobar'");
    ct->add_option("--d1", ct_args.d1, "Larger outer radius");
    ct->add_option("--d2", ct_args.d2, "Smaller outer radius");
    ct->add_option("--branch", ct_args.branch, "Radius branch: 'low' or 'high'");
    ct->add_option("--svg", ct_args.svg_path, "Write the figure as SVG");
    ct->add_flag("--companion", ct_args.with_companion, "Overlay the companion circle (dashed)");
    ct->add_flag("--chain", ct_args.with_chain, "Draw the congruent-circle chain (integer n)");
    ct->add_option("--eps", ct_args.eps, "Comparison tolerance");

    HagaArgs haga_args;
    CLI::App* haga = app.add_subcommand("haga", "Build and classify a generalized fold");
    haga->add_option("--d", haga_args.d, "Square side");
    haga->add_option("--e", haga_args.e, "Fold target coordinate along DA");
    haga->add_option("--n", haga_args.n_text, "Parameter: number or 'zerobar'");
    haga->add_option("--svg", haga_args.svg_path, "Write the figure as SVG");
    haga->add_option("--eps", haga_args.eps, "Comparison tolerance");

    ProblemsArgs problems_args;
    CLI::App* problems = app.add_subcommand("problems", "Solve the classical tablet problems");
    problems->add_option("--id", problems_args.id, "Problem id: 1, 2, 3 or 5")->required();
    problems->add_option("--d", problems_args.d, "Large circle radius")->required();
    problems->add_option("--chain-n", problems_args.chain_n, "Chain length for problem 5");
    problems->add_option("--eps", problems_args.eps, "Comparison tolerance");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the full invariant suite");
    verify->add_option("--samples", verify_args.samples, "Base sample count");
    verify->add_option("--seed", verify_args.seed, "PRNG seed");
    verify->add_option("--eps", verify_args.eps, "Comparison tolerance");
    verify->add_option("--perturb", verify_args.perturb, "Inject this much error (self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (ct->parsed()) return run_ct(ct_args);
        if (haga->parsed()) return run_haga(haga_args);
        if (problems->parsed()) return run_problems(problems_args);
        if (verify->parsed()) return run_verify(verify_args);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    }
}
