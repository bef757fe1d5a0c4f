#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hahn/analytic.hpp"
#include "hahn/diffpoly.hpp"
#include "hahn/germ.hpp"
#include "hahn/parser.hpp"
#include "hahn/session.hpp"

using namespace hahn;

namespace {

struct GlobalOpts {
    std::string config;
    std::string preset = "default";
    std::string c = "1";
    std::string depth;
    bool json = false;
};

Session build_session(const GlobalOpts& g) {
    Session s;
    if (!g.config.empty())
        s = load_config(g.config);
    else if (g.preset == "transseries") {
        s.ctx = make_transseries_context(parse_rational(g.c));
    } else if (g.preset == "default") {
        s = make_default_session(parse_rational(g.c));
    } else {
        throw PreconditionFailed("unknown preset '" + g.preset + "'");
    }
    if (!g.depth.empty()) s.depth = parse_rational(g.depth);
    if (g.json) s.json_output = true;
    if (s.depth <= 0) throw PreconditionFailed("depth must be positive");
    return s;
}

void print_series(const Session& s, const Series& f) {
    if (s.json_output) {
        std::cout << f.to_json().dump() << "\n";
    } else {
        std::cout << f.to_text() << "\n";
        std::cout << "known_below: " << f.known_below().str() << "\n";
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated transseries engine: Hahn-series arithmetic, Hensel solving, "
                 "and zeros of the order-1 differential polynomial P_c"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--config", g.config, "session config file");
    app.add_option("--preset", g.preset, "session preset: default | transseries");
    app.add_flag("--json", g.json, "JSON output");

    auto add_depth = [&](CLI::App* cmd) { cmd->add_option("-N,--depth", g.depth, "weight bound"); };

    auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression to a series");
    std::string expr_src;
    cmd_eval->add_option("-e,--expr", expr_src, "expression")->required();
    add_depth(cmd_eval);

    auto* cmd_hensel = app.add_subcommand("hensel", "solve Q(z) = 0 for the listed coefficients");
    std::string coeffs_src;
    cmd_hensel->add_option("--coeffs", coeffs_src, "a0;a1;... (higher coefficients zero)")->required();
    add_depth(cmd_hensel);

    auto* cmd_unit = app.add_subcommand("unit-eq", "solve (1+z)^c (1+eps+z) = 1");
    std::string unit_c = "1", eps_src;
    cmd_unit->add_option("--c", unit_c, "exponent c (rational, != -1)");
    cmd_unit->add_option("--eps", eps_src, "infinitesimal eps")->required();
    add_depth(cmd_unit);

    auto* cmd_pc = app.add_subcommand("solve-pc", "zero of P_c with leading term b*e^(x/(c+1))");
    std::string pc_c = "1", pc_b = "1", verify = "none";
    double t_sample = 10.0;
    cmd_pc->add_option("--c", pc_c, "positive rational c");
    cmd_pc->add_option("--b", pc_b, "nonzero rational leading coefficient");
    cmd_pc->add_option("--verify", verify, "symbolic | numeric | both");
    cmd_pc->add_option("--t", t_sample, "sample point for numeric verification");
    add_depth(cmd_pc);

    auto* cmd_dom = app.add_subcommand("dominance", "asymptotic relations between two series");
    std::string f_src, g_src;
    cmd_dom->add_option("-f", f_src, "left series")->required();
    cmd_dom->add_option("-g", g_src, "right series")->required();
    add_depth(cmd_dom);

    CLI11_PARSE(app, argc, argv);

    Session session;
    try {
        if (cmd_pc->parsed() && g.config.empty() && g.preset == "default")
            g.c = pc_c; // the solve-pc grid follows its c
        session = build_session(g);

        if (cmd_eval->parsed()) {
            print_series(session, eval_expr(expr_src, session.ctx, session.depth));
        } else if (cmd_hensel->parsed()) {
            std::vector<Series> coeffs;
            for (const auto& part : split(coeffs_src, ';'))
                coeffs.push_back(eval_expr(part, session.ctx, session.depth));
            PowerSeries Q = PowerSeries::from_coeffs(session.ctx, std::move(coeffs));
            print_series(session, hensel_solve(Q, session.depth));
        } else if (cmd_unit->parsed()) {
            Series eps = eval_expr(eps_src, session.ctx, session.depth);
            print_series(session, solve_unit_eq(parse_rational(unit_c), eps, session.depth));
        } else if (cmd_pc->parsed()) {
            Rational c = parse_rational(pc_c), b = parse_rational(pc_b);
            Series y = solve_pc(session.ctx, c, b, session.depth);
            print_series(session, y);
            if (verify == "symbolic" || verify == "both") {
                auto rep = u_check(y, c, session.depth);
                nlohmann::ordered_json j;
                j["u_residual_zero_below_bound"] = rep.residual.empty();
                j["u_is_multiple_of_ex"] = rep.u_is_multiple_of_ex;
                j["a"] = rep.a ? nlohmann::ordered_json(to_string(*rep.a))
                               : nlohmann::ordered_json(nullptr);
                std::cout << j.dump() << "\n";
            }
            if (verify == "numeric" || verify == "both") {
                std::vector<Rational> depths;
                for (Rational d = session.depth; d > 0 && depths.size() < 3; d -= 2)
                    depths.insert(depths.begin(), d);
                auto rep = residual_decay_check(GermAssignment::for_context(session.ctx), c, b,
                                                depths, t_sample);
                std::cout << rep.to_json().dump() << "\n";
            }
        } else if (cmd_dom->parsed()) {
            Series f = eval_expr(f_src, session.ctx, session.depth);
            Series h = eval_expr(g_src, session.ctx, session.depth);
            DomRelation r = Series::dominance(f, h);
            nlohmann::ordered_json j;
            j["prec"] = r.prec;
            j["asymp"] = r.asymp;
            j["sim"] = r.sim;
            std::cout << j.dump() << "\n";
        }
    } catch (const EngineError& e) {
        if (session.json_output || g.json) {
            nlohmann::ordered_json j;
            j["error"] = e.what();
            j["code"] = static_cast<int>(e.cls);
            std::cerr << j.dump() << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return static_cast<int>(e.cls);
    }
    return 0;
}
