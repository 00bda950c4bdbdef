#include "bidiff/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

#include "bidiff/json_render.hpp"
#include "bidiff/parser.hpp"

namespace bidiff {

namespace {

struct CommonOpts {
    std::string u = "1";
    std::string v = "1";
    std::string a, b, f, g;
    std::string s0 = "0";
    std::string s1 = "1";
    long n0 = 0;
    int cap = -1;
    int spread_bound = kDefaultMaxShift;
    bool pruning = false;
    long verify_terms = 200;
    bool json = false;
};

void add_field_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--u", o.u, "recurrence coefficient u (rational)");
    cmd->add_option("--v", o.v, "recurrence coefficient v (rational)");
    cmd->add_flag("--json", o.json, "emit JSON instead of text");
}

void print_text_field(const DiffField& fld) {
    std::cout << "field: u=" << rat_to_string(fld.u()) << " v=" << rat_to_string(fld.v())
              << " D=" << rat_to_string(fld.D()) << " lambda1=" << fld.lambda1().to_string()
              << " lambda2=" << fld.lambda2().to_string() << "\n";
}

std::string support_text(const SupportSet& s) {
    std::string out = "{";
    bool first = true;
    for (int d : s.finite) {
        if (!first) out += ", ";
        out += std::to_string(d);
        first = false;
    }
    if (s.progression) {
        if (!first) out += ", ";
        out += std::to_string(s.progression->first) + " + " +
               std::to_string(s.progression->second) + "*k (k >= 0)";
        first = false;
    }
    return out + "}";
}

int emit(const std::string& status, const DiffField* fld, const SolutionSet* sol,
         const std::optional<Identity>& identity, std::vector<std::string> diagnostics,
         bool json, int exit_code) {
    if (sol)
        for (const std::string& d : sol->diagnostics) diagnostics.push_back(d);
    if (sol && sol->family_note) diagnostics.push_back(*sol->family_note);
    if (json) {
        std::cout << result_json(status, fld, sol, identity, diagnostics).dump(2) << "\n";
        return exit_code;
    }
    if (fld) print_text_field(*fld);
    std::cout << "status: " << status << "\n";
    if (sol) {
        std::cout << "support: " << support_text(sol->support) << "\n";
        if (sol->particular)
            std::cout << "particular: " << sol->particular->to_string() << "\n";
        std::cout << "kernel basis (cap " << sol->cap_used << "):";
        if (sol->kernel_basis.empty()) std::cout << " (none)";
        std::cout << "\n";
        for (const BiPoly& k : sol->kernel_basis) std::cout << "  " << k.to_string() << "\n";
        for (const BiPoly& w : sol->invariant_gens)
            std::cout << "invariant generator: " << w.to_string() << "\n";
    }
    if (identity) {
        std::cout << "identity: " << identity->closed_form << "\n";
        std::cout << "verified for all m in [" << identity->recurrence.n0 << ", "
                  << identity->verified_up_to << "]\n";
    }
    for (const std::string& d : diagnostics) std::cout << "note: " << d << "\n";
    return exit_code;
}

int cmd_solve(const CommonOpts& o) {
    DiffField fld = make_field(rat_from_string(o.u), rat_from_string(o.v));
    BiPoly a = parse_expr(o.a);
    BiPoly b = parse_expr(o.b);
    BiPoly f = o.f.empty() ? BiPoly() : parse_expr(o.f);
    SolutionSet sol = solve_full(a, b, f, fld, o.cap, o.pruning);
    std::string status;
    int code;
    if (f.is_zero()) {
        status = sol.kernel_basis.empty() ? "empty_kernel" : "solved";
        code = sol.kernel_basis.empty() ? 1 : 0;
    } else {
        status = sol.particular ? "solved" : "no_particular";
        code = sol.particular ? 0 : 1;
    }
    return emit(status, &fld, &sol, std::nullopt, {}, o.json, code);
}

int cmd_sum(const CommonOpts& o) {
    Recurrence rec{rat_from_string(o.u), rat_from_string(o.v), rat_from_string(o.s0),
                   rat_from_string(o.s1), o.n0};
    DiffField fld = make_field(rec.u, rec.v);
    BiPoly f = parse_expr(o.f);
    TelescopeResult res = telescope_sum(rec, f, o.cap, o.verify_terms);
    SolutionSet shell;
    shell.support = res.support;
    if (res.identity) {
        shell.particular = res.identity->telescoper;
        return emit("solved", &fld, &shell, res.identity, res.diagnostics, o.json, 0);
    }
    std::vector<std::string> diags = res.diagnostics;
    diags.insert(diags.begin(), "no polynomial telescoper for f = " + f.to_string());
    return emit("no_particular", &fld, &shell, std::nullopt, diags, o.json, 1);
}

int cmd_spread(const CommonOpts& o) {
    DiffField fld = make_field(rat_from_string(o.u), rat_from_string(o.v));
    BiPoly a = parse_expr(o.a);
    BiPoly b = parse_expr(o.b);
    std::set<int> spr = spread_set(a, b, fld, o.spread_bound);
    StripResult sr = strip(a, b, fld, o.spread_bound);
    std::vector<std::string> diags;
    std::string set_text = "{";
    bool first = true;
    for (int m : spr) {
        if (!first) set_text += ", ";
        set_text += std::to_string(m);
        first = false;
    }
    set_text += "}";
    diags.push_back("spread(a, b) = " + set_text);
    diags.push_back("strip: a' = " + sr.a_final.to_string() + "; b' = " + sr.b_final.to_string() +
                    "; t = " + sr.t.to_string() + "; h = " + sr.h.to_string());
    if (sr.ratio)
        diags.push_back("constant ratio -b'/a' = " + sr.ratio->to_string());
    return emit("solved", &fld, nullptr, std::nullopt, diags, o.json, 0);
}

int cmd_bound(const CommonOpts& o) {
    DiffField fld = make_field(rat_from_string(o.u), rat_from_string(o.v));
    BiPoly a = parse_expr(o.a);
    BiPoly b = parse_expr(o.b);
    if (a.is_zero() || b.is_zero()) throw ContractError("bound: a and b must be nonzero");
    SolutionSet shell;
    std::vector<std::string> diags;
    if (a.degree_nonzero() != b.degree_nonzero()) {
        diags.push_back("deg a != deg b: the homogeneous equation has only g = 0");
    } else {
        auto [support, sr] = support_set(hom_component(a, a.degree_nonzero()),
                                         hom_component(b, b.degree_nonzero()), fld);
        shell.support = support;
        if (sr.ratio)
            diags.push_back("reduced constant ratio -b'/a' = " + sr.ratio->to_string() +
                            ", deg t = " + std::to_string(sr.t.degree_nonzero()) +
                            ", deg h = " + std::to_string(sr.h.degree_nonzero()));
        else
            diags.push_back("stripped pair is non-constant: kernel support is empty");
    }
    if (!o.f.empty()) {
        BiPoly f = parse_expr(o.f);
        if (!f.is_zero()) {
            int dstar = f.degree_nonzero() -
                        std::max(a.degree_nonzero(), b.degree_nonzero());
            diags.push_back("particular-solution degree bound deg f - max(deg a, deg b) = " +
                            std::to_string(dstar));
        }
    }
    return emit("solved", &fld, &shell, std::nullopt, diags, o.json, 0);
}

int cmd_verify(const CommonOpts& o) {
    DiffField fld = make_field(rat_from_string(o.u), rat_from_string(o.v));
    BiPoly a = parse_expr(o.a);
    BiPoly b = parse_expr(o.b);
    BiPoly f = parse_expr(o.f);
    BiPoly g = parse_expr(o.g);
    bool ok = verify_solution(a, b, f, g, fld);
    std::vector<std::string> diags{ok ? "a*sigma(g) + b*g = f holds exactly"
                                      : "a*sigma(g) + b*g = f fails"};
    return emit(ok ? "solved" : "error", &fld, nullptr, std::nullopt, diags, o.json,
                ok ? 0 : 1);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"bidiff: exact polynomial solutions of first-order difference equations over "
                 "order-2 C-finite sequences (Fibonacci, Pell, Jacobsthal, ...)"};
    app.require_subcommand(1);

    CommonOpts o;

    CLI::App* solve = app.add_subcommand("solve", "solve a*sigma(g) + b*g = f");
    add_field_opts(solve, o);
    solve->add_option("--a", o.a, "coefficient polynomial a")->required();
    solve->add_option("--b", o.b, "coefficient polynomial b")->required();
    solve->add_option("--f", o.f, "right-hand side f (omit or 0 for the homogeneous equation)");
    solve->add_option("--cap", o.cap, "kernel degree cap (default: automatic)");
    solve->add_flag("--component-pruning", o.pruning,
                    "intersect kernel support over all homogeneous component pairs");

    CLI::App* sum = app.add_subcommand("sum", "telescope sum_{n=n0}^m f(s_n, s_{n+1})");
    add_field_opts(sum, o);
    sum->add_option("--f", o.f, "summand f(alpha, beta)")->required();
    sum->add_option("--s0", o.s0, "initial term s_0 (rational)");
    sum->add_option("--s1", o.s1, "initial term s_1 (rational)");
    sum->add_option("--n0", o.n0, "first summation index");
    sum->add_option("--cap", o.cap, "kernel degree cap (default: automatic)");
    sum->add_option("--verify-terms", o.verify_terms,
                    "numerically verify the identity for all m up to this bound");

    CLI::App* spread = app.add_subcommand("spread", "spread set and strip of a homogeneous pair");
    add_field_opts(spread, o);
    spread->add_option("--a", o.a, "first homogeneous polynomial")->required();
    spread->add_option("--b", o.b, "second homogeneous polynomial")->required();
    spread->add_option("--spread-bound", o.spread_bound, "exhaustive safety-net scan bound");

    CLI::App* bound = app.add_subcommand("bound", "kernel degree support of a*sigma(g) + b*g = 0");
    add_field_opts(bound, o);
    bound->add_option("--a", o.a, "coefficient polynomial a")->required();
    bound->add_option("--b", o.b, "coefficient polynomial b")->required();
    bound->add_option("--f", o.f, "optional right-hand side, reports its degree bound too");

    CLI::App* verify = app.add_subcommand("verify", "check a candidate solution exactly");
    add_field_opts(verify, o);
    verify->add_option("--a", o.a, "coefficient polynomial a")->required();
    verify->add_option("--b", o.b, "coefficient polynomial b")->required();
    verify->add_option("--f", o.f, "right-hand side f")->required();
    verify->add_option("--g", o.g, "candidate solution g")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto fail = [&](const std::string& msg, int code) {
        if (o.json)
            std::cout << result_json("error", nullptr, nullptr, std::nullopt, {msg}).dump(2)
                      << "\n";
        else
            std::cerr << "error: " << msg << "\n";
        return code;
    };

    try {
        if (solve->parsed()) return cmd_solve(o);
        if (sum->parsed()) return cmd_sum(o);
        if (spread->parsed()) return cmd_spread(o);
        if (bound->parsed()) return cmd_bound(o);
        if (verify->parsed()) return cmd_verify(o);
        return 2;
    } catch (const PrecisionExhaustedError& e) {
        return fail(e.what(), 3);
    } catch (const Error& e) {
        return fail(e.what(), 2);
    }
}

}  // namespace bidiff
