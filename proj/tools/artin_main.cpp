#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "artin/commands.hpp"

namespace {

std::optional<long> opt_long(long v) {
    return v < 0 ? std::nullopt : std::optional<long>(v);
}

std::optional<std::string> opt_string(const std::string& s) {
    return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Order-tracked multivariate power series: the approximate solutions "
        "of X^2 - Z*Y^2 and the quadratic growth of its Artin function"};
    app.require_subcommand(1);

    // verify-counterexample ------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify-counterexample",
        "build one (u, v, z) triple and check every asserted order");
    long v_p = 3, v_k = 5, v_precision = -1;
    std::string v_field = "Q", v_format = "table";
    verify->add_option("--p", v_p, "exponent p of z = T1^2 + T2^p (p > 2)");
    verify->add_option("--k", v_k, "truncation order k (k > 2)");
    verify->add_option("--field", v_field, "Q or F<q>, q an odd prime");
    verify->add_option("--precision", v_precision,
                       "working precision (default (p+2)k - 2)");
    verify->add_option("--format", v_format, "table or json");

    // dioph ------------------------------------------------------------------
    auto* dioph = app.add_subcommand(
        "dioph", "sweep approximation records ord(x_p - u/v) vs ord v");
    std::string d_p = "4", d_k = "3..8", d_field = "Q", d_format = "csv",
                d_out;
    dioph->add_option("--p", d_p, "p or range p1..p2");
    dioph->add_option("--k", d_k, "k or range k1..k2");
    dioph->add_option("--field", d_field, "Q or F<q>");
    dioph->add_option("--format", d_format, "csv or table");
    dioph->add_option("--out", d_out, "write the report to this file");

    // square-obstruction ------------------------------------------------------
    auto* obst = app.add_subcommand(
        "square-obstruction", "certify sup over t of ord(z_p - t^2) = p");
    long o_p = 3, o_max = -1;
    unsigned long long o_budget = 10'000'000ULL;
    std::string o_field = "Q", o_method = "both", o_format = "table";
    obst->add_option("--p", o_p, "exponent p of z = T1^2 + T2^p (p > 2)");
    obst->add_option("--field", o_field, "Q or F<q>");
    obst->add_option("--max-order", o_max, "search cap (default p + 2)");
    obst->add_option("--method", o_method, "greedy, exhaustive or both");
    obst->add_option("--budget", o_budget,
                     "candidate limit for the exhaustive route");
    obst->add_option("--format", o_format, "table or json");

    // beta-bound ---------------------------------------------------------------
    auto* bound = app.add_subcommand(
        "beta-bound",
        "certify the quadratic lower bound ((i+2)/2)^2 - 5 per i");
    std::string b_i = "8..12", b_field = "Q", b_format = "table", b_out;
    bound->add_option("--i", b_i, "i or range i1..i2 (even i certified "
                                  "directly, odd via i-1)");
    bound->add_option("--field", b_field, "Q or F<q>");
    bound->add_option("--format", b_format, "table or csv");
    bound->add_option("--out", b_out, "write the report to this file");

    // artin-estimate -----------------------------------------------------------
    auto* est = app.add_subcommand(
        "artin-estimate",
        "brute-force the Artin function of a system on a jet space");
    std::string e_poly, e_field = "F3", e_i = "0", e_oracle = "lift", e_out;
    int e_N = 1, e_n = 1, e_jobs = 1;
    long e_jet = -1, e_horizon = -1;
    unsigned long long e_budget = 10'000'000ULL;
    est->add_option("--poly", e_poly,
                    "system text, polynomials separated by ';'")
        ->required();
    est->add_option("--N", e_N, "number of series variables T1..TN");
    est->add_option("--n", e_n, "number of unknowns X1..Xn");
    est->add_option("--field", e_field, "F<q> (jet spaces need a finite field)");
    est->add_option("--i", e_i, "i or range i1..i2");
    est->add_option("--jet-order", e_jet, "jet order (default i + 2)");
    est->add_option("--horizon", e_horizon,
                    "lifting horizon for the heuristic (default jet order + 1)");
    est->add_option("--oracle", e_oracle,
                    "membership oracle: lift, origin, empty or square");
    est->add_option("--budget", e_budget, "jet enumeration limit");
    est->add_option("--jobs", e_jobs, "worker threads");
    est->add_option("--out", e_out, "write the JSON to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    return artin::run_command(
        [&]() -> int {
            if (verify->parsed()) {
                artin::VerifyOptions o;
                o.p = v_p;
                o.k = v_k;
                o.field = v_field;
                o.precision = opt_long(v_precision);
                o.format = v_format;
                return artin::cmd_verify_counterexample(o, std::cout);
            }
            if (dioph->parsed()) {
                artin::DiophOptions o;
                o.p = artin::parse_range(d_p);
                o.k = artin::parse_range(d_k);
                o.field = d_field;
                o.format = d_format;
                o.out = opt_string(d_out);
                return artin::cmd_dioph_table(o, std::cout);
            }
            if (obst->parsed()) {
                artin::ObstructionOptions o;
                o.p = o_p;
                o.field = o_field;
                o.max_order = opt_long(o_max);
                o.method = o_method;
                o.budget = o_budget;
                o.format = o_format;
                return artin::cmd_square_obstruction(o, std::cout);
            }
            if (bound->parsed()) {
                artin::BetaBoundOptions o;
                o.i = artin::parse_range(b_i);
                o.field = b_field;
                o.format = b_format;
                o.out = opt_string(b_out);
                return artin::cmd_beta_bound(o, std::cout);
            }
            artin::EstimateOptions o;
            o.poly = e_poly;
            o.N = e_N;
            o.n = e_n;
            o.field = e_field;
            o.i = artin::parse_range(e_i);
            o.jet_order = opt_long(e_jet);
            o.horizon = opt_long(e_horizon);
            o.oracle = e_oracle;
            o.budget = e_budget;
            o.jobs = e_jobs;
            o.out = opt_string(e_out);
            return artin::cmd_artin_estimate(o, std::cout);
        },
        std::cerr);
}
