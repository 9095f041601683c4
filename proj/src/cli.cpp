#include "hg3/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hg3/asymptotic.hpp"
#include "hg3/oracle.hpp"
#include "hg3/realize.hpp"
#include "hg3/reduction.hpp"
#include "hg3/threshold.hpp"

namespace hg3 {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

DegreeSequence load_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return DegreeSequence::load(in);
}

void save_hypergraph(const Hypergraph3& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    h.save(out);
}

int cmd_threshold(const std::string& c2_str, double tol) {
    double c2 = static_cast<double>(parse_decimal(c2_str));
    ThresholdResult r = c1_star(c2, tol);
    std::cout << "c1_star=" << fmt(r.c1_star) << "\n"
              << "alpha_star=" << fmt(r.alpha_star) << "\n"
              << "branch=" << branch_name(r.branch) << "\n";
    return 0;
}

int cmd_plot_data(const std::string& lo, const std::string& hi,
                  const std::string& step) {
    auto rows = plot_data(static_cast<double>(parse_decimal(lo)),
                          static_cast<double>(parse_decimal(hi)),
                          static_cast<double>(parse_decimal(step)));
    std::cout << "c2,c1_star,alpha_star\n";
    for (const PlotRow& r : rows) {
        std::cout << fmt(r.c2) << ',' << fmt(r.c1_star) << ','
                  << fmt(r.alpha_star) << "\n";
    }
    return 0;
}

int cmd_critical(long long n, long long k, long long d_max, bool skip,
                 const std::string& out_hg) {
    CriticalParams p = validate_params(n, k, d_max);
    auto [h, part] = critical_hypergraph(p, skip);
    DegreeSequence d =
        skip ? h.degree_sequence() : critical_sequence(p);
    d.save(std::cout);
    if (!out_hg.empty()) save_hypergraph(h, out_hg);
    return 0;
}

int cmd_decide(const std::string& in, const std::string& c1,
               const std::string& c2) {
    DegreeSequence d = load_sequence(in);
    if (!c1.empty() && !c2.empty()) {
        bool member =
            class_membership(d, parse_decimal(c1), parse_decimal(c2));
        std::cout << "in_class=" << (member ? "true" : "false") << "\n";
    }
    switch (decide_graphic_interval(d)) {
        case Graphicality::graphic:
            std::cout << "graphic\n";
            return 0;
        case Graphicality::fails_mod3:
            std::cout << "fails_mod3\n";
            return 3;
        case Graphicality::below_threshold:
            std::cout << "below_threshold\n";
            return 4;
    }
    return 5;  // unreachable
}

int cmd_realize(const std::string& in, const std::string& out) {
    DegreeSequence d = load_sequence(in);
    switch (decide_graphic_interval(d)) {
        case Graphicality::fails_mod3:
            std::cerr << "sum not divisible by 3\n";
            return 3;
        case Graphicality::below_threshold:
            std::cerr << "minimum degree below the realization bound\n";
            return 4;
        case Graphicality::graphic:
            break;
    }
    save_hypergraph(realize(d), out);
    return 0;
}

int cmd_reduce(const std::string& in, const std::string& c2,
               const std::string& eps, const std::string& out,
               const std::string& hprime_out) {
    DegreeSequence d0 = load_sequence(in);
    ReductionArtifacts a = embed(d0, parse_decimal(c2),
                                 static_cast<double>(parse_decimal(eps)));
    std::ofstream os(out);
    if (!os) throw std::invalid_argument("cannot open " + out);
    a.d_b.save(os);
    if (!hprime_out.empty()) save_hypergraph(a.h_prime, hprime_out);
    std::cout << "n=" << a.n << "\n"
              << "d_max=" << a.d_max << "\n"
              << "k_star=" << a.k_star << "\n"
              << "case=" << (a.case1 ? 1 : 2) << "\n";
    return 0;
}

int cmd_oracle(const std::string& in, long long budget,
               const std::string& out) {
    DegreeSequence d = load_sequence(in);
    OracleVerdict v = is_graphic_exhaustive(d, budget);
    switch (v.status) {
        case OracleStatus::graphic:
            std::cout << "graphic\n";
            if (!out.empty()) save_hypergraph(*v.witness, out);
            return 0;
        case OracleStatus::non_graphic:
            std::cout << "non_graphic\n";
            return 1;
        case OracleStatus::budget_exceeded:
            std::cout << "budget_exceeded\n";
            return 4;
    }
    return 5;  // unreachable
}

int cmd_certify(long long t, const std::string& p, long long n) {
    NonGraphicCertificate c = nongraphic_witness(t, parse_decimal(p), n);
    std::cout << "t=" << c.t << "\n"
              << "n=" << c.n << "\n"
              << "d_min=" << c.d_min << "\n"
              << "d_max=" << c.d_max << "\n"
              << "required_delta=" << c.required_delta << "\n"
              << "max_delta=" << c.max_delta << "\n"
              << "sound=" << (c.sound ? "true" : "false") << "\n";
    return c.sound ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"3-uniform hypergraph degree sequence toolkit"};
    app.require_subcommand(1);

    std::string c2_str, c1_str, eps_str, in_path, out_path, aux_path;
    std::string lo_str, hi_str, step_str, p_str;
    double tol = 1e-10;
    long long n = 0, k = 0, d_max = 0, t = 0;
    long long budget = 100000000;
    bool skip = false;

    auto* thr = app.add_subcommand("threshold", "compute c1*(c2)");
    thr->add_option("--c2", c2_str)->required();
    thr->add_option("--tol", tol);

    auto* plot = app.add_subcommand("plot-data", "c1*(c2) curve as CSV");
    plot->add_option("--c2-min", lo_str)->required();
    plot->add_option("--c2-max", hi_str)->required();
    plot->add_option("--step", step_str)->required();

    auto* crit = app.add_subcommand("critical", "critical degree sequence");
    crit->add_option("--n", n)->required();
    crit->add_option("--k", k)->required();
    crit->add_option("--dmax", d_max)->required();
    crit->add_flag("--skip-rounding-edge", skip);
    crit->add_option("--out-hypergraph", aux_path);

    auto* dec = app.add_subcommand("decide", "one-sided graphicality decision");
    dec->add_option("--in", in_path)->required();
    dec->add_option("--c1", c1_str);
    dec->add_option("--c2", c2_str);

    auto* real = app.add_subcommand("realize", "construct a realization");
    real->add_option("--in", in_path)->required();
    real->add_option("--out", out_path)->required();

    auto* red = app.add_subcommand("reduce", "hardness embedding D0 -> D_B");
    red->add_option("--in", in_path)->required();
    red->add_option("--c2", c2_str)->required();
    red->add_option("--epsilon", eps_str)->required();
    red->add_option("--out", out_path)->required();
    red->add_option("--emit-hprime", aux_path);

    auto* ora = app.add_subcommand("oracle", "exhaustive small-n decision");
    ora->add_option("--in", in_path)->required();
    ora->add_option("--budget", budget);
    ora->add_option("--out", out_path);

    auto* cert = app.add_subcommand("certify", "t-uniform non-graphicality");
    cert->add_option("--t", t)->required();
    cert->add_option("--p", p_str)->required();
    cert->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(thr)) return cmd_threshold(c2_str, tol);
        if (app.got_subcommand(plot)) {
            return cmd_plot_data(lo_str, hi_str, step_str);
        }
        if (app.got_subcommand(crit)) {
            return cmd_critical(n, k, d_max, skip, aux_path);
        }
        if (app.got_subcommand(dec)) return cmd_decide(in_path, c1_str, c2_str);
        if (app.got_subcommand(real)) return cmd_realize(in_path, out_path);
        if (app.got_subcommand(red)) {
            return cmd_reduce(in_path, c2_str, eps_str, out_path, aux_path);
        }
        if (app.got_subcommand(ora)) {
            return cmd_oracle(in_path, budget, out_path);
        }
        if (app.got_subcommand(cert)) return cmd_certify(t, p_str, n);
    } catch (const InternalInconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hg3
