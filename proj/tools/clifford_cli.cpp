// Command-line driver: verification suites, application reports, and the
// Clark-Ocone decomposition, all emitted as deterministic JSON/CSV.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "clifford/applications.hpp"
#include "clifford/random.hpp"
#include "clifford/suites.hpp"

namespace {

using namespace clifford;

struct CommonOpts {
    int slots = 6;
    double width = 1.0;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--slots", opts.slots, "number of time slots")
        ->check(CLI::Range(1, 62));
    cmd->add_option("--width", opts.width, "slot width")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opts.seed, "seed for random tensors");
    cmd->add_option("--tol", opts.tol, "assertion tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", opts.out, "output path (stdout when omitted)");
    cmd->add_option("--format", opts.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
}

int write_output(const std::string& payload, const CommonOpts& opts) {
    if (opts.out.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(opts.out, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output path: " << opts.out << "\n";
        return 2;
    }
    out << payload;
    return 0;
}

int finish_report(const Report& rep, const CommonOpts& opts) {
    const int rc = write_output(emit_report(rep, opts.format), opts);
    if (rc != 0) return rc;
    return rep.all_pass() ? 0 : 1;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    Json j;
    in >> j;
    return j;
}

int run_verify(const CommonOpts& opts, const std::string& suite) {
    SuiteConfig cfg;
    cfg.slots = opts.slots;
    cfg.width = opts.width;
    cfg.seed = opts.seed;
    cfg.tolerance = opts.tol;
    cfg.suite = suite;
    Report rep = run_suite(cfg);
    return finish_report(rep, opts);
}

int run_oracle_check(const CommonOpts& opts) {
    SuiteConfig cfg;
    cfg.slots = opts.slots;
    cfg.width = opts.width;
    cfg.seed = opts.seed;
    cfg.tolerance = opts.tol;
    cfg.suite = "oracle";
    Report rep = run_suite(cfg);
    return finish_report(rep, opts);
}

int run_clark_ocone(const CommonOpts& opts, const std::string& input) {
    CliffordElement f = element_from_json(load_json(input));
    ClarkOcone co = clark_ocone(f);
    CliffordElement recon =
        CliffordElement::scalar(f.grid(), co.mean) + ito_integral(co.integrand);
    const double err = l2_norm(recon - f);

    Json out{{"grid", grid_to_json(f.grid())},
             {"mean", Json{{"re", co.mean.real()}, {"im", co.mean.imag()}}},
             {"integrand", process_to_json(co.integrand.process())},
             {"reconstruction_error", err}};
    return write_output(dump_json(out), opts);
}

int run_fourth_moment(const CommonOpts& opts, const std::string& input) {
    AntiTensor f = tensor_from_json(load_json(input));
    FourthMomentReport fm = fourth_moment(f, opts.tol);

    Report rep;
    rep.inputs = Json{{"grid", grid_to_json(f.grid())}, {"degree", fm.q}, {"input", input}};
    rep.quantities = Json{{"m2", fm.m2},
                          {"m4", fm.m4},
                          {"oracle_m4", fm.oracle_m4},
                          {"leading", fm.leading},
                          {"wedge_term", fm.wedge_term},
                          {"corrections", fm.corrections},
                          {"K", fm.correction_sum}};
    rep.check("fourth_moment.formula_vs_oracle",
              fm.leading + fm.wedge_term + fm.correction_sum, fm.oracle_m4,
              1e-9 * (1.0 + std::abs(fm.oracle_m4)));
    rep.check("fourth_moment.product_vs_oracle", fm.m4, fm.oracle_m4,
              1e-9 * (1.0 + std::abs(fm.oracle_m4)));
    return finish_report(rep, opts);
}

int run_claim2(const CommonOpts& opts, int dim) {
    const TimeGrid grid(dim, opts.width);
    std::vector<AntiTensor> fs;
    for (int i = 1; i <= 4; ++i) fs.push_back(AntiTensor::basis(grid, i));
    Claim2Report rep2 = claim2_witness(fs[0], fs[1], fs[2], fs[3], opts.tol);

    Report rep;
    rep.inputs = Json{{"grid", grid_to_json(grid)}, {"kernels", "e1..e4"}};
    rep.quantities = Json{{"K", rep2.k_value},
                          {"wedge2_norm", rep2.wedge2_norm},
                          {"wedge3_integral", rep2.wedge3_integral},
                          {"wedge3_expected", rep2.wedge3_expected},
                          {"m4", rep2.moments.m4},
                          {"oracle_m4", rep2.moments.oracle_m4}};
    rep.check("claim2.wedge2_vanishes", rep2.wedge2_norm, 0.0, 1e-12);
    rep.check("claim2.wedge3_integral", rep2.wedge3_integral, rep2.wedge3_expected, 1e-12);
    rep.check_true("claim2.K_nonzero", std::abs(rep2.k_value) > opts.tol);
    rep.check("claim2.m4_vs_oracle", rep2.moments.m4, rep2.moments.oracle_m4, 1e-9);
    return finish_report(rep, opts);
}

int run_concentrate(const CommonOpts& opts, const std::string& input, double xmax,
                    int xsteps, int ssteps, double smax) {
    CliffordElement f = element_from_json(load_json(input));
    std::vector<double> xs;
    for (int i = 0; i < xsteps; ++i) xs.push_back(xmax * i / std::max(1, xsteps - 1));
    ConcentrationReport con = concentration_tail(f, xs, ssteps, smax, opts.tol);

    Report rep;
    rep.inputs = Json{{"grid", grid_to_json(f.grid())},
                      {"input", input},
                      {"xmax", xmax},
                      {"xsteps", xsteps},
                      {"ssteps", ssteps},
                      {"smax", smax}};
    Json points = Json::array();
    for (const auto& p : con.points)
        points.push_back(Json{{"x", p.x},
                              {"tail", p.tail},
                              {"exp_bound", p.exp_bound},
                              {"lambert_bound", p.lambert_bound}});
    rep.quantities = Json{{"mean", con.mean},
                          {"norm_inf", con.norm_inf},
                          {"derivative_energy_inf", con.derivative_energy_inf},
                          {"lambert_scale", con.lambert_scale},
                          {"verdict", con.verdict},
                          {"interpolation_error", con.interpolation_error},
                          {"points", points}};
    rep.check_true("concentration.h_monotone", con.h_monotone);
    if (con.h_monotone) {
        double worst_exp = 0.0, worst_lam = 0.0;
        for (const auto& p : con.points) {
            worst_exp = std::max(worst_exp, p.tail - p.exp_bound);
            worst_lam = std::max(worst_lam, p.tail - p.lambert_bound);
        }
        rep.check_le("concentration.tail_below_exp_bound", worst_exp, opts.tol);
        rep.check_le("concentration.tail_below_lambert_bound", worst_lam, opts.tol);
    }
    return finish_report(rep, opts);
}

int run_logsobolev(const CommonOpts& opts, double phi1, double phim1) {
    // unit horizon: keep the requested slot count, set the width to 1/slots
    const TimeGrid grid(opts.slots, 1.0 / opts.slots);
    LogSobolevReport ls = log_sobolev_check(phi1, phim1, grid);

    Report rep;
    rep.inputs = Json{{"grid", grid_to_json(grid)}, {"phi1", phi1}, {"phim1", phim1}};
    rep.quantities = Json{{"a", ls.a},
                          {"b", ls.b},
                          {"entropy", ls.entropy},
                          {"energy", ls.energy},
                          {"bound", ls.bound},
                          {"sharper", ls.sharper}};
    rep.check_le("log_sobolev.entropy_below_bound", ls.entropy, ls.bound + opts.tol);
    return finish_report(rep, opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical chaos-expansion calculus with a matrix cross-check"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string suite = "all";
    std::string input;
    int dim = 4;
    double phi1 = 1.0, phim1 = 0.0;
    double xmax = 2.0, smax = 4.0;
    int xsteps = 20, ssteps = 200;

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    add_common(verify, opts);
    verify->add_option("--suite", suite, "algebra|malliavin|ito|oracle|applications|all");

    CLI::App* oracle = app.add_subcommand("oracle-check", "matrix homomorphism suite");
    add_common(oracle, opts);

    CLI::App* co = app.add_subcommand("clark-ocone", "martingale representation of an element");
    add_common(co, opts);
    co->add_option("--input", input, "element JSON path")->required();

    CLI::App* fm = app.add_subcommand("fourth-moment", "fourth-moment decomposition of a kernel");
    add_common(fm, opts);
    fm->add_option("--input", input, "tensor JSON path")->required();

    CLI::App* c2 = app.add_subcommand("claim2", "fourth-moment obstruction witness");
    add_common(c2, opts);
    c2->add_option("--dim", dim, "slot count (>= 4)")->check(CLI::Range(4, 62));

    CLI::App* conc = app.add_subcommand("concentrate", "spectral tail bound report");
    add_common(conc, opts);
    conc->add_option("--input", input, "element JSON path")->required();
    conc->add_option("--xmax", xmax, "largest deviation");
    conc->add_option("--xsteps", xsteps, "deviation grid points")->check(CLI::Range(1, 100000));
    conc->add_option("--ssteps", ssteps, "h sample count")->check(CLI::Range(2, 100000));
    conc->add_option("--smax", smax, "initial h sampling range");

    CLI::App* ls = app.add_subcommand("logsobolev", "entropy-energy comparison");
    add_common(ls, opts);
    ls->add_option("--phi1", phi1, "value on the +1 branch");
    ls->add_option("--phim1", phim1, "value on the -1 branch");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(opts, suite);
        if (oracle->parsed()) return run_oracle_check(opts);
        if (co->parsed()) return run_clark_ocone(opts, input);
        if (fm->parsed()) return run_fourth_moment(opts, input);
        if (c2->parsed()) return run_claim2(opts, dim);
        if (conc->parsed()) return run_concentrate(opts, input, xmax, xsteps, ssteps, smax);
        if (ls->parsed()) return run_logsobolev(opts, phi1, phim1);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
