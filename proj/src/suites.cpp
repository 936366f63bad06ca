#include "clifford/suites.hpp"

#include <algorithm>
#include <cmath>

#include "clifford/applications.hpp"
#include "clifford/random.hpp"

namespace clifford {

namespace {

double residual(const CliffordElement& a, const CliffordElement& b) {
    return l2_norm(a - b);
}

void suite_algebra(const SuiteConfig& cfg, const TimeGrid& grid, Report& rep) {
    RandomSource rng(cfg.seed ^ 0xa15ebfa9);
    const double tol = cfg.tolerance;

    double worst = 0.0;
    for (int i = 1; i <= grid.slots(); ++i) {
        for (int j = 1; j <= grid.slots(); ++j) {
            CliffordElement anti =
                multiply(CliffordElement::field(grid, i), CliffordElement::field(grid, j)) +
                multiply(CliffordElement::field(grid, j), CliffordElement::field(grid, i));
            CliffordElement expect =
                CliffordElement::scalar(grid, i == j ? 2.0 : 0.0);
            worst = std::max(worst, residual(anti, expect));
        }
    }
    rep.check_le("algebra.car_fields", worst, tol);

    worst = 0.0;
    for (int t = 0; t < 25; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        CliffordElement g = random_element(grid, 3, rng);
        CliffordElement h = random_element(grid, 3, rng);
        CliffordElement lhs = multiply(multiply(f, g), h);
        worst = std::max(worst,
                         residual(lhs, multiply(f, multiply(g, h))) / (1.0 + l2_norm(lhs)));
    }
    rep.check_le("algebra.associativity", worst, tol);

    worst = 0.0;
    double worst_star = 0.0;
    for (int t = 0; t < 25; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        CliffordElement g = random_element(grid, 3, rng);
        worst = std::max(worst,
                         std::abs(state_m(multiply(f, g)) - state_m(multiply(g, f))));
        worst_star = std::max(
            worst_star, residual(adjoint(multiply(f, g)),
                                 multiply(adjoint(g), adjoint(f))));
    }
    rep.check_le("algebra.trace_property", worst, tol);
    rep.check_le("algebra.adjoint_antihomomorphism", worst_star, tol);

    worst = 0.0;
    double worst_b2 = 0.0;
    for (int t = 0; t < 25; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        CliffordElement g = random_element(grid, 3, rng);
        worst = std::max(worst, residual(beta(multiply(f, g)),
                                         multiply(beta(f), beta(g))));
        worst = std::max(worst, residual(beta(adjoint(f)), adjoint(beta(f))));
        worst_b2 = std::max(worst_b2, residual(beta(beta(f)), f));
    }
    rep.check_le("algebra.beta_star_automorphism", worst, tol);
    rep.check_le("algebra.beta_involution", worst_b2, tol);

    worst = 0.0;
    for (int t = 0; t < 25; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        CliffordElement g = random_element(grid, 3, rng);
        worst = std::max(worst, std::abs(l2_inner(f, g) -
                                         state_m(multiply(adjoint(f), g))));
    }
    rep.check_le("algebra.inner_vs_state", worst, tol);

    // conditional expectation: module property and tower
    worst = 0.0;
    double worst_tower = 0.0;
    for (int t = 0; t < 20; ++t) {
        SlotSet a2 = SlotSet::prefix(rng.uniform_int(1, grid.slots()));
        SlotSet a1 = SlotSet::prefix(rng.uniform_int(0, a2.count()));
        CliffordElement f = random_element(grid, 3, rng);
        // v supported in a2
        CliffordElement v = cond_expect(random_element(grid, 3, rng), a2);
        worst = std::max(worst, std::abs(state_m(multiply(cond_expect(f, a2), v)) -
                                         state_m(multiply(f, v))));
        worst_tower = std::max(
            worst_tower, residual(cond_expect(cond_expect(f, a2), a1),
                                  cond_expect(f, a1)));
    }
    rep.check_le("algebra.cond_expect_module", worst, tol);
    rep.check_le("algebra.cond_expect_tower", worst_tower, tol);

    worst = 0.0;
    for (int n = 1; n <= std::min(3, grid.slots()); ++n) {
        AntiTensor f = random_tensor(grid, n, rng);
        worst = std::max(worst, std::abs(l2_norm(CliffordElement::chaos(f)) -
                                         std::sqrt(std::abs(inner(f, f)))));
    }
    rep.check_le("algebra.chaos_isometry", worst, tol);
}

void suite_malliavin(const SuiteConfig& cfg, const TimeGrid& grid, Report& rep) {
    RandomSource rng(cfg.seed ^ 0x9e3779b9);
    const double tol = cfg.tolerance;

    double worst = 0.0;
    for (int t = 0; t < 25; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        CliffordElement g = random_element(grid, 3, rng);
        ProcessElement df = derivative(f), dg = derivative(g), dfg = derivative(multiply(f, g));
        for (int k = 1; k <= grid.slots(); ++k) {
            CliffordElement lhs = dfg.at(k);
            CliffordElement rhs =
                multiply(df.at(k), g) + multiply(beta(f), dg.at(k));
            worst = std::max(worst, residual(lhs, rhs));
        }
    }
    rep.check_le("malliavin.graded_leibniz", worst, tol);

    worst = 0.0;
    for (int t = 0; t < 25; ++t) {
        CliffordElement f = random_element(grid, 4, rng);
        ProcessElement u = random_process(grid, 3, rng);
        const Complex lhs = process_inner(derivative(f), u);
        const Complex rhs = l2_inner(f, divergence(u));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    rep.check_le("malliavin.adjointness", worst, tol);

    // integration by parts on pure levels
    worst = 0.0;
    for (int t = 0; t < 15; ++t) {
        const int p = rng.uniform_int(0, std::min(3, grid.slots() - 1));
        ProcessElement u(grid);
        for (int k = 1; k <= grid.slots(); ++k)
            u.set(k, CliffordElement::chaos(random_tensor(grid, p, rng)));
        AntiTensor g = random_tensor(grid, p + 1, rng);
        const Complex lhs = state_m(multiply(divergence(u), CliffordElement::chaos(g)));
        Complex rhs = 0.0;
        ProcessElement dg = derivative(CliffordElement::chaos(g));
        for (int k = 1; k <= grid.slots(); ++k)
            rhs += state_m(multiply(beta(u.at(k)), dg.at(k)));
        rhs *= grid.width();
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    rep.check_le("malliavin.integration_by_parts", worst, tol);

    // {D_k, delta(e_j x .)} = width^{-1/2} delta_jk
    worst = 0.0;
    for (int t = 0; t < 15; ++t) {
        const int j = rng.uniform_int(1, grid.slots());
        const int p = rng.uniform_int(0, std::min(3, grid.slots()));
        CliffordElement F = CliffordElement::chaos(random_tensor(grid, p, rng));
        const double hval = 1.0 / std::sqrt(grid.width());
        ProcessElement u(grid);
        u.set(j, hval * F);
        CliffordElement delta_u = divergence(u);
        ProcessElement d_delta = derivative(delta_u);
        ProcessElement dF = derivative(F);
        for (int k = 1; k <= grid.slots(); ++k) {
            ProcessElement hdkF(grid);
            hdkF.set(j, hval * dF.at(k));
            CliffordElement lhs = d_delta.at(k) + divergence(hdkF);
            CliffordElement rhs = (k == j ? hval : 0.0) * F;
            worst = std::max(worst, residual(lhs, rhs));
        }
    }
    rep.check_le("malliavin.car_d_delta", worst, tol);

    // anticommuting derivatives
    worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        CliffordElement f = random_element(grid, 4, rng);
        ProcessElement df = derivative(f);
        for (int j = 1; j <= grid.slots(); ++j) {
            ProcessElement dj = derivative(df.at(j));
            for (int k = 1; k <= j; ++k)
                worst = std::max(worst, residual(derivative(df.at(k)).at(j),
                                                 (-1.0) * dj.at(k)));
        }
    }
    rep.check_le("malliavin.anticommuting_derivatives", worst, tol);

    // derivative vs conditional expectation
    worst = 0.0;
    for (int t = 0; t < 15; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        SlotSet a = SlotSet::prefix(rng.uniform_int(0, grid.slots()));
        ProcessElement lhs = derivative(cond_expect(f, a));
        ProcessElement df = derivative(f);
        for (int k = 1; k <= grid.slots(); ++k) {
            CliffordElement rhs = a.contains(k)
                ? cond_expect(df.at(k), a) : CliffordElement(grid);
            worst = std::max(worst, residual(lhs.at(k), rhs));
        }
    }
    rep.check_le("malliavin.derivative_cond_expect", worst, tol);

    worst = 0.0;
    for (int n = 0; n <= std::min(4, grid.slots()); ++n) {
        CliffordElement f = CliffordElement::chaos(random_tensor(grid, n, rng));
        worst = std::max(worst, residual(divergence(derivative(f)), double(n) * f));
    }
    rep.check_le("malliavin.number_operator", worst, tol);
}

void suite_ito(const SuiteConfig& cfg, const TimeGrid& grid, Report& rep) {
    RandomSource rng(cfg.seed ^ 0x517cc1b7);
    const double tol = cfg.tolerance;

    double worst = 0.0;
    for (int t = 0; t < 25; ++t) {
        ProcessElement u = random_adapted(grid, 3, rng);
        worst = std::max(worst, residual(divergence(u), ito_integral(u)));
    }
    rep.check_le("ito.delta_coincides", worst, tol);

    worst = 0.0;
    for (int t = 0; t < 25; ++t) {
        ProcessElement u = random_adapted(grid, 3, rng);
        const double lhs = l2_norm(ito_integral(u));
        const double rhs = process_norm(u);
        worst = std::max(worst, std::abs(lhs * lhs - rhs * rhs) / (1.0 + rhs * rhs));
    }
    rep.check_le("ito.isometry", worst, tol);

    // delta(1_A (x) F) = Psi(1_A) F for F supported on the complement
    worst = 0.0;
    for (int t = 0; t < 15; ++t) {
        SlotSet a;
        for (int k = 1; k <= grid.slots(); ++k)
            if (rng.unit() < 0.4) a.insert(k);
        CliffordElement f = cond_expect(random_element(grid, 3, rng), a.complement(grid));
        ProcessElement u(grid);
        const double ind = 1.0;  // indicator is 1 on slots of A
        for (int k : a.to_list()) u.set(k, ind * f);
        CliffordElement lhs = divergence(u);
        CliffordElement rhs =
            multiply(CliffordElement::chaos(indicator_vector(grid, a)), f);
        worst = std::max(worst, residual(lhs, rhs));
    }
    rep.check_le("ito.indicator_divergence", worst, tol);

    worst = 0.0;
    bool adapted_ok = true;
    for (int t = 0; t < 25; ++t) {
        CliffordElement f = random_element(grid, 4, rng);
        ClarkOcone co = clark_ocone(f);
        adapted_ok = adapted_ok && check_adapted(co.integrand.process());
        CliffordElement recon =
            CliffordElement::scalar(grid, co.mean) + ito_integral(co.integrand);
        worst = std::max(worst, residual(recon, f));
    }
    rep.check_le("ito.clark_ocone_reconstruction", worst, tol);
    rep.check_true("ito.clark_ocone_adapted", adapted_ok);

    // orthogonal martingale increments
    worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        ProcessElement u = random_adapted(grid, 3, rng);
        const double sqrt_w = std::sqrt(grid.width());
        for (int j = 1; j <= grid.slots(); ++j) {
            CliffordElement incj =
                multiply(sqrt_w * CliffordElement::field(grid, j), u.at(j));
            for (int k = j + 1; k <= grid.slots(); ++k) {
                CliffordElement inck =
                    multiply(sqrt_w * CliffordElement::field(grid, k), u.at(k));
                worst = std::max(worst, std::abs(l2_inner(incj, inck)));
            }
        }
    }
    rep.check_le("ito.orthogonal_increments", worst, tol);

    // martingale property of projections
    worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        const int k2 = rng.uniform_int(0, grid.slots());
        const int k1 = rng.uniform_int(0, k2);
        worst = std::max(worst,
                         residual(martingale_projection(martingale_projection(f, k2), k1),
                                  martingale_projection(f, k1)));
    }
    rep.check_le("ito.martingale_tower", worst, tol);
}

void suite_oracle(const SuiteConfig& cfg, const TimeGrid& grid, Report& rep) {
    RandomSource rng(cfg.seed ^ 0x2545f491);
    const double tol = 1e-9;

    double worst_mul = 0.0, worst_adj = 0.0, worst_state = 0.0, worst_vec = 0.0;
    for (int t = 0; t < 50; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        CliffordElement g = random_element(grid, 3, rng);
        MatrixRep mf = to_matrix(f), mg = to_matrix(g);
        worst_mul = std::max(worst_mul, (to_matrix(multiply(f, g)).mat - mf.mat * mg.mat)
                                            .cwiseAbs()
                                            .maxCoeff());
        worst_adj = std::max(
            worst_adj,
            (to_matrix(adjoint(f)).mat - mf.mat.adjoint().eval()).cwiseAbs().maxCoeff());
        worst_state = std::max(worst_state, std::abs(state_m(f) - mf.mat(0, 0)));
        const Eigen::VectorXcd col = mf.mat.col(0);
        worst_vec = std::max(worst_vec, std::abs(col.norm() - l2_norm(f)));
        worst_vec = std::max(worst_vec, residual(from_matrix(mf), f));
    }
    rep.check_le("oracle.homomorphism", worst_mul, tol);
    rep.check_le("oracle.adjoint", worst_adj, tol);
    rep.check_le("oracle.state", worst_state, tol);
    rep.check_le("oracle.fock_unitarity", worst_vec, tol);

    // derivative/divergence pairing recomputed through vacuum columns
    double worst_pair = 0.0;
    for (int t = 0; t < 10; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        ProcessElement u = random_process(grid, 2, rng);
        ProcessElement df = derivative(f);
        Complex lhs = 0.0;
        for (int k = 1; k <= grid.slots(); ++k)
            lhs += to_matrix(df.at(k)).mat.col(0).dot(to_matrix(u.at(k)).mat.col(0));
        lhs *= grid.width();
        const Complex rhs =
            to_matrix(f).mat.col(0).dot(to_matrix(divergence(u)).mat.col(0));
        worst_pair = std::max(worst_pair, std::abs(lhs - rhs));
    }
    rep.check_le("oracle.pairing_adjointness", worst_pair, tol);

    double worst_car = 0.0;
    const Eigen::Index dim = Eigen::Index(1) << grid.slots();
    for (int i = 1; i <= grid.slots(); ++i) {
        MatrixRep pi = field_matrix(grid, i);
        for (int j = 1; j <= grid.slots(); ++j) {
            MatrixRep pj = field_matrix(grid, j);
            Eigen::MatrixXcd anti = pi.mat * pj.mat + pj.mat * pi.mat;
            Eigen::MatrixXcd expect =
                (i == j ? 2.0 : 0.0) * Eigen::MatrixXcd::Identity(dim, dim);
            worst_car = std::max(worst_car, (anti - expect).cwiseAbs().maxCoeff());
        }
    }
    rep.check_le("oracle.car_matrices", worst_car, 1e-12);

    // spectral sanity on the first field
    auto spec = spectral(field_matrix(grid, 1));
    double wsum = 0.0;
    for (auto& [lambda, w] : spec) wsum += w;
    rep.check("oracle.spectral_weights_sum", wsum, 1.0, 1e-12);
    rep.check("oracle.field_tail_half", spectral_tail(spec, 1.0), 0.5, 1e-12);
    rep.check("oracle.field_norm", operator_norm(field_matrix(grid, 1)), 1.0, 1e-12);
}

void suite_applications(const SuiteConfig& cfg, const TimeGrid& grid, Report& rep) {
    RandomSource rng(cfg.seed ^ 0xb5297a4d);

    double worst_fm = 0.0, worst_parity = 0.0;
    for (int t = 0; t < 12; ++t) {
        const int q = 2 + t % 3;
        if (q > grid.slots()) continue;
        AntiTensor f = random_tensor(grid, q, rng, false);
        FourthMomentReport fm = fourth_moment(f);
        const double formula = fm.leading + fm.wedge_term + fm.correction_sum;
        worst_fm = std::max(worst_fm, std::abs(formula - fm.oracle_m4) /
                                          (1.0 + std::abs(fm.oracle_m4)));
        worst_fm = std::max(worst_fm, std::abs(fm.m4 - fm.oracle_m4) /
                                          (1.0 + std::abs(fm.oracle_m4)));
        for (int r = 1; r <= q - 1; ++r)
            if ((q + r) % 2)
                worst_parity =
                    std::max(worst_parity, plain_l2_norm(contract_hat(f, f, r)));
    }
    rep.check_le("applications.fourth_moment_vs_oracle", worst_fm, 1e-9);
    rep.check_le("applications.parity_vanishing", worst_parity, 0.0);

    double worst_var = 0.0;
    for (int t = 0; t < 9; ++t) {
        const int q = 2 + t % 3;
        if (q > grid.slots()) continue;
        AntiTensor f = random_tensor(grid, q, rng, false);
        CarreVariance v = variance_carre(f);
        worst_var = std::max(worst_var,
                             std::abs(v.closed_form - v.direct) / (1.0 + v.direct));
    }
    rep.check_le("applications.variance_dual_route", worst_var, 1e-9);

    // two-point functional calculus vs the matrix route
    double worst_tp = 0.0;
    for (int t = 0; t < 20; ++t) {
        AntiTensor z = random_tensor(grid, 1, rng, false);
        if (plain_l2_norm(z) < 0.2) continue;
        const double c0 = rng.symmetric(), c1 = rng.symmetric(), c2 = rng.symmetric();
        const auto phi = [&](double x) { return Complex(c0 + c1 * x + c2 * x * x); };
        const double nz = plain_l2_norm(z);
        CliffordElement lhs = two_point(phi(nz), phi(-nz), z);
        CliffordElement rhs = from_matrix(
            functional_calculus(to_matrix(CliffordElement::chaos(z)), phi));
        worst_tp = std::max(worst_tp, residual(lhs, rhs));
    }
    rep.check_le("applications.two_point_vs_matrix", worst_tp, 1e-10);

    // log-Sobolev on random two-point functions
    const TimeGrid unit_grid(grid.slots(), 1.0 / grid.slots());
    double worst_ls = 0.0;
    for (int t = 0; t < 50; ++t) {
        const double p = rng.symmetric() * 2.0, m = rng.symmetric() * 2.0;
        LogSobolevReport ls = log_sobolev_check(p, m, unit_grid);
        worst_ls = std::max(worst_ls, ls.entropy - ls.bound);
    }
    rep.check_le("applications.log_sobolev", worst_ls, 1e-10);

    double worst_w = 0.0;
    for (int t = 0; t < 30; ++t) {
        const double y = 10.0 * rng.unit();
        const double w = lambert_w(y);
        worst_w = std::max(worst_w, std::abs(w * std::exp(w) - y));
    }
    rep.check_le("applications.lambert_w_residual", worst_w, 1e-12);

    // spectral tail bound on a single field, kept small to stay fast
    {
        const TimeGrid small(std::min(3, grid.slots()), grid.width());
        ConcentrationReport con = concentration_tail(
            CliffordElement::field(small, 1), {0.0, 0.4, 0.8}, 80, 2.5);
        double worst_tail = 1.0;
        if (con.h_monotone) {
            worst_tail = 0.0;
            for (const auto& p : con.points) {
                worst_tail = std::max(worst_tail, p.tail - p.exp_bound);
                worst_tail = std::max(worst_tail, p.tail - p.lambert_bound);
            }
        }
        rep.check_le("applications.concentration_field", worst_tail, 1e-10);
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"algebra", "malliavin", "ito", "oracle", "applications"};
}

Report run_suite(const SuiteConfig& config) {
    const TimeGrid grid(config.slots, config.width);

    bool known = config.suite == "all";
    for (const auto& name : suite_names()) known = known || config.suite == name;
    if (!known) throw std::invalid_argument("run_suite: unknown suite '" + config.suite + "'");

    Report rep;
    rep.inputs = Json{{"slots", config.slots},
                      {"width", config.width},
                      {"seed", config.seed},
                      {"tolerance", config.tolerance},
                      {"suite", config.suite}};

    const bool all = config.suite == "all";
    if (all || config.suite == "algebra") suite_algebra(config, grid, rep);
    if (all || config.suite == "malliavin") suite_malliavin(config, grid, rep);
    if (all || config.suite == "ito") suite_ito(config, grid, rep);
    if (all || config.suite == "oracle") suite_oracle(config, grid, rep);
    if (all || config.suite == "applications") suite_applications(config, grid, rep);

    int passed = 0;
    for (const auto& a : rep.assertions) passed += a.pass ? 1 : 0;
    rep.quantities["assertions_total"] = static_cast<int>(rep.assertions.size());
    rep.quantities["assertions_passed"] = passed;
    return rep;
}

}  // namespace clifford
