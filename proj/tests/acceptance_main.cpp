// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are pinned here, not configurable.
#include <chrono>
#include <cstdio>
#include <vector>

#include "clifford/applications.hpp"
#include "clifford/random.hpp"
#include "clifford/suites.hpp"

using namespace clifford;

namespace {

int failures = 0;

void report(int number, const char* title, bool pass, double value) {
    std::printf("%s criterion %2d: %-55s (%.3e)\n", pass ? "PASS" : "FAIL", number, title,
                value);
    if (!pass) ++failures;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. representation is multiplicative over 200 random pairs at d = 6
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    TimeGrid grid(6, 1.0);
    RandomSource rng(1001);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        CliffordElement g = random_element(grid, 3, rng);
        worst = std::max(worst, (to_matrix(multiply(f, g)).mat -
                                 to_matrix(f).mat * to_matrix(g).mat)
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    const double dt = elapsed_s(t0);
    report(1, "matrix homomorphism, 200 pairs, d=6", worst <= 1e-9 && dt <= 10.0, worst);
}

// 2. anticommutation of fields, exact to 1e-12, chaos and matrix side
void criterion_2() {
    double worst = 0.0;
    for (int d = 1; d <= 8; ++d) {
        TimeGrid grid(d, 1.0);
        const Eigen::Index dim = Eigen::Index(1) << d;
        for (int i = 1; i <= d; ++i) {
            for (int j = 1; j <= d; ++j) {
                CliffordElement anti =
                    multiply(CliffordElement::field(grid, i), CliffordElement::field(grid, j)) +
                    multiply(CliffordElement::field(grid, j), CliffordElement::field(grid, i));
                worst = std::max(
                    worst, l2_norm(anti - CliffordElement::scalar(grid, i == j ? 2.0 : 0.0)));
                Eigen::MatrixXcd m = field_matrix(grid, i).mat * field_matrix(grid, j).mat +
                                     field_matrix(grid, j).mat * field_matrix(grid, i).mat -
                                     (i == j ? 2.0 : 0.0) *
                                         Eigen::MatrixXcd::Identity(dim, dim);
                worst = std::max(worst, m.cwiseAbs().maxCoeff());
            }
        }
    }
    report(2, "field anticommutators, all i,j, d<=8", worst <= 1e-12, worst);
}

// 3. product formula, term by term against the dense contraction reference
void criterion_3() {
    TimeGrid grid(6, 1.0);
    RandomSource rng(1003);
    double worst = 0.0;
    for (int p = 0; p <= 3; ++p) {
        for (int q = 0; q <= 3; ++q) {
            AntiTensor f = random_tensor(grid, p, rng);
            AntiTensor g = random_tensor(grid, q, rng);
            CliffordElement reference(grid);
            for (int r = 0; r <= std::min(p, q); ++r) {
                AntiTensor dense_term = contract_hat_dense(f, g, r);
                worst = std::max(worst,
                                 max_coeff_diff(contract_hat(f, g, r), dense_term));
                reference =
                    reference +
                    (factorial(r) * binomial(p, r) * binomial(q, r)) *
                        CliffordElement::chaos(dense_term);
            }
            CliffordElement product =
                multiply(CliffordElement::chaos(f), CliffordElement::chaos(g));
            worst = std::max(worst, l2_norm(product - reference));
        }
    }
    report(3, "product formula vs dense reference, p,q<=3, d=6", worst <= 1e-10, worst);
}

// 4. pairing duality of derivative and divergence
void criterion_4() {
    TimeGrid grid(8, 1.0);
    RandomSource rng(1004);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        CliffordElement f = random_element(grid, 4, rng);
        ProcessElement u = random_process(grid, 3, rng);
        worst = std::max(worst, std::abs(process_inner(derivative(f), u) -
                                         l2_inner(f, divergence(u))));
    }
    report(4, "adjointness over 100 random pairs, d=8", worst <= 1e-10, worst);
}

// 5. anticommutator of derivative and divergence on elementary tensors
void criterion_5() {
    double worst = 0.0;
    RandomSource rng(1005);
    for (int t = 0; t < 50; ++t) {
        TimeGrid grid(6, t % 2 ? 0.5 : 1.0);
        const int j = rng.uniform_int(1, grid.slots());
        const int p = rng.uniform_int(0, 4);
        CliffordElement F = CliffordElement::chaos(random_tensor(grid, p, rng));
        const double hval = 1.0 / std::sqrt(grid.width());  // e_j sampled on its slot
        ProcessElement u(grid);
        u.set(j, hval * F);
        ProcessElement d_delta = derivative(divergence(u));
        ProcessElement dF = derivative(F);
        for (int k = 1; k <= grid.slots(); ++k) {
            ProcessElement shifted(grid);
            shifted.set(j, hval * dF.at(k));
            CliffordElement lhs = d_delta.at(k) + divergence(shifted);
            worst = std::max(worst, l2_norm(lhs - (k == j ? hval : 0.0) * F));
        }
    }
    report(5, "derivative/divergence anticommutator, incl. width 0.5", worst <= 1e-10,
           worst);
}

// 6. graded product rule and integration by parts
void criterion_6() {
    TimeGrid grid(6, 1.0);
    RandomSource rng(1006);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        CliffordElement g = random_element(grid, 3, rng);
        ProcessElement dfg = derivative(multiply(f, g));
        ProcessElement df = derivative(f), dg = derivative(g);
        for (int k = 1; k <= grid.slots(); ++k)
            worst = std::max(worst, l2_norm(dfg.at(k) - multiply(df.at(k), g) -
                                            multiply(beta(f), dg.at(k))));

        const int p = rng.uniform_int(0, 3);
        ProcessElement u(grid);
        for (int k = 1; k <= grid.slots(); ++k)
            u.set(k, CliffordElement::chaos(random_tensor(grid, p, rng)));
        AntiTensor h = random_tensor(grid, p + 1, rng);
        Complex rhs = 0.0;
        ProcessElement dh = derivative(CliffordElement::chaos(h));
        for (int k = 1; k <= grid.slots(); ++k)
            rhs += state_m(multiply(beta(u.at(k)), dh.at(k)));
        rhs *= grid.width();
        worst = std::max(
            worst,
            std::abs(state_m(multiply(divergence(u), CliffordElement::chaos(h))) - rhs));
    }
    report(6, "graded product rule + integration by parts", worst <= 1e-10, worst);
}

// 7. martingale representation reconstructs and is adapted
void criterion_7() {
    TimeGrid grid(8, 1.0);
    RandomSource rng(1007);
    double worst = 0.0;
    bool adapted = true;
    for (int t = 0; t < 100; ++t) {
        CliffordElement f = random_element(grid, 4, rng);
        ClarkOcone co = clark_ocone(f);
        adapted = adapted && check_adapted(co.integrand.process());
        worst = std::max(worst, l2_norm(CliffordElement::scalar(grid, co.mean) +
                                        ito_integral(co.integrand) - f));
    }
    report(7, "martingale representation, 100 random elements, d=8",
           worst <= 1e-10 && adapted, worst);
}

// 8. divergence equals the stochastic integral on adapted processes; isometry
void criterion_8() {
    TimeGrid grid(6, 1.0);
    RandomSource rng(1008);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        ProcessElement u = random_adapted(grid, 3, rng);
        CliffordElement integral = ito_integral(u);
        worst = std::max(worst, l2_norm(divergence(u) - integral));
        worst = std::max(worst, std::abs(std::pow(l2_norm(integral), 2) -
                                         std::pow(process_norm(u), 2)));
    }
    report(8, "divergence = stochastic integral + isometry", worst <= 1e-10, worst);
}

// 9. self-contraction norm identity, corrected constant
void criterion_9() {
    RandomSource rng(1009);
    double worst = 0.0;
    bool exact_zero = true;
    for (int q = 2; q <= 4; ++q) {
        TimeGrid grid(q == 4 ? 8 : 6, 1.0);
        for (int t = 0; t < 10; ++t) {
            AntiTensor f = random_tensor(grid, q, rng, false);
            f = (1.0 / std::sqrt(std::abs(inner(f, f)))) * f;
            for (int r = 0; r < q; ++r) {
                const double lhs = std::pow(plain_l2_norm(contract_hat(f, f, r)), 2);
                double integral = 0.0;
                for (int k = 1; k <= grid.slots(); ++k)
                    integral += std::pow(plain_l2_norm(contract_hat(f.slice(k), f, r)), 2);
                integral *= grid.width();
                if ((q + r) % 2) {
                    exact_zero = exact_zero && plain_l2_norm(contract_hat(f, f, r)) == 0.0;
                } else {
                    worst = std::max(worst, std::abs(lhs - integral));
                }
            }
        }
    }
    report(9, "self-contraction norm identity, q in {2,3,4}", worst <= 1e-10 && exact_zero,
           worst);
}

// 10. fourth-moment decomposition vs the oracle; the doubled leading term
//     and the uncorrected brace must both fail
void criterion_10() {
    RandomSource rng(1010);
    double worst = 0.0, worst_alt_leading = 0.0, worst_alt_brace = 0.0;
    for (int t = 0; t < 50; ++t) {
        const int q = 2 + t % 3;
        TimeGrid grid(6, 1.0);
        AntiTensor f = random_tensor(grid, q, rng, false);
        f = (1.0 / std::sqrt(std::abs(inner(f, f)))) * f;
        FourthMomentReport fm = fourth_moment(f);
        const double formula = fm.leading + fm.wedge_term + fm.correction_sum;
        worst = std::max(worst, std::abs(formula - fm.oracle_m4));
        worst_alt_leading = std::max(
            worst_alt_leading,
            std::abs(2.0 * fm.leading + fm.wedge_term + fm.correction_sum - fm.oracle_m4));
        // brace with the spurious 1/(q-r)^2 on the parity-even part
        double k_alt = 0.0;
        for (int r = 1; r <= q - 1; ++r) {
            const double parity = ((q + r) % 2) ? -1.0 : 1.0;
            const double pre = factorial(r) * factorial(r) * factorial(2 * q - 2 * r) *
                               std::pow(binomial(q, r), 4) / q;
            const double brace =
                r * (1.0 + parity) / double((q - r) * (q - r)) + 0.5 * parity * (q - r);
            k_alt += pre * brace * fm.slice_integrals[r - 1];
        }
        worst_alt_brace = std::max(
            worst_alt_brace, std::abs(fm.leading + fm.wedge_term + k_alt - fm.oracle_m4));
    }
    const bool pass =
        worst <= 1e-9 && worst_alt_leading > 1e-9 && worst_alt_brace > 1e-9;
    report(10, "fourth moment vs oracle; typo variants must fail", pass, worst);
}

// 11. fourth-moment obstruction at d = 4
void criterion_11() {
    TimeGrid grid(4, 1.0);
    Claim2Report rep = claim2_witness(AntiTensor::basis(grid, 1), AntiTensor::basis(grid, 2),
                                      AntiTensor::basis(grid, 3), AntiTensor::basis(grid, 4));
    double worst_field_k = 0.0;
    RandomSource rng(1011);
    for (int t = 0; t < 10; ++t) {
        AntiTensor z = random_tensor(grid, 1, rng, false);
        z = (1.0 / plain_l2_norm(z)) * z;
        FourthMomentReport fm = fourth_moment(z);
        worst_field_k =
            std::max(worst_field_k,
                     std::abs(fm.oracle_m4 - fm.leading - fm.wedge_term - fm.correction_sum));
    }
    const bool pass = rep.wedge2_norm <= 1e-12 &&
                      std::abs(rep.wedge3_integral - 1.0 / 2304.0) <= 1e-12 &&
                      std::abs(rep.k_value + 1.0) <= 1e-9 && worst_field_k <= 1e-10;
    report(11, "obstruction witness at d=4 and first-order chaos", pass,
           std::abs(rep.k_value + 1.0));
}

// 12. variance identity, both routes; carre pairing matches (1/q) scaling
void criterion_12() {
    RandomSource rng(1012);
    double worst = 0.0;
    for (int t = 0; t < 30; ++t) {
        const int q = 2 + t % 3;
        TimeGrid grid(6, 1.0);
        AntiTensor f = random_tensor(grid, q, rng, false);
        f = (1.0 / std::sqrt(std::abs(inner(f, f)))) * f;
        CarreVariance v = variance_carre(f);
        worst = std::max(worst, std::abs(v.closed_form - v.direct));

        CliffordElement F = CliffordElement::chaos(f);
        ProcessElement df = derivative(F);
        ProcessElement dinv = derivative(inv_number(F));
        CliffordElement pairing(grid);
        for (int k = 1; k <= grid.slots(); ++k)
            pairing = pairing + multiply(adjoint(df.at(k)), dinv.at(k));
        pairing = grid.width() * pairing;
        worst = std::max(worst, l2_norm(pairing - (1.0 / q) * carre_norm(F)));
    }
    report(12, "carre variance closed form = direct; pairing = carre/q", worst <= 1e-9,
           worst);
}

// 13. spectral tails dominated by the h-transform bound
void criterion_13() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    double worst = 0.0;

    // closed form for a single field
    {
        TimeGrid grid(3, 1.0);
        std::vector<double> xs;
        for (int i = 0; i < 20; ++i) xs.push_back(0.9 * i / 19.0);
        ConcentrationReport rep =
            concentration_tail(CliffordElement::field(grid, 1), xs, 200, 2.0);
        pass = pass && rep.verdict == "ok";
        for (std::size_t i = 0; i < rep.s_grid.size(); ++i) {
            const double s = rep.s_grid[i];
            worst = std::max(worst,
                             std::abs(rep.h_samples[i] - std::sinh(s) * std::exp(s)));
        }
        pass = pass && worst <= 1e-8;
        for (const auto& p : rep.points) {
            pass = pass && p.tail <= p.exp_bound + 1e-12;
            pass = pass && p.tail <= p.lambert_bound + 1e-12;
            if (p.x > 0.0) pass = pass && std::abs(p.tail - 0.5) < 1e-12;
        }
    }

    // random self-adjoint elements with grid-verified monotone h
    RandomSource rng(1013);
    int verified = 0, attempts = 0;
    while (verified < 20 && attempts < 60) {
        ++attempts;
        TimeGrid grid(5, 1.0);
        CliffordElement f = random_self_adjoint(grid, 3, rng);
        f = (1.0 / std::max(1.0, l2_norm(f))) * f;
        std::vector<double> xs;
        const double span = 1.5;
        for (int i = 0; i < 20; ++i) xs.push_back(span * i / 19.0);
        ConcentrationReport rep = concentration_tail(f, xs, 120, 3.0);
        if (rep.verdict != "ok") continue;
        ++verified;
        for (const auto& p : rep.points)
            pass = pass && p.tail <= p.exp_bound + 1e-10 &&
                   p.tail <= p.lambert_bound + 1e-10;
    }
    pass = pass && verified == 20;
    const double dt = elapsed_s(t0);
    pass = pass && dt <= 60.0;
    report(13, "concentration bounds dominate spectral tails", pass, dt);
}

// 14. entropy-energy inequality; closed-form check at (1, 0)
void criterion_14() {
    TimeGrid grid(4, 0.25);
    RandomSource rng(1014);
    bool pass = true;
    for (int t = 0; t < 50; ++t) {
        LogSobolevReport ls =
            log_sobolev_check(2.0 * rng.symmetric(), 2.0 * rng.symmetric(), grid);
        pass = pass && ls.entropy <= ls.bound + 1e-10;
    }
    LogSobolevReport half = log_sobolev_check(1.0, 0.0, grid);
    const double resid = std::abs(half.entropy - 0.5 * std::log(2.0));
    pass = pass && resid <= 1e-8;
    report(14, "entropy bounded by derivative energy; closed form", pass, resid);
}

// 15. characteristic-function distance dominated by the L2 distance
void criterion_15() {
    TimeGrid grid(5, 1.0);
    RandomSource rng(1015);
    bool pass = true;
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        CliffordElement g = random_self_adjoint(grid, 3, rng);
        CliffordElement f = g - CliffordElement::scalar(grid, state_m(g));
        AntiTensor z = random_tensor(grid, 1, rng, false);
        z = (1.0 / plain_l2_norm(z)) * z;
        for (double tval : {0.5, 1.0, 2.0}) {
            CharacteristicDistance cd = characteristic_distance(f, z, tval);
            worst = std::max(worst, cd.lhs - cd.middle);
            pass = pass && cd.lhs <= cd.middle + 1e-10;
        }
    }
    report(15, "characteristic distance below the L2 distance", pass, worst);
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    criterion_14();
    criterion_15();

    // 16. everything above plus the default verification battery in budget
    SuiteConfig cfg;
    Report rep = run_suite(cfg);
    const double total = elapsed_s(t0);
    report(16, "full run under 120 s at default configuration",
           rep.all_pass() && total <= 120.0, total);

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
