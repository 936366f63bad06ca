#include "clifford/applications.hpp"

#include <algorithm>
#include <cmath>

namespace clifford {

namespace {

void require_real_kernel(const AntiTensor& f, double tol, const char* where) {
    double worst = 0.0;
    for (const auto& [m, c] : f.coeffs()) worst = std::max(worst, std::abs(c.imag()));
    if (worst > tol * (1.0 + f.max_abs_coeff()))
        throw std::invalid_argument(std::string(where) + ": kernel must be real");
}

/// width * sum_k |f(k,.) ^_r f|^2 with plain norms.
double slice_contraction_integral(const AntiTensor& f, int r) {
    double acc = 0.0;
    for (int k = 1; k <= f.grid().slots(); ++k) {
        const double nk = plain_l2_norm(contract_hat(f.slice(k), f, r));
        acc += nk * nk;
    }
    return f.grid().width() * acc;
}

double slice_wedge_integral(const AntiTensor& f) {
    double acc = 0.0;
    for (int k = 1; k <= f.grid().slots(); ++k) {
        const double nk = plain_l2_norm(wedge(f.slice(k), f));
        acc += nk * nk;
    }
    return f.grid().width() * acc;
}

}  // namespace

FourthMomentReport fourth_moment(const AntiTensor& f, double tol) {
    const int q = f.degree();
    if (q < 1) throw std::invalid_argument("fourth_moment: degree >= 1 required");
    require_real_kernel(f, tol, "fourth_moment");

    FourthMomentReport rep;
    rep.q = q;

    const CliffordElement F = CliffordElement::chaos(f);
    const CliffordElement F2 = multiply(F, F);
    rep.m2 = state_m(F2).real();
    rep.m4 = state_m(multiply(F2, F2)).real();

    MatrixRep M = to_matrix(F);
    Eigen::MatrixXcd M2 = M.mat * M.mat;
    rep.oracle_m4 = (M2 * M2)(0, 0).real();

    rep.leading = 2.0 * rep.m2 * rep.m2;

    const double parity_q = (q % 2) ? -1.0 : 1.0;
    rep.wedge_term = 0.5 * parity_q * factorial(2 * q) * slice_wedge_integral(f);

    rep.correction_sum = 0.0;
    for (int r = 1; r <= q - 1; ++r) {
        if ((q + r) % 2 && !contract_hat(f, f, r).is_zero())
            throw std::logic_error("fourth_moment: odd-parity self-contraction survived");
        const double integral = slice_contraction_integral(f, r);
        const double parity = ((q + r) % 2) ? -1.0 : 1.0;
        const double prefactor = factorial(r) * factorial(r) * factorial(2 * q - 2 * r) *
                                 std::pow(binomial(q, r), 4) / q;
        const double brace = r * (1.0 + parity) + 0.5 * parity * (q - r);
        const double term = prefactor * brace * integral;
        rep.corrections.push_back(term);
        rep.slice_integrals.push_back(integral);
        rep.correction_sum += term;
    }
    return rep;
}

CarreVariance variance_carre(const AntiTensor& f, double tol) {
    const int q = f.degree();
    if (q < 1) throw std::invalid_argument("variance_carre: degree >= 1 required");
    require_real_kernel(f, tol, "variance_carre");

    CarreVariance out;
    for (int r = 1; r <= q - 1; ++r) {
        if ((q + r) % 2) continue;
        const double norm = plain_l2_norm(contract_hat(f, f, r));
        out.closed_form += double(r) * r * factorial(r) * factorial(r) *
                           std::pow(binomial(q, r), 4) * factorial(2 * q - 2 * r) * norm * norm;
    }
    const CliffordElement g = carre_norm(CliffordElement::chaos(f));
    out.direct = std::abs(l2_inner(g, g)) - std::norm(state_m(g));
    return out;
}

Claim1Report claim1_report(const AntiTensor& f, double tol) {
    const int q = f.degree();
    if (q < 1) throw std::invalid_argument("claim1_report: degree >= 1 required");
    require_real_kernel(f, tol, "claim1_report");

    Claim1Report rep{q, CliffordElement(f.grid()), 0.0, variance_carre(f, tol), {}};
    rep.quantity = (1.0 / q) * carre_norm(CliffordElement::chaos(f));
    const double norm2 = std::abs(inner(f, f));
    rep.distance_to_constant =
        l2_norm(rep.quantity - CliffordElement::scalar(f.grid(), norm2));
    for (int r = 1; r <= q - 1; ++r) {
        if ((q + r) % 2) continue;
        rep.contraction_norms.emplace_back(r, plain_l2_norm(contract_hat(f, f, r)));
    }
    return rep;
}

Claim2Report claim2_witness(const AntiTensor& f1, const AntiTensor& f2,
                            const AntiTensor& f3, const AntiTensor& f4, double tol) {
    const AntiTensor* parts[4] = {&f1, &f2, &f3, &f4};
    const TimeGrid& grid = f1.grid();
    if (grid.slots() < 4)
        throw std::invalid_argument("claim2_witness: at least 4 slots required");
    for (int i = 0; i < 4; ++i) {
        if (parts[i]->degree() != 1)
            throw std::invalid_argument("claim2_witness: degree-1 kernels required");
        require_real_kernel(*parts[i], tol, "claim2_witness");
        if (plain_l2_norm(*parts[i]) <= tol)
            throw std::invalid_argument("claim2_witness: kernels must be nonzero");
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(inner(*parts[i], *parts[j])) >
                tol * (1.0 + parts[i]->max_abs_coeff() * parts[j]->max_abs_coeff()))
                throw std::invalid_argument("claim2_witness: kernels must be orthogonal");
    }

    const AntiTensor f = wedge(wedge(f1, f2), wedge(f3, f4));

    Claim2Report rep;
    rep.moments = fourth_moment(f, tol);
    rep.k_value = rep.moments.correction_sum;
    rep.wedge2_norm = plain_l2_norm(contract_hat(f, f, 2));
    rep.wedge3_integral = slice_contraction_integral(f, 3);
    double prod = 1.0;
    for (const AntiTensor* z : parts) {
        const double n2 = std::abs(inner(*z, *z));
        prod *= n2 * n2;
    }
    rep.wedge3_expected = 36.0 * 4.0 / std::pow(factorial(4), 4) * prod;
    if (rep.wedge2_norm > tol)
        throw std::logic_error("claim2_witness: order-2 self-contraction survived");
    if (std::abs(rep.wedge3_integral - rep.wedge3_expected) >
        tol * (1.0 + rep.wedge3_expected))
        throw std::logic_error("claim2_witness: order-3 slice integral off its closed form");
    return rep;
}

double lambert_w(double y) {
    if (y < 0.0) throw std::invalid_argument("lambert_w: negative argument");
    if (y == 0.0) return 0.0;
    double w = y < 1.0 ? y / (1.0 + y) : std::log(y) - std::log(std::max(1.0, std::log(y)));
    if (!(w > 0.0)) w = 0.5;
    for (int it = 0; it < 100; ++it) {
        const double ew = std::exp(w);
        const double resid = w * ew - y;
        const double step = resid / (ew * (1.0 + w));
        double next = w - step;
        if (next < 0.0) next = w / 2.0;
        if (std::abs(next - w) <= 1e-16 * (1.0 + std::abs(next))) {
            w = next;
            break;
        }
        w = next;
    }
    return w;
}

namespace {

/// integral of the piecewise-linear inverse of h over [0, x]: the knots are
/// (h_i, s_i), so each segment contributes a trapezoid in the y-variable.
double inverse_integral(const std::vector<double>& s, const std::vector<double>& h, double x) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const double y0 = h[i], y1 = h[i + 1];
        if (y1 <= y0) continue;  // flat stretch contributes no area
        const double hi = std::min(x, y1);
        if (hi <= y0) break;
        const double s_at_hi = s[i] + (s[i + 1] - s[i]) * (hi - y0) / (y1 - y0);
        acc += 0.5 * (hi - y0) * (s[i] + s_at_hi);
        if (hi < y1) break;
    }
    return acc;
}

}  // namespace

ConcentrationReport concentration_tail(const CliffordElement& f,
                                       const std::vector<double>& x_grid,
                                       int s_steps, double s_max, double tol) {
    if (s_steps < 2) throw std::invalid_argument("concentration_tail: need at least 2 s-steps");
    const TimeGrid& grid = f.grid();
    const CliffordElement dev = f - adjoint(f);
    if (dev.max_abs_coeff() > tol * (1.0 + f.max_abs_coeff()))
        throw std::invalid_argument("concentration_tail: element must be self-adjoint");

    ConcentrationReport rep;
    rep.mean = state_m(f).real();

    const MatrixRep M = to_matrix(f);
    rep.norm_inf = operator_norm(M);
    const auto spec = spectral(M, tol);

    const ProcessElement df = derivative(f);
    std::vector<double> dnorm(grid.slots() + 1, 0.0);
    double energy = 0.0;
    for (int k = 1; k <= grid.slots(); ++k) {
        dnorm[k] = operator_norm(to_matrix(df.at(k)));
        energy += dnorm[k] * dnorm[k];
    }
    rep.derivative_energy_inf = grid.width() * energy;
    rep.lambert_scale =
        rep.norm_inf > 0.0 ? rep.derivative_energy_inf / (2.0 * rep.norm_inf) : 0.0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M.mat);
    const auto exp_of = [&](double scale) {
        Eigen::VectorXcd d(es.eigenvalues().size());
        for (Eigen::Index i = 0; i < d.size(); ++i)
            d(i) = std::exp(scale * es.eigenvalues()(i));
        return Eigen::MatrixXcd(es.eigenvectors() * d.asDiagonal() *
                                es.eigenvectors().adjoint());
    };

    const double x_max =
        x_grid.empty() ? 0.0 : *std::max_element(x_grid.begin(), x_grid.end());

    const auto h_at = [&](double s) {
        const Eigen::MatrixXcd e_plus = exp_of(s);
        const Eigen::MatrixXcd e_minus = exp_of(-s);
        const CliffordElement pulled = from_matrix(MatrixRep{grid, e_plus});
        const ProcessElement dpulled = derivative(pulled);
        double acc = 0.0;
        for (int k = 1; k <= grid.slots(); ++k) {
            if (dnorm[k] == 0.0) continue;
            const Eigen::MatrixXcd prod = e_minus * to_matrix(dpulled.at(k)).mat;
            acc += dnorm[k] * operator_norm(MatrixRep{grid, prod});
        }
        return grid.width() * acc;
    };

    // sample h, extending the grid (same spacing) until it covers x_max
    const double ds = s_max / (s_steps - 1);
    rep.s_grid.clear();
    rep.h_samples.clear();
    for (int i = 0; i < s_steps; ++i) {
        const double s = i * ds;
        rep.s_grid.push_back(s);
        rep.h_samples.push_back(h_at(s));
    }
    int guard = 0;
    while (rep.h_samples.back() < x_max && guard++ < 8 * s_steps) {
        const double s = rep.s_grid.back() + ds;
        rep.s_grid.push_back(s);
        rep.h_samples.push_back(h_at(s));
    }

    rep.h_monotone = true;
    for (std::size_t i = 0; i + 1 < rep.h_samples.size(); ++i)
        if (rep.h_samples[i + 1] < rep.h_samples[i] - tol * (1.0 + rep.h_samples[i]))
            rep.h_monotone = false;
    rep.verdict = rep.h_monotone ? "ok" : "hypothesis-failed";

    // interpolation-error estimate: redo the exponent integral on every
    // second sample and compare at the largest x
    if (rep.h_monotone && x_max > 0.0 && rep.s_grid.size() >= 5) {
        std::vector<double> s2, h2;
        for (std::size_t i = 0; i < rep.s_grid.size(); i += 2) {
            s2.push_back(rep.s_grid[i]);
            h2.push_back(rep.h_samples[i]);
        }
        rep.interpolation_error = std::abs(inverse_integral(rep.s_grid, rep.h_samples, x_max) -
                                           inverse_integral(s2, h2, x_max));
    }

    for (double x : x_grid) {
        ConcentrationPoint pt;
        pt.x = x;
        pt.tail = spectral_tail(spec, rep.mean + x);
        if (rep.h_monotone) {
            pt.exp_bound = std::exp(-inverse_integral(rep.s_grid, rep.h_samples, x));
            if (x > 0.0 && rep.lambert_scale > 0.0 && rep.norm_inf > 0.0) {
                const double w = lambert_w(x / rep.lambert_scale);
                pt.lambert_bound = w > 0.0
                    ? std::exp(-(x / (2.0 * rep.norm_inf)) * (w - 1.0 + 1.0 / w))
                    : 1.0;
            } else {
                pt.lambert_bound = 1.0;
            }
        }
        rep.points.push_back(pt);
    }
    return rep;
}

CliffordElement two_point(Complex phi_plus, Complex phi_minus, const AntiTensor& z) {
    if (z.degree() != 1) throw std::invalid_argument("two_point: degree-1 kernel required");
    require_real_kernel(z, 1e-12, "two_point");
    const double norm = plain_l2_norm(z);
    if (norm == 0.0) throw std::invalid_argument("two_point: zero kernel");
    const Complex even = 0.5 * (phi_plus + phi_minus);
    const Complex odd = (phi_plus - phi_minus) / (2.0 * norm);
    return CliffordElement::scalar(z.grid(), even) + odd * CliffordElement::chaos(z);
}

namespace {

double adaptive_simpson(const std::function<double(double)>& g, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = g(lm), frm = g(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& g, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = g(a), fm = g(m), fb = g(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(g, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

LogSobolevReport log_sobolev_check(double phi_plus, double phi_minus, const TimeGrid& grid) {
    if (std::abs(grid.horizon() - 1.0) > 1e-12)
        throw std::invalid_argument("log_sobolev_check: grid must cover [0,1]");

    LogSobolevReport rep;
    rep.a = 0.5 * (phi_plus * phi_plus - phi_minus * phi_minus);
    rep.b = 0.5 * (phi_plus * phi_plus + phi_minus * phi_minus);

    const double a = rep.a, b = rep.b;
    if (a != 0.0 && b > 0.0) {
        // after u = sqrt(t) the integrand is (a/2) log((b+au)/(b-au)); the
        // log endpoint at u -> 1 when b = |a| is integrable, so the last
        // sliver is handled by its closed antiderivative.
        const double eps = 1e-7;
        const auto integrand = [&](double u) {
            return 0.5 * a * std::log((b + a * u) / (b - a * u));
        };
        rep.entropy = integrate(integrand, 0.0, 1.0 - eps, 1e-13);
        const auto primitive = [&](double u) {
            const double p = b + a * u, q = b - a * u;
            const double lp = p > 0.0 ? p * std::log(p) : 0.0;
            const double lq = q > 0.0 ? q * std::log(q) : 0.0;
            return 0.5 * (lp + lq);
        };
        rep.entropy += primitive(1.0) - primitive(1.0 - eps);
    }

    // energy of the derivative of phi(Psi(1_{[0,1]}))
    const AntiTensor one_kernel = indicator_vector(grid, SlotSet::full(grid));
    const CliffordElement g = two_point(phi_plus, phi_minus, one_kernel);
    const double energy = std::abs(process_inner(derivative(g), derivative(g)));
    rep.energy = energy;
    rep.bound = 2.0 * std::log(4.0) * energy;
    rep.sharper = 2.0 * energy;
    if (rep.entropy > rep.bound + 1e-10 * (1.0 + rep.bound))
        throw std::logic_error("log_sobolev_check: entropy exceeded the energy bound");
    return rep;
}

CharacteristicDistance characteristic_distance(const CliffordElement& f,
                                               const AntiTensor& z, double t, double tol) {
    const TimeGrid& grid = f.grid();
    require_same_grid(grid, z.grid(), "characteristic_distance");
    if (std::abs(state_m(f)) > tol * (1.0 + f.max_abs_coeff()))
        throw std::invalid_argument("characteristic_distance: element must have zero mean");
    if (std::abs(plain_l2_norm(z) - 1.0) > tol)
        throw std::invalid_argument("characteristic_distance: kernel must be a unit vector");
    const CliffordElement dev = f - adjoint(f);
    if (dev.max_abs_coeff() > tol * (1.0 + f.max_abs_coeff()))
        throw std::invalid_argument("characteristic_distance: element must be self-adjoint");

    const CliffordElement field = CliffordElement::chaos(z);
    const auto phase = [t](double lambda) {
        return std::exp(Complex(0.0, t * lambda));
    };
    const MatrixRep e_f = functional_calculus(to_matrix(f), phase, tol);
    const MatrixRep e_z = functional_calculus(to_matrix(field), phase, tol);
    // L2 norm through the vacuum column (the representation is unitary on it)
    const Eigen::VectorXcd diff = (e_f.mat - e_z.mat).col(0);

    CharacteristicDistance out;
    out.lhs = diff.norm();
    out.middle = std::abs(t) * l2_norm(f - field);

    const ProcessElement df = derivative(f);
    const ProcessElement drf = derivative(inv_number(f, tol));
    Complex pairing = 0.0;
    for (int k = 1; k <= grid.slots(); ++k)
        pairing += state_m(multiply(adjoint(df.at(k)), drf.at(k)));
    pairing *= grid.width();
    out.right = std::abs(t) * std::abs(1.0 - pairing);
    if (out.lhs > out.middle + tol * (1.0 + out.middle))
        throw std::logic_error("characteristic_distance: contraction bound violated");
    return out;
}

}  // namespace clifford
