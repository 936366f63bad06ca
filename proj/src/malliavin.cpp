#include "clifford/malliavin.hpp"

#include <cmath>

namespace clifford {

ProcessElement operator+(const ProcessElement& a, const ProcessElement& b) {
    require_same_grid(a.grid_, b.grid_, "ProcessElement +");
    ProcessElement out(a.grid_);
    for (int k = 1; k <= a.grid_.slots(); ++k) out.set(k, a.at(k) + b.at(k));
    return out;
}

ProcessElement operator-(const ProcessElement& a, const ProcessElement& b) {
    return a + (-1.0) * b;
}

ProcessElement operator*(Complex s, const ProcessElement& a) {
    ProcessElement out(a.grid_);
    for (int k = 1; k <= a.grid_.slots(); ++k) out.set(k, s * a.at(k));
    return out;
}

Complex process_inner(const ProcessElement& a, const ProcessElement& b) {
    require_same_grid(a.grid(), b.grid(), "process_inner");
    Complex s = 0.0;
    for (int k = 1; k <= a.grid().slots(); ++k) s += l2_inner(a.at(k), b.at(k));
    return a.grid().width() * s;
}

double process_norm(const ProcessElement& u) {
    return std::sqrt(std::abs(process_inner(u, u)));
}

ProcessElement derivative(const CliffordElement& f) {
    const TimeGrid& grid = f.grid();
    ProcessElement out(grid);
    const double inv_sqrt_w = 1.0 / std::sqrt(grid.width());
    for (int k = 1; k <= grid.slots(); ++k) {
        const Mask bit = Mask(1) << (k - 1);
        CliffordElement comp(grid);
        for (const auto& [n, t] : f.levels()) {
            if (n == 0) continue;
            // n * slice(t, k): coefficient (-1)^{pos} c_{T|k} / sqrt(width).
            AntiTensor part(grid, n - 1);
            for (const auto& [m, c] : t.coeffs()) {
                if (!(m & bit)) continue;
                const int sign = (blades::index_of(m, k - 1) & 1) ? -1 : 1;
                part.add(m & ~bit, double(sign) * inv_sqrt_w * c);
            }
            if (!part.coeffs().empty()) comp.set_level(part);
        }
        out.set(k, comp);
    }
    return out;
}

CliffordElement divergence(const ProcessElement& u) {
    const TimeGrid& grid = u.grid();
    const double sqrt_w = std::sqrt(grid.width());
    CliffordElement out(grid);
    for (int k = 1; k <= grid.slots(); ++k) {
        const Mask bit = Mask(1) << (k - 1);
        for (const auto& [n, t] : u.at(k).levels()) {
            if (n + 1 > grid.slots()) continue;
            AntiTensor part(grid, n + 1);
            for (const auto& [m, c] : t.coeffs()) {
                if (m & bit) continue;  // repeated slot antisymmetrizes to 0
                const Mask mo = m | bit;
                const int sign = (blades::index_of(mo, k - 1) & 1) ? -1 : 1;
                part.add(mo, double(sign) * sqrt_w * c);
            }
            if (!part.coeffs().empty()) out.add_level(part);
        }
    }
    out.prune(0.0);
    return out;
}

CliffordElement number_operator(const CliffordElement& f) {
    CliffordElement out(f.grid());
    for (const auto& [n, t] : f.levels()) out.set_level(double(n) * t);
    return out;
}

CliffordElement inv_number(const CliffordElement& f, double tol) {
    const double mean = std::abs(state_m(f));
    if (mean > tol * (1.0 + f.max_abs_coeff()))
        throw std::invalid_argument("inv_number: element has nonzero mean");
    CliffordElement out(f.grid());
    for (const auto& [n, t] : f.levels()) {
        if (n == 0) continue;
        out.set_level((1.0 / n) * t);
    }
    return out;
}

CliffordElement carre_norm(const CliffordElement& f) {
    const TimeGrid& grid = f.grid();
    ProcessElement df = derivative(f);
    CliffordElement acc(grid);
    for (int k = 1; k <= grid.slots(); ++k)
        acc = acc + multiply(adjoint(df.at(k)), df.at(k));
    return grid.width() * acc;
}

}  // namespace clifford
