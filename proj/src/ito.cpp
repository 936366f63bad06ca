#include "clifford/ito.hpp"

#include <cmath>

namespace clifford {

bool check_adapted(const ProcessElement& u) {
    for (int k = 1; k <= u.grid().slots(); ++k) {
        const Mask past = SlotSet::prefix(k - 1).bits();
        for (const auto& [n, t] : u.at(k).levels())
            for (const auto& [m, c] : t.coeffs())
                if ((m & ~past) && c != Complex(0.0)) return false;
    }
    return true;
}

CliffordElement ito_integral(const AdaptedProcess& u) {
    const TimeGrid& grid = u.process().grid();
    const double sqrt_w = std::sqrt(grid.width());
    CliffordElement acc(grid);
    for (int k = 1; k <= grid.slots(); ++k) {
        CliffordElement increment = sqrt_w * CliffordElement::field(grid, k);
        acc = acc + multiply(increment, u.process().at(k));
    }
    return acc;
}

CliffordElement ito_integral(const ProcessElement& u) {
    return ito_integral(AdaptedProcess(u));
}

CliffordElement martingale_projection(const CliffordElement& f, int k) {
    if (k < 0 || k > f.grid().slots())
        throw std::invalid_argument("martingale_projection: slot out of range");
    return cond_expect(f, SlotSet::prefix(k));
}

ClarkOcone clark_ocone(const CliffordElement& f) {
    const TimeGrid& grid = f.grid();
    ProcessElement df = derivative(f);
    ProcessElement u(grid);
    for (int k = 1; k <= grid.slots(); ++k)
        u.set(k, cond_expect(df.at(k), SlotSet::prefix(k - 1)));
    return ClarkOcone{state_m(f), AdaptedProcess(std::move(u))};
}

}  // namespace clifford
