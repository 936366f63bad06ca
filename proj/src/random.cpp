#include "clifford/random.hpp"

namespace clifford {

namespace {

void fill_masks(AntiTensor& t, Mask allowed, int degree, RandomSource& rng,
                bool complex_coeffs) {
    // iterate increasing tuples inside `allowed`
    std::vector<int> positions;
    for (int j = 0; j < 62; ++j)
        if ((allowed >> j) & 1) positions.push_back(j);
    const int n = static_cast<int>(positions.size());
    if (degree > n) return;
    std::vector<int> pick(degree);
    for (int i = 0; i < degree; ++i) pick[i] = i;
    while (true) {
        Mask m = 0;
        for (int i : pick) m |= Mask(1) << positions[i];
        Complex c(rng.symmetric(), complex_coeffs ? rng.symmetric() : 0.0);
        t.add(m, c);
        int i = degree - 1;
        while (i >= 0 && pick[i] == n - (degree - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < degree; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

AntiTensor random_tensor(const TimeGrid& grid, int degree, RandomSource& rng,
                         bool complex_coeffs) {
    AntiTensor t(grid, degree);
    if (degree == 0) {
        t.add(0, Complex(rng.symmetric(), complex_coeffs ? rng.symmetric() : 0.0));
        return t;
    }
    fill_masks(t, SlotSet::full(grid).bits(), degree, rng, complex_coeffs);
    return t;
}

CliffordElement random_element(const TimeGrid& grid, int max_degree, RandomSource& rng,
                               bool complex_coeffs) {
    CliffordElement out(grid);
    for (int n = 0; n <= std::min(max_degree, grid.slots()); ++n)
        out.set_level(random_tensor(grid, n, rng, complex_coeffs));
    return out;
}

CliffordElement random_self_adjoint(const TimeGrid& grid, int max_degree, RandomSource& rng) {
    CliffordElement g = random_element(grid, max_degree, rng, true);
    return 0.5 * (g + adjoint(g));
}

ProcessElement random_process(const TimeGrid& grid, int max_degree, RandomSource& rng,
                              bool complex_coeffs) {
    ProcessElement u(grid);
    for (int k = 1; k <= grid.slots(); ++k)
        u.set(k, random_element(grid, max_degree, rng, complex_coeffs));
    return u;
}

ProcessElement random_adapted(const TimeGrid& grid, int max_degree, RandomSource& rng,
                              bool complex_coeffs) {
    ProcessElement u(grid);
    for (int k = 1; k <= grid.slots(); ++k) {
        const Mask past = SlotSet::prefix(k - 1).bits();
        CliffordElement comp(grid);
        for (int n = 0; n <= std::min(max_degree, k - 1); ++n) {
            AntiTensor t(grid, n);
            if (n == 0) t.add(0, Complex(rng.symmetric(), complex_coeffs ? rng.symmetric() : 0.0));
            else fill_masks(t, past, n, rng, complex_coeffs);
            if (!t.coeffs().empty()) comp.set_level(t);
        }
        u.set(k, comp);
    }
    return u;
}

}  // namespace clifford
