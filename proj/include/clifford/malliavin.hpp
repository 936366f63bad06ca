#pragma once

#include <vector>

#include "clifford/chaos.hpp"

namespace clifford {

/// Slot-indexed family of algebra elements: u(t) constant on each slot.
/// Stands in for elements of L2(R+) (x) L2(C), in particular D_t F.
class ProcessElement {
public:
    explicit ProcessElement(TimeGrid grid)
        : grid_(grid), slots_(grid.slots(), CliffordElement(grid)) {}

    [[nodiscard]] const TimeGrid& grid() const { return grid_; }

    /// 1-based slot access.
    [[nodiscard]] const CliffordElement& at(int k) const { return slots_.at(k - 1); }
    void set(int k, CliffordElement u) {
        require_same_grid(grid_, u.grid(), "ProcessElement::set");
        slots_.at(k - 1) = std::move(u);
    }

    friend ProcessElement operator+(const ProcessElement& a, const ProcessElement& b);
    friend ProcessElement operator-(const ProcessElement& a, const ProcessElement& b);
    friend ProcessElement operator*(Complex s, const ProcessElement& a);

private:
    TimeGrid grid_;
    std::vector<CliffordElement> slots_;
};

/// <u, v> = width * sum_k <u_k, v_k>_{L2(C)}.
Complex process_inner(const ProcessElement& a, const ProcessElement& b);
double process_norm(const ProcessElement& u);

/// Derivation: slot-k component of D F is sum_n n J_{n-1}(f_n(k, .)),
/// built from the first-argument slice.  Degree-0 input gives zero.
ProcessElement derivative(const CliffordElement& f);

/// Divergence: assembles the slot family into a kernel with one extra time
/// argument, antisymmetrizes over all arguments, and raises each level by
/// one.  On wedge coefficients,
///   c_S (level n+1) = sqrt(width) * sum_i (-1)^{i-1} c^{u_{s_i}}_{S \ s_i}
/// over the entries s_1 < ... < s_{n+1} of S.
CliffordElement divergence(const ProcessElement& u);

/// Number operator R = divergence o derivative: multiplies level n by n.
CliffordElement number_operator(const CliffordElement& f);

/// Inverse of R on mean-zero elements: divides level n >= 1 by n.
/// Rejects inputs with m(F) != 0 (tolerance-scaled).
CliffordElement inv_number(const CliffordElement& f, double tol = 1e-12);

/// Squared derivative norm as an algebra element:
///   |D. F|^2 = width * sum_k (D_k F)* (D_k F).
CliffordElement carre_norm(const CliffordElement& f);

}  // namespace clifford
