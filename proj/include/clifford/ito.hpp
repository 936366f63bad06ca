#pragma once

#include "clifford/malliavin.hpp"

namespace clifford {

/// Adaptedness, left-endpoint convention: the slot-k integrand may only
/// depend on slots strictly below k.
bool check_adapted(const ProcessElement& u);

/// A ProcessElement whose adaptedness has been checked at construction.
/// Divergence accepts any process; the stochastic integral only this type.
class AdaptedProcess {
public:
    explicit AdaptedProcess(ProcessElement u) : process_(std::move(u)) {
        if (!check_adapted(process_))
            throw std::invalid_argument("AdaptedProcess: slot components reach into the future");
    }
    [[nodiscard]] const ProcessElement& process() const { return process_; }

private:
    ProcessElement process_;
};

/// Ito integral of an adapted process:
///   sum_k (Psi_{t_k} - Psi_{t_{k-1}}) u_k,
/// with the field increment on the left.  The increment over slot k is
/// sqrt(width) J_1(e_k).
CliffordElement ito_integral(const AdaptedProcess& u);

/// Convenience overload; throws on non-adapted input.
CliffordElement ito_integral(const ProcessElement& u);

/// Conditional expectation onto the algebra of the first k slots
/// (k = 0 gives the mean).
CliffordElement martingale_projection(const CliffordElement& f, int k);

struct ClarkOcone {
    Complex mean;
    AdaptedProcess integrand;
};

/// Martingale representation: F = m(F) + integral of the adapted projection
/// of the derivative, u_k = E[D_k F | slots < k].  Reconstruction through
/// ito_integral is exact on the grid.
ClarkOcone clark_ocone(const CliffordElement& f);

}  // namespace clifford
