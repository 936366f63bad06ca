#pragma once

#include <map>

#include "clifford/antisym_tensor.hpp"

namespace clifford {

/// Element of the Clifford algebra as a finite chaos expansion
/// F = sum_n J_n(f_n), one antisymmetric kernel per occupied degree.
/// Parseval: |F|^2_{L2} = sum_n <f_n, f_n>.
class CliffordElement {
public:
    explicit CliffordElement(TimeGrid grid) : grid_(grid) {}

    static CliffordElement scalar(const TimeGrid& grid, Complex value) {
        CliffordElement f(grid);
        if (value != Complex(0.0)) f.set_level(AntiTensor::scalar(grid, value));
        return f;
    }
    static CliffordElement one(const TimeGrid& grid) { return scalar(grid, 1.0); }
    /// J_n(f) for a single kernel.
    static CliffordElement chaos(const AntiTensor& f) {
        CliffordElement out(f.grid());
        out.set_level(f);
        return out;
    }
    /// The field Psi(e_k) = J_1(e_k).
    static CliffordElement field(const TimeGrid& grid, int k) {
        return chaos(AntiTensor::basis(grid, k));
    }
    /// Psi(z) for a degree-1 kernel z.
    static CliffordElement field(const AntiTensor& z);

    [[nodiscard]] const TimeGrid& grid() const { return grid_; }
    [[nodiscard]] const std::map<int, AntiTensor>& levels() const { return levels_; }
    [[nodiscard]] int max_degree() const {
        return levels_.empty() ? 0 : levels_.rbegin()->first;
    }

    [[nodiscard]] const AntiTensor* level(int n) const {
        auto it = levels_.find(n);
        return it == levels_.end() ? nullptr : &it->second;
    }

    void set_level(const AntiTensor& f) {
        require_same_grid(grid_, f.grid(), "CliffordElement::set_level");
        if (f.degree() > grid_.slots()) return;
        levels_.insert_or_assign(f.degree(), f);
    }
    void add_level(const AntiTensor& f) {
        require_same_grid(grid_, f.grid(), "CliffordElement::add_level");
        if (f.degree() > grid_.slots()) return;
        auto it = levels_.find(f.degree());
        if (it == levels_.end()) levels_.emplace(f.degree(), f);
        else it->second = it->second + f;
    }

    void prune(double tol = 0.0) {
        for (auto it = levels_.begin(); it != levels_.end();) {
            it->second.prune(tol);
            if (it->second.coeffs().empty()) it = levels_.erase(it);
            else ++it;
        }
    }

    [[nodiscard]] double max_abs_coeff() const {
        double r = 0.0;
        for (const auto& [n, f] : levels_) r = std::max(r, f.max_abs_coeff());
        return r;
    }

    friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b);
    friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b);
    friend CliffordElement operator*(Complex s, const CliffordElement& a);
    /// Product by the chaos multiplication formula (see multiply).
    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);

private:
    TimeGrid grid_;
    std::map<int, AntiTensor> levels_;
};

/// Bilinear extension of
///   J_p(f) J_q(g) = sum_{r=0}^{p^q} r! C(p,r) C(q,r) J_{p+q-2r}(f /\^_r g)
/// over all degree pairs.  On basis blades the combinatorial prefactor
/// cancels the contraction normalization, so each coefficient pair lands on
/// the symmetric-difference blade with a single sign.
CliffordElement multiply(const CliffordElement& a, const CliffordElement& b);

/// Per level f_n -> conj(reverse(f_n)).
CliffordElement adjoint(const CliffordElement& f);

/// Vacuum state: the degree-0 coefficient.
Complex state_m(const CliffordElement& f);

/// <F, G> = m(F* G) = sum_n <f_n, g_n>.
Complex l2_inner(const CliffordElement& a, const CliffordElement& b);
double l2_norm(const CliffordElement& f);

/// Grading automorphism: (-1)^n on chaos level n.
CliffordElement beta(const CliffordElement& f);

/// Conditional expectation onto the subalgebra over the slot set A: keeps
/// exactly the coefficients supported inside A.
CliffordElement cond_expect(const CliffordElement& f, const SlotSet& set);

}  // namespace clifford
