#include "clifford/chaos.hpp"

#include <cmath>

namespace clifford {

CliffordElement CliffordElement::field(const AntiTensor& z) {
    if (z.degree() != 1) throw std::invalid_argument("field: degree-1 kernel required");
    return chaos(z);
}

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
    require_same_grid(a.grid_, b.grid_, "CliffordElement +");
    CliffordElement out = a;
    for (const auto& [n, f] : b.levels_) out.add_level(f);
    return out;
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
    return a + (-1.0) * b;
}

CliffordElement operator*(Complex s, const CliffordElement& a) {
    CliffordElement out(a.grid_);
    for (const auto& [n, f] : a.levels_) out.set_level(s * f);
    return out;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
    return multiply(a, b);
}

CliffordElement multiply(const CliffordElement& a, const CliffordElement& b) {
    require_same_grid(a.grid(), b.grid(), "multiply");
    CliffordElement out(a.grid());
    for (const auto& [p, f] : a.levels()) {
        for (const auto& [q, g] : b.levels()) {
            for (const auto& [ma, ca] : f.coeffs()) {
                for (const auto& [mb, cb] : g.coeffs()) {
                    const Mask common = ma & mb;
                    const Mask rest_a = ma & ~common, rest_b = mb & ~common;
                    const int sign = blades::pull_back_sign(ma, common) *
                                     blades::pull_front_sign(mb, common) *
                                     blades::merge_sign(rest_a, rest_b);
                    const Complex v = double(sign) * ca * cb;
                    if (v == Complex(0.0)) continue;
                    const Mask mo = rest_a | rest_b;
                    AntiTensor t(a.grid(), blades::popcount(mo));
                    t.add(mo, v);
                    out.add_level(t);
                }
            }
        }
    }
    out.prune(0.0);
    return out;
}

CliffordElement adjoint(const CliffordElement& f) {
    CliffordElement out(f.grid());
    for (const auto& [n, t] : f.levels()) out.set_level(conj(reverse(t)));
    return out;
}

Complex state_m(const CliffordElement& f) {
    const AntiTensor* t = f.level(0);
    return t ? t->coeff(0) : Complex(0.0);
}

Complex l2_inner(const CliffordElement& a, const CliffordElement& b) {
    require_same_grid(a.grid(), b.grid(), "l2_inner");
    Complex s = 0.0;
    for (const auto& [n, f] : a.levels()) {
        const AntiTensor* g = b.level(n);
        if (g) s += inner(f, *g);
    }
    return s;
}

double l2_norm(const CliffordElement& f) {
    return std::sqrt(std::abs(l2_inner(f, f)));
}

CliffordElement beta(const CliffordElement& f) {
    CliffordElement out(f.grid());
    for (const auto& [n, t] : f.levels()) out.set_level(((n & 1) ? -1.0 : 1.0) * t);
    return out;
}

CliffordElement cond_expect(const CliffordElement& f, const SlotSet& set) {
    if (!set.valid_for(f.grid())) throw std::invalid_argument("cond_expect: set exceeds grid");
    CliffordElement out(f.grid());
    const Mask allowed = set.bits();
    for (const auto& [n, t] : f.levels()) {
        AntiTensor kept(f.grid(), n);
        for (const auto& [m, c] : t.coeffs())
            if ((m & ~allowed) == 0) kept.add(m, c);
        if (!kept.coeffs().empty()) out.set_level(kept);
    }
    return out;
}

}  // namespace clifford
