#include "clifford/antisym_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace clifford {

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

AntiTensor AntiTensor::basis_wedge(const TimeGrid& grid, const std::vector<int>& slots) {
    Mask m = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        int k = slots[i];
        if (k < 1 || k > grid.slots())
            throw std::invalid_argument("basis_wedge: slot out of range");
        if (i > 0 && slots[i] <= slots[i - 1])
            throw std::invalid_argument("basis_wedge: tuple not strictly increasing");
        m |= Mask(1) << (k - 1);
    }
    AntiTensor t(grid, static_cast<int>(slots.size()));
    t.add(m, 1.0);
    return t;
}

Complex AntiTensor::value_at(const std::vector<int>& slots) const {
    if (static_cast<int>(slots.size()) != degree_)
        throw std::invalid_argument("value_at: arity mismatch");
    if (degree_ == 0) return coeff(0);
    // Sort the tuple, tracking the permutation sign; repeated slots give 0.
    std::vector<int> sorted = slots;
    int sign = 1;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        for (std::size_t j = i; j > 0 && sorted[j - 1] >= sorted[j]; --j) {
            if (sorted[j - 1] == sorted[j]) return 0.0;
            std::swap(sorted[j - 1], sorted[j]);
            sign = -sign;
        }
    }
    Mask m = 0;
    for (int k : sorted) m |= Mask(1) << (k - 1);
    const double scale = factorial(degree_) * std::pow(grid_.width(), degree_ / 2.0);
    return double(sign) * coeff(m) / scale;
}

AntiTensor AntiTensor::slice(int k) const {
    if (k < 1 || k > grid_.slots()) throw std::invalid_argument("slice: slot out of range");
    if (degree_ == 0) throw std::invalid_argument("slice: degree-0 tensor has no arguments");
    AntiTensor out(grid_, degree_ - 1);
    const Mask bit = Mask(1) << (k - 1);
    const double scale = 1.0 / (degree_ * std::sqrt(grid_.width()));
    for (const auto& [m, c] : coeffs_) {
        if (!(m & bit)) continue;
        const int sign = (blades::index_of(m, k - 1) & 1) ? -1 : 1;
        out.add(m & ~bit, double(sign) * scale * c);
    }
    return out;
}

AntiTensor operator+(const AntiTensor& a, const AntiTensor& b) {
    require_same_grid(a.grid_, b.grid_, "AntiTensor +");
    if (a.degree_ != b.degree_) throw std::invalid_argument("AntiTensor +: degree mismatch");
    AntiTensor out = a;
    for (const auto& [m, c] : b.coeffs_) out.add(m, c);
    return out;
}

AntiTensor operator-(const AntiTensor& a, const AntiTensor& b) { return a + (-1.0) * b; }

AntiTensor operator*(Complex s, const AntiTensor& a) {
    AntiTensor out(a.grid_, a.degree_);
    for (const auto& [m, c] : a.coeffs_) out.add(m, s * c);
    return out;
}

DenseAntiFn::DenseAntiFn(TimeGrid grid, int degree) : grid_(grid), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("DenseAntiFn: negative degree");
    double cells = std::pow(double(grid.slots()), degree);
    if (cells > 5e7) throw std::invalid_argument("DenseAntiFn: value array too large");
    values_.assign(static_cast<std::size_t>(cells + 0.5), Complex(0.0));
}

std::size_t DenseAntiFn::offset(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != degree_)
        throw std::invalid_argument("DenseAntiFn: arity mismatch");
    std::size_t off = 0;
    for (int k : idx) {
        if (k < 1 || k > grid_.slots()) throw std::invalid_argument("DenseAntiFn: slot out of range");
        off = off * grid_.slots() + (k - 1);
    }
    return off;
}

double DenseAntiFn::l2_norm() const {
    double s = 0.0;
    for (const Complex& v : values_) s += std::norm(v);
    return std::sqrt(s * std::pow(grid_.width(), degree_));
}

double DenseAntiFn::max_abs() const {
    double r = 0.0;
    for (const Complex& v : values_) r = std::max(r, std::abs(v));
    return r;
}

void for_each_tuple(int slots, int degree, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(degree, 1);
    if (degree == 0) {
        f(idx);
        return;
    }
    while (true) {
        f(idx);
        int i = degree - 1;
        while (i >= 0 && idx[i] == slots) {
            idx[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++idx[i];
    }
}

bool DenseAntiFn::is_antisymmetric(double tol) const {
    bool ok = true;
    for_each_tuple(grid_.slots(), degree_, [&](const std::vector<int>& idx) {
        if (!ok) return;
        for (int i = 0; i + 1 < degree_; ++i) {
            std::vector<int> swapped = idx;
            std::swap(swapped[i], swapped[i + 1]);
            if (std::abs(value(idx) + value(swapped)) > tol) { ok = false; return; }
        }
        for (int i = 0; i + 1 < degree_; ++i)
            if (idx[i] == idx[i + 1] && std::abs(value(idx)) > tol) { ok = false; return; }
    });
    return ok;
}

DenseAntiFn AntiTensor::to_dense() const {
    DenseAntiFn out(grid_, degree_);
    for_each_tuple(grid_.slots(), degree_, [&](const std::vector<int>& idx) {
        out.set(idx, value_at(idx));
    });
    return out;
}

AntiTensor indicator_vector(const TimeGrid& grid, const SlotSet& set) {
    if (!set.valid_for(grid)) throw std::invalid_argument("indicator_vector: set exceeds grid");
    AntiTensor t(grid, 1);
    const double w = std::sqrt(grid.width());
    for (int k : set.to_list()) t.add(Mask(1) << (k - 1), w);
    return t;
}

namespace {

// sum over sigma in S_n of sgn(sigma) * g(tuple composed with sigma),
// by Heap's algorithm on a working copy of the tuple.
Complex signed_perm_sum(const DenseAntiFn& g, const std::vector<int>& tuple) {
    const int n = static_cast<int>(tuple.size());
    if (n == 0) return g.value(tuple);
    std::vector<int> a = tuple;
    std::vector<int> c(n, 0);
    int sign = 1;
    Complex acc = g.value(a);
    int i = 0;
    while (i < n) {
        if (c[i] < i) {
            if (i % 2 == 0) std::swap(a[0], a[i]);
            else std::swap(a[c[i]], a[i]);
            sign = -sign;
            acc += double(sign) * g.value(a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            ++i;
        }
    }
    return acc;
}

}  // namespace

AntiTensor antisymmetrize(const DenseAntiFn& g) {
    const TimeGrid& grid = g.grid();
    const int n = g.degree();
    AntiTensor out(grid, n);
    if (n > grid.slots()) return out;
    if (n == 0) {
        out.add(0, g.value({}));
        return out;
    }
    // c_S = width^{n/2} * sum_sigma sgn(sigma) g(S o sigma) for increasing S.
    const double scale = std::pow(grid.width(), n / 2.0);
    std::vector<int> tuple(n);
    std::iota(tuple.begin(), tuple.end(), 1);
    while (true) {
        Complex c = scale * signed_perm_sum(g, tuple);
        if (c != Complex(0.0)) {
            Mask m = 0;
            for (int k : tuple) m |= Mask(1) << (k - 1);
            out.add(m, c);
        }
        // next increasing n-tuple from {1..slots}
        int i = n - 1;
        while (i >= 0 && tuple[i] == grid.slots() - (n - 1 - i)) --i;
        if (i < 0) break;
        ++tuple[i];
        for (int j = i + 1; j < n; ++j) tuple[j] = tuple[j - 1] + 1;
    }
    return out;
}

AntiTensor reverse(const AntiTensor& f) {
    const int n = f.degree();
    const double sign = ((n * (n - 1) / 2) & 1) ? -1.0 : 1.0;
    return sign * f;
}

AntiTensor conj(const AntiTensor& f) {
    AntiTensor out(f.grid(), f.degree());
    for (const auto& [m, c] : f.coeffs()) out.add(m, std::conj(c));
    return out;
}

Complex inner(const AntiTensor& f, const AntiTensor& g) {
    require_same_grid(f.grid(), g.grid(), "inner");
    if (f.degree() != g.degree()) throw std::invalid_argument("inner: degree mismatch");
    Complex s = 0.0;
    for (const auto& [m, c] : f.coeffs()) s += std::conj(c) * g.coeff(m);
    return s;
}

double plain_l2_norm(const AntiTensor& f) {
    double s = 0.0;
    for (const auto& [m, c] : f.coeffs()) s += std::norm(c);
    return std::sqrt(s / factorial(f.degree()));
}

AntiTensor wedge(const AntiTensor& f, const AntiTensor& g) {
    require_same_grid(f.grid(), g.grid(), "wedge");
    AntiTensor out(f.grid(), f.degree() + g.degree());
    for (const auto& [ma, ca] : f.coeffs()) {
        for (const auto& [mb, cb] : g.coeffs()) {
            if (ma & mb) continue;
            out.add(ma | mb, double(blades::merge_sign(ma, mb)) * ca * cb);
        }
    }
    return out;
}

DenseAntiFn contract(const AntiTensor& f, const AntiTensor& g, int r) {
    require_same_grid(f.grid(), g.grid(), "contract");
    const int p = f.degree(), q = g.degree();
    if (r < 0 || r > std::min(p, q)) throw std::invalid_argument("contract: r out of range");
    const TimeGrid& grid = f.grid();
    const int d = grid.slots();
    DenseAntiFn df = f.to_dense();
    DenseAntiFn dg = g.to_dense();
    DenseAntiFn out(grid, p + q - 2 * r);
    const double wr = std::pow(grid.width(), r);

    std::vector<int> fa(p), ga(q);
    for_each_tuple(d, p + q - 2 * r, [&](const std::vector<int>& idx) {
        Complex acc = 0.0;
        for (int i = 0; i < p - r; ++i) fa[i] = idx[i];
        for (int i = 0; i < q - r; ++i) ga[r + i] = idx[p - r + i];
        for_each_tuple(d, r, [&](const std::vector<int>& s) {
            // last r arguments of f carry s reversed; first r of g carry s.
            for (int i = 0; i < r; ++i) {
                fa[p - 1 - i] = s[i];
                ga[i] = s[i];
            }
            acc += df.value(fa) * dg.value(ga);
        });
        out.set(idx, wr * acc);
    });
    return out;
}

AntiTensor contract_hat_dense(const AntiTensor& f, const AntiTensor& g, int r) {
    return antisymmetrize(contract(f, g, r));
}

namespace {

// single blade-pair contribution; zero unless exactly r slots are shared
// (smaller overlaps leave colliding remainders whose wedge vanishes).
inline bool blade_contraction(Mask ma, Mask mb, int r, Mask& out_mask, int& out_sign) {
    const Mask common = ma & mb;
    if (blades::popcount(common) != r) return false;
    const Mask rest_a = ma & ~common, rest_b = mb & ~common;
    out_mask = rest_a | rest_b;
    out_sign = blades::pull_back_sign(ma, common) * blades::pull_front_sign(mb, common) *
               blades::merge_sign(rest_a, rest_b);
    return true;
}

}  // namespace

AntiTensor contract_hat(const AntiTensor& f, const AntiTensor& g, int r) {
    require_same_grid(f.grid(), g.grid(), "contract_hat");
    const int p = f.degree(), q = g.degree();
    if (r < 0 || r > std::min(p, q)) throw std::invalid_argument("contract_hat: r out of range");
    AntiTensor out(f.grid(), p + q - 2 * r);
    const double scale = 1.0 / (factorial(r) * binomial(p, r) * binomial(q, r));
    if (&f == &g) {
        // Self-contraction: process (A,B) together with (B,A), so the parity
        // cancellation f /\^_r f = 0 for p + r odd comes out as an exact
        // zero rather than a rounding residue.
        for (auto ita = f.coeffs().begin(); ita != f.coeffs().end(); ++ita) {
            for (auto itb = ita; itb != f.coeffs().end(); ++itb) {
                const Mask ma = ita->first, mb = itb->first;
                Mask mo;
                int sign_ab;
                if (!blade_contraction(ma, mb, r, mo, sign_ab)) continue;
                const Complex prod = ita->second * itb->second;
                if (ma == mb) {
                    out.add(mo, scale * double(sign_ab) * prod);
                    continue;
                }
                Mask mo2;
                int sign_ba;
                blade_contraction(mb, ma, r, mo2, sign_ba);
                if (sign_ab == sign_ba) out.add(mo, scale * 2.0 * double(sign_ab) * prod);
                // opposite signs cancel exactly; nothing to add
            }
        }
    } else {
        for (const auto& [ma, ca] : f.coeffs()) {
            for (const auto& [mb, cb] : g.coeffs()) {
                Mask mo;
                int sign;
                if (!blade_contraction(ma, mb, r, mo, sign)) continue;
                out.add(mo, scale * double(sign) * ca * cb);
            }
        }
    }
    return out;
}

double max_coeff_diff(const AntiTensor& a, const AntiTensor& b) {
    double r = 0.0;
    for (const auto& [m, c] : a.coeffs()) r = std::max(r, std::abs(c - b.coeff(m)));
    for (const auto& [m, c] : b.coeffs()) r = std::max(r, std::abs(c - a.coeff(m)));
    return r;
}

}  // namespace clifford
