#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "clifford/grid.hpp"

namespace clifford {

using Complex = std::complex<double>;
using Mask = std::uint64_t;

/// Parity helpers for wedge-basis index sets stored as bitmasks
/// (bit j set <=> slot j+1 present).
namespace blades {

inline int popcount(Mask m) { return __builtin_popcountll(m); }

/// Bits of `m` strictly below bit position `pos`.
inline Mask below(Mask m, int pos) { return m & ((Mask(1) << pos) - 1); }

/// Bits of `m` strictly above bit position `pos`.
inline Mask above(Mask m, int pos) { return m & ~((Mask(2) << pos) - 1); }

/// Sign of merging the increasing lists A, B (disjoint) into one increasing
/// list: parity of the number of pairs a > b with a in A, b in B.
inline int merge_sign(Mask a, Mask b) {
    int inv = 0;
    for (Mask rest = b; rest;) {
        int pos = __builtin_ctzll(rest);
        rest &= rest - 1;
        inv += popcount(above(a, pos));
    }
    return (inv & 1) ? -1 : 1;
}

/// Sign of sorting [ (A\R) increasing, R decreasing ] into A increasing,
/// for R a subset of A.
inline int pull_back_sign(Mask a, Mask r) {
    int n = popcount(r);
    int inv = n * (n - 1) / 2;  // internal reversal of the R block
    Mask rest_a = a & ~r;
    for (Mask rest = r; rest;) {
        int pos = __builtin_ctzll(rest);
        rest &= rest - 1;
        inv += popcount(above(rest_a, pos));
    }
    return (inv & 1) ? -1 : 1;
}

/// Sign of sorting [ R increasing, (B\R) increasing ] into B increasing,
/// for R a subset of B.
inline int pull_front_sign(Mask b, Mask r) {
    int inv = 0;
    Mask rest_b = b & ~r;
    for (Mask rest = r; rest;) {
        int pos = __builtin_ctzll(rest);
        rest &= rest - 1;
        inv += popcount(below(rest_b, pos));
    }
    return (inv & 1) ? -1 : 1;
}

/// Position of bit `pos` within the increasing list of `m` (0-based); the
/// bit is assumed set.
inline int index_of(Mask m, int pos) { return popcount(below(m, pos)); }

}  // namespace blades

class DenseAntiFn;

/// Degree-n antisymmetric function of n time variables, stored as wedge
/// coefficients with respect to the orthonormal slot basis: coefficient
/// c_S on e_{s1} ^ ... ^ e_{sn} for each strictly increasing tuple S.
/// Degree 0 is a single scalar (mask 0).
///
/// Pointwise dictionary: the function value at an increasing slot tuple S
/// is c_S / (n! * width^{n/2}); permuted tuples pick up the permutation
/// sign; tuples with a repeated slot evaluate to 0.
class AntiTensor {
public:
    AntiTensor(TimeGrid grid, int degree) : grid_(grid), degree_(degree) {
        if (degree < 0) throw std::invalid_argument("AntiTensor: negative degree");
    }

    static AntiTensor scalar(const TimeGrid& grid, Complex value) {
        AntiTensor t(grid, 0);
        t.add(0, value);
        return t;
    }
    /// The basis vector e_k as a degree-1 tensor.
    static AntiTensor basis(const TimeGrid& grid, int k) {
        if (k < 1 || k > grid.slots())
            throw std::invalid_argument("AntiTensor::basis: slot out of range");
        AntiTensor t(grid, 1);
        t.add(Mask(1) << (k - 1), 1.0);
        return t;
    }
    /// Basis wedge e_{s1} ^ ... ^ e_{sn} for an increasing tuple.
    static AntiTensor basis_wedge(const TimeGrid& grid, const std::vector<int>& slots);

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const TimeGrid& grid() const { return grid_; }
    [[nodiscard]] const std::map<Mask, Complex>& coeffs() const { return coeffs_; }

    [[nodiscard]] Complex coeff(Mask m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? Complex(0.0) : it->second;
    }

    /// Accumulate into c_m; entries of degree exceeding the slot count are
    /// dropped (the exterior power is {0} there).
    void add(Mask m, Complex v) {
        if (blades::popcount(m) != degree_)
            throw std::invalid_argument("AntiTensor::add: mask degree mismatch");
        if (degree_ > grid_.slots()) return;
        if (m >> grid_.slots()) throw std::invalid_argument("AntiTensor::add: slot beyond grid");
        auto [it, fresh] = coeffs_.emplace(m, v);
        if (!fresh) it->second += v;
    }

    void prune(double tol = 0.0) {
        for (auto it = coeffs_.begin(); it != coeffs_.end();) {
            if (std::abs(it->second) <= tol) it = coeffs_.erase(it);
            else ++it;
        }
    }

    [[nodiscard]] bool is_zero(double tol = 0.0) const {
        for (const auto& [m, c] : coeffs_)
            if (std::abs(c) > tol) return false;
        return true;
    }

    /// Largest |c_S|.
    [[nodiscard]] double max_abs_coeff() const {
        double r = 0.0;
        for (const auto& [m, c] : coeffs_) r = std::max(r, std::abs(c));
        return r;
    }

    /// Pointwise value at a slot tuple (1-based entries, any order).
    [[nodiscard]] Complex value_at(const std::vector<int>& slots) const;

    /// First-argument slice f(k, .) as a degree-(n-1) tensor:
    /// c'_{S\{k}} = (-1)^{index of k in S} * c_S / (n * sqrt(width)).
    [[nodiscard]] AntiTensor slice(int k) const;

    [[nodiscard]] DenseAntiFn to_dense() const;

    friend AntiTensor operator+(const AntiTensor& a, const AntiTensor& b);
    friend AntiTensor operator-(const AntiTensor& a, const AntiTensor& b);
    friend AntiTensor operator*(Complex s, const AntiTensor& a);

private:
    TimeGrid grid_;
    int degree_;
    std::map<Mask, Complex> coeffs_;
};

/// Degree-n function of n time variables stored as a full value array of
/// size slots^n (staging representation for contractions; not required to
/// be antisymmetric).
class DenseAntiFn {
public:
    DenseAntiFn(TimeGrid grid, int degree);

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const TimeGrid& grid() const { return grid_; }

    /// Index entries are 1-based slots.
    [[nodiscard]] Complex value(const std::vector<int>& idx) const { return values_[offset(idx)]; }
    void set(const std::vector<int>& idx, Complex v) { values_[offset(idx)] = v; }
    void accumulate(const std::vector<int>& idx, Complex v) { values_[offset(idx)] += v; }

    [[nodiscard]] const std::vector<Complex>& values() const { return values_; }
    std::vector<Complex>& values() { return values_; }

    [[nodiscard]] std::size_t size() const { return values_.size(); }

    /// L2(R^n) norm under the discrete integral (width^n * sum).
    [[nodiscard]] double l2_norm() const;

    [[nodiscard]] double max_abs() const;

    /// True if antisymmetric under index transposition (within tol) and
    /// zero on repeated indices.
    [[nodiscard]] bool is_antisymmetric(double tol) const;

private:
    [[nodiscard]] std::size_t offset(const std::vector<int>& idx) const;

    TimeGrid grid_;
    int degree_;
    std::vector<Complex> values_;
};

/// Iterate all tuples in {1..slots}^n in lexicographic order; f receives the
/// current tuple.  Used by the dense (normative) contraction path.
void for_each_tuple(int slots, int degree, const std::function<void(const std::vector<int>&)>& f);

// --- operations on tensors ---

/// 1_A as a degree-1 tensor: sqrt(width) on each slot of A.
AntiTensor indicator_vector(const TimeGrid& grid, const SlotSet& set);

/// Antisymmetric part (1/n!) sum_sigma sgn(sigma) g(sigma(.)), converted to
/// wedge coefficients.
AntiTensor antisymmetrize(const DenseAntiFn& g);

/// Argument reversal f(x_n, ..., x_1); for antisymmetric input this is the
/// sign flip (-1)^{n(n-1)/2}.
AntiTensor reverse(const AntiTensor& f);

/// Coefficient-wise complex conjugate.
AntiTensor conj(const AntiTensor& f);

/// <f, g> = sum_S conj(c^f_S) c^g_S (the n!-weighted inner product).
Complex inner(const AntiTensor& f, const AntiTensor& g);

/// Plain L2(R^n) norm: sqrt(<f,f> / n!).
double plain_l2_norm(const AntiTensor& f);

/// Antisymmetrization of the tensor product.
AntiTensor wedge(const AntiTensor& f, const AntiTensor& g);

/// Contraction of the last r arguments of f (in reversed order) against the
/// first r arguments of g, with weight width^r per contracted pair:
///
///   (f /\_r g)(t_1..t_{p-r}, u_1..u_{q-r})
///       = width^r * sum_s f(t_1..t_{p-r}, s_r..s_1) g(s_1..s_r, u_1..u_{q-r}).
///
/// The result is antisymmetric in the t's and u's separately but not jointly.
DenseAntiFn contract(const AntiTensor& f, const AntiTensor& g, int r);

/// Antisymmetrized contraction, computed directly on wedge coefficients:
///
///   e_A /\^_r e_B = 1/(r! C(p,r) C(q,r)) * sum over r-subsets R of A&B
///                   with (A\R) disjoint from (B\R) of
///                   [pull_back(A,R) * pull_front(B,R) * merge(A\R, B\R)]
///                   * e_{(A\R) | (B\R)}.
AntiTensor contract_hat(const AntiTensor& f, const AntiTensor& g, int r);

/// Reference implementation of contract_hat through the dense pointwise
/// representation; the normative semantics the fast path is tested against.
AntiTensor contract_hat_dense(const AntiTensor& f, const AntiTensor& g, int r);

/// Max-abs coefficient difference, for residual checks.
double max_coeff_diff(const AntiTensor& a, const AntiTensor& b);

double binomial(int n, int k);
double factorial(int n);

}  // namespace clifford
