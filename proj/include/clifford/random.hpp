#pragma once

#include <cstdint>
#include <random>

#include "clifford/malliavin.hpp"

namespace clifford {

/// Seeded generator with an explicit 53-bit mapping to doubles, so that a
/// given seed produces the same stream on every platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [-1, 1].
    double symmetric() { return 2.0 * unit() - 1.0; }

    /// Uniform on [0, 1).
    double unit() {
        return double(engine_() >> 11) * 0x1.0p-53;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + int(engine_() % std::uint64_t(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

/// Random degree-n tensor with i.i.d. coefficients from the symmetric
/// bounded distribution on every increasing tuple.
AntiTensor random_tensor(const TimeGrid& grid, int degree, RandomSource& rng,
                         bool complex_coeffs = true);

/// Random chaos expansion with levels 0..max_degree.
CliffordElement random_element(const TimeGrid& grid, int max_degree, RandomSource& rng,
                               bool complex_coeffs = true);

/// Random self-adjoint element: (G + G*)/2 of a random G.
CliffordElement random_self_adjoint(const TimeGrid& grid, int max_degree, RandomSource& rng);

/// Random process (one element per slot).
ProcessElement random_process(const TimeGrid& grid, int max_degree, RandomSource& rng,
                              bool complex_coeffs = true);

/// Random adapted process: the slot-k component is supported on slots < k.
ProcessElement random_adapted(const TimeGrid& grid, int max_degree, RandomSource& rng,
                              bool complex_coeffs = true);

}  // namespace clifford
