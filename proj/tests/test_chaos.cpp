#include <doctest.h>

#include "clifford/chaos.hpp"
#include "clifford/random.hpp"

using namespace clifford;

namespace {
const TimeGrid g4(4, 1.0);

double residual(const CliffordElement& a, const CliffordElement& b) {
    return l2_norm(a - b);
}
}  // namespace

TEST_CASE("products of fields") {
    CliffordElement p1 = CliffordElement::field(g4, 1);
    CliffordElement p2 = CliffordElement::field(g4, 2);

    CHECK(residual(multiply(p1, p1), CliffordElement::one(g4)) == 0.0);
    CHECK(residual(multiply(p1, p2),
                   CliffordElement::chaos(AntiTensor::basis_wedge(g4, {1, 2}))) == 0.0);

    CliffordElement j12 = CliffordElement::chaos(AntiTensor::basis_wedge(g4, {1, 2}));
    CHECK(residual(multiply(j12, j12), CliffordElement::scalar(g4, -1.0)) == 0.0);

    TimeGrid other(5, 1.0);
    CHECK_THROWS_AS(multiply(p1, CliffordElement::field(other, 1)), std::invalid_argument);
}

TEST_CASE("adjoints") {
    CliffordElement p1 = CliffordElement::field(g4, 1);
    CHECK(residual(adjoint(p1), p1) == 0.0);

    CliffordElement j12 = CliffordElement::chaos(AntiTensor::basis_wedge(g4, {1, 2}));
    CHECK(residual(adjoint(j12), (-1.0) * j12) == 0.0);

    RandomSource rng(17);
    CliffordElement f = random_element(g4, 4, rng);
    CHECK(residual(adjoint(adjoint(f)), f) == 0.0);
}

TEST_CASE("vacuum state") {
    CHECK(state_m(CliffordElement::one(g4)) == Complex(1.0));
    RandomSource rng(23);
    for (int n = 1; n <= 4; ++n)
        CHECK(state_m(CliffordElement::chaos(random_tensor(g4, n, rng))) == Complex(0.0));

    CliffordElement f = random_element(g4, 3, rng);
    const Complex positivity = state_m(multiply(adjoint(f), f));
    CHECK(positivity.real() >= 0.0);
    CHECK(std::abs(positivity.imag()) < 1e-14);
    CHECK(positivity.real() == doctest::Approx(std::abs(l2_inner(f, f))));
}

TEST_CASE("cross-level orthogonality and the product route to the inner product") {
    CliffordElement j12 = CliffordElement::chaos(AntiTensor::basis_wedge(g4, {1, 2}));
    CHECK(l2_inner(j12, j12) == Complex(1.0));
    CHECK(l2_inner(CliffordElement::field(g4, 1), j12) == Complex(0.0));

    RandomSource rng(29);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        CliffordElement f = random_element(g4, 3, rng);
        CliffordElement g = random_element(g4, 3, rng);
        worst = std::max(worst,
                         std::abs(l2_inner(f, g) - state_m(multiply(adjoint(f), g))));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("grading automorphism") {
    CliffordElement p1 = CliffordElement::field(g4, 1);
    CHECK(residual(beta(p1), (-1.0) * p1) == 0.0);
    CHECK(residual(beta(CliffordElement::one(g4)), CliffordElement::one(g4)) == 0.0);
    RandomSource rng(31);
    CliffordElement f = random_element(g4, 4, rng);
    CHECK(residual(beta(beta(f)), f) == 0.0);
}

TEST_CASE("conditional expectation keeps supported coefficients") {
    CliffordElement j12 = CliffordElement::chaos(AntiTensor::basis_wedge(g4, {1, 2}));
    CHECK(l2_norm(cond_expect(j12, SlotSet::of({1}))) == 0.0);

    CliffordElement mixed = CliffordElement::chaos(
        AntiTensor::basis(g4, 1) + AntiTensor::basis(g4, 2));
    CHECK(residual(cond_expect(mixed, SlotSet::of({1})), CliffordElement::field(g4, 1)) ==
          0.0);

    RandomSource rng(37);
    CliffordElement f = random_element(g4, 4, rng);
    CHECK(residual(cond_expect(f, SlotSet::full(g4)), f) == 0.0);
}

TEST_CASE("field anticommutators for real kernels") {
    RandomSource rng(41);
    double worst = 0.0;
    for (int t = 0; t < 25; ++t) {
        AntiTensor z = random_tensor(g4, 1, rng, false);
        AntiTensor w = random_tensor(g4, 1, rng, false);
        CliffordElement anti = multiply(CliffordElement::field(z), CliffordElement::field(w)) +
                               multiply(CliffordElement::field(w), CliffordElement::field(z));
        CliffordElement expect =
            CliffordElement::scalar(g4, 2.0 * inner(z, w));
        worst = std::max(worst, residual(anti, expect));
    }
    CHECK(worst < 1e-13);
}
