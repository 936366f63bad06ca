#include <doctest.h>

#include "clifford/antisym_tensor.hpp"

using namespace clifford;

TEST_CASE("measure of slot unions") {
    CHECK(measure(TimeGrid(4, 1.0), SlotSet()) == 0.0);
    CHECK(measure(TimeGrid(4, 0.5), SlotSet::of({1, 2, 3})) == doctest::Approx(1.5));
    CHECK(measure(TimeGrid(4, 1.0), SlotSet::prefix(4)) == doctest::Approx(4.0));
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(TimeGrid(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid(4, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid(4, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(measure(TimeGrid(2, 1.0), SlotSet::of({3})), std::invalid_argument);
}

TEST_CASE("indicator vectors in the slot basis") {
    TimeGrid unit(4, 1.0);
    AntiTensor e1 = indicator_vector(unit, SlotSet::of({1}));
    CHECK(e1.coeff(0b0001) == Complex(1.0));
    CHECK(e1.coeffs().size() == 1);

    TimeGrid quarter(4, 0.25);
    AntiTensor ind = indicator_vector(quarter, SlotSet::of({1, 2}));
    CHECK(ind.coeff(0b0001) == Complex(0.5));
    CHECK(ind.coeff(0b0010) == Complex(0.5));

    CHECK(indicator_vector(unit, SlotSet()).coeffs().empty());
}

TEST_CASE("indicator norm matches measure and is additive on disjoint sets") {
    TimeGrid grid(6, 0.3);
    SlotSet a = SlotSet::of({1, 3, 4});
    SlotSet b = SlotSet::of({2, 6});
    AntiTensor ia = indicator_vector(grid, a);
    AntiTensor ib = indicator_vector(grid, b);
    CHECK(std::abs(inner(ia, ia)) == doctest::Approx(measure(grid, a)));
    CHECK(max_coeff_diff(indicator_vector(grid, a | b), ia + ib) == 0.0);
}

TEST_CASE("slot set helpers") {
    TimeGrid grid(5, 1.0);
    SlotSet a = SlotSet::of({2, 4});
    CHECK(a.count() == 2);
    CHECK(a.contains(4));
    CHECK(!a.contains(3));
    CHECK(a.complement(grid) == SlotSet::of({1, 3, 5}));
    CHECK(SlotSet::of({2}).subset_of(a));
    CHECK(!a.subset_of(SlotSet::of({2})));
    CHECK(SlotSet::prefix(0).empty());
}
