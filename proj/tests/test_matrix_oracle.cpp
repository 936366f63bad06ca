#include <doctest.h>

#include "clifford/matrix_oracle.hpp"
#include "clifford/random.hpp"

using namespace clifford;

TEST_CASE("field matrices satisfy the anticommutation relations") {
    TimeGrid grid(4, 1.0);
    const Eigen::Index dim = 16;
    for (int i = 1; i <= 4; ++i) {
        MatrixRep pi = field_matrix(grid, i);
        CHECK((pi.mat - pi.mat.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((pi.mat * pi.mat - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() ==
              0.0);
        CHECK(std::abs((vacuum(grid).adjoint() * pi.mat * vacuum(grid))(0)) == 0.0);
        for (int j = i + 1; j <= 4; ++j) {
            MatrixRep pj = field_matrix(grid, j);
            CHECK((pi.mat * pj.mat + pj.mat * pi.mat).cwiseAbs().maxCoeff() == 0.0);
        }
    }
}

TEST_CASE("vacuum expectation of blade monomials vanishes") {
    TimeGrid grid(5, 1.0);
    const Eigen::VectorXcd omega = vacuum(grid);
    for (int i = 1; i <= 5; ++i) {
        for (int j = i + 1; j <= 5; ++j) {
            Eigen::MatrixXcd prod = field_matrix(grid, i).mat * field_matrix(grid, j).mat;
            CHECK(std::abs((omega.adjoint() * prod * omega)(0)) == 0.0);
            for (int k = j + 1; k <= 5; ++k) {
                Eigen::MatrixXcd triple = prod * field_matrix(grid, k).mat;
                CHECK(std::abs((omega.adjoint() * triple * omega)(0)) == 0.0);
            }
        }
    }
}

TEST_CASE("representation of simple elements") {
    TimeGrid grid(4, 1.0);
    CHECK((to_matrix(CliffordElement::one(grid)).mat -
           Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() == 0.0);

    MatrixRep j12 = to_matrix(CliffordElement::chaos(AntiTensor::basis_wedge(grid, {1, 2})));
    CHECK((j12.mat * j12.mat + Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() ==
          0.0);
}

TEST_CASE("vacuum column carries the chaos coefficients") {
    TimeGrid grid(5, 0.5);
    RandomSource rng(89);
    double worst_norm = 0.0, worst_round = 0.0;
    for (int t = 0; t < 100; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        MatrixRep m = to_matrix(f);
        worst_norm = std::max(worst_norm, std::abs(m.mat.col(0).norm() - l2_norm(f)));
        worst_round = std::max(worst_round, l2_norm(from_matrix(m) - f));
    }
    CHECK(worst_norm < 1e-12);
    CHECK(worst_round == 0.0);

    CHECK(l2_norm(from_matrix(identity_rep(grid)) - CliffordElement::one(grid)) == 0.0);
    MatrixRep p12 = field_matrix(grid, 1);
    p12.mat = p12.mat * field_matrix(grid, 2).mat;
    CHECK(l2_norm(from_matrix(p12) -
                  CliffordElement::chaos(AntiTensor::basis_wedge(grid, {1, 2}))) == 0.0);
}

TEST_CASE("representation is a homomorphism") {
    TimeGrid grid(5, 1.0);
    RandomSource rng(97);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        CliffordElement f = random_element(grid, 3, rng);
        CliffordElement g = random_element(grid, 3, rng);
        worst = std::max(worst, (to_matrix(multiply(f, g)).mat -
                                 to_matrix(f).mat * to_matrix(g).mat)
                                    .cwiseAbs()
                                    .maxCoeff());
        worst = std::max(
            worst,
            (to_matrix(adjoint(f)).mat - to_matrix(f).mat.adjoint().eval()).cwiseAbs().maxCoeff());
        worst = std::max(worst, std::abs(state_m(f) - to_matrix(f).mat(0, 0)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("vacuum state is tracial on represented elements") {
    TimeGrid grid(4, 1.0);
    RandomSource rng(101);
    double worst = 0.0;
    for (int t = 0; t < 25; ++t) {
        Eigen::MatrixXcd m = to_matrix(random_element(grid, 3, rng)).mat;
        Eigen::MatrixXcd n = to_matrix(random_element(grid, 3, rng)).mat;
        worst = std::max(worst, std::abs((m * n)(0, 0) - (n * m)(0, 0)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("spectral decomposition of a field") {
    TimeGrid grid(3, 1.0);
    auto spec = spectral(field_matrix(grid, 1));
    double w_plus = 0.0, w_minus = 0.0;
    for (auto& [lambda, w] : spec) {
        if (lambda > 0) w_plus += w;
        else w_minus += w;
        CHECK(std::abs(std::abs(lambda) - 1.0) < 1e-12);
    }
    CHECK(w_plus == doctest::Approx(0.5));
    CHECK(w_minus == doctest::Approx(0.5));
    CHECK(spectral_tail(spec, 1.0) == doctest::Approx(0.5));
    CHECK(spectral_tail(spec, -1.0) == doctest::Approx(1.0));
    CHECK(operator_norm(field_matrix(grid, 1)) == doctest::Approx(1.0));

    MatrixRep skew = field_matrix(grid, 1);
    skew.mat = skew.mat * field_matrix(grid, 2).mat;
    CHECK_THROWS_AS(spectral(skew), std::invalid_argument);
}

TEST_CASE("functional calculus") {
    TimeGrid grid(4, 0.25);
    // Psi(1_{[0,t]})^2 = t for t = 3 * width
    CliffordElement psi_t =
        CliffordElement::chaos(indicator_vector(grid, SlotSet::of({1, 2, 3})));
    MatrixRep sq = functional_calculus(to_matrix(psi_t), [](double x) { return Complex(x * x); });
    CHECK((sq.mat - 0.75 * Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-12);

    // exp(is Psi_1) = cos(s) + i sin(s) Psi_1
    TimeGrid unit(3, 1.0);
    const double s = 0.7;
    MatrixRep rot = functional_calculus(
        to_matrix(CliffordElement::field(unit, 1)),
        [s](double x) { return std::exp(Complex(0, s * x)); });
    Eigen::MatrixXcd expect =
        std::cos(s) * Eigen::MatrixXcd::Identity(8, 8) +
        Complex(0, std::sin(s)) * field_matrix(unit, 1).mat;
    CHECK((rot.mat - expect).cwiseAbs().maxCoeff() < 1e-12);

    MatrixRep ident = functional_calculus(to_matrix(CliffordElement::field(unit, 2)),
                                          [](double x) { return Complex(x); });
    CHECK((ident.mat - field_matrix(unit, 2).mat).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dimension cap is enforced with a memory estimate") {
    const int cap = oracle_dimension_cap();
    if (cap >= 62) return;
    TimeGrid grid(cap + 1, 1.0);
    CHECK_THROWS_WITH_AS(to_matrix(CliffordElement::one(grid)),
                         doctest::Contains("CLIFFORD_MAX_DIM"), std::invalid_argument);
}
