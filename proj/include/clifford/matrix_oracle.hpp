#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

#include "clifford/chaos.hpp"

namespace clifford {

/// Brute-force realization of the algebra on 2^d dimensions.  Slot k acts
/// as a bit flip with a parity string on the lower slots:
///   Psi_k |b> = (-1)^{# occupied slots below k} |b xor bit_k>,
/// vacuum = index 0.  Self-adjoint, squares to the identity, and distinct
/// slots anticommute; the layout beyond that is not part of the contract.
struct MatrixRep {
    TimeGrid grid;
    Eigen::MatrixXcd mat;
};

/// Dimension guard for 2^d x 2^d dense storage.  Default cap 10; the
/// CLIFFORD_MAX_DIM environment variable overrides it.
int oracle_dimension_cap();
void require_oracle_dimension(const TimeGrid& grid);

MatrixRep identity_rep(const TimeGrid& grid);
MatrixRep field_matrix(const TimeGrid& grid, int k);

/// Vacuum vector (first standard basis vector).
Eigen::VectorXcd vacuum(const TimeGrid& grid);

/// Represent a chaos expansion: sum over coefficients of signed
/// bit-flip strings.  <vacuum, to_matrix(F) vacuum> = m(F), and the column
/// over the vacuum carries F's chaos coefficients.
MatrixRep to_matrix(const CliffordElement& f);

/// Inverse identification via the vacuum column; exact on members of the
/// represented algebra.
CliffordElement from_matrix(const MatrixRep& rep);

/// Largest singular value.
double operator_norm(const MatrixRep& rep);

/// Eigenvalue / vacuum-weight pairs of a self-adjoint representative,
/// ascending by eigenvalue; weights sum to 1.  Throws on non-self-adjoint
/// input (tolerance-scaled check).
std::vector<std::pair<double, double>> spectral(const MatrixRep& rep, double tol = 1e-9);

/// m(E([a, inf))): total vacuum weight of eigenvalues >= a (with a small
/// guard against ties at the threshold).
double spectral_tail(const std::vector<std::pair<double, double>>& spec, double a);

/// phi applied on the spectrum of a self-adjoint representative.
MatrixRep functional_calculus(const MatrixRep& rep,
                              const std::function<Complex(double)>& phi, double tol = 1e-9);

}  // namespace clifford
