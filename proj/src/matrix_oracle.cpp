#include "clifford/matrix_oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace clifford {

namespace {

int parse_cap_env() {
    const char* env = std::getenv("CLIFFORD_MAX_DIM");
    if (!env) return 10;
    try {
        int v = std::stoi(env);
        if (v >= 1 && v <= 24) return v;
    } catch (...) {
    }
    return 10;
}

}  // namespace

int oracle_dimension_cap() {
    static const int cap = parse_cap_env();
    return cap;
}

void require_oracle_dimension(const TimeGrid& grid) {
    const int d = grid.slots();
    const int cap = oracle_dimension_cap();
    if (d > cap) {
        const double bytes = 16.0 * std::pow(2.0, 2.0 * d);
        throw std::invalid_argument(
            "matrix oracle: " + std::to_string(d) + " slots exceeds cap " +
            std::to_string(cap) + " (dense matrix would need ~" +
            std::to_string(bytes / (1024.0 * 1024.0)) + " MiB); set CLIFFORD_MAX_DIM to raise");
    }
}

MatrixRep identity_rep(const TimeGrid& grid) {
    require_oracle_dimension(grid);
    const Eigen::Index dim = Eigen::Index(1) << grid.slots();
    return MatrixRep{grid, Eigen::MatrixXcd::Identity(dim, dim)};
}

Eigen::VectorXcd vacuum(const TimeGrid& grid) {
    require_oracle_dimension(grid);
    const Eigen::Index dim = Eigen::Index(1) << grid.slots();
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(0) = 1.0;
    return v;
}

MatrixRep field_matrix(const TimeGrid& grid, int k) {
    require_oracle_dimension(grid);
    if (k < 1 || k > grid.slots())
        throw std::invalid_argument("field_matrix: slot out of range");
    const Eigen::Index dim = Eigen::Index(1) << grid.slots();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    const Mask bit = Mask(1) << (k - 1);
    const Mask lower = bit - 1;
    for (Eigen::Index b = 0; b < dim; ++b) {
        const int sign = (blades::popcount(Mask(b) & lower) & 1) ? -1 : 1;
        m(Eigen::Index(Mask(b) ^ bit), b) = double(sign);
    }
    return MatrixRep{grid, std::move(m)};
}

MatrixRep to_matrix(const CliffordElement& f) {
    const TimeGrid& grid = f.grid();
    require_oracle_dimension(grid);
    const Eigen::Index dim = Eigen::Index(1) << grid.slots();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [n, t] : f.levels()) {
        for (const auto& [blade, c] : t.coeffs()) {
            // The blade product Psi_{s1} ... Psi_{sn} acts right to left,
            // so the largest slot's factor hits the state first.
            for (Eigen::Index b = 0; b < dim; ++b) {
                Mask cur = Mask(b);
                int sign = 1;
                // iterate slots of the blade in decreasing order
                Mask rest = blade;
                while (rest) {
                    const int pos = 63 - __builtin_clzll(rest);
                    rest &= ~(Mask(1) << pos);
                    const Mask lower = (Mask(1) << pos) - 1;
                    if (blades::popcount(cur & lower) & 1) sign = -sign;
                    cur ^= Mask(1) << pos;
                }
                m(Eigen::Index(cur), b) += double(sign) * c;
            }
        }
    }
    return MatrixRep{grid, std::move(m)};
}

CliffordElement from_matrix(const MatrixRep& rep) {
    const TimeGrid& grid = rep.grid;
    const Eigen::Index dim = Eigen::Index(1) << grid.slots();
    if (rep.mat.rows() != dim || rep.mat.cols() != dim)
        throw std::invalid_argument("from_matrix: dimension mismatch with grid");
    CliffordElement out(grid);
    for (Eigen::Index b = 0; b < dim; ++b) {
        const Complex c = rep.mat(b, 0);
        if (c == Complex(0.0)) continue;
        const int n = blades::popcount(Mask(b));
        AntiTensor t(grid, n);
        t.add(Mask(b), c);
        out.add_level(t);
    }
    return out;
}

double operator_norm(const MatrixRep& rep) {
    // sqrt of the top eigenvalue of M* M.
    Eigen::MatrixXcd gram = rep.mat.adjoint() * rep.mat;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().maxCoeff();
    return std::sqrt(std::max(0.0, top));
}

namespace {

void require_self_adjoint(const MatrixRep& rep, double tol, const char* where) {
    const double dev = (rep.mat - rep.mat.adjoint()).cwiseAbs().maxCoeff();
    const double scale = 1.0 + rep.mat.cwiseAbs().maxCoeff();
    if (dev > tol * scale)
        throw std::invalid_argument(std::string(where) + ": matrix is not self-adjoint");
}

}  // namespace

std::vector<std::pair<double, double>> spectral(const MatrixRep& rep, double tol) {
    require_self_adjoint(rep, tol, "spectral");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rep.mat);
    std::vector<std::pair<double, double>> out;
    out.reserve(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double w = std::norm(es.eigenvectors()(0, i));
        out.emplace_back(es.eigenvalues()(i), w);
    }
    return out;
}

double spectral_tail(const std::vector<std::pair<double, double>>& spec, double a) {
    double s = 0.0;
    for (const auto& [lambda, w] : spec)
        if (lambda >= a - 1e-12) s += w;
    return s;
}

MatrixRep functional_calculus(const MatrixRep& rep,
                              const std::function<Complex(double)>& phi, double tol) {
    require_self_adjoint(rep, tol, "functional_calculus");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rep.mat);
    Eigen::VectorXcd d(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = phi(es.eigenvalues()(i));
    Eigen::MatrixXcd m =
        es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
    return MatrixRep{rep.grid, std::move(m)};
}

}  // namespace clifford
