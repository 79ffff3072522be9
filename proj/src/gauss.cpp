#include "qfock/gauss.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfock {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
// orthogonal-polynomial recurrence, weights come from the first components
// of the eigenvectors scaled by the total mass of the weight function.
static Nodes1D golub_welsch(const Eigen::VectorXd& offdiag, double mass) {
    const int n = static_cast<int>(offdiag.size()) + 1;
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) {
        jacobi(k, k + 1) = offdiag(k);
        jacobi(k + 1, k) = offdiag(k);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("quadrature eigensolve failed");
    Nodes1D out;
    out.x.resize(n);
    out.w.resize(n);
    for (int k = 0; k < n; ++k) {
        out.x[k] = es.eigenvalues()(k);
        const double v0 = es.eigenvectors()(0, k);
        out.w[k] = mass * v0 * v0;
    }
    return out;
}

Nodes1D gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    Eigen::VectorXd off(n - 1);
    for (int k = 1; k < n; ++k) {
        const double dk = static_cast<double>(k);
        off(k - 1) = dk / std::sqrt(4.0 * dk * dk - 1.0);
    }
    return golub_welsch(off, 2.0);
}

Nodes1D gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n >= 1 required");
    Eigen::VectorXd off(n - 1);
    for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(static_cast<double>(k) / 2.0);
    return golub_welsch(off, std::sqrt(std::numbers::pi));
}

}  // namespace qfock
