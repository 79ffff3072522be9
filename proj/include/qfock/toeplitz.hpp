#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qfock/measure.hpp"
#include "qfock/quaternion.hpp"
#include "qfock/slice_function.hpp"

namespace qfock {

// Dense quaternion matrix acting on coefficient columns with scalars on
// the right.
class QuatMatrix {
public:
    QuatMatrix() = default;
    QuatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Quaternion& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Quaternion& at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    QuatMatrix operator+(const QuatMatrix& other) const;
    QuatMatrix operator-(const QuatMatrix& other) const;
    QuatMatrix operator*(const QuatMatrix& other) const;
    QuatMatrix adjoint() const;  // conjugate transpose
    // Right multiplication of every entry (column scaling by a constant
    // matrix diag(c) on the right).
    QuatMatrix times_const(const Quaternion& c) const;

    std::vector<Quaternion> apply(const std::vector<Quaternion>& v) const;

    double max_abs_diff(const QuatMatrix& other) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Quaternion> data_;
};

// Complex 2N x 2N image of a quaternion matrix: writing M = A + B j with
// complex blocks, the image is [[A, B], [-conj(B), conj(A)]].  The map is
// multiplicative and sends the quaternionic adjoint to the Hermitian
// adjoint, so operator norms can be read off the image.
Eigen::MatrixXcd complex_image(const QuatMatrix& m);

// Coefficient column a + b j goes to [a; -conj(b)]; with this pairing,
// complex_image(M) * column_image(v) = column_image(M v).
Eigen::VectorXcd column_image(const std::vector<Quaternion>& v);

double operator_norm(const QuatMatrix& m);          // largest singular value
std::vector<double> singular_values(const QuatMatrix& m);

// Orthonormal-basis scale factors: e_n(z) = z^n sqrt(alpha^n / n!).
double basis_scale(double alpha, int n);

// Coefficients of the unit-norm kernel at z in the e_n basis:
//   v_n = sqrt(alpha^n/n!) conj(z)^n e^{-alpha|z|^2/2},  n = 0..N.
std::vector<Quaternion> normalized_kernel_basis_coeffs(double alpha,
                                                       const Quaternion& z, int N);

// Matrix of the multiply-then-project operator g -> proj(f * g) on the
// basis e_0..e_N.  Entries are slice-plane integrals
//   integral of conj(e_m) (f * e_n) dlambda on the slice of I,
// computed with an n_quad x n_quad Gaussian rule; the slice product with a
// real-coefficient basis element needs only the splitting of f on that
// slice.  Entries are filled in parallel (each entry's quadrature sum runs
// serially, so results do not depend on thread count).
QuatMatrix toeplitz_matrix(const SliceFunction& f, double alpha, int N,
                           const ImaginaryUnit& I = ImaginaryUnit::i(),
                           int n_quad = 80);

// Serial reference of the same computation (used by tests and the
// benchmark to pin down the parallel version).
QuatMatrix toeplitz_matrix_serial(const SliceFunction& f, double alpha, int N,
                                  const ImaginaryUnit& I = ImaginaryUnit::i(),
                                  int n_quad = 80);

// Matrix for a positive discrete measure: entries are the exact sums
//   sum_a w_a conj(e_m(a)) e_n(a) e^{-alpha|a|^2}.
QuatMatrix toeplitz_matrix_measure(const DiscreteMeasure& mu, double alpha, int N);

// Quadratic form of the measure operator at a coefficient vector:
//   <T_mu g, g> = sum_a w_a |g(a) e^{-alpha|a|^2/2}|^2  (always >= 0).
double measure_quadratic_form(const DiscreteMeasure& mu, double alpha,
                              const std::vector<Quaternion>& coeffs);

// Symbol of the adjoint operator: writing f = A + B J on the slice of I,
// the adjoint of the operator with symbol f carries the symbol
//   g = conj(A)(z) + (-B(conj z)) J,
// extended from that slice.  (Checked at the matrix level by comparing
// toeplitz_matrix(g) with toeplitz_matrix(f).adjoint().)
SliceFunction adjoint_symbol(const SliceFunction& f,
                             const ImaginaryUnit& I = ImaginaryUnit::i());

// Berezin symbol of a matrix: <M k_z, k_z> through the basis coefficients
// of the unit-norm kernel (exact given the matrix).
Quaternion berezin_symbol(const QuatMatrix& m, double alpha, const Quaternion& z);

// Right-multiplication intertwiner: the coefficient map a_n -> I a_n.  For
// intrinsic h, the operator with symbol h I factors as (operator of h)
// followed by this map, i.e. matrix times diag(I).
std::vector<Quaternion> slice_isometry_apply(const std::vector<Quaternion>& coeffs,
                                             const ImaginaryUnit& I);
QuatMatrix slice_isometry_matrix(const ImaginaryUnit& I, int N);

// ---- boundedness / compactness probes ---------------------------------------

struct SymbolProbe {
    std::string name;
    double norm_small = 0.0;       // operator norm at N
    double norm_large = 0.0;       // operator norm at 2N
    double norm_growth = 0.0;      // norm_large / norm_small
    double berezin_sup = 0.0;      // sup |Berezin symbol| on trusted window
    double kernel_image_near = 0.0;   // ||T k_z|| at |z| = R0
    double kernel_image_far = 0.0;    // ||T k_z|| at |z| = 2 R0
    double kernel_image_decay = 0.0;  // far / near
    double tail_singular_fraction = 0.0;  // sigma_{3N/4} / sigma_0 at 2N
    bool bounded_verdict = false;
    bool compact_verdict = false;
};

// Norm-growth and Berezin/kernel-image statistics for one symbol.  The
// trusted window for Berezin evaluation is |z| <= 0.6 sqrt(N/alpha), where
// the N-term matrix still resolves the kernel.
SymbolProbe probe_symbol(const std::string& name, const SliceFunction& f,
                         double alpha, int N, const ImaginaryUnit& I = ImaginaryUnit::i(),
                         int n_quad = 80, double growth_tol = 1.10,
                         double decay_tol = 0.5);

}  // namespace qfock
