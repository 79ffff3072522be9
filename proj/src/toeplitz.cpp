#include "qfock/toeplitz.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

#include "qfock/fock.hpp"
#include "qfock/gauss.hpp"
#include "qfock/parallel.hpp"
#include "qfock/quadrature.hpp"

namespace qfock {

QuatMatrix QuatMatrix::operator+(const QuatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("QuatMatrix: shape mismatch");
    QuatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
    return out;
}

QuatMatrix QuatMatrix::operator-(const QuatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("QuatMatrix: shape mismatch");
    QuatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
    return out;
}

QuatMatrix QuatMatrix::operator*(const QuatMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("QuatMatrix: shape mismatch");
    QuatMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < other.cols_; ++c) {
            Quaternion s{};
            for (int k = 0; k < cols_; ++k) s += at(r, k) * other.at(k, c);
            out.at(r, c) = s;
        }
    }
    return out;
}

QuatMatrix QuatMatrix::adjoint() const {
    QuatMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = conj(at(r, c));
    return out;
}

QuatMatrix QuatMatrix::times_const(const Quaternion& c) const {
    QuatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * c;
    return out;
}

std::vector<Quaternion> QuatMatrix::apply(const std::vector<Quaternion>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("QuatMatrix::apply: length mismatch");
    std::vector<Quaternion> out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        Quaternion s{};
        for (int c = 0; c < cols_; ++c) s += at(r, c) * v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = s;
    }
    return out;
}

double QuatMatrix::max_abs_diff(const QuatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("QuatMatrix: shape mismatch");
    double best = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k)
        best = std::max(best, (data_[k] - other.data_[k]).norm());
    return best;
}

Eigen::MatrixXcd complex_image(const QuatMatrix& m) {
    const int R = m.rows(), C = m.cols();
    Eigen::MatrixXcd out(2 * R, 2 * C);
    for (int r = 0; r < R; ++r) {
        for (int c = 0; c < C; ++c) {
            const Quaternion& q = m.at(r, c);
            const std::complex<double> a{q.x0, q.x1};
            const std::complex<double> b{q.x2, q.x3};
            out(r, c) = a;
            out(r, C + c) = b;
            out(R + r, c) = -std::conj(b);
            out(R + r, C + c) = std::conj(a);
        }
    }
    return out;
}

Eigen::VectorXcd column_image(const std::vector<Quaternion>& v) {
    const int n = static_cast<int>(v.size());
    Eigen::VectorXcd out(2 * n);
    for (int k = 0; k < n; ++k) {
        const Quaternion& q = v[static_cast<std::size_t>(k)];
        out(k) = std::complex<double>{q.x0, q.x1};
        out(n + k) = -std::conj(std::complex<double>{q.x2, q.x3});
    }
    return out;
}

double operator_norm(const QuatMatrix& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(complex_image(m));
    return svd.singularValues()(0);
}

std::vector<double> singular_values(const QuatMatrix& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(complex_image(m));
    const auto& s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

double basis_scale(double alpha, int n) {
    return std::exp(0.5 * (n * std::log(alpha) - std::lgamma(n + 1.0)));
}

std::vector<Quaternion> normalized_kernel_basis_coeffs(double alpha,
                                                       const Quaternion& z, int N) {
    std::vector<Quaternion> v(static_cast<std::size_t>(N) + 1);
    const double damp = std::exp(-0.5 * alpha * z.norm_sq());
    const Quaternion zbar = conj(z);
    Quaternion zp = Quaternion::one();
    for (int n = 0; n <= N; ++n) {
        v[static_cast<std::size_t>(n)] = (basis_scale(alpha, n) * damp) * zp;
        zp = zp * zbar;
    }
    return v;
}

namespace {

// Shared entry computation: entry (m, n) of the matrix over an explicit
// node list.  Splitting f on the slice once per node would be cheaper
// globally, but keeping each entry self-contained keeps the parallel and
// serial fills byte-identical cell by cell.
struct EntryJob {
    const SliceFunction* f;
    double alpha;
    ImaginaryUnit I;
    ImaginaryUnit J;
    const PlaneRule* rule;
    int N;

    Quaternion entry(int m, int n) const {
        const double sm = basis_scale(alpha, m);
        const double sn = basis_scale(alpha, n);
        Quaternion acc{};
        for (std::size_t k = 0; k < rule->size(); ++k) {
            const double x = rule->x[k], y = rule->y[k];
            const Complex z{x, y};
            const auto [F0, F1] = split_components((*f)(from_slice(x, y, I)), I, J);
            // slice product with a real-coefficient basis element: the
            // second splitting component of e_n vanishes, so
            // (f * e_n)|_I = F0 E + (F1 E) J with E = e_n as a complex value.
            const Complex E = std::pow(z, n) * sn;
            const Complex Em_bar = std::conj(std::pow(z, m)) * sm;
            const Complex u = Em_bar * (F0 * E);
            const Complex v = Em_bar * (F1 * E);
            const double dens = lambda_slice_density(alpha, x, y);
            acc += dens * rule->w[k] * (embed(u, I) + embed(v, I) * J.q());
        }
        return acc;
    }
};

}  // namespace

QuatMatrix toeplitz_matrix(const SliceFunction& f, double alpha, int N,
                           const ImaginaryUnit& I, int n_quad) {
    const PlaneRule rule = plane_rule_gaussian(n_quad, alpha);
    const EntryJob job{&f, alpha, I, orthogonal_unit(I), &rule, N};
    QuatMatrix out(N + 1, N + 1);
    const std::size_t side = static_cast<std::size_t>(N) + 1;
    parallel_for_index(side * side, [&](std::size_t idx) {
        const int m = static_cast<int>(idx / side);
        const int n = static_cast<int>(idx % side);
        out.at(m, n) = job.entry(m, n);
    });
    return out;
}

QuatMatrix toeplitz_matrix_serial(const SliceFunction& f, double alpha, int N,
                                  const ImaginaryUnit& I, int n_quad) {
    const PlaneRule rule = plane_rule_gaussian(n_quad, alpha);
    const EntryJob job{&f, alpha, I, orthogonal_unit(I), &rule, N};
    QuatMatrix out(N + 1, N + 1);
    for (int m = 0; m <= N; ++m)
        for (int n = 0; n <= N; ++n) out.at(m, n) = job.entry(m, n);
    return out;
}

QuatMatrix toeplitz_matrix_measure(const DiscreteMeasure& mu, double alpha, int N) {
    QuatMatrix out(N + 1, N + 1);
    for (const Atom& atom : mu.atoms) {
        const Quaternion a = atom.point();
        const double damp = std::exp(-alpha * a.norm_sq());
        std::vector<Quaternion> e(static_cast<std::size_t>(N) + 1);
        Quaternion ap = Quaternion::one();
        for (int n = 0; n <= N; ++n) {
            e[static_cast<std::size_t>(n)] = basis_scale(alpha, n) * ap;
            ap = ap * a;
        }
        for (int m = 0; m <= N; ++m)
            for (int n = 0; n <= N; ++n)
                out.at(m, n) += (atom.weight * damp) *
                                (conj(e[static_cast<std::size_t>(m)]) *
                                 e[static_cast<std::size_t>(n)]);
    }
    return out;
}

double measure_quadratic_form(const DiscreteMeasure& mu, double alpha,
                              const std::vector<Quaternion>& coeffs) {
    const SliceFunction g = SliceFunction::poly(coeffs);
    double s = 0.0;
    for (const Atom& atom : mu.atoms) {
        const Quaternion a = atom.point();
        const double v = g(a).norm() * std::exp(-0.5 * alpha * a.norm_sq());
        s += atom.weight * v * v;
    }
    return s;
}

SliceFunction adjoint_symbol(const SliceFunction& f, const ImaginaryUnit& I) {
    const ImaginaryUnit J = orthogonal_unit(I);
    return extend_from_slice(
        [f, I, J](Complex z) -> Quaternion {
            const auto [A, B] =
                split_components(f(embed(z, I)), I, J);
            const auto [A_conj_pt, B_conj_pt] =
                split_components(f(embed(std::conj(z), I)), I, J);
            (void)A_conj_pt;
            const Complex C = std::conj(A);
            const Complex D = -B_conj_pt;
            return embed(C, I) + embed(D, I) * J.q();
        },
        I);
}

Quaternion berezin_symbol(const QuatMatrix& m, double alpha, const Quaternion& z) {
    const int N = m.cols() - 1;
    const std::vector<Quaternion> v = normalized_kernel_basis_coeffs(alpha, z, N);
    const std::vector<Quaternion> mv = m.apply(v);
    Quaternion s{};
    for (std::size_t k = 0; k < v.size(); ++k) s += conj(v[k]) * mv[k];
    return s;
}

std::vector<Quaternion> slice_isometry_apply(const std::vector<Quaternion>& coeffs,
                                             const ImaginaryUnit& I) {
    std::vector<Quaternion> out(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) out[k] = I.q() * coeffs[k];
    return out;
}

QuatMatrix slice_isometry_matrix(const ImaginaryUnit& I, int N) {
    QuatMatrix out(N + 1, N + 1);
    for (int n = 0; n <= N; ++n) out.at(n, n) = I.q();
    return out;
}

SymbolProbe probe_symbol(const std::string& name, const SliceFunction& f,
                         double alpha, int N, const ImaginaryUnit& I, int n_quad,
                         double growth_tol, double decay_tol) {
    SymbolProbe p;
    p.name = name;

    const QuatMatrix small = toeplitz_matrix(f, alpha, N, I, n_quad);
    const QuatMatrix large = toeplitz_matrix(f, alpha, 2 * N, I, n_quad);
    p.norm_small = operator_norm(small);
    p.norm_large = operator_norm(large);
    p.norm_growth = p.norm_small > 0.0 ? p.norm_large / p.norm_small : 1.0;

    // Berezin symbol over the trusted window of the large matrix.
    const double trust = 0.6 * std::sqrt((2.0 * N) / alpha);
    for (int s = 0; s <= 8; ++s) {
        const double t = trust * s / 8.0;
        const Quaternion z = from_slice(t / std::sqrt(2.0), t / std::sqrt(2.0), I);
        p.berezin_sup = std::max(p.berezin_sup,
                                 berezin_symbol(large, alpha, z).norm());
    }

    // Image of far-out unit-norm kernels: compact operators flatten them.
    const double R0 = 0.35 * std::sqrt((2.0 * N) / alpha);
    const auto image_norm = [&](double radius) {
        const Quaternion z = from_slice(radius / std::sqrt(2.0),
                                        radius / std::sqrt(2.0), I);
        const std::vector<Quaternion> v =
            normalized_kernel_basis_coeffs(alpha, z, 2 * N);
        const std::vector<Quaternion> mv = large.apply(v);
        double s = 0.0;
        for (const Quaternion& q : mv) s += q.norm_sq();
        return std::sqrt(s);
    };
    p.kernel_image_near = image_norm(R0);
    p.kernel_image_far = image_norm(2.0 * R0);
    p.kernel_image_decay =
        p.kernel_image_near > 0.0 ? p.kernel_image_far / p.kernel_image_near : 0.0;

    const std::vector<double> sv = singular_values(large);
    const std::size_t tail_index = (sv.size() * 3) / 4;
    p.tail_singular_fraction = sv[0] > 0.0 ? sv[tail_index] / sv[0] : 0.0;

    p.bounded_verdict = p.norm_growth <= growth_tol;
    p.compact_verdict = p.bounded_verdict && p.kernel_image_decay <= decay_tol;
    return p;
}

}  // namespace qfock
