#include "yldqpt/numerics.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace yldqpt {

Matrix identity2() { return Matrix::Identity(2, 2); }

Matrix sigma_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix sigma_y() {
    Matrix m(2, 2);
    m << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
    return m;
}

Matrix sigma_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix Pauli2x2Decomposition::reconstruct() const {
    Matrix m(2, 2);
    m(0, 0) = c0 + cz;
    m(0, 1) = cx - cplx(0, 1) * cy;
    m(1, 0) = cx + cplx(0, 1) * cy;
    m(1, 1) = c0 - cz;
    return m;
}

Pauli2x2Decomposition pauli_decompose(const Matrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("pauli_decompose: matrix must be 2x2");
    Pauli2x2Decomposition d;
    d.c0 = 0.5 * (m(0, 0) + m(1, 1));
    d.cx = 0.5 * (m(0, 1) + m(1, 0));
    d.cy = 0.5 * cplx(0, 1) * (m(0, 1) - m(1, 0));
    d.cz = 0.5 * (m(0, 0) - m(1, 1));
    return d;
}

Matrix expm(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("expm: matrix must be square");
    if (m.rows() > 4096)
        throw std::invalid_argument("expm: dimension exceeds 4096");
    if (!all_finite(m))
        throw std::invalid_argument("expm: input has non-finite entries");
    Matrix r = m.exp();
    if (!all_finite(r))
        throw std::overflow_error("expm: result overflows double range");
    return r;
}

Pauli2x2Decomposition logm_2x2(const Matrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("logm_2x2: matrix must be 2x2");
    const Pauli2x2Decomposition d = pauli_decompose(m);
    const cplx q = std::sqrt(d.cx * d.cx + d.cy * d.cy + d.cz * d.cz);
    const cplx lam_p = d.c0 + q;
    const cplx lam_m = d.c0 - q;
    const double scale = std::abs(lam_p) + std::abs(lam_m);
    if (scale == 0.0 || std::abs(lam_p) < 1e-300 * scale ||
        std::abs(lam_m) < 1e-300 * scale)
        throw singular_matrix_error("logm_2x2: singular matrix");
    for (const cplx lam : {lam_p, lam_m}) {
        if (lam.real() < 0.0 && std::abs(lam.imag()) <= 1e-12 * std::abs(lam))
            throw branch_cut_error(
                "logm_2x2: eigenvalue on the negative real axis");
    }
    const cplx l0 = 0.5 * (std::log(lam_p) + std::log(lam_m));
    // coef = (log(lam_p) - log(lam_m)) / (2q); for small q/c0 the direct
    // quotient loses digits, so switch to the atanh series. Both eigenvalues
    // then sit next to c0 and no branch separates them.
    cplx coef;
    if (std::abs(q) <= 1e-4 * std::abs(d.c0)) {
        const cplx r2 = (q / d.c0) * (q / d.c0);
        coef = (1.0 + r2 * (1.0 / 3.0 + r2 * (1.0 / 5.0 + r2 / 7.0))) / d.c0;
    } else {
        coef = 0.5 * (std::log(lam_p) - std::log(lam_m)) / q;
    }
    return {l0, coef * d.cx, coef * d.cy, coef * d.cz};
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return r;
}

Matrix kron_chain(const std::vector<Matrix>& site_ops,
                  const std::vector<int>& positions, int n_sites) {
    if (n_sites < 1) throw std::invalid_argument("kron_chain: n_sites < 1");
    if (n_sites > 12)
        throw std::invalid_argument("kron_chain: dimension overflow (n_sites > 12)");
    if (site_ops.size() != positions.size())
        throw std::invalid_argument("kron_chain: operator/position count mismatch");
    std::vector<Matrix> per_site(static_cast<size_t>(n_sites), identity2());
    for (size_t k = 0; k < site_ops.size(); ++k) {
        if (site_ops[k].rows() != 2 || site_ops[k].cols() != 2)
            throw std::invalid_argument("kron_chain: site operators must be 2x2");
        const int p = positions[k];
        if (p < 0 || p >= n_sites)
            throw std::invalid_argument("kron_chain: position out of range");
        per_site[static_cast<size_t>(p)] =
            per_site[static_cast<size_t>(p)] * site_ops[k];
    }
    Matrix r = per_site[0];
    for (int s = 1; s < n_sites; ++s) r = kron(r, per_site[static_cast<size_t>(s)]);
    return r;
}

cplx cpow_int(cplx base, long exponent) {
    if (exponent < 0) return 1.0 / cpow_int(base, -exponent);
    cplx r = 1.0;
    cplx b = base;
    long e = exponent;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool all_finite(const Matrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const cplx v = m(i, j);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        }
    return true;
}

}  // namespace yldqpt
