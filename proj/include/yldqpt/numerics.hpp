#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace yldqpt {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Eigenvalue of the matrix logarithm landed on the principal-branch cut
/// (negative real axis); coefficients there are not reproducible.
struct branch_cut_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix logarithm of a singular (non-invertible) matrix was requested.
struct singular_matrix_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Matrix identity2();
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();

/// Coefficients of a 2x2 matrix in the basis {I, sigma_x, sigma_y, sigma_z}.
struct Pauli2x2Decomposition {
    cplx c0;
    cplx cx;
    cplx cy;
    cplx cz;

    Matrix reconstruct() const;
};

Pauli2x2Decomposition pauli_decompose(const Matrix& m);

/// Dense matrix exponential. Accepts square matrices of dimension <= 4096
/// and holds a relative accuracy of ~1e-12 (Frobenius) for norms <= 50;
/// larger norms are handled by scaling-and-squaring inside the backend.
Matrix expm(const Matrix& m);

/// Principal-branch logarithm of an invertible 2x2 matrix, returned in the
/// Pauli basis. Throws singular_matrix_error for singular input and
/// branch_cut_error when an eigenvalue sits on the negative real axis.
Pauli2x2Decomposition logm_2x2(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);

/// Embeds 2x2 operators at the given sites of a spin-1/2 chain, identity
/// elsewhere; repeated positions compose by matrix product in argument
/// order. Dimension is 2^n_sites; n_sites > 12 is rejected.
Matrix kron_chain(const std::vector<Matrix>& site_ops,
                  const std::vector<int>& positions, int n_sites);

/// Integer power by binary exponentiation; exact exponent handling for the
/// moderate N used in partition functions.
cplx cpow_int(cplx base, long exponent);

bool all_finite(const Matrix& m);

}  // namespace yldqpt
