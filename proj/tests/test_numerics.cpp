#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "yldqpt/numerics.hpp"

using namespace yldqpt;

namespace {

Matrix random_2x2(std::mt19937& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Matrix m(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = cplx(u(rng), u(rng));
    return m;
}

}  // namespace

TEST_CASE("pauli_decompose inverts the Pauli expansion") {
    std::mt19937 rng(7u);
    for (int k = 0; k < 50; ++k) {
        const Matrix m = random_2x2(rng, 2.0);
        const auto d = pauli_decompose(m);
        const Matrix back = d.c0 * identity2() + d.cx * sigma_x() +
                            d.cy * sigma_y() + d.cz * sigma_z();
        CHECK((back - m).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("expm matches the closed form for a Pauli vector") {
    // e^{a + v.sigma} = e^a [cosh|v| I + sinh|v| v.sigma/|v|]
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 40; ++k) {
        const cplx a(u(rng), u(rng)), vx(u(rng), u(rng)), vy(u(rng), u(rng)),
            vz(u(rng), u(rng));
        const Matrix m = a * identity2() + vx * sigma_x() + vy * sigma_y() +
                         vz * sigma_z();
        const cplx r = std::sqrt(vx * vx + vy * vy + vz * vz);
        Matrix want;
        if (std::abs(r) < 1e-12) {
            want = std::exp(a) * (identity2() + vx * sigma_x() +
                                  vy * sigma_y() + vz * sigma_z());
        } else {
            want = std::exp(a) *
                   (std::cosh(r) * identity2() +
                    std::sinh(r) / r *
                        (vx * sigma_x() + vy * sigma_y() + vz * sigma_z()));
        }
        CHECK((expm(m) - want).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("expm of zero is the identity") {
    const Matrix z = Matrix::Zero(3, 3);
    CHECK((expm(z) - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("expm rejects non-finite and non-square input") {
    Matrix bad(1, 1);
    bad(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(expm(bad), std::invalid_argument);
    CHECK_THROWS_AS(expm(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("logm_2x2 is a right inverse of expm") {
    std::mt19937 rng(13u);
    for (int k = 0; k < 60; ++k) {
        const Matrix m = random_2x2(rng, 1.5);
        Pauli2x2Decomposition d;
        try {
            d = logm_2x2(m);
        } catch (const branch_cut_error&) {
            continue;  // eigenvalue on the cut; nothing to invert
        } catch (const singular_matrix_error&) {
            continue;
        }
        const Matrix log_m = d.c0 * identity2() + d.cx * sigma_x() +
                             d.cy * sigma_y() + d.cz * sigma_z();
        CHECK((expm(log_m) - m).cwiseAbs().maxCoeff() < 1e-11);
    }
}

TEST_CASE("logm_2x2 stays on the principal branch") {
    // diag(e^{i phi}, e^{-i phi}) must come back with angles +-phi, not
    // phi - 2 pi.
    for (double phi : {0.3, 1.0, 2.8, 3.1}) {
        Matrix m = Matrix::Zero(2, 2);
        m(0, 0) = std::exp(cplx(0.0, phi));
        m(1, 1) = std::exp(cplx(0.0, -phi));
        const auto d = logm_2x2(m);
        CHECK(std::abs(d.c0) < 1e-14);
        CHECK(std::abs(d.cz - cplx(0.0, phi)) < 1e-12);
    }
}

TEST_CASE("logm_2x2 refuses singular and cut-straddling matrices") {
    Matrix sing = Matrix::Zero(2, 2);
    sing(0, 1) = 1.0;
    CHECK_THROWS_AS(logm_2x2(sing), singular_matrix_error);

    Matrix neg = Matrix::Identity(2, 2);
    neg(0, 0) = -2.0;  // eigenvalue on the negative real axis
    CHECK_THROWS_AS(logm_2x2(neg), branch_cut_error);
}

TEST_CASE("logm_2x2 handles nearly scalar matrices") {
    // Eigenvalues split by ~1e-9: the series path must agree with the exact
    // logarithm of the diagonal.
    const double eps = 1e-9;
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 2.0 + eps;
    m(1, 1) = 2.0 - eps;
    const auto d = logm_2x2(m);
    CHECK(std::abs(d.c0 - std::log(2.0)) < 1e-12);
    CHECK(std::abs(d.cz - cplx(eps / 2.0, 0.0)) < 1e-12);
    CHECK(std::abs(d.cx) < 1e-14);
}

TEST_CASE("kron reproduces hand-expanded blocks") {
    Matrix a(2, 2), b(2, 2);
    a << 1.0, 2.0, 3.0, 4.0;
    b << 0.0, cplx(0.0, 1.0), 5.0, 6.0;
    const Matrix k = kron(a, b);
    REQUIRE(k.rows() == 4);
    CHECK(k(0, 1) == cplx(0.0, 1.0));
    CHECK(k(1, 0) == cplx(5.0, 0.0));
    CHECK(k(3, 2) == cplx(20.0, 0.0));
    CHECK(k(3, 3) == cplx(24.0, 0.0));
}

TEST_CASE("kron_chain places operators with site 0 leftmost") {
    // sz on site 0 of 3 sites: diagonal +1 for the upper half of the basis.
    const Matrix m = kron_chain({sigma_z()}, {0}, 3);
    REQUIRE(m.rows() == 8);
    for (int b = 0; b < 8; ++b) {
        const double want = (b & 4) == 0 ? 1.0 : -1.0;
        CHECK(m(b, b) == cplx(want, 0.0));
    }
}

TEST_CASE("kron_chain composes repeated positions in order") {
    const Matrix xz = kron_chain({sigma_x(), sigma_z()}, {1, 1}, 2);
    const Matrix want = kron(identity2(), Matrix(sigma_x() * sigma_z()));
    CHECK((xz - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kron_chain validates its arguments") {
    CHECK_THROWS_AS(kron_chain({sigma_x()}, {0}, 13), std::invalid_argument);
    CHECK_THROWS_AS(kron_chain({sigma_x()}, {5}, 3), std::invalid_argument);
    CHECK_THROWS_AS(kron_chain({sigma_x(), sigma_z()}, {0}, 3),
                    std::invalid_argument);
}

TEST_CASE("cpow_int agrees with std::pow on integer exponents") {
    std::mt19937 rng(17u);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 30; ++k) {
        const cplx base(u(rng), u(rng));
        for (long e : {0L, 1L, 2L, 7L, -3L}) {
            const cplx got = cpow_int(base, e);
            const cplx want = std::pow(base, static_cast<double>(e));
            CHECK(oracle::rel_err(got, want) < 1e-13);
        }
    }
    CHECK(cpow_int(cplx(0.0, 0.0), 0) == cplx(1.0, 0.0));
}

TEST_CASE("all_finite spots contaminated entries") {
    Matrix m = Matrix::Zero(2, 2);
    CHECK(all_finite(m));
    m(1, 0) = cplx(0.0, std::numeric_limits<double>::quiet_NaN());
    CHECK(!all_finite(m));
}
