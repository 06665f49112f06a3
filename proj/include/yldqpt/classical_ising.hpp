#pragma once

#include <optional>
#include <vector>

#include "yldqpt/numerics.hpp"

namespace yldqpt::ising {

/// Periodic ferromagnetic chain in a purely imaginary field i*h.
struct ClassicalIsing1DParams {
    double beta = 1.0;  // inverse temperature, > 0
    double J = 1.0;     // coupling, > 0
    double h = 0.0;     // imaginary-field strength (the physical field is i*h)
    int N = 1;          // spin count, >= 1

    void validate() const;
};

/// Periodic N x M lattice; J1 couples neighbours within a row, J2 couples
/// neighbouring rows, the field is i*h at every site.
struct ClassicalIsing2DParams {
    double beta = 1.0;
    double J1 = 1.0;
    double J2 = 1.0;
    double h = 0.0;
    int N = 1;  // row width
    int M = 1;  // row count

    void validate() const;
};

struct YangLeeZeroSet {
    std::vector<double> zeros;          // ascending field values h_m
    std::vector<cplx> fugacity_points;  // e^{2 i beta h_m}, on the unit circle
    double h_c = 0.0;                   // onset field below which no zeros exist
};

/// 2x2 bond transfer matrix [[e^{bJ+ibh}, e^{-bJ}], [e^{-bJ}, e^{bJ-ibh}]].
Matrix transfer_matrix_1d(const ClassicalIsing1DParams& p);

/// Larger/smaller transfer-matrix eigenvalue, radical form with the
/// principal complex square root.
std::pair<cplx, cplx> transfer_eigenvalues_1d(const ClassicalIsing1DParams& p);

/// Z = lambda_+^N + lambda_-^N.
cplx partition_1d_closed(const ClassicalIsing1DParams& p);

/// Cosine form 2 e^{N beta J} (1-e^{-4 beta J})^{N/2} cos(N alpha); a
/// consistency companion to partition_1d_closed, meaningful when
/// e^{-4 beta J} <= sin^2(beta h).
cplx partition_1d_cosine_form(const ClassicalIsing1DParams& p);

/// Exact sum over all 2^N spin configurations (N <= 20).
cplx partition_1d_brute(const ClassicalIsing1DParams& p);

/// h_c = arcsin(e^{-2 beta J}) / beta.
double critical_field_1d(double beta, double J);

/// All N fields h_m = arccos{sqrt(1-e^{-4bJ}) cos[(m+1/2)pi/N]} / beta.
YangLeeZeroSet yang_lee_zeros_1d(const ClassicalIsing1DParams& p);

/// Spacing in chain length N between consecutive partition-function zeros at
/// fixed h; empty when |cos(beta h)| >= cos(beta h_c) (no zeros).
std::optional<double> zero_period_1d(const ClassicalIsing1DParams& p);

/// 2 e^{N beta J} (1 - e^{-4 beta J})^{N/2}; the scale against which |Z| is
/// compared when testing for zeros.
double zero_amplitude_prefactor(const ClassicalIsing1DParams& p);

/// Energy of one configuration (spins +/-1, row-major, length N*M),
/// periodic in both directions.
cplx hamiltonian_2d_energy(const std::vector<int>& spins, const ClassicalIsing2DParams& p);

/// Exact sum over all 2^{N*M} configurations (N*M <= 20).
cplx partition_2d_brute(const ClassicalIsing2DParams& p);

/// Row-transfer product [sinh(2 theta)/2]^{-NM/2} Tr[(e^{theta sum sx} D)^M]
/// with tanh(theta) = e^{-2 beta J2}; exact for all lattice sizes. Requires
/// J2 > 0 and N <= 10.
cplx partition_2d_transfer(const ClassicalIsing2DParams& p);

}  // namespace yldqpt::ising
