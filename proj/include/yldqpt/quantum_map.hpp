#pragma once

#include <optional>
#include <vector>

#include "yldqpt/classical_ising.hpp"
#include "yldqpt/numerics.hpp"

namespace yldqpt::qmap {

/// Single-qubit image of a classical chain: N Trotter slices of angle theta
/// and field beta*h, evolved for time t under the anti-PT Hamiltonian
/// i h_x sigma_x - h_z sigma_z with per-slice amplitude A.
struct MappedQuantum0D {
    double A = 1.0;      // [sinh(2 theta)/2]^{-1/2}
    double theta = 0.0;  // atanh(e^{-2 beta J})
    double h_x = 0.0;    // (N/t) theta
    double h_z = 0.0;    // (N/t) beta h
    double t = 1.0;      // evolution time, > 0
    int N = 1;           // slice count, >= 1
};

/// Pauli coefficients of the effective Hamiltonian; order is the truncation
/// band of the commutator series, or nullopt for the exact logarithm.
struct BCHCoefficients {
    cplx hx_p;
    cplx hy_p;
    cplx hz_p;
    std::optional<int> order;
};

enum class Regime { oscillatory, exceptional, non_oscillatory };

struct EPClassification {
    cplx discriminant;  // hx_p^2 + hy_p^2 + hz_p^2
    Regime regime = Regime::non_oscillatory;
    std::optional<double> period;  // pi / sqrt(discriminant) when oscillatory
};

double trotter_angle(double beta, double J);
double site_amplitude(double theta);

MappedQuantum0D map_params_continuum(const ising::ClassicalIsing1DParams& p, double t);

/// i h_x sigma_x - h_z sigma_z.
Matrix apt_hamiltonian(double h_x, double h_z);

/// A^N cos(sqrt(h_z^2-h_x^2) t); equals Tr exp(-i t H) * A^N / 2.
cplx loschmidt_apt(const MappedQuantum0D& q);

/// The amplitude-free factor cos(sqrt(h_z^2-h_x^2) t).
cplx loschmidt_apt_normalized(double h_x, double h_z, double t);

/// pi / sqrt(h_z^2 - h_x^2) when |h_z| > |h_x|, otherwise no period.
std::optional<double> dqpt_period_apt(double h_x, double h_z);

/// Critical times (n+1/2) pi / sqrt(h_z^2-h_x^2) inside [0, t_max].
std::vector<double> dqpt_critical_times(double h_x, double h_z, double t_max);

/// N(|theta|+|beta h|)^3 e^{N(|theta|+|beta h|)}; caps the distance between
/// the sliced product trace and the collapsed single-exponential trace.
double deviation_bound(const ising::ClassicalIsing1DParams& p);

/// One Trotter slice e^{theta sigma_x} e^{i beta h sigma_z}; equals T / A
/// entrywise.
Matrix slice_matrix(const ising::ClassicalIsing1DParams& p);

/// [e^{theta sigma_x} e^{i beta h sigma_z}]^N; equals T^N / A^N.
Matrix slice_product(const ising::ClassicalIsing1DParams& p);

/// Exact effective Hamiltonian (i N/t) log of one slice, in the Pauli basis;
/// expm(-it H) reproduces the N-slice product for every N. Propagates
/// branch_cut_error when a slice eigenvalue lands on the principal cut
/// (cos(beta h) <= -cos(beta h_c)); the trace identity can then still be
/// checked through the product form.
BCHCoefficients bch_hamiltonian_exact(const ising::ClassicalIsing1DParams& p, double t);

/// Commutator series for the effective Hamiltonian truncated at band
/// `order` (1..3): total degree <= 2*order-1 on sigma_x/sigma_z and
/// <= 2*order on sigma_y in the small parameters (theta, beta h).
BCHCoefficients bch_hamiltonian_series(const ising::ClassicalIsing1DParams& p, double t, int order);

EPClassification classify_regime(const BCHCoefficients& c);

/// |N/T_cl - t/T_G| between the classical zero spacing and the
/// continuum-limit period; second order in t/N.
double period_correspondence_error(const ising::ClassicalIsing1DParams& p, double t);

}  // namespace yldqpt::qmap
