#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "yldqpt/classical_ising.hpp"
#include "yldqpt/numerics.hpp"

namespace yldqpt::chain {

/// Non-Hermitian quantum Ising chain
///   H1 = iJ (sum_i sz_i sz_{i+1} + g sum_i sx_i) - h sum_i sz_i
/// with periodic boundary (site N == site 0).
struct QuantumIsingChainParams {
    int N = 8;       // sites, 1..10 (Hilbert dimension 2^N <= 1024)
    double J = 1.0;  // coupling scale, > 0
    double g = 0.0;  // transverse-field ratio, >= 0
    double h = 0.0;  // longitudinal field

    void validate() const;
};

struct LoschmidtSeries {
    std::vector<double> times;  // strictly increasing
    std::vector<cplx> values;
    /// True when values are 2^{-N} Tr exp(-itH1) verbatim; false when an
    /// e^{-t*damp} envelope factor has been divided out.
    bool trace_normalized = true;
};

struct DQPTResult {
    std::vector<double> critical_times;  // strictly increasing
    std::optional<double> period_estimate;  // median consecutive gap
    std::vector<double> min_magnitudes;  // |G| at each refined minimum
};

Matrix build_h1(const QuantumIsingChainParams& p);

/// Eigenvalues of H1; trace formulas use Tr f(H1) = sum f(lambda_i), which
/// holds for any square matrix.
Eigen::VectorXcd h1_spectrum(const QuantumIsingChainParams& p);

/// G'(t) = 2^{-N} sum_i exp(-it lambda_i), optionally with the leading
/// growth rate damp = max_i Im(lambda_i) divided out so magnitudes stay
/// O(1) over long windows; zero locations are unaffected.
struct LoschmidtEvaluator {
    Eigen::VectorXcd spectrum;
    int n_sites = 1;
    double damp = 0.0;

    cplx operator()(double t) const;
};

LoschmidtEvaluator loschmidt_evaluator(const QuantumIsingChainParams& p,
                                       bool damped);

std::vector<double> uniform_grid(double t_min, double t_max, int points);

/// 2^{-N} Tr exp(-it H1) on the given grid; G'(0) = 1 exactly.
LoschmidtSeries loschmidt_chain(const QuantumIsingChainParams& p,
                                const std::vector<double>& times);

/// Samples an evaluator (damped or not) over a grid.
LoschmidtSeries sample_loschmidt(const LoschmidtEvaluator& ev,
                                 const std::vector<double>& times);

/// Quantum chain equivalent to a width-N, M-row classical lattice evolved
/// for time t: J = (M/t) beta J1, J g = (M/t) atanh(e^{-2 beta J2}),
/// h = (M/t) beta h_cl.
QuantumIsingChainParams map_params_2d(const ising::ClassicalIsing2DParams& p,
                                      double t);

/// Locates zeros of |G| in a sampled series: every interior sample minimum
/// below 0.25 * max|G| is refined — by golden-section minimization (time
/// tolerance 1e-8 of the grid span) when `fine` can evaluate between
/// samples, else by intersecting the two |G| flank lines of the dip.
/// Refined minima below eps_zero * max|G| count as critical times; the
/// period estimate is the median gap (absent with fewer than two times).
DQPTResult detect_dqpt(const LoschmidtSeries& s, double eps_zero = 1e-6,
                       const std::function<cplx(double)>& fine = {});

}  // namespace yldqpt::chain
