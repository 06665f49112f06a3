#pragma once

#include <optional>
#include <vector>

#include "yldqpt/chain_dynamics.hpp"
#include "yldqpt/numerics.hpp"

namespace yldqpt::analysis {

enum class SampleSource { closed_form_0d, chain_n8, classical_1d };

const char* to_string(SampleSource s);

struct PeriodSample {
    double h = 0.0;
    double T = 0.0;  // measured DQPT period, > 0
    SampleSource source = SampleSource::closed_form_0d;
};

struct PeriodFit {
    double alpha = 0.0;
    double h_c_fit = 0.0;
    double residual_norm = 0.0;  // RMS of relative residuals
    /// log-log slope of T against h - h_c_fit; absent when the samples span
    /// fewer than 1.5 decades of that distance.
    std::optional<double> exponent;
    bool converged = false;
    bool model_consistent = true;  // residual_norm <= 0.2
};

/// Least-squares fit of T = alpha / sqrt(h^2 - h_c^2) with relative
/// residuals, damped Gauss-Newton, iteration cap 200, parameter step
/// < 1e-10 relative at convergence. Initialization: h_c = 0.99 min(h_i),
/// alpha from the sample at the largest h.
PeriodFit fit_period_model(const std::vector<PeriodSample>& samples);

/// Slope of log T vs log(h - h_c); requires every h > h_c and at least 1.5
/// decades of span in h - h_c. The square-root law gives -0.5.
double scaling_exponent(const std::vector<PeriodSample>& samples, double h_c);

struct CriticalFieldPoint {
    double g = 0.0;
    double h_c = 0.0;
    /// False when no field on the grid produced two critical times; h_c is
    /// then +infinity (above the grid maximum).
    bool bounded = true;
};

/// For each g: the smallest h on h_grid whose Loschmidt series over
/// [0, t_max] shows at least two critical times, refined by bisection in h
/// to 1e-3 relative. Scans parallelize over g (YLDQPT_THREADS caps the
/// worker count; 0 or unset picks the hardware default).
std::vector<CriticalFieldPoint> critical_field_scan(
    const std::vector<double>& g_values,
    const chain::QuantumIsingChainParams& p_base,
    const std::vector<double>& h_grid, double t_max, int points);

struct Mapping2DContext {
    double beta_cl = 1.0;  // classical inverse temperature, > 0
    double t = 1.0;        // evolution time, > 0
    int M = 1;             // row count, >= 1
    double J = 1.0;        // chain coupling scale, > 0
};

struct CriticalBack2D {
    cplx h_cl_c;   // classical critical field i (t/M) h_c / beta_cl
    double J2_c;   // inter-row coupling where the mapped g crosses 1
};

CriticalBack2D map_critical_back_2d(double h_c_quantum,
                                    const Mapping2DContext& ctx);

}  // namespace yldqpt::analysis
