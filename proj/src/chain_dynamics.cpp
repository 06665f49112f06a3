#include "yldqpt/chain_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace yldqpt::chain {

void QuantumIsingChainParams::validate() const {
    if (N < 1 || N > 10) {
        throw std::domain_error("chain params: N must be in [1, 10]");
    }
    if (!(J > 0.0)) {
        throw std::domain_error("chain params: J must be > 0");
    }
    if (!(g >= 0.0)) {
        throw std::domain_error("chain params: g must be >= 0");
    }
    if (!std::isfinite(h)) {
        throw std::domain_error("chain params: h must be finite");
    }
}

Matrix build_h1(const QuantumIsingChainParams& p) {
    p.validate();
    const long dim = 1L << p.N;
    Matrix h1 = Matrix::Zero(dim, dim);
    const Matrix sz = sigma_z();
    const Matrix sx = sigma_x();
    const cplx iJ(0.0, p.J);
    for (int i = 0; i < p.N; ++i) {
        h1 += iJ * kron_chain({sz, sz}, {i, (i + 1) % p.N}, p.N);
        if (p.g != 0.0) {
            h1 += iJ * p.g * kron_chain({sx}, {i}, p.N);
        }
        h1 -= p.h * kron_chain({sz}, {i}, p.N);
    }
    return h1;
}

Eigen::VectorXcd h1_spectrum(const QuantumIsingChainParams& p) {
    const Matrix h1 = build_h1(p);
    Eigen::ComplexEigenSolver<Matrix> solver(h1, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("h1_spectrum: eigenvalue iteration failed");
    }
    return solver.eigenvalues();
}

cplx LoschmidtEvaluator::operator()(double t) const {
    cplx sum = 0.0;
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
        const cplx lam = spectrum[i];
        sum += std::exp(cplx(t * (lam.imag() - damp), -t * lam.real()));
    }
    return sum * std::pow(2.0, -n_sites);
}

LoschmidtEvaluator loschmidt_evaluator(const QuantumIsingChainParams& p,
                                       bool damped) {
    LoschmidtEvaluator ev;
    ev.spectrum = h1_spectrum(p);
    ev.n_sites = p.N;
    ev.damp = 0.0;
    if (damped) {
        for (Eigen::Index i = 0; i < ev.spectrum.size(); ++i) {
            ev.damp = std::max(ev.damp, ev.spectrum[i].imag());
        }
    }
    return ev;
}

std::vector<double> uniform_grid(double t_min, double t_max, int points) {
    if (points < 2 || !(t_max > t_min)) {
        throw std::invalid_argument("uniform_grid: need points >= 2 and t_max > t_min");
    }
    std::vector<double> grid(points);
    const double step = (t_max - t_min) / (points - 1);
    for (int i = 0; i < points; ++i) {
        grid[i] = t_min + i * step;
    }
    grid.back() = t_max;
    return grid;
}

namespace {

void check_grid(const std::vector<double>& times) {
    if (times.empty()) {
        throw std::invalid_argument("time grid is empty");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw std::invalid_argument("time grid must increase strictly");
        }
    }
}

}  // namespace

LoschmidtSeries sample_loschmidt(const LoschmidtEvaluator& ev,
                                 const std::vector<double>& times) {
    check_grid(times);
    LoschmidtSeries s;
    s.times = times;
    s.values.reserve(times.size());
    for (double t : times) {
        s.values.push_back(ev(t));
    }
    s.trace_normalized = (ev.damp == 0.0);
    return s;
}

LoschmidtSeries loschmidt_chain(const QuantumIsingChainParams& p,
                                const std::vector<double>& times) {
    LoschmidtSeries s =
        sample_loschmidt(loschmidt_evaluator(p, /*damped=*/false), times);
    for (const cplx& v : s.values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::overflow_error(
                "loschmidt_chain: |G| overflowed; shorten the window or use a "
                "damped evaluator");
        }
    }
    return s;
}

QuantumIsingChainParams map_params_2d(const ising::ClassicalIsing2DParams& p,
                                      double t) {
    p.validate();
    if (!(t > 0.0)) {
        throw std::domain_error("map_params_2d: need t > 0");
    }
    if (!(p.J2 > 0.0)) {
        throw std::domain_error("map_params_2d: need J2 > 0");
    }
    const double q = std::exp(-2.0 * p.beta * p.J2);
    const double theta2 = 0.5 * std::log((1.0 + q) / (1.0 - q));
    QuantumIsingChainParams out;
    out.N = p.N;
    out.J = (p.M / t) * p.beta * p.J1;
    out.g = theta2 / (p.beta * p.J1);
    out.h = (p.M / t) * p.beta * p.h;
    out.validate();
    return out;
}

namespace {

double golden_min(const std::function<double(double)>& f, double a, double b,
                  double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

// A deep dip of |G| between samples looks like a V: extrapolate the two
// flank lines to their crossing. Returns (location, clamped depth estimate);
// falls back to the sampled minimum when the flanks do not bracket a dip.
std::pair<double, double> v_intersection(double tl0, double yl0, double tl1,
                                         double yl1, double tr0, double yr0,
                                         double tr1, double yr1, double lo,
                                         double hi, double t_min,
                                         double y_min) {
    const double down = (yl1 - yl0) / (tl1 - tl0);
    const double up = (yr1 - yr0) / (tr1 - tr0);
    if (!(down < 0.0) || !(up > 0.0)) {
        return {t_min, y_min};
    }
    double t_star = (yr0 - yl0 + down * tl0 - up * tr0) / (down - up);
    t_star = std::clamp(t_star, lo, hi);
    const double depth = yl0 + down * (t_star - tl0);
    return {t_star, std::clamp(depth, 0.0, y_min)};
}

}  // namespace

DQPTResult detect_dqpt(const LoschmidtSeries& s, double eps_zero,
                       const std::function<cplx(double)>& fine) {
    check_grid(s.times);
    if (s.values.size() != s.times.size()) {
        throw std::invalid_argument("detect_dqpt: times/values length mismatch");
    }
    const std::size_t n = s.times.size();
    double gmax = 0.0;
    std::vector<double> mag(n);
    for (std::size_t i = 0; i < n; ++i) {
        mag[i] = std::abs(s.values[i]);
        gmax = std::max(gmax, mag[i]);
    }
    DQPTResult out;
    if (n < 3 || gmax == 0.0) {
        return out;
    }
    const double span = s.times.back() - s.times.front();
    const double t_tol = 1e-8 * span;
    // Generous pre-filter: a zero between samples still leaves its nearest
    // sample well below the envelope, but not below any fixed tiny fraction
    // of it, so only clearly-nonzero dips are skipped before refinement.
    const double coarse_threshold = 0.25 * gmax;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (mag[i] > coarse_threshold) continue;
        if (!(mag[i] <= mag[i - 1] && mag[i] <= mag[i + 1])) continue;
        double t_star;
        double m_star;
        if (fine) {
            auto magnitude = [&fine](double t) { return std::abs(fine(t)); };
            t_star = golden_min(magnitude, s.times[i - 1], s.times[i + 1], t_tol);
            m_star = magnitude(t_star);
        } else {
            // Outermost usable neighbours give flank slopes untouched by the
            // kink, which sits inside (t_{i-1}, t_{i+1}).
            const std::size_t la = i >= 2 ? i - 2 : i - 1;
            const std::size_t lb = i >= 2 ? i - 1 : i;
            const std::size_t ra = i + 2 < n ? i + 1 : i;
            const std::size_t rb = i + 2 < n ? i + 2 : i + 1;
            std::tie(t_star, m_star) = v_intersection(
                s.times[la], mag[la], s.times[lb], mag[lb], s.times[ra],
                mag[ra], s.times[rb], mag[rb], s.times[i - 1], s.times[i + 1],
                s.times[i], mag[i]);
        }
        if (m_star >= eps_zero * gmax) continue;
        if (!out.critical_times.empty() &&
            t_star - out.critical_times.back() < 10.0 * t_tol) {
            continue;  // same zero reached from two adjacent brackets
        }
        out.critical_times.push_back(t_star);
        out.min_magnitudes.push_back(m_star);
    }
    if (out.critical_times.size() >= 2) {
        std::vector<double> gaps;
        for (std::size_t i = 1; i < out.critical_times.size(); ++i) {
            gaps.push_back(out.critical_times[i] - out.critical_times[i - 1]);
        }
        std::sort(gaps.begin(), gaps.end());
        const std::size_t m = gaps.size();
        out.period_estimate = (m % 2 == 1)
                                  ? gaps[m / 2]
                                  : 0.5 * (gaps[m / 2 - 1] + gaps[m / 2]);
    }
    return out;
}

}  // namespace yldqpt::chain
