#include "yldqpt/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace yldqpt::analysis {

const char* to_string(SampleSource s) {
    switch (s) {
        case SampleSource::closed_form_0d: return "closed-form-0D";
        case SampleSource::chain_n8: return "chain-N8";
        case SampleSource::classical_1d: return "classical-1D";
    }
    return "unknown";
}

namespace {

void validate_samples(const std::vector<PeriodSample>& samples) {
    if (samples.size() < 4) {
        throw std::invalid_argument("period fit: need at least 4 samples");
    }
    std::set<double> fields;
    for (const auto& s : samples) {
        if (!std::isfinite(s.h) || !(s.T > 0.0) || !std::isfinite(s.T)) {
            throw std::invalid_argument("period fit: samples need finite h and T > 0");
        }
        fields.insert(s.h);
    }
    if (fields.size() < 4) {
        throw std::invalid_argument("period fit: need at least 4 distinct h");
    }
}

double objective(const std::vector<PeriodSample>& samples, double alpha,
                 double h_c) {
    double s = 0.0;
    for (const auto& p : samples) {
        const double d = p.h * p.h - h_c * h_c;
        if (d <= 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        const double r = (p.T - alpha / std::sqrt(d)) / p.T;
        s += r * r;
    }
    return s;
}

}  // namespace

PeriodFit fit_period_model(const std::vector<PeriodSample>& samples) {
    validate_samples(samples);
    double min_h = std::numeric_limits<double>::infinity();
    double max_h = -std::numeric_limits<double>::infinity();
    double t_at_max_h = 0.0;
    for (const auto& s : samples) {
        min_h = std::min(min_h, s.h);
        if (s.h > max_h) {
            max_h = s.h;
            t_at_max_h = s.T;
        }
    }
    if (!(min_h > 0.0)) {
        throw std::invalid_argument("period fit: fields must be positive");
    }

    double h_c = 0.99 * min_h;
    double alpha = t_at_max_h * std::sqrt(max_h * max_h - h_c * h_c);
    double cost = objective(samples, alpha, h_c);
    const double h_c_cap = min_h * (1.0 - 1e-12);

    PeriodFit fit;
    for (int iter = 0; iter < 200; ++iter) {
        // Normal equations for the relative residuals
        // r_i = (T_i - alpha d_i^{-1/2}) / T_i, d_i = h_i^2 - h_c^2.
        double jtj00 = 0.0, jtj01 = 0.0, jtj11 = 0.0, jtr0 = 0.0, jtr1 = 0.0;
        for (const auto& s : samples) {
            const double d = s.h * s.h - h_c * h_c;
            const double inv_sqrt = 1.0 / std::sqrt(d);
            const double r = (s.T - alpha * inv_sqrt) / s.T;
            const double ja = -inv_sqrt / s.T;
            const double jh = -alpha * h_c * inv_sqrt * inv_sqrt * inv_sqrt / s.T;
            jtj00 += ja * ja;
            jtj01 += ja * jh;
            jtj11 += jh * jh;
            jtr0 += ja * r;
            jtr1 += jh * r;
        }
        const double det = jtj00 * jtj11 - jtj01 * jtj01;
        double d_alpha, d_hc;
        if (std::abs(det) > 1e-300 * std::max(1.0, jtj00 * jtj11)) {
            d_alpha = -(jtj11 * jtr0 - jtj01 * jtr1) / det;
            d_hc = -(jtj00 * jtr1 - jtj01 * jtr0) / det;
        } else {
            // Degenerate Jacobian (h_c pinned at 0 fits every sample):
            // fall back to the alpha-only step.
            d_alpha = jtj00 > 0.0 ? -jtr0 / jtj00 : 0.0;
            d_hc = 0.0;
        }

        double scale = 1.0;
        double new_alpha = alpha, new_hc = h_c, new_cost = cost;
        bool improved = false;
        for (int halving = 0; halving < 40; ++halving) {
            const double a = alpha + scale * d_alpha;
            const double c = std::clamp(h_c + scale * d_hc, 0.0, h_c_cap);
            const double f = objective(samples, a, c);
            if (f < cost) {
                new_alpha = a;
                new_hc = c;
                new_cost = f;
                improved = true;
                break;
            }
            scale *= 0.5;
        }
        const double step = std::max(std::abs(new_alpha - alpha) /
                                         std::max(1.0, std::abs(alpha)),
                                     std::abs(new_hc - h_c) /
                                         std::max(1.0, std::abs(h_c)));
        alpha = new_alpha;
        h_c = new_hc;
        cost = new_cost;
        if (!improved || step < 1e-10) {
            fit.converged = true;
            break;
        }
    }
    fit.alpha = alpha;
    fit.h_c_fit = h_c;
    fit.residual_norm = std::sqrt(cost / samples.size());
    fit.model_consistent = fit.residual_norm <= 0.2;
    try {
        fit.exponent = scaling_exponent(samples, h_c);
    } catch (const std::domain_error&) {
        fit.exponent.reset();
    }
    return fit;
}

double scaling_exponent(const std::vector<PeriodSample>& samples, double h_c) {
    if (samples.size() < 2) {
        throw std::invalid_argument("scaling exponent: need at least 2 samples");
    }
    double tau_min = std::numeric_limits<double>::infinity();
    double tau_max = 0.0;
    for (const auto& s : samples) {
        const double tau = s.h - h_c;
        if (!(tau > 0.0) || !(s.T > 0.0)) {
            throw std::domain_error("scaling exponent: need h > h_c and T > 0");
        }
        tau_min = std::min(tau_min, tau);
        tau_max = std::max(tau_max, tau);
    }
    if (std::log10(tau_max / tau_min) < 1.5) {
        throw std::domain_error(
            "scaling exponent: samples span fewer than 1.5 decades of h - h_c");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& s : samples) {
        const double x = std::log(s.h - h_c);
        const double y = std::log(s.T);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(samples.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

int thread_budget() {
    if (const char* env = std::getenv("YLDQPT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) {
            return static_cast<int>(std::min(v, 64L));
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename Body>
void parallel_for(std::size_t count, const Body& body) {
    const int workers = std::min<std::size_t>(thread_budget(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

bool has_two_zeros(const chain::QuantumIsingChainParams& base, double g,
                   double h, const std::vector<double>& grid) {
    chain::QuantumIsingChainParams p = base;
    p.g = g;
    p.h = h;
    const auto ev = chain::loschmidt_evaluator(p, /*damped=*/true);
    const auto series = chain::sample_loschmidt(ev, grid);
    const auto result = chain::detect_dqpt(
        series, 1e-6, [&ev](double t) { return ev(t); });
    return result.critical_times.size() >= 2;
}

}  // namespace

std::vector<CriticalFieldPoint> critical_field_scan(
    const std::vector<double>& g_values,
    const chain::QuantumIsingChainParams& p_base,
    const std::vector<double>& h_grid, double t_max, int points) {
    if (h_grid.empty()) {
        throw std::invalid_argument("critical field scan: empty h grid");
    }
    for (std::size_t i = 0; i < h_grid.size(); ++i) {
        if (!(h_grid[i] > 0.0) || (i > 0 && !(h_grid[i] > h_grid[i - 1]))) {
            throw std::invalid_argument(
                "critical field scan: h grid must be positive and ascending");
        }
    }
    const auto grid = chain::uniform_grid(0.0, t_max, points);
    std::vector<CriticalFieldPoint> out(g_values.size());
    parallel_for(g_values.size(), [&](std::size_t k) {
        const double g = g_values[k];
        CriticalFieldPoint point;
        point.g = g;
        std::size_t hit = h_grid.size();
        for (std::size_t j = 0; j < h_grid.size(); ++j) {
            if (has_two_zeros(p_base, g, h_grid[j], grid)) {
                hit = j;
                break;
            }
        }
        if (hit == h_grid.size()) {
            point.h_c = std::numeric_limits<double>::infinity();
            point.bounded = false;
        } else {
            double lo = hit == 0 ? 0.0 : h_grid[hit - 1];
            double hi = h_grid[hit];
            while (hi - lo > 1e-3 * hi) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                if (has_two_zeros(p_base, g, mid, grid)) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            point.h_c = hi;
            point.bounded = true;
        }
        out[k] = point;
    });
    return out;
}

CriticalBack2D map_critical_back_2d(double h_c_quantum,
                                    const Mapping2DContext& ctx) {
    if (!(ctx.beta_cl > 0.0) || !(ctx.t > 0.0) || ctx.M < 1 || !(ctx.J > 0.0)) {
        throw std::domain_error(
            "map_critical_back_2d: need beta_cl, t, J > 0 and M >= 1");
    }
    CriticalBack2D out;
    out.h_cl_c = cplx(0.0, (ctx.t / ctx.M) * h_c_quantum / ctx.beta_cl);
    out.J2_c = -0.5 / ctx.beta_cl * std::log(std::tanh((ctx.t / ctx.M) * ctx.J));
    return out;
}

}  // namespace yldqpt::analysis
