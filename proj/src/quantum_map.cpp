#include "yldqpt/quantum_map.hpp"

#include <cmath>
#include <stdexcept>

namespace yldqpt::qmap {

double trotter_angle(double beta, double J) {
    if (!(beta > 0.0) || !(J > 0.0)) {
        throw std::domain_error("trotter_angle: need beta > 0 and J > 0");
    }
    // atanh(e^{-2 beta J}) in log form, stable for small beta J.
    const double q = std::exp(-2.0 * beta * J);
    return 0.5 * std::log((1.0 + q) / (1.0 - q));
}

double site_amplitude(double theta) {
    if (!(theta > 0.0)) {
        throw std::domain_error("site_amplitude: need theta > 0");
    }
    return 1.0 / std::sqrt(0.5 * std::sinh(2.0 * theta));
}

MappedQuantum0D map_params_continuum(const ising::ClassicalIsing1DParams& p, double t) {
    p.validate();
    if (!(t > 0.0)) {
        throw std::domain_error("map_params_continuum: need t > 0");
    }
    MappedQuantum0D q;
    q.theta = trotter_angle(p.beta, p.J);
    q.A = site_amplitude(q.theta);
    q.h_x = (p.N / t) * q.theta;
    q.h_z = (p.N / t) * p.beta * p.h;
    q.t = t;
    q.N = p.N;
    return q;
}

Matrix apt_hamiltonian(double h_x, double h_z) {
    return cplx(0.0, h_x) * sigma_x() - cplx(h_z, 0.0) * sigma_z();
}

cplx loschmidt_apt_normalized(double h_x, double h_z, double t) {
    const cplx omega = std::sqrt(cplx(h_z * h_z - h_x * h_x, 0.0));
    return std::cos(omega * t);
}

cplx loschmidt_apt(const MappedQuantum0D& q) {
    return std::pow(q.A, q.N) * loschmidt_apt_normalized(q.h_x, q.h_z, q.t);
}

std::optional<double> dqpt_period_apt(double h_x, double h_z) {
    const double disc = h_z * h_z - h_x * h_x;
    if (disc <= 0.0) {
        return std::nullopt;
    }
    return kPi / std::sqrt(disc);
}

std::vector<double> dqpt_critical_times(double h_x, double h_z, double t_max) {
    std::vector<double> times;
    const auto period = dqpt_period_apt(h_x, h_z);
    if (!period) {
        return times;
    }
    for (double tc = 0.5 * *period; tc <= t_max; tc += *period) {
        times.push_back(tc);
    }
    return times;
}

double deviation_bound(const ising::ClassicalIsing1DParams& p) {
    p.validate();
    const double a = std::abs(trotter_angle(p.beta, p.J)) +
                     std::abs(p.beta * p.h);
    return p.N * a * a * a * std::exp(p.N * a);
}

Matrix slice_matrix(const ising::ClassicalIsing1DParams& p) {
    p.validate();
    const double theta = trotter_angle(p.beta, p.J);
    const double b = p.beta * p.h;
    Matrix slice(2, 2);
    const cplx phase(std::cos(b), std::sin(b));
    slice << std::cosh(theta) * phase, std::sinh(theta) / phase,
        std::sinh(theta) * phase, std::cosh(theta) / phase;
    return slice;
}

Matrix slice_product(const ising::ClassicalIsing1DParams& p) {
    Matrix out = identity2();
    Matrix base = slice_matrix(p);
    for (int e = p.N; e > 0; e >>= 1) {
        if (e & 1) out = out * base;
        base = base * base;
    }
    return out;
}

BCHCoefficients bch_hamiltonian_exact(const ising::ClassicalIsing1DParams& p, double t) {
    if (!(t > 0.0)) {
        throw std::domain_error("bch_hamiltonian_exact: need t > 0");
    }
    // N * log(slice) rather than log(slice^N): exp of either reproduces the
    // N-slice product, but only the per-slice branch keeps eigen-angles from
    // wrapping at large N, so the extracted period stays on the physical
    // branch for every N.
    const Pauli2x2Decomposition d = logm_2x2(slice_matrix(p));
    const cplx scale(0.0, p.N / t);
    return {scale * d.cx, scale * d.cy, scale * d.cz, std::nullopt};
}

BCHCoefficients bch_hamiltonian_series(const ising::ClassicalIsing1DParams& p, double t,
                           int order) {
    p.validate();
    if (!(t > 0.0)) {
        throw std::domain_error("bch_hamiltonian_series: need t > 0");
    }
    if (order < 1 || order > 3) {
        throw std::invalid_argument("bch_hamiltonian_series: order must be 1, 2 or 3");
    }
    const double theta = trotter_angle(p.beta, p.J);
    const double b = p.beta * p.h;
    // Commutator expansion of log(e^{theta sx} e^{i b sz}) grouped by total
    // degree in (theta, b): order k keeps degrees <= 2k-1 on sigma_x/sigma_z
    // and <= 2k on sigma_y.
    double sx = theta;
    double sy = theta * b;
    double sz = b;
    if (order >= 2) {
        sx -= theta * b * b / 3.0;
        sz += theta * theta * b / 3.0;
    }
    if (order >= 3) {
        sx += (2.0 / 45.0) * theta * theta * theta * b * b -
              (1.0 / 45.0) * theta * b * b * b * b;
        sy += (2.0 / 45.0) * theta * theta * theta * b * b * b;
        sz += (2.0 / 45.0) * theta * theta * b * b * b -
              (1.0 / 45.0) * theta * theta * theta * theta * b;
    }
    const double r = p.N / t;
    return {cplx(0.0, r * sx), cplx(0.0, r * sy), cplx(-r * sz, 0.0), order};
}

EPClassification classify_regime(const BCHCoefficients& c) {
    EPClassification out;
    out.discriminant = c.hx_p * c.hx_p + c.hy_p * c.hy_p + c.hz_p * c.hz_p;
    const double norm2 = std::norm(c.hx_p) + std::norm(c.hy_p) + std::norm(c.hz_p);
    const double tol = 1e-10 * std::max(1.0, norm2);
    if (std::abs(out.discriminant) <= tol) {
        out.regime = Regime::exceptional;
    } else if (std::abs(out.discriminant.imag()) <= tol &&
               out.discriminant.real() > 0.0) {
        out.regime = Regime::oscillatory;
        out.period = kPi / std::sqrt(out.discriminant.real());
    } else {
        out.regime = Regime::non_oscillatory;
    }
    return out;
}

double period_correspondence_error(const ising::ClassicalIsing1DParams& p, double t) {
    if (!(t > 0.0)) {
        throw std::domain_error("period_correspondence_error: need t > 0");
    }
    const auto t_cl = ising::zero_period_1d(p);
    if (!t_cl) {
        throw std::domain_error(
            "period_correspondence_error: no classical zeros at this field");
    }
    const MappedQuantum0D q = map_params_continuum(p, t);
    const auto t_g = dqpt_period_apt(q.h_x, q.h_z);
    if (!t_g) {
        throw std::domain_error(
            "period_correspondence_error: mapped dynamics is not oscillatory");
    }
    return std::abs(p.N / *t_cl - t / *t_g);
}

}  // namespace yldqpt::qmap
