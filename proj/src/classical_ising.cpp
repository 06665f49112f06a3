#include "yldqpt/classical_ising.hpp"

#include <cmath>

namespace yldqpt::ising {

void ClassicalIsing1DParams::validate() const {
    if (!(beta > 0)) throw std::invalid_argument("ClassicalIsing1DParams: beta must be > 0");
    if (!(J > 0)) throw std::invalid_argument("ClassicalIsing1DParams: J must be > 0");
    if (!std::isfinite(h)) throw std::invalid_argument("ClassicalIsing1DParams: h must be finite");
    if (N < 1) throw std::invalid_argument("ClassicalIsing1DParams: N must be >= 1");
}

void ClassicalIsing2DParams::validate() const {
    if (!(beta > 0)) throw std::invalid_argument("ClassicalIsing2DParams: beta must be > 0");
    if (!std::isfinite(J1) || !std::isfinite(J2) || !std::isfinite(h))
        throw std::invalid_argument("ClassicalIsing2DParams: couplings must be finite");
    if (N < 1 || M < 1) throw std::invalid_argument("ClassicalIsing2DParams: N, M must be >= 1");
}

Matrix transfer_matrix_1d(const ClassicalIsing1DParams& p) {
    p.validate();
    Matrix t(2, 2);
    t(0, 0) = std::exp(cplx(p.beta * p.J, p.beta * p.h));
    t(0, 1) = std::exp(cplx(-p.beta * p.J, 0));
    t(1, 0) = t(0, 1);
    t(1, 1) = std::exp(cplx(p.beta * p.J, -p.beta * p.h));
    return t;
}

std::pair<cplx, cplx> transfer_eigenvalues_1d(const ClassicalIsing1DParams& p) {
    p.validate();
    const double bh = p.beta * p.h;
    const double s = std::sin(bh);
    const cplx radical = std::sqrt(cplx(std::exp(-4.0 * p.beta * p.J) - s * s, 0.0));
    const double amp = std::exp(p.beta * p.J);
    return {amp * (std::cos(bh) + radical), amp * (std::cos(bh) - radical)};
}

cplx partition_1d_closed(const ClassicalIsing1DParams& p) {
    const auto [lp, lm] = transfer_eigenvalues_1d(p);
    return cpow_int(lp, p.N) + cpow_int(lm, p.N);
}

cplx partition_1d_cosine_form(const ClassicalIsing1DParams& p) {
    p.validate();
    const double c = 1.0 - std::exp(-4.0 * p.beta * p.J);
    const cplx alpha = std::acos(cplx(std::cos(p.beta * p.h) / std::sqrt(c), 0.0));
    return zero_amplitude_prefactor(p) * std::cos(static_cast<double>(p.N) * alpha);
}

cplx partition_1d_brute(const ClassicalIsing1DParams& p) {
    p.validate();
    if (p.N > 20) throw std::invalid_argument("partition_1d_brute: N > 20");
    const int n = p.N;
    cplx total = 0.0;
    for (unsigned long c = 0; c < (1ul << n); ++c) {
        double bond = 0.0, field = 0.0;
        for (int l = 0; l < n; ++l) {
            const int s = (c >> l) & 1 ? 1 : -1;
            const int sn = (c >> ((l + 1) % n)) & 1 ? 1 : -1;
            bond += static_cast<double>(s * sn);
            field += static_cast<double>(s);
        }
        total += std::exp(cplx(p.beta * p.J * bond, p.beta * p.h * field));
    }
    return total;
}

double critical_field_1d(double beta, double J) {
    if (!(beta > 0) || !(J > 0))
        throw std::invalid_argument("critical_field_1d: beta and J must be > 0");
    return std::asin(std::exp(-2.0 * beta * J)) / beta;
}

YangLeeZeroSet yang_lee_zeros_1d(const ClassicalIsing1DParams& p) {
    p.validate();
    const double edge = std::sqrt(1.0 - std::exp(-4.0 * p.beta * p.J));
    YangLeeZeroSet set;
    set.h_c = critical_field_1d(p.beta, p.J);
    set.zeros.reserve(static_cast<size_t>(p.N));
    set.fugacity_points.reserve(static_cast<size_t>(p.N));
    for (int m = 0; m < p.N; ++m) {
        // arccos argument stays inside (-edge, edge), so h_m is real and the
        // sequence ascends with m.
        const double arg = edge * std::cos((m + 0.5) * kPi / p.N);
        const double hm = std::acos(arg) / p.beta;
        set.zeros.push_back(hm);
        set.fugacity_points.push_back(std::exp(cplx(0.0, 2.0 * p.beta * hm)));
    }
    return set;
}

std::optional<double> zero_period_1d(const ClassicalIsing1DParams& p) {
    p.validate();
    const double edge = std::sqrt(1.0 - std::exp(-4.0 * p.beta * p.J));
    const double arg = std::cos(p.beta * p.h) / edge;
    if (std::abs(arg) >= 1.0) return std::nullopt;  // |h| at or below h_c
    return kPi / std::acos(arg);
}

double zero_amplitude_prefactor(const ClassicalIsing1DParams& p) {
    p.validate();
    return 2.0 * std::exp(p.N * p.beta * p.J) *
           std::pow(1.0 - std::exp(-4.0 * p.beta * p.J), 0.5 * p.N);
}

cplx hamiltonian_2d_energy(const std::vector<int>& spins, const ClassicalIsing2DParams& p) {
    p.validate();
    const size_t count = static_cast<size_t>(p.N) * static_cast<size_t>(p.M);
    if (spins.size() != count)
        throw std::invalid_argument("hamiltonian_2d_energy: wrong configuration size");
    auto at = [&](int i, int j) {
        return spins[static_cast<size_t>(((j % p.M + p.M) % p.M) * p.N +
                                         ((i % p.N + p.N) % p.N))];
    };
    double bonds1 = 0.0, bonds2 = 0.0, field = 0.0;
    for (int j = 0; j < p.M; ++j)
        for (int i = 0; i < p.N; ++i) {
            const int s = at(i, j);
            bonds1 += static_cast<double>(s * at(i + 1, j));
            bonds2 += static_cast<double>(s * at(i, j + 1));
            field += static_cast<double>(s);
        }
    return cplx(-p.J1 * bonds1 - p.J2 * bonds2, -p.h * field);
}

cplx partition_2d_brute(const ClassicalIsing2DParams& p) {
    p.validate();
    const int sites = p.N * p.M;
    if (sites > 20) throw std::invalid_argument("partition_2d_brute: N*M > 20");
    std::vector<int> spins(static_cast<size_t>(sites));
    cplx total = 0.0;
    for (unsigned long c = 0; c < (1ul << sites); ++c) {
        for (int k = 0; k < sites; ++k)
            spins[static_cast<size_t>(k)] = (c >> k) & 1 ? 1 : -1;
        const cplx e = hamiltonian_2d_energy(spins, p);
        total += std::exp(-p.beta * e);
    }
    return total;
}

cplx partition_2d_transfer(const ClassicalIsing2DParams& p) {
    p.validate();
    if (p.N > 10) throw std::invalid_argument("partition_2d_transfer: row width > 10");
    if (!(p.J2 > 0))
        throw std::invalid_argument("partition_2d_transfer: requires J2 > 0");
    const double theta = std::atanh(std::exp(-2.0 * p.beta * p.J2));

    // Row flip operator: tensor power of e^{theta sigma_x}.
    Matrix flip1(2, 2);
    flip1 << std::cosh(theta), std::sinh(theta), std::sinh(theta), std::cosh(theta);
    Matrix flip = flip1;
    for (int s = 1; s < p.N; ++s) flip = kron(flip, flip1);

    // Diagonal in-row weight exp[beta(J1 sum sz sz + i h sum sz)] by bit
    // enumeration; bit k of the row index is site k, 0 -> spin +1.
    const long dim = 1l << p.N;
    Eigen::VectorXcd d(dim);
    for (long r = 0; r < dim; ++r) {
        double bond = 0.0, field = 0.0;
        for (int k = 0; k < p.N; ++k) {
            const int s = (r >> (p.N - 1 - k)) & 1 ? -1 : 1;
            const int sn = (r >> (p.N - 1 - (k + 1) % p.N)) & 1 ? -1 : 1;
            bond += static_cast<double>(s * sn);
            field += static_cast<double>(s);
        }
        d(r) = std::exp(cplx(p.beta * p.J1 * bond, p.beta * p.h * field));
    }
    Matrix slice = flip * d.asDiagonal();

    // slice^M by binary powering, then the trace.
    Matrix acc = Matrix::Identity(dim, dim);
    Matrix base = slice;
    int e = p.M;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    const double prefactor =
        std::pow(0.5 * std::sinh(2.0 * theta), -0.5 * p.N * p.M);
    return prefactor * acc.trace();
}

}  // namespace yldqpt::ising
