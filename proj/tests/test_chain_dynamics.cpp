#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "yldqpt/chain_dynamics.hpp"
#include "yldqpt/quantum_map.hpp"

using namespace yldqpt;
using chain::QuantumIsingChainParams;

TEST_CASE("single-site ring is iJ(1 + g sx) - h sz") {
    QuantumIsingChainParams p{1, 2.0, 0.5, 0.7};
    const Matrix h1 = chain::build_h1(p);
    const Matrix want = cplx(0.0, 2.0) * (identity2() + 0.5 * sigma_x()) -
                        0.7 * sigma_z();
    CHECK((h1 - want).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("two-site ring counts its bond twice") {
    QuantumIsingChainParams p{2, 1.0, 0.0, 0.0};
    const Matrix h1 = chain::build_h1(p);
    const Matrix zz = kron(sigma_z(), sigma_z());
    CHECK((h1 - cplx(0.0, 2.0) * zz).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("spectrum trace equals the dense exponential trace") {
    std::mt19937 rng(47u);
    std::uniform_real_distribution<double> u(0.2, 2.0);
    for (int n : {1, 2, 3, 4}) {
        QuantumIsingChainParams p{n, u(rng), u(rng), u(rng)};
        const double t = u(rng);
        const auto spec = chain::h1_spectrum(p);
        cplx from_spec = 0.0;
        for (Eigen::Index i = 0; i < spec.size(); ++i)
            from_spec += std::exp(cplx(0.0, -t) * spec[i]);
        const cplx from_expm =
            expm(cplx(0.0, -t) * chain::build_h1(p)).trace();
        CHECK(oracle::rel_err(from_spec, from_expm) < 1e-11);
    }
}

TEST_CASE("Loschmidt amplitude starts at one and stays real") {
    QuantumIsingChainParams p{4, 1.0, 2.0, 1.1};
    const auto series = chain::loschmidt_chain(p, chain::uniform_grid(0.0, 3.0, 7));
    CHECK(series.trace_normalized);
    CHECK(series.values.front() == cplx(1.0, 0.0));
    for (const cplx v : series.values)
        CHECK(std::abs(v.imag()) < 1e-9 * (1.0 + std::abs(v.real())));
}

TEST_CASE("damping rescales magnitudes without moving zeros") {
    QuantumIsingChainParams p{4, 1.0, 2.0, 1.2};
    const auto raw = chain::loschmidt_evaluator(p, false);
    const auto damped = chain::loschmidt_evaluator(p, true);
    CHECK(raw.damp == 0.0);
    CHECK(damped.damp > 0.0);
    for (double t : {0.4, 1.7, 2.9}) {
        const cplx expect = raw(t) * std::exp(-damped.damp * t);
        CHECK(oracle::rel_err(damped(t), expect) < 1e-12);
    }
}

TEST_CASE("undamped long-time evolution overflows loudly") {
    QuantumIsingChainParams p{6, 1.0, 2.0, 0.5};
    CHECK_THROWS_AS(chain::loschmidt_chain(p, {0.0, 2000.0}),
                    std::overflow_error);
}

TEST_CASE("uniform_grid covers both endpoints evenly") {
    const auto g = chain::uniform_grid(1.0, 3.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 1.0);
    CHECK(g.back() == 3.0);
    CHECK(g[2] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(chain::uniform_grid(3.0, 1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(chain::uniform_grid(0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("chain parameters validate their ranges") {
    QuantumIsingChainParams p;
    p.N = 0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = {};
    p.N = 11;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = {};
    p.J = 0.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = {};
    p.g = -0.1;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
}

TEST_CASE("detect_dqpt pins the zeros of a pure cosine") {
    // |cos t| vanishes at (k + 1/2) pi with period pi
    chain::LoschmidtSeries s;
    s.times = chain::uniform_grid(0.0, 20.0, 1000);
    for (double t : s.times) s.values.push_back(std::cos(t));
    const auto fine = [](double t) { return cplx(std::cos(t), 0.0); };
    const auto res = chain::detect_dqpt(s, 1e-6, fine);
    REQUIRE(res.critical_times.size() == 6);
    for (size_t k = 0; k < res.critical_times.size(); ++k) {
        CHECK(res.critical_times[k] ==
              doctest::Approx((k + 0.5) * kPi).epsilon(1e-6));
        CHECK(res.min_magnitudes[k] < 1e-6);
    }
    REQUIRE(res.period_estimate.has_value());
    CHECK(*res.period_estimate == doctest::Approx(kPi).epsilon(1e-6));
}

TEST_CASE("detect_dqpt without a fine evaluator still localizes V dips") {
    chain::LoschmidtSeries s;
    s.times = chain::uniform_grid(0.0, 20.0, 2000);
    for (double t : s.times) s.values.push_back(std::cos(t));
    const auto res = chain::detect_dqpt(s, 1e-3);
    REQUIRE(res.critical_times.size() == 6);
    for (size_t k = 0; k < res.critical_times.size(); ++k)
        CHECK(res.critical_times[k] ==
              doctest::Approx((k + 0.5) * kPi).epsilon(1e-4));
}

TEST_CASE("detect_dqpt rejects minima that do not reach zero") {
    // |cos t| + 0.05 dips to 0.05 of the maximum, well above eps_zero
    chain::LoschmidtSeries s;
    s.times = chain::uniform_grid(0.0, 20.0, 2000);
    for (double t : s.times)
        s.values.push_back(std::abs(std::cos(t)) + 0.05);
    const auto fine = [](double t) {
        return cplx(std::abs(std::cos(t)) + 0.05, 0.0);
    };
    const auto res = chain::detect_dqpt(s, 1e-6, fine);
    CHECK(res.critical_times.empty());
    CHECK(!res.period_estimate.has_value());
}

TEST_CASE("detect_dqpt agrees with the analytic 0D critical times") {
    const double hx = 0.4, hz = 1.1;
    const auto fine = [&](double t) {
        return qmap::loschmidt_apt_normalized(hx, hz, t);
    };
    chain::LoschmidtSeries s;
    s.times = chain::uniform_grid(0.0, 12.0, 2000);
    for (double t : s.times) s.values.push_back(fine(t));
    const auto res = chain::detect_dqpt(s, 1e-6, fine);
    const auto want = qmap::dqpt_critical_times(hx, hz, 12.0);
    REQUIRE(res.critical_times.size() == want.size());
    for (size_t k = 0; k < want.size(); ++k)
        CHECK(res.critical_times[k] ==
              doctest::Approx(want[k]).epsilon(5e-7));
}

TEST_CASE("2D lattice maps onto the chain couplings") {
    ising::ClassicalIsing2DParams p;
    p.beta = 0.25;
    p.J1 = 1.3;
    p.J2 = 0.8;
    p.h = 0.6;
    p.N = 5;
    p.M = 12;
    const double t = 3.0;
    const auto q = chain::map_params_2d(p, t);
    CHECK(q.N == p.N);
    CHECK(q.J == doctest::Approx(p.M / t * p.beta * p.J1).epsilon(1e-14));
    CHECK(q.J * q.g ==
          doctest::Approx(p.M / t * std::atanh(std::exp(-2.0 * p.beta * p.J2)))
              .epsilon(1e-14));
    CHECK(q.h == doctest::Approx(p.M / t * p.beta * p.h).epsilon(1e-14));
}

TEST_CASE("mapped 2D trace follows the lattice partition function") {
    // anisotropic slicing: couplings from the inverse map at fixed chain
    ising::ClassicalIsing2DParams p;
    p.N = 3;
    p.M = 24;
    const double t = 1.0, J = 0.9, g = 0.7, h = 0.5;
    p.beta = t / p.M;
    p.J1 = J;
    const double theta2 = p.beta * p.J1 * g;
    p.J2 = -0.5 / p.beta * std::log(std::tanh(theta2));
    p.h = h;
    const auto q = chain::map_params_2d(p, t);
    const auto ev = chain::loschmidt_evaluator(q, false);
    const double log_amp =
        -0.5 * p.N * p.M * std::log(0.5 * std::sinh(2.0 * theta2));
    const cplx approx =
        std::exp(cplx(log_amp, 0.0)) * std::pow(2.0, p.N) * ev(t);
    const cplx z = ising::partition_2d_transfer(p);
    CHECK(oracle::rel_err(approx, z) < 2e-3);  // first order in 1/M
}
