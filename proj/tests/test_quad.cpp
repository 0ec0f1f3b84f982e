#include "doctest.h"

#include "cwl/quad.hpp"

#include <cmath>
#include <numbers>

using cwl::Complex;
using cwl::QuadConfig;
using cwl::QuadResult;

TEST_CASE("integrate_adaptive: smooth reference values and linearity") {
    QuadConfig cfg;
    auto f = [](double x) { return Complex(std::exp(-x * x), std::sin(3.0 * x)); };
    QuadResult r = cwl::integrate_adaptive(f, 0.0, 2.0, cfg);
    CHECK(r.converged);
    // erf(2) sqrt(pi)/2 and (1 - cos 6)/3.
    CHECK(std::abs(r.value.real() - 0.88208139076242075147) < 1e-12);
    CHECK(std::abs(r.value.imag() - (1.0 - std::cos(6.0)) / 3.0) < 1e-12);
    CHECK(std::abs(r.value.real() - 0.88208139076242075147) <
          std::max(r.error_estimate, 1e-14)); // error estimate is honest

    auto g = [](double x) { return Complex(x * x, 0.0); };
    QuadResult rf = cwl::integrate_adaptive(f, 0.0, 2.0, cfg);
    QuadResult rg = cwl::integrate_adaptive(g, 0.0, 2.0, cfg);
    auto fg = [&](double x) { return f(x) + 2.0 * g(x); };
    QuadResult rfg = cwl::integrate_adaptive(fg, 0.0, 2.0, cfg);
    CHECK(std::abs(rfg.value - rf.value - 2.0 * rg.value) < 1e-11);
}

TEST_CASE("integrate_finite: algebraic endpoint singularities") {
    QuadConfig cfg;
    // int_0^1 x^{-1/2} dx = 2
    auto f = [](double x) { return Complex(1.0 / std::sqrt(x), 0.0); };
    QuadResult r = cwl::integrate_finite(f, 0.0, 1.0, cfg);
    CHECK(std::abs(r.value.real() - 2.0) < 1e-9);

    // int_0^2 t^{-1/2-i}(2-t)^{-1/2+i} e^{2it} dt, singular at both ends.
    // mpmath: -0.75826697816930036262 + 1.6568435742947732707i
    auto g = [](double t) {
        Complex a = std::pow(Complex(t, 0.0), Complex(-0.5, -1.0));
        Complex b = std::pow(Complex(2.0 - t, 0.0), Complex(-0.5, 1.0));
        return a * b * std::exp(Complex(0.0, 2.0 * t));
    };
    QuadResult r2 = cwl::integrate_finite(g, 0.0, 2.0, cfg);
    Complex oracle{-0.75826697816930036262, 1.6568435742947732707};
    CHECK(std::abs(r2.value - oracle) < 1e-8);
    CHECK(std::abs(r2.value - oracle) < 10.0 * std::max(r2.error_estimate, 1e-12));
}

TEST_CASE("integrate_semi_infinite: decaying and oscillatory tails") {
    QuadConfig cfg;
    auto f = [](double x) { return Complex(std::exp(-x), 0.0); };
    QuadResult r = cwl::integrate_semi_infinite(f, 0.0, cfg);
    CHECK(std::abs(r.value.real() - 1.0) < 1e-10);

    // int_1^inf e^{-x} x^{-1/2}: singular nowhere, shifted start.
    auto g = [](double x) { return Complex(std::exp(-x) / std::sqrt(x), 0.0); };
    QuadResult r1 = cwl::integrate_semi_infinite(g, 1.0, cfg);
    CHECK(std::abs(r1.value.real() - 0.27880558528066198026) < 1e-9); // sqrt(pi) erfc(1)

    // sinc tail needs the epsilon acceleration: int_0^inf sin(x)/x = pi/2.
    QuadConfig osc = cfg;
    osc.oscillation_period_hint = 2.0 * std::numbers::pi;
    auto s = [](double x) { return Complex(x == 0.0 ? 1.0 : std::sin(x) / x, 0.0); };
    QuadResult r2 = cwl::integrate_semi_infinite(s, 0.0, osc);
    CHECK(std::abs(r2.value.real() - std::numbers::pi / 2.0) < 1e-8);
}

TEST_CASE("integrate_real_line: Gaussian and oscillatory Gaussian") {
    QuadConfig cfg;
    auto f = [](double x) { return Complex(std::exp(-x * x / 2.0), 0.0); };
    QuadResult r = cwl::integrate_real_line(f, cfg);
    CHECK(std::abs(r.value.real() - std::sqrt(2.0 * std::numbers::pi)) < 1e-10);

    // Fourier transform value: int e^{-x^2/2} e^{i x} dx = sqrt(2 pi) e^{-1/2}.
    QuadConfig osc = cfg;
    osc.oscillation_period_hint = 2.0 * std::numbers::pi;
    auto g = [](double x) { return Complex(std::exp(-x * x / 2.0), 0.0) *
                                   std::exp(Complex(0.0, x)); };
    QuadResult r2 = cwl::integrate_real_line(g, osc);
    CHECK(std::abs(r2.value - std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5)) < 1e-9);
}

TEST_CASE("QuadConfig validation") {
    QuadConfig bad;
    bad.abs_tol = 1e-14;
    CHECK_THROWS_AS(bad.validate(), cwl::DomainError);
    QuadConfig bad2;
    bad2.max_depth = 1;
    CHECK_THROWS_AS(bad2.validate(), cwl::DomainError);
}
