#include "doctest.h"

#include "cwl/lorentz.hpp"

#include <cmath>

using cwl::Branch;
using cwl::Complex;
using cwl::ConePoint;
using cwl::Degree;
using cwl::XiRegime;
using cwl::XiVector;

TEST_CASE("contour points lie on the cone") {
    for (double a : {-2.0, -1.0, 0.0, 0.7, 3.0}) {
        CHECK_NOTHROW(cwl::gamma1_point(a).validate());
        CHECK_NOTHROW(cwl::gamma2_point(a, Branch::Plus).validate());
        CHECK_NOTHROW(cwl::gamma2_point(a, Branch::Minus).validate());
    }
    ConePoint g1 = cwl::gamma1_point(0.7);
    CHECK(std::abs(g1.x1 + g1.x2 - 1.0) < 1e-15);
    CHECK(g1.x3 == 0.7);
    ConePoint g2 = cwl::gamma2_point(0.4, Branch::Minus);
    CHECK(g2.x2 == -1.0);
}

TEST_CASE("h1 / h2 actions preserve the cone and their invariants") {
    ConePoint x = cwl::gamma1_point(0.3);
    ConePoint y = cwl::h1_apply(1.2, x);
    CHECK_NOTHROW(y.validate());
    CHECK(std::abs((y.x1 + y.x2) - (x.x1 + x.x2)) < 1e-14); // h1 fixes x1+x2
    ConePoint z = cwl::h2_apply(0.8, x);
    CHECK_NOTHROW(z.validate());
    CHECK(std::abs(z.x2 - x.x2) < 1e-14); // h2 fixes x2
}

TEST_CASE("basis covariance under the stabilizing subgroups") {
    double t = 0.9;
    Degree d{-0.5, false};
    // f_lambda(h1(t) x) = e^{i lambda t} f_lambda(x): h1 shifts x3/(x1+x2) by t.
    double lambda = 1.7;
    ConePoint x = cwl::gamma2_point(0.4, Branch::Plus);
    Complex lhs1 = cwl::basis_parabolic(lambda, d, cwl::h1_apply(t, x));
    Complex rhs1 = std::exp(Complex(0.0, lambda * t)) * cwl::basis_parabolic(lambda, d, x);
    CHECK(std::abs(lhs1 - rhs1) / std::abs(rhs1) < 1e-10);

    // f_{rho,+-}(h2(t) x) = e^{i rho t} f_{rho,+-}(x): h2 scales x1+x3 by e^t.
    double rho = 0.8;
    ConePoint w = cwl::gamma1_point(0.3);
    Complex lhs2 = cwl::basis_hyperbolic(rho, Branch::Plus, d, cwl::h2_apply(t, w));
    Complex rhs2 = std::exp(Complex(0.0, rho * t)) * cwl::basis_hyperbolic(rho, Branch::Plus, d, w);
    CHECK(std::abs(lhs2 - rhs2) / std::abs(rhs2) < 1e-10);

    // Branch support: f_{rho,-} vanishes where x2 > 0.
    CHECK(cwl::basis_hyperbolic(rho, Branch::Minus, d, w) == Complex(0.0, 0.0));
}

TEST_CASE("kernel homogeneity in xi") {
    Degree d{-0.4, false};
    XiVector xi{2.0, 0.5, 1.0};
    ConePoint x = cwl::gamma1_point(0.6);
    XiVector xs{2.0 * 3.0, 0.5 * 3.0, 1.0 * 3.0};
    Complex a = cwl::kernel_F_xi(xs, d, x);
    Complex b = std::pow(3.0, d.sigma) * cwl::kernel_F_xi(xi, d, x);
    CHECK(std::abs(a - b) / std::abs(b) < 1e-13);
}

TEST_CASE("XiVector regime classification") {
    XiVector t3{2.0, 0.5, 1.0}, t4{2.0, 2.5, 1.0};
    XiVector bad_order{1.0, 0.5, 2.0}, bad_sum{1.0, -1.0, 0.5}, bad_edge{2.0, 0.0, 2.0};
    CHECK(t3.classify() == XiRegime::T3);
    CHECK(t4.classify() == XiRegime::T4);
    CHECK_THROWS_AS((void)bad_order.classify(), cwl::DomainError);
    CHECK_THROWS_AS((void)bad_sum.classify(), cwl::DomainError);
    CHECK_THROWS_AS((void)bad_edge.classify(), cwl::DomainError);
}

TEST_CASE("Degree exponent duality") {
    CHECK(Degree{-0.3, false}.exponent() == -0.3);
    CHECK(Degree{-0.3, true}.exponent() == -0.7);
}

TEST_CASE("functional_F1 pairs parabolic basis with F_xi consistently") {
    // F1(f*_lambda, F_xi) against the K-Bessel closed form (THM1 core identity,
    // one point only; the verifier grid covers the rest).
    double sigma = -0.5, lambda = 1.5;
    XiVector xi{2.0, 0.5, 1.0};
    Degree dual{sigma, true};
    auto f = [&](const ConePoint& x) { return cwl::basis_parabolic(lambda, dual, x); };
    auto g = [&](const ConePoint& x) { return cwl::kernel_F_xi(xi, Degree{sigma, false}, x); };
    cwl::PullbackInfo info;
    info.period_hint = 2.0 * cwl::pi / lambda;
    cwl::QuadResult r = cwl::functional_F1(f, g, {}, info);
    Complex closed = cwl::f1_fxi_closed(sigma, lambda, xi);
    CHECK(std::abs(r.value - closed) / std::abs(closed) < 1e-7);
}

TEST_CASE("poisson_parabolic matches f1_fxi_closed on the hyperboloid") {
    double lambda = 1.2, sigma = -0.35, a3 = 0.6, b3 = 1.1;
    XiVector y{std::cosh(a3), std::sinh(a3) * std::cos(b3), std::sinh(a3) * std::sin(b3)};
    Complex p = cwl::poisson_parabolic(lambda, sigma, a3, b3);
    Complex f = cwl::f1_fxi_closed(sigma, lambda, y);
    CHECK(std::abs(p - f) / std::abs(f) < 1e-12);
}

TEST_CASE("coefficient symmetry matches the defining pairing") {
    // (1/2pi) F1(f*_{rho,+} dual, f_{-lambda}) = c_{-lambda,-rho,+}(-sigma-1).
    double rho = 0.6, lambda = 1.4, sigma = -0.45;
    auto f = [&](const ConePoint& x) {
        return cwl::basis_hyperbolic(rho, Branch::Plus, Degree{sigma, true}, x);
    };
    auto g = [&](const ConePoint& x) {
        return cwl::basis_parabolic(-lambda, Degree{sigma, false}, x);
    };
    cwl::PullbackInfo info;
    info.support = std::make_pair(-1.0, 1.0);
    cwl::QuadResult r = cwl::functional_F1(f, g, {}, info);
    Complex lhs = r.value / (2.0 * cwl::pi);
    Complex rhs = cwl::coeff_symmetry(rho, Branch::Plus, lambda, sigma);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-7);
}

TEST_CASE("box_laplacian_residual vanishes for the Poisson image") {
    cwl::HyperboloidPoint y{std::cosh(0.6), std::sinh(0.6) * std::cos(1.1),
                            std::sinh(0.6) * std::sin(1.1)};
    auto [res, scale] = cwl::box_laplacian_residual(1.2, -0.35, y, 1e-3);
    CHECK(std::abs(res) < 1e-5 * scale);
}
