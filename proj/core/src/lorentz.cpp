#include "cwl/lorentz.hpp"

#include <cmath>

namespace cwl {

ConePoint gamma1_point(double a) {
    return {0.5 * (1.0 + a * a), 0.5 * (1.0 - a * a), a};
}

ConePoint gamma2_point(double a, Branch branch) {
    return {std::cosh(a), branch == Branch::Plus ? 1.0 : -1.0, std::sinh(a)};
}

ConePoint h1_apply(double t, const ConePoint& x) {
    return {
        0.5 * ((2.0 + t * t) * x.x1 + t * t * x.x2 + 2.0 * t * x.x3),
        0.5 * (-t * t * x.x1 + (2.0 - t * t) * x.x2 - 2.0 * t * x.x3),
        0.5 * (2.0 * t * x.x1 + 2.0 * t * x.x2 + 2.0 * x.x3),
    };
}

ConePoint h2_apply(double t, const ConePoint& x) {
    double c = std::cosh(t), s = std::sinh(t);
    return {c * x.x1 + s * x.x3, x.x2, s * x.x1 + c * x.x3};
}

Complex basis_parabolic(double lambda, Degree deg, const ConePoint& x) {
    double p = x.x1 + x.x2;
    if (p == 0.0) throw DomainError("basis_parabolic: x1 + x2 = 0");
    return principal_pow(Complex(p), Complex(deg.exponent()))
         * std::exp(Complex(0.0, lambda * x.x3 / p));
}

Complex basis_hyperbolic(double rho, Branch branch, Degree deg, const ConePoint& x) {
    double sgn = branch == Branch::Plus ? 1.0 : -1.0;
    if (sgn * x.x2 <= 0.0) return {0.0, 0.0}; // (x2)_{+-} vanishes off its half
    // On the cone x1^2 = x2^2 + x3^2, so x1 + x3 = x2^2 / (x1 - x3); use the
    // quotient form when x1 - x3 dominates, where the direct sum cancels.
    double q = x.x1 - x.x3 > x.x1 + x.x3 ? x.x2 * x.x2 / (x.x1 - x.x3)
                                         : x.x1 + x.x3;
    if (!(q > 0.0)) throw DomainError("basis_hyperbolic: x1 + x3 <= 0");
    Complex ir(0.0, rho);
    return principal_pow(Complex(std::abs(x.x2)), Complex(deg.exponent()) - ir)
         * principal_pow(Complex(q), ir);
}

Complex kernel_F_xi(const XiVector& xi, Degree deg, const ConePoint& x) {
    double base = xi.xi1 * x.x1 - xi.xi2 * x.x2 - xi.xi3 * x.x3;
    if (base == 0.0) throw DomainError("kernel_F_xi: zero base");
    return principal_pow(Complex(base), Complex(deg.sigma));
}

namespace {

QuadResult pullback_integral(const ConeFunction& f, const ConeFunction& g,
                             const QuadConfig& cfg, const PullbackInfo& info,
                             ConePoint (*param)(double)) {
    auto integrand = [&f, &g, param](double a) {
        ConePoint x = param(a);
        // g first: the hyperbolic basis vanishes identically on the opposite
        // branch, where the partner may be singular (e.g. x1+x2 = 0 on
        // gamma_2,- for the parabolic basis).
        Complex gv = g(x);
        if (gv == Complex(0.0)) return Complex(0.0);
        return f(x) * gv;
    };
    if (info.support)
        return integrate_finite(integrand, info.support->first, info.support->second, cfg);
    QuadConfig c = cfg;
    c.oscillation_period_hint = info.period_hint;
    return integrate_real_line(integrand, c);
}

ConePoint gamma2_plus(double a) { return gamma2_point(a, Branch::Plus); }
ConePoint gamma2_minus(double a) { return gamma2_point(a, Branch::Minus); }

} // namespace

QuadResult functional_F1(const ConeFunction& f, const ConeFunction& g,
                         const QuadConfig& cfg, const PullbackInfo& info) {
    return pullback_integral(f, g, cfg, info, &gamma1_point);
}

QuadResult functional_F2(const ConeFunction& f, const ConeFunction& g,
                         const QuadConfig& cfg, const PullbackInfo& info) {
    QuadResult plus = pullback_integral(f, g, cfg, info, &gamma2_plus);
    QuadResult minus = pullback_integral(f, g, cfg, info, &gamma2_minus);
    plus.value += minus.value;
    plus.error_estimate += minus.error_estimate;
    plus.evaluations += minus.evaluations;
    plus.converged = plus.converged && minus.converged;
    return plus;
}

Complex coeff_plus(double lambda, double rho, double sigma) {
    if (lambda == 0.0) throw DomainError("coeff_plus: lambda = 0");
    Complex g = ln_gamma(Complex(sigma + 1.0, rho));
    double mod_gamma = std::exp(g.real());
    Complex f = coulomb_f_signed(sigma, rho, lambda);
    return mod_gamma * std::exp(pi * rho / 2.0) * f
         / (pi * principal_pow(Complex(lambda), Complex(sigma + 1.0)));
}

Complex coeff_minus_quarter(double lambda, double rho) {
    if (!(lambda > 0.0)) throw DomainError("coeff_minus_quarter: lambda must be positive");
    // lambda^{-3/4} e^{-pi rho/2} |Gamma(3/4 + i rho)| / pi
    //   * Re( e^{i (c_{-1/4} - c_{-3/4})} H^+_{-3/4}(rho, lambda) ).
    double delta = phase_c(-0.25, rho) - phase_c(-0.75, rho);
    CoulombParams p{-0.75, rho, lambda};
    Complex hplus(coulomb_g(p), coulomb_f(p));
    double mg = std::exp(ln_gamma(Complex(0.75, rho)).real());
    double val = std::pow(lambda, -0.75) * std::exp(-pi * rho / 2.0) * mg / pi
               * (std::exp(Complex(0.0, delta)) * hplus).real();
    return {val, 0.0};
}

Complex coeff_symmetry(double rho, Branch branch, double lambda, double sigma) {
    if (branch == Branch::Minus)
        throw DomainError("coeff_symmetry: no closed form for branch - at generic sigma");
    // The dual-degree coefficient continues coeff_plus to -lambda through the
    // lower half-plane, so (-lambda)^{-sigma} takes the e^{-i pi} branch; the
    // principal branch in coeff_plus is off by e^{-2 pi i (sigma + 1)}.
    return std::exp(Complex(0.0, -2.0 * pi * (sigma + 1.0)))
         * coeff_plus(-lambda, -rho, -sigma - 1.0);
}

Complex f1_fxi_closed(double sigma, double lambda, const XiVector& xi) {
    if (xi.classify() != XiRegime::T3) throw DomainError("f1_fxi_closed: T3 regime required");
    if (!(xi.xi1 + xi.xi2 > 0.0)) throw DomainError("f1_fxi_closed: xi1 + xi2 > 0 required");
    if (lambda == 0.0) throw DomainError("f1_fxi_closed: lambda = 0");
    if (!(sigma > -1.0 && sigma < 0.0)) throw DomainError("f1_fxi_closed: sigma outside (-1,0)");
    double p = xi.xi1 + xi.xi2;
    double a = std::sqrt(xi.xi1 * xi.xi1 - xi.xi2 * xi.xi2 - xi.xi3 * xi.xi3) / p;
    double bp = xi.xi3 / p;
    double al = std::abs(lambda);
    return std::pow(p / 2.0, sigma) * std::exp(Complex(0.0, bp * lambda))
         * (2.0 * std::sqrt(pi) / std::tgamma(-sigma))
         * std::pow(al / (2.0 * a), -sigma - 0.5) * bessel_k(sigma + 0.5, a * al);
}

Complex f2_fxi_closed_t3(double sigma, double rho, const XiVector& xi) {
    if (xi.classify() != XiRegime::T3) throw DomainError("f2_fxi_closed_t3: T3 regime required");
    if (!(sigma > -1.0 && sigma < 0.0)) throw DomainError("f2_fxi_closed_t3: sigma outside (-1,0)");
    double d2 = xi.xi1 * xi.xi1 - xi.xi3 * xi.xi3; // > 0 in T3
    Complex ir(0.0, rho);
    Complex b = beta_fn(Complex(-sigma, rho), Complex(-sigma, -rho));
    return std::pow(2.0, -2.0 * sigma - 0.5)
         * principal_pow(Complex(xi.xi1 - xi.xi3), (Complex(sigma) - ir) / 2.0)
         * principal_pow(Complex(xi.xi1 + xi.xi3), (Complex(sigma) + ir) / 2.0)
         * b * gamma_fn(Complex(0.5 - sigma, 0.0))
         * std::pow((d2 - xi.xi2 * xi.xi2) / d2, (1.0 + 2.0 * sigma) / 4.0)
         * ferrers_p(Complex(sigma + 0.5, 0.0), Complex(-0.5, rho),
                     -xi.xi2 / std::sqrt(d2));
}

Complex f2_fxi_closed_t4(double sigma, double rho, const XiVector& xi, Branch branch) {
    if (xi.classify() != XiRegime::T4) throw DomainError("f2_fxi_closed_t4: T4 regime required");
    if (!(sigma > -1.0 && sigma < 0.0)) throw DomainError("f2_fxi_closed_t4: sigma outside (-1,0)");
    double d2 = xi.xi1 * xi.xi1 - xi.xi3 * xi.xi3; // > 0 in T4 as well
    double w = xi.xi2 * xi.xi2 + xi.xi3 * xi.xi3 - xi.xi1 * xi.xi1; // > 0 in T4
    double sgn = branch == Branch::Plus ? -1.0 : 1.0;
    Complex ir(0.0, rho);
    return 2.0 * std::exp(pi * rho)
         * principal_pow(Complex(d2), -ir / 2.0)
         * principal_pow(Complex(std::abs(xi.xi1) + std::abs(xi.xi3)), ir)
         * std::pow(w, sigma / 2.0)
         * gamma_fn(Complex(-sigma, -rho)) * rgamma(Complex(-sigma, 0.0))
         * legendre_q_offcut(ir, Complex(-sigma - 1.0, 0.0),
                             sgn * xi.xi2 / std::sqrt(w));
}

Complex poisson_parabolic(double lambda, double sigma, double alpha3, double beta3) {
    if (!(sigma > -1.0 && sigma < 0.0)) throw DomainError("poisson_parabolic: sigma outside (-1,0)");
    if (lambda == 0.0) throw DomainError("poisson_parabolic: lambda = 0");
    if (!(beta3 > -pi && beta3 < pi)) throw DomainError("poisson_parabolic: beta3 outside (-pi,pi)");
    XiVector y{std::cosh(alpha3), std::sinh(alpha3) * std::cos(beta3),
               std::sinh(alpha3) * std::sin(beta3)};
    if (y.classify() != XiRegime::T3) throw DomainError("poisson_parabolic: regime violation");
    return f1_fxi_closed(sigma, lambda, y);
}

std::pair<double, double> box_laplacian_residual(double lambda, double sigma,
                                                 const HyperboloidPoint& y, double h) {
    y.validate();
    auto u = [lambda, sigma](double y1, double y2, double y3) {
        double r2 = y1 * y1 - y2 * y2 - y3 * y3;
        if (!(r2 > 0.0)) throw DomainError("box_laplacian_residual: left the cone interior");
        double r = std::sqrt(r2);
        double c = y1 / r;
        double sh = std::sqrt(c * c - 1.0);
        double a3 = std::acosh(c);
        double b3 = sh > 0.0 ? std::atan2(y3 / r, y2 / r) : 0.0;
        return std::pow(r, sigma) * poisson_parabolic(lambda, sigma, a3, b3);
    };
    Complex u0 = u(y.y1, y.y2, y.y3);
    auto d2 = [&](int axis) {
        double dy1 = axis == 0 ? h : 0.0, dy2 = axis == 1 ? h : 0.0, dy3 = axis == 2 ? h : 0.0;
        return (u(y.y1 + dy1, y.y2 + dy2, y.y3 + dy3) - 2.0 * u0
              + u(y.y1 - dy1, y.y2 - dy2, y.y3 - dy3)) / (h * h);
    };
    Complex d11 = d2(0), d22 = d2(1), d33 = d2(2);
    double scale = std::max({std::abs(d11), std::abs(d22), std::abs(d33), std::abs(u0)});
    return {std::abs(d11 - d22 - d33), scale};
}

} // namespace cwl
