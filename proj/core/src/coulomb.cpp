#include "cwl/coulomb.hpp"

#include <cmath>

namespace cwl {

double gamow_c(double sigma, double rho) {
    // |Gamma(sigma+1+i rho)|; tgamma covers the negative-real continuation
    double mod_gamma = rho == 0.0 ? std::abs(std::tgamma(sigma + 1.0))
                                  : std::exp(ln_gamma(Complex(sigma + 1.0, rho)).real());
    return std::pow(2.0, sigma) * std::exp(-pi * rho / 2.0) * mod_gamma
         / std::tgamma(2.0 * sigma + 2.0);
}

double phase_c(double sigma, double rho) {
    double im = ln_gamma(Complex(sigma + 1.0, rho)).imag();
    // wrap into (-pi, pi]
    return std::atan2(std::sin(im), std::cos(im));
}

double coulomb_f_via(const CoulombParams& p, SignChoice sign, const SeriesPolicy& pol) {
    p.validate();
    const Complex i(0.0, 1.0);
    double c = gamow_c(p.sigma, p.rho);
    Complex pref = std::pow(2.0, -p.sigma - 1.0) * c;
    Complex v;
    if (sign == SignChoice::Upper)
        v = pref * principal_pow(-i, p.sigma + 1.0)
          * whittaker_m(i * p.rho, Complex(p.sigma + 0.5, 0.0), 2.0 * i * p.lambda, pol);
    else
        v = pref * principal_pow(i, p.sigma + 1.0)
          * whittaker_m(-i * p.rho, Complex(p.sigma + 0.5, 0.0), -2.0 * i * p.lambda, pol);
    // The M-series at z = 2 i lambda cancels like e^{2 lambda}; the admissible
    // residue tracks that (long-double accumulation leaves ~5e-19 e^{2 lambda}).
    double cap = std::max(1e-9, 5e-19 * std::exp(2.0 * p.lambda));
    if (std::abs(v.imag()) > cap * std::max(1.0, std::abs(v.real())))
        throw AccuracyError("coulomb_f: imaginary residue too large", v, std::abs(v.imag()));
    return v.real();
}

Complex coulomb_h(const CoulombParams& p, SignChoice sign, const SeriesPolicy& pol) {
    p.validate();
    const Complex i(0.0, 1.0);
    double c = phase_c(p.sigma, p.rho);
    Complex nu(p.sigma + 0.5, 0.0);
    if (sign == SignChoice::Upper)
        return ensure_finite(std::exp(pi * p.rho / 2.0) * principal_pow(-i, p.sigma)
                                 * std::exp(i * c)
                                 * whittaker_w(-i * p.rho, nu, -2.0 * i * p.lambda, pol),
                             "coulomb_h");
    return ensure_finite(std::exp(pi * p.rho / 2.0) * principal_pow(i, p.sigma)
                             * std::exp(-i * c)
                             * whittaker_w(i * p.rho, nu, 2.0 * i * p.lambda, pol),
                         "coulomb_h");
}

double coulomb_f(const CoulombParams& p, const SeriesPolicy& pol) {
    p.validate();
    if (p.lambda <= 12.0) return coulomb_f_via(p, SignChoice::Upper, pol);
    return coulomb_h(p, SignChoice::Upper, pol).imag();
}

double coulomb_g(const CoulombParams& p, const SeriesPolicy& pol) {
    return coulomb_h(p, SignChoice::Upper, pol).real();
}

double coulomb_f_reflect(double sigma, double rho, double lambda, const SeriesPolicy& pol) {
    CoulombParams p{sigma, rho, lambda};
    p.validate();
    double theta = (sigma + 0.5) * pi + phase_c(-sigma - 1.0, rho) - phase_c(sigma, rho);
    return std::cos(theta) * coulomb_f(p, pol) + std::sin(theta) * coulomb_g(p, pol);
}

Complex coulomb_f_signed(double sigma, double rho, double lambda, const SeriesPolicy& pol) {
    if (lambda == 0.0) throw DomainError("coulomb_f_signed: lambda = 0");
    if (lambda > 0.0) return {coulomb_f(CoulombParams{sigma, rho, lambda}, pol), 0.0};
    const Complex i(0.0, 1.0);
    double f = coulomb_f(CoulombParams{sigma, -rho, -lambda}, pol);
    return std::exp(-i * pi * (sigma + 1.0)) * std::exp(-pi * rho) * f;
}

double coulomb_ode_residual(bool use_g, const CoulombParams& p, double h, double& scale) {
    p.validate();
    auto u = [&](double lam) {
        CoulombParams q{p.sigma, p.rho, lam};
        return use_g ? coulomb_g(q) : coulomb_f(q);
    };
    double um2 = u(p.lambda - 2.0 * h), um1 = u(p.lambda - h), u0 = u(p.lambda);
    double up1 = u(p.lambda + h), up2 = u(p.lambda + 2.0 * h);
    double d2 = (-um2 + 16.0 * um1 - 30.0 * u0 + 16.0 * up1 - up2) / (12.0 * h * h);
    double pot = 1.0 - 2.0 * p.rho / p.lambda - p.sigma * (p.sigma + 1.0) / (p.lambda * p.lambda);
    scale = std::max({std::abs(d2), std::abs(pot * u0), 1.0});
    return d2 + pot * u0;
}

} // namespace cwl
