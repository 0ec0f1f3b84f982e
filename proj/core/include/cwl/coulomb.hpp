#pragma once

// Coulomb wave functions F, G, H+- of (generally non-integer) degree sigma
// and real parameter rho, in the Whittaker representations
//   F_sigma(rho, lambda) = 2^{-sigma-1} C_sigma(rho) (-+i)^{sigma+1}
//                          M_{+-i rho, sigma+1/2}(+-2 i lambda),
//   H^{+-} = e^{pi rho / 2} (-+i)^{sigma} e^{+-i c_sigma(rho)}
//            W_{-+i rho, sigma+1/2}(-+2 i lambda),
// with principal powers throughout.

#include "cwl/specfun.hpp"

namespace cwl {

struct CoulombParams {
    double sigma;
    double rho;
    double lambda;

    void validate() const {
        if (!(lambda > 0.0)) throw DomainError("CoulombParams: lambda must be positive");
        // sigma in (-3/2, -1) is admitted for the coefficient-symmetry
        // continuation; sigma = -1 itself hits the 2sigma+2 pole.
        if (!(sigma > -1.5) || std::abs(sigma + 1.0) < 1e-9)
            throw DomainError("CoulombParams: sigma must exceed -3/2 and avoid -1");
    }
};

// Gamow normalization C_sigma(rho) =
//   2^sigma e^{-pi rho/2} |Gamma(sigma+1+i rho)| / Gamma(2 sigma + 2),
// evaluated in log space.
double gamow_c(double sigma, double rho);

// Coulomb phase shift c_sigma(rho) = arg Gamma(sigma+1+i rho), in (-pi, pi].
double phase_c(double sigma, double rho);

enum class SignChoice { Upper, Lower };

// F via the M-representation with the chosen sign; the result is real for
// real parameters -- the imaginary residue must stay below 1e-9 relative or
// AccuracyError is raised.  Both choices agree (tested invariant).
double coulomb_f_via(const CoulombParams& p, SignChoice sign,
                     const SeriesPolicy& pol = {});

// F: M-series route for lambda <= 12, Im H^+ beyond (the Whittaker argument
// 2 lambda then reaches the asymptotic regime).
double coulomb_f(const CoulombParams& p, const SeriesPolicy& pol = {});

// H^{+-}; H^- = conj(H^+) for real parameters.
Complex coulomb_h(const CoulombParams& p, SignChoice sign, const SeriesPolicy& pol = {});

// G = Re H^+.
double coulomb_g(const CoulombParams& p, const SeriesPolicy& pol = {});

// Right side of the reflection formula:
//   cos(theta) F_sigma + sin(theta) G_sigma,
//   theta = (sigma+1/2) pi + c_{-sigma-1}(rho) - c_sigma(rho),
// which equals F_{-sigma-1}(rho, lambda).
double coulomb_f_reflect(double sigma, double rho, double lambda,
                         const SeriesPolicy& pol = {});

// Analytic continuation of F to negative lambda (principal branch of the
// M-representation):
//   F_sigma(rho, -lambda) = e^{-i pi (sigma+1)} e^{-pi rho} F_sigma(-rho, lambda).
// lambda may be any nonzero real; for positive lambda this is just F.
Complex coulomb_f_signed(double sigma, double rho, double lambda,
                         const SeriesPolicy& pol = {});

// Residual of the radial equation u'' + (1 - 2 rho / lambda
// - sigma(sigma+1)/lambda^2) u = 0 for u = F or G, from a 5-point central
// second difference with step h.  Returns the residual; `scale` receives
// the size of the largest term for relative comparison.
double coulomb_ode_residual(bool use_g, const CoulombParams& p, double h, double& scale);

} // namespace cwl
