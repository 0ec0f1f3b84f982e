#pragma once

// Whittaker, Bessel, parabolic-cylinder, Ferrers and off-cut Legendre
// functions, in the normalizations used by the transition-coefficient layer.
// All complex powers are principal-branch (see complexfun.hpp).

#include "cwl/hyp.hpp"

namespace cwl {

// M_{mu,nu}(z) = z^{nu+1/2} e^{-z/2} 1F1(nu - mu + 1/2; 2nu + 1; z), z != 0,
// 2nu + 1 off the non-positive integers.
Complex whittaker_m(Complex mu, Complex nu, Complex z, const SeriesPolicy& pol = {});

// W_{mu,nu}(z).  Three routes: terminating Kummer-U polynomial when either
// 1/2 + nu - mu or 1/2 - nu - mu is a non-positive integer; the M-connection
// formula for generic parameters with 2nu non-integer; and the divergent
// asymptotic expansion (optimally truncated) for |z| >= 24.
Complex whittaker_w(Complex mu, Complex nu, Complex z, const SeriesPolicy& pol = {});

// Asymptotic route exposed for testing; requires |z| large enough that the
// optimally-truncated tail is below ~1e-13 relative.
Complex whittaker_w_asymptotic(Complex mu, Complex nu, Complex z);

enum class BesselKind { J, Y, K, H1, H2 };

// Bessel functions of real positive argument.  J accepts complex order
// (power series) but switches to the Hankel asymptotic expansion for real
// order when x > 16.  Y and K accept real order only (J-combination /
// I-combination off integers, dedicated log-series at integer order, and
// large-x asymptotics).  H1/H2 = J +- iY.
Complex bessel(BesselKind kind, Complex nu, double x, const SeriesPolicy& pol = {});

Complex bessel_j(Complex nu, double x, const SeriesPolicy& pol = {});
Complex bessel_i(Complex nu, double x, const SeriesPolicy& pol = {});
double bessel_k(double nu, double x, const SeriesPolicy& pol = {});
double bessel_y(double nu, double x, const SeriesPolicy& pol = {});

// Parabolic cylinder D_tau(z) = 2^{tau/2 + 1/4} z^{-1/2} W_{tau/2+1/4,-1/4}(z^2/2),
// using principal powers; z must avoid 0.
Complex parabolic_d(Complex tau, Complex z, const SeriesPolicy& pol = {});

// Ferrers function of the first kind on the cut, -1 < x < 1:
// P^mu_nu(x) = ((1+x)/(1-x))^{mu/2} / Gamma(1-mu) * 2F1(-nu, nu+1; 1-mu; (1-x)/2).
Complex ferrers_p(Complex mu, Complex nu, double x, const SeriesPolicy& pol = {});

// Legendre Q off the cut (|z| > 1, z real allowed negative, principal powers),
// GR 8.703 representation:
// Q^mu_nu(z) = e^{i pi mu} sqrt(pi) Gamma(nu+mu+1) (z^2-1)^{mu/2}
//              / (2^{nu+1} Gamma(nu+3/2) z^{nu+mu+1})
//              * 2F1((nu+mu)/2 + 1, (nu+mu+1)/2; nu + 3/2; z^{-2}).
Complex legendre_q_offcut(Complex mu, Complex nu, double z, const SeriesPolicy& pol = {});

} // namespace cwl
