#pragma once

// Complex elementary / gamma-family building blocks.  Everything downstream
// (hypergeometric engines, Whittaker, Coulomb, transition coefficients)
// funnels its complex powers and gamma evaluations through this header so
// that the branch convention -- principal argument in (-pi, pi] -- is fixed
// in exactly one place.

#include <complex>

#include "cwl/error.hpp"

namespace cwl {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// b^e = exp(e Log b) with Log the principal branch, arg in (-pi, pi].
// b == 0 is allowed only for real e > 0 (result 0); otherwise DomainError.
Complex principal_pow(Complex base, Complex expo);

// Principal-branch log Gamma, continuous on the plane cut along the
// negative real axis.  Conjugate-symmetric: ln_gamma(conj z) == conj(ln_gamma(z)).
// Poles (z = 0, -1, -2, ...) raise DomainError.
Complex ln_gamma(Complex z);

// Gamma(z) = exp(ln_gamma(z)); DomainError at the poles.
Complex gamma_fn(Complex z);

// 1/Gamma(z), entire: returns exactly 0 at the poles of Gamma.
Complex rgamma(Complex z);

// Euler beta B(z,w) = Gamma(z)Gamma(w)/Gamma(z+w), computed in log space.
// Poles of either numerator gamma raise DomainError.
Complex beta_fn(Complex z, Complex w);

// psi(z) = d/dz ln Gamma(z); recurrence shift plus asymptotic series.
Complex digamma(Complex z);

// digamma at positive integers: -gamma_E + sum_{k<n} 1/k.
double digamma_int(int n);

// True if z is within tol of a non-positive integer (pole of Gamma).
bool near_gamma_pole(Complex z, double tol = 1e-12);

// Guard helper: throws AccuracyError if v is non-finite.
Complex ensure_finite(Complex v, const char* where);

} // namespace cwl
