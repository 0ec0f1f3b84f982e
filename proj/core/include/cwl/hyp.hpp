#pragma once

// Hypergeometric series engines.  These are the workhorses behind the
// Whittaker, Ferrers and off-cut Legendre evaluations; both run their inner
// sums in complex<long double> because the interesting arguments (purely
// imaginary z of size up to ~26 for 1F1) lose close to |z|/ln 10 digits to
// cancellation.

#include "cwl/complexfun.hpp"

namespace cwl {

struct SeriesPolicy {
    int max_terms = 200000;
    double rel_tol = 1e-14;

    void validate() const {
        if (max_terms < 8) throw DomainError("SeriesPolicy: max_terms too small");
        if (rel_tol < 2.3e-15) // ~10 * DBL_EPSILON: below that the stopping test can livelock
            throw DomainError("SeriesPolicy: rel_tol below 10*eps");
    }
};

// Kummer confluent 1F1(a; b; z).  For Re z < 0 the transformation
// 1F1(a;b;z) = e^z 1F1(b-a;b;-z) is applied first.  b at a non-positive
// integer raises DomainError; failure to converge raises AccuracyError.
Complex hyp1f1(Complex a, Complex b, Complex z, const SeriesPolicy& pol = {});

// Gauss 2F1(a, b; c; x) for real x in (-1, 1).  Uses the direct series for
// |mapped x| <= 1/2, the Pfaff map x -> x/(x-1) for x < -1/2, and the 1-x
// connection formula for x > 1/2.  The connection is refused (DomainError)
// when c-a-b is within 1e-8 of an integer.
Complex hyp2f1(Complex a, Complex b, Complex c, double x, const SeriesPolicy& pol = {});

} // namespace cwl
