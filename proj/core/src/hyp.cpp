#include "cwl/hyp.hpp"

#include <cmath>

namespace cwl {

namespace {

using LComplex = std::complex<long double>;

LComplex widen(Complex z) { return {(long double)z.real(), (long double)z.imag()}; }
Complex narrow(LComplex z) { return {(double)z.real(), (double)z.imag()}; }

// Plain power series sum_k t_k with t_{k+1} = t_k * ratio(k).  Stops after
// three consecutive terms below rel_tol * |sum|.
template <typename Ratio>
Complex sum_series(LComplex t0, Ratio ratio, const SeriesPolicy& pol, const char* who) {
    LComplex sum = t0, term = t0;
    int small_run = 0;
    for (int k = 0; k < pol.max_terms; ++k) {
        term *= ratio(k);
        sum += term;
        if (std::abs(term) <= (long double)pol.rel_tol * std::abs(sum)) {
            if (++small_run == 3) return narrow(sum);
        } else {
            small_run = 0;
        }
    }
    throw AccuracyError(std::string(who) + ": series did not converge",
                        narrow(sum), std::abs(narrow(term)));
}

Complex hyp1f1_direct(Complex a, Complex b, Complex z, const SeriesPolicy& pol) {
    LComplex la = widen(a), lb = widen(b), lz = widen(z);
    return sum_series(
        LComplex(1.0L),
        [=](int k) { return (la + (long double)k) * lz / ((lb + (long double)k) * (long double)(k + 1)); },
        pol, "hyp1f1");
}

Complex hyp2f1_direct(Complex a, Complex b, Complex c, double x, const SeriesPolicy& pol) {
    LComplex la = widen(a), lb = widen(b), lc = widen(c);
    long double lx = x;
    return sum_series(
        LComplex(1.0L),
        [=](int k) {
            long double kk = k;
            return (la + kk) * (lb + kk) * lx / ((lc + kk) * (kk + 1.0L));
        },
        pol, "hyp2f1");
}

bool near_integer(Complex z, double tol) {
    return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

} // namespace

Complex hyp1f1(Complex a, Complex b, Complex z, const SeriesPolicy& pol) {
    pol.validate();
    if (near_gamma_pole(b)) throw DomainError("hyp1f1: b at non-positive integer");
    if (z.real() < 0.0)
        return ensure_finite(std::exp(z) * hyp1f1_direct(b - a, b, -z, pol), "hyp1f1");
    return ensure_finite(hyp1f1_direct(a, b, z, pol), "hyp1f1");
}

Complex hyp2f1(Complex a, Complex b, Complex c, double x, const SeriesPolicy& pol) {
    pol.validate();
    if (near_gamma_pole(c)) throw DomainError("hyp2f1: c at non-positive integer");
    if (!(x > -1.0 && x < 1.0)) throw DomainError("hyp2f1: x outside (-1, 1)");

    if (x < -0.5) {
        // Pfaff: 2F1(a,b;c;x) = (1-x)^{-a} 2F1(a, c-b; c; x/(x-1)); the mapped
        // argument lies in (1/3, 1/2] for x in (-1, -1/2).
        double u = x / (x - 1.0);
        return ensure_finite(principal_pow(1.0 - x, -a) * hyp2f1_direct(a, c - b, c, u, pol),
                             "hyp2f1");
    }
    if (x <= 0.5) return ensure_finite(hyp2f1_direct(a, b, c, x, pol), "hyp2f1");

    // 1-x connection (DLMF 15.8.4); degenerate when c-a-b is an integer.
    Complex s = c - a - b;
    if (near_integer(s, 1e-8)) {
        // The direct series still converges for x < 1; acceptable up to ~0.95.
        if (x <= 0.95) return ensure_finite(hyp2f1_direct(a, b, c, x, pol), "hyp2f1");
        throw DomainError("hyp2f1: connection degenerate, c-a-b near integer");
    }
    double y = 1.0 - x;
    Complex t1 = gamma_fn(c) * gamma_fn(s) * rgamma(c - a) * rgamma(c - b)
               * hyp2f1_direct(a, b, 1.0 - s, y, pol);
    Complex t2 = gamma_fn(c) * gamma_fn(-s) * rgamma(a) * rgamma(b)
               * principal_pow(y, s) * hyp2f1_direct(c - a, c - b, 1.0 + s, y, pol);
    return ensure_finite(t1 + t2, "hyp2f1");
}

} // namespace cwl
