#pragma once

// Adaptive complex-valued quadrature: Gauss-Kronrod G7-K15 with a global
// worst-interval refinement loop, endpoint-singularity substitution for
// finite intervals, geometric panels / between-zeros panels with Wynn-epsilon
// acceleration for semi-infinite integrals, and symmetric doubling for the
// real line.  Everything is deterministic: no randomness, fixed node tables,
// fixed refinement order.

#include <functional>
#include <optional>

#include "cwl/error.hpp"

namespace cwl {

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_depth = 50;           // per-interval bisection depth
    int max_intervals = 4000;     // global segment budget
    // Period 2*pi/omega of the dominant oscillation, if the caller knows it.
    // Semi-infinite / real-line drivers use half of it as the panel length
    // and accelerate the panel partial sums with the epsilon algorithm.
    std::optional<double> oscillation_period_hint;

    void validate() const {
        if (abs_tol < 1e-13 || rel_tol < 1e-13)
            throw DomainError("QuadConfig: tolerances below 1e-13 are not honest in double");
        if (max_depth < 2 || max_depth > 60) throw DomainError("QuadConfig: bad max_depth");
        if (max_intervals < 8) throw DomainError("QuadConfig: bad max_intervals");
    }
};

struct QuadResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

using Integrand = std::function<Complex(double)>;

// Plain adaptive G7-K15 on [a, b]; integrand must be finite at every node
// (Kronrod nodes are open, endpoints are never evaluated).
QuadResult integrate_adaptive(const Integrand& f, double a, double b,
                              const QuadConfig& cfg = {});

// Finite interval with possible algebraic endpoint singularities
// x^s, s > -1: splits at the midpoint and applies the substitution
// x = a + (m-a) u^5 (resp. mirrored at b) before adapting.
QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadConfig& cfg = {});

// [a, inf).  Without a period hint: geometrically growing panels, stopping
// once two consecutive panels fall below tolerance.  With a hint: fixed
// panels of half a period, partial sums accelerated by the Wynn epsilon
// algorithm (handles non-absolutely-convergent oscillatory tails).  The
// first panel is endpoint-substituted so an integrable singularity at a is
// allowed.
QuadResult integrate_semi_infinite(const Integrand& f, double a,
                                   const QuadConfig& cfg = {});

// (-inf, inf) via symmetric truncation [-R, R] with R doubling (principal
// value for odd-divergent parts).  With a period hint the two tails beyond
// the initial symmetric core are epsilon-accelerated instead.
QuadResult integrate_real_line(const Integrand& f, const QuadConfig& cfg = {});

} // namespace cwl
