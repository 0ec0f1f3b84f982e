#include "cwl/specfun.hpp"

#include <cmath>
#include <vector>

namespace cwl {

namespace {

using LComplex = std::complex<long double>;

bool near_nonpos_int(Complex z, double tol = 1e-9) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

bool near_int(double x, double tol = 1e-9) {
    return std::abs(x - std::round(x)) <= tol;
}

// U(-n, b, z) = (-1)^n sum_k (-1)^k C(n,k) (b+k)_{n-k} z^k  (Kummer-U at a
// non-positive integer first parameter; a polynomial, no poles in b).
Complex kummer_u_poly(int n, Complex b, Complex z) {
    LComplex sum = 0.0L;
    LComplex lb{(long double)b.real(), (long double)b.imag()};
    LComplex lz{(long double)z.real(), (long double)z.imag()};
    for (int k = 0; k <= n; ++k) {
        long double binom = 1.0L;
        for (int j = 1; j <= k; ++j) binom *= (long double)(n - k + j) / j;
        LComplex poch = 1.0L;
        for (int j = 0; j < n - k; ++j) poch *= lb + (long double)(k + j);
        LComplex zk = 1.0L;
        for (int j = 0; j < k; ++j) zk *= lz;
        LComplex term = binom * poch * zk;
        sum += (k % 2 == 0) ? term : -term;
    }
    if (n % 2 != 0) sum = -sum;
    return {(double)sum.real(), (double)sum.imag()};
}

} // namespace

Complex whittaker_m(Complex mu, Complex nu, Complex z, const SeriesPolicy& pol) {
    if (z == Complex(0.0)) throw DomainError("whittaker_m: z = 0");
    Complex b = 2.0 * nu + 1.0;
    if (near_gamma_pole(b)) throw DomainError("whittaker_m: 2nu+1 at non-positive integer");
    return ensure_finite(principal_pow(z, nu + 0.5) * std::exp(-z / 2.0)
                             * hyp1f1(nu - mu + 0.5, b, z, pol),
                         "whittaker_m");
}

Complex whittaker_w_asymptotic(Complex mu, Complex nu, Complex z) {
    // DLMF 13.19.3, optimally truncated.
    Complex a1 = 0.5 + nu - mu, a2 = 0.5 - nu - mu;
    LComplex term = 1.0L, sum = 1.0L;
    LComplex la1{(long double)a1.real(), (long double)a1.imag()};
    LComplex la2{(long double)a2.real(), (long double)a2.imag()};
    LComplex lz{(long double)z.real(), (long double)z.imag()};
    long double best_mag = 1.0L;
    LComplex best_sum = sum;
    for (int s = 0; s < 200; ++s) {
        term *= (la1 + (long double)s) * (la2 + (long double)s)
              / ((long double)(s + 1) * (-lz));
        long double m = std::abs(term);
        if (m >= best_mag) break; // past optimal truncation
        sum += term;
        best_mag = m;
        best_sum = sum;
        if (m <= 1e-17L * std::abs(sum)) break;
    }
    Complex series{(double)best_sum.real(), (double)best_sum.imag()};
    double rel = (double)(best_mag / std::abs(best_sum));
    Complex value = std::exp(-z / 2.0) * principal_pow(z, mu) * series;
    if (rel > 1e-9)
        throw AccuracyError("whittaker_w_asymptotic: |z| too small", value, rel);
    return ensure_finite(value, "whittaker_w");
}

Complex whittaker_w(Complex mu, Complex nu, Complex z, const SeriesPolicy& pol) {
    if (z == Complex(0.0)) throw DomainError("whittaker_w: z = 0");
    if (std::abs(z) >= 24.0) return whittaker_w_asymptotic(mu, nu, z);

    Complex a1 = 0.5 + nu - mu, a2 = 0.5 - nu - mu;
    if (near_nonpos_int(a1)) {
        int n = (int)std::lround(-a1.real());
        return ensure_finite(std::exp(-z / 2.0) * principal_pow(z, nu + 0.5)
                                 * kummer_u_poly(n, 2.0 * nu + 1.0, z),
                             "whittaker_w");
    }
    if (near_nonpos_int(a2)) {
        // U(a,b,z) = z^{1-b} U(a-b+1, 2-b, z) turns this case terminating too.
        int n = (int)std::lround(-a2.real());
        return ensure_finite(std::exp(-z / 2.0) * principal_pow(z, 0.5 - nu)
                                 * kummer_u_poly(n, 1.0 - 2.0 * nu, z),
                             "whittaker_w");
    }

    Complex two_nu = 2.0 * nu;
    if (std::abs(two_nu) < 1e-9) {
        // Logarithmic case: W_{mu,0}(z) = e^{-z/2} sqrt(z) U(1/2-mu, 1, z),
        // U(a,1,z) = -(1/Gamma(a)) sum_k (a)_k z^k/(k!)^2 (ln z + psi(a+k) - 2 psi(k+1)).
        Complex a = 0.5 - mu;
        Complex lz = std::log(z);
        LComplex lterm = 1.0L, lacc = 0.0L;
        LComplex lzl{(long double)z.real(), (long double)z.imag()};
        for (int k = 0;; ++k) {
            Complex c = lz + digamma(a + (double)k) - 2.0 * digamma_int(k + 1);
            lacc += lterm * LComplex{(long double)c.real(), (long double)c.imag()};
            Complex ak = a + (double)k;
            lterm *= LComplex{(long double)ak.real(), (long double)ak.imag()} * lzl
                   / ((long double)(k + 1) * (long double)(k + 1));
            if (std::abs(lterm) * 40.0L < 1e-19L * std::abs(lacc) && k > 4) break;
            if (k > (int)pol.max_terms)
                throw AccuracyError("whittaker_w: log-case series stalled",
                                    Complex((double)lacc.real(), (double)lacc.imag()), 1.0);
        }
        Complex u = -rgamma(a) * Complex((double)lacc.real(), (double)lacc.imag());
        return ensure_finite(std::exp(-z / 2.0) * principal_pow(z, 0.5) * u,
                             "whittaker_w");
    }
    if (std::abs(two_nu.imag()) < 1e-9 && near_int(two_nu.real()))
        throw DomainError("whittaker_w: nonzero integer 2nu (degenerate M-connection)");

    Complex t1 = gamma_fn(-two_nu) * rgamma(a2) * whittaker_m(mu, nu, z, pol);
    Complex t2 = gamma_fn(two_nu) * rgamma(a1) * whittaker_m(mu, -nu, z, pol);
    return ensure_finite(t1 + t2, "whittaker_w");
}

// ---------------------------------------------------------------------------
// Bessel family
// ---------------------------------------------------------------------------

namespace {

Complex bessel_j_series(Complex nu, double x, const SeriesPolicy& pol) {
    Complex t0 = rgamma(nu + 1.0);
    if (t0 == Complex(0.0)) {
        // nu is a negative integer -n: J_{-n} = (-1)^n J_n.
        int n = (int)std::lround(-nu.real());
        Complex v = bessel_j_series(Complex(n, 0.0), x, pol);
        return (n % 2 == 0) ? v : -v;
    }
    LComplex term{(long double)t0.real(), (long double)t0.imag()};
    LComplex lnu{(long double)nu.real(), (long double)nu.imag()};
    LComplex sum = term;
    long double q = -(long double)x * x / 4.0L;
    int small_run = 0;
    for (int k = 0; k < pol.max_terms; ++k) {
        term *= q / ((long double)(k + 1) * (lnu + (long double)(k + 1)));
        sum += term;
        if (std::abs(term) <= (long double)pol.rel_tol * std::abs(sum)) {
            if (++small_run == 3) break;
        } else small_run = 0;
    }
    Complex s{(double)sum.real(), (double)sum.imag()};
    return ensure_finite(principal_pow(Complex(x / 2.0), nu) * s, "bessel_j");
}

Complex bessel_i_series(Complex nu, double x, const SeriesPolicy& pol) {
    Complex t0 = rgamma(nu + 1.0);
    LComplex term{(long double)t0.real(), (long double)t0.imag()};
    LComplex lnu{(long double)nu.real(), (long double)nu.imag()};
    LComplex sum = term;
    long double q = (long double)x * x / 4.0L;
    int small_run = 0;
    for (int k = 0; k < pol.max_terms; ++k) {
        term *= q / ((long double)(k + 1) * (lnu + (long double)(k + 1)));
        sum += term;
        if (std::abs(term) <= (long double)pol.rel_tol * std::abs(sum)) {
            if (++small_run == 3) break;
        } else small_run = 0;
    }
    Complex s{(double)sum.real(), (double)sum.imag()};
    return ensure_finite(principal_pow(Complex(x / 2.0), nu) * s, "bessel_i");
}

// Hankel asymptotic P/Q sums for real order, x > 16: optimal-truncation error
// is ~e^{-2x} < 2e-14 there.
void bessel_pq_asymptotic(double nu, double x, double& P, double& Q) {
    double mu4 = 4.0 * nu * nu;
    long double t = 1.0L;
    long double p = 1.0L, q = 0.0L;
    long double prev = 1e300L;
    for (int k = 1; k < 60; ++k) {
        t *= (mu4 - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0L * x * k);
        if (std::abs(t) >= prev) break;
        prev = std::abs(t);
        int r = k % 4;
        if (r == 0) p += t;
        else if (r == 1) q += t;
        else if (r == 2) p -= t;
        else q -= t;
        if (std::abs(t) < 1e-18L) break;
    }
    P = (double)p;
    Q = (double)q;
}

void bessel_jy_asymptotic(double nu, double x, double& J, double& Y) {
    double P, Q;
    bessel_pq_asymptotic(nu, x, P, Q);
    double omega = x - nu * pi / 2.0 - pi / 4.0;
    double c = std::cos(omega), s = std::sin(omega);
    double f = std::sqrt(2.0 / (pi * x));
    J = f * (P * c - Q * s);
    Y = f * (P * s + Q * c);
}

double bessel_y_int(int n, double x, const SeriesPolicy& pol) {
    bool flip = n < 0 && (n % 2 != 0);
    n = std::abs(n);
    double q = x * x / 4.0;
    double finite = 0.0;
    {
        double fact = 1.0; // (n-k-1)!/k! * q^k accumulated incrementally
        for (int j = 1; j < n; ++j) fact *= j; // (n-1)!
        double term = fact;
        for (int k = 0; k < n; ++k) {
            finite += term;
            if (k + 1 < n) term *= q / ((k + 1.0) * (n - k - 1.0));
        }
    }
    double Jn = bessel_j_series(Complex(n, 0.0), x, pol).real();
    double psi_sum = 0.0;
    {
        long double term = 1.0L;
        for (int j = 1; j <= n; ++j) term /= j; // 1/n!
        long double acc = 0.0L;
        for (int k = 0;; ++k) {
            long double c = digamma_int(k + 1) + digamma_int(n + k + 1);
            acc += c * term;
            long double next = term * (-(long double)q) / ((k + 1.0L) * (n + k + 1.0L));
            if (std::abs(next * 20.0L) < 1e-18L * std::abs(acc) || k > 2000) break;
            term = next;
        }
        psi_sum = (double)acc;
    }
    double xh_n = std::pow(x / 2.0, n);
    double y = -finite / (xh_n * pi) + (2.0 / pi) * std::log(x / 2.0) * Jn
             - xh_n / pi * psi_sum;
    return flip ? -y : y;
}

// K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt by trapezoid on the even
// extension; the integrand is entire and decays doubly exponentially, so the
// rule converges spectrally.
double bessel_k_cosh_integral(double nu, double x) {
    const double h = 0.5 / std::max(4.0, std::sqrt(x) + std::abs(nu));
    double sum = 0.5 * std::exp(-x); // t = 0 node
    for (int k = 1;; ++k) {
        double t = k * h;
        double e = -x * std::cosh(t);
        double c = std::abs(nu) * t; // cosh(nu t) ~ e^{|nu| t}/2 for large t
        if (e + c < -746.0) break;
        double f = std::exp(e) * std::cosh(nu * t);
        sum += f;
        if (k > 2000000) break;
    }
    return sum * h;
}

} // namespace

Complex bessel_j(Complex nu, double x, const SeriesPolicy& pol) {
    if (!(x > 0.0)) throw DomainError("bessel_j: x must be positive");
    if (std::abs(nu.imag()) < 1e-14 && x > 16.0) {
        double J, Y;
        bessel_jy_asymptotic(nu.real(), x, J, Y);
        return {J, 0.0};
    }
    return bessel_j_series(nu, x, pol);
}

Complex bessel_i(Complex nu, double x, const SeriesPolicy& pol) {
    if (!(x > 0.0)) throw DomainError("bessel_i: x must be positive");
    return bessel_i_series(nu, x, pol);
}

double bessel_k(double nu, double x, const SeriesPolicy&) {
    if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");
    return bessel_k_cosh_integral(nu, x);
}

double bessel_y(double nu, double x, const SeriesPolicy& pol) {
    if (!(x > 0.0)) throw DomainError("bessel_y: x must be positive");
    if (x > 16.0) {
        double J, Y;
        bessel_jy_asymptotic(nu, x, J, Y);
        return Y;
    }
    if (near_int(nu, 1e-9)) return bessel_y_int((int)std::lround(nu), x, pol);
    double s = std::sin(pi * nu);
    double jp = bessel_j_series(Complex(nu, 0.0), x, pol).real();
    double jm = bessel_j_series(Complex(-nu, 0.0), x, pol).real();
    return (jp * std::cos(pi * nu) - jm) / s;
}

Complex bessel(BesselKind kind, Complex nu, double x, const SeriesPolicy& pol) {
    switch (kind) {
    case BesselKind::J: return bessel_j(nu, x, pol);
    case BesselKind::Y:
        if (std::abs(nu.imag()) > 1e-14) throw DomainError("bessel Y: real order only");
        return {bessel_y(nu.real(), x, pol), 0.0};
    case BesselKind::K:
        if (std::abs(nu.imag()) > 1e-14) throw DomainError("bessel K: real order only");
        return {bessel_k(nu.real(), x, pol), 0.0};
    case BesselKind::H1: {
        if (std::abs(nu.imag()) > 1e-14) throw DomainError("bessel H1: real order only");
        double J = bessel_j(nu, x, pol).real();
        double Y = bessel_y(nu.real(), x, pol);
        return {J, Y};
    }
    case BesselKind::H2: {
        if (std::abs(nu.imag()) > 1e-14) throw DomainError("bessel H2: real order only");
        double J = bessel_j(nu, x, pol).real();
        double Y = bessel_y(nu.real(), x, pol);
        return {J, -Y};
    }
    }
    throw DomainError("bessel: unknown kind");
}

// ---------------------------------------------------------------------------
// Parabolic cylinder, Ferrers, off-cut Legendre
// ---------------------------------------------------------------------------

Complex parabolic_d(Complex tau, Complex z, const SeriesPolicy& pol) {
    if (z == Complex(0.0)) throw DomainError("parabolic_d: z = 0");
    Complex mu = tau / 2.0 + 0.25;
    Complex pref = principal_pow(2.0, tau / 2.0 + 0.25) * principal_pow(z, -0.5);
    return ensure_finite(pref * whittaker_w(mu, Complex(-0.25, 0.0), z * z / 2.0, pol),
                         "parabolic_d");
}

Complex ferrers_p(Complex mu, Complex nu, double x, const SeriesPolicy& pol) {
    if (!(x > -1.0 && x < 1.0)) throw DomainError("ferrers_p: x outside (-1, 1)");
    Complex rg = rgamma(1.0 - mu);
    if (rg == Complex(0.0))
        throw DomainError("ferrers_p: 1-mu at non-positive integer");
    Complex pref = principal_pow(Complex((1.0 + x) / (1.0 - x)), mu / 2.0);
    return ensure_finite(pref * rg * hyp2f1(-nu, nu + 1.0, 1.0 - mu, (1.0 - x) / 2.0, pol),
                         "ferrers_p");
}

Complex legendre_q_offcut(Complex mu, Complex nu, double z, const SeriesPolicy& pol) {
    if (!(std::abs(z) > 1.0)) throw DomainError("legendre_q_offcut: |z| <= 1");
    Complex num = nu + mu + 1.0;
    if (near_gamma_pole(num)) throw DomainError("legendre_q_offcut: nu+mu+1 at gamma pole");
    Complex pref = std::exp(Complex(0.0, pi) * mu) * std::sqrt(pi)
                 * gamma_fn(num) * rgamma(nu + 1.5)
                 * principal_pow(Complex(z * z - 1.0), mu / 2.0)
                 * principal_pow(2.0, -(nu + 1.0))
                 * principal_pow(Complex(z), -(nu + mu + 1.0));
    Complex f = hyp2f1((nu + mu) / 2.0 + 1.0, (nu + mu + 1.0) / 2.0, nu + 1.5,
                       1.0 / (z * z), pol);
    return ensure_finite(pref * f, "legendre_q_offcut");
}

} // namespace cwl
