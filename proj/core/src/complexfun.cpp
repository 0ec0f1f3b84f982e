#include "cwl/complexfun.hpp"

#include <cmath>

namespace cwl {

Complex ensure_finite(Complex v, const char* where) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw AccuracyError(std::string(where) + ": non-finite result", v, INFINITY);
    return v;
}

Complex principal_pow(Complex base, Complex expo) {
    if (base == Complex(0.0)) {
        if (expo.imag() == 0.0 && expo.real() > 0.0) return {0.0, 0.0};
        throw DomainError("principal_pow: 0^e with Re e <= 0 or complex e");
    }
    // std::log(complex) uses atan2 and so already lands in (-pi, pi].
    return ensure_finite(std::exp(expo * std::log(base)), "principal_pow");
}

bool near_gamma_pole(Complex z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

namespace {

// Lanczos, g = 607/128, 15 terms (Godfrey's coefficients); ~15 correct
// digits for Re z >= 1/2.
constexpr double lanczos_g = 607.0 / 128.0;
constexpr double lanczos_c[15] = {
    0.99999999999999709182,
    57.156235665862923517,    -59.597960355475491248,
    14.136097974741747174,    -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};
const double half_log_two_pi = 0.5 * std::log(2.0 * pi);

// Valid for Re z >= 1/2.
Complex ln_gamma_lanczos(Complex z) {
    Complex s = lanczos_c[0];
    for (int k = 1; k < 15; ++k) s += lanczos_c[k] / (z + Complex(k - 1.0));
    Complex t = z + (lanczos_g - 0.5);
    return (z - 0.5) * std::log(t) - t + half_log_two_pi + std::log(s);
}

// log sin(pi z) for Im z >= 0, branch chosen so the reflection formula below
// stays continuous within the upper half-plane.
Complex log_sin_pi_upper(Complex z) {
    const Complex i(0.0, 1.0);
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2 i); |e^{2 i pi z}| <= 1 here.
    return -i * pi * z + std::log(std::exp(2.0 * i * pi * z) - 1.0)
           - std::log(2.0) - i * pi / 2.0;
}

Complex ln_gamma_upper(Complex z) {
    if (z.real() >= 0.5) return ln_gamma_lanczos(z);
    // Reflection: ln Gamma(z) = ln pi - log sin(pi z) - ln Gamma(1 - z).
    // 1 - z has Re >= 1/2, so the Lanczos form applies directly.
    return std::log(pi) - log_sin_pi_upper(z) - ln_gamma_lanczos(1.0 - z);
}

} // namespace

Complex ln_gamma(Complex z) {
    if (near_gamma_pole(z)) throw DomainError("ln_gamma: pole at non-positive integer");
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw DomainError("ln_gamma: argument on the negative-real cut");
    Complex r = z.imag() >= 0.0 ? ln_gamma_upper(z) : std::conj(ln_gamma_upper(std::conj(z)));
    return ensure_finite(r, "ln_gamma");
}

Complex gamma_fn(Complex z) {
    if (near_gamma_pole(z)) throw DomainError("gamma_fn: pole at non-positive integer");
    if (z.imag() == 0.0 && z.real() < 0.0) {
        // Negative real non-integer: go through reflection in value space,
        // since ln_gamma keeps off the cut.
        return ensure_finite(pi / (std::sin(pi * z.real()) * gamma_fn(1.0 - z)),
                             "gamma_fn");
    }
    return ensure_finite(std::exp(ln_gamma(z)), "gamma_fn");
}

Complex rgamma(Complex z) {
    if (near_gamma_pole(z)) return {0.0, 0.0};
    return 1.0 / gamma_fn(z);
}

Complex beta_fn(Complex z, Complex w) {
    if (near_gamma_pole(z) || near_gamma_pole(w))
        throw DomainError("beta_fn: gamma pole in numerator");
    if (near_gamma_pole(z + w)) return {0.0, 0.0};
    return ensure_finite(gamma_fn(z) * gamma_fn(w) / gamma_fn(z + w), "beta_fn");
}

double digamma_int(int n) {
    static const double euler_gamma = 0.57721566490153286061;
    double s = -euler_gamma;
    for (int j = 1; j < n; ++j) s += 1.0 / j;
    return s;
}

Complex digamma(Complex z) {
    if (near_gamma_pole(z)) throw DomainError("digamma: pole at non-positive integer");
    if (z.imag() == 0.0 && z.real() < 0.5) {
        // Real reflection: psi(z) = psi(1-z) - pi cot(pi z).
        double x = z.real();
        return digamma(Complex(1.0 - x, 0.0)) - pi / std::tan(pi * x);
    }
    if (z.imag() < 0.0) return std::conj(digamma(std::conj(z)));
    Complex shift{0.0, 0.0};
    while (z.real() < 12.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // Asymptotic: ln z - 1/(2z) - sum B_{2n}/(2n z^{2n}).
    static const double b[] = {1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
                               1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0};
    Complex w = 1.0 / (z * z), p = w;
    Complex s = std::log(z) - 0.5 / z;
    for (double bk : b) {
        s -= bk * p;
        p *= w;
    }
    return ensure_finite(s + shift, "digamma");
}

} // namespace cwl
