#include "cwl/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "cwl/lorentz.hpp"
#include "json.hpp"

namespace cwl::checks {

namespace {

using Params = std::map<std::string, double>;

double pget(const Params& m, const char* key) {
    auto it = m.find(key);
    if (it == m.end())
        throw DomainError(std::string("check parameter missing: ") + key);
    return it->second;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double rel_of(Complex lhs, Complex rhs) {
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    double abs_err = std::abs(lhs - rhs);
    return scale > 0.0 ? abs_err / scale : abs_err;
}

// What a check evaluator hands back; run_check wraps it into a CheckResult.
struct Eval {
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    const char* lhs_source = "quadrature-oracle";
    const char* rhs_source = "closed-form";
    std::string note;
    bool quad_ok = true;          // all quadratures reported convergence
    std::optional<bool> passed_override; // arbitration checks decide themselves
};

XiVector xi_of(const Params& p) {
    return XiVector{pget(p, "xi1"), pget(p, "xi2"), pget(p, "xi3")};
}

double mod_gamma(Complex z) { return std::exp(ln_gamma(z).real()); }

// ---------------------------------------------------------------------------
// THM1: c*_{lambda,rho,+} = (1/2pi) F1(f*_lambda, f_{-rho,+}).

Eval eval_thm1(const Params& p, const QuadConfig& cfg) {
    double sg = pget(p, "sigma"), rho = pget(p, "rho"), lam = pget(p, "lambda");
    auto f = [=](const ConePoint& x) { return basis_parabolic(lam, {sg, true}, x); };
    auto g = [=](const ConePoint& x) {
        return basis_hyperbolic(-rho, Branch::Plus, {sg, false}, x);
    };
    PullbackInfo info;
    info.support = std::make_pair(-1.0, 1.0);
    QuadResult q = functional_F1(f, g, cfg, info);
    Eval e;
    e.lhs = q.value / (2.0 * pi);
    e.rhs = coeff_plus(lam, rho, sg);
    e.quad_ok = q.converged;
    return e;
}

// ---------------------------------------------------------------------------
// THM2: c*_{lambda,rho,-} at sigma = -1/4 against the rotated-contour
// integral pieces A and B (the contour rotations t -> +-i s keep every
// principal power off its cut when the factors are kept separated).

Eval eval_thm2(const Params& p, const QuadConfig& cfg) {
    double lam = pget(p, "lambda"), rho = pget(p, "rho");
    const double sg = -0.25;
    auto ia = [=](double s) -> Complex {
        Complex is(0.0, s);
        return std::exp(-lam * s) * principal_pow(is, Complex(sg, rho))
             * principal_pow(is + 2.0, Complex(sg, -rho));
    };
    auto ib = [=](double s) -> Complex {
        Complex mis(0.0, -s);
        return std::exp(-lam * s) * principal_pow(mis, Complex(sg, -rho))
             * principal_pow(mis + 2.0, Complex(sg, rho));
    };
    QuadResult qa = integrate_semi_infinite(ia, 0.0, cfg);
    QuadResult qb = integrate_semi_infinite(ib, 0.0, cfg);
    double s14 = std::pow(2.0, 0.25);
    Complex A = s14 * std::exp(Complex(0.0, lam)) * Complex(0.0, 1.0) * qa.value;
    Complex B = s14 * std::exp(Complex(0.0, -lam)) * Complex(0.0, -1.0) * qb.value;
    Eval e;
    e.lhs = (A + B) / (2.0 * pi);
    e.rhs = coeff_minus_quarter(lam, rho);
    e.quad_ok = qa.converged && qb.converged;
    e.note = "conjugate-piece residual " + fmt3(std::abs(B - std::conj(A)));
    return e;
}

// ---------------------------------------------------------------------------
// Shared Theorem 3/4 machinery.  Both theorems reduce to
//   F2(f*_{rho,+}, F_xi) = P0 * int_0^inf lambda^{-1/2} w(lambda)
//     [ e^{s i pi sigma} e^{i b' lambda} F_{-sigma-1}(-rho, -lambda)
//       + e^{-i b' lambda} F_{-sigma-1}(-rho, lambda) ] dlambda,
// with w the K- (T3) or J-bracket (T4) weight.  The (-1)^sigma branch s is
// arbitrated numerically and pinned; the alternate reading (phase on the
// +lambda term) is reported alongside.

struct PairIntegrals {
    Complex Im{0.0, 0.0}; // e^{+i b' lambda} F(-lambda) term
    Complex Ip{0.0, 0.0}; // e^{-i b' lambda} F(+lambda) term
    bool conv = true;
};

PairIntegrals bracket_pair(double sigma, double rho, double bprime,
                           const std::function<double(double)>& weight,
                           const QuadConfig& cfg) {
    double sp = -sigma - 1.0;
    auto make = [&](int sgn) {
        return [=](double lam) -> Complex {
            Complex F = coulomb_f_signed(sp, -rho, sgn > 0 ? lam : -lam);
            Complex osc = std::exp(Complex(0.0, (sgn > 0 ? -1.0 : 1.0) * bprime * lam));
            return weight(lam) / std::sqrt(lam) * osc * F;
        };
    };
    QuadResult qm = integrate_semi_infinite(make(-1), 0.0, cfg);
    QuadResult qp = integrate_semi_infinite(make(+1), 0.0, cfg);
    return {qm.value, qp.value, qm.converged && qp.converged};
}

double prefactor_p03(double sigma, double rho, const XiVector& xi) {
    double a = std::sqrt(xi.xi1 * xi.xi1 - xi.xi2 * xi.xi2 - xi.xi3 * xi.xi3)
             / (xi.xi1 + xi.xi2);
    return mod_gamma(Complex(-sigma, rho)) * std::exp(-pi * rho / 2.0) / pi
         * std::pow((xi.xi1 + xi.xi2) / 2.0, sigma)
         * (2.0 * std::sqrt(pi) / gamma_fn(Complex(-sigma, 0.0)).real())
         * std::pow(2.0 * a, sigma + 0.5);
}

double prefactor_p04(double sigma, double rho, const XiVector& xi, double k) {
    return mod_gamma(Complex(-sigma, rho)) * std::exp(-pi * rho / 2.0) / pi
         * std::pow((xi.xi1 + xi.xi2) / 2.0, sigma)
         * std::sqrt(pi) * gamma_fn(Complex(sigma + 1.0, 0.0)).real()
         * std::pow(2.0, sigma + 0.5) * std::pow(k, sigma + 0.5);
}

// Candidate assembly: reading A keeps the branch phase on the -lambda term,
// reading B on the +lambda term.
Complex bracket_candidate(const PairIntegrals& pr, double sigma, int s, bool reading_a) {
    Complex ph = std::exp(Complex(0.0, s * pi * sigma));
    return reading_a ? ph * pr.Im + pr.Ip : pr.Im + ph * pr.Ip;
}

struct BranchPick {
    Complex lhs;
    std::string note;
    bool matched_pinned = false;
    bool exactly_one = false;
};

// Pinned branch for Theorems 3/4 and the Legendre representation:
// (-1)^sigma = e^{-i pi sigma} on the -lambda term (reading A).  Together
// with the e^{+i pi sigma} continuation phase inside coulomb_f_signed this
// leaves the -lambda term with no net phase.
constexpr int kPinnedS = -1;
constexpr bool kPinnedReadingA = true;

BranchPick pick_branch(const PairIntegrals& pr, double sigma, Complex scaled_rhs,
                       double pref, double tol) {
    struct Cand { int s; bool ra; const char* label; };
    static const Cand cands[] = {
        {+1, true, "s=+1/A"}, {-1, true, "s=-1/A"},
        {+1, false, "s=+1/B"}, {-1, false, "s=-1/B"},
    };
    BranchPick out;
    int nmatch = 0;
    std::string errs;
    for (const Cand& c : cands) {
        Complex lhs = pref * bracket_candidate(pr, sigma, c.s, c.ra);
        double r = rel_of(lhs, scaled_rhs);
        if (r <= tol) ++nmatch;
        if (c.s == kPinnedS && c.ra == kPinnedReadingA) {
            out.lhs = lhs;
            out.matched_pinned = r <= tol;
        }
        if (!errs.empty()) errs += ", ";
        errs += std::string(c.label) + ":" + fmt3(r);
    }
    out.exactly_one = nmatch == 1;
    out.note = "branch pinned e^{-i pi sigma} on the -lambda term; rel errs " + errs;
    return out;
}

Eval eval_thm3(const Params& p, const QuadConfig& cfg, double tol) {
    double sg = pget(p, "sigma"), rho = pget(p, "rho");
    XiVector xi = xi_of(p);
    if (xi.classify() != XiRegime::T3) throw DomainError("THM3: xi not in T3 regime");
    double a = std::sqrt(xi.xi1 * xi.xi1 - xi.xi2 * xi.xi2 - xi.xi3 * xi.xi3)
             / (xi.xi1 + xi.xi2);
    double bprime = xi.xi3 / (xi.xi1 + xi.xi2);
    auto weight = [=](double lam) { return bessel_k(sg + 0.5, a * lam); };
    PairIntegrals pr = bracket_pair(sg, rho, bprime, weight, cfg);
    Eval e;
    e.rhs = f2_fxi_closed_t3(sg, rho, xi);
    BranchPick bp = pick_branch(pr, sg, e.rhs, prefactor_p03(sg, rho, xi), tol);
    e.lhs = bp.lhs;
    e.note = bp.note;
    e.quad_ok = pr.conv;
    e.passed_override = bp.matched_pinned && pr.conv;
    return e;
}

Eval eval_thm4(const Params& p, const QuadConfig& cfg_in, double tol) {
    double sg = pget(p, "sigma"), rho = pget(p, "rho");
    XiVector xi = xi_of(p);
    if (xi.classify() != XiRegime::T4) throw DomainError("THM4: xi not in T4 regime");
    double w2 = xi.xi2 * xi.xi2 + xi.xi3 * xi.xi3 - xi.xi1 * xi.xi1;
    double k = std::sqrt(w2) / (xi.xi1 + xi.xi2);
    double bprime = xi.xi3 / (xi.xi1 + xi.xi2);
    QuadConfig cfg = cfg_in;
    cfg.oscillation_period_hint = 2.0 * pi / (1.0 + k + std::abs(bprime));

    double o1 = sg + 0.5, o2 = -sg - 0.5;
    auto wj = [&](double order) {
        return std::function<double(double)>(
            [=](double lam) { return bessel_j(Complex(order, 0.0), lam * k).real(); });
    };
    PairIntegrals pr1 = bracket_pair(sg, rho, bprime, wj(o1), cfg);
    PairIntegrals pr2 = bracket_pair(sg, rho, bprime, wj(o2), cfg);

    Complex c1 = std::exp(Complex(0.0, pi * sg)) - 1.0 / std::cos(pi * sg);
    double v_tan = -std::tan(pi * sg);
    double v_tanh = -std::tanh(pi * sg);
    double pref = prefactor_p04(sg, rho, xi, k);

    Eval e;
    e.rhs = f2_fxi_closed_t4(sg, rho, xi, Branch::Plus);
    auto cand = [&](double v) {
        return pref * (c1 * bracket_candidate(pr1, sg, kPinnedS, kPinnedReadingA)
                       + v * bracket_candidate(pr2, sg, kPinnedS, kPinnedReadingA));
    };
    Complex lhs_tan = cand(v_tan), lhs_tanh = cand(v_tanh);
    double r_tan = rel_of(lhs_tan, e.rhs), r_tanh = rel_of(lhs_tanh, e.rhs);
    bool m_tan = r_tan <= tol, m_tanh = r_tanh <= tol;
    e.lhs = m_tanh && !m_tan ? lhs_tanh : lhs_tan;
    e.quad_ok = pr1.conv && pr2.conv;
    e.passed_override = (m_tan != m_tanh) && e.quad_ok;
    e.note = std::string("variant matched: ")
           + (m_tan != m_tanh ? (m_tan ? "tan(pi sigma)" : "tanh(pi sigma)")
                              : (m_tan ? "both" : "neither"))
           + "; rel errs tan:" + fmt3(r_tan) + ", tanh:" + fmt3(r_tanh)
           + "; outer integral read over (0,inf)";
    return e;
}

// ---------------------------------------------------------------------------
// THM5 at sigma = -1/4: recomposed form (coefficients straight from
// Theorems 1-2) is authoritative; the printed bracket is reported alongside.

Eval eval_thm5(const Params& p, const QuadConfig& cfg) {
    double lam = pget(p, "lambda");
    XiVector xi = xi_of(p);
    if (xi.classify() != XiRegime::T3) throw DomainError("THM5: xi not in T3 regime");
    const double sg = -0.25;
    // The minus-branch coefficient pairs with the gamma_2,- pullback, which
    // sees xi with the sign of xi2 flipped.
    XiVector xim{xi.xi1, -xi.xi2, xi.xi3};
    auto integrand = [&](double rho) -> Complex {
        return coeff_plus(lam, rho, sg) * f2_fxi_closed_t3(sg, rho, xi)
             + coeff_minus_quarter(lam, rho) * f2_fxi_closed_t3(sg, rho, xim);
    };
    // The integrand decays like e^{-r |rho|}, r = pi - theta with theta the
    // Ferrers angle.  Past |rho| ~ 18.4/r the conical-function series noise
    // (growing like e^{+r |rho|} * 1e-16) overtakes the true ~1e-8 tail, so
    // truncate there; the discarded tail is ~e^{-18.4} ~ 1e-8.
    double d2v = xi.xi1 * xi.xi1 - xi.xi3 * xi.xi3;
    double theta = std::acos(-xi.xi2 / std::sqrt(d2v));
    double rr = 18.4 / std::max(pi - theta, 0.3);
    double rp = rr, rm = -rr;
    QuadResult q = integrate_adaptive(integrand, rm, rp, cfg);
    Eval e;
    e.lhs = q.value;
    e.rhs = f1_fxi_closed(sg, lam, xi);
    e.quad_ok = q.converged;

    // Printed form, assembled exactly as displayed (exponents -1/8 -+ i rho,
    // no Gamma(3/4) or ((d^2-xi2^2)/d^2)^{1/8} factors).
    double d2 = xi.xi1 * xi.xi1 - xi.xi3 * xi.xi3;
    double arg = std::abs(xi.xi2) / std::sqrt(d2);
    auto printed_weight = [&](double rho) -> Complex {
        return principal_pow(xi.xi1 - xi.xi3, Complex(-0.125, -rho))
             * principal_pow(xi.xi1 + xi.xi3, Complex(-0.125, rho))
             * beta_fn(Complex(0.25, rho), Complex(0.25, -rho))
             * ferrers_p(0.25, Complex(-0.5, rho), arg);
    };
    auto printed_integrand = [&](double rho) -> Complex {
        Complex term1 = mod_gamma(Complex(0.75, rho)) / pi * std::exp(pi * rho / 2.0)
                      * coulomb_f({sg, rho, lam});
        Complex term2 = std::pow(lam, 0.25) * std::sqrt(lam)
                      * coeff_minus_quarter(lam, rho);
        return (term1 + term2) * printed_weight(rho);
    };
    QuadResult qp = integrate_adaptive(printed_integrand, rm, rp, cfg);
    double aa = std::sqrt(xi.xi1 * xi.xi1 - xi.xi2 * xi.xi2 - xi.xi3 * xi.xi3)
              / std::abs(xi.xi1 + xi.xi2);
    Complex rhs_printed = std::pow(2.0, 0.75) * std::sqrt(lam / pi)
                        * std::pow(d2, 0.125) * bessel_k(0.25, lam * aa);
    e.note = "recomposed form; printed-form rel err "
           + fmt3(rel_of(qp.value, rhs_printed));
    return e;
}

// ---------------------------------------------------------------------------

Eval eval_refl(const Params& p) {
    double sg = pget(p, "sigma"), rho = pget(p, "rho"), lam = pget(p, "lambda");
    Eval e;
    e.lhs = coulomb_f({-sg - 1.0, rho, lam});
    e.rhs = coulomb_f_reflect(sg, rho, lam);
    e.lhs_source = "closed-form";
    return e;
}

Eval eval_eq3(const Params& p) {
    double sg = pget(p, "sigma"), rho = pget(p, "rho"), lam = pget(p, "lambda");
    CoulombParams cp{sg, rho, lam};
    Eval e;
    e.lhs = coulomb_f_via(cp, SignChoice::Upper);
    e.rhs = coulomb_h(cp, SignChoice::Upper).imag();
    e.lhs_source = "closed-form";
    return e;
}

Eval eval_poisson(const Params& p, const QuadConfig& cfg) {
    double lam = pget(p, "lambda"), sg = pget(p, "sigma");
    double a3 = pget(p, "alpha3"), b3 = pget(p, "beta3");
    XiVector xi{std::cosh(a3), std::sinh(a3) * std::cos(b3), std::sinh(a3) * std::sin(b3)};
    auto f = [=](const ConePoint& x) { return basis_parabolic(lam, {sg, true}, x); };
    auto g = [=](const ConePoint& x) { return kernel_F_xi(xi, {sg, false}, x); };
    PullbackInfo info;
    info.period_hint = 2.0 * pi / std::abs(lam);
    QuadResult q = functional_F1(f, g, cfg, info);
    Eval e;
    e.lhs = q.value;
    e.rhs = poisson_parabolic(lam, sg, a3, b3);
    e.quad_ok = q.converged;
    // The printed section-6 display is short by 2^{sigma+1}.
    e.note = "printed closed form rel err "
           + fmt3(rel_of(q.value, e.rhs / std::pow(2.0, sg + 1.0)));
    return e;
}

Eval eval_legrep(const Params& p, const QuadConfig& cfg, double tol) {
    double sg = pget(p, "sigma"), rho = pget(p, "rho"), a3 = pget(p, "alpha3");
    XiVector xi{std::cosh(a3), std::sinh(a3), 0.0};
    double a = std::exp(-a3);
    auto weight = [=](double lam) { return bessel_k(sg + 0.5, a * lam); };
    PairIntegrals pr = bracket_pair(sg, rho, 0.0, weight, cfg);
    Complex phi = std::pow(2.0, -2.0 * sg - 0.5) / std::sqrt(std::cosh(a3))
                * beta_fn(Complex(-sg, rho), Complex(-sg, -rho))
                * gamma_fn(Complex(0.5 - sg, 0.0));
    Eval e;
    e.rhs = ferrers_p(sg + 0.5, Complex(-0.5, rho), -std::tanh(a3));
    double pref = prefactor_p03(sg, rho, xi);
    BranchPick bp = pick_branch(pr, sg, e.rhs * phi, pref, tol);
    e.lhs = bp.lhs / phi;
    e.quad_ok = pr.conv;
    e.passed_override = bp.matched_pinned && pr.conv;

    // Printed display (K order sigma+1, Gamma(-2sigma) prefactor,
    // exp(-alpha3/2) in place of cosh^{-1/2}).
    auto wp = [=](double lam) { return bessel_k(sg + 1.0, a * lam); };
    PairIntegrals pp = bracket_pair(sg, rho, 0.0, wp, cfg);
    Complex printed = 2.0 * std::exp(-(a3 + pi * rho) / 2.0)
                    / (pi * gamma_fn(Complex(-2.0 * sg, 0.0))
                       * beta_fn(Complex(-sg, -rho), Complex(-sg, rho))
                       * mod_gamma(Complex(-sg, rho)))
                    * bracket_candidate(pp, sg, kPinnedS, kPinnedReadingA);
    e.note = bp.note + "; printed-form rel err " + fmt3(rel_of(printed, e.rhs));
    return e;
}

Eval eval_symm(const Params& p, const QuadConfig& cfg) {
    double sg = pget(p, "sigma"), rho = pget(p, "rho"), lam = pget(p, "lambda");
    auto f = [=](const ConePoint& x) {
        return basis_hyperbolic(rho, Branch::Plus, {sg, true}, x);
    };
    auto g = [=](const ConePoint& x) { return basis_parabolic(-lam, {sg, false}, x); };
    PullbackInfo info;
    info.support = std::make_pair(-1.0, 1.0);
    QuadResult q = functional_F1(f, g, cfg, info);
    Eval e;
    e.lhs = q.value / (2.0 * pi);
    e.rhs = coeff_symmetry(rho, Branch::Plus, lam, sg);
    e.quad_ok = q.converged;
    return e;
}

Eval eval_contour(const Params& p, const QuadConfig& cfg) {
    double sg = pget(p, "sigma"), rho = pget(p, "rho"), lam = pget(p, "lambda");
    auto f = [=](const ConePoint& x) { return basis_parabolic(lam, {sg, true}, x); };
    auto g = [=](const ConePoint& x) {
        return basis_hyperbolic(-rho, Branch::Plus, {sg, false}, x);
    };
    PullbackInfo i1;
    i1.support = std::make_pair(-1.0, 1.0);
    QuadResult q1 = functional_F1(f, g, cfg, i1);
    QuadResult q2 = functional_F2(f, g, cfg, {});
    Eval e;
    e.lhs = q1.value;
    e.rhs = q2.value;
    e.rhs_source = "quadrature-oracle";
    e.quad_ok = q1.converged && q2.converged;
    return e;
}

// ---------------------------------------------------------------------------
// Auxiliary entry checks.

Eval eval_aux_236(const Params& p, const QuadConfig& cfg) {
    double sg = pget(p, "sigma"), rho = pget(p, "rho"), lam = pget(p, "lambda");
    Complex al(sg + 1.0, -rho), be(sg + 1.0, rho);
    auto f = [=](double t) -> Complex {
        return principal_pow(t, al - 1.0) * principal_pow(2.0 - t, be - 1.0)
             * std::exp(Complex(0.0, lam * t));
    };
    QuadResult q = integrate_finite(f, 0.0, 2.0, cfg);
    Eval e;
    e.lhs = q.value;
    e.rhs = beta_fn(al, be) * std::pow(2.0, 2.0 * sg + 1.0)
          * hyp1f1(al, al + be, Complex(0.0, 2.0 * lam));
    e.quad_ok = q.converged;
    return e;
}

Eval eval_aux_229(const Params& p, const QuadConfig& cfg) {
    double sg = pget(p, "sigma"), rho = pget(p, "rho");
    double a = pget(p, "a"), b = pget(p, "b"), c = pget(p, "c");
    Complex mu(-sg, rho);
    Complex nu(-sg, 0.0);
    // x = e^s turns the power endpoints into two-sided exponential decay with
    // pure frequency rho, which the real-line integrator handles directly.
    auto f = [=](double s) -> Complex {
        double x = std::exp(s);
        double poly = a * x * x + 2.0 * b * x + c;
        return principal_pow(x, mu) * principal_pow(poly, -nu);
    };
    QuadConfig rcfg = cfg;
    if (rho > 0.0) rcfg.oscillation_period_hint = 2.0 * M_PI / rho;
    QuadResult q = integrate_real_line(f, rcfg);
    Eval e;
    e.lhs = q.value;
    e.rhs = principal_pow(a, -mu / 2.0) * principal_pow(c, mu / 2.0 - nu)
          * beta_fn(mu, 2.0 * nu - mu)
          * hyp2f1(mu / 2.0, nu - mu / 2.0, nu + 0.5, 1.0 - b * b / (a * c));
    e.quad_ok = q.converged;
    return e;
}

Eval eval_aux_3383(const Params& p, const QuadConfig& cfg_in) {
    Complex nu(pget(p, "nu_re"), pget(p, "nu_im"));
    double beta = pget(p, "beta"), m = pget(p, "mu_im");
    Complex mu(0.0, m);
    QuadConfig cfg = cfg_in;
    cfg.oscillation_period_hint = 2.0 * pi / std::abs(m);
    auto f = [=](double x) -> Complex {
        return principal_pow(x, nu - 1.0) * principal_pow(x + beta, 0.5 - nu)
             * std::exp(-mu * x);
    };
    QuadResult q = integrate_semi_infinite(f, 0.0, cfg);
    Eval e;
    e.lhs = q.value;
    e.rhs = principal_pow(2.0, nu - 0.5) * principal_pow(mu, -0.5) * gamma_fn(nu)
          * std::exp(beta * mu / 2.0)
          * parabolic_d(1.0 - 2.0 * nu, principal_pow(2.0 * beta * mu, 0.5));
    e.quad_ok = q.converged;
    return e;
}

Eval eval_aux_2548(const Params& p, const QuadConfig& cfg) {
    double nu = -pget(p, "sigma"), b = pget(p, "rho"), a = pget(p, "a");
    auto f = [=](double x) -> Complex {
        return std::cos(b * x) * std::pow(a + std::cosh(x), -nu);
    };
    QuadResult q = integrate_semi_infinite(f, 0.0, cfg);
    Eval e;
    e.lhs = q.value;
    e.rhs = std::exp(b * pi) * gamma_fn(Complex(nu, -b))
          / (std::pow(a * a - 1.0, nu / 2.0) * gamma_fn(Complex(nu, 0.0)))
          * legendre_q_offcut(Complex(0.0, b), Complex(nu - 1.0, 0.0),
                              a / std::sqrt(a * a - 1.0));
    e.quad_ok = q.converged;
    return e;
}

Eval eval_aux_2353(const Params& p, const QuadConfig& cfg) {
    double sg = pget(p, "sigma"), lam = pget(p, "lambda"), k = pget(p, "k");
    auto f = [=](double t) -> Complex {
        return std::exp(Complex(0.0, lam * t)) * std::pow(4.0 * k * k - t * t, sg);
    };
    QuadResult q = integrate_finite(f, -2.0 * k, 2.0 * k, cfg);
    Eval e;
    e.lhs = q.value;
    e.rhs = std::pow(4.0 * k / lam, sg + 0.5) * std::sqrt(pi)
          * gamma_fn(Complex(sg + 1.0, 0.0))
          * bessel_j(Complex(sg + 0.5, 0.0), 2.0 * lam * k);
    e.quad_ok = q.converged;
    return e;
}

Eval eval_aux_2355(const Params& p, const QuadConfig& cfg_in) {
    double sg = pget(p, "sigma"), lam = pget(p, "lambda"), k = pget(p, "k");
    QuadConfig cfg = cfg_in;
    cfg.oscillation_period_hint = 2.0 * pi / lam;
    auto f = [=](double t) -> Complex {
        return 2.0 * std::cos(lam * t) * std::pow(t * t - 4.0 * k * k, sg);
    };
    QuadResult q = integrate_semi_infinite(f, 2.0 * k, cfg);
    Eval e;
    e.lhs = q.value;
    // H1 - H2 = 2i Y collapses the printed Hankel difference.
    e.rhs = -2.0 * std::pow(4.0, sg) * std::sqrt(pi) * std::pow(lam / k, -sg - 0.5)
          * gamma_fn(Complex(sg + 1.0, 0.0)).real()
          * bessel_y(-sg - 0.5, 2.0 * lam * k);
    e.quad_ok = q.converged;
    return e;
}

Eval eval_aux_london(const Params& p, const QuadConfig& cfg_in) {
    double a = pget(p, "a"), b = pget(p, "b"), nu = pget(p, "nu_re"), y = pget(p, "y");
    QuadConfig cfg = cfg_in;
    cfg.oscillation_period_hint = 2.0 * pi / std::abs(y);
    auto f = [=](double x) -> Complex {
        double q = a * a + (x + b) * (x + b);
        return std::pow(q, -nu) * std::exp(Complex(0.0, x * y));
    };
    QuadResult q = integrate_real_line(f, cfg);
    Eval e;
    e.lhs = q.value;
    e.rhs = 2.0 * std::sqrt(pi) * std::exp(Complex(0.0, -b * y))
          / gamma_fn(Complex(nu, 0.0))
          * std::pow(std::abs(y) / (2.0 * a), nu - 0.5)
          * bessel_k(nu - 0.5, a * std::abs(y));
    e.quad_ok = q.converged;
    return e;
}

// ---------------------------------------------------------------------------
// Registry table: grids, tolerances, regime predicates, evaluators.

Params mk(std::initializer_list<std::pair<const char*, double>> kv) {
    Params p;
    for (auto& [k, v] : kv) p[k] = v;
    return p;
}

struct RegistryEntry {
    const char* id;
    double tol;
    std::vector<Params> grid;
    std::function<bool(const Params&)> regime;
    std::function<Eval(const Params&, const QuadConfig&, double tol)> eval;
};

bool xi_regime_is(const Params& p, XiRegime want) {
    try {
        return xi_of(p).classify() == want && pget(p, "xi1") + pget(p, "xi2") > 0.0;
    } catch (const DomainError&) {
        return false;
    }
}

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> table = [] {
        std::vector<RegistryEntry> t;
        auto sigma_open = [](const Params& p) {
            double s = pget(p, "sigma");
            return s > -1.0 && s < 0.0;
        };

        t.push_back({"THM1", 1e-6,
            {mk({{"sigma", -0.5}, {"rho", 1.0}, {"lambda", 2.0}}),
             mk({{"sigma", -0.75}, {"rho", 0.5}, {"lambda", 1.0}}),
             mk({{"sigma", -0.75}, {"rho", 1.0}, {"lambda", 2.0}}),
             mk({{"sigma", 0.25}, {"rho", 0.5}, {"lambda", 1.0}}),
             mk({{"sigma", 0.25}, {"rho", 1.0}, {"lambda", 2.0}}),
             mk({{"sigma", -0.5}, {"rho", 0.5}, {"lambda", 1.0}})},
            [](const Params& p) {
                double s = pget(p, "sigma");
                return s > -1.0 && s < 0.75 && pget(p, "lambda") > 0.0;
            },
            [](const Params& p, const QuadConfig& c, double) { return eval_thm1(p, c); }});

        t.push_back({"THM2", 1e-6,
            {mk({{"lambda", 1.0}, {"rho", 0.5}}),
             mk({{"lambda", 2.0}, {"rho", 0.5}}),
             mk({{"lambda", 1.0}, {"rho", 1.0}})},
            [](const Params& p) { return pget(p, "lambda") > 0.0; },
            [](const Params& p, const QuadConfig& c, double) { return eval_thm2(p, c); }});

        t.push_back({"THM3", 1e-5,
            {mk({{"sigma", -0.5}, {"rho", 0.5}, {"xi1", 2.0}, {"xi2", 0.3}, {"xi3", 0.5}}),
             mk({{"sigma", -0.25}, {"rho", 0.5}, {"xi1", 2.0}, {"xi2", 0.6}, {"xi3", 0.8}}),
             mk({{"sigma", -0.75}, {"rho", 1.0}, {"xi1", 1.5}, {"xi2", 0.2}, {"xi3", 0.3}})},
            [sigma_open](const Params& p) {
                return sigma_open(p) && xi_regime_is(p, XiRegime::T3);
            },
            [](const Params& p, const QuadConfig& c, double tol) { return eval_thm3(p, c, tol); }});

        t.push_back({"THM4", 1e-5,
            {mk({{"sigma", -0.35}, {"rho", 0.5}, {"xi1", 1.2}, {"xi2", -1.0}, {"xi3", 0.8}}),
             mk({{"sigma", -0.25}, {"rho", 0.5}, {"xi1", 1.3}, {"xi2", -1.1}, {"xi3", 0.9}}),
             mk({{"sigma", -0.75}, {"rho", 1.0}, {"xi1", 1.4}, {"xi2", -1.2}, {"xi3", 1.0}}),
             mk({{"sigma", -0.6}, {"rho", 0.7}, {"xi1", 1.2}, {"xi2", -1.0}, {"xi3", 0.9}}),
             mk({{"sigma", -0.4}, {"rho", 0.6}, {"xi1", 1.5}, {"xi2", -1.3}, {"xi3", 1.1}}),
             mk({{"sigma", -0.65}, {"rho", 1.0}, {"xi1", 1.3}, {"xi2", -1.0}, {"xi3", 0.95}})},
            [sigma_open](const Params& p) {
                // sigma = -1/2 is excluded: tan(pi sigma) and sec(pi sigma)
                // in the J-bracket have poles there.
                return sigma_open(p) && std::abs(2.0 * pget(p, "sigma") + 1.0) > 0.05
                    && xi_regime_is(p, XiRegime::T4)
                    && pget(p, "xi2") < 0.0
                    && pget(p, "xi1") > std::abs(pget(p, "xi3"));
            },
            [](const Params& p, const QuadConfig& c, double tol) { return eval_thm4(p, c, tol); }});

        t.push_back({"THM5", 1e-5,
            {mk({{"lambda", 1.0}, {"xi1", 2.0}, {"xi2", 0.3}, {"xi3", 0.5}}),
             mk({{"lambda", 2.0}, {"xi1", 2.0}, {"xi2", 0.3}, {"xi3", 0.5}}),
             mk({{"lambda", 1.0}, {"xi1", 1.5}, {"xi2", 0.2}, {"xi3", 0.3}})},
            [](const Params& p) {
                return pget(p, "lambda") > 0.0 && xi_regime_is(p, XiRegime::T3);
            },
            [](const Params& p, const QuadConfig& c, double) { return eval_thm5(p, c); }});

        t.push_back({"REFL", 1e-8,
            {mk({{"sigma", -0.25}, {"rho", 0.5}, {"lambda", 1.5}}),
             mk({{"sigma", -0.25}, {"rho", 1.0}, {"lambda", 2.0}}),
             mk({{"sigma", -0.3}, {"rho", 0.5}, {"lambda", 2.0}}),
             mk({{"sigma", -0.3}, {"rho", 1.0}, {"lambda", 1.5}}),
             mk({{"sigma", -0.5}, {"rho", 0.5}, {"lambda", 1.5}}),
             mk({{"sigma", -0.5}, {"rho", 1.0}, {"lambda", 2.0}})},
            [sigma_open](const Params& p) {
                return sigma_open(p) && pget(p, "lambda") > 0.0;
            },
            [](const Params& p, const QuadConfig&, double) { return eval_refl(p); }});

        t.push_back({"EQ3", 1e-9,
            {mk({{"sigma", 0.25}, {"rho", 0.5}, {"lambda", 2.0}}),
             mk({{"sigma", -0.25}, {"rho", 1.0}, {"lambda", 2.0}}),
             mk({{"sigma", -0.75}, {"rho", 0.5}, {"lambda", 1.5}})},
            [](const Params& p) {
                double s = pget(p, "sigma");
                return s > -1.0 && pget(p, "lambda") > 0.0;
            },
            [](const Params& p, const QuadConfig&, double) { return eval_eq3(p); }});

        t.push_back({"POISSON", 1e-6,
            {mk({{"sigma", -0.5}, {"lambda", 2.0}, {"alpha3", 0.3}, {"beta3", 0.2}}),
             mk({{"sigma", -0.75}, {"lambda", 1.0}, {"alpha3", 0.5}, {"beta3", 0.0}}),
             mk({{"sigma", -0.25}, {"lambda", 1.5}, {"alpha3", 0.4}, {"beta3", -0.3}})},
            [sigma_open](const Params& p) {
                return sigma_open(p) && pget(p, "lambda") != 0.0
                    && std::abs(pget(p, "beta3")) < pi;
            },
            [](const Params& p, const QuadConfig& c, double) { return eval_poisson(p, c); }});

        t.push_back({"LEGREP", 1e-6,
            {mk({{"sigma", -0.5}, {"rho", 0.5}, {"alpha3", 0.6}}),
             mk({{"sigma", -0.25}, {"rho", 0.5}, {"alpha3", 0.8}}),
             mk({{"sigma", -0.75}, {"rho", 1.0}, {"alpha3", 0.5}})},
            sigma_open,
            [](const Params& p, const QuadConfig& c, double tol) { return eval_legrep(p, c, tol); }});

        t.push_back({"SYMM", 1e-6,
            {mk({{"sigma", -0.5}, {"rho", 1.0}, {"lambda", 2.0}}),
             mk({{"sigma", -0.25}, {"rho", 0.5}, {"lambda", 1.5}}),
             mk({{"sigma", -0.75}, {"rho", 0.5}, {"lambda", 1.0}})},
            [sigma_open](const Params& p) {
                return sigma_open(p) && pget(p, "lambda") > 0.0;
            },
            [](const Params& p, const QuadConfig& c, double) { return eval_symm(p, c); }});

        t.push_back({"CONTOUR", 1e-6,
            {mk({{"sigma", -0.5}, {"rho", 1.0}, {"lambda", 2.0}}),
             mk({{"sigma", -0.25}, {"rho", 0.5}, {"lambda", 1.0}}),
             mk({{"sigma", -0.75}, {"rho", 1.0}, {"lambda", 1.5}})},
            [sigma_open](const Params& p) {
                return sigma_open(p) && pget(p, "lambda") > 0.0;
            },
            [](const Params& p, const QuadConfig& c, double) { return eval_contour(p, c); }});

        t.push_back({"AUX-2.3.6", 1e-7,
            {mk({{"sigma", -0.5}, {"rho", 1.0}, {"lambda", 2.0}}),
             mk({{"sigma", -0.25}, {"rho", 0.5}, {"lambda", 1.0}}),
             mk({{"sigma", 0.25}, {"rho", 0.7}, {"lambda", 1.5}})},
            [](const Params& p) { return pget(p, "sigma") > -1.0; },
            [](const Params& p, const QuadConfig& c, double) { return eval_aux_236(p, c); }});

        t.push_back({"AUX-2.2.9", 1e-7,
            {mk({{"sigma", -0.5}, {"rho", 0.7}, {"a", 1.7}, {"b", 0.3}, {"c", 1.9}}),
             mk({{"sigma", -0.25}, {"rho", 0.5}, {"a", 2.0}, {"b", 0.4}, {"c", 1.5}}),
             mk({{"sigma", -0.75}, {"rho", 1.0}, {"a", 1.5}, {"b", 0.2}, {"c", 2.0}})},
            [sigma_open](const Params& p) {
                return sigma_open(p) && pget(p, "a") > 0.0 && pget(p, "b") > 0.0
                    && pget(p, "b") * pget(p, "b") < pget(p, "a") * pget(p, "c");
            },
            [](const Params& p, const QuadConfig& c, double) { return eval_aux_229(p, c); }});

        t.push_back({"AUX-3.383", 1e-7,
            {mk({{"nu_re", 0.75}, {"nu_im", 0.5}, {"beta", 2.0}, {"mu_im", -1.5}}),
             mk({{"nu_re", 0.6}, {"nu_im", 0.3}, {"beta", 1.5}, {"mu_im", -2.0}}),
             mk({{"nu_re", 0.8}, {"nu_im", -0.2}, {"beta", 1.0}, {"mu_im", -1.0}})},
            [](const Params& p) {
                double nr = pget(p, "nu_re");
                return nr > 0.0 && nr < 1.0 && pget(p, "beta") > 0.0
                    && pget(p, "mu_im") < 0.0;
            },
            [](const Params& p, const QuadConfig& c, double) { return eval_aux_3383(p, c); }});

        t.push_back({"AUX-2.5.48", 1e-7,
            {mk({{"sigma", -0.5}, {"rho", 0.7}, {"a", 1.5}}),
             mk({{"sigma", -0.75}, {"rho", 0.5}, {"a", 2.0}}),
             mk({{"sigma", -0.6}, {"rho", 1.0}, {"a", 1.8}})},
            [](const Params& p) {
                return pget(p, "sigma") < 0.0 && pget(p, "rho") > 0.0
                    && pget(p, "a") > 1.0;
            },
            [](const Params& p, const QuadConfig& c, double) { return eval_aux_2548(p, c); }});

        t.push_back({"AUX-2.3.5.3", 1e-7,
            {mk({{"sigma", -0.5}, {"lambda", 2.0}, {"k", 1.0}}),
             mk({{"sigma", -0.25}, {"lambda", 1.5}, {"k", 0.8}}),
             mk({{"sigma", -0.75}, {"lambda", 1.0}, {"k", 1.2}})},
            [](const Params& p) {
                return pget(p, "sigma") > -1.0 && pget(p, "lambda") > 0.0
                    && pget(p, "k") > 0.0;
            },
            [](const Params& p, const QuadConfig& c, double) { return eval_aux_2353(p, c); }});

        t.push_back({"AUX-2.3.5.5", 1e-7,
            {mk({{"sigma", -0.6}, {"lambda", 2.0}, {"k", 1.0}}),
             mk({{"sigma", -0.5}, {"lambda", 1.5}, {"k", 0.7}}),
             mk({{"sigma", -0.25}, {"lambda", 1.0}, {"k", 1.2}})},
            [sigma_open](const Params& p) {
                return sigma_open(p) && pget(p, "lambda") > 0.0 && pget(p, "k") > 0.0;
            },
            [](const Params& p, const QuadConfig& c, double) { return eval_aux_2355(p, c); }});

        t.push_back({"AUX-LONDON", 1e-7,
            {mk({{"a", 1.0}, {"b", 0.5}, {"nu_re", 0.75}, {"y", 2.0}}),
             mk({{"a", 1.5}, {"b", -0.4}, {"nu_re", 0.9}, {"y", 1.0}}),
             mk({{"a", 0.8}, {"b", 0.0}, {"nu_re", 1.2}, {"y", 1.5}})},
            [](const Params& p) {
                return pget(p, "a") > 0.0 && pget(p, "nu_re") > 0.5
                    && pget(p, "y") != 0.0;
            },
            [](const Params& p, const QuadConfig& c, double) { return eval_aux_london(p, c); }});

        return t;
    }();
    return table;
}

const RegistryEntry& entry_of(const std::string& id) {
    for (const auto& e : registry())
        if (id == e.id) return e;
    throw DomainError("unknown check id: " + id);
}

} // namespace

const std::vector<std::string>& registry_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& e : registry()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

bool registry_has(const std::string& id) {
    for (const auto& e : registry())
        if (id == e.id) return true;
    return false;
}

double default_tolerance(const std::string& id) { return entry_of(id).tol; }

bool params_in_regime(const std::string& id, const Params& params) {
    try {
        return entry_of(id).regime(params);
    } catch (const DomainError&) {
        return false;
    }
}

std::vector<CheckSpec> default_grid(const std::string& id, int grid_scale) {
    if (grid_scale < 1) throw DomainError("grid_scale must be >= 1");
    const RegistryEntry& e = entry_of(id);
    std::vector<Params> pts;
    for (std::size_t i = 0; i < e.grid.size(); ++i) {
        pts.push_back(e.grid[i]);
        if (i + 1 == e.grid.size()) break;
        for (int j = 1; j < grid_scale; ++j) {
            double t = (double)j / grid_scale;
            Params q;
            for (const auto& [k, a] : e.grid[i])
                q[k] = (1.0 - t) * a + t * e.grid[i + 1].at(k);
            if (e.regime(q)) pts.push_back(std::move(q));
        }
    }
    std::vector<CheckSpec> specs;
    for (auto& p : pts) specs.push_back({id, std::move(p), e.tol, QuadConfig{}});
    return specs;
}

CheckResult run_check(const CheckSpec& spec) {
    const RegistryEntry& ent = entry_of(spec.check_id);
    if (!ent.regime(spec.params))
        throw DomainError(spec.check_id + ": params outside the check regime");
    CheckResult r;
    r.check_id = spec.check_id;
    r.params = spec.params;
    r.tolerance = spec.tolerance;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Eval e = ent.eval(spec.params, spec.quad_cfg, spec.tolerance);
        r.lhs = e.lhs;
        r.rhs = e.rhs;
        r.abs_err = std::abs(e.lhs - e.rhs);
        r.rel_err = rel_of(e.lhs, e.rhs);
        r.lhs_source = e.lhs_source;
        r.rhs_source = e.rhs_source;
        r.note = e.note;
        bool within = r.abs_err <= spec.tolerance || r.rel_err <= spec.tolerance;
        r.passed = e.passed_override ? (*e.passed_override && within) : within;
        if (!e.quad_ok) {
            r.passed = false;
            r.note += (r.note.empty() ? "" : "; ");
            r.note += "quadrature did not converge";
        }
    } catch (const AccuracyError& err) {
        r.passed = false;
        r.lhs_source = "quadrature-oracle";
        r.rhs_source = "closed-form";
        r.note = std::string("accuracy failure: ") + err.what();
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// ---------------------------------------------------------------------------
// Config parsing.

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_num(const std::string& s, const std::string& what) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || !std::isfinite(v))
        throw ConfigError("config: bad number for " + what + ": '" + s + "'");
    return v;
}

} // namespace

SuiteConfig parse_config(std::istream& in) {
    SuiteConfig cfg;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::string where = "line " + std::to_string(lineno);
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("config: unterminated section at " + where);
            section = trim(line.substr(1, line.size() - 2));
            if (!registry_has(section))
                throw ConfigError("config: unknown check section '" + section + "' at " + where);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key = value at " + where);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("config: empty key or value at " + where);
        if (section.empty()) {
            if (key == "format") {
                if (val != "json" && val != "csv" && val != "both")
                    throw ConfigError("config: format must be json|csv|both at " + where);
                cfg.format = val;
            } else if (key == "out") {
                cfg.out_dir = val;
            } else if (key == "grid_scale") {
                double g = parse_num(val, key);
                if (g < 1.0 || g != std::floor(g))
                    throw ConfigError("config: grid_scale must be a positive integer at " + where);
                cfg.grid_scale = (int)g;
            } else if (key == "checks") {
                std::stringstream ss(val);
                std::string id;
                while (std::getline(ss, id, ',')) {
                    id = trim(id);
                    if (!registry_has(id))
                        throw ConfigError("config: unknown check '" + id + "' at " + where);
                    cfg.enabled.push_back(id);
                }
            } else {
                throw ConfigError("config: unknown key '" + key + "' at " + where);
            }
        } else if (key == "tolerance") {
            double tol = parse_num(val, key);
            if (!(tol > 0.0))
                throw ConfigError("config: tolerance must be positive at " + where);
            cfg.tolerance_override[section] = tol;
        } else if (key == "point") {
            Params pt;
            std::stringstream ss(val);
            std::string tok;
            while (ss >> tok) {
                auto peq = tok.find('=');
                if (peq == std::string::npos || peq == 0)
                    throw ConfigError("config: point expects name=value tokens at " + where);
                pt[tok.substr(0, peq)] = parse_num(tok.substr(peq + 1), "point value");
            }
            if (pt.empty()) throw ConfigError("config: empty point at " + where);
            if (!params_in_regime(section, pt))
                throw ConfigError("config: point outside regime of " + section + " at " + where);
            cfg.points_override[section].push_back(std::move(pt));
        } else {
            throw ConfigError("config: unknown key '" + key + "' in section at " + where);
        }
    }
    return cfg;
}

SuiteConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    return parse_config(in);
}

// ---------------------------------------------------------------------------
// Reports.

std::string to_json(const std::vector<CheckResult>& results) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        arr.push_back({{"check_id", r.check_id},
                       {"params", params},
                       {"lhs", {{"re", r.lhs.real()}, {"im", r.lhs.imag()}}},
                       {"rhs", {{"re", r.rhs.real()}, {"im", r.rhs.imag()}}},
                       {"abs_err", r.abs_err},
                       {"rel_err", r.rel_err},
                       {"passed", r.passed},
                       {"lhs_source", r.lhs_source},
                       {"rhs_source", r.rhs_source},
                       {"wall_time", r.wall_time},
                       {"tolerance", r.tolerance},
                       {"note", r.note}});
    }
    return arr.dump(2);
}

std::string to_csv(const std::vector<CheckResult>& results) {
    std::string out = "check_id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,"
                      "tolerance,passed,lhs_source,rhs_source,wall_time,note\n";
    for (const auto& r : results) {
        std::string ps;
        for (const auto& [k, v] : r.params) {
            if (!ps.empty()) ps += ';';
            ps += k + "=" + fmt17(v);
        }
        std::string note = r.note;
        std::replace(note.begin(), note.end(), ',', ';');
        out += r.check_id + "," + ps + "," + fmt17(r.lhs.real()) + "," + fmt17(r.lhs.imag())
             + "," + fmt17(r.rhs.real()) + "," + fmt17(r.rhs.imag()) + "," + fmt17(r.abs_err)
             + "," + fmt17(r.rel_err) + "," + fmt17(r.tolerance) + ","
             + (r.passed ? "true" : "false") + "," + r.lhs_source + "," + r.rhs_source + ","
             + fmt17(r.wall_time) + "," + note + "\n";
    }
    return out;
}

int run_suite(const SuiteConfig& cfg, std::ostream& log) {
    std::vector<std::string> ids = cfg.enabled.empty() ? registry_ids() : cfg.enabled;
    std::vector<CheckResult> results;
    bool all_passed = true;
    for (const std::string& id : ids) {
        std::vector<CheckSpec> specs;
        auto ptit = cfg.points_override.find(id);
        if (ptit != cfg.points_override.end()) {
            for (const auto& pt : ptit->second)
                specs.push_back({id, pt, default_tolerance(id), QuadConfig{}});
        } else {
            specs = default_grid(id, cfg.grid_scale);
        }
        auto tolit = cfg.tolerance_override.find(id);
        for (auto& s : specs) {
            if (tolit != cfg.tolerance_override.end()) s.tolerance = tolit->second;
            CheckResult r = run_check(s);
            all_passed = all_passed && r.passed;
            log << (r.passed ? "PASS " : "FAIL ") << r.check_id << " rel_err="
                << fmt3(r.rel_err) << " abs_err=" << fmt3(r.abs_err) << " ("
                << fmt3(r.wall_time) << "s)" << (r.note.empty() ? "" : " -- " + r.note)
                << "\n";
            results.push_back(std::move(r));
        }
    }
    std::filesystem::create_directories(cfg.out_dir);
    if (cfg.format == "json" || cfg.format == "both") {
        std::ofstream f(std::filesystem::path(cfg.out_dir) / "verify_report.json");
        f << to_json(results) << "\n";
    }
    if (cfg.format == "csv" || cfg.format == "both") {
        std::ofstream f(std::filesystem::path(cfg.out_dir) / "verify_report.csv");
        f << to_csv(results);
    }
    log << (all_passed ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << " ("
        << results.size() << " grid points)\n";
    return all_passed ? 0 : 1;
}

} // namespace cwl::checks
