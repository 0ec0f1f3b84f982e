#pragma once

// Cone/hyperboloid geometry, the parabolic and hyperbolic bases and their
// pairings, the transition coefficients between them, and the Poisson
// transform closed forms.  Conventions:
//  * the cone contours are gamma_1 (parabola, x1+x2 = 1) and
//    gamma_2,+- (hyperbolas, x2 = +-1), parameterized as in the source
//    derivation: gamma_1(a) = ((1+a^2)/2, (1-a^2)/2, a),
//    gamma_2,+-(a) = (cosh a, +-1, sinh a);
//  * f_lambda = (x1+x2)^d exp(i lambda x3/(x1+x2)) (the i in the exponent is
//    deliberate: every pairing integral below requires it);
//  * f_{rho,+-} = (x2)_{+-}^{d - i rho} (x1+x3)^{i rho}, zero on the
//    opposite-sign half of the cone;
//  * d = sigma or -sigma-1 according to Degree.dual;
//  * the kernel F_xi(x) = (xi . x)^sigma always carries degree sigma.

#include <utility>

#include "cwl/coulomb.hpp"
#include "cwl/quad.hpp"

namespace cwl {

struct ConePoint {
    double x1, x2, x3;

    double residual() const { return x1 * x1 - x2 * x2 - x3 * x3; }
    void validate() const {
        double scale = x1 * x1 + x2 * x2 + x3 * x3;
        if (std::abs(residual()) > 1e-9 * std::max(1.0, scale))
            throw DomainError("ConePoint: off the cone");
    }
};

struct HyperboloidPoint {
    double y1, y2, y3;

    void validate() const {
        if (std::abs(y1 * y1 - y2 * y2 - y3 * y3 - 1.0) > 1e-12 *
            std::max(1.0, y1 * y1))
            throw DomainError("HyperboloidPoint: off the hyperboloid");
        if (!(y1 > 0.0)) throw DomainError("HyperboloidPoint: upper sheet required");
    }
};

enum class Branch { Plus, Minus };
enum class XiRegime { T3, T4 };

struct XiVector {
    double xi1, xi2, xi3;

    // T3: |xi2| < sqrt(xi1^2 - xi3^2); T4: |xi2| > sqrt(xi1^2 - xi3^2) > 0.
    // Both demand xi1 > xi3 and xi1 + xi2 != 0.
    XiRegime classify() const {
        if (!(xi1 > xi3)) throw DomainError("XiVector: xi1 > xi3 violated");
        if (xi1 + xi2 == 0.0) throw DomainError("XiVector: xi1 + xi2 = 0");
        double d = xi1 * xi1 - xi3 * xi3;
        if (d > 0.0 && xi2 * xi2 < d) return XiRegime::T3;
        if (d > 0.0 && xi2 * xi2 > d) return XiRegime::T4;
        throw DomainError("XiVector: neither regime predicate holds");
    }
};

struct Degree {
    double sigma;
    bool dual = false;

    double exponent() const { return dual ? -sigma - 1.0 : sigma; }
};

ConePoint gamma1_point(double alpha1);
ConePoint gamma2_point(double alpha2, Branch branch);

// Subgroup actions fixing gamma_1 / gamma_2 (shift matrices).
ConePoint h1_apply(double theta, const ConePoint& x);
ConePoint h2_apply(double theta, const ConePoint& x);

Complex basis_parabolic(double lambda, Degree deg, const ConePoint& x);
Complex basis_hyperbolic(double rho, Branch branch, Degree deg, const ConePoint& x);
Complex kernel_F_xi(const XiVector& xi, Degree deg, const ConePoint& x);

using ConeFunction = std::function<Complex(const ConePoint&)>;

// Optional analytic knowledge about the pullback of f*g onto the contour
// parameter: a compact support interval (endpoint-singular integrand
// allowed) and/or the dominant oscillation period.
struct PullbackInfo {
    std::optional<std::pair<double, double>> support;
    std::optional<double> period_hint;
};

QuadResult functional_F1(const ConeFunction& f, const ConeFunction& g,
                         const QuadConfig& cfg = {}, const PullbackInfo& info = {});
QuadResult functional_F2(const ConeFunction& f, const ConeFunction& g,
                         const QuadConfig& cfg = {}, const PullbackInfo& info = {});

// Transition coefficient c*_{lambda,rho,+} of the parabolic -> hyperbolic
// expansion: |Gamma(sigma+1+i rho)| e^{pi rho/2} F_sigma(rho,lambda)
// / (pi lambda^{sigma+1}).  lambda may be negative (principal-branch
// continuation through coulomb_f_signed).
Complex coeff_plus(double lambda, double rho, double sigma);

// c*_{lambda,rho,-} at sigma = -1/4 (the only closed form available):
// 2 (A G_{-3/4}(rho,lambda) - B F_{-3/4}(rho,lambda))
// / (lambda^{1/2} sqrt(cosh 2 pi rho)), A + iB = i^{1/4} e^{i c_{-1/4}(rho)}.
Complex coeff_minus_quarter(double lambda, double rho);

// Right-hand side of the coefficient symmetry c*_{rho,+-,lambda}(sigma) =
// c_{-lambda,-rho,+-}(-sigma-1), evaluated through the closed forms.  Only
// branch + has a closed form for generic sigma.
Complex coeff_symmetry(double rho, Branch branch, double lambda, double sigma);

// Closed form of F1(f*_lambda, F_xi) in the T3 regime (K-Bessel form).
Complex f1_fxi_closed(double sigma, double lambda, const XiVector& xi);

// Closed form of F2(f*_{rho,+-}, F_xi) in the T3 regime (Ferrers-P form);
// even in xi2, so both branches coincide.
Complex f2_fxi_closed_t3(double sigma, double rho, const XiVector& xi);

// Closed form of F2(f*_{rho,+-}, F_xi) in the T4 regime (off-cut Legendre-Q
// form).  `branch` selects the sign of the Q argument.
Complex f2_fxi_closed_t4(double sigma, double rho, const XiVector& xi, Branch branch);

// Poisson transform of f*_lambda at y = (cosh a3, sinh a3 cos b3,
// sinh a3 sin b3): identical to f1_fxi_closed at xi = y.
Complex poisson_parabolic(double lambda, double sigma, double alpha3, double beta3);

// Finite-difference residual of the (1,2)-Laplace operator applied to the
// sigma-homogeneous extension of the Poisson image off the hyperboloid.
// Returns (residual, scale) for relative comparison.
std::pair<double, double> box_laplacian_residual(double lambda, double sigma,
                                                 const HyperboloidPoint& y, double h);

} // namespace cwl
