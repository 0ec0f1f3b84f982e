#include "doctest.h"

#include "cwl/hyp.hpp"

#include <cmath>

using cwl::Complex;

TEST_CASE("hyp1f1: oracle at large imaginary argument") {
    // mpmath: hyp1f1(0.5 - 1i, 1, 4i) -- the cancellation-heavy regime the
    // long-double inner sum exists for.
    Complex oracle{-2.7978787674034125437, 6.1134766393494598441};
    Complex v = cwl::hyp1f1({0.5, -1.0}, {1.0, 0.0}, {0.0, 4.0});
    CHECK(std::abs(v - oracle) / std::abs(oracle) < 1e-13);
}

TEST_CASE("hyp1f1: Kummer transformation consistency, Re z < 0") {
    Complex a{0.3, 0.4}, b{1.5, 0.0}, z{-3.0, 2.0};
    Complex lhs = cwl::hyp1f1(a, b, z);
    Complex rhs = std::exp(z) * cwl::hyp1f1(b - a, b, -z);
    CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-12);
}

TEST_CASE("hyp1f1: domain errors") {
    CHECK_THROWS_AS((void)cwl::hyp1f1({1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}),
                    cwl::DomainError);
    CHECK_THROWS_AS((void)cwl::hyp1f1({1.0, 0.0}, {-2.0, 0.0}, {1.0, 0.0}),
                    cwl::DomainError);
}

TEST_CASE("hyp2f1: conical oracle") {
    // mpmath: hyp2f1(0.25+0.5i, 0.25-0.5i, 1, 0.6) (1-x connection route)
    Complex v = cwl::hyp2f1({0.25, 0.5}, {0.25, -0.5}, {1.0, 0.0}, 0.6);
    CHECK(std::abs(v.real() - 1.2700094006593835244) < 1e-13);
    CHECK(std::abs(v.imag()) < 1e-13);
}

TEST_CASE("hyp2f1: degenerate connection falls back to the direct series") {
    // c - a - b = 0: the 1-x connection is refused, direct series still works.
    // mpmath: hyp2f1(0.25, 0.75, 1, 0.6)
    Complex v = cwl::hyp2f1({0.25, 0.0}, {0.75, 0.0}, {1.0, 0.0}, 0.6);
    CHECK(std::abs(v.real() - 1.178550802124159000838) < 1e-12);
    // ... but not arbitrarily close to 1.
    CHECK_THROWS_AS((void)cwl::hyp2f1({0.25, 0.0}, {0.75, 0.0}, {1.0, 0.0}, 0.99),
                    cwl::DomainError);
}

TEST_CASE("hyp2f1: Pfaff map region and symmetry in a, b") {
    Complex a{0.3, 0.2}, b{-0.4, 0.7}, c{1.25, 0.0};
    Complex v1 = cwl::hyp2f1(a, b, c, -0.8); // Pfaff route
    Complex v2 = cwl::hyp2f1(b, a, c, -0.8);
    CHECK(std::abs(v1 - v2) / std::abs(v1) < 1e-13);
    // 2F1(a, b; c; 0) = 1 regardless of route.
    CHECK(std::abs(cwl::hyp2f1(a, b, c, 0.0) - 1.0) < 1e-15);
}

TEST_CASE("SeriesPolicy validation") {
    cwl::SeriesPolicy bad1; bad1.max_terms = 2;
    CHECK_THROWS_AS(bad1.validate(), cwl::DomainError);
    cwl::SeriesPolicy bad2; bad2.rel_tol = 1e-16;
    CHECK_THROWS_AS(bad2.validate(), cwl::DomainError);
}
