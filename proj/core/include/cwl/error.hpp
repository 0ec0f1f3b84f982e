#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cwl {

using Complex = std::complex<double>;

// Thrown when arguments land on a pole, a cut, or outside the supported
// parameter range of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when an algorithm cannot reach its accuracy target.  Carries the
// best value produced so far together with an estimate of its error, so a
// caller may still inspect the partial result.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, Complex partial, double err_estimate)
        : std::runtime_error(what), partial_(partial), err_estimate_(err_estimate) {}

    Complex partial() const { return partial_; }
    double err_estimate() const { return err_estimate_; }

private:
    Complex partial_;
    double err_estimate_;
};

} // namespace cwl
