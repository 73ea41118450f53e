#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hconv {

using Complex = std::complex<double>;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Cohn's reduction step needs |a0| < |an| strictly; carries both moduli.
class ReductionNotApplicable : public Error {
public:
    ReductionNotApplicable(double constant_modulus, double leading_modulus);

    double constant_modulus() const noexcept { return constant_modulus_; }
    double leading_modulus() const noexcept { return leading_modulus_; }

private:
    double constant_modulus_;
    double leading_modulus_;
};

/// An iterative method did not converge; the last iterate is kept for diagnosis.
class NumericFailure : public Error {
public:
    NumericFailure(const std::string& what, std::vector<Complex> best_iterate);

    const std::vector<Complex>& best_iterate() const noexcept { return best_iterate_; }

private:
    std::vector<Complex> best_iterate_;
};

} // namespace hconv
