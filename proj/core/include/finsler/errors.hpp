#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finsler {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside the domain of the operation (zero vector,
/// non-finite components, dimension mismatch, inadmissible parameters).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A stated operation precondition does not hold (e.g. base point not on
/// the indicatrix).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The fundamental tensor failed the positive-definiteness gate.
class ConvexityError : public Error {
public:
    ConvexityError(const std::string& what, double min_eigenvalue,
                   std::vector<std::size_t> failing_indices = {})
        : Error(what),
          min_eigenvalue_(min_eigenvalue),
          failing_indices_(std::move(failing_indices)) {}

    double min_eigenvalue() const noexcept { return min_eigenvalue_; }
    const std::vector<std::size_t>& failing_indices() const noexcept {
        return failing_indices_;
    }

private:
    double min_eigenvalue_;
    std::vector<std::size_t> failing_indices_;
};

/// A numerical procedure produced a result that cannot be trusted
/// (optimizer non-convergence, inconsistent derivative refinements).
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what,
                            double best_so_far = std::numeric_limits<double>::quiet_NaN())
        : Error(what), best_so_far_(best_so_far) {}

    double best_so_far() const noexcept { return best_so_far_; }

private:
    double best_so_far_;
};

}  // namespace finsler
