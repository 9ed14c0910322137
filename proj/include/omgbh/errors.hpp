// errors.hpp — exception types shared across the library

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace omgbh {

// Violation of the Gaussian channel complete-positivity conditions
// (y >= |tau-1|, N >= 0) or of the isometry constraint s >= r.
class CpViolationError : public std::domain_error {
public:
    explicit CpViolationError(const std::string& what)
        : std::domain_error(what) {}
    CpViolationError(const std::string& what, double tau, double y)
        : std::domain_error(what), tau_(tau), y_(y) {}

    std::optional<double> tau() const { return tau_; }
    std::optional<double> y() const { return y_; }

private:
    std::optional<double> tau_;
    std::optional<double> y_;
};

// Point (tau, y) outside the semi-infinite strip reachable by the isometry.
class NotInBlackHoleRegionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Operation asked for a channel class it does not support (e.g. tau <= 0
// in the coherent-information formulas).
class UnsupportedClassError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A quantity that is nonnegative for every valid input came out negative
// beyond floating-point slack.
class InternalInconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace omgbh
