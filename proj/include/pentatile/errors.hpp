#pragma once

#include <stdexcept>
#include <string>

namespace pentatile {

// Requested lattice size exceeds the configured enumeration limit.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// An explicit sum would exceed the configured term cap.
class TermCapError : public std::runtime_error {
public:
    explicit TermCapError(const std::string& what) : std::runtime_error(what) {}
};

// Estimated relative error of a floating computation exceeded the contract bound.
class LossOfSignificanceError : public std::runtime_error {
public:
    LossOfSignificanceError(const std::string& what, double rel_err_bound)
        : std::runtime_error(what), rel_err_bound_(rel_err_bound) {}
    double rel_err_bound() const noexcept { return rel_err_bound_; }

private:
    double rel_err_bound_;
};

// An exact result was requested but the value involves an irrational radical.
class IrrationalPrefactorError : public std::domain_error {
public:
    explicit IrrationalPrefactorError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace pentatile
