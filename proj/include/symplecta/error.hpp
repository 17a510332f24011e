#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace symplecta {

enum class ErrorKind {
    InvalidArgument,
    NonFinite,
    Asymmetric,
    NonOrthogonal,
    NoConvergence,
    Overflow,
    UnstableMode,
    IndefiniteSection,
    SampleBudget,
    StepBudget,
    DimensionTooLarge,
    ComplexLeakage,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised when a normal-mode frequency would be zero or imaginary.
// Mode indices are 0-based positions in the descending eigenvalue order.
class UnstableModeError : public Error {
public:
    UnstableModeError(std::vector<std::size_t> modes, const std::string& what)
        : Error(ErrorKind::UnstableMode, what), modes_(std::move(modes)) {}

    const std::vector<std::size_t>& modes() const noexcept { return modes_; }

private:
    std::vector<std::size_t> modes_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace symplecta
