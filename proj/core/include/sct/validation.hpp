#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sct {

/// A named condition failure with enough witness data to reproduce it.
struct Violation {
    std::string condition;       // machine-readable slug, e.g. "inversion"
    std::string detail;          // human-readable description
    std::vector<int> witness;    // indices whose meaning depends on condition
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(Violation v)
        : std::runtime_error(v.condition + ": " + v.detail), violation_(std::move(v)) {}

    const Violation& violation() const { return violation_; }

private:
    Violation violation_;
};

}  // namespace sct
