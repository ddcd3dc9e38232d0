#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wirtlab {

enum class ErrorKind {
    Syntax,
    Validation,
    UnknownCrossing,
    UnknownStrand,
    UnknownGenerator,
    UnknownVertex,
    NotInTwistRegion,
    NotAKnot,
    BadParameter,
    ResourceLimit,
    NotCoprime,
    NotAReflection,
    OutOfRange,
    OddPermutation,
    NotPCycle,
    EulerMismatch,
    HypothesisNotAsserted,
    OutOfInterval,
    Io,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Resource caps shared by the search engines. Overridable at runtime
// (the CLI reads WIRTLAB_LIMITS, e.g. "omega_strands=40,welded_codes=5000").
struct Limits {
    std::size_t omega_strands = 64;
    std::size_t welded_codes = 1'000'000;
    std::size_t coxeter_word = 64;
    std::size_t braid_class = 200'000;
    std::size_t closure_degree = 10;
    std::size_t closure_elements = 2'000'000;
};

Limits& limits();

// Parses "key=value,key=value" into limits(); unknown keys are rejected.
void apply_limits_spec(std::string_view spec);

}  // namespace wirtlab
