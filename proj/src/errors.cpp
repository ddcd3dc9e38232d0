#include "wirtlab/errors.hpp"

#include <charconv>
#include <string>

namespace wirtlab {

std::string_view error_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Syntax: return "SyntaxError";
        case ErrorKind::Validation: return "ValidationError";
        case ErrorKind::UnknownCrossing: return "UnknownCrossing";
        case ErrorKind::UnknownStrand: return "UnknownStrand";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::NotInTwistRegion: return "NotInTwistRegion";
        case ErrorKind::NotAKnot: return "NotAKnot";
        case ErrorKind::BadParameter: return "BadParameter";
        case ErrorKind::ResourceLimit: return "ResourceLimit";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::NotAReflection: return "NotAReflection";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::OddPermutation: return "OddPermutation";
        case ErrorKind::NotPCycle: return "NotPCycle";
        case ErrorKind::EulerMismatch: return "EulerMismatch";
        case ErrorKind::HypothesisNotAsserted: return "HypothesisNotAsserted";
        case ErrorKind::OutOfInterval: return "OutOfInterval";
        case ErrorKind::Io: return "IOError";
    }
    return "Error";
}

Limits& limits() {
    static Limits instance;
    return instance;
}

void apply_limits_spec(std::string_view spec) {
    Limits& lim = limits();
    while (!spec.empty()) {
        auto comma = spec.find(',');
        std::string_view item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::BadParameter, "limit entry without '=': " + std::string(item));
        std::string_view key = item.substr(0, eq);
        std::string_view val = item.substr(eq + 1);
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), n);
        if (ec != std::errc{} || ptr != val.data() + val.size())
            throw Error(ErrorKind::BadParameter, "bad limit value: " + std::string(item));
        if (key == "omega_strands") lim.omega_strands = n;
        else if (key == "welded_codes") lim.welded_codes = n;
        else if (key == "coxeter_word") lim.coxeter_word = n;
        else if (key == "braid_class") lim.braid_class = n;
        else if (key == "closure_degree") lim.closure_degree = n;
        else if (key == "closure_elements") lim.closure_elements = n;
        else throw Error(ErrorKind::BadParameter, "unknown limit: " + std::string(key));
    }
}

}  // namespace wirtlab
