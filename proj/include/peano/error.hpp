#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace peano {

/// Failure categories raised by the library. Every thrown peano::Error carries one.
enum class Errc {
    invalid_argument,
    unsupported_dimension,
    depth_overflow,
    invalid_cell,
    negative_parameter,
    target_out_of_range,
    resolution_too_coarse,
    budget_exhausted,
    invalid_alpha,
    truncation_unreliable,
    domain_error,
    constant_polynomial,
    precision_exhausted,
    degenerate_sample_plan,
    overflow,
    index_mismatch,
};

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::unsupported_dimension: return "UnsupportedDimension";
    case Errc::depth_overflow: return "DepthOverflow";
    case Errc::invalid_cell: return "InvalidCell";
    case Errc::negative_parameter: return "NegativeParameter";
    case Errc::target_out_of_range: return "TargetOutOfRange";
    case Errc::resolution_too_coarse: return "ResolutionTooCoarse";
    case Errc::budget_exhausted: return "BudgetExhausted";
    case Errc::invalid_alpha: return "InvalidAlpha";
    case Errc::truncation_unreliable: return "TruncationUnreliable";
    case Errc::domain_error: return "DomainError";
    case Errc::constant_polynomial: return "ConstantPolynomial";
    case Errc::precision_exhausted: return "PrecisionExhausted";
    case Errc::degenerate_sample_plan: return "DegenerateSamplePlan";
    case Errc::overflow: return "Overflow";
    case Errc::index_mismatch: return "IndexMismatch";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, Errc code, const std::string& what) {
    if (!condition) fail(code, what);
}

} // namespace peano
