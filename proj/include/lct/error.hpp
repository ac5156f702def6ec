#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lct {

/// Every failure the library reports. The CLI maps these onto exit codes.
enum class ErrorCode {
    syntax_error,
    non_polynomial,
    zero_polynomial,
    singular_matrix,
    both_zero,
    not_divisible,
    divisor_zero,
    not_through_origin,
    not_square_free,
    wrong_multiplicity,
    degree_too_small,
    degree_out_of_range,
    target_not_realizable,
    not_in_lambda_set,
    irrational_center,
    resolution_cap,
    incomplete_tree,
    not_singular,
    not_classifiable,
    invalid_argument,
    self_test_failure,
    internal,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Syntax or non-polynomial input; `position` is the 0-based character offset.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& what, std::size_t position)
        : Error(code, what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A blowup center that is not a rational point. Carries the irreducible
/// polynomial (rendered, in the chart coordinate) whose roots are the centers.
class IrrationalCenterError : public Error {
public:
    explicit IrrationalCenterError(const std::string& min_poly)
        : Error(ErrorCode::irrational_center,
                "blowup center is not rational; it is a root of " + min_poly),
          min_poly_(min_poly) {}
    const std::string& minimal_polynomial() const { return min_poly_; }

private:
    std::string min_poly_;
};

}  // namespace lct
