// Error codes and the exception type used across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace gabidulin {

enum class errc {
    not_prime,
    not_irreducible,
    degree_mismatch,
    division_by_zero,
    wrong_length,
    digit_out_of_range,
    length_mismatch,
    singular,
    divisor_zero,
    dependent_basis,
    dependent_evaluation_points,
    zero_polynomial,
    dependent_g,
    bad_params,
    degree_too_high,
    rank_out_of_range,
    radius_exhausted,
    candidate_budget_exceeded,
    ambiguous,
    too_large,
    field_mismatch,
    parse_error,
    internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

}  // namespace gabidulin
