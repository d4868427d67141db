#pragma once

#include <stdexcept>
#include <string>

namespace monocat {

enum class errc {
    zero_denominator,
    denominator_not_unit,
    not_divisible,
    degree_overflow,
    omega_is_zero,
    omega_is_unit,
    field_mismatch,
    dimension_mismatch,
    not_invertible_over_s,
    not_injective,
    not_square,
    coker_not_annihilated,
    square_not_commuting,
    omega_mismatch,
    not_inflation,
    not_deflation,
    product_not_omega,
    rank_mismatch,
    parse_error,
    unknown_command,
    bad_input,
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

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

} // namespace monocat
