#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "monocat/error.hpp"

namespace monocat {

// Coefficients of both supported fields live in one representation: an exact
// rational for k = Q, and an integer in [0, p) (with denominator 1) for k = F_p.
using Coeff = mpq_class;

enum class FieldKind { rationals, prime_field };

struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    uint32_t p = 0;

    static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }
    static FieldSpec prime(uint32_t p); // validates 2 <= p < 2^31 and primality

    bool operator==(const FieldSpec&) const = default;

    Coeff normalize(const Coeff& a) const;
    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff div(const Coeff& a, const Coeff& b) const; // b != 0
    Coeff neg(const Coeff& a) const;
    Coeff inv(const Coeff& a) const;
    Coeff from_long(long v) const;
    Coeff from_string(const std::string& s) const; // "a" or "a/b" (Q only)

    std::string to_string(const Coeff& a) const;
    std::string describe() const; // "rational" or "fp:<p>"
};

FieldSpec parse_field_spec(const std::string& text); // "rational" | "fp:<p>"

inline bool coeff_is_zero(const Coeff& a) { return sgn(a) == 0; }

} // namespace monocat
