#pragma once

#include <optional>
#include <vector>

#include "monocat/field.hpp"

namespace monocat {

// Dense univariate polynomial over k, no trailing zero coefficients.
// Any operation whose result would exceed kMaxDegree throws DegreeOverflow.
class Poly {
public:
    static constexpr long kMaxDegree = 4096;

    explicit Poly(FieldSpec field) : field_(field) {}
    static Poly zero(FieldSpec field) { return Poly(field); }
    static Poly constant(FieldSpec field, const Coeff& c);
    static Poly monomial(FieldSpec field, const Coeff& c, long degree);
    static Poly from_coeffs(FieldSpec field, std::vector<Coeff> coeffs); // normalizes

    const FieldSpec& field() const { return field_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    Coeff coeff(long i) const;
    Coeff constant_term() const { return coeff(0); }
    const std::vector<Coeff>& coeffs() const { return c_; }

    // x-adic valuation; nullopt for the zero polynomial.
    std::optional<long> valuation() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Coeff& c) const;
    Poly shifted(long k) const; // multiply by x^k

    bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

    struct DivMod;
    // Euclidean division by a nonzero divisor: a = q*b + r, deg r < deg b.
    static DivMod divmod(const Poly& a, const Poly& b);
    static Poly gcd(const Poly& a, const Poly& b); // monic, or zero if both zero
    static Poly div_exact(const Poly& a, const Poly& b);

    Poly monic() const;
    Poly truncated(long n) const;          // mod x^n
    Poly inverse_mod_xn(long n) const;     // requires constant_term != 0

private:
    void trim();
    void check_degree() const;

    FieldSpec field_;
    std::vector<Coeff> c_;
};

struct Poly::DivMod {
    Poly q, r;
};

} // namespace monocat
