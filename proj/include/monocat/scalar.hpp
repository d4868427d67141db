#pragma once

#include "monocat/poly.hpp"

namespace monocat {

// An element of S = k[x] localized at (x), stored as a reduced fraction
// num/den of polynomials with den(0) = 1 and gcd(num, den) = 1.
// Zero is canonically (0, 1), so equality is coefficientwise.
class LocalScalar {
public:
    explicit LocalScalar(FieldSpec field)
        : num_(Poly::zero(field)), den_(Poly::constant(field, Coeff(1))) {}

    // Canonicalizing constructor; throws ZeroDenominator / DenominatorNotUnit.
    static LocalScalar of(Poly num, Poly den);
    static LocalScalar of(Poly num) { return of(num, Poly::constant(num.field(), Coeff(1))); }

    static LocalScalar zero(FieldSpec field) { return LocalScalar(field); }
    static LocalScalar one(FieldSpec field) { return from_long(field, 1); }
    static LocalScalar from_long(FieldSpec field, long v);
    static LocalScalar x_power(FieldSpec field, long n);
    static LocalScalar from_coeff(FieldSpec field, const Coeff& c);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldSpec& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_unit() const; // valuation 0

    // x-adic valuation; nullopt means +infinity (the zero element).
    std::optional<long> valuation() const { return num_.valuation(); }

    LocalScalar operator+(const LocalScalar& o) const;
    LocalScalar operator-(const LocalScalar& o) const;
    LocalScalar operator*(const LocalScalar& o) const;
    LocalScalar operator-() const;

    // Exact division in S; throws NotDivisible when the quotient leaves S.
    LocalScalar div(const LocalScalar& o) const;
    LocalScalar inverse() const { return one(field()).div(*this); }

    bool operator==(const LocalScalar& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Truncated power-series expansion: the unique polynomial of degree < n
    // congruent to this element mod x^n.
    Poly truncated(long n) const;

private:
    LocalScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_, den_;
};

// omega and its normalization omega = unitPart * x^n, n >= 1.
struct OmegaSpec {
    LocalScalar omega;
    long n = 0;
    LocalScalar unit_part;

    const FieldSpec& field() const { return omega.field(); }
    bool operator==(const OmegaSpec& o) const { return omega == o.omega; }
};

// Throws OmegaIsZero / OmegaIsUnit.
OmegaSpec omega_make(const LocalScalar& omega);

} // namespace monocat
