#include "monocat/scalar.hpp"

namespace monocat {

LocalScalar LocalScalar::of(Poly num, Poly den) {
    if (!(num.field() == den.field()))
        raise(errc::field_mismatch, "numerator and denominator over different fields");
    const FieldSpec field = num.field();
    if (den.is_zero()) raise(errc::zero_denominator, "denominator is the zero polynomial");
    if (coeff_is_zero(den.constant_term()))
        raise(errc::denominator_not_unit, "denominator vanishes at x = 0");
    if (num.is_zero()) return LocalScalar(field);
    if (den.is_one()) return LocalScalar(std::move(num), std::move(den));

    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
        num = Poly::div_exact(num, g);
        den = Poly::div_exact(den, g);
    }
    // Pin den(0) = 1; this fixes the representative uniquely.
    Coeff c0 = den.constant_term();
    if (!(c0 == field.from_long(1))) {
        Coeff inv = field.inv(c0);
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return LocalScalar(std::move(num), std::move(den));
}

LocalScalar LocalScalar::from_long(FieldSpec field, long v) {
    return of(Poly::constant(field, Coeff(v)));
}

LocalScalar LocalScalar::x_power(FieldSpec field, long n) {
    return of(Poly::monomial(field, Coeff(1), n));
}

LocalScalar LocalScalar::from_coeff(FieldSpec field, const Coeff& c) {
    return of(Poly::constant(field, c));
}

bool LocalScalar::is_unit() const {
    auto v = valuation();
    return v.has_value() && *v == 0;
}

LocalScalar LocalScalar::operator+(const LocalScalar& o) const {
    if (den_.is_one() && o.den_.is_one()) return of(num_ + o.num_);
    return of(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

LocalScalar LocalScalar::operator-(const LocalScalar& o) const {
    if (den_.is_one() && o.den_.is_one()) return of(num_ - o.num_);
    return of(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

LocalScalar LocalScalar::operator*(const LocalScalar& o) const {
    if (den_.is_one() && o.den_.is_one()) return of(num_ * o.num_);
    return of(num_ * o.num_, den_ * o.den_);
}

LocalScalar LocalScalar::operator-() const {
    LocalScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

LocalScalar LocalScalar::div(const LocalScalar& o) const {
    if (o.is_zero()) raise(errc::not_divisible, "division by zero");
    if (is_zero()) return zero(field());
    // Monomial divisor: an exact shift and scale, no gcd needed.
    if (o.den_.is_one() && o.num_.degree() == *o.num_.valuation()) {
        long v = *o.num_.valuation();
        if (*num_.valuation() < v)
            raise(errc::not_divisible, "quotient has negative valuation (leaves S)");
        return LocalScalar(num_.shifted(-v).scaled(field().inv(o.num_.coeff(v))), den_);
    }
    // a/b lies in S iff val(a) >= val(b); reduce first, then test the
    // constant term of the resulting denominator.
    Poly n = num_ * o.den_;
    Poly d = den_ * o.num_;
    Poly g = Poly::gcd(n, d);
    if (g.degree() > 0) {
        n = Poly::div_exact(n, g);
        d = Poly::div_exact(d, g);
    }
    if (coeff_is_zero(d.constant_term()))
        raise(errc::not_divisible, "quotient has negative valuation (leaves S)");
    return of(std::move(n), std::move(d));
}

Poly LocalScalar::truncated(long n) const {
    if (n <= 0 || is_zero()) return Poly::zero(field());
    return (num_.truncated(n) * den_.inverse_mod_xn(n)).truncated(n);
}

OmegaSpec omega_make(const LocalScalar& omega) {
    if (omega.is_zero()) raise(errc::omega_is_zero, "omega must be nonzero");
    long n = *omega.valuation();
    if (n == 0) raise(errc::omega_is_unit, "omega must be a non-unit (valuation >= 1)");
    LocalScalar unit = omega.div(LocalScalar::x_power(omega.field(), n));
    return OmegaSpec{omega, n, unit};
}

} // namespace monocat
