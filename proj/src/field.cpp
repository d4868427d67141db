#include "monocat/field.hpp"

namespace monocat {

const char* errc_name(errc c) {
    switch (c) {
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::denominator_not_unit: return "DenominatorNotUnit";
    case errc::not_divisible: return "NotDivisible";
    case errc::degree_overflow: return "DegreeOverflow";
    case errc::omega_is_zero: return "OmegaIsZero";
    case errc::omega_is_unit: return "OmegaIsUnit";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_invertible_over_s: return "NotInvertibleOverS";
    case errc::not_injective: return "NotInjective";
    case errc::not_square: return "NotSquare";
    case errc::coker_not_annihilated: return "CokerNotAnnihilated";
    case errc::square_not_commuting: return "SquareNotCommuting";
    case errc::omega_mismatch: return "OmegaMismatch";
    case errc::not_inflation: return "NotInflation";
    case errc::not_deflation: return "NotDeflation";
    case errc::product_not_omega: return "ProductNotOmega";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::parse_error: return "ParseError";
    case errc::unknown_command: return "UnknownCommand";
    case errc::bad_input: return "BadInput";
    }
    return "Error";
}

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

FieldSpec FieldSpec::prime(uint32_t p) {
    if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
        raise(errc::bad_input, "prime-field modulus must be a prime in [2, 2^31): got " + std::to_string(p));
    return FieldSpec{FieldKind::prime_field, p};
}

Coeff FieldSpec::normalize(const Coeff& a) const {
    if (kind == FieldKind::rationals) {
        Coeff r = a;
        r.canonicalize();
        return r;
    }
    // F_p: representative in [0, p). Rational input c/d is mapped via d^{-1} mod p.
    mpz_class num = a.get_num(), den = a.get_den(), pz(p);
    mpz_class n = num % pz;
    if (n < 0) n += pz;
    if (den != 1) {
        mpz_class d = den % pz, dinv;
        if (d < 0) d += pz;
        if (d == 0 || mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()) == 0)
            raise(errc::bad_input, "coefficient denominator not invertible mod " + std::to_string(p));
        n = (n * dinv) % pz;
    }
    return Coeff(n);
}

Coeff FieldSpec::add(const Coeff& a, const Coeff& b) const { return normalize(Coeff(a + b)); }
Coeff FieldSpec::sub(const Coeff& a, const Coeff& b) const { return normalize(Coeff(a - b)); }
Coeff FieldSpec::mul(const Coeff& a, const Coeff& b) const { return normalize(Coeff(a * b)); }

Coeff FieldSpec::div(const Coeff& a, const Coeff& b) const {
    if (coeff_is_zero(b)) raise(errc::bad_input, "division by zero field element");
    if (kind == FieldKind::rationals) {
        Coeff r = a / b;
        r.canonicalize();
        return r;
    }
    return mul(a, inv(b));
}

Coeff FieldSpec::neg(const Coeff& a) const { return normalize(Coeff(-a)); }

Coeff FieldSpec::inv(const Coeff& a) const {
    if (coeff_is_zero(a)) raise(errc::bad_input, "inverse of zero field element");
    if (kind == FieldKind::rationals) {
        Coeff r = 1 / a;
        r.canonicalize();
        return r;
    }
    mpz_class v = normalize(a).get_num(), pz(p), vinv;
    mpz_invert(vinv.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    return Coeff(vinv);
}

Coeff FieldSpec::from_long(long v) const { return normalize(Coeff(v)); }

Coeff FieldSpec::from_string(const std::string& s) const {
    try {
        Coeff c(s);
        return normalize(c);
    } catch (const std::invalid_argument&) {
        raise(errc::parse_error, "bad coefficient literal '" + s + "'");
    }
}

std::string FieldSpec::to_string(const Coeff& a) const {
    return normalize(a).get_str();
}

std::string FieldSpec::describe() const {
    return kind == FieldKind::rationals ? "rational" : "fp:" + std::to_string(p);
}

FieldSpec parse_field_spec(const std::string& text) {
    if (text == "rational" || text == "rationals" || text == "q" || text == "Q")
        return FieldSpec::rationals();
    if (text.rfind("fp:", 0) == 0) {
        long v = 0;
        try {
            v = std::stol(text.substr(3));
        } catch (...) {
            raise(errc::bad_input, "bad field spec '" + text + "'");
        }
        if (v < 2 || v >= (1L << 31)) raise(errc::bad_input, "bad field spec '" + text + "'");
        return FieldSpec::prime(static_cast<uint32_t>(v));
    }
    raise(errc::bad_input, "bad field spec '" + text + "' (expected 'rational' or 'fp:<p>')");
}

} // namespace monocat
