#include "monocat/poly.hpp"

#include <algorithm>

namespace monocat {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field()))
        raise(errc::field_mismatch, "polynomials over different coefficient fields");
}

} // namespace

Poly Poly::constant(FieldSpec field, const Coeff& c) {
    Poly p(field);
    Coeff v = field.normalize(c);
    if (!coeff_is_zero(v)) p.c_.push_back(v);
    return p;
}

Poly Poly::monomial(FieldSpec field, const Coeff& c, long degree) {
    Poly p(field);
    Coeff v = field.normalize(c);
    if (coeff_is_zero(v)) return p;
    if (degree < 0 || degree > kMaxDegree)
        raise(errc::degree_overflow, "monomial degree " + std::to_string(degree));
    p.c_.assign(static_cast<size_t>(degree) + 1, Coeff(0));
    p.c_.back() = v;
    return p;
}

Poly Poly::from_coeffs(FieldSpec field, std::vector<Coeff> coeffs) {
    Poly p(field);
    p.c_ = std::move(coeffs);
    for (auto& c : p.c_) c = field.normalize(c);
    p.trim();
    p.check_degree();
    return p;
}

bool Poly::is_one() const {
    return c_.size() == 1 && c_[0] == field_.from_long(1);
}

Coeff Poly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Coeff(0);
    return c_[static_cast<size_t>(i)];
}

std::optional<long> Poly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!coeff_is_zero(c_[i])) return static_cast<long>(i);
    return std::nullopt;
}

void Poly::trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
}

void Poly::check_degree() const {
    if (degree() > kMaxDegree)
        raise(errc::degree_overflow,
              "polynomial degree " + std::to_string(degree()) + " exceeds " + std::to_string(kMaxDegree));
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(*this, o);
    Poly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Coeff(0));
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = field_.add(coeff(static_cast<long>(i)), o.coeff(static_cast<long>(i)));
    r.trim();
    r.check_degree();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_field(*this, o);
    Poly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Coeff(0));
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = field_.sub(coeff(static_cast<long>(i)), o.coeff(static_cast<long>(i)));
    r.trim();
    r.check_degree();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_field(*this, o);
    Poly r(field_);
    if (is_zero() || o.is_zero()) return r;
    if (degree() + o.degree() > kMaxDegree)
        raise(errc::degree_overflow, "product degree " + std::to_string(degree() + o.degree()));
    r.c_.assign(c_.size() + o.c_.size() - 1, Coeff(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (coeff_is_zero(c_[i])) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = field_.add(r.c_[i + j], field_.mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(field_.neg(c));
    return r;
}

Poly Poly::scaled(const Coeff& c) const {
    Poly r(field_);
    Coeff v = field_.normalize(c);
    if (coeff_is_zero(v)) return r;
    r.c_.reserve(c_.size());
    for (const auto& a : c_) r.c_.push_back(field_.mul(a, v));
    r.trim();
    return r;
}

Poly Poly::shifted(long k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(field_);
    if (k < 0) {
        // exact division by x^{-k}; the low coefficients must vanish
        if (valuation().value_or(0) < -k)
            raise(errc::not_divisible, "shift below valuation");
        r.c_.assign(c_.begin() + static_cast<long>(-k), c_.end());
        return r;
    }
    if (degree() + k > kMaxDegree)
        raise(errc::degree_overflow, "shift degree " + std::to_string(degree() + k));
    r.c_.assign(static_cast<size_t>(k), Coeff(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly::DivMod Poly::divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) raise(errc::bad_input, "polynomial division by zero");
    Poly q(a.field()), r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Coeff(0));
    const Coeff lead_inv = a.field().inv(b.c_.back());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long d = r.degree() - b.degree();
        Coeff f = a.field().mul(r.c_.back(), lead_inv);
        q.c_[static_cast<size_t>(d)] = f;
        for (size_t i = 0; i < b.c_.size(); ++i) {
            size_t idx = static_cast<size_t>(d) + i;
            r.c_[idx] = a.field().sub(r.c_[idx], a.field().mul(f, b.c_[i]));
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly rem = divmod(u, v).r;
        u = v;
        v = rem;
    }
    return u.monic();
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) raise(errc::bad_input, "inexact polynomial division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(c_.back()));
}

Poly Poly::truncated(long n) const {
    Poly r(field_);
    if (n <= 0) return r;
    size_t m = std::min(c_.size(), static_cast<size_t>(n));
    r.c_.assign(c_.begin(), c_.begin() + static_cast<long>(m));
    r.trim();
    return r;
}

Poly Poly::inverse_mod_xn(long n) const {
    if (is_zero() || coeff_is_zero(c_[0]))
        raise(errc::bad_input, "power series inverse requires a unit constant term");
    Poly r(field_);
    if (n <= 0) return r;
    std::vector<Coeff> e(static_cast<size_t>(n), Coeff(0));
    const Coeff c0inv = field_.inv(c_[0]);
    e[0] = c0inv;
    for (long k = 1; k < n; ++k) {
        Coeff s(0);
        for (long j = 1; j <= k; ++j) {
            Coeff cj = coeff(j);
            if (coeff_is_zero(cj)) continue;
            s = field_.add(s, field_.mul(cj, e[static_cast<size_t>(k - j)]));
        }
        e[static_cast<size_t>(k)] = field_.neg(field_.mul(s, c0inv));
    }
    return from_coeffs(field_, std::move(e));
}

} // namespace monocat
