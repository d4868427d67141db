#pragma once

// Test-only brute-force oracles, independent of the library's linear-algebra
// route for stable Homs: these enumerate morphisms over a small prime field
// and decide null-homotopy through the exact solver.

#include <vector>

#include "monocat/mon.hpp"
#include "monocat/pair.hpp"

namespace monocat::testing {

// All psi0 with polynomial entries of degree < n over F_p, as matrices.
inline std::vector<LocalMatrix> all_truncated_matrices(FieldSpec field, size_t rows, size_t cols,
                                                       long n) {
    const size_t cells = rows * cols * static_cast<size_t>(n);
    size_t states = 1;
    for (size_t i = 0; i < cells; ++i) states *= field.p;
    std::vector<LocalMatrix> out;
    out.reserve(states);
    for (size_t code = 0; code < states; ++code) {
        LocalMatrix m(field, rows, cols);
        size_t rest = code;
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                std::vector<Coeff> cs(static_cast<size_t>(n), Coeff(0));
                for (long d = 0; d < n; ++d) {
                    cs[static_cast<size_t>(d)] = Coeff(static_cast<long>(rest % field.p));
                    rest /= field.p;
                }
                m.at(i, j) = LocalScalar::of(Poly::from_coeffs(field, std::move(cs)));
            }
        out.push_back(std::move(m));
    }
    return out;
}

// Morphisms X -> Y are in bijection with psi0 such that f'_sigma psi0 f is
// divisible by omega; psi1 is then forced. Returns nullopt when psi0 does not
// extend.
inline std::optional<MonMorphism> lift_psi0(const MonObject& x, const MonObject& y,
                                            const LocalMatrix& psi0) {
    const OmegaSpec& w = x.omega();
    LocalMatrix num = y.sigma() * psi0 * x.f();
    LocalMatrix psi1(x.field(), y.size(), x.size());
    for (size_t i = 0; i < num.rows(); ++i)
        for (size_t j = 0; j < num.cols(); ++j) {
            const LocalScalar& v = num.at(i, j);
            auto val = v.valuation();
            if (val && *val < w.n) return std::nullopt;
            psi1.at(i, j) = v.is_zero() ? v : v.div(w.omega);
        }
    return MonMorphism::make(x, y, std::move(psi1), psi0);
}

// dim_k of stable Hom by exhaustive enumeration over F_p: counts the
// morphism representatives and the null-homotopic ones among them.
inline size_t stable_hom_dimension_enumeration(const MonObject& x, const MonObject& y) {
    const FieldSpec field = x.field();
    const long n = x.omega().n;
    if (x.size() == 0 || y.size() == 0) return 0;
    size_t hom = 0, null = 0;
    for (const LocalMatrix& psi0 : all_truncated_matrices(field, y.size(), x.size(), n)) {
        auto m = lift_psi0(x, y, psi0);
        if (!m) continue;
        ++hom;
        if (is_null_homotopic(*m)) ++null;
    }
    size_t dim = 0;
    size_t q = hom / null;
    while (q > 1) {
        q /= field.p;
        ++dim;
    }
    return dim;
}

// Stable isomorphism test via the Krull-Schmidt decomposition transported
// through F: equal non-contractible exponent multisets.
inline std::vector<long> stable_atoms(const MonObject& x) {
    std::vector<long> out;
    const long n = x.omega().n;
    for (long e : x.exponents())
        if (e != 0 && e != n) out.push_back(e);
    return out;
}

inline bool stably_isomorphic(const MonObject& a, const MonObject& b) {
    return stable_atoms(a) == stable_atoms(b);
}

} // namespace monocat::testing
