#include "monocat/rmodule.hpp"

#include <algorithm>

#include "monocat/kspace.hpp"

namespace monocat {

RModuleObject RModuleObject::make(long n, std::vector<long> exponents) {
    if (n < 1) raise(errc::bad_input, "module height n must be >= 1");
    for (long a : exponents)
        if (a < 1 || a > n)
            raise(errc::bad_input, "summand exponent " + std::to_string(a) + " outside [1, " +
                                       std::to_string(n) + "]");
    std::sort(exponents.begin(), exponents.end());
    return RModuleObject(n, std::move(exponents));
}

bool RModuleObject::is_stably_zero() const {
    return std::all_of(exps_.begin(), exps_.end(), [&](long a) { return a == n_; });
}

RModuleObject functor_T(const MonObject& x) {
    return RModuleObject::make(x.omega().n, cokernel_exponents(x.f()));
}

RModuleObject rmod_syzygy(const RModuleObject& m, SyzygyDirection) {
    // Omega and its inverse agree here: the category is 2-periodic.
    std::vector<long> out;
    for (long a : m.exponents())
        if (a < m.n()) out.push_back(m.n() - a);
    return RModuleObject::make(m.n(), std::move(out));
}

namespace {

long pairwise_dim(long a, long b, long n) {
    return std::min(std::min(a, b), std::min(n - a, n - b));
}

} // namespace

size_t rmod_stable_hom_dimension(const RModuleObject& m, const RModuleObject& n) {
    if (m.n() != n.n())
        raise(errc::rank_mismatch, "modules over different rings: n = " + std::to_string(m.n()) +
                                       " vs " + std::to_string(n.n()));
    long total = 0;
    for (long a : m.exponents())
        for (long b : n.exponents()) total += pairwise_dim(a, b, m.n());
    return static_cast<size_t>(total);
}

size_t rmod_stable_hom_dimension_bruteforce(const RModuleObject& m, const RModuleObject& n,
                                            FieldSpec field) {
    if (m.n() != n.n()) raise(errc::rank_mismatch, "modules over different rings");
    const long nn = m.n();
    const auto& as = m.exponents();
    const auto& bs = n.exponents();

    // Hom(S/x^a, S/x^b) = { u in R/x^b : x^a u = 0 } with basis
    // { x^e : max(0, b-a) <= e < b }. Coordinates of Hom(M, N): one slot per
    // (i, j, e) with e in [0, b_j); non-Hom slots are constrained to zero.
    std::vector<size_t> offset(as.size() * bs.size() + 1, 0);
    {
        size_t acc = 0;
        for (size_t i = 0; i < as.size(); ++i)
            for (size_t j = 0; j < bs.size(); ++j) {
                offset[i * bs.size() + j] = acc;
                acc += static_cast<size_t>(bs[j]);
            }
        offset[as.size() * bs.size()] = acc;
    }
    const size_t total = offset.back();
    if (total == 0) return 0;

    size_t hom_dim = 0;
    for (size_t i = 0; i < as.size(); ++i)
        for (size_t j = 0; j < bs.size(); ++j)
            for (long e = 0; e < bs[j]; ++e)
                if (as[i] + e >= bs[j]) ++hom_dim; // x^a * x^e = 0 in R/x^b

    // Maps factoring through a free module are spanned by compositions
    // M ->alpha R ->beta N with alpha_i = x^{n-a_i+s}, beta_j = x^t.
    std::vector<std::vector<Coeff>> span;
    for (size_t i = 0; i < as.size(); ++i)
        for (long s = 0; s < as[i]; ++s)
            for (size_t j = 0; j < bs.size(); ++j)
                for (long t = 0; t < bs[j]; ++t) {
                    long e = nn - as[i] + s + t;
                    if (e >= bs[j]) continue;
                    std::vector<Coeff> v(total, Coeff(0));
                    v[offset[i * bs.size() + j] + static_cast<size_t>(e)] = Coeff(1);
                    span.push_back(std::move(v));
                }
    if (span.empty()) return hom_dim;
    KMatrix mat(field, span.size(), total);
    for (size_t r = 0; r < span.size(); ++r)
        for (size_t c = 0; c < total; ++c) mat.at(r, c) = span[r][c];
    return hom_dim - k_rank(std::move(mat));
}

MonObject density_preimage(const RModuleObject& m, const OmegaSpec& w) {
    if (w.n != m.n())
        raise(errc::rank_mismatch, "omega valuation " + std::to_string(w.n) +
                                       " does not match module height " + std::to_string(m.n()));
    return MonObject::make(LocalMatrix::x_power_diagonal(w.field(), m.exponents()), w);
}

MonObject density_preimage(const RModuleObject& m, FieldSpec field) {
    return density_preimage(m, omega_make(LocalScalar::x_power(field, m.n())));
}

StableHomReport check_T_full_faithful(const MonObject& x, const MonObject& y) {
    StableHomReport r;
    r.dim_mon_side = stable_hom_dimension(x, y);
    r.dim_module_side = rmod_stable_hom_dimension(functor_T(x), functor_T(y));
    r.agree = r.dim_mon_side == r.dim_module_side;
    return r;
}

} // namespace monocat
