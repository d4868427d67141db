#pragma once

#include "monocat/mon.hpp"

namespace monocat {

// A finitely generated module over R = S/(omega), encoded by the multiset of
// invariant-factor exponents: M = (+)_i S/(x^{a_i}) with 1 <= a_i <= n.
// Summands with a = n are the projective R-modules (stably zero); this is the
// stable-MCM model of the singularity category of R.
class RModuleObject {
public:
    static RModuleObject make(long n, std::vector<long> exponents);

    long n() const { return n_; }
    const std::vector<long>& exponents() const { return exps_; } // sorted ascending
    bool is_stably_zero() const;

    bool operator==(const RModuleObject& o) const = default;

private:
    RModuleObject(long n, std::vector<long> exps) : n_(n), exps_(std::move(exps)) {}

    long n_ = 1;
    std::vector<long> exps_;
};

// Coker f of the object (P ->f Q), as an R-module.
RModuleObject functor_T(const MonObject& x);

enum class SyzygyDirection { omega, omega_inverse };

// Each summand a goes to n - a; projective summands (a = n) vanish.
RModuleObject rmod_syzygy(const RModuleObject& m, SyzygyDirection direction);

// Closed form sum of d(a, b) = min(a, b, n-a, n-b); RankMismatch when the
// underlying n differ. Validated against the brute-force oracle below.
size_t rmod_stable_hom_dimension(const RModuleObject& m, const RModuleObject& n);

// Independent oracle: k-linear maps M -> N modulo those factoring through
// free R-modules, computed by explicit bases and rank.
size_t rmod_stable_hom_dimension_bruteforce(const RModuleObject& m, const RModuleObject& n,
                                            FieldSpec field);

// diag(x^{a_i}) over omega; a section of functor_T.
MonObject density_preimage(const RModuleObject& m, const OmegaSpec& w); // requires w.n == m.n
MonObject density_preimage(const RModuleObject& m, FieldSpec field);   // omega = x^n

struct StableHomReport {
    size_t dim_mon_side = 0;
    size_t dim_module_side = 0;
    bool agree = false;
};

// Full faithfulness of T, checked by comparing stable Hom dimensions on both
// sides of the functor.
StableHomReport check_T_full_faithful(const MonObject& x, const MonObject& y);

} // namespace monocat
