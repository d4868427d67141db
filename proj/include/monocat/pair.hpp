#pragma once

#include "monocat/mon.hpp"

namespace monocat {

// A matrix factorization of omega: square matrices rho1, rho0 of equal size
// with rho1*rho0 = rho0*rho1 = omega*I. DB(omega) is this category with
// stable Homs; no separate type is kept for it.
class PairObject {
public:
    static PairObject make(LocalMatrix rho1, LocalMatrix rho0, OmegaSpec omega); // ProductNotOmega

    size_t size() const { return rho1_.rows(); }
    const LocalMatrix& rho1() const { return rho1_; }
    const LocalMatrix& rho0() const { return rho0_; }
    const OmegaSpec& omega() const { return omega_; }
    const FieldSpec& field() const { return rho1_.field(); }

    bool operator==(const PairObject& o) const {
        return rho1_ == o.rho1_ && rho0_ == o.rho0_ && omega_ == o.omega_;
    }

private:
    PairObject(LocalMatrix r1, LocalMatrix r0, OmegaSpec w)
        : rho1_(std::move(r1)), rho0_(std::move(r0)), omega_(std::move(w)) {}

    LocalMatrix rho1_, rho0_;
    OmegaSpec omega_;
};

class PairMorphism {
public:
    // Validates q1*psi1 = psi0*rho1 and psi1*rho0 = q0*psi0.
    static PairMorphism make(PairObject source, PairObject target, LocalMatrix psi1,
                             LocalMatrix psi0);
    static PairMorphism identity(const PairObject& p);
    static PairMorphism zero(const PairObject& source, const PairObject& target);

    const PairObject& source() const { return source_; }
    const PairObject& target() const { return target_; }
    const LocalMatrix& psi1() const { return psi1_; }
    const LocalMatrix& psi0() const { return psi0_; }

    bool operator==(const PairMorphism& o) const {
        return source_ == o.source_ && target_ == o.target_ && psi1_ == o.psi1_ && psi0_ == o.psi0_;
    }

private:
    PairMorphism(PairObject s, PairObject t, LocalMatrix p1, LocalMatrix p0)
        : source_(std::move(s)), target_(std::move(t)), psi1_(std::move(p1)), psi0_(std::move(p0)) {}

    PairObject source_, target_;
    LocalMatrix psi1_, psi0_;
};

PairMorphism compose(const PairMorphism& g, const PairMorphism& f);

// s0, s1 with psi0 = q1*s0 + s1*rho0 and psi1 = s0*rho1 + q0*s1.
struct PairHomotopyWitness {
    LocalMatrix s0, s1;
};

PairObject pair_direct_sum(const PairObject& a, const PairObject& b);

// The equivalence Mon(omega, P) -> Pair(omega): f goes to (f, f_sigma);
// morphisms pass through unchanged.
PairObject functor_F(const MonObject& x);
PairMorphism functor_F(const MonMorphism& m);
MonObject functor_F_inverse(const PairObject& p);
MonMorphism functor_F_inverse(const PairMorphism& m);

std::optional<PairHomotopyWitness> pair_is_null_homotopic(const PairMorphism& m);

// Omega^{-1}(rho1, rho0) = (-rho0, -rho1); an involution on matrices.
PairObject pair_shift(const PairObject& p);

struct PairMappingCone {
    PairObject object;
    PairMorphism from_target;
    PairMorphism to_shifted_source;
};
// The mapping cone transported through F from the Mon-side construction.
PairMappingCone pair_cone(const PairMorphism& m);

// SNF exponents of rho1 (ascending, with multiplicity): the pair decomposes
// as the direct sum of (x^a, unit*x^{n-a}); 0 and n mark contractible summands.
std::vector<long> pair_decompose(const PairObject& p);

size_t pair_stable_hom_dimension(const PairObject& p, const PairObject& q);

} // namespace monocat
