#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monocat/matrix.hpp"

namespace monocat {

// An object (P ->f Q) of Mon(omega, P) over the DVR backend: f is a square
// injective matrix over S whose cokernel is killed by omega. Over the DVR
// the Gorenstein-projective and projective flavors coincide, so this one
// type carries both.
class MonObject {
public:
    // Throws NotSquare / NotInjective / CokerNotAnnihilated.
    static MonObject make(LocalMatrix f, OmegaSpec omega);

    size_t size() const { return f_.rows(); }
    const LocalMatrix& f() const { return f_; }
    const OmegaSpec& omega() const { return omega_; }
    const FieldSpec& field() const { return f_.field(); }

    // Full SNF exponent list (ascending, zeros included); a complete
    // isomorphism invariant of the object.
    const std::vector<long>& exponents() const { return exponents_; }

    // The partner matrix f_sigma with f*f_sigma = f_sigma*f = omega*I.
    const LocalMatrix& sigma() const { return sigma_; }

    bool operator==(const MonObject& o) const { return f_ == o.f_ && omega_ == o.omega_; }

private:
    MonObject(LocalMatrix f, OmegaSpec omega, std::vector<long> exps, LocalMatrix sigma)
        : f_(std::move(f)), omega_(std::move(omega)), exponents_(std::move(exps)),
          sigma_(std::move(sigma)) {}

    LocalMatrix f_;
    OmegaSpec omega_;
    std::vector<long> exponents_;
    LocalMatrix sigma_;
};

inline LocalMatrix sigma(const MonObject& x) { return x.sigma(); }

class MonMorphism {
public:
    // Validates shapes and the commuting square psi0*f = f'*psi1
    // (SquareNotCommuting reports the residual).
    static MonMorphism make(MonObject source, MonObject target, LocalMatrix psi1, LocalMatrix psi0);
    static MonMorphism identity(const MonObject& x);
    static MonMorphism zero(const MonObject& source, const MonObject& target);

    const MonObject& source() const { return source_; }
    const MonObject& target() const { return target_; }
    const LocalMatrix& psi1() const { return psi1_; }
    const LocalMatrix& psi0() const { return psi0_; }

    bool operator==(const MonMorphism& o) const {
        return source_ == o.source_ && target_ == o.target_ && psi1_ == o.psi1_ && psi0_ == o.psi0_;
    }

private:
    MonMorphism(MonObject s, MonObject t, LocalMatrix p1, LocalMatrix p0)
        : source_(std::move(s)), target_(std::move(t)), psi1_(std::move(p1)), psi0_(std::move(p0)) {}

    MonObject source_, target_;
    LocalMatrix psi1_, psi0_;
};

MonMorphism compose(const MonMorphism& g, const MonMorphism& f); // g after f
MonMorphism operator+(const MonMorphism& a, const MonMorphism& b);
MonMorphism scale(const MonMorphism& m, const LocalScalar& c);

struct Conflation {
    MonObject left, middle, right;
    MonMorphism inflation; // left -> middle
    MonMorphism deflation; // middle -> right
};

// s1, s0 with psi0*f - f'*s0*f = omega*s1 for the morphism they certify.
struct HomotopyWitness {
    LocalMatrix s1, s0;
};

MonObject direct_sum(const MonObject& x, const MonObject& y); // OmegaMismatch

struct DirectSumData {
    MonObject object;
    MonMorphism inj_left, inj_right;   // X -> X(+)Y, Y -> X(+)Y
    MonMorphism proj_left, proj_right; // X(+)Y -> X, X(+)Y -> Y
};
DirectSumData direct_sum_full(const MonObject& x, const MonObject& y);

// (S^a ->id S^a) (+) (S^b ->omega S^b) as one block matrix.
MonObject standard_projective(size_t rank_id, size_t rank_omega, const OmegaSpec& w);

std::optional<HomotopyWitness> is_null_homotopic(const MonMorphism& m);
bool is_projective_object(const MonObject& x); // all SNF exponents 0 or n

Conflation projective_presentation(const MonObject& x); // K >-> (id(+)omega) ->> X
Conflation injective_presentation(const MonObject& x);  // X >-> (omega(+)id) ->> shift X

struct KernelData {
    MonObject object;
    MonMorphism inclusion;
};
KernelData kernel_of_deflation(const MonMorphism& d); // NotDeflation

struct CokernelData {
    MonObject object;
    MonMorphism projection;
};
CokernelData cokernel_of_inflation(const MonMorphism& i); // NotInflation

bool is_inflation(const MonMorphism& m); // componentwise split injective
bool is_deflation(const MonMorphism& m); // componentwise surjective

Conflation conflation_from_inflation(const MonMorphism& i);

// Problems found while checking conflation axioms; empty means valid.
std::vector<std::string> conflation_problems(const Conflation& c);

struct PushoutData {
    MonObject object;
    MonMorphism from_target; // Y -> E
    MonMorphism from_along;  // Z -> E, an inflation with the same cokernel as phi
};
PushoutData pushout_inflation(const MonMorphism& phi, const MonMorphism& theta);

struct PullbackData {
    MonObject object;
    MonMorphism to_target; // E -> Y
    MonMorphism to_along;  // E -> W, a deflation
};
PullbackData pullback_deflation(const MonMorphism& phi, const MonMorphism& theta);

// Omega^{-1}(P ->f Q) = (Q ->-f_sigma P); an involution on matrices.
MonObject shift(const MonObject& x);

struct MappingCone {
    MonObject object;
    MonMorphism from_target;       // Y -> C
    MonMorphism to_shifted_source; // C -> shift(X)
};
MappingCone cone(const MonMorphism& m);

std::optional<MonMorphism> find_retraction(const MonMorphism& inflation);
std::optional<MonMorphism> find_section(const MonMorphism& deflation);

// dim_k Hom(X, Y) / (null-homotopic). The gorenstein flag selects the ambient
// category; the two coincide on this backend.
size_t stable_hom_dimension(const MonObject& x, const MonObject& y, bool gorenstein = false);

// Polynomial psi0-representatives (entries of degree < n) spanning the space
// of morphisms X -> Y modulo omega; every morphism is one of these plus
// omega times an arbitrary matrix.
std::vector<LocalMatrix> morphism_space_representatives(const MonObject& x, const MonObject& y);

// Deterministic generators for property tests and the axiom harness.
class Rng {
public:
    explicit Rng(uint64_t seed) : g_(seed) {}
    uint64_t below(uint64_t k) { return k == 0 ? 0 : g_() % k; }
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }

private:
    std::mt19937_64 g_;
};

LocalMatrix random_unit_matrix(FieldSpec field, size_t n, Rng& rng);

// A unit matrix together with its inverse, accumulated from the same
// elementary operations; entry degrees stay small on both sides.
struct UnitMatrixPair {
    LocalMatrix u, uinv;
};
UnitMatrixPair random_unit_matrix_pair(FieldSpec field, size_t n, Rng& rng);

MonObject random_object(const OmegaSpec& w, size_t size_bound, Rng& rng);
MonObject random_nonempty_object(const OmegaSpec& w, size_t size_bound, Rng& rng);
MonMorphism random_morphism(const MonObject& x, const MonObject& y, Rng& rng);
MonMorphism random_inflation(const MonObject& x, const OmegaSpec& w, size_t extra_bound, Rng& rng);
MonMorphism random_deflation_onto(const MonObject& z, const OmegaSpec& w, size_t extra_bound, Rng& rng);
Conflation random_conflation(const OmegaSpec& w, size_t size_bound, Rng& rng);

struct AxiomReport {
    uint64_t seed = 0;
    size_t trials = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Randomized check of the exact-category axioms (E0-E2 and opposites),
// composition closure of inflations/deflations, extension closure,
// split pushouts along omega, and the projectivity criteria agreement.
AxiomReport axiom_suite(uint64_t seed, size_t trials, const OmegaSpec& w, size_t size_bound);

} // namespace monocat
