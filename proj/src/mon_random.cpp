#include <algorithm>

#include "monocat/mon.hpp"
#include "monocat/text.hpp"

namespace monocat {

namespace {

Coeff random_nonzero_coeff(FieldSpec field, Rng& rng) {
    if (field.kind == FieldKind::prime_field)
        return field.from_long(1 + static_cast<long>(rng.below(field.p - 1)));
    static const long pool[] = {1, -1, 2, -2, 3, -3, 1, -1};
    return Coeff(pool[rng.below(8)]);
}

// A scalar of valuation <= 2: a monomial or binomial times x^e. Kept
// polynomial so that conjugated matrices stay cheap to eliminate.
LocalScalar random_small_scalar(FieldSpec field, Rng& rng) {
    Coeff c = random_nonzero_coeff(field, rng);
    long e = rng.range(0, 2);
    Poly p = Poly::monomial(field, c, e);
    if (rng.below(3) == 0)
        p = p + Poly::monomial(field, random_nonzero_coeff(field, rng), e + 1);
    return LocalScalar::of(std::move(p));
}

} // namespace

UnitMatrixPair random_unit_matrix_pair(FieldSpec field, size_t n, Rng& rng) {
    // Permutation times unipotent row operations: determinant stays a unit.
    // The inverse accumulates the inverted elementary operations.
    LocalMatrix u(field, n, n), uinv(field, n, n);
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    for (size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    for (size_t i = 0; i < n; ++i) {
        u.at(i, perm[i]) = LocalScalar::one(field);
        uinv.at(perm[i], i) = LocalScalar::one(field);
    }

    const size_t ops = n == 0 ? 0 : n + 1;
    for (size_t k = 0; k < ops; ++k) {
        size_t i = rng.below(n), j = rng.below(n);
        if (i == j) continue;
        LocalScalar c = random_small_scalar(field, rng);
        // u <- (I + c e_ij) u, so uinv <- uinv (I - c e_ij)
        for (size_t t = 0; t < n; ++t) u.at(i, t) = u.at(i, t) + c * u.at(j, t);
        for (size_t t = 0; t < n; ++t) uinv.at(t, j) = uinv.at(t, j) - c * uinv.at(t, i);
    }
    return UnitMatrixPair{std::move(u), std::move(uinv)};
}

LocalMatrix random_unit_matrix(FieldSpec field, size_t n, Rng& rng) {
    return random_unit_matrix_pair(field, n, rng).u;
}

MonObject random_object(const OmegaSpec& w, size_t size_bound, Rng& rng) {
    const FieldSpec field = w.field();
    size_t r = rng.below(size_bound + 1);
    std::vector<long> exps(r);
    for (auto& e : exps) e = rng.range(0, w.n);
    LocalMatrix d = LocalMatrix::x_power_diagonal(field, exps);
    LocalMatrix f = random_unit_matrix(field, r, rng) * d * random_unit_matrix(field, r, rng);
    return MonObject::make(std::move(f), w);
}

MonObject random_nonempty_object(const OmegaSpec& w, size_t size_bound, Rng& rng) {
    const FieldSpec field = w.field();
    size_t r = 1 + rng.below(std::max<size_t>(size_bound, 1));
    std::vector<long> exps(r);
    for (auto& e : exps) e = rng.range(0, w.n);
    LocalMatrix d = LocalMatrix::x_power_diagonal(field, exps);
    LocalMatrix f = random_unit_matrix(field, r, rng) * d * random_unit_matrix(field, r, rng);
    return MonObject::make(std::move(f), w);
}

MonMorphism random_morphism(const MonObject& x, const MonObject& y, Rng& rng) {
    const FieldSpec field = x.field();
    const OmegaSpec& w = x.omega();
    if (x.size() == 0 || y.size() == 0) return MonMorphism::zero(x, y);

    std::vector<LocalMatrix> reps = morphism_space_representatives(x, y);
    LocalMatrix psi0(field, y.size(), x.size());
    for (const LocalMatrix& rep : reps) {
        if (rng.below(2) == 0) continue;
        Coeff c = random_nonzero_coeff(field, rng);
        psi0 = psi0 + rep.scaled(LocalScalar::from_coeff(field, c));
    }
    if (rng.below(3) == 0) {
        // plus omega * (an arbitrary matrix): still a morphism
        LocalMatrix extra(field, y.size(), x.size());
        for (size_t i = 0; i < extra.rows(); ++i)
            for (size_t j = 0; j < extra.cols(); ++j)
                if (rng.below(2) == 0) extra.at(i, j) = random_small_scalar(field, rng);
        psi0 = psi0 + extra.scaled(w.omega);
    }
    // psi1 is forced: f' psi1 = psi0 f, i.e. psi1 = (f'_sigma psi0 f) / omega.
    LocalMatrix num = y.sigma() * psi0 * x.f();
    LocalMatrix psi1(field, y.size(), x.size());
    for (size_t i = 0; i < psi1.rows(); ++i)
        for (size_t j = 0; j < psi1.cols(); ++j) psi1.at(i, j) = num.at(i, j).div(w.omega);
    return MonMorphism::make(x, y, std::move(psi1), std::move(psi0));
}

MonMorphism random_inflation(const MonObject& x, const OmegaSpec& w, size_t extra_bound, Rng& rng) {
    const FieldSpec field = w.field();
    MonObject complement = random_object(w, extra_bound, rng);
    const size_t m = x.size() + complement.size();
    UnitMatrixPair a1 = random_unit_matrix_pair(field, m, rng);
    UnitMatrixPair a0 = random_unit_matrix_pair(field, m, rng);
    LocalMatrix g = a0.u * direct_sum(x.f(), complement.f()) * a1.uinv;
    MonObject y = MonObject::make(std::move(g), w);
    return MonMorphism::make(x, y, a1.u.submatrix(0, 0, m, x.size()),
                             a0.u.submatrix(0, 0, m, x.size()));
}

MonMorphism random_deflation_onto(const MonObject& z, const OmegaSpec& w, size_t extra_bound,
                                  Rng& rng) {
    const FieldSpec field = w.field();
    MonObject complement = random_object(w, extra_bound, rng);
    const size_t m = z.size() + complement.size();
    UnitMatrixPair a1 = random_unit_matrix_pair(field, m, rng);
    UnitMatrixPair a0 = random_unit_matrix_pair(field, m, rng);
    LocalMatrix g = a0.u * direct_sum(z.f(), complement.f()) * a1.uinv;
    MonObject y = MonObject::make(std::move(g), w);
    return MonMorphism::make(y, z, a1.uinv.submatrix(0, 0, z.size(), m),
                             a0.uinv.submatrix(0, 0, z.size(), m));
}

Conflation random_conflation(const OmegaSpec& w, size_t size_bound, Rng& rng) {
    MonObject x = random_object(w, size_bound, rng);
    MonMorphism infl = random_inflation(x, w, size_bound, rng);
    return conflation_from_inflation(infl);
}

namespace {

std::string describe_object(const MonObject& x) {
    return "{omega=" + print_scalar(x.omega().omega) + ", f=" + print_matrix(x.f()) + "}";
}

std::string describe_morphism(const MonMorphism& m) {
    return "{source=" + print_matrix(m.source().f()) + ", target=" + print_matrix(m.target().f()) +
           ", psi1=" + print_matrix(m.psi1()) + ", psi0=" + print_matrix(m.psi0()) + "}";
}

} // namespace

AxiomReport axiom_suite(uint64_t seed, size_t trials, const OmegaSpec& w, size_t size_bound) {
    AxiomReport report;
    report.seed = seed;
    report.trials = trials;
    Rng rng(seed);

    auto flag = [&](size_t trial, const std::string& what, const std::string& detail) {
        report.violations.push_back("trial " + std::to_string(trial) + ": " + what + ": " + detail);
    };

    for (size_t trial = 0; trial < trials; ++trial) {
        MonObject x = random_object(w, size_bound, rng);

        // E0 / E0^op: identities are admissible.
        MonMorphism id = MonMorphism::identity(x);
        if (!is_inflation(id)) flag(trial, "E0", describe_object(x));
        if (!is_deflation(id)) flag(trial, "E0^op", describe_object(x));

        try {
            // E1: inflations compose, and Coker(theta o phi) stays in the category.
            MonMorphism phi = random_inflation(x, w, size_bound, rng);
            MonMorphism theta = random_inflation(phi.target(), w, size_bound, rng);
            MonMorphism comp = compose(theta, phi);
            if (!is_inflation(comp)) flag(trial, "E1 composition not inflation", describe_morphism(comp));
            CokernelData ck = cokernel_of_inflation(comp); // validates Coker in Mon(omega)
            if (!(ck.object.omega() == w)) flag(trial, "E1 cokernel omega", describe_object(ck.object));

            // E1^op: deflations compose.
            MonMorphism d1 = random_deflation_onto(x, w, size_bound, rng);
            MonMorphism d2 = random_deflation_onto(d1.source(), w, size_bound, rng);
            MonMorphism dcomp = compose(d1, d2);
            if (!is_deflation(dcomp))
                flag(trial, "E1^op composition not deflation", describe_morphism(dcomp));
            kernel_of_deflation(dcomp); // validates the kernel object

            // E2: pushout of an inflation along an arbitrary morphism.
            MonObject z = random_object(w, size_bound, rng);
            MonMorphism along = random_morphism(x, z, rng);
            PushoutData po = pushout_inflation(phi, along);
            if (!is_inflation(po.from_along))
                flag(trial, "E2 pushout leg not inflation", describe_morphism(po.from_along));
            if (!(compose(po.from_target, phi) == compose(po.from_along, along)))
                flag(trial, "E2 pushout square", describe_morphism(phi));
            std::vector<long> coker_before = cokernel_of_inflation(phi).object.exponents();
            std::vector<long> coker_after = cokernel_of_inflation(po.from_along).object.exponents();
            if (coker_before != coker_after)
                flag(trial, "E2 cokernel changed under pushout", describe_morphism(phi));

            // E2^op: pullback of a deflation along an arbitrary morphism.
            MonMorphism wmap = random_morphism(z, x, rng);
            PullbackData pb = pullback_deflation(d1, wmap);
            if (!is_deflation(pb.to_along))
                flag(trial, "E2^op pullback leg not deflation", describe_morphism(pb.to_along));
            if (!(compose(d1, pb.to_target) == compose(wmap, pb.to_along)))
                flag(trial, "E2^op pullback square", describe_morphism(d1));

            // Conflations are exact in both components, and the middle term
            // stays in the category (extension closure).
            Conflation conf = conflation_from_inflation(phi);
            for (const std::string& p : conflation_problems(conf))
                flag(trial, "conflation", p + " in " + describe_morphism(phi));

            // Pushout along omega * id splits.
            MonMorphism omega_id = scale(MonMorphism::identity(x), w.omega);
            PushoutData split_po = pushout_inflation(phi, omega_id);
            if (!find_retraction(split_po.from_along))
                flag(trial, "split lemma: no retraction", describe_morphism(split_po.from_along));

            // Projectivity criteria agree: exponents in {0, n} iff the identity
            // is null-homotopic.
            bool by_exponents = is_projective_object(x);
            bool by_homotopy = is_null_homotopic(MonMorphism::identity(x)).has_value();
            if (by_exponents != by_homotopy)
                flag(trial, "projectivity criteria disagree", describe_object(x));
        } catch (const Error& e) {
            flag(trial, "exception", e.what());
        }
    }
    return report;
}

} // namespace monocat
