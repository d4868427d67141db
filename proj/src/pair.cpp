#include "monocat/pair.hpp"

#include "monocat/kspace.hpp"
#include "monocat/text.hpp"

namespace monocat {

namespace {

void require_same_omega(const OmegaSpec& a, const OmegaSpec& b) {
    if (!(a == b))
        raise(errc::omega_mismatch,
              "omega " + print_scalar(a.omega) + " vs " + print_scalar(b.omega));
}

} // namespace

PairObject PairObject::make(LocalMatrix rho1, LocalMatrix rho0, OmegaSpec omega) {
    if (!rho1.is_square() || !rho0.is_square())
        raise(errc::not_square, "pair matrices must be square");
    if (rho1.rows() != rho0.rows())
        raise(errc::dimension_mismatch, "pair matrices must have equal size");
    LocalMatrix wi = LocalMatrix::scalar_matrix(omega.omega, rho1.rows());
    LocalMatrix r10 = rho1 * rho0 - wi;
    LocalMatrix r01 = rho0 * rho1 - wi;
    if (!r10.is_zero())
        raise(errc::product_not_omega, "rho1*rho0 - omega*I = " + print_matrix(r10));
    if (!r01.is_zero())
        raise(errc::product_not_omega, "rho0*rho1 - omega*I = " + print_matrix(r01));
    return PairObject(std::move(rho1), std::move(rho0), std::move(omega));
}

PairMorphism PairMorphism::make(PairObject source, PairObject target, LocalMatrix psi1,
                                LocalMatrix psi0) {
    require_same_omega(source.omega(), target.omega());
    if (psi1.rows() != target.size() || psi1.cols() != source.size() ||
        psi0.rows() != target.size() || psi0.cols() != source.size())
        raise(errc::dimension_mismatch, "morphism components must be target-size x source-size");
    LocalMatrix r1 = target.rho1() * psi1 - psi0 * source.rho1();
    LocalMatrix r0 = psi1 * source.rho0() - target.rho0() * psi0;
    if (!r1.is_zero()) raise(errc::square_not_commuting, "q1*psi1 - psi0*rho1 = " + print_matrix(r1));
    if (!r0.is_zero()) raise(errc::square_not_commuting, "psi1*rho0 - q0*psi0 = " + print_matrix(r0));
    return PairMorphism(std::move(source), std::move(target), std::move(psi1), std::move(psi0));
}

PairMorphism PairMorphism::identity(const PairObject& p) {
    LocalMatrix id = LocalMatrix::identity(p.field(), p.size());
    return PairMorphism(p, p, id, id);
}

PairMorphism PairMorphism::zero(const PairObject& source, const PairObject& target) {
    require_same_omega(source.omega(), target.omega());
    LocalMatrix z(source.field(), target.size(), source.size());
    return PairMorphism(source, target, z, z);
}

PairMorphism compose(const PairMorphism& g, const PairMorphism& f) {
    if (!(f.target() == g.source()))
        raise(errc::dimension_mismatch, "composition endpoints do not match");
    return PairMorphism::make(f.source(), g.target(), g.psi1() * f.psi1(), g.psi0() * f.psi0());
}

PairObject pair_direct_sum(const PairObject& a, const PairObject& b) {
    require_same_omega(a.omega(), b.omega());
    return PairObject::make(direct_sum(a.rho1(), b.rho1()), direct_sum(a.rho0(), b.rho0()),
                            a.omega());
}

PairObject functor_F(const MonObject& x) {
    return PairObject::make(x.f(), x.sigma(), x.omega());
}

PairMorphism functor_F(const MonMorphism& m) {
    return PairMorphism::make(functor_F(m.source()), functor_F(m.target()), m.psi1(), m.psi0());
}

MonObject functor_F_inverse(const PairObject& p) {
    return MonObject::make(p.rho1(), p.omega());
}

MonMorphism functor_F_inverse(const PairMorphism& m) {
    return MonMorphism::make(functor_F_inverse(m.source()), functor_F_inverse(m.target()),
                             m.psi1(), m.psi0());
}

std::optional<PairHomotopyWitness> pair_is_null_homotopic(const PairMorphism& m) {
    const PairObject& p = m.source();
    const PairObject& q = m.target();
    const FieldSpec field = p.field();
    const size_t mp = p.size(), mq = q.size();
    // One S-linear system in (s0, s1):
    //   q1*s0 + s1*rho0 = psi0
    //   s0*rho1 + q0*s1 = psi1
    LocalMatrix imp = LocalMatrix::identity(field, mp);
    LocalMatrix imq = LocalMatrix::identity(field, mq);
    LocalMatrix a = vstack(hstack(kronecker(imp, q.rho1()), kronecker(p.rho0().transpose(), imq)),
                           hstack(kronecker(p.rho1().transpose(), imq), kronecker(imp, q.rho0())));
    LocalMatrix b = vstack(vec_col_major(m.psi0()), vec_col_major(m.psi1()));
    auto sol = solve_linear(a, b);
    if (!sol) return std::nullopt;
    const size_t block = mq * mp;
    LocalMatrix s0 = unvec_col_major(sol->submatrix(0, 0, block, 1), mq, mp);
    LocalMatrix s1 = unvec_col_major(sol->submatrix(block, 0, block, 1), mq, mp);
    return PairHomotopyWitness{std::move(s0), std::move(s1)};
}

PairObject pair_shift(const PairObject& p) {
    return PairObject::make(-p.rho0(), -p.rho1(), p.omega());
}

PairMappingCone pair_cone(const PairMorphism& m) {
    MappingCone mc = cone(functor_F_inverse(m));
    return PairMappingCone{functor_F(mc.object), functor_F(mc.from_target),
                           functor_F(mc.to_shifted_source)};
}

std::vector<long> pair_decompose(const PairObject& p) {
    return snf(p.rho1()).exponents;
}

size_t pair_stable_hom_dimension(const PairObject& p, const PairObject& q) {
    require_same_omega(p.omega(), q.omega());
    const long n = p.omega().n;
    const size_t mp = p.size(), mq = q.size();
    const size_t ncoef = static_cast<size_t>(n);
    const size_t block = mq * mp * ncoef; // coefficient space of one component
    if (block == 0) return 0;
    const FieldSpec field = p.field();

    // Truncations mod x^n of all four structure matrices.
    auto trunc = [&](const LocalMatrix& m) {
        std::vector<Poly> out;
        out.reserve(m.rows() * m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j).truncated(n));
        return out;
    };
    std::vector<Poly> r1 = trunc(p.rho1()), r0 = trunc(p.rho0());
    std::vector<Poly> q1 = trunc(q.rho1()), q0 = trunc(q.rho0());

    auto write_poly = [&](KMatrix& m, size_t row0, size_t col, const Poly& poly) {
        for (long t = 0; t < n; ++t) {
            Coeff c = poly.coeff(t);
            if (!coeff_is_zero(c)) m.at(row0 + static_cast<size_t>(t), col) = c;
        }
    };
    auto entry = [&](const std::vector<Poly>& mat, size_t cols, size_t i, size_t j) -> const Poly& {
        return mat[i * cols + j];
    };
    // Unknown layout: psi1 coefficients first, then psi0; each (i*mp+j)*n+t.
    auto idx = [&](size_t i, size_t j, long t) { return (i * mp + j) * ncoef + static_cast<size_t>(t); };

    // Conditions: q1*psi1 - psi0*rho1 = 0 and psi1*rho0 - q0*psi0 = 0 (mod x^n).
    KMatrix cond(field, 2 * block, 2 * block);
    for (size_t r = 0; r < mq; ++r)
        for (size_t c = 0; c < mp; ++c)
            for (long t = 0; t < n; ++t) {
                size_t col1 = idx(r, c, t);         // psi1 basis element
                size_t col0 = block + idx(r, c, t); // psi0 basis element
                for (size_t i = 0; i < mq; ++i) {
                    const Poly& a = entry(q1, mq, i, r);
                    if (!a.is_zero())
                        write_poly(cond, idx(i, c, 0), col1, a.shifted(t).truncated(n));
                    const Poly& b = entry(q0, mq, i, r);
                    if (!b.is_zero())
                        write_poly(cond, block + idx(i, c, 0), col0,
                                   (-b.shifted(t)).truncated(n));
                }
                for (size_t j = 0; j < mp; ++j) {
                    const Poly& a = entry(r1, mp, c, j);
                    if (!a.is_zero())
                        write_poly(cond, idx(r, j, 0), col0, (-a.shifted(t)).truncated(n));
                    const Poly& b = entry(r0, mp, c, j);
                    if (!b.is_zero())
                        write_poly(cond, block + idx(r, j, 0), col1, b.shifted(t).truncated(n));
                }
            }
    // Row blocks: rows [0, block) hold condition q1*psi1 - psi0*rho1,
    // rows [block, 2*block) hold condition psi1*rho0 - q0*psi0.
    // (psi0*rho1)(i,j) = sum_c psi0(i,c) rho1(c,j): written above under col0.

    size_t hom = 2 * block - k_rank(cond);

    // Null image: (psi1, psi0) = (s0*rho1 + q0*s1, q1*s0 + s1*rho0).
    KMatrix null(field, 2 * block, 2 * block);
    for (size_t r = 0; r < mq; ++r)
        for (size_t c = 0; c < mp; ++c)
            for (long t = 0; t < n; ++t) {
                size_t cols0 = idx(r, c, t);         // s0 basis element E_{rc} x^t
                size_t cols1 = block + idx(r, c, t); // s1 basis element
                // psi1 += (E x^t)*rho1 : row block [0, block)
                for (size_t j = 0; j < mp; ++j) {
                    const Poly& a = entry(r1, mp, c, j);
                    if (!a.is_zero()) write_poly(null, idx(r, j, 0), cols0, a.shifted(t).truncated(n));
                }
                // psi1 += q0*(E x^t)
                for (size_t i = 0; i < mq; ++i) {
                    const Poly& a = entry(q0, mq, i, r);
                    if (!a.is_zero()) write_poly(null, idx(i, c, 0), cols1, a.shifted(t).truncated(n));
                }
                // psi0 += q1*(E x^t) : row block [block, 2*block)
                for (size_t i = 0; i < mq; ++i) {
                    const Poly& a = entry(q1, mq, i, r);
                    if (!a.is_zero())
                        write_poly(null, block + idx(i, c, 0), cols0, a.shifted(t).truncated(n));
                }
                // psi0 += (E x^t)*rho0
                for (size_t j = 0; j < mp; ++j) {
                    const Poly& a = entry(r0, mp, c, j);
                    if (!a.is_zero())
                        write_poly(null, block + idx(r, j, 0), cols1, a.shifted(t).truncated(n));
                }
            }
    size_t nul = k_rank(null);
    return hom - nul;
}

} // namespace monocat
