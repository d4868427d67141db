#include "monocat/mon.hpp"

#include <algorithm>

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

MonObject MonObject::make(LocalMatrix f, OmegaSpec omega) {
    if (!f.is_square())
        raise(errc::not_square, "object matrix is " + std::to_string(f.rows()) + "x" +
                                    std::to_string(f.cols()));
    if (!(f.field() == omega.field()))
        raise(errc::field_mismatch, "object matrix and omega over different fields");
    SnfResult s = snf(f);
    if (s.exponents.size() < f.rows())
        raise(errc::not_injective, "object matrix has zero determinant");
    std::vector<long> exps = s.exponents;
    for (long e : exps)
        if (e > omega.n)
            raise(errc::coker_not_annihilated,
                  "invariant factor x^" + std::to_string(e) + " exceeds omega valuation " +
                      std::to_string(omega.n));
    // f_sigma = omega * f^{-1} = V * diag(omega / x^{a_i}) * U, computed over S.
    LocalMatrix mid(f.field(), f.rows(), f.rows());
    for (size_t i = 0; i < f.rows(); ++i)
        mid.at(i, i) = omega.omega.div(LocalScalar::x_power(f.field(), exps[i]));
    LocalMatrix sig = s.V * mid * s.U;
    return MonObject(std::move(f), std::move(omega), std::move(exps), std::move(sig));
}

MonMorphism MonMorphism::make(MonObject source, MonObject target, LocalMatrix psi1,
                              LocalMatrix psi0) {
    require_same_omega(source.omega(), target.omega());
    if (psi1.rows() != target.size() || psi1.cols() != source.size() ||
        psi0.rows() != target.size() || psi0.cols() != source.size())
        raise(errc::dimension_mismatch, "morphism components must be target-size x source-size");
    LocalMatrix residual = psi0 * source.f() - target.f() * psi1;
    if (!residual.is_zero())
        raise(errc::square_not_commuting, "psi0*f - f'*psi1 = " + print_matrix(residual));
    return MonMorphism(std::move(source), std::move(target), std::move(psi1), std::move(psi0));
}

MonMorphism MonMorphism::identity(const MonObject& x) {
    LocalMatrix id = LocalMatrix::identity(x.field(), x.size());
    return MonMorphism(x, x, id, id);
}

MonMorphism MonMorphism::zero(const MonObject& source, const MonObject& target) {
    require_same_omega(source.omega(), target.omega());
    LocalMatrix z(source.field(), target.size(), source.size());
    return MonMorphism(source, target, z, z);
}

MonMorphism compose(const MonMorphism& g, const MonMorphism& f) {
    if (!(f.target() == g.source()))
        raise(errc::dimension_mismatch, "composition endpoints do not match");
    return MonMorphism::make(f.source(), g.target(), g.psi1() * f.psi1(), g.psi0() * f.psi0());
}

MonMorphism operator+(const MonMorphism& a, const MonMorphism& b) {
    if (!(a.source() == b.source()) || !(a.target() == b.target()))
        raise(errc::dimension_mismatch, "sum of morphisms with different endpoints");
    return MonMorphism::make(a.source(), a.target(), a.psi1() + b.psi1(), a.psi0() + b.psi0());
}

MonMorphism scale(const MonMorphism& m, const LocalScalar& c) {
    return MonMorphism::make(m.source(), m.target(), m.psi1().scaled(c), m.psi0().scaled(c));
}

MonObject direct_sum(const MonObject& x, const MonObject& y) {
    require_same_omega(x.omega(), y.omega());
    return MonObject::make(direct_sum(x.f(), y.f()), x.omega());
}

DirectSumData direct_sum_full(const MonObject& x, const MonObject& y) {
    MonObject s = direct_sum(x, y);
    const FieldSpec field = x.field();
    const size_t mx = x.size(), my = y.size();
    LocalMatrix ix(field, mx + my, mx), iy(field, mx + my, my);
    LocalMatrix px(field, mx, mx + my), py(field, my, mx + my);
    for (size_t i = 0; i < mx; ++i) {
        ix.at(i, i) = LocalScalar::one(field);
        px.at(i, i) = LocalScalar::one(field);
    }
    for (size_t i = 0; i < my; ++i) {
        iy.at(mx + i, i) = LocalScalar::one(field);
        py.at(i, mx + i) = LocalScalar::one(field);
    }
    return DirectSumData{s, MonMorphism::make(x, s, ix, ix), MonMorphism::make(y, s, iy, iy),
                         MonMorphism::make(s, x, px, px), MonMorphism::make(s, y, py, py)};
}

MonObject standard_projective(size_t rank_id, size_t rank_omega, const OmegaSpec& w) {
    LocalMatrix f = direct_sum(LocalMatrix::identity(w.field(), rank_id),
                               LocalMatrix::scalar_matrix(w.omega, rank_omega));
    return MonObject::make(f, w);
}

std::optional<HomotopyWitness> is_null_homotopic(const MonMorphism& m) {
    const MonObject& x = m.source();
    const MonObject& y = m.target();
    const OmegaSpec& w = x.omega();
    // Solve f'*s0*f = psi0*f (mod omega) for s0, then s1 exactly.
    LocalMatrix a = kronecker(x.f().transpose(), y.f());
    LocalMatrix b = vec_col_major(m.psi0() * x.f());
    auto sol = solve_mod_omega(a, b, w);
    if (!sol) return std::nullopt;
    LocalMatrix s0 = unvec_col_major(sol->x, y.size(), x.size());
    LocalMatrix num = m.psi0() * x.f() - y.f() * s0 * x.f();
    LocalMatrix s1(x.field(), y.size(), x.size());
    for (size_t i = 0; i < s1.rows(); ++i)
        for (size_t j = 0; j < s1.cols(); ++j) s1.at(i, j) = num.at(i, j).div(w.omega);
    return HomotopyWitness{std::move(s1), std::move(s0)};
}

bool is_projective_object(const MonObject& x) {
    const long n = x.omega().n;
    return std::all_of(x.exponents().begin(), x.exponents().end(),
                       [n](long e) { return e == 0 || e == n; });
}

namespace {

bool unit_exponents(const std::vector<long>& exps, size_t expected) {
    return exps.size() == expected &&
           std::all_of(exps.begin(), exps.end(), [](long e) { return e == 0; });
}

// Basis of ker(f) as columns, or nullopt when f is not surjective over S.
std::optional<LocalMatrix> surjective_kernel_basis(const LocalMatrix& f) {
    SnfResult s = snf(f);
    if (!unit_exponents(s.exponents, f.rows())) return std::nullopt;
    return s.V.submatrix(0, f.rows(), f.cols(), f.cols() - f.rows());
}

// Quotient map q with ker q = im f, or nullopt when f is not split injective.
std::optional<LocalMatrix> split_injective_quotient(const LocalMatrix& f) {
    SnfResult s = snf(f);
    if (!unit_exponents(s.exponents, f.cols())) return std::nullopt;
    return s.U.submatrix(f.cols(), 0, f.rows() - f.cols(), f.rows());
}

bool component_is_surjective(const LocalMatrix& f) {
    return unit_exponents(snf(f).exponents, f.rows());
}

bool component_is_split_injective(const LocalMatrix& f) {
    return unit_exponents(snf(f).exponents, f.cols());
}

LocalMatrix kernel_basis(const LocalMatrix& f) {
    auto b = surjective_kernel_basis(f);
    if (!b) raise(errc::not_deflation, "component is not surjective over S");
    return *b;
}

LocalMatrix solve_or_die(const LocalMatrix& a, const LocalMatrix& b, const char* what) {
    auto sol = solve_linear(a, b);
    if (!sol) raise(errc::bad_input, std::string("internal: unsolvable system in ") + what);
    return *sol;
}

// Unique m with m*q = rhs for a split epi q (solved via transposes).
LocalMatrix solve_through_epi(const LocalMatrix& q, const LocalMatrix& rhs, const char* what) {
    return solve_or_die(q.transpose(), rhs.transpose(), what).transpose();
}

} // namespace

bool is_inflation(const MonMorphism& m) {
    return component_is_split_injective(m.psi1()) && component_is_split_injective(m.psi0());
}

bool is_deflation(const MonMorphism& m) {
    return component_is_surjective(m.psi1()) && component_is_surjective(m.psi0());
}

KernelData kernel_of_deflation(const MonMorphism& d) {
    auto b1 = surjective_kernel_basis(d.psi1());
    auto b0 = surjective_kernel_basis(d.psi0());
    if (!b1 || !b0) raise(errc::not_deflation, "components are not surjective over S");
    const MonObject& y = d.source();
    // Induced map on kernels: b0 * l = f_Y * b1.
    LocalMatrix l = solve_or_die(*b0, y.f() * *b1, "kernel_of_deflation");
    MonObject k = MonObject::make(std::move(l), y.omega());
    MonMorphism incl = MonMorphism::make(k, y, std::move(*b1), std::move(*b0));
    return KernelData{std::move(k), std::move(incl)};
}

CokernelData cokernel_of_inflation(const MonMorphism& i) {
    auto q1 = split_injective_quotient(i.psi1());
    auto q0 = split_injective_quotient(i.psi0());
    if (!q1 || !q0) raise(errc::not_inflation, "components are not split injective over S");
    const MonObject& y = i.target();
    // Induced map on cokernels: l * q1 = q0 * f_Y.
    LocalMatrix l = solve_through_epi(*q1, *q0 * y.f(), "cokernel_of_inflation");
    MonObject c = MonObject::make(std::move(l), y.omega());
    MonMorphism proj = MonMorphism::make(y, c, std::move(*q1), std::move(*q0));
    return CokernelData{std::move(c), std::move(proj)};
}

Conflation conflation_from_inflation(const MonMorphism& i) {
    CokernelData c = cokernel_of_inflation(i);
    return Conflation{i.source(), i.target(), c.object, i, c.projection};
}

Conflation projective_presentation(const MonObject& x) {
    const FieldSpec field = x.field();
    const size_t m = x.size();
    MonObject p = standard_projective(m, m, x.omega());
    LocalMatrix id = LocalMatrix::identity(field, m);
    // phi1 = [id  f_sigma], phi0 = [f  id]
    MonMorphism defl = MonMorphism::make(p, x, hstack(id, x.sigma()), hstack(x.f(), id));
    KernelData k = kernel_of_deflation(defl);
    return Conflation{k.object, p, x, k.inclusion, defl};
}

Conflation injective_presentation(const MonObject& x) {
    const FieldSpec field = x.field();
    const size_t m = x.size();
    LocalMatrix f = direct_sum(LocalMatrix::scalar_matrix(x.omega().omega, m),
                               LocalMatrix::identity(field, m));
    MonObject mid = MonObject::make(std::move(f), x.omega());
    MonObject c = shift(x);
    LocalMatrix id = LocalMatrix::identity(field, m);
    // i1 = [id  f]^t, i0 = [f_sigma  id]^t, pi1 = [-f  id], pi0 = [id  -f_sigma]
    MonMorphism infl = MonMorphism::make(x, mid, vstack(id, x.f()), vstack(x.sigma(), id));
    MonMorphism defl = MonMorphism::make(mid, c, hstack(-x.f(), id), hstack(id, -x.sigma()));
    return Conflation{x, mid, c, infl, defl};
}

std::vector<std::string> conflation_problems(const Conflation& c) {
    std::vector<std::string> out;
    if (!(c.inflation.source() == c.left) || !(c.inflation.target() == c.middle))
        out.push_back("inflation endpoints inconsistent");
    if (!(c.deflation.source() == c.middle) || !(c.deflation.target() == c.right))
        out.push_back("deflation endpoints inconsistent");
    if (!out.empty()) return out;
    if (c.left.size() + c.right.size() != c.middle.size())
        out.push_back("component ranks do not add up");
    const LocalMatrix comps1 = c.deflation.psi1() * c.inflation.psi1();
    const LocalMatrix comps0 = c.deflation.psi0() * c.inflation.psi0();
    if (!comps1.is_zero() || !comps0.is_zero()) out.push_back("deflation o inflation != 0");
    struct Row {
        const LocalMatrix& i;
        const LocalMatrix& d;
        const char* name;
    };
    const Row rows[2] = {{c.inflation.psi1(), c.deflation.psi1(), "component 1"},
                         {c.inflation.psi0(), c.deflation.psi0(), "component 0"}};
    for (const Row& r : rows) {
        if (!component_is_split_injective(r.i))
            out.push_back(std::string(r.name) + ": inflation not split injective");
        else if (!component_is_surjective(r.d))
            out.push_back(std::string(r.name) + ": deflation not surjective");
        else {
            // ker(d) subseteq im(i); the reverse holds since d o i = 0.
            LocalMatrix kb = kernel_basis(r.d);
            if (!solve_linear(r.i, kb))
                out.push_back(std::string(r.name) + ": kernel of deflation exceeds image of inflation");
        }
    }
    return out;
}

PushoutData pushout_inflation(const MonMorphism& phi, const MonMorphism& theta) {
    if (!(phi.source() == theta.source()))
        raise(errc::dimension_mismatch, "pushout legs must share their source");
    if (!is_inflation(phi)) raise(errc::not_inflation, "first leg is not an inflation");
    const MonObject& y = phi.target();
    const MonObject& z = theta.target();
    const OmegaSpec& w = y.omega();

    // E_j = Coker([phi_j ; -theta_j]), realized by the quotient map q_j.
    auto q1 = split_injective_quotient(vstack(phi.psi1(), -theta.psi1()));
    auto q0 = split_injective_quotient(vstack(phi.psi0(), -theta.psi0()));
    if (!q1 || !q0) raise(errc::not_inflation, "stacked pushout map is not split injective");
    LocalMatrix g = direct_sum(y.f(), z.f());
    LocalMatrix e = solve_through_epi(*q1, *q0 * g, "pushout_inflation");
    MonObject obj = MonObject::make(std::move(e), w);

    const size_t my = y.size(), mz = z.size();
    MonMorphism from_y = MonMorphism::make(y, obj, q1->submatrix(0, 0, q1->rows(), my),
                                           q0->submatrix(0, 0, q0->rows(), my));
    MonMorphism from_z = MonMorphism::make(z, obj, q1->submatrix(0, my, q1->rows(), mz),
                                           q0->submatrix(0, my, q0->rows(), mz));
    return PushoutData{std::move(obj), std::move(from_y), std::move(from_z)};
}

PullbackData pullback_deflation(const MonMorphism& phi, const MonMorphism& theta) {
    if (!(phi.target() == theta.target()))
        raise(errc::dimension_mismatch, "pullback legs must share their target");
    if (!is_deflation(phi)) raise(errc::not_deflation, "first leg is not a deflation");
    const MonObject& y = phi.source();
    const MonObject& wobj = theta.source();
    const OmegaSpec& w = y.omega();

    // E_j = Ker([phi_j  -theta_j]) inside Y_j (+) W_j.
    LocalMatrix t1 = hstack(phi.psi1(), -theta.psi1());
    LocalMatrix t0 = hstack(phi.psi0(), -theta.psi0());
    LocalMatrix b1 = kernel_basis(t1);
    LocalMatrix b0 = kernel_basis(t0);
    LocalMatrix g = direct_sum(y.f(), wobj.f());
    LocalMatrix e = solve_or_die(b0, g * b1, "pullback_deflation");
    MonObject obj = MonObject::make(std::move(e), w);

    const size_t my = y.size(), mw = wobj.size();
    MonMorphism to_y = MonMorphism::make(obj, y, b1.submatrix(0, 0, my, b1.cols()),
                                         b0.submatrix(0, 0, my, b0.cols()));
    MonMorphism to_w = MonMorphism::make(obj, wobj, b1.submatrix(my, 0, mw, b1.cols()),
                                         b0.submatrix(my, 0, mw, b0.cols()));
    return PullbackData{std::move(obj), std::move(to_y), std::move(to_w)};
}

MonObject shift(const MonObject& x) { return MonObject::make(-x.sigma(), x.omega()); }

MappingCone cone(const MonMorphism& m) {
    Conflation ip = injective_presentation(m.source());
    PushoutData po = pushout_inflation(ip.inflation, m);
    const MonObject& c = po.object;
    const MonObject& sx = ip.right; // shift of the source

    // d: C -> shift(X) with d o (I(X)->C) = pi and d o (Y->C) = 0.
    LocalMatrix q1 = hstack(po.from_target.psi1(), po.from_along.psi1());
    LocalMatrix q0 = hstack(po.from_target.psi0(), po.from_along.psi0());
    LocalMatrix z1(m.source().field(), sx.size(), m.target().size());
    LocalMatrix d1 = solve_through_epi(q1, hstack(ip.deflation.psi1(), z1), "cone");
    LocalMatrix d0 = solve_through_epi(q0, hstack(ip.deflation.psi0(), z1), "cone");
    MonMorphism to_shift = MonMorphism::make(c, sx, std::move(d1), std::move(d0));
    return MappingCone{po.object, po.from_along, std::move(to_shift)};
}

std::optional<MonMorphism> find_retraction(const MonMorphism& inflation) {
    if (!is_inflation(inflation)) raise(errc::not_inflation, "not an inflation");
    const MonObject& z = inflation.source();
    const MonObject& e = inflation.target();
    CokernelData ck = cokernel_of_inflation(inflation);
    const MonObject& l = ck.object;
    const FieldSpec field = z.field();

    // Particular componentwise retractions r0_j from SNF of the inclusion.
    auto particular = [&](const LocalMatrix& inc) {
        SnfResult s = snf(inc);
        LocalMatrix sel(field, inc.cols(), inc.rows());
        for (size_t i = 0; i < inc.cols(); ++i) sel.at(i, i) = LocalScalar::one(field);
        return s.V * sel * s.U;
    };
    LocalMatrix r1p = particular(inflation.psi1());
    LocalMatrix r0p = particular(inflation.psi0());

    // General retraction r_j = rp_j + C_j q_j; the morphism condition becomes
    // C0 f_L - f_Z C1 = RHS' where RHS = f_Z rp_1 - rp_0 f_E factors through q1.
    LocalMatrix rhs = z.f() * r1p - r0p * e.f();
    LocalMatrix rhs_p = solve_through_epi(ck.projection.psi1(), rhs, "find_retraction");
    const size_t mz = z.size(), ml = l.size();
    LocalMatrix a = hstack(kronecker(l.f().transpose(), LocalMatrix::identity(field, mz)),
                           -kronecker(LocalMatrix::identity(field, ml), z.f()));
    auto sol = solve_linear(a, vec_col_major(rhs_p));
    if (!sol) return std::nullopt;
    LocalMatrix c0 = unvec_col_major(sol->submatrix(0, 0, mz * ml, 1), mz, ml);
    LocalMatrix c1 = unvec_col_major(sol->submatrix(mz * ml, 0, mz * ml, 1), mz, ml);
    LocalMatrix r1 = r1p + c1 * ck.projection.psi1();
    LocalMatrix r0 = r0p + c0 * ck.projection.psi0();
    return MonMorphism::make(e, z, std::move(r1), std::move(r0));
}

std::optional<MonMorphism> find_section(const MonMorphism& deflation) {
    if (!is_deflation(deflation)) raise(errc::not_deflation, "not a deflation");
    const MonObject& e = deflation.source();
    const MonObject& z = deflation.target();
    KernelData kn = kernel_of_deflation(deflation);
    const MonObject& k = kn.object;
    const FieldSpec field = z.field();

    auto particular = [&](const LocalMatrix& d) {
        SnfResult s = snf(d);
        LocalMatrix sel(field, d.cols(), d.rows());
        for (size_t i = 0; i < d.rows(); ++i) sel.at(i, i) = LocalScalar::one(field);
        return s.V * sel * s.U;
    };
    LocalMatrix s1p = particular(deflation.psi1());
    LocalMatrix s0p = particular(deflation.psi0());

    // General section s_j = sp_j + b_j C_j; condition C0 f_Z - f_K C1 = RHS'
    // where b0 * RHS' = f_E sp_1 - sp_0 f_Z.
    LocalMatrix rhs = e.f() * s1p - s0p * z.f();
    LocalMatrix rhs_p = solve_or_die(kn.inclusion.psi0(), rhs, "find_section");
    const size_t mz = z.size(), mk = k.size();
    LocalMatrix a = hstack(kronecker(z.f().transpose(), LocalMatrix::identity(field, mk)),
                           -kronecker(LocalMatrix::identity(field, mz), k.f()));
    auto sol = solve_linear(a, vec_col_major(rhs_p));
    if (!sol) return std::nullopt;
    LocalMatrix c0 = unvec_col_major(sol->submatrix(0, 0, mk * mz, 1), mk, mz);
    LocalMatrix c1 = unvec_col_major(sol->submatrix(mk * mz, 0, mk * mz, 1), mk, mz);
    LocalMatrix s1 = s1p + kn.inclusion.psi1() * c1;
    LocalMatrix s0 = s0p + kn.inclusion.psi0() * c0;
    return MonMorphism::make(z, e, std::move(s1), std::move(s0));
}

namespace {

struct TruncatedObject {
    std::vector<Poly> f, fs; // entries of f and f_sigma mod x^n, row-major
    size_t m;

    TruncatedObject(const MonObject& x, long n) : m(x.size()) {
        f.reserve(m * m);
        fs.reserve(m * m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                f.push_back(x.f().at(i, j).truncated(n));
                fs.push_back(x.sigma().at(i, j).truncated(n));
            }
    }
};

// Writes the coefficients of p into column `col`, rows [row0, row0+n).
void write_poly(KMatrix& m, size_t row0, size_t col, const Poly& p, long n) {
    for (long t = 0; t < n; ++t) {
        Coeff c = p.coeff(t);
        if (!coeff_is_zero(c)) m.at(row0 + static_cast<size_t>(t), col) = c;
    }
}

// Condition matrix: psi0 (entries deg < n) is a morphism iff
// f'_sigma * psi0 * f = 0 (mod x^n). Unknown layout: ((i,j), t) -> (i*mx+j)*n+t.
KMatrix morphism_condition_matrix(const TruncatedObject& tx, const TruncatedObject& ty, long n,
                                  FieldSpec field) {
    const size_t mx = tx.m, my = ty.m;
    const size_t ncoef = static_cast<size_t>(n);
    const size_t dim = my * mx * ncoef;
    KMatrix out(field, dim, dim);
    for (size_t r = 0; r < my; ++r)
        for (size_t c = 0; c < mx; ++c)
            for (long t = 0; t < n; ++t) {
                size_t col = (r * mx + c) * ncoef + static_cast<size_t>(t);
                // (f'_sigma E_{rc} x^t f)(i,j) = fs'(i,r) * x^t * f(c,j)
                for (size_t i = 0; i < my; ++i) {
                    const Poly& a = ty.fs[i * my + r];
                    if (a.is_zero()) continue;
                    for (size_t j = 0; j < mx; ++j) {
                        const Poly& b = tx.f[c * mx + j];
                        if (b.is_zero()) continue;
                        Poly prod = (a * b).shifted(t).truncated(n);
                        if (prod.is_zero()) continue;
                        write_poly(out, (i * mx + j) * ncoef, col, prod, n);
                    }
                }
            }
    return out;
}

// Null-homotopy image: psi0 = f' s0 + s1 f_sigma(X) mod x^n over unknowns s0, s1.
KMatrix null_image_matrix(const TruncatedObject& tx, const TruncatedObject& ty, long n,
                          FieldSpec field) {
    const size_t mx = tx.m, my = ty.m;
    const size_t ncoef = static_cast<size_t>(n);
    const size_t dim = my * mx * ncoef;
    KMatrix out(field, dim, 2 * dim);
    for (size_t r = 0; r < my; ++r)
        for (size_t c = 0; c < mx; ++c)
            for (long t = 0; t < n; ++t) {
                size_t col = (r * mx + c) * ncoef + static_cast<size_t>(t);
                // s0 basis element E_{rc} x^t: psi0 = f' E x^t, so (i,c) entries.
                for (size_t i = 0; i < my; ++i) {
                    const Poly& a = ty.f[i * my + r];
                    if (a.is_zero()) continue;
                    Poly prod = a.shifted(t).truncated(n);
                    if (!prod.is_zero()) write_poly(out, (i * mx + c) * ncoef, col, prod, n);
                }
                // s1 basis element E_{rc} x^t: psi0 = E x^t f_sigma(X), so (r,j) entries.
                for (size_t j = 0; j < mx; ++j) {
                    const Poly& b = tx.fs[c * mx + j];
                    if (b.is_zero()) continue;
                    Poly prod = b.shifted(t).truncated(n);
                    if (!prod.is_zero()) write_poly(out, (r * mx + j) * ncoef, dim + col, prod, n);
                }
            }
    return out;
}

} // namespace

size_t stable_hom_dimension(const MonObject& x, const MonObject& y, bool gorenstein) {
    (void)gorenstein; // Mon(omega, G) = Mon(omega, P) on the DVR backend
    require_same_omega(x.omega(), y.omega());
    const long n = x.omega().n;
    const size_t dim = y.size() * x.size() * static_cast<size_t>(n);
    if (dim == 0) return 0;
    TruncatedObject tx(x, n), ty(y, n);
    size_t hom = dim - k_rank(morphism_condition_matrix(tx, ty, n, x.field()));
    size_t null = k_rank(null_image_matrix(tx, ty, n, x.field()));
    return hom - null;
}

std::vector<LocalMatrix> morphism_space_representatives(const MonObject& x, const MonObject& y) {
    require_same_omega(x.omega(), y.omega());
    const long n = x.omega().n;
    const size_t mx = x.size(), my = y.size();
    const size_t ncoef = static_cast<size_t>(n);
    std::vector<LocalMatrix> out;
    if (mx * my == 0) return out;
    const FieldSpec field = x.field();
    TruncatedObject tx(x, n), ty(y, n);
    auto basis = k_nullspace(morphism_condition_matrix(tx, ty, n, field));
    for (const auto& v : basis) {
        LocalMatrix psi0(field, my, mx);
        for (size_t i = 0; i < my; ++i)
            for (size_t j = 0; j < mx; ++j) {
                std::vector<Coeff> cs(ncoef, Coeff(0));
                for (size_t t = 0; t < ncoef; ++t) cs[t] = v[(i * mx + j) * ncoef + t];
                psi0.at(i, j) = LocalScalar::of(Poly::from_coeffs(field, std::move(cs)));
            }
        out.push_back(std::move(psi0));
    }
    return out;
}

} // namespace monocat
