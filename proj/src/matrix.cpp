#include "monocat/matrix.hpp"

#include <algorithm>

namespace monocat {

namespace {

void require_same_field(const LocalMatrix& a, const LocalMatrix& b) {
    if (!(a.field() == b.field()))
        raise(errc::field_mismatch, "matrices over different coefficient fields");
}

std::string shape(const LocalMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

LocalMatrix LocalMatrix::identity(FieldSpec field, size_t n) {
    LocalMatrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = LocalScalar::one(field);
    return m;
}

LocalMatrix LocalMatrix::scalar_matrix(const LocalScalar& s, size_t n) {
    LocalMatrix m(s.field(), n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

LocalMatrix LocalMatrix::diagonal(FieldSpec field, const std::vector<LocalScalar>& diag) {
    LocalMatrix m(field, diag.size(), diag.size());
    for (size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
    return m;
}

LocalMatrix LocalMatrix::x_power_diagonal(FieldSpec field, const std::vector<long>& exponents) {
    LocalMatrix m(field, exponents.size(), exponents.size());
    for (size_t i = 0; i < exponents.size(); ++i) m.at(i, i) = LocalScalar::x_power(field, exponents[i]);
    return m;
}

LocalMatrix LocalMatrix::operator+(const LocalMatrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        raise(errc::dimension_mismatch, "add " + shape(*this) + " vs " + shape(o));
    LocalMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

LocalMatrix LocalMatrix::operator-(const LocalMatrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        raise(errc::dimension_mismatch, "sub " + shape(*this) + " vs " + shape(o));
    LocalMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

LocalMatrix LocalMatrix::operator*(const LocalMatrix& o) const {
    require_same_field(*this, o);
    if (cols_ != o.rows_)
        raise(errc::dimension_mismatch, "mul " + shape(*this) + " vs " + shape(o));
    LocalMatrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const LocalScalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const LocalScalar& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + aik * bkj;
            }
        }
    return r;
}

LocalMatrix LocalMatrix::operator-() const {
    LocalMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

LocalMatrix LocalMatrix::scaled(const LocalScalar& s) const {
    LocalMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

LocalMatrix LocalMatrix::transpose() const {
    LocalMatrix r(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool LocalMatrix::operator==(const LocalMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool LocalMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const LocalScalar& s) { return s.is_zero(); });
}

LocalMatrix LocalMatrix::submatrix(size_t i0, size_t j0, size_t nrows, size_t ncols) const {
    LocalMatrix r(field_, nrows, ncols);
    for (size_t i = 0; i < nrows; ++i)
        for (size_t j = 0; j < ncols; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

LocalMatrix direct_sum(const LocalMatrix& a, const LocalMatrix& b) {
    require_same_field(a, b);
    LocalMatrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

LocalMatrix hstack(const LocalMatrix& a, const LocalMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) raise(errc::dimension_mismatch, "hstack row counts differ");
    LocalMatrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

LocalMatrix vstack(const LocalMatrix& a, const LocalMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) raise(errc::dimension_mismatch, "vstack column counts differ");
    LocalMatrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

LocalMatrix kronecker(const LocalMatrix& a, const LocalMatrix& b) {
    require_same_field(a, b);
    LocalMatrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

LocalMatrix vec_col_major(const LocalMatrix& m) {
    LocalMatrix r(m.field(), m.rows() * m.cols(), 1);
    for (size_t j = 0; j < m.cols(); ++j)
        for (size_t i = 0; i < m.rows(); ++i) r.at(j * m.rows() + i, 0) = m.at(i, j);
    return r;
}

LocalMatrix unvec_col_major(const LocalMatrix& v, size_t rows, size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols)
        raise(errc::dimension_mismatch, "unvec of " + shape(v) + " into " + std::to_string(rows) + "x" +
                                            std::to_string(cols));
    LocalMatrix r(v.field(), rows, cols);
    for (size_t j = 0; j < cols; ++j)
        for (size_t i = 0; i < rows; ++i) r.at(i, j) = v.at(j * rows + i, 0);
    return r;
}

namespace {

// SNF working state with unit-determinant bookkeeping for det().
struct SnfCore {
    LocalMatrix U, D, V;
    LocalScalar det_u, det_v; // units of S
    std::vector<long> exponents;

    explicit SnfCore(const LocalMatrix& a)
        : U(LocalMatrix::identity(a.field(), a.rows())),
          D(a),
          V(LocalMatrix::identity(a.field(), a.cols())),
          det_u(LocalScalar::one(a.field())),
          det_v(LocalScalar::one(a.field())) {}
};

void swap_rows(LocalMatrix& m, size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < m.cols(); ++k) std::swap(m.at(i, k), m.at(j, k));
}

void swap_cols(LocalMatrix& m, size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < m.rows(); ++k) std::swap(m.at(k, i), m.at(k, j));
}

// row_i -= f * row_t
void row_axpy(LocalMatrix& m, size_t i, size_t t, const LocalScalar& f) {
    for (size_t k = 0; k < m.cols(); ++k) {
        if (m.at(t, k).is_zero()) continue;
        m.at(i, k) = m.at(i, k) - f * m.at(t, k);
    }
}

void col_axpy(LocalMatrix& m, size_t j, size_t t, const LocalScalar& f) {
    for (size_t k = 0; k < m.rows(); ++k) {
        if (m.at(k, t).is_zero()) continue;
        m.at(k, j) = m.at(k, j) - f * m.at(k, t);
    }
}

SnfCore snf_core(const LocalMatrix& a) {
    SnfCore s(a);
    const FieldSpec field = a.field();
    const size_t steps = std::min(a.rows(), a.cols());

    for (size_t t = 0; t < steps; ++t) {
        // Pivot: entry of minimal valuation in the remaining block, row-major ties.
        long best = -1;
        size_t pi = 0, pj = 0;
        for (size_t i = t; i < a.rows(); ++i)
            for (size_t j = t; j < a.cols(); ++j) {
                auto v = s.D.at(i, j).valuation();
                if (!v) continue;
                if (best < 0 || *v < best) {
                    best = *v;
                    pi = i;
                    pj = j;
                }
            }
        if (best < 0) break; // remaining block is zero

        if (pi != t) {
            swap_rows(s.D, t, pi);
            swap_rows(s.U, t, pi);
            s.det_u = -s.det_u;
        }
        if (pj != t) {
            swap_cols(s.D, t, pj);
            swap_cols(s.V, t, pj);
            s.det_v = -s.det_v;
        }

        // Scale the pivot row so the pivot becomes the literal monomial x^best.
        LocalScalar unit = s.D.at(t, t).div(LocalScalar::x_power(field, best));
        if (!unit.is_one()) {
            LocalScalar inv = unit.inverse();
            for (size_t k = 0; k < a.cols(); ++k)
                if (!s.D.at(t, k).is_zero()) s.D.at(t, k) = s.D.at(t, k) * inv;
            for (size_t k = 0; k < a.rows(); ++k)
                if (!s.U.at(t, k).is_zero()) s.U.at(t, k) = s.U.at(t, k) * inv;
            s.det_u = s.det_u * inv;
        }

        const LocalScalar pivot = s.D.at(t, t);
        for (size_t i = t + 1; i < a.rows(); ++i) {
            if (s.D.at(i, t).is_zero()) continue;
            LocalScalar f = s.D.at(i, t).div(pivot); // exact: pivot has minimal valuation
            row_axpy(s.D, i, t, f);
            row_axpy(s.U, i, t, f);
        }
        for (size_t j = t + 1; j < a.cols(); ++j) {
            if (s.D.at(t, j).is_zero()) continue;
            LocalScalar f = s.D.at(t, j).div(pivot);
            col_axpy(s.D, j, t, f);
            col_axpy(s.V, j, t, f);
        }
        s.exponents.push_back(best);
    }
    return s;
}

} // namespace

SnfResult snf(const LocalMatrix& a) {
    SnfCore s = snf_core(a);
    return SnfResult{std::move(s.U), std::move(s.D), std::move(s.V), std::move(s.exponents)};
}

size_t rank(const LocalMatrix& a) { return snf_core(a).exponents.size(); }

LocalScalar det(const LocalMatrix& a) {
    if (!a.is_square()) raise(errc::dimension_mismatch, "det of non-square " + shape(a));
    SnfCore s = snf_core(a);
    if (s.exponents.size() < a.rows()) return LocalScalar::zero(a.field());
    // U*A*V = D  =>  det(A) = det(D) / (det(U) det(V)), both unit determinants.
    long total = 0;
    for (long e : s.exponents) total += e;
    LocalScalar d = LocalScalar::x_power(a.field(), total);
    return d.div(s.det_u * s.det_v);
}

LocalMatrix invert(const LocalMatrix& a) {
    if (!a.is_square()) raise(errc::dimension_mismatch, "invert of non-square " + shape(a));
    SnfCore s = snf_core(a);
    bool unit_det = s.exponents.size() == a.rows() &&
                    std::all_of(s.exponents.begin(), s.exponents.end(), [](long e) { return e == 0; });
    if (!unit_det) raise(errc::not_invertible_over_s, "determinant is a non-unit of S");
    return s.V * s.U; // D = I, so A^{-1} = V U
}

std::optional<LocalMatrix> solve_linear(const LocalMatrix& a, const LocalMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows())
        raise(errc::dimension_mismatch, "solve " + shape(a) + " vs rhs " + shape(b));
    SnfCore s = snf_core(a);
    LocalMatrix c = s.U * b;
    LocalMatrix y(a.field(), a.cols(), b.cols());
    const size_t r = s.exponents.size();
    for (size_t i = 0; i < a.rows(); ++i) {
        if (i < r) {
            LocalScalar d = s.D.at(i, i);
            for (size_t j = 0; j < b.cols(); ++j) {
                if (c.at(i, j).is_zero()) continue;
                auto vd = d.valuation(), vc = c.at(i, j).valuation();
                if (*vc < *vd) return std::nullopt;
                y.at(i, j) = c.at(i, j).div(d);
            }
        } else {
            for (size_t j = 0; j < b.cols(); ++j)
                if (!c.at(i, j).is_zero()) return std::nullopt;
        }
    }
    return s.V * y;
}

std::optional<ModOmegaSolution> solve_mod_omega(const LocalMatrix& a, const LocalMatrix& b,
                                                const OmegaSpec& w) {
    require_same_field(a, b);
    if (a.rows() != b.rows())
        raise(errc::dimension_mismatch, "solve " + shape(a) + " vs rhs " + shape(b));
    LocalMatrix aug = hstack(a, LocalMatrix::scalar_matrix(w.omega, a.rows()));
    auto sol = solve_linear(aug, b);
    if (!sol) return std::nullopt;
    return ModOmegaSolution{sol->submatrix(0, 0, a.cols(), b.cols()),
                            sol->submatrix(a.cols(), 0, a.rows(), b.cols())};
}

std::vector<long> cokernel_exponents(const LocalMatrix& a) {
    if (!a.is_square()) raise(errc::not_square, "cokernel of non-square " + shape(a));
    SnfCore s = snf_core(a);
    if (s.exponents.size() < a.rows()) raise(errc::not_injective, "matrix has zero determinant");
    std::vector<long> out;
    for (long e : s.exponents)
        if (e > 0) out.push_back(e);
    return out;
}

} // namespace monocat
