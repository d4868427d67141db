#pragma once

#include <optional>
#include <vector>

#include "monocat/scalar.hpp"

namespace monocat {

// Dense matrix over S. Empty shapes (0xm, mx0) are legal and represent maps
// to or from the zero module.
class LocalMatrix {
public:
    LocalMatrix(FieldSpec field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, LocalScalar::zero(field)) {}

    static LocalMatrix identity(FieldSpec field, size_t n);
    static LocalMatrix scalar_matrix(const LocalScalar& s, size_t n);
    static LocalMatrix diagonal(FieldSpec field, const std::vector<LocalScalar>& diag);
    static LocalMatrix x_power_diagonal(FieldSpec field, const std::vector<long>& exponents);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    LocalScalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const LocalScalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    LocalMatrix operator+(const LocalMatrix& o) const;
    LocalMatrix operator-(const LocalMatrix& o) const;
    LocalMatrix operator*(const LocalMatrix& o) const;
    LocalMatrix operator-() const;
    LocalMatrix scaled(const LocalScalar& s) const;
    LocalMatrix transpose() const;

    bool operator==(const LocalMatrix& o) const;
    bool is_zero() const;

    LocalMatrix submatrix(size_t i0, size_t j0, size_t nrows, size_t ncols) const;

private:
    FieldSpec field_;
    size_t rows_, cols_;
    std::vector<LocalScalar> a_;
};

LocalMatrix direct_sum(const LocalMatrix& a, const LocalMatrix& b);
LocalMatrix hstack(const LocalMatrix& a, const LocalMatrix& b); // [a | b]
LocalMatrix vstack(const LocalMatrix& a, const LocalMatrix& b); // [a ; b]
LocalMatrix kronecker(const LocalMatrix& a, const LocalMatrix& b);
LocalMatrix vec_col_major(const LocalMatrix& m);                   // (rows*cols) x 1
LocalMatrix unvec_col_major(const LocalMatrix& v, size_t rows, size_t cols);

// Smith normal form over the DVR: U*A*V = D with U, V invertible over S and
// D diagonal with entries x^{a_1}, ..., x^{a_r} (a_1 <= ... <= a_r), then zeros.
struct SnfResult {
    LocalMatrix U, D, V;
    std::vector<long> exponents;
};

SnfResult snf(const LocalMatrix& a);
size_t rank(const LocalMatrix& a);

LocalScalar det(const LocalMatrix& a);     // square only
LocalMatrix invert(const LocalMatrix& a);  // NotInvertibleOverS when det is a non-unit

// Some X over S with A*X = B, or nullopt when no solution exists over S.
std::optional<LocalMatrix> solve_linear(const LocalMatrix& a, const LocalMatrix& b);

// X, K with A*X + omega*K = B, or nullopt.
struct ModOmegaSolution {
    LocalMatrix x, k;
};
std::optional<ModOmegaSolution> solve_mod_omega(const LocalMatrix& a, const LocalMatrix& b,
                                                const OmegaSpec& w);

// SNF exponents of a square injective matrix with the zero entries dropped:
// the invariant factors of Coker A. Throws NotInjective when det = 0.
std::vector<long> cokernel_exponents(const LocalMatrix& a);

} // namespace monocat
