#include <doctest.h>

#include <algorithm>

#include "monocat/mon.hpp"
#include "monocat/text.hpp"

using namespace monocat;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime(7);

LocalMatrix M(const std::string& text, FieldSpec field = Q) { return parse_matrix(text, field); }

LocalMatrix random_matrix(FieldSpec field, size_t rows, size_t cols, long max_val, Rng& rng) {
    LocalMatrix m(field, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            if (rng.below(4) == 0) continue; // keep some zeros
            long c = field.kind == FieldKind::prime_field
                         ? 1 + static_cast<long>(rng.below(field.p - 1))
                         : rng.range(1, 3) * (rng.below(2) ? 1 : -1);
            m.at(i, j) = LocalScalar::of(Poly::monomial(field, Coeff(c), rng.range(0, max_val)));
        }
    return m;
}

bool is_unit(const LocalScalar& s) { return s.valuation() && *s.valuation() == 0; }

} // namespace

TEST_CASE("snf on given instances") {
    SnfResult s1 = snf(M("[[x,0],[0,x^2]]"));
    CHECK(s1.exponents == std::vector<long>{1, 2});
    CHECK(s1.U == LocalMatrix::identity(Q, 2));
    CHECK(s1.V == LocalMatrix::identity(Q, 2));

    // unit pivot at (1,2); oracle: verify U*A*V = D by multiplication
    LocalMatrix a = M("[[x,1],[0,x^2]]");
    SnfResult s2 = snf(a);
    CHECK(s2.exponents == std::vector<long>{0, 3});
    CHECK(s2.U * a * s2.V == s2.D);
    CHECK(is_unit(det(s2.U)));
    CHECK(is_unit(det(s2.V)));

    CHECK(snf(M("[[0,0],[0,0]]")).exponents.empty());
    CHECK(snf(LocalMatrix(Q, 0, 3)).exponents.empty());
    CHECK(snf(LocalMatrix(Q, 2, 0)).exponents.empty());
}

TEST_CASE("snf soundness and invariance on random matrices") {
    Rng rng(42);
    for (FieldSpec field : {Q, F7}) {
        for (int t = 0; t < 60; ++t) {
            size_t rows = rng.below(5), cols = rng.below(5);
            LocalMatrix a = random_matrix(field, rows, cols, 4, rng);
            SnfResult s = snf(a);
            CHECK(s.U * a * s.V == s.D);
            if (rows) CHECK(is_unit(det(s.U)));
            if (cols) CHECK(is_unit(det(s.V)));
            CHECK(std::is_sorted(s.exponents.begin(), s.exponents.end()));
            // D literally diagonal monic powers
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j) {
                    if (i == j && i < s.exponents.size())
                        CHECK(s.D.at(i, j) == LocalScalar::x_power(field, s.exponents[i]));
                    else
                        CHECK(s.D.at(i, j).is_zero());
                }
            // exponents invariant under unit pre/post multiplication
            if (rows && cols) {
                LocalMatrix u = random_unit_matrix(field, rows, rng);
                LocalMatrix v = random_unit_matrix(field, cols, rng);
                CHECK(snf(u * a * v).exponents == s.exponents);
            }
        }
    }
}

TEST_CASE("matrix ops") {
    CHECK(invert(M("[[1,x],[0,1]]")) == M("[[1,-x],[0,1]]"));
    CHECK(det(M("[[x,1],[0,x^2]]")) == parse_scalar("x^3", Q));
    CHECK_THROWS_WITH_AS(invert(M("[[x]]")), doctest::Contains("NotInvertibleOverS"), Error);
    CHECK(det(LocalMatrix(Q, 0, 0)) == LocalScalar::one(Q));
    CHECK_THROWS_AS(M("[[x]]") * M("[[x],[1]]"), Error);

    Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        size_t m = 1 + rng.below(4);
        LocalMatrix u = random_unit_matrix(Q, m, rng);
        LocalMatrix uinv = invert(u);
        CHECK(u * uinv == LocalMatrix::identity(Q, m));
        CHECK(uinv * u == LocalMatrix::identity(Q, m));
        // det is multiplicative against a diagonal
        LocalMatrix d = LocalMatrix::x_power_diagonal(Q, {1, 2});
        (void)d;
    }
}

TEST_CASE("solve_linear") {
    auto x1 = solve_linear(M("[[x]]"), M("[[x^3]]"));
    REQUIRE(x1);
    CHECK(*x1 == M("[[x^2]]"));

    CHECK_FALSE(solve_linear(M("[[x^2]]"), M("[[x]]")));

    // back-substitution case; oracle: verify A*X = B
    LocalMatrix a = M("[[x,1],[0,x^2]]");
    auto x3 = solve_linear(a, M("[[1],[x^2]]"));
    REQUIRE(x3);
    CHECK(*x3 == M("[[0],[1]]"));
    CHECK(a * *x3 == M("[[1],[x^2]]"));
    // the second row forces X_2 = 0, so rhs [[1],[0]] is unsolvable
    CHECK_FALSE(solve_linear(a, M("[[1],[0]]")));

    CHECK_THROWS_WITH_AS(solve_linear(M("[[x]]"), M("[[x],[x]]")),
                         doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("solve_linear completeness on planted instances") {
    Rng rng(7);
    for (FieldSpec field : {Q, F7}) {
        for (int t = 0; t < 60; ++t) {
            size_t m = rng.below(4), k = rng.below(4), c = 1 + rng.below(2);
            LocalMatrix a = random_matrix(field, m, k, 3, rng);
            LocalMatrix planted = random_matrix(field, k, c, 3, rng);
            LocalMatrix b = a * planted;
            auto sol = solve_linear(a, b);
            REQUIRE(sol);
            CHECK(a * *sol == b);
        }
    }
}

TEST_CASE("solve_mod_omega") {
    OmegaSpec w3 = omega_make(parse_scalar("x^3", Q));
    auto r1 = solve_mod_omega(M("[[x]]"), M("[[x^2]]"), w3);
    REQUIRE(r1);
    CHECK(M("[[x]]") * r1->x + r1->k.scaled(w3.omega) == M("[[x^2]]"));

    OmegaSpec w2 = omega_make(parse_scalar("x^2", Q));
    CHECK_FALSE(solve_mod_omega(M("[[x^2]]"), M("[[x]]"), w2));

    // x*X + x*K = 1+x has no solution: 1 is not in (x)
    OmegaSpec w1 = omega_make(parse_scalar("x", Q));
    CHECK_FALSE(solve_mod_omega(M("[[x]]"), M("[[1+x]]"), w1));
}

TEST_CASE("solve_mod_omega agrees with brute force over F2") {
    // exhaustive search over polynomial representatives of degree < n
    const FieldSpec F2 = FieldSpec::prime(2);
    Rng rng(13);
    for (long n = 1; n <= 3; ++n) {
        OmegaSpec w = omega_make(LocalScalar::x_power(F2, n));
        for (int t = 0; t < 25; ++t) {
            size_t m = 1 + rng.below(2);
            LocalMatrix a = random_matrix(F2, m, m, n, rng);
            LocalMatrix b = random_matrix(F2, m, m, n, rng);

            bool found = false;
            size_t cells = m * m;
            size_t states = 1;
            for (size_t i = 0; i < cells * n; ++i) states *= 2;
            for (size_t code = 0; code < states && !found; ++code) {
                LocalMatrix cand(F2, m, m);
                size_t bits = code;
                for (size_t cell = 0; cell < cells; ++cell) {
                    std::vector<Coeff> cs(n, Coeff(0));
                    for (long d = 0; d < n; ++d) {
                        cs[d] = Coeff(static_cast<long>(bits & 1));
                        bits >>= 1;
                    }
                    cand.at(cell / m, cell % m) = LocalScalar::of(Poly::from_coeffs(F2, cs));
                }
                LocalMatrix res = a * cand - b;
                bool divisible = true;
                for (size_t i = 0; i < m && divisible; ++i)
                    for (size_t j = 0; j < m && divisible; ++j) {
                        auto v = res.at(i, j).valuation();
                        if (v && *v < n) divisible = false;
                    }
                found = divisible;
            }

            auto sol = solve_mod_omega(a, b, w);
            CHECK(sol.has_value() == found);
            if (sol) CHECK(a * sol->x + sol->k.scaled(w.omega) == b);
        }
    }
}

TEST_CASE("cokernel exponents") {
    CHECK(cokernel_exponents(M("[[x,0],[0,x^2]]")) == std::vector<long>{1, 2});
    CHECK(cokernel_exponents(M("[[x,1],[0,x^2]]")) == std::vector<long>{3});
    CHECK(cokernel_exponents(M("[[1]]")).empty());
    CHECK_THROWS_WITH_AS(cokernel_exponents(M("[[x,x],[x,x]]")), doctest::Contains("NotInjective"),
                         Error);
    CHECK_THROWS_AS(cokernel_exponents(M("[[x,1]]")), Error);
}

TEST_CASE("kronecker and vec conventions") {
    // vec(A X B) = (B^t (x) A) vec(X)
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        LocalMatrix a = random_matrix(Q, 2, 2, 2, rng);
        LocalMatrix b = random_matrix(Q, 2, 2, 2, rng);
        LocalMatrix x = random_matrix(Q, 2, 2, 2, rng);
        CHECK(vec_col_major(a * x * b) == kronecker(b.transpose(), a) * vec_col_major(x));
    }
}
