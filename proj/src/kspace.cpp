#include "monocat/kspace.hpp"

#include <algorithm>

namespace monocat {

namespace {

// Row echelon form; returns pivot columns. Rows are normalized to pivot 1.
std::vector<size_t> echelon(KMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t sel = row;
        while (sel < m.rows && coeff_is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (size_t j = col; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        Coeff inv = m.field.inv(m.at(row, col));
        for (size_t j = col; j < m.cols; ++j) m.at(row, j) = m.field.mul(m.at(row, j), inv);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == row || coeff_is_zero(m.at(i, col))) continue;
            Coeff f = m.at(i, col);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = m.field.sub(m.at(i, j), m.field.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

size_t k_rank(KMatrix m) { return echelon(m).size(); }

std::vector<std::vector<Coeff>> k_nullspace(KMatrix m) {
    std::vector<size_t> pivots = echelon(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Coeff>> basis;
    for (size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Coeff> v(m.cols, Coeff(0));
        v[free_col] = Coeff(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = m.field.neg(m.at(r, free_col));
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace monocat
