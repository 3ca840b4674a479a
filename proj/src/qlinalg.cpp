#include "bcx/qlinalg.hpp"

#include "bcx/errors.hpp"

namespace bcx {

QMatrix::QMatrix(std::vector<std::vector<Rational>> columns) : cols_(std::move(columns)) {
    if (cols_.empty()) return;
    rows_ = static_cast<int>(cols_[0].size());
    for (const auto& c : cols_)
        if (static_cast<int>(c.size()) != rows_) throw invalid_input("ragged matrix");
}

namespace {

// Row echelon by fraction-reducing Gaussian elimination; rows x cols dense.
// Returns pivot column (within the selection) for each pivot row.
std::vector<int> echelon(std::vector<std::vector<Rational>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

int QMatrix::column_rank(const ElementSet& s) const {
    auto labels = s.to_vector();
    if (labels.empty()) return 0;
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(labels.size()));
    for (size_t j = 0; j < labels.size(); ++j) {
        if (labels[j] > cols()) throw invalid_input("column label out of range");
        for (int i = 0; i < rows_; ++i) m[i][j] = cols_[labels[j] - 1][i];
    }
    return static_cast<int>(echelon(m).size());
}

std::vector<std::vector<Rational>> QMatrix::nullspace(const ElementSet& s) const {
    auto labels = s.to_vector();
    size_t k = labels.size();
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(k));
    for (size_t j = 0; j < k; ++j) {
        if (labels[j] > cols()) throw invalid_input("column label out of range");
        for (int i = 0; i < rows_; ++i) m[i][j] = cols_[labels[j] - 1][i];
    }
    std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(k, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t free_c = 0; free_c < k; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(k, Rational(0));
        v[free_c] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -m[pr][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace bcx
