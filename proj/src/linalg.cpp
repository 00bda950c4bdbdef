#include "bidiff/linalg.hpp"

namespace bidiff {

namespace {

// Brings [matrix | rhs] to reduced row echelon form in place and returns the
// pivot column of each pivot row. rhs may be empty (pure rank computation).
std::vector<std::size_t> rref(QMatrix& m, QVector* rhs) {
    std::vector<std::size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = pr;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pr]);
        if (rhs) std::swap((*rhs)[sel], (*rhs)[pr]);
        QElem inv = m[pr][c].inv();
        for (std::size_t j = c; j < cols; ++j) m[pr][j] *= inv;
        if (rhs) (*rhs)[pr] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || m[r][c].is_zero()) continue;
            QElem factor = m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= factor * m[pr][j];
            if (rhs) (*rhs)[r] -= factor * (*rhs)[pr];
        }
        pivot_cols.push_back(c);
        ++pr;
    }
    return pivot_cols;
}

}  // namespace

AffineSolution linsolve(QMatrix matrix, QVector rhs) {
    if (matrix.size() != rhs.size())
        throw ContractError("linsolve: rhs length must equal the row count");
    const std::size_t cols = matrix.empty() ? 0 : matrix[0].size();
    for (const auto& row : matrix)
        if (row.size() != cols) throw ContractError("linsolve: ragged matrix");

    std::vector<std::size_t> pivot_cols = rref(matrix, &rhs);

    AffineSolution out;
    bool consistent = true;
    for (std::size_t r = pivot_cols.size(); r < matrix.size(); ++r)
        if (!rhs[r].is_zero()) consistent = false;

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    if (consistent) {
        QVector part(cols, QElem());
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) part[pivot_cols[r]] = rhs[r];
        out.particular = std::move(part);
    }
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVector vec(cols, QElem());
        vec[c] = QElem(Rat(1));
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) vec[pivot_cols[r]] = -matrix[r][c];
        out.nullspace_basis.push_back(std::move(vec));
    }
    return out;
}

std::size_t rank(QMatrix matrix) {
    return rref(matrix, nullptr).size();
}

}  // namespace bidiff
