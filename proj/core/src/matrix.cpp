#include "scc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace scc {

void Matrix::append_row(std::span<const Gf> row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("Matrix: row width mismatch");
    e_.insert(e_.end(), row.begin(), row.end());
    ++rows_;
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = gf_one;
    return m;
}

void RowBasis::reduce(std::span<Gf> v) const {
    // Rows are in ascending pivot order and zero left of their pivot, so one
    // forward sweep fully reduces v.
    for (size_t i = 0; i < rows_.size(); ++i) {
        const uint8_t f = v[pivots_[i]].byte();
        if (f == 0) continue;
        const uint8_t* mr = mul_row(f);
        const Gf* src = rows_[i].data();
        Gf* dst = v.data();
        for (size_t j = pivots_[i]; j < cols_; ++j) {
            dst[j] = Gf(static_cast<uint8_t>(dst[j].byte() ^ mr[src[j].byte()]));
        }
    }
}

bool RowBasis::insert(std::span<const Gf> v) {
    if (v.size() != cols_) throw std::invalid_argument("RowBasis: width mismatch");
    std::vector<Gf> w(v.begin(), v.end());
    reduce(w);
    size_t p = 0;
    while (p < cols_ && w[p].is_zero()) ++p;
    if (p == cols_) return false;
    Gf scale = inverse(w[p]);
    for (size_t j = p; j < cols_; ++j) w[j] *= scale;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    size_t pos = static_cast<size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
}

bool RowBasis::contains(std::span<const Gf> v) const {
    if (v.size() != cols_) throw std::invalid_argument("RowBasis: width mismatch");
    std::vector<Gf> w(v.begin(), v.end());
    reduce(w);
    return std::all_of(w.begin(), w.end(), [](Gf x) { return x.is_zero(); });
}

size_t rank(const Matrix& m) {
    RowBasis basis(m.cols());
    for (size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
    return basis.rank();
}

bool in_row_space(std::span<const Gf> v, const Matrix& m) {
    if (v.size() != m.cols()) throw std::invalid_argument("in_row_space: length mismatch");
    RowBasis basis(m.cols());
    for (size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
    return basis.contains(v);
}

std::optional<std::vector<Gf>> solve(const Matrix& m, std::span<const Gf> rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    const size_t rows = m.rows();
    const size_t cols = m.cols();

    // forward elimination on the augmented system
    Matrix a = m;
    std::vector<Gf> b(rhs.begin(), rhs.end());
    std::vector<size_t> pivot_col;
    size_t rr = 0;  // current elimination row
    for (size_t c = 0; c < cols && rr < rows; ++c) {
        size_t p = rr;
        while (p < rows && a.at(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != rr) {
            for (size_t j = c; j < cols; ++j) std::swap(a.at(rr, j), a.at(p, j));
            std::swap(b[rr], b[p]);
        }
        Gf scale = inverse(a.at(rr, c));
        for (size_t j = c; j < cols; ++j) a.at(rr, j) *= scale;
        b[rr] *= scale;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rr || a.at(r, c).is_zero()) continue;
            Gf f = a.at(r, c);
            for (size_t j = c; j < cols; ++j) a.at(r, j) -= f * a.at(rr, j);
            b[r] -= f * b[rr];
        }
        pivot_col.push_back(c);
        ++rr;
    }
    for (size_t r = rr; r < rows; ++r) {
        if (!b[r].is_zero()) return std::nullopt;  // zero row, nonzero rhs
    }
    std::vector<Gf> x(cols, gf_zero);
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace scc
