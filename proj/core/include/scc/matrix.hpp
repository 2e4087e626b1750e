#pragma once

// Dense matrices over GF(2^8): rank, row-space membership and linear solve.
// Elimination uses leftmost-nonzero pivoting with no scaling tricks; the
// field is exact, so determinism wins over speed.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "scc/gf256.hpp"

namespace scc {

class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Gf& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
    Gf at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

    std::span<Gf> row(size_t r) { return {e_.data() + r * cols_, cols_}; }
    std::span<const Gf> row(size_t r) const { return {e_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Gf> row);

    static Matrix identity(size_t n);

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Gf> e_;
};

// Incrementally maintained row-echelon basis of a row space.  Rows are kept
// sorted by pivot column with a unit leading coefficient, so membership
// tests are a single reduction sweep.
class RowBasis {
public:
    explicit RowBasis(size_t cols) : cols_(cols) {}

    size_t cols() const { return cols_; }
    size_t rank() const { return rows_.size(); }

    // Adds v to the basis; returns true if the rank grew.
    bool insert(std::span<const Gf> v);

    // True iff v is a linear combination of the inserted rows.
    bool contains(std::span<const Gf> v) const;

    // Reduces v in place against the basis; afterwards v is zero iff it was
    // in the row space.
    void reduce(std::span<Gf> v) const;

private:
    size_t cols_;
    std::vector<std::vector<Gf>> rows_;  // ascending pivot order
    std::vector<size_t> pivots_;
};

size_t rank(const Matrix& m);

// True iff v is a GF(2^8)-linear combination of the rows of m, i.e.
// rank(m with v appended) equals rank(m).
bool in_row_space(std::span<const Gf> v, const Matrix& m);

// Any x with m*x = rhs, or nullopt if the system is inconsistent.  Free
// variables are set to zero; with full column rank the solution is unique.
std::optional<std::vector<Gf>> solve(const Matrix& m, std::span<const Gf> rhs);

}  // namespace scc
