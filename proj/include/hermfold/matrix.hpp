#pragma once

#include <cstdint>
#include <vector>

#include "hermfold/field.hpp"

namespace hermfold {

// Dense matrix over a finite field, stored row-major as element codes.
// Row reduction is the workhorse behind code dimensions, duals, membership
// tests and coset representatives, so the elimination kernels have a fast
// path driven by the field's lookup tables.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    static Matrix from_rows(FieldPtr field,
                            const std::vector<std::vector<std::uint16_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    std::uint16_t get(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::uint16_t v) {
        data_[r * cols_ + c] = v;
    }
    std::uint16_t* row(std::size_t r) { return data_.data() + r * cols_; }
    const std::uint16_t* row(std::size_t r) const { return data_.data() + r * cols_; }

    void append_row(const std::vector<std::uint16_t>& v);

    // In-place reduced row echelon form (pivots normalized to 1, zeros above
    // and below, zero rows dropped).  Returns the rank; optionally reports
    // the pivot columns.  Two matrices span the same row space iff their
    // reduced forms are identical, which is how code equality is decided
    // everywhere in this project.
    std::size_t rref(std::vector<std::size_t>* pivots = nullptr);

    // Rank without canonicalization (cheaper: eliminates below pivots only).
    std::size_t rank() const;

    // Canonical basis (reduced form) of { w : each row r satisfies
    // sum_j r[j] w[j] = 0 }.
    Matrix kernel() const;

    // New matrix whose column t is this matrix's column perm[t].
    Matrix permuted_columns(const std::vector<int>& perm) const;

    // Rows of this matrix followed by rows of other.
    Matrix vstack(const Matrix& other) const;

    // A * v (v of length cols), result of length rows.
    std::vector<std::uint16_t> mul_vector(const std::vector<std::uint16_t>& v) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    std::size_t echelonize(bool full, std::vector<std::size_t>* pivots);

    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint16_t> data_;
};

} // namespace hermfold
