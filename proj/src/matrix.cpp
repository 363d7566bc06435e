#include "hermfold/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermfold {

namespace {

// Row operation kernels.  With the full multiplication table available
// (order <= 256) a scaled row addition is one or two table lookups per entry,
// which keeps even the largest matrices in this project (thousands of rows
// over GF(256)) tractable.
struct Ops {
    const Field* f;
    const std::uint16_t* mul_tab;
    const std::uint16_t* add_tab;
    std::uint32_t order;
    bool char2;

    explicit Ops(const Field& field)
        : f(&field),
          mul_tab(field.mul_table()),
          add_tab(field.add_table()),
          order(field.order()),
          char2(field.characteristic() == 2) {}

    // dst += c * src over n entries.
    void axpy(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t c,
              std::size_t n) const {
        if (c == 0) return;
        if (mul_tab) {
            const std::uint16_t* mrow = mul_tab + (std::size_t)c * order;
            if (char2) {
                for (std::size_t j = 0; j < n; ++j) dst[j] ^= mrow[src[j]];
            } else {
                for (std::size_t j = 0; j < n; ++j)
                    dst[j] = add_tab[(std::size_t)dst[j] * order + mrow[src[j]]];
            }
        } else {
            for (std::size_t j = 0; j < n; ++j)
                dst[j] = f->add(dst[j], f->mul(c, src[j]));
        }
    }

    // row *= c over n entries.
    void scale(std::uint16_t* row, std::uint16_t c, std::size_t n) const {
        if (c == 1) return;
        if (mul_tab) {
            const std::uint16_t* mrow = mul_tab + (std::size_t)c * order;
            for (std::size_t j = 0; j < n; ++j) row[j] = mrow[row[j]];
        } else {
            for (std::size_t j = 0; j < n; ++j) row[j] = f->mul(c, row[j]);
        }
    }
};

} // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(FieldPtr field,
                         const std::vector<std::vector<std::uint16_t>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("matrix: ragged rows");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r));
    }
    return m;
}

void Matrix::append_row(const std::vector<std::uint16_t>& v) {
    if (v.size() != cols_) throw std::invalid_argument("matrix: row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

std::size_t Matrix::echelonize(bool full, std::vector<std::size_t>* pivots) {
    Ops ops(*field_);
    if (pivots) pivots->clear();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t piv = r;
        while (piv < rows_ && get(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            std::swap_ranges(row(piv) + col, row(piv) + cols_, row(r) + col);
        ops.scale(row(r) + col, field_->inv(get(r, col)), cols_ - col);
        std::size_t begin = full ? 0 : r + 1;
        for (std::size_t i = begin; i < rows_; ++i) {
            if (i == r) continue;
            std::uint16_t c = get(i, col);
            if (c == 0) continue;
            ops.axpy(row(i) + col, row(r) + col, field_->neg(c), cols_ - col);
        }
        if (pivots) pivots->push_back(col);
        ++r;
    }
    return r;
}

std::size_t Matrix::rref(std::vector<std::size_t>* pivots) {
    std::size_t rank = echelonize(true, pivots);
    data_.resize(rank * cols_);
    rows_ = rank;
    return rank;
}

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.echelonize(false, nullptr);
}

Matrix Matrix::kernel() const {
    Matrix red = *this;
    std::vector<std::size_t> pivots;
    std::size_t rank = red.rref(&pivots);

    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    Matrix basis(field_, cols_ - rank, cols_);
    std::size_t out = 0;
    for (std::size_t fcol = 0; fcol < cols_; ++fcol) {
        if (is_pivot[fcol]) continue;
        std::uint16_t* w = basis.row(out++);
        w[fcol] = 1;
        for (std::size_t i = 0; i < rank; ++i)
            w[pivots[i]] = field_->neg(red.get(i, fcol));
    }
    basis.rref(nullptr);
    return basis;
}

Matrix Matrix::permuted_columns(const std::vector<int>& perm) const {
    if (perm.size() != cols_)
        throw std::invalid_argument("matrix: permutation length mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m.set(r, c, get(r, (std::size_t)perm[c]));
    return m;
}

Matrix Matrix::vstack(const Matrix& other) const {
    if (other.cols_ != cols_ || !field_->same(*other.field_))
        throw std::invalid_argument("matrix: vstack shape or field mismatch");
    Matrix m(field_, rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(),
              m.data_.begin() + (std::ptrdiff_t)(rows_ * cols_));
    return m;
}

std::vector<std::uint16_t> Matrix::mul_vector(
    const std::vector<std::uint16_t>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix: vector length mismatch");
    std::vector<std::uint16_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint16_t acc = 0;
        const std::uint16_t* rp = row(r);
        for (std::size_t c = 0; c < cols_; ++c)
            acc = field_->add(acc, field_->mul(rp[c], v[c]));
        out[r] = acc;
    }
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_->same(*o.field_) && rows_ == o.rows_ && cols_ == o.cols_ &&
           data_ == o.data_;
}

} // namespace hermfold
