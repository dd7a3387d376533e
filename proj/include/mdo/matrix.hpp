#ifndef MDO_MATRIX_HPP
#define MDO_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace mdo {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;

    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Row-wise literal of small integers, e.g. {{6, 0}, {5, -4}}.
    RatMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw dimension_error("ragged matrix literal");
            for (auto v : r) data_.emplace_back(v);
        }
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    bool row_is_zero(std::size_t r) const {
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0) return false;
        return true;
    }

    bool col_is_zero(std::size_t c) const {
        for (std::size_t r = 0; r < rows_; ++r)
            if ((*this)(r, c) != 0) return false;
        return true;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw dimension_error("block out of range");
        RatMatrix b(nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
        if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw dimension_error("block out of range");
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }

    RatMatrix select_columns(const std::vector<std::size_t>& cols) const {
        RatMatrix out(rows_, cols.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
        return out;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_error("matrix sum shape mismatch");
        RatMatrix s = a;
        for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
        return s;
    }

    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_error("matrix difference shape mismatch");
        RatMatrix s = a;
        for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
        return s;
    }

    friend RatMatrix operator*(const Rational& k, const RatMatrix& a) {
        RatMatrix s = a;
        for (auto& v : s.data_) v *= k;
        return s;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw dimension_error("matrix product shape mismatch");
        RatMatrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
            }
        return p;
    }

    friend RatVector operator*(const RatMatrix& a, const RatVector& v) {
        if (a.cols_ != v.size()) throw dimension_error("matrix-vector shape mismatch");
        RatVector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a(i, k) != 0) out[i] += a(i, k) * v[k];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            cells.push_back(to_string(m(r, c)));
            width = std::max(width, cells.back().size());
        }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& s = cells[r * m.cols() + c];
            os << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        os << "]\n";
    }
    return os;
}

inline std::ostream& operator<<(std::ostream& os, const RatVector& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
    return os << ")";
}

inline Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw dimension_error("dot product length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Reduced row echelon form plus the pivot column of each nonzero row.
struct RowEchelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Pivot = first nonzero entry in the column;
/// magnitude is irrelevant in exact arithmetic.
inline RowEchelon rref(RatMatrix a) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
        Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            Rational f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(a);
    return out;
}

inline std::size_t rank(const RatMatrix& a) { return rref(a).pivots.size(); }

/// Exact inverse; throws singular_matrix_error when A is not regular.
inline RatMatrix invert(const RatMatrix& a) {
    if (!a.is_square()) throw dimension_error("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return {};
    RatMatrix aug(n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, RatMatrix::identity(n));
    RowEchelon e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw singular_matrix_error();
    return e.reduced.block(0, n, n, n);
}

/// Basis of {v : A v = 0}, one vector per free column.
inline std::vector<RatVector> null_space(const RatMatrix& a) {
    RowEchelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace mdo

#endif
