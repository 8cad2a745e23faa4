#include "axbsolve/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace axb {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw ShapeError("matrix literal has ragged rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x == 0; });
}

Mat Mat::row(std::size_t i) const {
    assert(i < rows_);
    Mat r(1, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        r(0, j) = (*this)(i, j);
    return r;
}

Mat Mat::col(std::size_t j) const {
    assert(j < cols_);
    Mat c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i)
        c(i, 0) = (*this)(i, j);
    return c;
}

void Mat::swap_rows(std::size_t i, std::size_t k) {
    assert(i < rows_ && k < rows_);
    if (i == k)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(i, j), (*this)(k, j));
}

void Mat::scale_row(std::size_t i, const Rat& factor) {
    assert(i < rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) *= factor;
}

void Mat::add_scaled_row(std::size_t dst, std::size_t src, const Rat& factor) {
    assert(dst < rows_ && src < rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) += factor * (*this)(src, j);
}

std::string shape_string(const Mat& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

Mat operator+(const Mat& lhs, const Mat& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw ShapeError("matrix sum: " + shape_string(lhs) + " + " + shape_string(rhs));
    Mat out(lhs.rows(), lhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            out(i, j) = lhs(i, j) + rhs(i, j);
    return out;
}

Mat operator-(const Mat& lhs, const Mat& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw ShapeError("matrix difference: " + shape_string(lhs) + " - " + shape_string(rhs));
    Mat out(lhs.rows(), lhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            out(i, j) = lhs(i, j) - rhs(i, j);
    return out;
}

Mat operator*(const Mat& lhs, const Mat& rhs) {
    if (lhs.cols() != rhs.rows())
        throw ShapeError("matrix product: " + shape_string(lhs) + " * " + shape_string(rhs));
    Mat out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Rat& f = lhs(i, k);
            if (f == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                out(i, j) += f * rhs(k, j);
        }
    return out;
}

Mat operator*(const Rat& c, const Mat& m) {
    Mat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = c * m(i, j);
    return out;
}

Mat operator-(const Mat& m) { return Rat(-1) * m; }

Mat transpose(const Mat& m) {
    Mat out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(j, i) = m(i, j);
    return out;
}

Mat kron(const Mat& lhs, const Mat& rhs) {
    Mat out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j) {
            const Rat& f = lhs(i, j);
            if (f == 0)
                continue;
            for (std::size_t k = 0; k < rhs.rows(); ++k)
                for (std::size_t l = 0; l < rhs.cols(); ++l)
                    out(i * rhs.rows() + k, j * rhs.cols() + l) = f * rhs(k, l);
        }
    return out;
}

Mat vec(const Mat& m) {
    Mat v(m.rows() * m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            v(j * m.rows() + i, 0) = m(i, j);
    return v;
}

Mat unvec(const Mat& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols)
        throw ShapeError("unvec: cannot reshape " + shape_string(v) + " into " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    Mat m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = v(j * rows + i, 0);
    return m;
}

Mat hcat(const Mat& left, const Mat& right) {
    if (left.rows() != right.rows())
        throw ShapeError("hcat: " + shape_string(left) + " | " + shape_string(right));
    Mat out(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j)
            out(i, j) = left(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j)
            out(i, left.cols() + j) = right(i, j);
    }
    return out;
}

Mat vcat(const Mat& top, const Mat& bottom) {
    if (top.cols() != bottom.cols())
        throw ShapeError("vcat: " + shape_string(top) + " / " + shape_string(bottom));
    Mat out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t j = 0; j < out.cols(); ++j) {
        for (std::size_t i = 0; i < top.rows(); ++i)
            out(i, j) = top(i, j);
        for (std::size_t i = 0; i < bottom.rows(); ++i)
            out(top.rows() + i, j) = bottom(i, j);
    }
    return out;
}

}  // namespace axb
