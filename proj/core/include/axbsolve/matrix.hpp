#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace axb {

/// Exact rational scalar. GMP keeps values canonical: lowest terms,
/// positive denominator, so comparisons are exact.
using Rat = mpq_class;

/// Thrown when operands do not conform. The message names both shapes.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over exact rationals.
///
/// Shapes with zero rows or columns are legal values: they arise as
/// degenerate parameter blocks of full-rank matrices and in empty
/// equation systems. Arithmetic treats sums over an empty index range
/// as zero, so no operation needs to special-case them.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}

    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Mat row(std::size_t i) const;
    Mat col(std::size_t j) const;

    // In-place elementary row operations.
    void swap_rows(std::size_t i, std::size_t k);
    void scale_row(std::size_t i, const Rat& factor);
    void add_scaled_row(std::size_t dst, std::size_t src, const Rat& factor);

    friend bool operator==(const Mat& lhs, const Mat& rhs) {
        return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
    }
    friend bool operator!=(const Mat& lhs, const Mat& rhs) { return !(lhs == rhs); }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rat> data_;
};

Mat operator+(const Mat& lhs, const Mat& rhs);
Mat operator-(const Mat& lhs, const Mat& rhs);
Mat operator*(const Mat& lhs, const Mat& rhs);
Mat operator*(const Rat& c, const Mat& m);
Mat operator-(const Mat& m);

Mat transpose(const Mat& m);

/// Kronecker product, (lhs.rows*rhs.rows) x (lhs.cols*rhs.cols).
Mat kron(const Mat& lhs, const Mat& rhs);

/// Column-stacking vectorization, so vec(A*X*B) = kron(transpose(B), A) * vec(X).
Mat vec(const Mat& m);

/// Inverse of vec. Throws ShapeError unless v is a column of length rows*cols.
Mat unvec(const Mat& v, std::size_t rows, std::size_t cols);

Mat hcat(const Mat& left, const Mat& right);
Mat vcat(const Mat& top, const Mat& bottom);

std::string shape_string(const Mat& m);

}  // namespace axb
