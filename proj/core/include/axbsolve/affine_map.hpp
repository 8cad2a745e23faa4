#pragma once

#include <cstddef>
#include <vector>

#include "axbsolve/matrix.hpp"
#include "axbsolve/solve.hpp"

namespace axb {

/// One signed product term of an affine matrix map: sign * left * Y * right.
struct MapTerm {
    Mat left;
    Mat right;
    int sign = 1;  // +1 or -1

    friend bool operator==(const MapTerm& a, const MapTerm& b) {
        return a.sign == b.sign && a.left == b.left && a.right == b.right;
    }
};

/// An affine map on n x p matrices,
///
///   Y  |->  shift + sum_i sign_i * left_i * Y * right_i,
///
/// the carrier for every solution family produced by the solvers. The
/// domain and codomain shapes coincide, so each left factor is n x n
/// and each right factor is p x p. Under column-stacking vectorization
/// the linear part acts as sum_i sign_i * kron(transpose(right_i), left_i).
class AffineMatMap {
  public:
    AffineMatMap(Mat shift, std::vector<MapTerm> terms);

    const Mat& shift() const { return shift_; }
    const std::vector<MapTerm>& terms() const { return terms_; }

    std::size_t out_rows() const { return shift_.rows(); }
    std::size_t out_cols() const { return shift_.cols(); }

    Mat apply(const Mat& y) const;

    /// The linear part alone: apply(y) - shift.
    Mat apply_linear(const Mat& y) const;

    /// Matrix of the linear part on vec-space, (n*p) x (n*p).
    Mat linear_vec_matrix() const;

    /// Affine dimension of the image, the rank of the linear part.
    std::size_t image_dim() const;

    /// The image as an affine set on vec-space: vec(shift) plus the
    /// column space of the linear part's vec-matrix. The basis consists
    /// of that matrix's pivot columns, so it is deterministic.
    AffineSet image() const;

  private:
    Mat shift_;
    std::vector<MapTerm> terms_;
};

}  // namespace axb
