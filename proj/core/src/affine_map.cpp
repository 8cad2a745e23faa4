#include "axbsolve/affine_map.hpp"

#include <utility>

namespace axb {

AffineMatMap::AffineMatMap(Mat shift, std::vector<MapTerm> terms)
    : shift_(std::move(shift)), terms_(std::move(terms)) {
    for (const MapTerm& t : terms_) {
        if (t.sign != 1 && t.sign != -1)
            throw std::invalid_argument("affine map term sign must be +1 or -1");
        if (t.left.rows() != shift_.rows() || t.left.cols() != shift_.rows() ||
            t.right.rows() != shift_.cols() || t.right.cols() != shift_.cols())
            throw ShapeError("affine map term " + shape_string(t.left) + " * Y * " +
                             shape_string(t.right) + " does not fit output shape " +
                             shape_string(shift_));
    }
}

Mat AffineMatMap::apply(const Mat& y) const { return shift_ + apply_linear(y); }

Mat AffineMatMap::apply_linear(const Mat& y) const {
    if (y.rows() != shift_.rows() || y.cols() != shift_.cols())
        throw ShapeError("affine map argument " + shape_string(y) + ", expected " +
                         shape_string(shift_));
    Mat acc(shift_.rows(), shift_.cols());
    for (const MapTerm& t : terms_) {
        Mat prod = t.left * y * t.right;
        acc = t.sign > 0 ? acc + prod : acc - prod;
    }
    return acc;
}

Mat AffineMatMap::linear_vec_matrix() const {
    const std::size_t dim = shift_.rows() * shift_.cols();
    Mat acc(dim, dim);
    for (const MapTerm& t : terms_) {
        Mat k = kron(transpose(t.right), t.left);
        acc = t.sign > 0 ? acc + k : acc - k;
    }
    return acc;
}

std::size_t AffineMatMap::image_dim() const { return rank(linear_vec_matrix()); }

AffineSet AffineMatMap::image() const {
    Mat l = linear_vec_matrix();
    RrefResult rr = rref_with_transform(l);
    std::vector<Mat> basis;
    basis.reserve(rr.rank);
    for (std::size_t pc : rr.pivot_cols)
        basis.push_back(l.col(pc));
    return AffineSet{vec(shift_), std::move(basis), l.rows()};
}

}  // namespace axb
