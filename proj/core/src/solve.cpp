#include "axbsolve/solve.hpp"

#include <utility>

namespace axb {

RrefResult rref_with_transform(const Mat& m) {
    Mat r = m;
    Mat e = Mat::identity(m.rows());
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r(sel, col) == 0)
            ++sel;
        if (sel == r.rows())
            continue;
        r.swap_rows(pivot_row, sel);
        e.swap_rows(pivot_row, sel);
        Rat inv = Rat(1) / r(pivot_row, col);
        if (inv != 1) {
            r.scale_row(pivot_row, inv);
            e.scale_row(pivot_row, inv);
        }
        for (std::size_t k = 0; k < r.rows(); ++k) {
            if (k == pivot_row || r(k, col) == 0)
                continue;
            Rat factor = -r(k, col);
            r.add_scaled_row(k, pivot_row, factor);
            e.add_scaled_row(k, pivot_row, factor);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    std::size_t rk = pivots.size();
    return RrefResult{std::move(r), std::move(e), rk, std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref_with_transform(m).rank; }

std::optional<Mat> inverse(const Mat& m) {
    if (!m.is_square())
        return std::nullopt;
    RrefResult rr = rref_with_transform(m);
    if (rr.rank != m.rows())
        return std::nullopt;
    // Full-rank square rref is the identity, so the transform is m^-1.
    return rr.transform;
}

std::optional<AffineSet> solve_affine(const Mat& m, const Mat& rhs) {
    if (rhs.cols() != 1 || rhs.rows() != m.rows())
        throw ShapeError("solve_affine: system " + shape_string(m) + ", rhs " +
                         shape_string(rhs));
    RrefResult rr = rref_with_transform(m);
    Mat w = rr.transform * rhs;
    for (std::size_t i = rr.rank; i < m.rows(); ++i)
        if (w(i, 0) != 0)
            return std::nullopt;

    const std::size_t n = m.cols();
    Mat particular(n, 1);
    for (std::size_t i = 0; i < rr.rank; ++i)
        particular(rr.pivot_cols[i], 0) = w(i, 0);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivot_cols)
        is_pivot[p] = true;

    std::vector<Mat> basis;
    basis.reserve(n - rr.rank);
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j])
            continue;
        Mat b(n, 1);
        b(j, 0) = 1;
        for (std::size_t i = 0; i < rr.rank; ++i)
            b(rr.pivot_cols[i], 0) = -rr.rref(i, j);
        basis.push_back(std::move(b));
    }
    return AffineSet{std::move(particular), std::move(basis), n};
}

Mat basis_matrix(const AffineSet& set) {
    Mat b(set.ambient_dim, set.basis.size());
    for (std::size_t j = 0; j < set.basis.size(); ++j)
        for (std::size_t i = 0; i < set.ambient_dim; ++i)
            b(i, j) = set.basis[j](i, 0);
    return b;
}

bool affine_contains(const AffineSet& set, const Mat& point) {
    if (point.cols() != 1 || point.rows() != set.ambient_dim)
        throw ShapeError("affine_contains: point " + shape_string(point) + " in ambient dim " +
                         std::to_string(set.ambient_dim));
    return solve_affine(basis_matrix(set), point - set.particular).has_value();
}

bool affine_sets_equal(const AffineSet& lhs, const AffineSet& rhs) {
    if (lhs.ambient_dim != rhs.ambient_dim)
        return false;
    Mat bl = basis_matrix(lhs);
    Mat br = basis_matrix(rhs);
    std::size_t rl = rank(bl);
    std::size_t rr = rank(br);
    if (rl != rr || rank(hcat(bl, br)) != rl)
        return false;
    return affine_contains(rhs, lhs.particular);
}

}  // namespace axb
