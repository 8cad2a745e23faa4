#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "axbsolve/matrix.hpp"

namespace axb {

/// Reduced row-echelon form together with the row-operation record:
/// transform is regular and transform * input == rref exactly.
/// Pivot selection is deterministic: topmost nonzero entry, scanning
/// columns left to right.
struct RrefResult {
    Mat rref;
    Mat transform;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

RrefResult rref_with_transform(const Mat& m);

std::size_t rank(const Mat& m);

/// Exact inverse; nullopt when m is not square-regular.
std::optional<Mat> inverse(const Mat& m);

/// Affine solution set of a linear system: particular + span(basis).
/// Basis vectors are linearly independent columns of length ambient_dim.
struct AffineSet {
    Mat particular;
    std::vector<Mat> basis;
    std::size_t ambient_dim = 0;

    std::size_t dim() const { return basis.size(); }
};

/// All solutions of m*x == rhs, or nullopt when the system is
/// inconsistent. The particular solution sets every free variable to
/// zero; the basis spans the null space of m.
std::optional<AffineSet> solve_affine(const Mat& m, const Mat& rhs);

/// Columns of the set's basis side by side (ambient_dim x dim).
Mat basis_matrix(const AffineSet& set);

bool affine_contains(const AffineSet& set, const Mat& point);

/// Exact equality of affine sets: same direction space and a shared point.
bool affine_sets_equal(const AffineSet& lhs, const AffineSet& rhs);

}  // namespace axb
