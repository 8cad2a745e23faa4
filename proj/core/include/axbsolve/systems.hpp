#pragma once

#include <optional>
#include <vector>

#include "axbsolve/affine_map.hpp"
#include "axbsolve/matrix.hpp"
#include "axbsolve/solve.hpp"

namespace axb {

/// One linear matrix equation in a shared unknown X:
///
///   sum_i sign_i * left_i * X * right_i == rhs.
///
/// A plain L*X*R == C equation is a single positive term; two-sided
/// conditions like A*X == X*A stack two terms of opposite sign with a
/// zero right-hand side.
struct MatEquation {
    std::vector<MapTerm> terms;
    Mat rhs;
};

/// A conjunction of linear matrix equations over one unknown of shape
/// x_rows by x_cols.
struct MatrixSystem {
    std::size_t x_rows = 0;
    std::size_t x_cols = 0;
    std::vector<MatEquation> equations;
};

/// Ground-truth solver: stacks each equation's vectorized form
/// sum_i sign_i * kron(transpose(right_i), left_i) into one linear
/// system over vec(X) and solves it exactly. Returns nullopt when the
/// system is inconsistent. An empty system yields the full space.
std::optional<AffineSet> stacked_oracle(const MatrixSystem& sys);

/// The five equation types with classical one-parameter solution
/// families over a square matrix A:
///   E1: A*X == 0,  E2: X*A == 0,  E3: A*X*A == A,  E4: A*X == A,
///   E5: X*A == A.
enum class PresicEq { E1, E2, E3, E4, E5 };

/// the same equations with shifts rewritten so that every family is
/// reproductive; E1 and E2 are unchanged.
enum class HavericEq { E3, E4, E5 };

/// Family for the chosen equation, e.g. E3: X = A1 + Y - A1*A*Y*A*A1,
/// using the canonical zero-block {1}-inverse (first overload) or an
/// explicit one. The image over all Y equals the equation's solution
/// set. Throws on non-square A or an invalid inverse.
AffineMatMap presic_family(const Mat& a, PresicEq which);
AffineMatMap presic_family(const Mat& a, PresicEq which, const Mat& a1);

/// Reproductive variant, e.g. E3: X = A1*A*A1 + Y - A1*A*Y*A*A1. Same
/// image as the corresponding presic_family.
AffineMatMap haveric_family(const Mat& a, HavericEq which);
AffineMatMap haveric_family(const Mat& a, HavericEq which, const Mat& a1);

/// Solutions of the pair A*X == B and X*D == E.
struct TwoSidedFamilies {
    /// g(Y) = X0 + (I - A1*A) * Y * (I - D*D1), X0 from the oracle.
    AffineMatMap general;
    /// f(Y) = A1*B + E*D1 - A1*A*E*D1 + (I - A1*A) * Y * (I - D*D1);
    /// satisfies f∘f == f.
    AffineMatMap reproductive;
};

/// Solves A*X == B and X*D == E jointly. Consistency is decided by the
/// stacked oracle; nullopt when the system has no solution.
std::optional<TwoSidedFamilies> two_sided_solve(const Mat& a, const Mat& b, const Mat& d,
                                                const Mat& e);

struct CommutingSolution {
    /// A {1}-inverse that commutes with A, taken from the oracle.
    Mat commuting_inverse;
    /// f(Y) = Y + Ab*A*Ab - Ab*A*Y - Y*A*Ab + Ab*A*Y*A*Ab where Ab is
    /// the commuting inverse; reproductive, image equals the solution
    /// set of the system.
    AffineMatMap family;
};

/// Solves A*X*A == A together with A*X == X*A for square A. Returns
/// nullopt when no commuting {1}-inverse exists (e.g. nonzero nilpotent
/// A). A regular A yields its ordinary inverse and the singleton family.
std::optional<CommutingSolution> commuting_system_solve(const Mat& a);

}  // namespace axb
