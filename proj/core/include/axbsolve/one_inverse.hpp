#pragma once

#include <cstddef>
#include <cstdint>

#include "axbsolve/matrix.hpp"
#include "axbsolve/solve.hpp"

namespace axb {

/// Rank normal form of an m x n matrix A: regular factors with
/// Q * A * P == E_a, where E_a carries the a x a identity in its
/// top-left block and zeros elsewhere, a == rank(A).
struct RankNormalForm {
    Mat Q;              // m x m, regular
    Mat P;              // n x n, regular
    std::size_t rank = 0;
};

/// Deterministic construction: Q collects the row operations of the
/// reduced row-echelon form, P the column eliminations plus the column
/// permutation that moves the pivots to the front. Works for every
/// matrix, including rank zero.
RankNormalForm rank_normal_form(const Mat& a);

/// The block identity [[I_a, 0], [0, 0]] of the given outer shape.
Mat rank_identity(std::size_t rows, std::size_t cols, std::size_t rank);

/// True iff a * g * a == a exactly.
bool is_one_inverse(const Mat& a, const Mat& g);

/// The complete family of {1}-inverses of a fixed matrix A, indexed by
/// three free parameter blocks:
///
///   G(X1, X2, X3) = P * [[I_a, X1], [X2, X3]] * Q,
///
/// with X1 of shape a x (m-a), X2 of shape (n-a) x a and X3 of shape
/// (n-a) x (m-a). Every member satisfies A * G * A == A, and every
/// {1}-inverse of A arises from exactly one parameter choice. When A has
/// full row or column rank some blocks are empty; that is a legal input.
class OneInverseFamily {
  public:
    explicit OneInverseFamily(const Mat& a);

    std::size_t rows() const { return m_; }        // rows of A
    std::size_t cols() const { return n_; }        // cols of A
    std::size_t rank() const { return rnf_.rank; }
    const RankNormalForm& rnf() const { return rnf_; }

    /// Total number of free scalar parameters, equal to n*m - a*a.
    std::size_t parameter_count() const;

    /// Member at explicit parameter blocks. Throws ShapeError when a
    /// block does not have the advertised shape.
    Mat at(const Mat& x1, const Mat& x2, const Mat& x3) const;

    /// The canonical member: all parameter blocks zero. This one is
    /// also a {2}-inverse (G * A * G == G).
    Mat zero() const;

    /// Member with pseudo-random parameter entries in [-3, 3];
    /// deterministic per seed.
    Mat sample(std::uint64_t seed) const;

  private:
    RankNormalForm rnf_;
    std::size_t m_ = 0;
    std::size_t n_ = 0;
};

}  // namespace axb
