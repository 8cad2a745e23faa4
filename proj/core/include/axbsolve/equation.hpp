#pragma once

#include <optional>

#include "axbsolve/affine_map.hpp"
#include "axbsolve/matrix.hpp"
#include "axbsolve/one_inverse.hpp"

namespace axb {

// Solvers and classifiers for the linear matrix equation A*X*B == C,
// with A m x n, X n x p, B p x q and C m x q.

/// Why a solution family is, or fails to be, reproductive. A family map
/// f is reproductive when f(f(Y)) == f(Y) for every Y; writing
/// f(Y) = shift + L(Y) this holds iff L is idempotent and L(shift) == 0.
enum class ReproReason {
    LinearPartNotIdempotent,
    ShiftNotFixed,
    Reproductive,
};

struct ReproReport {
    bool is_reproductive = false;
    /// Present exactly when not reproductive: a Y with f(f(Y)) != f(Y).
    std::optional<Mat> witness;
    ReproReason reason = ReproReason::Reproductive;
};

enum class ReprVerdict {
    ProvenNotRepresentable,
    Inconclusive,
};

/// Rank certificate for the question whether a particular solution X0
/// can be written as A1*C*B1 for some {1}-inverses A1, B1. Any such
/// product equals (A1*A)*X0*(B*B1) and so has rank at most
/// min(rank A, rank B); a particular solution exceeding that bound is
/// provably not representable. The test is one-sided: Inconclusive does
/// not assert representability.
struct Certificate {
    ReprVerdict verdict = ReprVerdict::Inconclusive;
    std::size_t rank_x0 = 0;
    std::size_t bound = 0;
};

/// The classical consistency test: A*A1*C*B1*B == C for a chosen pair
/// of {1}-inverses. Throws std::invalid_argument when a1 or b1 is not a
/// {1}-inverse of its matrix.
bool penrose_check(const Mat& a, const Mat& b, const Mat& c, const Mat& a1, const Mat& b1);

/// Consistency decided independently, by solving the vectorized system
/// kron(transpose(B), A) * vec(X) == vec(C).
bool is_consistent(const Mat& a, const Mat& b, const Mat& c);

/// Full solution set of A*X*B == C, or nullopt when inconsistent, as an
/// affine set over vec(X).
std::optional<AffineSet> solution_set(const Mat& a, const Mat& b, const Mat& c);

/// The reproductive general solution family
///
///   f(Y) = A1*C*B1 + Y - A1*A*Y*B*B1
///
/// built with the canonical zero-block {1}-inverses. The image of f over
/// all Y of shape n x p is exactly the solution set. Throws when the
/// equation is inconsistent.
AffineMatMap general_solution(const Mat& a, const Mat& b, const Mat& c);

/// The family g(Y) = X0 + Y - A1*A*Y*B*B1 anchored at a given particular
/// solution. Its image is the full solution set regardless of X0, but g
/// is reproductive iff X0 == A1*C*B1 for the pair used inside g. Throws
/// when X0 does not solve the equation.
AffineMatMap solution_from_particular(const Mat& a, const Mat& b, const Mat& c, const Mat& x0);

/// The fixed-point form h(Y) = Y - A1*(A*Y*B - C)*B1, expanded termwise;
/// for a consistent equation its fixed points are exactly the solutions.
/// Identical, term for term, to the general solution family built from
/// the same pair of inverses.
AffineMatMap fixed_point_map(const Mat& a, const Mat& b, const Mat& c, const Mat& a1,
                             const Mat& b1);

/// Exact decision of f∘f == f on the operator level: idempotence of the
/// linear part's vec-matrix plus annihilation of the shift. When the map
/// is not reproductive the report carries a verified witness.
ReproReport reproductivity_of(const AffineMatMap& f);

/// Rank certificate for X0 (which must solve the equation; throws
/// otherwise).
Certificate representability_certificate(const Mat& a, const Mat& b, const Mat& c, const Mat& x0);

}  // namespace axb
