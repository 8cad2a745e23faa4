#pragma once

#include <cstddef>

#include "axbsolve/matrix.hpp"

namespace axb {

/// Permutation-based normal data for the pair (A, B):
///
///  * T_A moves a maximal independent set of rows of A to the top, so
///    Ahat = T_A * A has its first a rows linearly independent and each
///    later row is their unique combination with coefficients alpha;
///  * T_B moves a maximal independent set of columns of B to the front,
///    so Bhat = B * T_B has its first b columns independent and each
///    later column is their combination with coefficients beta.
///
/// Row/column selection is greedy: scan top-down (left-to-right) and
/// keep whatever is independent of what was already kept.
struct PermutedData {
    Mat T_A;           // m x m permutation
    Mat T_B;           // q x q permutation
    std::size_t a = 0; // rank of A
    std::size_t b = 0; // rank of B
    Mat alpha;         // (m-a) x a; row i-a holds the coefficients of Ahat row i
    Mat beta;          // b x (q-b); column j-b holds the coefficients of Bhat column j
};

PermutedData permuted_form(const Mat& a, const Mat& b);

/// Consistency of A*X*B == C decided structurally: Chat = T_A * C * T_B
/// must inherit the row dependencies of Ahat and the column dependencies
/// of Bhat, leaving only the top-left a x b block free. Equivalent to
/// the Penrose condition holding for every choice of {1}-inverses.
bool structural_check(const Mat& a, const Mat& b, const Mat& c);

}  // namespace axb
