#include "axbsolve/structural.hpp"

#include <vector>

#include "axbsolve/solve.hpp"

namespace axb {

namespace {

/// Greedy maximal independent row selection: returns kept indices in
/// scan order followed by the dependent ones.
std::vector<std::size_t> independent_rows_first(const Mat& m, std::size_t& kept_count) {
    std::vector<std::size_t> kept, rest;
    Mat acc(0, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Mat cand = vcat(acc, m.row(i));
        if (rank(cand) > kept.size()) {
            kept.push_back(i);
            acc = std::move(cand);
        } else {
            rest.push_back(i);
        }
    }
    kept_count = kept.size();
    kept.insert(kept.end(), rest.begin(), rest.end());
    return kept;
}

Mat row_permutation(const std::vector<std::size_t>& order) {
    Mat t(order.size(), order.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        t(r, order[r]) = 1;  // row r of T*M is row order[r] of M
    return t;
}

/// Unique coefficients x with K^T * x == target, K's rows independent.
Mat dependence_coefficients(const Mat& k_rows, const Mat& target_row) {
    auto sol = solve_affine(transpose(k_rows), transpose(target_row));
    // The kept rows span every later row, so this system is consistent
    // and determined.
    return sol.value().particular;
}

}  // namespace

PermutedData permuted_form(const Mat& a, const Mat& b) {
    PermutedData pd;

    std::vector<std::size_t> row_order = independent_rows_first(a, pd.a);
    pd.T_A = row_permutation(row_order);
    Mat ahat = pd.T_A * a;

    std::size_t m = a.rows();
    Mat kept_rows(0, a.cols());
    for (std::size_t i = 0; i < pd.a; ++i)
        kept_rows = vcat(kept_rows, ahat.row(i));
    pd.alpha = Mat(m - pd.a, pd.a);
    for (std::size_t i = pd.a; i < m; ++i) {
        Mat coeff = dependence_coefficients(kept_rows, ahat.row(i));
        for (std::size_t l = 0; l < pd.a; ++l)
            pd.alpha(i - pd.a, l) = coeff(l, 0);
    }

    // Columns of B: same construction on the transpose.
    std::vector<std::size_t> col_order = independent_rows_first(transpose(b), pd.b);
    pd.T_B = transpose(row_permutation(col_order));  // Bhat = B * T_B
    Mat bhat = b * pd.T_B;

    std::size_t q = b.cols();
    Mat kept_cols(b.rows(), 0);
    for (std::size_t j = 0; j < pd.b; ++j)
        kept_cols = hcat(kept_cols, bhat.col(j));
    pd.beta = Mat(pd.b, q - pd.b);
    for (std::size_t j = pd.b; j < q; ++j) {
        Mat coeff = solve_affine(kept_cols, bhat.col(j)).value().particular;
        for (std::size_t k = 0; k < pd.b; ++k)
            pd.beta(k, j - pd.b) = coeff(k, 0);
    }
    return pd;
}

bool structural_check(const Mat& a, const Mat& b, const Mat& c) {
    if (c.rows() != a.rows() || c.cols() != b.cols())
        throw ShapeError("A*X*B = C: A is " + shape_string(a) + ", B is " + shape_string(b) +
                         ", C is " + shape_string(c));
    PermutedData pd = permuted_form(a, b);
    Mat chat = pd.T_A * c * pd.T_B;
    const std::size_t m = chat.rows();
    const std::size_t q = chat.cols();

    // Rows below the first a must follow the row dependencies of Ahat.
    for (std::size_t i = pd.a; i < m; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            Rat expect(0);
            for (std::size_t l = 0; l < pd.a; ++l)
                expect += pd.alpha(i - pd.a, l) * chat(l, j);
            if (chat(i, j) != expect)
                return false;
        }

    // Columns after the first b must follow the column dependencies of Bhat.
    for (std::size_t j = pd.b; j < q; ++j)
        for (std::size_t i = 0; i < m; ++i) {
            Rat expect(0);
            for (std::size_t k = 0; k < pd.b; ++k)
                expect += pd.beta(k, j - pd.b) * chat(i, k);
            if (chat(i, j) != expect)
                return false;
        }

    return true;
}

}  // namespace axb
