#include "axbsolve/one_inverse.hpp"

#include <numeric>
#include <random>

namespace axb {

RankNormalForm rank_normal_form(const Mat& a) {
    RrefResult rr = rref_with_transform(a);
    const std::size_t n = a.cols();

    // Column-eliminate the free-column entries of the rref. Each pivot
    // column is a unit vector, so subtracting f * pivot_col zeroes one
    // entry without disturbing the rest.
    Mat work = rr.rref;
    Mat p = Mat::identity(n);
    for (std::size_t i = 0; i < rr.rank; ++i) {
        const std::size_t pc = rr.pivot_cols[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == pc || work(i, j) == 0)
                continue;
            Rat f = work(i, j);
            for (std::size_t k = 0; k < work.rows(); ++k)
                work(k, j) -= f * work(k, pc);
            for (std::size_t k = 0; k < n; ++k)
                p(k, j) -= f * p(k, pc);
        }
    }

    // Permute the pivot columns to the front, keeping their order; the
    // free columns follow in ascending order.
    std::vector<std::size_t> order = rr.pivot_cols;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t pc : rr.pivot_cols)
        is_pivot[pc] = true;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j])
            order.push_back(j);
    Mat perm(n, n);
    for (std::size_t j = 0; j < n; ++j)
        perm(order[j], j) = 1;

    return RankNormalForm{std::move(rr.transform), p * perm, rr.rank};
}

Mat rank_identity(std::size_t rows, std::size_t cols, std::size_t rank) {
    Mat e(rows, cols);
    for (std::size_t i = 0; i < rank; ++i)
        e(i, i) = 1;
    return e;
}

bool is_one_inverse(const Mat& a, const Mat& g) {
    if (g.rows() != a.cols() || g.cols() != a.rows())
        throw ShapeError("is_one_inverse: A is " + shape_string(a) + ", candidate is " +
                         shape_string(g));
    return a * g * a == a;
}

OneInverseFamily::OneInverseFamily(const Mat& a)
    : rnf_(rank_normal_form(a)), m_(a.rows()), n_(a.cols()) {}

std::size_t OneInverseFamily::parameter_count() const {
    const std::size_t a = rnf_.rank;
    return a * (m_ - a) + (n_ - a) * a + (n_ - a) * (m_ - a);
}

Mat OneInverseFamily::at(const Mat& x1, const Mat& x2, const Mat& x3) const {
    const std::size_t a = rnf_.rank;
    if (x1.rows() != a || x1.cols() != m_ - a)
        throw ShapeError("one-inverse block X1: got " + shape_string(x1) + ", need " +
                         std::to_string(a) + "x" + std::to_string(m_ - a));
    if (x2.rows() != n_ - a || x2.cols() != a)
        throw ShapeError("one-inverse block X2: got " + shape_string(x2) + ", need " +
                         std::to_string(n_ - a) + "x" + std::to_string(a));
    if (x3.rows() != n_ - a || x3.cols() != m_ - a)
        throw ShapeError("one-inverse block X3: got " + shape_string(x3) + ", need " +
                         std::to_string(n_ - a) + "x" + std::to_string(m_ - a));
    Mat block = vcat(hcat(Mat::identity(a), x1), hcat(x2, x3));
    return rnf_.P * block * rnf_.Q;
}

Mat OneInverseFamily::zero() const {
    const std::size_t a = rnf_.rank;
    return at(Mat(a, m_ - a), Mat(n_ - a, a), Mat(n_ - a, m_ - a));
}

Mat OneInverseFamily::sample(std::uint64_t seed) const {
    const std::size_t a = rnf_.rank;
    std::mt19937_64 rng(seed);
    auto draw = [&rng] { return Rat(static_cast<long>(rng() % 7) - 3); };
    auto fill = [&draw](Mat& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = draw();
    };
    Mat x1(a, m_ - a), x2(n_ - a, a), x3(n_ - a, m_ - a);
    fill(x1);
    fill(x2);
    fill(x3);
    return at(x1, x2, x3);
}

}  // namespace axb
