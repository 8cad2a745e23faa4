#include "axbsolve/systems.hpp"

#include <utility>

#include "axbsolve/one_inverse.hpp"

namespace axb {

namespace {

void require_square(const Mat& a, const char* who) {
    if (!a.is_square())
        throw ShapeError(std::string(who) + ": A must be square, got " + shape_string(a));
}

Mat checked_inverse_of(const Mat& a, const Mat& a1, const char* who) {
    if (!is_one_inverse(a, a1))
        throw std::invalid_argument(std::string(who) + ": not a {1}-inverse");
    return a1;
}

}  // namespace

std::optional<AffineSet> stacked_oracle(const MatrixSystem& sys) {
    const std::size_t dim = sys.x_rows * sys.x_cols;
    Mat stacked(0, dim);
    Mat rhs(0, 1);
    for (const MatEquation& eq : sys.equations) {
        Mat block(eq.rhs.rows() * eq.rhs.cols(), dim);
        for (const MapTerm& t : eq.terms) {
            if (t.left.cols() != sys.x_rows || t.right.rows() != sys.x_cols ||
                t.left.rows() != eq.rhs.rows() || t.right.cols() != eq.rhs.cols())
                throw ShapeError("system term " + shape_string(t.left) + " * X * " +
                                 shape_string(t.right) + " does not fit unknown " +
                                 std::to_string(sys.x_rows) + "x" + std::to_string(sys.x_cols) +
                                 " and rhs " + shape_string(eq.rhs));
            Mat k = kron(transpose(t.right), t.left);
            block = t.sign > 0 ? block + k : block - k;
        }
        stacked = vcat(stacked, block);
        rhs = vcat(rhs, vec(eq.rhs));
    }
    return solve_affine(stacked, rhs);
}

AffineMatMap presic_family(const Mat& a, PresicEq which) {
    require_square(a, "presic_family");
    return presic_family(a, which, OneInverseFamily(a).zero());
}

AffineMatMap presic_family(const Mat& a, PresicEq which, const Mat& a1) {
    require_square(a, "presic_family");
    checked_inverse_of(a, a1, "presic_family");
    const std::size_t n = a.rows();
    const Mat id = Mat::identity(n);
    Mat ga = a1 * a;  // idempotent
    Mat ag = a * a1;  // idempotent
    switch (which) {
        case PresicEq::E1:
            return AffineMatMap(Mat(n, n), {{id, id, +1}, {ga, id, -1}});
        case PresicEq::E2:
            return AffineMatMap(Mat(n, n), {{id, id, +1}, {id, ag, -1}});
        case PresicEq::E3:
            return AffineMatMap(a1, {{id, id, +1}, {ga, ag, -1}});
        case PresicEq::E4:
            return AffineMatMap(id, {{id, id, +1}, {ga, id, -1}});
        case PresicEq::E5:
            return AffineMatMap(id, {{id, id, +1}, {id, ag, -1}});
    }
    throw std::invalid_argument("presic_family: unknown equation tag");
}

AffineMatMap haveric_family(const Mat& a, HavericEq which) {
    require_square(a, "haveric_family");
    return haveric_family(a, which, OneInverseFamily(a).zero());
}

AffineMatMap haveric_family(const Mat& a, HavericEq which, const Mat& a1) {
    require_square(a, "haveric_family");
    checked_inverse_of(a, a1, "haveric_family");
    const std::size_t n = a.rows();
    const Mat id = Mat::identity(n);
    Mat ga = a1 * a;
    Mat ag = a * a1;
    switch (which) {
        case HavericEq::E3:
            return AffineMatMap(a1 * a * a1, {{id, id, +1}, {ga, ag, -1}});
        case HavericEq::E4:
            return AffineMatMap(a1 * a, {{id, id, +1}, {ga, id, -1}});
        case HavericEq::E5:
            return AffineMatMap(a * a1, {{id, id, +1}, {id, ag, -1}});
    }
    throw std::invalid_argument("haveric_family: unknown equation tag");
}

std::optional<TwoSidedFamilies> two_sided_solve(const Mat& a, const Mat& b, const Mat& d,
                                                const Mat& e) {
    // A*X == B fixes X as a.cols x b.cols; X*D == E must agree.
    if (b.rows() != a.rows())
        throw ShapeError("A*X = B: A is " + shape_string(a) + ", B is " + shape_string(b));
    const std::size_t n = a.cols();
    const std::size_t p = b.cols();
    if (d.rows() != p || e.rows() != n || e.cols() != d.cols())
        throw ShapeError("X*D = E with X " + std::to_string(n) + "x" + std::to_string(p) +
                         ": D is " + shape_string(d) + ", E is " + shape_string(e));

    MatrixSystem sys{n, p, {}};
    sys.equations.push_back({{{a, Mat::identity(p), +1}}, b});
    sys.equations.push_back({{{Mat::identity(n), d, +1}}, e});
    auto oracle = stacked_oracle(sys);
    if (!oracle)
        return std::nullopt;

    Mat x0 = unvec(oracle->particular, n, p);
    Mat a1 = OneInverseFamily(a).zero();
    Mat d1 = OneInverseFamily(d).zero();
    Mat left = Mat::identity(n) - a1 * a;
    Mat right = Mat::identity(p) - d * d1;

    AffineMatMap general(std::move(x0), {{left, right, +1}});
    Mat repro_shift = a1 * b + e * d1 - a1 * a * e * d1;
    AffineMatMap reproductive(std::move(repro_shift), {{left, right, +1}});
    return TwoSidedFamilies{std::move(general), std::move(reproductive)};
}

std::optional<CommutingSolution> commuting_system_solve(const Mat& a) {
    require_square(a, "commuting_system_solve");
    const std::size_t n = a.rows();
    const Mat id = Mat::identity(n);

    MatrixSystem sys{n, n, {}};
    sys.equations.push_back({{{a, a, +1}}, a});                    // A*X*A == A
    sys.equations.push_back({{{a, id, +1}, {id, a, -1}}, Mat(n, n)});  // A*X - X*A == 0
    auto oracle = stacked_oracle(sys);
    if (!oracle)
        return std::nullopt;

    Mat abar = unvec(oracle->particular, n, n);
    Mat ba = abar * a;
    Mat ab = a * abar;
    AffineMatMap family(abar * a * abar,
                        {{id, id, +1}, {ba, id, -1}, {id, ab, -1}, {ba, ab, +1}});
    return CommutingSolution{std::move(abar), std::move(family)};
}

}  // namespace axb
