#include "axbsolve/equation.hpp"

#include <algorithm>

namespace axb {

namespace {

void check_equation_shapes(const Mat& a, const Mat& b, const Mat& c) {
    if (c.rows() != a.rows() || c.cols() != b.cols())
        throw ShapeError("A*X*B = C: A is " + shape_string(a) + ", B is " + shape_string(b) +
                         ", C is " + shape_string(c));
}

AffineMatMap family_from(const Mat& a, const Mat& b, Mat shift, const Mat& a1, const Mat& b1) {
    const std::size_t n = a.cols();
    const std::size_t p = b.rows();
    std::vector<MapTerm> terms;
    terms.push_back({Mat::identity(n), Mat::identity(p), +1});
    terms.push_back({a1 * a, b * b1, -1});
    return AffineMatMap(std::move(shift), std::move(terms));
}

}  // namespace

bool penrose_check(const Mat& a, const Mat& b, const Mat& c, const Mat& a1, const Mat& b1) {
    check_equation_shapes(a, b, c);
    if (!is_one_inverse(a, a1))
        throw std::invalid_argument("penrose_check: A1 is not a {1}-inverse of A");
    if (!is_one_inverse(b, b1))
        throw std::invalid_argument("penrose_check: B1 is not a {1}-inverse of B");
    return a * a1 * c * b1 * b == c;
}

bool is_consistent(const Mat& a, const Mat& b, const Mat& c) {
    return solution_set(a, b, c).has_value();
}

std::optional<AffineSet> solution_set(const Mat& a, const Mat& b, const Mat& c) {
    check_equation_shapes(a, b, c);
    return solve_affine(kron(transpose(b), a), vec(c));
}

AffineMatMap general_solution(const Mat& a, const Mat& b, const Mat& c) {
    check_equation_shapes(a, b, c);
    Mat a1 = OneInverseFamily(a).zero();
    Mat b1 = OneInverseFamily(b).zero();
    if (!(a * a1 * c * b1 * b == c))
        throw std::invalid_argument("general_solution: equation is inconsistent");
    return family_from(a, b, a1 * c * b1, a1, b1);
}

AffineMatMap solution_from_particular(const Mat& a, const Mat& b, const Mat& c, const Mat& x0) {
    check_equation_shapes(a, b, c);
    if (x0.rows() != a.cols() || x0.cols() != b.rows())
        throw ShapeError("particular solution is " + shape_string(x0) + ", expected " +
                         std::to_string(a.cols()) + "x" + std::to_string(b.rows()));
    if (!(a * x0 * b == c))
        throw std::invalid_argument("solution_from_particular: X0 does not solve A*X*B = C");
    Mat a1 = OneInverseFamily(a).zero();
    Mat b1 = OneInverseFamily(b).zero();
    return family_from(a, b, x0, a1, b1);
}

AffineMatMap fixed_point_map(const Mat& a, const Mat& b, const Mat& c, const Mat& a1,
                             const Mat& b1) {
    check_equation_shapes(a, b, c);
    if (!is_one_inverse(a, a1))
        throw std::invalid_argument("fixed_point_map: A1 is not a {1}-inverse of A");
    if (!is_one_inverse(b, b1))
        throw std::invalid_argument("fixed_point_map: B1 is not a {1}-inverse of B");
    return family_from(a, b, a1 * c * b1, a1, b1);
}

ReproReport reproductivity_of(const AffineMatMap& f) {
    Mat l = f.linear_vec_matrix();
    Mat defect = l * l - l;                     // zero iff the linear part is idempotent
    Mat fixed_defect = f.apply_linear(f.shift());  // zero iff the shift is annihilated

    const bool idempotent = defect.is_zero();
    const bool shift_fixed = fixed_defect.is_zero();
    if (idempotent && shift_fixed)
        return ReproReport{true, std::nullopt, ReproReason::Reproductive};

    ReproReport report;
    report.is_reproductive = false;
    report.reason =
        idempotent ? ReproReason::ShiftNotFixed : ReproReason::LinearPartNotIdempotent;

    // Build a witness. With Y = 0 the defect f(f(Y)) - f(Y) equals
    // L(shift), so any unfixed shift is witnessed by the zero matrix.
    // Otherwise L(shift) == 0 and a unit matrix at a nonzero column of
    // L*L - L witnesses non-idempotence.
    if (!shift_fixed) {
        report.witness = Mat(f.out_rows(), f.out_cols());
    } else {
        for (std::size_t j = 0; j < defect.cols(); ++j) {
            if (!defect.col(j).is_zero()) {
                Mat e(defect.rows(), 1);
                e(j, 0) = 1;
                report.witness = unvec(e, f.out_rows(), f.out_cols());
                break;
            }
        }
    }
    return report;
}

Certificate representability_certificate(const Mat& a, const Mat& b, const Mat& c,
                                          const Mat& x0) {
    check_equation_shapes(a, b, c);
    if (!(a * x0 * b == c))
        throw std::invalid_argument(
            "representability_certificate: X0 does not solve A*X*B = C");
    Certificate cert;
    cert.rank_x0 = rank(x0);
    cert.bound = std::min(rank(a), rank(b));
    cert.verdict = cert.rank_x0 > cert.bound ? ReprVerdict::ProvenNotRepresentable
                                             : ReprVerdict::Inconclusive;
    return cert;
}

}  // namespace axb
