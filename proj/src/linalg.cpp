#include "nnrep/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace nnrep {

int res_of_matrix(const RatMatrix& m) {
    if (m.size() == 0) throw std::invalid_argument("res_of_matrix: empty matrix");
    int r = 1;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r = std::max(r, res_of_rational(m(i, j)));
    return r;
}

RatMatrix ones_plus_eps(Eigen::Index m, Eigen::Index n, const Rational& eps) {
    if (m < 1 || m > n) throw std::invalid_argument("ones_plus_eps: need 1 <= m <= n");
    RatMatrix B = RatMatrix::Constant(m, n, Rational(1));
    for (Eigen::Index i = 0; i < m; ++i) B(i, i) += eps;
    return B;
}

RatMatrix pseudoinverse_ones_plus_eps(Eigen::Index m, Eigen::Index n, const Rational& eps) {
    if (m < 1 || m > n) throw std::invalid_argument("pseudoinverse_ones_plus_eps: need 1 <= m <= n");
    if (eps == 0) throw std::domain_error("pseudoinverse_ones_plus_eps: eps must be nonzero");
    const Rational mr(static_cast<long>(m));
    const Rational nr(static_cast<long>(n));
    const Rational d = mr * (nr - mr) + (mr + eps) * (mr + eps);
    if (d == 0) throw std::domain_error("pseudoinverse_ones_plus_eps: degenerate eps (denominator vanishes)");

    const Rational off = (1 + nr / eps) / d;  // subtracted from every top-block entry
    RatMatrix P(n, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            P(i, j) = (i == j ? 1 / eps : Rational(0)) - off;
    for (Eigen::Index i = m; i < n; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            P(i, j) = 1 / d;
    return P;
}

namespace {

// Integer copy of `m` with every row scaled by the lcm of its denominators;
// row scaling preserves rank.
Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic> integer_rows(const RatMatrix& m) {
    Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic> z(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Int scale = 1;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            scale = lcm(scale, Int(denominator(m(i, j))));
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            z(i, j) = Int(numerator(m(i, j))) * (scale / Int(denominator(m(i, j))));
    }
    return z;
}

}  // namespace

Eigen::Index row_rank(const RatMatrix& m) {
    if (m.size() == 0) return 0;
    auto a = integer_rows(m);
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Int prev_pivot = 1;
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        // find a pivot row at or below `rank`
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < rows; ++r)
            if (a(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank) a.row(pivot).swap(a.row(rank));
        // fraction-free update: entries stay integral, divisions are exact
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            for (Eigen::Index c = col + 1; c < cols; ++c)
                a(r, c) = (a(rank, col) * a(r, c) - a(r, col) * a(rank, c)) / prev_pivot;
            a(r, col) = 0;
        }
        prev_pivot = a(rank, col);
        ++rank;
    }
    return rank;
}

bool matches_ones_plus_eps(const RatMatrix& B, Rational& eps_out) {
    const Eigen::Index m = B.rows(), n = B.cols();
    if (m < 1 || m > n) return false;
    const Rational eps = B(0, 0) - 1;
    if (eps == 0) return false;
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (B(i, j) != (i == j ? 1 + eps : Rational(1))) return false;
    eps_out = eps;
    return true;
}

RatVector solve_full_row_rank(const RatMatrix& B, const RatVector& c) {
    const Eigen::Index m = B.rows(), n = B.cols();
    if (m < 1 || c.size() != m) throw std::invalid_argument("solve_full_row_rank: dimension mismatch");

    if (Rational eps; matches_ones_plus_eps(B, eps))
        return pseudoinverse_ones_plus_eps(m, n, eps) * c;

    // Exact Gauss-Jordan on the augmented system; any rank deficiency of B
    // violates the precondition, and with full row rank the system is
    // always consistent.
    RatMatrix a(m, n + 1);
    a.leftCols(n) = B;
    a.col(n) = c;
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < n && rank < m; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < m; ++r)
            if (a(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank) a.row(pivot).swap(a.row(rank));
        a.row(rank) /= a(rank, col);
        for (Eigen::Index r = 0; r < m; ++r) {
            if (r == rank || a(r, col) == 0) continue;
            a.row(r) -= a(r, col) * a.row(rank);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank < m) throw std::domain_error("solve_full_row_rank: matrix does not have full row rank");

    RatVector x = RatVector::Constant(n, Rational(0));  // free variables fixed at zero
    for (Eigen::Index r = 0; r < m; ++r) x(pivot_col[r]) = a(r, n);
    return x;
}

}  // namespace nnrep
