#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "nnrep/rational.hpp"

namespace nnrep {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// Entrywise maximum of res_of_rational over a non-empty matrix.
int res_of_matrix(const RatMatrix& m);

/// The m-by-n matrix of all ones plus eps on the main diagonal
/// (1 + eps*[i == j]); requires 1 <= m <= n.
RatMatrix ones_plus_eps(Eigen::Index m, Eigen::Index n, const Rational& eps);

/// Closed-form Moore-Penrose pseudoinverse of ones_plus_eps(m, n, eps).
/// The result P is n-by-m:
///   top m-by-m block:    (1/eps) I - ((1 + n/eps) / d) * ones
///   bottom (n-m)-by-m:   (1/d) * ones
/// with d = m(n-m) + (m+eps)^2, computed exactly.  Requires m <= n,
/// eps != 0 and d != 0 (throws std::domain_error otherwise).  Under those
/// preconditions the matrix has full row rank and P B P = P, B P B = B,
/// and both products are symmetric.
RatMatrix pseudoinverse_ones_plus_eps(Eigen::Index m, Eigen::Index n, const Rational& eps);

/// Row rank of an arbitrary rational matrix, via fraction-free (Bareiss)
/// elimination on a row-rescaled integer copy.
Eigen::Index row_rank(const RatMatrix& m);

/// One exact solution x of B x = c for a matrix B with full row rank
/// (throws std::domain_error when the rows are dependent).  Free variables
/// are set to zero.  When B has the ones_plus_eps structure the
/// closed-form pseudoinverse is applied instead of elimination, so the
/// returned solution is B^+ c in that case.
RatVector solve_full_row_rank(const RatMatrix& B, const RatVector& c);

/// Detect the ones_plus_eps structure; returns true and stores the
/// off-diagonal-relative eps when B == ones_plus_eps(rows, cols, eps) for
/// some eps != 0.
bool matches_ones_plus_eps(const RatMatrix& B, Rational& eps_out);

}  // namespace nnrep
