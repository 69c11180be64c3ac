#pragma once

#include <optional>
#include <stdexcept>

#include "nnrep/boolfn.hpp"
#include "nnrep/fourier_motzkin.hpp"
#include "nnrep/nnrepr.hpp"

namespace nnrep {

/// Knobs of the interval construction.  `eps` scales the diagonal of the
/// row-difference matrix and `lambdas` place each anchor boundary inside
/// its admissible window; the defaults (1/2 everywhere) always succeed,
/// while out-of-range values are either rejected up front or caught by the
/// post-construction neighbor-condition check.
struct ConstructionParams {
    Rational eps = Rational(1, 2);
    std::vector<Rational> lambdas;  // empty: every lambda_i = 1/2
};

/// Post-construction validation failure (e.g. an adversarial eps): carries
/// the first anchor row whose neighbor condition is violated.
class ConstructionError : public std::runtime_error {
  public:
    ConstructionError(const std::string& what, Eigen::Index row)
        : std::runtime_error(what), violated_row_(row) {}
    Eigen::Index violated_row() const { return violated_row_; }

  private:
    Eigen::Index violated_row_;
};

/// One anchor per input weight: anchor i sits at ((i-1)/n, ..., (i-1)/n)
/// with label f(i-1), for i = 1..n+1.  Valid for every symmetric function;
/// anchor count n+1, resolution that of 1/n.
AnchorMatrix parity_based(const SymmetricProfile& p);

/// Attempts an I(f)-anchor representation with constant-entry anchors
/// (alpha_i, ..., alpha_i).  Feasibility of the strict system
///     alpha_i < alpha_{i+1},
///     I_i < (n/2)(alpha_i + alpha_{i+1}) < I_i + 1
/// is decided exactly by Fourier-Motzkin elimination; on success the
/// witness anchors are returned, otherwise nullopt and, if requested, an
/// infeasibility certificate naming the contradictory constraint chain.
std::optional<AnchorMatrix> parity_extension(const SymmetricProfile& p,
                                             FmCertificate* certificate = nullptr);

/// I(f)-anchor construction for an arbitrary symmetric function.  With
/// m = I(f) - 1 and B = ones_plus_eps(m, n, eps), the first anchor is
/// B^+ c for the boundary-placement vector c (see ConstructionParams) and
/// each next anchor adds the corresponding row of B.  The result is
/// validated against the neighbor condition; a violation (possible only
/// for adversarial parameters) raises ConstructionError.  Constant
/// functions get the single anchor (1/2, ..., 1/2).
AnchorMatrix interval_construction(const SymmetricProfile& p,
                                   const ConstructionParams& params = {});

/// Two-anchor representation a_{1,2} = x* -/+ w of a non-constant threshold
/// function, where x* is a point on the separating hyperplane
/// w . x = b - 1/2 with half-integer coordinates, found by a bounded exact
/// search.  When gcd(w) does not divide 2b - 1 the function is first
/// rewritten with coprime weights (same Boolean function).  The output
/// resolution is at most res(weights) + 2.
AnchorMatrix lt_two_anchor(const LinearThresholdFn& f);

/// Closed-form two-anchor representation of the symmetric threshold
/// "|X| >= b":  a_1 = (0^(b-1), -1/2, -1^(n-b)),  a_2 = (2^(b-1), 3/2,
/// 1^(n-b)); resolution 2 for every n and b.
AnchorMatrix symmetric_lt_anchor(int n, int b);

}  // namespace nnrep
