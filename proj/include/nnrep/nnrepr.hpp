#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nnrep/boolfn.hpp"
#include "nnrep/linalg.hpp"

namespace nnrep {

/// A labeled anchor set over Q^n: row i of `coords` is anchor i, labels are
/// 0/1.  Anchor order is significant (ties and interval assignments are
/// reported against row indices).
struct AnchorMatrix {
    RatMatrix coords;                  // m x n
    std::vector<std::uint8_t> labels;  // size m

    Eigen::Index count() const { return coords.rows(); }
    int n() const { return static_cast<int>(coords.cols()); }
};

enum class FailureReason { WrongLabel, CrossLabelTie };

struct VerificationFailure {
    std::uint32_t input = 0;  // packed input mask
    FailureReason reason = FailureReason::WrongLabel;
};

/// Outcome of exhaustive verification over {0,1}^n.  `assignment[k]` is the
/// winning anchor row for input k and is populated when the representation
/// is valid.
struct VerificationReport {
    bool valid = false;
    std::vector<VerificationFailure> failures;
    std::vector<std::int32_t> assignment;
    std::string warning;
};

struct NearestResult {
    Eigen::Index winner = -1;   // lowest-index anchor at minimum distance
    bool cross_label_tie = false;
};

/// Winner anchor for one input: the minimum-squared-distance row, ties
/// broken to the lowest index.  `cross_label_tie` is set when anchors of
/// both labels achieve the minimum (which invalidates a representation;
/// ties among same-label anchors do not).
NearestResult nearest_anchor(const AnchorMatrix& a, const std::vector<std::uint8_t>& x);

/// Exhaustive check that the nearest-anchor rule reproduces f on every
/// binary input.  Fails on wrong winner labels and on cross-label ties.
/// Guarded to n <= 30; above n = 24 a practical warning is attached and the
/// assignment map is omitted.  `jobs` > 1 splits the input space across
/// threads; results are independent of the split.
VerificationReport verify_representation(const AnchorMatrix& a, const BooleanFunction& f,
                                         int jobs = 1);

/// Largest / smallest sum of exactly t entries of v (t in [0, size]).
Rational max_subset_sum(const RatVector& v, int t);
Rational min_subset_sum(const RatVector& v, int t);

/// True when every column is strictly increasing down the rows.
bool check_monotonicity(const RatMatrix& coords);

/// Neighbor condition for an interval-ordered anchor matrix (anchor i for
/// interval i, labels matching interval values; anchor count must equal
/// interval count).  True iff for every consecutive pair i-1, i (i >= 2,
/// 1-based), with diff = a_i - a_{i-1} and t = last weight of interval i-1:
///   max_subset_sum(diff, t) < (||a_i||^2 - ||a_{i-1}||^2) / 2
///                           < min_subset_sum(diff, t+1).
/// Holds exactly when the representation is valid and realizes the ordered
/// interval assignment.  On failure, `violated_row` (if given) receives the
/// 0-based index i of the first offending pair.
bool check_ns_condition(const AnchorMatrix& a, const IntervalList& iv,
                        Eigen::Index* violated_row = nullptr);

/// For every opposite-label anchor pair (p positive, q negative), all inputs
/// assigned to p must lie strictly on p's side of the bisecting hyperplane
/// 2(a_p - a_q) . x = ||a_p||^2 - ||a_q||^2, and symmetrically for q.
/// Requires a valid report for the same anchor matrix.
bool check_separation(const AnchorMatrix& a, const VerificationReport& report);

/// Necessary condition for representations of periodic functions: let i* be
/// the anchor maximizing the sum of its first T coordinates (ties to the
/// lowest index); no input assigned to i* may have all zeros in its first T
/// coordinates.  Requires f periodic and the representation valid; constant
/// functions (T = n+1) satisfy the condition vacuously.
bool check_periodic_condition(const AnchorMatrix& a, const SymmetricProfile& f);

/// Anchor matrix with columns permuted: result(i, j) = a(i, perm[j]).
/// Validity of a representation of a correspondingly permuted function is
/// unaffected; for symmetric functions the function itself is unchanged.
AnchorMatrix permute_columns(const AnchorMatrix& a, const std::vector<int>& perm);

/// True iff the valid report realizes the ordered interval assignment:
/// every input of weight inside interval i is won by anchor i.
bool is_interval_assignment(const VerificationReport& report, const IntervalList& iv);

}  // namespace nnrep
