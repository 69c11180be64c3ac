#pragma once

#include <cstdint>
#include <optional>

#include "nnrep/boolfn.hpp"
#include "nnrep/nnrepr.hpp"

namespace nnrep {

/// Caps for the exhaustive searches.  A search that scans its whole
/// candidate space without hitting a cap reports a definitive negative
/// (ExhaustedSpace); hitting max_candidates first is indeterminate.
struct SearchBudget {
    int max_anchors = 4;
    int max_resolution = 2;          // grid search only
    std::uint64_t max_candidates = 10'000'000;
};

enum class SearchStatus { Found, ExhaustedSpace, ExhaustedBudget };

struct SearchResult {
    SearchStatus status = SearchStatus::ExhaustedSpace;
    std::optional<AnchorMatrix> witness;  // present iff status == Found
    std::uint64_t candidates_tried = 0;
    bool grid_relative = false;  // witness/negative holds relative to the value grid only
};

/// Smallest anchor set drawn from the hypercube vertices (labels free,
/// i.e. not tied to f's value at the vertex) that represents f, searching
/// sizes 1..max_anchors, vertex subsets in lexicographic order and label
/// vectors in lexicographic order.  Every candidate is checked by the
/// nearest-anchor rule over all 2^n inputs.  Guarded to n <= 16 (intended
/// for n <= 4).
SearchResult bnn_exhaustive(const BooleanFunction& f, const SearchBudget& budget);

/// Size of the minimal vertex-anchor representation of n-input parity
/// (odd weight -> 1), via bnn_exhaustive without artificial caps.
int bnn_parity_check(int n);

/// Exhaustive search over anchor matrices whose entries are rationals p/q
/// with |p|, q <= 2^max_resolution - 1 (every value of resolution at most
/// max_resolution).  Candidate sets are combinations of grid points in
/// lexicographic order.  Results are grid-relative: a Found witness upper
/// bounds the anchor count over Q^n, an ExhaustedSpace negative only rules
/// out the grid.  Guarded to n <= 8 and max_resolution <= 4.
SearchResult nn_grid_search(const BooleanFunction& f, const SearchBudget& budget);

/// Exact test for linear separability with unit gap: returns integer
/// (weights, threshold) with  w . X >= b  on true points and  <= b - 1  on
/// false points, or nullopt.  Symmetric profiles are decided by the
/// monotone-profile criterion (separable iff at most two constant runs,
/// with unit weights as witness); other functions go through exact
/// rational Phase-I simplex over the 2^n constraints (guarded to n <= 12).
std::optional<LinearThresholdFn> is_linear_threshold(const BooleanFunction& f);

}  // namespace nnrep
