#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "nnrep/linalg.hpp"

namespace nnrep {

// Inputs are binary vectors X = (x_1, ..., x_n).  Throughout the library an
// input is packed into an unsigned mask with x_i stored at bit (i-1), so the
// truth-table index of X is sum_i x_i * 2^(i-1).

/// A symmetric function of n inputs, described by its value at every weight
/// |X| = 0..n (so `values` has n+1 entries of 0/1).
struct SymmetricProfile {
    int n = 0;
    std::vector<std::uint8_t> values;
};

/// Maximal run [lo, hi] of input weights on which a symmetric function is
/// constant, together with that constant.
struct Interval {
    int lo = 0;
    int hi = 0;
    std::uint8_t value = 0;
};

using IntervalList = std::vector<Interval>;

/// f(X) = 1 iff  weights . X >= threshold, with exact integer arithmetic.
struct LinearThresholdFn {
    IntVector weights;
    Int threshold = 0;
};

/// Explicit truth table; bits[k] is the value on the input with index k.
struct TruthTable {
    int n = 0;
    std::vector<std::uint8_t> bits;
};

/// Value-type wrapper over the three function descriptions.  Evaluation is
/// by packed input mask.
class BooleanFunction {
  public:
    BooleanFunction(SymmetricProfile p);
    BooleanFunction(LinearThresholdFn t);
    BooleanFunction(TruthTable t);

    int n() const { return n_; }
    bool eval(std::uint32_t mask) const;

    const SymmetricProfile* as_symmetric() const { return std::get_if<SymmetricProfile>(&fn_); }
    const LinearThresholdFn* as_threshold() const { return std::get_if<LinearThresholdFn>(&fn_); }
    const TruthTable* as_truth_table() const { return std::get_if<TruthTable>(&fn_); }

  private:
    std::variant<SymmetricProfile, LinearThresholdFn, TruthTable> fn_;
    int n_ = 0;
};

/// Value of a symmetric function on an input of the given weight.
bool eval_symmetric(const SymmetricProfile& p, int weight);

/// Maximal constant runs of the profile, in increasing weight order.  The
/// number of runs I(f) is at least 1 and at most n+1.
IntervalList intervals(const SymmetricProfile& p);

/// Number of maximal constant runs.
int interval_count(const SymmetricProfile& p);

/// When every run has one common length T, returns T (then (n+1) = I(f)*T);
/// otherwise nullopt.  Constant functions are periodic with T = n+1.
std::optional<int> is_periodic(const SymmetricProfile& p);

/// Exact threshold evaluation on a packed input.
bool eval_threshold(const LinearThresholdFn& f, std::uint32_t mask);

/// The 2n-input comparison function COMP(X, Y) = 1 iff bin(X) >= bin(Y):
/// weights (2^0, ..., 2^(n-1), -2^0, ..., -2^(n-1)), threshold 0.
LinearThresholdFn comp_function(int n);

/// Symmetric threshold profile: value 1 exactly on weights >= b; requires
/// 1 <= b <= n.
SymmetricProfile symmetric_threshold(int n, int b);

/// Materialized truth table of an arbitrary function (guarded to n <= 24).
TruthTable to_truth_table(const BooleanFunction& f);

}  // namespace nnrep
