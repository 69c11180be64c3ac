#pragma once

#include <string>
#include <vector>

#include "nnrep/linalg.hpp"

namespace nnrep {

/// One linear constraint  coeffs . x < bound  (or <= when not strict),
/// carrying the set of original constraint indices it was derived from.
struct FmConstraint {
    RatVector coeffs;
    Rational bound;
    bool strict = true;
    std::vector<int> sources;
};

/// Witness of infeasibility: the original constraints whose positive
/// combination yields an impossible row, plus a rendered explanation.
struct FmCertificate {
    std::vector<int> sources;
    std::string detail;
};

struct FmOutcome {
    bool feasible = false;
    RatVector witness;  // one interior point, when feasible
    FmCertificate certificate;
};

/// Exact Fourier-Motzkin elimination over the rationals with strict
/// inequalities.  Variables are eliminated from the highest index down;
/// when the system is feasible a witness is assembled by back-substitution,
/// choosing interval midpoints (or bound +/- 1 on half-open intervals) to
/// keep denominators small.
class FmSystem {
  public:
    explicit FmSystem(int vars);

    int vars() const { return vars_; }
    int size() const { return static_cast<int>(rows_.size()); }

    /// Add  coeffs . x < bound  (strict) or  coeffs . x <= bound.
    /// Returns the constraint index used in certificates.
    int add_upper(const RatVector& coeffs, const Rational& bound, bool strict,
                  std::string description);

    /// Add  coeffs . x > bound  (strict) or  >=; stored negated.
    int add_lower(const RatVector& coeffs, const Rational& bound, bool strict,
                  std::string description);

    const std::string& description(int index) const { return descriptions_.at(index); }

    FmOutcome solve() const;

  private:
    int vars_;
    std::vector<FmConstraint> rows_;
    std::vector<std::string> descriptions_;
};

}  // namespace nnrep
