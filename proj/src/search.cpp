#include "nnrep/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "nnrep/rational.hpp"

namespace nnrep {
namespace {

// Advances c to the next m-combination of {0,..,universe-1} in
// lexicographic order; returns false after the last one.
bool next_combination(std::vector<int>& c, int universe) {
    const int m = static_cast<int>(c.size());
    int i = m - 1;
    while (i >= 0 && c[i] == universe - m + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
    return true;
}

std::vector<std::uint8_t> labels_from_mask(std::uint32_t mask, int m) {
    std::vector<std::uint8_t> labels(m);
    for (int t = 0; t < m; ++t)
        labels[t] = static_cast<std::uint8_t>((mask >> (m - 1 - t)) & 1u);
    return labels;
}

}  // namespace

SearchResult bnn_exhaustive(const BooleanFunction& f, const SearchBudget& budget) {
    const int n = f.n();
    if (n < 1 || n > 16) throw std::domain_error("bnn_exhaustive: n out of range [1,16]");
    if (budget.max_anchors < 1 || budget.max_candidates < 1)
        throw std::domain_error("bnn_exhaustive: budget must allow at least one candidate");

    const std::uint32_t points = 1u << n;
    std::vector<std::uint8_t> truth(points);
    for (std::uint32_t x = 0; x < points; ++x) truth[x] = f.eval(x);

    SearchResult result;
    const int top = std::min<int>(budget.max_anchors, static_cast<int>(points));
    for (int m = 1; m <= top; ++m) {
        std::vector<int> subset(m);
        std::iota(subset.begin(), subset.end(), 0);
        do {
            for (std::uint32_t label_mask = 0; label_mask < (1u << m); ++label_mask) {
                if (result.candidates_tried == budget.max_candidates) {
                    result.status = SearchStatus::ExhaustedBudget;
                    return result;
                }
                ++result.candidates_tried;

                bool valid = true;
                for (std::uint32_t x = 0; x < points && valid; ++x) {
                    int best = n + 1;
                    int first_label = -1;
                    bool mixed = false;
                    for (int t = 0; t < m; ++t) {
                        const int d = std::popcount(x ^ static_cast<std::uint32_t>(subset[t]));
                        const int label = static_cast<int>((label_mask >> (m - 1 - t)) & 1u);
                        if (d < best) {
                            best = d;
                            first_label = label;
                            mixed = false;
                        } else if (d == best && label != first_label) {
                            mixed = true;
                        }
                    }
                    valid = !mixed && first_label == static_cast<int>(truth[x]);
                }
                if (valid) {
                    AnchorMatrix witness;
                    witness.coords = RatMatrix::Zero(m, n);
                    witness.labels = labels_from_mask(label_mask, m);
                    for (int t = 0; t < m; ++t)
                        for (int j = 0; j < n; ++j)
                            witness.coords(t, j) = Rational((subset[t] >> j) & 1);
                    result.status = SearchStatus::Found;
                    result.witness = std::move(witness);
                    return result;
                }
            }
        } while (next_combination(subset, static_cast<int>(points)));
    }
    result.status = SearchStatus::ExhaustedSpace;
    return result;
}

int bnn_parity_check(int n) {
    if (n < 1 || n > 3) throw std::domain_error("bnn_parity_check: n out of range [1,3]");
    SymmetricProfile parity;
    parity.n = n;
    parity.values.resize(n + 1);
    for (int k = 0; k <= n; ++k) parity.values[k] = static_cast<std::uint8_t>(k & 1);

    SearchBudget budget;
    budget.max_anchors = 1 << n;
    budget.max_candidates = std::uint64_t(-1);
    const SearchResult result = bnn_exhaustive(BooleanFunction(parity), budget);
    if (result.status != SearchStatus::Found)
        throw std::logic_error("bnn_parity_check: full vertex set should always represent parity");
    return result.witness->count();
}

namespace {

// All reduced fractions p/q with |p|, q <= cap, ascending.
std::vector<Rational> grid_values(int cap) {
    std::vector<Rational> values;
    values.emplace_back(0);
    for (int q = 1; q <= cap; ++q)
        for (int p = 1; p <= cap; ++p)
            if (std::gcd(p, q) == 1) {
                values.emplace_back(Rational(p) / q);
                values.emplace_back(Rational(-p) / q);
            }
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace

SearchResult nn_grid_search(const BooleanFunction& f, const SearchBudget& budget) {
    const int n = f.n();
    if (n < 1 || n > 8) throw std::domain_error("nn_grid_search: n out of range [1,8]");
    if (budget.max_resolution < 1 || budget.max_resolution > 4)
        throw std::domain_error("nn_grid_search: max_resolution out of range [1,4]");
    if (budget.max_anchors < 1 || budget.max_candidates < 1)
        throw std::domain_error("nn_grid_search: budget must allow at least one candidate");

    const int cap = (1 << budget.max_resolution) - 1;
    const std::vector<Rational> values = grid_values(cap);
    const int v = static_cast<int>(values.size());

    // Clearing denominators up to cap keeps all distance arithmetic in
    // int64: with cap <= 15 the scaled entries stay below 2^23 and squared
    // distance sums below 2^55.
    std::int64_t scale = 1;
    for (int q = 2; q <= cap; ++q) scale = std::lcm(scale, static_cast<std::int64_t>(q));
    std::vector<std::int64_t> scaled(v);
    for (int i = 0; i < v; ++i) {
        const Rational& r = values[i];
        scaled[i] = static_cast<std::int64_t>(numerator(r)) *
                    (scale / static_cast<std::int64_t>(denominator(r)));
    }

    const std::uint32_t points = 1u << n;
    std::vector<std::uint8_t> truth(points);
    for (std::uint32_t x = 0; x < points; ++x) truth[x] = f.eval(x);

    // Grid points are indexed in lexicographic coordinate order, first
    // coordinate most significant.
    std::uint64_t grid_size = 1;
    for (int j = 0; j < n; ++j) grid_size *= static_cast<std::uint64_t>(v);

    const auto decode = [&](std::uint64_t index, std::vector<int>& digits) {
        for (int j = n - 1; j >= 0; --j) {
            digits[j] = static_cast<int>(index % v);
            index /= v;
        }
    };

    SearchResult result;
    result.grid_relative = true;

    std::vector<std::vector<int>> digits;
    std::vector<std::uint64_t> subset;
    for (int m = 1; m <= budget.max_anchors; ++m) {
        if (static_cast<std::uint64_t>(m) > grid_size) break;
        digits.assign(m, std::vector<int>(n));
        subset.resize(m);
        std::iota(subset.begin(), subset.end(), 0);
        bool more = true;
        while (more) {
            for (int t = 0; t < m; ++t) decode(subset[t], digits[t]);
            for (std::uint32_t label_mask = 0; label_mask < (1u << m); ++label_mask) {
                if (result.candidates_tried == budget.max_candidates) {
                    result.status = SearchStatus::ExhaustedBudget;
                    return result;
                }
                ++result.candidates_tried;

                bool valid = true;
                for (std::uint32_t x = 0; x < points && valid; ++x) {
                    std::int64_t best = 0;
                    int first_label = -1;
                    bool mixed = false;
                    for (int t = 0; t < m; ++t) {
                        std::int64_t d = 0;
                        for (int j = 0; j < n; ++j) {
                            const std::int64_t diff =
                                ((x >> j) & 1u ? scale : 0) - scaled[digits[t][j]];
                            d += diff * diff;
                        }
                        const int label = static_cast<int>((label_mask >> (m - 1 - t)) & 1u);
                        if (first_label < 0 || d < best) {
                            best = d;
                            first_label = label;
                            mixed = false;
                        } else if (d == best && label != first_label) {
                            mixed = true;
                        }
                    }
                    valid = !mixed && first_label == static_cast<int>(truth[x]);
                }
                if (valid) {
                    AnchorMatrix witness;
                    witness.coords = RatMatrix::Zero(m, n);
                    witness.labels = labels_from_mask(label_mask, m);
                    for (int t = 0; t < m; ++t)
                        for (int j = 0; j < n; ++j)
                            witness.coords(t, j) = values[digits[t][j]];
                    result.status = SearchStatus::Found;
                    result.witness = std::move(witness);
                    return result;
                }
            }
            // Advance the point combination (same order as next_combination,
            // but over 64-bit indices).
            int i = m - 1;
            while (i >= 0 && subset[i] == grid_size - static_cast<std::uint64_t>(m - i)) --i;
            if (i < 0) {
                more = false;
            } else {
                ++subset[i];
                for (int j = i + 1; j < m; ++j) subset[j] = subset[j - 1] + 1;
            }
        }
    }
    result.status = SearchStatus::ExhaustedSpace;
    return result;
}

namespace {

// Exact Phase-I simplex deciding  A v >= rhs  with v free, via the split
// v = u - s, surplus variables, and artificials on rows with positive
// right-hand side.  Bland's rule on both the entering and leaving choice
// guarantees termination.  Returns a feasible v or nullopt.
std::optional<RatVector> simplex_feasible(const RatMatrix& A, const RatVector& rhs) {
    const int m = static_cast<int>(A.rows());
    const int d = static_cast<int>(A.cols());
    int artificials = 0;
    for (int i = 0; i < m; ++i)
        if (rhs(i) > 0) ++artificials;

    const int surplus0 = 2 * d;
    const int art0 = surplus0 + m;
    const int width = art0 + artificials + 1;  // last column = rhs
    std::vector<std::vector<Rational>> tab(
        static_cast<std::size_t>(m) + 1, std::vector<Rational>(width, Rational(0)));
    std::vector<int> basis(m);

    int next_art = art0;
    for (int i = 0; i < m; ++i) {
        if (rhs(i) > 0) {
            for (int j = 0; j < d; ++j) {
                tab[i][j] = A(i, j);
                tab[i][d + j] = -A(i, j);
            }
            tab[i][surplus0 + i] = -1;
            tab[i][next_art] = 1;
            tab[i][width - 1] = rhs(i);
            basis[i] = next_art++;
        } else {
            // Negate so the surplus variable can start basic at -rhs >= 0.
            for (int j = 0; j < d; ++j) {
                tab[i][j] = -A(i, j);
                tab[i][d + j] = A(i, j);
            }
            tab[i][surplus0 + i] = 1;
            tab[i][width - 1] = -rhs(i);
            basis[i] = surplus0 + i;
        }
    }

    // Reduced-cost row for minimizing the artificial sum, with the basic
    // artificial columns already canonicalized.
    auto& obj = tab[m];
    for (int i = 0; i < m; ++i)
        if (basis[i] >= art0)
            for (int c = 0; c < width; ++c) obj[c] += tab[i][c];
    for (int c = art0; c < art0 + artificials; ++c) obj[c] -= 1;

    for (;;) {
        int enter = -1;
        for (int c = 0; c < width - 1; ++c)
            if (obj[c] > 0) {
                enter = c;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        Rational best_ratio;
        for (int i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            const Rational ratio = tab[i][width - 1] / tab[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("simplex_feasible: unbounded phase-I objective");

        const Rational pivot = tab[leave][enter];
        for (int c = 0; c < width; ++c) tab[leave][c] /= pivot;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const Rational factor = tab[i][enter];
            if (factor == 0) continue;
            for (int c = 0; c < width; ++c) tab[i][c] -= factor * tab[leave][c];
        }
        basis[leave] = enter;
    }

    if (obj[width - 1] > 0) return std::nullopt;

    RatVector witness = RatVector::Zero(d);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < d)
            witness(basis[i]) += tab[i][width - 1];
        else if (basis[i] < 2 * d)
            witness(basis[i] - d) -= tab[i][width - 1];
    }
    return witness;
}

// Feasibility of the full system by cutting planes: solve a growing subset
// exactly, then add the lowest-index violated constraint until none is.
std::optional<RatVector> feasible_point(const RatMatrix& A, const RatVector& rhs) {
    const int m = static_cast<int>(A.rows());
    const int d = static_cast<int>(A.cols());
    std::vector<int> active;
    std::vector<char> in_active(m, 0);
    for (int i = 0; i < std::min(m, 2 * d + 2); ++i) {
        active.push_back(i);
        in_active[i] = 1;
    }

    for (;;) {
        RatMatrix sub(static_cast<int>(active.size()), d);
        RatVector sub_rhs(static_cast<int>(active.size()));
        for (std::size_t k = 0; k < active.size(); ++k) {
            sub.row(static_cast<int>(k)) = A.row(active[k]);
            sub_rhs(static_cast<int>(k)) = rhs(active[k]);
        }
        const auto point = simplex_feasible(sub, sub_rhs);
        if (!point) return std::nullopt;

        int violated = -1;
        for (int i = 0; i < m && violated < 0; ++i) {
            if (in_active[i]) continue;
            if (A.row(i).dot(*point) < rhs(i)) violated = i;
        }
        if (violated < 0) return point;
        active.push_back(violated);
        in_active[violated] = 1;
    }
}

std::optional<LinearThresholdFn> threshold_from_profile(const SymmetricProfile& p) {
    const IntervalList runs = intervals(p);
    LinearThresholdFn fn;
    fn.weights = IntVector::Zero(p.n);
    if (runs.size() == 1) {
        fn.threshold = runs[0].value ? 0 : 1;
        return fn;
    }
    if (runs.size() == 2) {
        if (runs[0].value == 0) {
            fn.weights.setConstant(1);
            fn.threshold = runs[1].lo;
        } else {
            fn.weights.setConstant(-1);
            fn.threshold = -runs[0].hi;
        }
        return fn;
    }
    // Three or more constant runs cannot be linearly separated: over the
    // inputs of weight k, the minimum of w.X is a convex function of k and
    // the maximum is concave, so a 0,1,0 (or 1,0,1) pattern in the profile
    // pins a middle level on the wrong side of any threshold.
    return std::nullopt;
}

}  // namespace

std::optional<LinearThresholdFn> is_linear_threshold(const BooleanFunction& f) {
    if (const SymmetricProfile* p = f.as_symmetric()) {
        auto fn = threshold_from_profile(*p);
        if (fn) {
            // The witness has constant weights, so w.X = weight * |X|.
            const Int w = p->n > 0 ? Int(fn->weights(0)) : Int(0);
            for (int k = 0; k <= p->n; ++k)
                if ((w * k >= fn->threshold) != static_cast<bool>(p->values[k]))
                    throw std::logic_error("is_linear_threshold: witness failed self-check");
        }
        return fn;
    }
    if (const LinearThresholdFn* t = f.as_threshold()) return *t;  // already a witness

    const int n = f.n();
    if (n > 12) throw std::domain_error("is_linear_threshold: truth tables limited to n <= 12");
    const TruthTable table = to_truth_table(f);

    const std::uint32_t points = 1u << n;
    RatMatrix A(static_cast<int>(points), n + 1);
    RatVector rhs(static_cast<int>(points));
    for (std::uint32_t x = 0; x < points; ++x) {
        const int sign = table.bits[x] ? 1 : -1;
        for (int j = 0; j < n; ++j) A(static_cast<int>(x), j) = sign * static_cast<int>((x >> j) & 1u);
        A(static_cast<int>(x), n) = -sign;
        rhs(static_cast<int>(x)) = table.bits[x] ? 0 : 1;
    }

    const auto point = feasible_point(A, rhs);
    if (!point) return std::nullopt;

    Int lcm_den = 1;
    for (int j = 0; j <= n; ++j)
        lcm_den = boost::multiprecision::lcm(lcm_den, Int(denominator((*point)(j))));
    LinearThresholdFn fn;
    fn.weights = IntVector::Zero(n);
    for (int j = 0; j < n; ++j)
        fn.weights(j) = Int(numerator((*point)(j))) * (lcm_den / Int(denominator((*point)(j))));
    fn.threshold = Int(numerator((*point)(n))) * (lcm_den / Int(denominator((*point)(n))));

    for (std::uint32_t x = 0; x < points; ++x)
        if (eval_threshold(fn, x) != static_cast<bool>(table.bits[x]))
            throw std::logic_error("is_linear_threshold: witness failed self-check");
    return fn;
}

}  // namespace nnrep
