#include "nnrep/construct.hpp"

#include <algorithm>
#include <sstream>

namespace nnrep {

AnchorMatrix parity_based(const SymmetricProfile& p) {
    const auto iv = intervals(p);  // validates the profile
    (void)iv;
    AnchorMatrix a;
    a.coords.resize(p.n + 1, p.n);
    a.labels.resize(p.n + 1);
    for (int i = 0; i <= p.n; ++i) {
        const Rational level(i, p.n);
        for (int j = 0; j < p.n; ++j) a.coords(i, j) = level;
        a.labels[i] = p.values[i];
    }
    return a;
}

std::optional<AnchorMatrix> parity_extension(const SymmetricProfile& p,
                                             FmCertificate* certificate) {
    const auto iv = intervals(p);
    const int m = static_cast<int>(iv.size());

    if (m == 1) {  // constant function: any level works, pick 1/2
        AnchorMatrix a;
        a.coords = RatMatrix::Constant(1, p.n, Rational(1, 2));
        a.labels = {iv[0].value};
        return a;
    }

    FmSystem sys(m);
    for (int i = 0; i + 1 < m; ++i) {
        RatVector order = RatVector::Constant(m, Rational(0));
        order(i + 1) = 1;
        order(i) = -1;
        {
            std::ostringstream os;
            os << "alpha" << i + 2 << " > alpha" << i + 1;
            sys.add_lower(order, Rational(0), true, os.str());
        }
        RatVector pair = RatVector::Constant(m, Rational(0));
        pair(i) = 1;
        pair(i + 1) = 1;
        const int boundary = iv[i].hi;
        {
            std::ostringstream os;
            os << "alpha" << i + 1 << " + alpha" << i + 2 << " > " << to_string(Rational(2 * boundary, p.n));
            sys.add_lower(pair, Rational(2 * boundary, p.n), true, os.str());
        }
        {
            std::ostringstream os;
            os << "alpha" << i + 1 << " + alpha" << i + 2 << " < " << to_string(Rational(2 * (boundary + 1), p.n));
            sys.add_upper(pair, Rational(2 * (boundary + 1), p.n), true, os.str());
        }
    }

    const FmOutcome outcome = sys.solve();
    if (!outcome.feasible) {
        if (certificate) *certificate = outcome.certificate;
        return std::nullopt;
    }

    AnchorMatrix a;
    a.coords.resize(m, p.n);
    a.labels.resize(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < p.n; ++j) a.coords(i, j) = outcome.witness(i);
        a.labels[i] = iv[i].value;
    }
    return a;
}

AnchorMatrix interval_construction(const SymmetricProfile& p, const ConstructionParams& params) {
    const auto iv = intervals(p);
    const int count = static_cast<int>(iv.size());

    if (count == 1) {  // constant function: one central anchor
        AnchorMatrix a;
        a.coords = RatMatrix::Constant(1, p.n, Rational(1, 2));
        a.labels = {iv[0].value};
        return a;
    }

    if (!(params.eps > 0)) throw std::invalid_argument("interval_construction: eps must be positive");
    const int m = count - 1;
    std::vector<Rational> lambdas = params.lambdas;
    if (lambdas.empty()) lambdas.assign(m, Rational(1, 2));
    if (lambdas.size() != static_cast<size_t>(m))
        throw std::invalid_argument("interval_construction: need one lambda per anchor boundary");
    for (const auto& l : lambdas)
        if (!(l > 0 && l < 1))
            throw std::invalid_argument("interval_construction: lambdas must lie in (0, 1)");

    const RatMatrix B = ones_plus_eps(m, p.n, params.eps);

    // Boundary-placement vector: c_i pins the distance-tie midpoint between
    // anchors i and i+1 to a convex combination of the extreme input sums
    // on either side of the interval boundary I_i.
    RatVector c(m);
    RatVector column_prefix = RatVector::Constant(p.n, Rational(0));  // sum of rows 0..i of B
    for (int i = 0; i < m; ++i) {
        const RatVector row = B.row(i).transpose();
        column_prefix += row;
        Rational self = 0, cross = 0;
        for (int j = 0; j < p.n; ++j) {
            self += row(j) * row(j);
            cross += row(j) * column_prefix(j);
        }
        const int boundary = iv[i].hi;
        c(i) = self / 2 - cross + lambdas[i] * max_subset_sum(row, boundary) +
               (1 - lambdas[i]) * min_subset_sum(row, boundary + 1);
    }

    AnchorMatrix a;
    a.coords.resize(count, p.n);
    a.labels.resize(count);
    a.coords.row(0) = (pseudoinverse_ones_plus_eps(m, p.n, params.eps) * c).transpose();
    for (int i = 0; i < m; ++i) a.coords.row(i + 1) = a.coords.row(i) + B.row(i);
    for (int i = 0; i < count; ++i) a.labels[i] = iv[i].value;

    Eigen::Index violated = -1;
    if (!check_ns_condition(a, iv, &violated)) {
        std::ostringstream os;
        os << "interval_construction: neighbor condition violated at anchor row " << violated
           << " (adversarial parameters)";
        throw ConstructionError(os.str(), violated);
    }
    return a;
}

namespace {

// Smallest-window integer solution of  weights . y = target:  minimizes
// max|y_i| and, among those, returns the lexicographically smallest vector.
// Returns an empty vector when no solution exists within |y_i| <= cap.
std::vector<Int> bounded_diophantine(const std::vector<Int>& weights, const Int& target, int cap) {
    const int n = static_cast<int>(weights.size());
    for (int window = 1; window <= cap; ++window) {
        Int reach_bound = 0;
        for (const auto& w : weights) reach_bound += abs(w) * window;
        if (reach_bound > 2000000) break;  // table would be unreasonable; caller falls back
        if (abs(target) > reach_bound) continue;
        const long span = reach_bound.convert_to<long>();
        const long width = 2 * span + 1;

        // reach[i][s + span]: suffix i..n-1 can sum to s with |y| <= window
        std::vector<std::vector<char>> reach(n + 1, std::vector<char>(width, 0));
        reach[n][span] = 1;
        for (int i = n - 1; i >= 0; --i) {
            const long wi = weights[i].convert_to<long>();
            for (long s = -span; s <= span; ++s) {
                for (long y = -window; y <= window && !reach[i][s + span]; ++y) {
                    const long rest = s - wi * y;
                    if (rest >= -span && rest <= span && reach[i + 1][rest + span])
                        reach[i][s + span] = 1;
                }
            }
        }
        const long t = target.convert_to<long>();
        if (t < -span || t > span || !reach[0][t + span]) continue;

        std::vector<Int> y(n);
        long s = t;
        for (int i = 0; i < n; ++i) {
            const long wi = weights[i].convert_to<long>();
            for (long v = -window; v <= window; ++v) {
                const long rest = s - wi * v;
                if (rest >= -span && rest <= span && reach[i + 1][rest + span]) {
                    y[i] = v;
                    s = rest;
                    break;
                }
            }
        }
        return y;
    }
    return {};
}

}  // namespace

AnchorMatrix lt_two_anchor(const LinearThresholdFn& f) {
    const int n = static_cast<int>(f.weights.size());
    if (n < 1) throw std::invalid_argument("lt_two_anchor: need at least one weight");

    Int min_sum = 0, max_sum = 0;
    for (int i = 0; i < n; ++i) {
        if (f.weights(i) < 0) min_sum += f.weights(i);
        else max_sum += f.weights(i);
    }
    if (f.threshold > max_sum || f.threshold <= min_sum)
        throw std::domain_error("lt_two_anchor: function is constant");

    Int g = 0;
    for (int i = 0; i < n; ++i) g = gcd(g, Int(abs(f.weights(i))));

    // Reduced weights drive the search; the anchors use the original
    // weights whenever gcd(w) divides 2b - 1 (a half-integer point on the
    // original hyperplane exists exactly then), and otherwise the coprime
    // rewrite of the same Boolean function.
    std::vector<Int> reduced(n);
    for (int i = 0; i < n; ++i) reduced[i] = f.weights(i) / g;
    const Int two_b_minus_1 = 2 * f.threshold - 1;

    IntVector anchor_w(n);
    Int target;
    if (two_b_minus_1 % g == 0) {
        for (int i = 0; i < n; ++i) anchor_w(i) = f.weights(i);
        target = two_b_minus_1 / g;
    } else {
        for (int i = 0; i < n; ++i) anchor_w(i) = reduced[i];
        // ceil(b / g): same function with coprime weights; division truncates
        // toward zero, so only positive thresholds need the +g-1 nudge
        const Int b_red = f.threshold > 0 ? (f.threshold + g - 1) / g : f.threshold / g;
        target = 2 * b_red - 1;
    }

    Int w_max = 0;
    for (const auto& w : reduced) w_max = std::max(w_max, Int(abs(w)));
    const int cap = 2 * w_max.convert_to<int>() + 3;

    RatVector x_star(n);
    const std::vector<Int> y = bounded_diophantine(reduced, target, cap);
    if (!y.empty()) {
        for (int i = 0; i < n; ++i) x_star(i) = Rational(y[i], 2);
    } else {
        // Fallback: walk from the minimizer of (reduced) w . X toward the
        // maximizer, flipping coordinates by descending |w|; adjust the
        // crossing coordinate onto the hyperplane.
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return abs(reduced[a]) > abs(reduced[b]);
        });
        std::vector<std::uint8_t> x(n);
        Int sum = 0;
        for (int i = 0; i < n; ++i) {
            x[i] = reduced[i] < 0 ? 1 : 0;
            if (x[i]) sum += reduced[i];
        }
        const Rational b_prime = Rational(target, 2);
        int k = -1;
        for (int idx : order) {
            if (reduced[idx] == 0) continue;
            if (Rational(sum) < b_prime && Rational(sum + abs(reduced[idx])) > b_prime) {
                k = idx;
                break;
            }
            sum += abs(reduced[idx]);
            x[idx] ^= 1;
        }
        if (k < 0) throw std::logic_error("lt_two_anchor: no crossing step (unreachable)");
        for (int i = 0; i < n; ++i) x_star(i) = Rational(int(x[i]));
        x_star(k) += (b_prime - Rational(sum)) / Rational(reduced[k]);
    }

    AnchorMatrix a;
    a.coords.resize(2, n);
    a.labels = {0, 1};
    for (int j = 0; j < n; ++j) {
        a.coords(0, j) = x_star(j) - Rational(anchor_w(j));
        a.coords(1, j) = x_star(j) + Rational(anchor_w(j));
    }
    return a;
}

AnchorMatrix symmetric_lt_anchor(int n, int b) {
    if (n < 1) throw std::invalid_argument("symmetric_lt_anchor: need n >= 1");
    if (b < 1 || b > n) throw std::invalid_argument("symmetric_lt_anchor: need 1 <= b <= n");
    AnchorMatrix a;
    a.coords.resize(2, n);
    a.labels = {0, 1};
    for (int j = 0; j < n; ++j) {
        if (j < b - 1) {
            a.coords(0, j) = 0;
            a.coords(1, j) = 2;
        } else if (j == b - 1) {
            a.coords(0, j) = Rational(-1, 2);
            a.coords(1, j) = Rational(3, 2);
        } else {
            a.coords(0, j) = -1;
            a.coords(1, j) = 1;
        }
    }
    return a;
}

}  // namespace nnrep
