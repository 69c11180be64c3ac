#include "nnrep/nnrepr.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace nnrep {

namespace {

void check_anchor_matrix(const AnchorMatrix& a) {
    if (a.coords.rows() < 1 || a.coords.cols() < 1)
        throw std::invalid_argument("anchor matrix: need at least one anchor and one column");
    if (a.labels.size() != static_cast<size_t>(a.coords.rows()))
        throw std::invalid_argument("anchor matrix: one label per anchor required");
    for (auto l : a.labels)
        if (l > 1) throw std::invalid_argument("anchor matrix: labels must be 0/1");
}

// Squared distance from a packed binary input to anchor row i.
Rational squared_distance(const RatMatrix& coords, Eigen::Index i, std::uint32_t mask) {
    Rational d = 0;
    for (Eigen::Index j = 0; j < coords.cols(); ++j) {
        const Rational diff = (mask >> j & 1u) - coords(i, j);
        d += diff * diff;
    }
    return d;
}

// Scans one contiguous block [begin, end) of input masks, walking the
// reflected-Gray sequence inside the block so that each step updates every
// anchor's squared distance with a single addition.
void verify_block(const AnchorMatrix& a, const BooleanFunction& f, std::uint32_t begin,
                  std::uint32_t end, bool want_assignment, VerificationReport& out) {
    const Eigen::Index m = a.count();
    const Eigen::Index n = a.coords.cols();

    // flip_delta(i, j): change of anchor i's squared distance when x_j goes
    // 0 -> 1, namely (1 - a_ij)^2 - a_ij^2 = 1 - 2 a_ij.
    RatMatrix flip_delta(m, n);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            flip_delta(i, j) = 1 - 2 * a.coords(i, j);

    const auto gray = [](std::uint32_t k) { return k ^ (k >> 1); };

    std::vector<Rational> dist(m);
    for (Eigen::Index i = 0; i < m; ++i) dist[i] = squared_distance(a.coords, i, gray(begin));

    for (std::uint32_t k = begin; k < end; ++k) {
        const std::uint32_t mask = gray(k);

        Eigen::Index winner = 0;
        for (Eigen::Index i = 1; i < m; ++i)
            if (dist[i] < dist[winner]) winner = i;
        bool tie = false;
        for (Eigen::Index i = winner + 1; i < m && !tie; ++i)
            if (a.labels[i] != a.labels[winner] && dist[i] == dist[winner]) tie = true;

        if (tie)
            out.failures.push_back({mask, FailureReason::CrossLabelTie});
        else if ((a.labels[winner] != 0) != f.eval(mask))
            out.failures.push_back({mask, FailureReason::WrongLabel});
        if (want_assignment) out.assignment[mask] = static_cast<std::int32_t>(winner);

        if (k + 1 < end) {
            const int bit = std::countr_zero(k + 1);  // coordinate toggled next
            const bool now_one = (gray(k + 1) >> bit & 1u) != 0;
            for (Eigen::Index i = 0; i < m; ++i)
                dist[i] += now_one ? flip_delta(i, bit) : Rational(-flip_delta(i, bit));
        }
    }
}

}  // namespace

NearestResult nearest_anchor(const AnchorMatrix& a, const std::vector<std::uint8_t>& x) {
    check_anchor_matrix(a);
    if (x.size() != static_cast<size_t>(a.coords.cols()))
        throw std::invalid_argument("nearest_anchor: input arity mismatch");
    std::uint32_t mask = 0;
    for (size_t j = 0; j < x.size(); ++j) {
        if (x[j] > 1) throw std::invalid_argument("nearest_anchor: inputs are binary");
        mask |= std::uint32_t{x[j]} << j;
    }

    NearestResult r;
    std::vector<Rational> dist(a.count());
    for (Eigen::Index i = 0; i < a.count(); ++i) dist[i] = squared_distance(a.coords, i, mask);
    r.winner = 0;
    for (Eigen::Index i = 1; i < a.count(); ++i)
        if (dist[i] < dist[r.winner]) r.winner = i;
    for (Eigen::Index i = r.winner + 1; i < a.count(); ++i)
        if (a.labels[i] != a.labels[r.winner] && dist[i] == dist[r.winner]) {
            r.cross_label_tie = true;
            break;
        }
    return r;
}

VerificationReport verify_representation(const AnchorMatrix& a, const BooleanFunction& f,
                                         int jobs) {
    check_anchor_matrix(a);
    const int n = a.n();
    if (n != f.n()) throw std::invalid_argument("verify_representation: arity mismatch");
    if (n > 30) throw std::invalid_argument("verify_representation: 2^n inputs not enumerable beyond n = 30");
    if (jobs < 1) throw std::invalid_argument("verify_representation: jobs must be >= 1");

    VerificationReport report;
    const bool want_assignment = n <= 24;
    if (!want_assignment)
        report.warning = "input space beyond 2^24: assignment map omitted; expect a long run";
    const std::uint64_t total = std::uint64_t{1} << n;
    if (want_assignment) report.assignment.assign(total, -1);

    if (jobs == 1 || total < 1024) {
        verify_block(a, f, 0, static_cast<std::uint32_t>(total), want_assignment, report);
    } else {
        const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), 64));
        std::vector<VerificationReport> parts(workers);
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            const auto begin = static_cast<std::uint32_t>(total * w / workers);
            const auto end = static_cast<std::uint32_t>(total * (w + 1) / workers);
            if (want_assignment) parts[w].assignment.assign(total, -1);
            threads.emplace_back([&, w, begin, end] {
                verify_block(a, f, begin, end, want_assignment, parts[w]);
            });
        }
        for (auto& t : threads) t.join();
        for (auto& part : parts) {
            report.failures.insert(report.failures.end(), part.failures.begin(),
                                   part.failures.end());
            if (want_assignment)
                for (std::uint64_t k = 0; k < total; ++k)
                    if (part.assignment[k] >= 0) report.assignment[k] = part.assignment[k];
        }
    }

    std::sort(report.failures.begin(), report.failures.end(),
              [](const VerificationFailure& x, const VerificationFailure& y) {
                  return x.input < y.input;
              });
    report.valid = report.failures.empty();
    if (!report.valid) report.assignment.clear();
    return report;
}

Rational max_subset_sum(const RatVector& v, int t) {
    if (t < 0 || t > v.size()) throw std::invalid_argument("max_subset_sum: t out of range");
    std::vector<Rational> s(v.data(), v.data() + v.size());
    std::sort(s.begin(), s.end(), [](const Rational& x, const Rational& y) { return y < x; });
    Rational sum = 0;
    for (int i = 0; i < t; ++i) sum += s[i];
    return sum;
}

Rational min_subset_sum(const RatVector& v, int t) {
    if (t < 0 || t > v.size()) throw std::invalid_argument("min_subset_sum: t out of range");
    std::vector<Rational> s(v.data(), v.data() + v.size());
    std::sort(s.begin(), s.end());
    Rational sum = 0;
    for (int i = 0; i < t; ++i) sum += s[i];
    return sum;
}

bool check_monotonicity(const RatMatrix& coords) {
    for (Eigen::Index i = 1; i < coords.rows(); ++i)
        for (Eigen::Index j = 0; j < coords.cols(); ++j)
            if (!(coords(i - 1, j) < coords(i, j))) return false;
    return true;
}

bool check_ns_condition(const AnchorMatrix& a, const IntervalList& iv,
                        Eigen::Index* violated_row) {
    check_anchor_matrix(a);
    if (static_cast<size_t>(a.count()) != iv.size())
        throw std::invalid_argument("check_ns_condition: anchor count must equal interval count");
    for (size_t i = 0; i < iv.size(); ++i)
        if (a.labels[i] != iv[i].value)
            throw std::invalid_argument("check_ns_condition: anchor labels must match interval values");

    for (Eigen::Index i = 1; i < a.count(); ++i) {
        const RatVector diff = (a.coords.row(i) - a.coords.row(i - 1)).transpose();
        Rational mid = 0;
        for (Eigen::Index j = 0; j < a.coords.cols(); ++j)
            mid += a.coords(i, j) * a.coords(i, j) - a.coords(i - 1, j) * a.coords(i - 1, j);
        mid /= 2;
        const int t = iv[i - 1].hi;  // last weight of the previous interval
        if (!(max_subset_sum(diff, t) < mid && mid < min_subset_sum(diff, t + 1))) {
            if (violated_row) *violated_row = i;
            return false;
        }
    }
    return true;
}

bool check_separation(const AnchorMatrix& a, const VerificationReport& report) {
    check_anchor_matrix(a);
    if (!report.valid || report.assignment.size() != (size_t{1} << a.n()))
        throw std::invalid_argument("check_separation: needs a valid report with assignment");

    const Eigen::Index m = a.count();
    const int n = a.n();
    for (Eigen::Index p = 0; p < m; ++p) {
        if (a.labels[p] != 1) continue;
        for (Eigen::Index q = 0; q < m; ++q) {
            if (a.labels[q] != 0) continue;
            // bisector of anchors p and q: 2(a_p - a_q) . x = ||a_p||^2 - ||a_q||^2
            RatVector normal(n);
            Rational offset = 0;
            for (Eigen::Index j = 0; j < n; ++j) {
                normal(j) = 2 * (a.coords(p, j) - a.coords(q, j));
                offset += a.coords(p, j) * a.coords(p, j) - a.coords(q, j) * a.coords(q, j);
            }
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
                const auto winner = report.assignment[mask];
                if (winner != p && winner != q) continue;
                Rational lhs = 0;
                for (int j = 0; j < n; ++j)
                    if (mask >> j & 1u) lhs += normal(j);
                if (winner == p && !(lhs > offset)) return false;
                if (winner == q && !(lhs < offset)) return false;
            }
        }
    }
    return true;
}

bool check_periodic_condition(const AnchorMatrix& a, const SymmetricProfile& f) {
    const auto period = is_periodic(f);
    if (!period) throw std::invalid_argument("check_periodic_condition: function is not periodic");
    const auto report = verify_representation(a, BooleanFunction(f));
    if (!report.valid)
        throw std::invalid_argument("check_periodic_condition: representation is not valid");

    const int t = *period;
    if (t > f.n) return true;  // constant function: no input has t coordinates at all

    Eigen::Index star = 0;
    Rational best = a.coords.row(0).head(t).sum();
    for (Eigen::Index i = 1; i < a.count(); ++i) {
        const Rational s = a.coords.row(i).head(t).sum();
        if (s > best) { best = s; star = i; }
    }

    const std::uint32_t prefix = (std::uint32_t{1} << t) - 1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << f.n); ++mask)
        if (report.assignment[mask] == star && (mask & prefix) == 0) return false;
    return true;
}

AnchorMatrix permute_columns(const AnchorMatrix& a, const std::vector<int>& perm) {
    check_anchor_matrix(a);
    const int n = a.n();
    if (perm.size() != static_cast<size_t>(n))
        throw std::invalid_argument("permute_columns: permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int j : perm) {
        if (j < 0 || j >= n || seen[j])
            throw std::invalid_argument("permute_columns: not a permutation");
        seen[j] = true;
    }
    AnchorMatrix out;
    out.labels = a.labels;
    out.coords.resize(a.count(), n);
    for (Eigen::Index i = 0; i < a.count(); ++i)
        for (int j = 0; j < n; ++j) out.coords(i, j) = a.coords(i, perm[j]);
    return out;
}

bool is_interval_assignment(const VerificationReport& report, const IntervalList& iv) {
    if (!report.valid || report.assignment.empty())
        throw std::invalid_argument("is_interval_assignment: needs a valid report with assignment");

    for (std::uint32_t mask = 0; mask < report.assignment.size(); ++mask) {
        const int weight = std::popcount(mask);
        Eigen::Index interval = -1;
        for (size_t i = 0; i < iv.size(); ++i)
            if (iv[i].lo <= weight && weight <= iv[i].hi) { interval = static_cast<Eigen::Index>(i); break; }
        if (interval < 0) throw std::invalid_argument("is_interval_assignment: weight not covered");
        if (report.assignment[mask] != interval) return false;
    }
    return true;
}

}  // namespace nnrep
