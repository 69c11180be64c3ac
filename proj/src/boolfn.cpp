#include "nnrep/boolfn.hpp"

#include <bit>
#include <stdexcept>

namespace nnrep {

namespace {

void check_profile(const SymmetricProfile& p) {
    if (p.n < 0) throw std::invalid_argument("symmetric profile: negative arity");
    if (p.values.size() != static_cast<size_t>(p.n) + 1)
        throw std::invalid_argument("symmetric profile: need exactly n+1 values");
    for (auto v : p.values)
        if (v > 1) throw std::invalid_argument("symmetric profile: values must be 0/1");
}

}  // namespace

BooleanFunction::BooleanFunction(SymmetricProfile p) : fn_(std::move(p)) {
    const auto& sp = std::get<SymmetricProfile>(fn_);
    check_profile(sp);
    n_ = sp.n;
}

BooleanFunction::BooleanFunction(LinearThresholdFn t) : fn_(std::move(t)) {
    n_ = static_cast<int>(std::get<LinearThresholdFn>(fn_).weights.size());
    if (n_ < 1) throw std::invalid_argument("threshold function: need at least one weight");
}

BooleanFunction::BooleanFunction(TruthTable t) : fn_(std::move(t)) {
    const auto& tt = std::get<TruthTable>(fn_);
    if (tt.n < 1 || tt.n > 24) throw std::invalid_argument("truth table: arity out of range [1, 24]");
    if (tt.bits.size() != (size_t{1} << tt.n))
        throw std::invalid_argument("truth table: need exactly 2^n bits");
    for (auto b : tt.bits)
        if (b > 1) throw std::invalid_argument("truth table: bits must be 0/1");
    n_ = tt.n;
}

bool BooleanFunction::eval(std::uint32_t mask) const {
    if (const auto* p = std::get_if<SymmetricProfile>(&fn_))
        return p->values[std::popcount(mask)] != 0;
    if (const auto* t = std::get_if<LinearThresholdFn>(&fn_))
        return eval_threshold(*t, mask);
    return std::get<TruthTable>(fn_).bits[mask] != 0;
}

bool eval_symmetric(const SymmetricProfile& p, int weight) {
    check_profile(p);
    if (weight < 0 || weight > p.n) throw std::invalid_argument("eval_symmetric: weight out of range");
    return p.values[weight] != 0;
}

IntervalList intervals(const SymmetricProfile& p) {
    check_profile(p);
    IntervalList runs;
    for (int k = 0; k <= p.n; ++k) {
        if (!runs.empty() && runs.back().value == p.values[k])
            runs.back().hi = k;
        else
            runs.push_back({k, k, p.values[k]});
    }
    return runs;
}

int interval_count(const SymmetricProfile& p) {
    return static_cast<int>(intervals(p).size());
}

std::optional<int> is_periodic(const SymmetricProfile& p) {
    const auto runs = intervals(p);
    const int t = runs.front().hi - runs.front().lo + 1;
    for (const auto& r : runs)
        if (r.hi - r.lo + 1 != t) return std::nullopt;
    return t;
}

bool eval_threshold(const LinearThresholdFn& f, std::uint32_t mask) {
    Int sum = 0;
    for (Eigen::Index i = 0; i < f.weights.size(); ++i)
        if (mask >> i & 1u) sum += f.weights(i);
    return sum >= f.threshold;
}

LinearThresholdFn comp_function(int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("comp_function: arity out of range [1, 30]");
    LinearThresholdFn f;
    f.weights.resize(2 * n);
    Int pow = 1;
    for (int i = 0; i < n; ++i, pow *= 2) {
        f.weights(i) = pow;
        f.weights(n + i) = -pow;
    }
    f.threshold = 0;
    return f;
}

SymmetricProfile symmetric_threshold(int n, int b) {
    if (n < 1) throw std::invalid_argument("symmetric_threshold: need n >= 1");
    if (b < 1 || b > n) throw std::invalid_argument("symmetric_threshold: need 1 <= b <= n");
    SymmetricProfile p;
    p.n = n;
    p.values.resize(n + 1);
    for (int k = 0; k <= n; ++k) p.values[k] = k >= b ? 1 : 0;
    return p;
}

TruthTable to_truth_table(const BooleanFunction& f) {
    if (f.n() > 24) throw std::invalid_argument("to_truth_table: arity too large to materialize");
    TruthTable t;
    t.n = f.n();
    t.bits.resize(size_t{1} << t.n);
    for (std::uint32_t mask = 0; mask < t.bits.size(); ++mask)
        t.bits[mask] = f.eval(mask) ? 1 : 0;
    return t;
}

}  // namespace nnrep
