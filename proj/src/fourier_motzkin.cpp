#include "nnrep/fourier_motzkin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nnrep {

namespace {

std::vector<int> merge_sources(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// True when the constraint involves no variable and cannot be satisfied
// (0 < bound failing, or 0 <= bound failing).
bool is_contradiction(const FmConstraint& c) {
    for (Eigen::Index j = 0; j < c.coeffs.size(); ++j)
        if (c.coeffs(j) != 0) return false;
    return c.strict ? !(0 < c.bound) : !(0 <= c.bound);
}

bool is_trivial(const FmConstraint& c) {
    for (Eigen::Index j = 0; j < c.coeffs.size(); ++j)
        if (c.coeffs(j) != 0) return false;
    return c.strict ? 0 < c.bound : 0 <= c.bound;
}

std::string render(const FmConstraint& c) {
    std::ostringstream os;
    bool first = true;
    for (Eigen::Index j = 0; j < c.coeffs.size(); ++j) {
        if (c.coeffs(j) == 0) continue;
        const Rational v = c.coeffs(j);
        if (first) {
            if (v == -1) os << "-";
            else if (v != 1) os << to_string(v) << "*";
        } else {
            os << (v > 0 ? " + " : " - ");
            const Rational av = abs(v);
            if (av != 1) os << to_string(av) << "*";
        }
        os << "x" << j + 1;
        first = false;
    }
    if (first) os << "0";
    os << (c.strict ? " < " : " <= ") << to_string(c.bound);
    return os.str();
}

}  // namespace

FmSystem::FmSystem(int vars) : vars_(vars) {
    if (vars < 1) throw std::invalid_argument("FmSystem: need at least one variable");
}

int FmSystem::add_upper(const RatVector& coeffs, const Rational& bound, bool strict,
                        std::string description) {
    if (coeffs.size() != vars_) throw std::invalid_argument("FmSystem: coefficient arity mismatch");
    const int index = static_cast<int>(rows_.size());
    rows_.push_back({coeffs, bound, strict, {index}});
    descriptions_.push_back(std::move(description));
    return index;
}

int FmSystem::add_lower(const RatVector& coeffs, const Rational& bound, bool strict,
                        std::string description) {
    return add_upper(-coeffs, -bound, strict, std::move(description));
}

FmOutcome FmSystem::solve() const {
    FmOutcome out;

    const auto fail_with = [&](const FmConstraint& c) {
        out.feasible = false;
        out.certificate.sources = c.sources;
        std::ostringstream os;
        os << "derived contradiction " << render(c) << " from:";
        for (int s : c.sources) os << "\n  [" << s << "] " << descriptions_[s];
        out.certificate.detail = os.str();
    };

    // level[v] holds the system over variables x_0..x_v, before x_v is
    // eliminated; level[0] is the final single-variable system.
    std::vector<std::vector<FmConstraint>> level(vars_);
    std::vector<FmConstraint> current = rows_;

    for (int v = vars_ - 1; v >= 0; --v) {
        for (const auto& c : current)
            if (is_contradiction(c)) { fail_with(c); return out; }
        level[v] = current;

        // Resolve every lower/upper pair on x_v — including v = 0, where the
        // resolvents are variable-free and expose any residual infeasibility.
        std::vector<FmConstraint> next;
        std::vector<const FmConstraint*> uppers, lowers;
        for (const auto& c : current) {
            if (c.coeffs(v) > 0) uppers.push_back(&c);
            else if (c.coeffs(v) < 0) lowers.push_back(&c);
            else if (!is_trivial(c)) next.push_back(c);
        }
        for (const auto* lo : lowers) {
            for (const auto* up : uppers) {
                // scale so the x_v coefficients cancel; both multipliers positive
                const Rational a = up->coeffs(v);
                const Rational b = -lo->coeffs(v);
                FmConstraint c;
                c.coeffs = b * up->coeffs + a * lo->coeffs;
                c.bound = b * up->bound + a * lo->bound;
                c.strict = up->strict || lo->strict;
                c.sources = merge_sources(up->sources, lo->sources);
                if (is_contradiction(c)) { fail_with(c); return out; }
                if (!is_trivial(c)) next.push_back(std::move(c));
            }
        }
        current = std::move(next);
    }

    // Feasible: assemble a witness from x_0 upward.
    out.feasible = true;
    out.witness = RatVector::Constant(vars_, Rational(0));
    for (int v = 0; v < vars_; ++v) {
        bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
        Rational lo, hi;
        for (const auto& c : level[v]) {
            if (c.coeffs(v) == 0) continue;  // handled at its own level
            Rational rest = c.bound;
            for (int j = 0; j < v; ++j) rest -= c.coeffs(j) * out.witness(j);
            const Rational value = rest / c.coeffs(v);
            if (c.coeffs(v) > 0) {  // upper bound on x_v
                if (!has_hi || value < hi || (value == hi && c.strict)) { hi = value; hi_strict = c.strict; }
                has_hi = true;
            } else {  // lower bound
                if (!has_lo || value > lo || (value == lo && c.strict)) { lo = value; lo_strict = c.strict; }
                has_lo = true;
            }
        }
        if (has_lo && has_hi)
            out.witness(v) = (lo == hi) ? lo : (lo + hi) / 2;
        else if (has_lo)
            out.witness(v) = lo_strict ? lo + 1 : lo;
        else if (has_hi)
            out.witness(v) = hi_strict ? hi - 1 : hi;
        // else: unconstrained, keep 0
    }
    return out;
}

}  // namespace nnrep
