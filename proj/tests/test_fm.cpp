#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "nnrep/fourier_motzkin.hpp"
#include "oracles.hpp"

using nnrep::FmOutcome;
using nnrep::FmSystem;
using nnrep::Rational;
using nnrep::RatVector;

namespace {

// Book-keeping mirror of a system: every constraint added through this
// helper is recorded so a witness can be re-checked by plain substitution.
struct TracedSystem {
    explicit TracedSystem(int vars) : sys(vars) {}

    struct Row {
        RatVector coeffs;
        Rational bound;
        bool strict;
        bool lower;
    };

    int upper(const RatVector& c, const Rational& b, bool strict, const std::string& text) {
        rows.push_back({c, b, strict, false});
        return sys.add_upper(c, b, strict, text);
    }
    int lower(const RatVector& c, const Rational& b, bool strict, const std::string& text) {
        rows.push_back({c, b, strict, true});
        return sys.add_lower(c, b, strict, text);
    }

    bool satisfied_by(const RatVector& x) const {
        for (const Row& row : rows) {
            Rational lhs = 0;
            for (Eigen::Index j = 0; j < row.coeffs.size(); ++j) lhs += row.coeffs(j) * x(j);
            if (row.lower) {
                if (row.strict ? !(lhs > row.bound) : !(lhs >= row.bound)) return false;
            } else {
                if (row.strict ? !(lhs < row.bound) : !(lhs <= row.bound)) return false;
            }
        }
        return true;
    }

    FmSystem sys;
    std::vector<Row> rows;
};

RatVector unit(int vars, int index, const Rational& value = Rational(1)) {
    RatVector c = RatVector::Constant(vars, Rational(0));
    c(index) = value;
    return c;
}

}  // namespace

TEST_CASE("one-variable systems, including an infeasible pair on the last variable") {
    {
        FmSystem sys(1);
        const FmOutcome out = sys.solve();
        CHECK(out.feasible);
        CHECK(out.witness(0) == Rational(0));  // unconstrained variables default to 0
    }
    {
        TracedSystem ts(1);
        ts.lower(unit(1, 0), Rational(0), true, "x > 0");
        ts.upper(unit(1, 0), Rational(1), true, "x < 1");
        const FmOutcome out = ts.sys.solve();
        REQUIRE(out.feasible);
        CHECK(out.witness(0) == Rational(1, 2));  // interval midpoint
        CHECK(ts.satisfied_by(out.witness));
    }
    {
        // x > 1 together with x < 0: the contradiction lives entirely on the
        // final variable and must still be resolved, not skipped.
        FmSystem sys(1);
        sys.add_lower(unit(1, 0), Rational(1), true, "x > 1");
        sys.add_upper(unit(1, 0), Rational(0), true, "x < 0");
        const FmOutcome out = sys.solve();
        REQUIRE_FALSE(out.feasible);
        CHECK(out.certificate.sources == std::vector<int>{0, 1});
        CHECK_FALSE(out.certificate.detail.empty());
    }
    {
        // non-strict equality pin: x >= 2 and x <= 2 admits exactly x = 2
        FmSystem sys(1);
        sys.add_lower(unit(1, 0), Rational(2), false, "x >= 2");
        sys.add_upper(unit(1, 0), Rational(2), false, "x <= 2");
        const FmOutcome out = sys.solve();
        REQUIRE(out.feasible);
        CHECK(out.witness(0) == Rational(2));
    }
    {
        // the same pin with one strict side is infeasible
        FmSystem sys(1);
        sys.add_lower(unit(1, 0), Rational(2), true, "x > 2");
        sys.add_upper(unit(1, 0), Rational(2), false, "x <= 2");
        CHECK_FALSE(sys.solve().feasible);
    }
    {
        // half-open intervals pick a point one unit inside the bound
        FmSystem sys(1);
        sys.add_lower(unit(1, 0), Rational(0), true, "x > 0");
        CHECK(sys.solve().witness(0) == Rational(1));
        FmSystem sys2(1);
        sys2.add_upper(unit(1, 0), Rational(0), true, "x < 0");
        CHECK(sys2.solve().witness(0) == Rational(-1));
    }
}

TEST_CASE("multi-variable chains") {
    {
        // x0 < x1 and x1 < x0 is a cycle with no solution
        FmSystem sys(2);
        RatVector c(2);
        c(0) = 1;
        c(1) = -1;
        sys.add_upper(c, Rational(0), true, "x0 < x1");
        sys.add_lower(c, Rational(0), true, "x0 > x1");
        const FmOutcome out = sys.solve();
        REQUIRE_FALSE(out.feasible);
        CHECK(out.certificate.sources == std::vector<int>{0, 1});
    }
    {
        // strictly increasing chain squeezed into (0, 1)
        TracedSystem ts(3);
        for (int i = 0; i + 1 < 3; ++i) {
            RatVector c = RatVector::Constant(3, Rational(0));
            c(i) = 1;
            c(i + 1) = -1;
            ts.upper(c, Rational(0), true, "chain");
        }
        ts.lower(unit(3, 0), Rational(0), true, "x0 > 0");
        ts.upper(unit(3, 2), Rational(1), true, "x2 < 1");
        const FmOutcome out = ts.sys.solve();
        REQUIRE(out.feasible);
        CHECK(ts.satisfied_by(out.witness));
    }
    {
        // same chain with the window shrunk to nothing
        FmSystem sys(3);
        for (int i = 0; i + 1 < 3; ++i) {
            RatVector c = RatVector::Constant(3, Rational(0));
            c(i) = 1;
            c(i + 1) = -1;
            sys.add_upper(c, Rational(0), false, "chain");
        }
        sys.add_lower(unit(3, 0), Rational(1), false, "x0 >= 1");
        sys.add_upper(unit(3, 2), Rational(1), true, "x2 < 1");
        CHECK_FALSE(sys.solve().feasible);
    }
}

TEST_CASE("the constant-entry anchor system for the 5-input profile is feasible") {
    // alpha_1 < alpha_2 < alpha_3 with boundary windows
    //   I_i < (n/2)(alpha_i + alpha_{i+1}) < I_i + 1 for boundaries 1 and 4, n = 5.
    TracedSystem ts(3);
    const Rational half_n(5, 2);
    for (int i = 0; i < 2; ++i) {
        RatVector inc = RatVector::Constant(3, Rational(0));
        inc(i) = 1;
        inc(i + 1) = -1;
        ts.upper(inc, Rational(0), true, "ordering");

        RatVector window = RatVector::Constant(3, Rational(0));
        window(i) = half_n;
        window(i + 1) = half_n;
        const int boundary = (i == 0) ? 1 : 4;
        ts.lower(window, Rational(boundary), true, "window lower");
        ts.upper(window, Rational(boundary + 1), true, "window upper");
    }
    const FmOutcome out = ts.sys.solve();
    REQUIRE(out.feasible);
    CHECK(ts.satisfied_by(out.witness));
    // the printed witness (1/10, 3/5, 11/10) also satisfies the system
    CHECK(ts.satisfied_by(oracle::vec({"1/10", "3/5", "11/10"})));
}

TEST_CASE("certificates reference real constraints") {
    FmSystem sys(2);
    RatVector sum(2);
    sum(0) = 1;
    sum(1) = 1;
    const int a = sys.add_lower(sum, Rational(10), false, "x+y >= 10");
    RatVector x0 = unit(2, 0);
    RatVector x1 = unit(2, 1);
    const int b = sys.add_upper(x0, Rational(3), false, "x <= 3");
    const int c = sys.add_upper(x1, Rational(3), false, "y <= 3");
    const FmOutcome out = sys.solve();
    REQUIRE_FALSE(out.feasible);
    for (int source : out.certificate.sources) {
        CHECK(source >= 0);
        CHECK(source < sys.size());
    }
    CHECK(out.certificate.sources == std::vector<int>{a, b, c});
    CHECK(sys.description(a) == "x+y >= 10");
    CHECK_FALSE(out.certificate.detail.empty());
}

TEST_CASE("feasible verdicts always come with a satisfying witness") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> bound_num(-4, 4);
    std::uniform_int_distribution<int> bound_den(1, 2);
    int feasible_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int vars = 1 + static_cast<int>(rng() % 3);
        const int rows = 1 + static_cast<int>(rng() % 6);
        TracedSystem ts(vars);
        for (int r = 0; r < rows; ++r) {
            RatVector c(vars);
            for (int j = 0; j < vars; ++j) c(j) = coeff(rng);
            const Rational b(bound_num(rng), bound_den(rng));
            const bool strict = (rng() & 1u) != 0;
            if (rng() & 1u)
                ts.upper(c, b, strict, "rand upper");
            else
                ts.lower(c, b, strict, "rand lower");
        }
        const FmOutcome out = ts.sys.solve();
        if (out.feasible) {
            ++feasible_seen;
            CHECK(ts.satisfied_by(out.witness));
        } else {
            CHECK_FALSE(out.certificate.sources.empty());
        }
    }
    CHECK(feasible_seen > 0);  // the sweep exercises both outcomes
}

TEST_CASE("infeasible verdicts are never contradicted by a grid point") {
    // Independent falsification check: when the solver says infeasible, no
    // point of a fine bounded grid may satisfy every constraint.
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> bound_num(-2, 2);
    int infeasible_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        TracedSystem ts(2);
        const int rows = 2 + static_cast<int>(rng() % 5);
        for (int r = 0; r < rows; ++r) {
            RatVector c(2);
            c(0) = coeff(rng);
            c(1) = coeff(rng);
            const Rational b(bound_num(rng), 1);
            const bool strict = (rng() & 1u) != 0;
            if (rng() & 1u)
                ts.upper(c, b, strict, "rand");
            else
                ts.lower(c, b, strict, "rand");
        }
        const FmOutcome out = ts.sys.solve();
        if (out.feasible) {
            CHECK(ts.satisfied_by(out.witness));
            continue;
        }
        ++infeasible_seen;
        RatVector point(2);
        for (int i = -12; i <= 12; ++i) {
            for (int j = -12; j <= 12; ++j) {
                point(0) = Rational(i, 4);
                point(1) = Rational(j, 4);
                CHECK_FALSE(ts.satisfied_by(point));
            }
        }
    }
    CHECK(infeasible_seen > 0);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(FmSystem(0), std::invalid_argument);
    FmSystem sys(2);
    CHECK_THROWS_AS(sys.add_upper(unit(1, 0), Rational(0), true, "short"), std::invalid_argument);
}
