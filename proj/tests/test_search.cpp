#include <doctest.h>

#include <bit>
#include <random>
#include <stdexcept>
#include <vector>

#include "nnrep/boolfn.hpp"
#include "nnrep/construct.hpp"
#include "nnrep/nnrepr.hpp"
#include "nnrep/search.hpp"
#include "oracles.hpp"

using nnrep::AnchorMatrix;
using nnrep::bnn_exhaustive;
using nnrep::bnn_parity_check;
using nnrep::BooleanFunction;
using nnrep::eval_threshold;
using nnrep::Int;
using nnrep::interval_count;
using nnrep::is_linear_threshold;
using nnrep::LinearThresholdFn;
using nnrep::lt_two_anchor;
using nnrep::nn_grid_search;
using nnrep::Rational;
using nnrep::SearchBudget;
using nnrep::SearchResult;
using nnrep::SearchStatus;
using nnrep::SymmetricProfile;
using nnrep::symmetric_threshold;
using nnrep::to_truth_table;
using nnrep::verify_representation;

namespace {

LinearThresholdFn threshold(const std::vector<long>& w, long b) {
    LinearThresholdFn f;
    f.weights.resize(static_cast<Eigen::Index>(w.size()));
    for (size_t j = 0; j < w.size(); ++j) f.weights(static_cast<Eigen::Index>(j)) = w[j];
    f.threshold = b;
    return f;
}

bool same_anchor_sets(const AnchorMatrix& a, const AnchorMatrix& b) {
    if (a.count() != b.count() || a.n() != b.n()) return false;
    return oracle::same(a.coords, b.coords) && a.labels == b.labels;
}

// Witnesses coming out of any search must stand on their own.
void check_witness(const SearchResult& result, const BooleanFunction& f) {
    REQUIRE(result.status == SearchStatus::Found);
    REQUIRE(result.witness.has_value());
    CHECK(verify_representation(*result.witness, f).valid);
}

}  // namespace

TEST_CASE("vertex-anchor search: XOR needs all four vertices") {
    const BooleanFunction f(oracle::profile({0, 1, 0}));
    const SearchResult result = bnn_exhaustive(f, SearchBudget{});
    check_witness(result, f);
    REQUIRE(result.witness->count() == 4);
    CHECK_FALSE(result.grid_relative);

    // the minimal witness is the full vertex set labeled by the function
    for (int k = 0; k < 4; ++k) {
        for (int j = 0; j < 2; ++j)
            CHECK(result.witness->coords(k, j) == Rational((k >> j) & 1));
        CHECK((result.witness->labels[static_cast<size_t>(k)] != 0) ==
              f.eval(static_cast<std::uint32_t>(k)));
    }

    // candidate accounting: all 8 + 24 + 32 smaller candidates fail, then
    // labelings 0..5 of the full set fail before (0,1,1,0) lands at 71.
    CHECK(result.candidates_tried == 71);
}

TEST_CASE("vertex-anchor search: pinned small witnesses") {
    {
        // 3-input majority: two antipodal vertices suffice
        const BooleanFunction f(symmetric_threshold(3, 2));
        const SearchResult result = bnn_exhaustive(f, SearchBudget{});
        check_witness(result, f);
        CHECK(same_anchor_sets(*result.witness,
                               oracle::anchors({{"0", "0", "0"}, {"1", "1", "1"}}, {0, 1})));
    }
    {
        // AND: both false neighbors plus the true corner
        const BooleanFunction f(symmetric_threshold(2, 2));
        const SearchResult result = bnn_exhaustive(f, SearchBudget{});
        check_witness(result, f);
        CHECK(same_anchor_sets(*result.witness,
                               oracle::anchors({{"1", "0"}, {"0", "1"}, {"1", "1"}}, {0, 0, 1})));
    }
}

TEST_CASE("vertex-anchor search is deterministic and respects budgets") {
    const BooleanFunction f(oracle::profile({0, 1, 0}));
    const SearchResult first = bnn_exhaustive(f, SearchBudget{});
    const SearchResult second = bnn_exhaustive(f, SearchBudget{});
    REQUIRE(first.witness.has_value());
    REQUIRE(second.witness.has_value());
    CHECK(same_anchor_sets(*first.witness, *second.witness));
    CHECK(first.candidates_tried == second.candidates_tried);

    SearchBudget tight;
    tight.max_anchors = 3;  // XOR needs 4: scanning the full space is a definitive no
    const SearchResult negative = bnn_exhaustive(f, tight);
    CHECK(negative.status == SearchStatus::ExhaustedSpace);
    CHECK_FALSE(negative.witness.has_value());
    CHECK(negative.candidates_tried == 8 + 24 + 32);

    SearchBudget tiny;
    tiny.max_candidates = 10;  // indeterminate: the cap fires first
    const SearchResult capped = bnn_exhaustive(f, tiny);
    CHECK(capped.status == SearchStatus::ExhaustedBudget);
    CHECK(capped.candidates_tried == 10);
}

TEST_CASE("bnn_parity_check returns 2^n") {
    CHECK(bnn_parity_check(1) == 2);
    CHECK(bnn_parity_check(2) == 4);
    CHECK(bnn_parity_check(3) == 8);
    CHECK_THROWS_AS(bnn_parity_check(4), std::domain_error);
}

TEST_CASE("grid search: XOR has a 3-anchor grid witness but no 2-anchor one") {
    const BooleanFunction f(oracle::profile({0, 1, 0}));

    SearchBudget budget;
    budget.max_anchors = 3;
    budget.max_resolution = 2;
    budget.max_candidates = 20'000'000;
    const SearchResult found = nn_grid_search(f, budget);
    check_witness(found, f);
    CHECK(found.witness->count() == 3);
    CHECK(found.grid_relative);
    // resolution-2 grid: 15 values per coordinate, 225 points; every one- and
    // two-anchor candidate (450 + 100800) fails before the three-anchor phase
    CHECK(found.candidates_tried > 450 + 100800);

    SearchBudget pairs = budget;
    pairs.max_anchors = 2;
    const SearchResult none = nn_grid_search(f, pairs);
    CHECK(none.status == SearchStatus::ExhaustedSpace);
    CHECK(none.grid_relative);
    CHECK(none.candidates_tried == 450 + 100800);

    SearchBudget capped = budget;
    capped.max_candidates = 1000;
    const SearchResult out_of_gas = nn_grid_search(f, capped);
    CHECK(out_of_gas.status == SearchStatus::ExhaustedBudget);
    CHECK(out_of_gas.candidates_tried == 1000);
}

TEST_CASE("grid search: threshold and constant functions") {
    {
        const BooleanFunction f(symmetric_threshold(2, 2));
        SearchBudget budget;
        budget.max_anchors = 2;
        const SearchResult result = nn_grid_search(f, budget);
        check_witness(result, f);
        CHECK(result.witness->count() == 2);
    }
    {
        const BooleanFunction f(oracle::profile({1, 1}));
        SearchBudget budget;
        budget.max_anchors = 1;
        const SearchResult result = nn_grid_search(f, budget);
        check_witness(result, f);
        CHECK(result.witness->count() == 1);
    }
}

TEST_CASE("vertex-anchor minimum never beats the rational grid minimum") {
    // binary anchors are a special case of rational anchors
    SearchBudget budget;
    budget.max_candidates = 20'000'000;
    {
        const BooleanFunction f(oracle::profile({0, 1, 0}));
        const SearchResult vertex = bnn_exhaustive(f, budget);
        const SearchResult grid = nn_grid_search(f, budget);
        REQUIRE(vertex.witness.has_value());
        REQUIRE(grid.witness.has_value());
        CHECK(vertex.witness->count() >= grid.witness->count());
    }
    {
        const BooleanFunction f(symmetric_threshold(2, 2));
        const SearchResult vertex = bnn_exhaustive(f, budget);
        const SearchResult grid = nn_grid_search(f, budget);
        REQUIRE(vertex.witness.has_value());
        REQUIRE(grid.witness.has_value());
        CHECK(vertex.witness->count() >= grid.witness->count());
    }
}

TEST_CASE("search guards") {
    const BooleanFunction big(symmetric_threshold(17, 2));
    CHECK_THROWS_AS(bnn_exhaustive(big, SearchBudget{}), std::domain_error);

    const BooleanFunction nine(symmetric_threshold(9, 2));
    CHECK_THROWS_AS(nn_grid_search(nine, SearchBudget{}), std::domain_error);

    SearchBudget deep;
    deep.max_resolution = 5;
    const BooleanFunction xorf(oracle::profile({0, 1, 0}));
    CHECK_THROWS_AS(nn_grid_search(xorf, deep), std::domain_error);
}

TEST_CASE("is_linear_threshold: pinned decisions") {
    CHECK_FALSE(is_linear_threshold(BooleanFunction(oracle::profile({0, 1, 0}))).has_value());

    const auto and_witness = is_linear_threshold(BooleanFunction(oracle::profile({0, 0, 1})));
    REQUIRE(and_witness.has_value());
    for (std::uint32_t mask = 0; mask < 4; ++mask)
        CHECK(eval_threshold(*and_witness, mask) == (mask == 3));

    const auto maj = is_linear_threshold(BooleanFunction(symmetric_threshold(5, 3)));
    REQUIRE(maj.has_value());
    for (int j = 0; j < 5; ++j) CHECK(maj->weights(j) == 1);
    CHECK(maj->threshold == 3);

    // a threshold-typed input is already its own witness
    const LinearThresholdFn direct = threshold({3, -2}, 1);
    const auto echoed = is_linear_threshold(BooleanFunction(direct));
    REQUIRE(echoed.has_value());
    CHECK(echoed->weights(0) == 3);
    CHECK(echoed->weights(1) == -2);
    CHECK(echoed->threshold == 1);

    // decreasing and constant profiles are separable too
    const auto flipped = is_linear_threshold(BooleanFunction(oracle::profile({1, 0, 0})));
    REQUIRE(flipped.has_value());
    for (std::uint32_t mask = 0; mask < 4; ++mask)
        CHECK(eval_threshold(*flipped, mask) == (mask == 0));
    const auto never = is_linear_threshold(BooleanFunction(oracle::profile({0, 0})));
    REQUIRE(never.has_value());
    CHECK_FALSE(eval_threshold(*never, 0));
    CHECK_FALSE(eval_threshold(*never, 1));
}

TEST_CASE("is_linear_threshold: three-interval profiles are never separable") {
    for (int n = 2; n <= 6; ++n) {
        for (std::uint32_t bits = 0; bits < (1u << (n + 1)); ++bits) {
            SymmetricProfile p;
            p.n = n;
            for (int k = 0; k <= n; ++k)
                p.values.push_back(static_cast<std::uint8_t>((bits >> k) & 1u));
            if (interval_count(p) != 3) continue;
            CHECK_FALSE(is_linear_threshold(BooleanFunction(p)).has_value());
        }
    }
}

TEST_CASE("is_linear_threshold: symmetric criterion agrees with the simplex route") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint32_t bits = 0; bits < (1u << (n + 1)); ++bits) {
            SymmetricProfile p;
            p.n = n;
            for (int k = 0; k <= n; ++k)
                p.values.push_back(static_cast<std::uint8_t>((bits >> k) & 1u));
            const BooleanFunction sym(p);
            const BooleanFunction table(to_truth_table(sym));
            const auto fast = is_linear_threshold(sym);
            const auto lp = is_linear_threshold(table);
            CHECK(fast.has_value() == lp.has_value());
            if (fast) {
                for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                    CHECK(eval_threshold(*fast, mask) == sym.eval(mask));
                    CHECK(eval_threshold(*lp, mask) == sym.eval(mask));
                }
            }
        }
    }
}

TEST_CASE("is_linear_threshold: random threshold functions round-trip") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> weight(-5, 5);
    int built = 0;
    while (built < 25) {
        const int n = 1 + static_cast<int>(rng() % 5);
        std::vector<long> w(static_cast<size_t>(n));
        for (auto& entry : w) entry = weight(rng);
        const long b = weight(rng);
        const LinearThresholdFn f = threshold(w, b);
        const BooleanFunction table(to_truth_table(BooleanFunction(f)));
        ++built;
        const auto witness = is_linear_threshold(table);
        REQUIRE(witness.has_value());
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
            CHECK(eval_threshold(*witness, mask) == eval_threshold(f, mask));
    }
}

TEST_CASE("separable functions admit two-anchor representations (cross-module)") {
    // a witness from the separability test feeds the two-anchor construction
    for (int n = 1; n <= 6; ++n) {
        for (int b = 1; b <= n; ++b) {
            const SymmetricProfile p = symmetric_threshold(n, b);
            const auto witness = is_linear_threshold(BooleanFunction(p));
            REQUIRE(witness.has_value());
            const AnchorMatrix a = lt_two_anchor(*witness);
            CHECK(verify_representation(a, BooleanFunction(p)).valid);
        }
    }
}

TEST_CASE("is_linear_threshold rejects oversized truth tables") {
    nnrep::TruthTable tt;
    tt.n = 13;
    tt.bits.assign(static_cast<size_t>(1) << 13, 0);
    tt.bits[0] = 1;
    CHECK_THROWS_AS(is_linear_threshold(BooleanFunction(tt)), std::domain_error);
}
