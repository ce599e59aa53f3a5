#include "doctest.h"
#include "support.hpp"

#include "ramsey/detectors.hpp"
#include "ramsey/error.hpp"
#include "ramsey/matching.hpp"
#include "ramsey/oracle.hpp"

using namespace ramsey;
using oracle::oracle_contains;
using oracle::oracle_matching_number;

namespace {

std::vector<PatternSpec> feasible_patterns(std::size_t n) {
    std::vector<PatternSpec> out{PatternSpec::k4_minus_e()};
    for (std::size_t k = 1; 2 * k + 1 <= n; ++k) {
        out.push_back(PatternSpec::fan(k));
    }
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        out.push_back(PatternSpec::matching(k));
    }
    for (std::size_t k = 1; k <= n; ++k) {
        out.push_back(PatternSpec::clique(k));
        out.push_back(PatternSpec::path(k));
        if (k >= 3) {
            out.push_back(PatternSpec::cycle(k));
            out.push_back(PatternSpec::kipas(k));
        }
        if (k >= 4) {
            out.push_back(PatternSpec::wheel(k));
        }
    }
    return out;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("oracle examples") {
    CHECK(oracle_contains(cone(cycle_graph(4)), PatternSpec::wheel(5)));
    CHECK_FALSE(oracle_contains(testing::c7_chords(), PatternSpec::clique(3)));
    CHECK(oracle_contains(complete_graph(4), PatternSpec::fan(1)));
    CHECK(oracle_matching_number(path_graph(5)) == 2);
    CHECK(oracle_matching_number(complete_graph(7)) == 3);
    CHECK(oracle_matching_number(cycle_graph(9)) == 4);
    CHECK(oracle_matching_number(testing::petersen()) == 5);
}

TEST_CASE("oracle guards") {
    CHECK_THROWS_AS(oracle_contains(empty_graph(17), PatternSpec::clique(2)), PreconditionError);
    CHECK_NOTHROW(oracle_contains(empty_graph(16), PatternSpec::clique(2)));
    CHECK_THROWS_AS(oracle_matching_number(empty_graph(15)), PreconditionError);
}

TEST_CASE("oracle agrees with brute-force helpers") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 80; ++t) {
        const auto g = testing::random_graph(1 + rng() % 9, 0.5, rng);
        for (std::size_t k = 1; k <= g.order(); ++k) {
            CHECK(oracle_contains(g, PatternSpec::clique(k)) == testing::brute_clique(g, k));
        }
        CHECK(oracle_matching_number(g) == testing::brute_matching(g));
    }
}

TEST_CASE("detectors agree with the oracle on small random graphs") {
    std::mt19937_64 rng(43);
    std::size_t disagreements = 0;
    for (int t = 0; t < 300; ++t) {
        const auto n = 1 + rng() % 9;
        const auto g = testing::random_graph(n, 0.2 + 0.1 * (t % 7), rng);
        for (const auto& p : feasible_patterns(n)) {
            const bool fast = contains_pattern(g, p);
            const bool slow = oracle_contains(g, p);
            if (fast != slow) {
                ++disagreements;
                INFO(to_string(p));
                CHECK(fast == slow);
            }
        }
    }
    CHECK(disagreements == 0);
}

TEST_CASE("matching number agrees with the oracle") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 100; ++t) {
        const auto g = testing::random_graph(1 + rng() % 12, 0.1 + 0.08 * (t % 10), rng);
        CHECK(matching_number(g) == oracle_matching_number(g));
    }
}

TEST_CASE("oracle is deterministic") {
    std::mt19937_64 rng(53);
    const auto g = testing::random_graph(9, 0.5, rng);
    for (const auto& p : feasible_patterns(9)) {
        CHECK(oracle_contains(g, p) == oracle_contains(g, p));
    }
}

}
