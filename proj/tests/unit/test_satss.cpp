#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace mssred;

TEST(Parse, RunningExample) {
    SatInstance phi = parse_one_in_three("p o13 2 1 ; 1 2 2 0");
    EXPECT_EQ(phi.n, 2u);
    ASSERT_EQ(phi.m(), 1u);
    EXPECT_EQ(phi.clauses[0], (Clause{1, 2, 2}));
}

TEST(Parse, RejectsComplementaryLiterals) {
    try {
        parse_one_in_three("p o13 1 1 ; 1 -1 -1 0");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(Parse, EmptyClauseList) {
    SatInstance phi = parse_one_in_three("p o13 3 0\n");
    EXPECT_EQ(phi.n, 3u);
    EXPECT_EQ(phi.m(), 0u);
    EXPECT_NO_THROW(validate(phi));
}

TEST(Parse, CommentsAndRoundTrip) {
    const char* text = "c hello\np o13 3 2\nc mid\n1 -2 3 0\n-1 2 2 0\n";
    SatInstance phi = parse_one_in_three(text);
    EXPECT_EQ(phi.m(), 2u);
    SatInstance again = parse_one_in_three(format_one_in_three(phi));
    EXPECT_EQ(again.n, phi.n);
    EXPECT_EQ(again.clauses, phi.clauses);
}

TEST(Parse, MalformedInputsNameTheLine) {
    const std::vector<std::pair<std::string, std::size_t>> bad = {
        {"", 0},                           // no header
        {"p cnf 2 1\n1 2 2 0", 1},         // wrong header
        {"p o13 2 1\n1 2 0", 2},           // two literals
        {"p o13 2 1\n1 2 3 0", 2},         // index out of range
        {"p o13 2 1\n1 0 2 0", 2},         // zero literal
        {"p o13 2 1\n1 2 2 5", 2},         // missing terminator
        {"p o13 2 2\n1 2 2 0", 2},         // too few clauses
        {"p o13 2 1\n1 2 2 0\n1 1 1 0", 3},  // too many clauses
        {"p o13 2 1\n1 x 2 0", 2},
    };
    for (const auto& [text, line] : bad) {
        try {
            parse_one_in_three(text);
            ADD_FAILURE() << text;
        } catch (const ParseError& e) {
            if (line) EXPECT_EQ(e.line(), line) << text << ": " << e.what();
        }
    }
}

TEST(Eval, Examples) {
    SatInstance phi = mssred::test::example_phi();
    EXPECT_TRUE(eval_exactly_one(phi, {true, false}));
    EXPECT_FALSE(eval_exactly_one(phi, {true, true}));
    EXPECT_FALSE(eval_exactly_one(phi, {false, true}));
    EXPECT_FALSE(eval_exactly_one(phi, {false, false}));
    SatInstance empty = parse_one_in_three("p o13 2 0");
    for (int z = 0; z < 4; ++z) EXPECT_TRUE(eval_exactly_one(empty, {bool(z & 1), bool(z & 2)}));
    EXPECT_THROW(eval_exactly_one(phi, {true}), std::invalid_argument);
}

TEST(SubsetSum, RunningExample) {
    auto ss = sat_to_subset_sum(mssred::test::example_phi());
    EXPECT_EQ(ss.a, (std::vector<BigInt>{101, 12}));
    EXPECT_EQ(ss.b, (std::vector<BigInt>{100, 10}));
    EXPECT_EQ(ss.target, BigInt(111));
    EXPECT_EQ(ss.a[0] + ss.b[1], ss.target);
}

TEST(SubsetSum, TripleLiteral) {
    auto ss = sat_to_subset_sum(parse_one_in_three("p o13 1 1 ; 1 1 1 0"));
    EXPECT_EQ(ss.a[0], BigInt(13));
    EXPECT_EQ(ss.b[0], BigInt(10));
    EXPECT_EQ(ss.target, BigInt(11));
}

TEST(SubsetSum, RejectsDegenerateInstances) {
    EXPECT_THROW(sat_to_subset_sum(parse_one_in_three("p o13 1 0")), std::invalid_argument);
    // z2 never occurs, so a'_2 = b'_2.
    EXPECT_THROW(sat_to_subset_sum(parse_one_in_three("p o13 2 1 ; 1 1 1 0")), std::invalid_argument);
}

TEST(SubsetSum, EquivalentToSatisfiability) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 1 + rng() % 4, m = (n + 2) / 3 + rng() % 3;
        SatInstance phi = random_sat(n, m, rng);
        auto ss = sat_to_subset_sum(phi);
        // Every valid choice picks exactly one of a'_t, b'_t.
        std::size_t hits = 0;
        for (std::uint64_t z = 0; z < (1ULL << n); ++z) {
            BigInt s;
            Assignment as(n);
            for (std::size_t t = 0; t < n; ++t) {
                as[t] = (z >> (n - 1 - t)) & 1;
                s += as[t] ? ss.a[t] : ss.b[t];
            }
            EXPECT_EQ(s == ss.target, eval_exactly_one(phi, as));
            hits += s == ss.target;
        }
        EXPECT_EQ(hits, brute_force_exactly_one(phi).size());
    }
}

TEST(BruteForce, Examples) {
    auto sols = brute_force_exactly_one(mssred::test::example_phi());
    ASSERT_EQ(sols.size(), 1u);
    EXPECT_EQ(sols[0], (Assignment{true, false}));
    EXPECT_TRUE(brute_force_exactly_one(parse_one_in_three("p o13 1 2 ; 1 1 1 0 ; -1 -1 -1 0")).empty());
    auto all = brute_force_exactly_one(parse_one_in_three("p o13 2 0"));
    ASSERT_EQ(all.size(), 4u);
    EXPECT_EQ(all.front(), (Assignment{false, false}));
    EXPECT_EQ(all.back(), (Assignment{true, true}));
}

TEST(BruteForce, LimitExceeded) {
    SatInstance phi;
    phi.n = 30;
    EXPECT_THROW(brute_force_exactly_one(phi, 24), std::exception);
}

TEST(RandomSat, EveryVariableOccurs) {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 50; ++rep) {
        SatInstance phi = random_sat(5, 3, rng);
        EXPECT_NO_THROW(validate(phi));
        std::vector<int> seen(6, 0);
        for (const auto& c : phi.clauses)
            for (auto l : c) seen[static_cast<std::size_t>(std::abs(l))] = 1;
        for (int t = 1; t <= 5; ++t) EXPECT_TRUE(seen[static_cast<std::size_t>(t)]);
    }
    EXPECT_THROW(random_sat(7, 2, rng), std::invalid_argument);
}

TEST(Occurrences, Counts) {
    EXPECT_EQ(occurrences(Clause{1, 2, 2}, 2), 2);
    EXPECT_EQ(occurrences(Clause{1, 2, 2}, -2), 0);
    EXPECT_EQ(occurrences(Clause{-1, -1, 3}, -1), 2);
}
