#include <gtest/gtest.h>

#include "helpers.hpp"
#include "mssred/oracles.hpp"
#include "mssred/reduction.hpp"
#include "mssred/rscodes.hpp"

using namespace mssred;
using mssred::test::Q;
using mssred::test::Qs;

namespace {

MssInstance<BigRat> mss(std::vector<BigRat> A, std::size_t k, std::vector<BigRat> t) {
    return {FieldDescriptor::rational(), std::move(A), k, std::move(t)};
}

}  // namespace

TEST(BruteForceMss, Examples) {
    RationalField F;
    EXPECT_EQ(brute_force_mss(F, mss(Qs({1, 2, 3, 4}), 2, Qs({5, 13}))), (Subset{1, 2}));
    EXPECT_FALSE(brute_force_mss(F, mss(Qs({1, 2, 3, 4}), 2, Qs({5, 14}))).has_value());
    EXPECT_EQ(brute_force_mss(F, mss(Qs({1, 2, 3, 4}), 0, Qs({0, 0}))), Subset{});
    EXPECT_FALSE(brute_force_mss(F, mss(Qs({1, 2}), 3, Qs({0}))).has_value());
}

TEST(BruteForceMss, LexicographicInSortedOrder) {
    RationalField F;
    // Unsorted input: {4, 1} and {3, 2} both sum to 5; sorted order puts 1 first.
    auto s = brute_force_mss(F, mss(Qs({4, 3, 2, 1}), 2, Qs({5})));
    EXPECT_EQ(s, (Subset{0, 3}));
}

TEST(BruteForceMss, BudgetExceeded) {
    RationalField F;
    std::vector<BigRat> A;
    for (int i = 1; i <= 30; ++i) A.emplace_back(i);
    SearchBudget b;
    b.max_subsets = 1000;
    try {
        brute_force_mss(F, mss(A, 15, Qs({1})), b);
        FAIL();
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.required(), binomial(30, 15));
    }
}

TEST(BruteForceMss, ParallelAgreesWithSerial) {
    RationalField F;
    std::mt19937_64 rng(51);
    for (int rep = 0; rep < 20; ++rep) {
        std::set<long long> vals;
        while (vals.size() < 12) vals.insert(static_cast<long long>(rng() % 30) - 15);
        std::vector<BigRat> A(vals.begin(), vals.end());
        std::shuffle(A.begin(), A.end(), rng);
        std::vector<BigRat> pick(A.begin(), A.begin() + 4);
        auto inst = mss(A, 4, power_sums(pick, 2));
        SearchBudget serial, par;
        par.jobs = 4;
        auto a = brute_force_mss(F, inst, serial), b = brute_force_mss(F, inst, par);
        ASSERT_TRUE(a.has_value());
        EXPECT_EQ(a, b);
        EXPECT_TRUE(meets_targets(F, inst, *a));
    }
}

TEST(BruteForceMss, FiniteFields) {
    SmallPrimeField F(31);
    MssInstance<std::uint64_t> inst{FieldDescriptor::prime(BigInt(31)), {1, 2, 3, 4, 5}, 2, {7, 29}};
    auto s = brute_force_mss(F, inst);
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(meets_targets(F, inst, *s));
}

TEST(BruteForceMss, FindsReductionSolution) {
    RationalField F;
    auto red = sat_to_mss(mssred::test::example_phi(), 2);
    auto s = brute_force_mss(F, red.instance);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s, encode_assignment(red.artifacts, {true, false}));
}

TEST(BruteForceSymss, Examples) {
    RationalField F;
    SymSSInstance<BigRat> a{FieldDescriptor::rational(), Qs({1, 2, 3}), 2, Qs({3, 2})};
    EXPECT_EQ(brute_force_symss(F, a), (Subset{0, 1}));
    SymSSInstance<BigRat> z{FieldDescriptor::rational(), Qs({1, 2, 3}), 2, Qs({0, 0})};
    EXPECT_FALSE(brute_force_symss(F, z).has_value());
}

TEST(BruteForceSymss, AgreesWithMssAfterConversion) {
    RationalField F;
    std::mt19937_64 rng(52);
    for (int rep = 0; rep < 200; ++rep) {
        std::set<long long> vals;
        const std::size_t n = 4 + rng() % 5;
        while (vals.size() < n) {
            const long long v = static_cast<long long>(rng() % 21) - 10;
            if (v != 0) vals.insert(v);
        }
        std::vector<BigRat> A(vals.begin(), vals.end());
        const std::size_t k = 1 + rng() % (A.size() - 1), d = 1 + rng() % 3;
        std::vector<BigRat> targets;
        if (rng() % 2) {
            std::vector<BigRat> pick(A.begin(), A.begin() + static_cast<std::ptrdiff_t>(k));
            targets = power_sums(pick, d);
        } else {
            for (std::size_t j = 0; j < d; ++j) targets.push_back(BigRat(static_cast<long long>(rng() % 50)));
        }
        auto m = mss(A, k, targets);
        auto s = mss_to_symss(F, m);
        auto a = brute_force_mss(F, m), b = brute_force_symss(F, s);
        EXPECT_EQ(a, b);
    }
}

TEST(Thresholds, OutsideBand) {
    BimodalityThresholds th{2, 5, 8};
    EXPECT_TRUE(outside_band(Q("0"), th));
    EXPECT_TRUE(outside_band(Q("99"), th));
    EXPECT_FALSE(outside_band(Q("100"), th));
    EXPECT_FALSE(outside_band(Q("-100000"), th));
    EXPECT_TRUE(outside_band(Q("100001"), th));
}

TEST(Bimodality, EmptyAndAllAuxiliaries) {
    // X = +-alpha/2 style values that cancel.
    std::vector<AuxValue> aux{{Q("5000001/10"), Q("500000")}, {Q("-5000001/10"), Q("-500000")}};
    BimodalityThresholds th{0, 3, 6};
    SearchBudget b;
    b.max_trials = 2000;
    b.seed = 3;
    auto rep = bimodality_probe(aux, th, b);
    EXPECT_EQ(rep.trials, 2000u);
    EXPECT_EQ(rep.violations, 0u);
    EXPECT_GT(rep.tiny, 0u);
    EXPECT_GT(rep.huge, 0u);
    EXPECT_TRUE(rep.decomposition->passed());
    auto none = bimodality_probe({}, th, b);
    EXPECT_EQ(none.tiny, none.trials);
}

TEST(Bimodality, DetectsViolation) {
    std::vector<AuxValue> aux{{Q("500"), Q("0")}};
    BimodalityThresholds th{0, 3, 6};
    SearchBudget b;
    b.max_trials = 100;
    auto rep = bimodality_probe(aux, th, b);
    EXPECT_GT(rep.violations, 0u);
    ASSERT_TRUE(rep.first_violation.has_value());
    EXPECT_EQ(*rep.first_violation, (std::vector<std::size_t>{0}));
    EXPECT_FALSE(rep.passed());
}

TEST(Bimodality, GadgetInRegime) {
    std::mt19937_64 rng(53);
    auto red = sat_to_mss(random_sat(7, 3, rng), 2);
    auto rep = verify_properties(red.artifacts, PropertyOptions{10000, 4});
    const Check* c = rep.find("P3_probes");
    ASSERT_NE(c, nullptr);
    EXPECT_TRUE(c->passed) << c->detail;
}

TEST(Budget, Check) {
    SearchBudget b;
    b.max_subsets = 10;
    EXPECT_NO_THROW(check_budget(5, 2, b));
    EXPECT_NO_THROW(check_budget(5, 3, b));
    EXPECT_THROW(check_budget(6, 3, b), BudgetExceeded);
    EXPECT_NO_THROW(check_budget(3, 5, b));
}
