#include <gtest/gtest.h>

#include "helpers.hpp"
#include "mssred/selftest.hpp"

using namespace mssred;

TEST(Selftest, CriterionIds) {
    auto ids = criterion_ids();
    ASSERT_EQ(ids.size(), 10u);
    EXPECT_EQ(ids.front(), "A1");
    EXPECT_EQ(ids.back(), "A10");
    EXPECT_THROW(run_criterion("A0"), std::invalid_argument);
}

TEST(Selftest, QuickCriteriaPass) {
    for (const char* id : {"A2", "A3", "A8"}) {
        auto r = run_criterion(id);
        EXPECT_TRUE(r.passed) << format_result(r);
        EXPECT_EQ(format_result(r).rfind(std::string(id) + " PASS", 0), 0u);
    }
}

TEST(Selftest, PlantedFormulasAreSatisfiable) {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 30; ++rep) {
        auto phi = planted_sat(4, 3, rng);
        EXPECT_NO_THROW(validate(phi));
        EXPECT_FALSE(brute_force_exactly_one(phi).empty());
        EXPECT_NO_THROW(sat_to_subset_sum(phi));
    }
}

TEST(Selftest, FormulaEnumeration) {
    // One variable, one clause: (z1,z1,z1) and (-z1,-z1,-z1).
    auto f = all_formulas(1, 1);
    EXPECT_EQ(f.size(), 2u);
    auto g = all_formulas(2, 1);
    for (const auto& phi : g) EXPECT_NO_THROW(sat_to_subset_sum(phi));
    EXPECT_FALSE(g.empty());
}
