#include <gtest/gtest.h>

#include "helpers.hpp"
#include "mssred/oracles.hpp"
#include "mssred/rscodes.hpp"

using namespace mssred;
using mssred::test::Q;
using mssred::test::Qs;

namespace {

SymSSInstance<BigRat> symss(std::vector<BigRat> A, std::size_t k, std::vector<BigRat> E) {
    return {FieldDescriptor::rational(), std::move(A), k, std::move(E)};
}

}  // namespace

TEST(Newton, SpecExamples) {
    RationalField F;
    EXPECT_EQ(power_sums_to_elementary(F, Qs({3, 5})), Qs({3, 2}));
    EXPECT_EQ(elementary_to_power_sums(F, Qs({3, 2})), Qs({3, 5}));
    EXPECT_EQ(elementary_to_power_sums(F, Qs({0, 0, 0})), Qs({0, 0, 0}));
}

TEST(Newton, RoundTripAndAgreementWithDirectSums) {
    RationalField F;
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 40; ++rep) {
        std::vector<BigRat> v;
        const std::size_t n = 1 + rng() % 6, d = 1 + rng() % 6;
        for (std::size_t i = 0; i < n; ++i) v.push_back(mssred::test::random_rat(rng, 40));
        auto B = power_sums(v, d);
        auto E = elementary_symmetric(F, v, d);
        EXPECT_EQ(power_sums_to_elementary(F, B), E);
        EXPECT_EQ(elementary_to_power_sums(F, E), B);
        for (std::size_t j = 1; j <= d; ++j) EXPECT_EQ(elementary_by_determinant(F, B, j), E[j - 1]);
    }
}

TEST(Newton, FiniteFieldCharacteristic) {
    SmallPrimeField F(5);
    std::vector<std::uint64_t> B{1, 2, 3, 4};
    EXPECT_NO_THROW(power_sums_to_elementary(F, B));
    std::vector<std::uint64_t> B5{1, 2, 3, 4, 0};
    EXPECT_THROW(power_sums_to_elementary(F, B5), std::domain_error);
    ExtField G(make_ext_field(BigInt(7), 3));
    std::vector<ExtElem> v{G.from_coeffs({1, 2}), G.from_coeffs({0, 0, 3}), G.from_coeffs({5})};
    auto E = elementary_symmetric(G, v, 3);
    EXPECT_EQ(power_sums_to_elementary(G, G.power_sums(v, 3)), E);
}

TEST(MssToSymss, Examples) {
    RationalField F;
    MssInstance<BigRat> inst{FieldDescriptor::rational(), Qs({1, 2, 3}), 2, Qs({3, 5})};
    auto s = mss_to_symss(F, inst);
    EXPECT_EQ(s.targets, Qs({3, 2}));
    EXPECT_EQ(s.A, inst.A);
    MssInstance<BigRat> d1{FieldDescriptor::rational(), Qs({4, 7}), 1, Qs({7})};
    EXPECT_EQ(mss_to_symss(F, d1).targets, Qs({7}));
    MssInstance<BigRat> z{FieldDescriptor::rational(), Qs({0, 7}), 1, Qs({7})};
    EXPECT_THROW(mss_to_symss(F, z), std::invalid_argument);
}

TEST(SymssToBdd, SpecExample) {
    RationalField F;
    auto b = symss_to_bdd(F, symss(Qs({1, 2, 3}), 2, Qs({3})));
    EXPECT_EQ(b.D, (std::vector<BigRat>{Q("1"), Q("1/2"), Q("1/3"), Q("0")}));
    EXPECT_EQ(b.y, Qs({-1, -2, -3, -3}));
    EXPECT_EQ(b.K, 2u);
    EXPECT_EQ(b.threshold(), 3u);
}

TEST(SymssToBdd, ShapeInvariants) {
    RationalField F;
    auto b = symss_to_bdd(F, symss(Qs({1, 2, 3, 5}), 2, Qs({3, 2})));
    EXPECT_EQ(b.K, 1u);
    EXPECT_EQ(b.D.size(), 5u);
    EXPECT_TRUE(b.D.back().is_zero());
    EXPECT_THROW(symss_to_bdd(F, symss(Qs({1, 2}), 1, Qs({1, 1}))), std::invalid_argument);
}

TEST(Codeword, SpecExample) {
    RationalField F;
    auto inst = symss(Qs({1, 2, 3}), 2, Qs({3}));
    auto p = build_codeword(F, inst, {0, 1});
    EXPECT_EQ(p.c, Qs({-3, 2}));
    auto bdd = symss_to_bdd(F, inst);
    EXPECT_EQ(count_agreements(F, bdd, p), 3u);
    EXPECT_THROW(build_codeword(F, inst, {0, 2}), std::invalid_argument);
}

TEST(Codeword, AgreementAtLeastThresholdOnRandomInstances) {
    RationalField F;
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 30; ++rep) {
        std::set<long long> vals;
        while (vals.size() < 7) vals.insert(static_cast<long long>(rng() % 40) + 1);
        std::vector<BigRat> A(vals.begin(), vals.end());
        const std::size_t k = 2 + rng() % 4, d = 1 + rng() % k;
        Subset S;
        for (std::size_t i = 0; i < k; ++i) S.push_back(i);
        std::vector<BigRat> picked(A.begin(), A.begin() + static_cast<std::ptrdiff_t>(k));
        auto inst = symss(A, k, elementary_symmetric(F, picked, d));
        auto bdd = symss_to_bdd(F, inst);
        auto p = build_codeword(F, inst, S);
        if (p.degree()) EXPECT_LT(*p.degree(), bdd.K);
        EXPECT_GE(count_agreements(F, bdd, p), bdd.threshold());
    }
}

TEST(Interpolate, Examples) {
    RationalField F;
    using P = std::vector<std::pair<BigRat, BigRat>>;
    EXPECT_EQ(interpolate(F, P{{Q("0"), Q("1")}, {Q("1"), Q("1")}}).c, Qs({1}));
    EXPECT_EQ(interpolate(F, P{{Q("0"), Q("-3")}, {Q("1"), Q("-1")}}).c, Qs({-3, 2}));
    EXPECT_EQ(interpolate(F, P{{Q("5"), Q("7")}}).c, Qs({7}));
    EXPECT_THROW(interpolate(F, P{{Q("1"), Q("2")}, {Q("1"), Q("3")}}), std::invalid_argument);
    EXPECT_TRUE(interpolate(F, P{}).c.empty());
}

TEST(Interpolate, RecoversRandomPolynomials) {
    PrimeField F(BigInt(1000003));
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<BigInt> c;
        const std::size_t deg = rng() % 6;
        for (std::size_t i = 0; i <= deg; ++i) c.push_back(F.from_int(static_cast<long long>(rng() % 1000)));
        c.back() = F.one();
        auto p = make_poly(F, c);
        std::vector<std::pair<BigInt, BigInt>> pts;
        for (std::size_t i = 0; i <= deg; ++i) {
            BigInt x = F.from_int(static_cast<long long>(i * 7 + 3));
            pts.emplace_back(x, evaluate(F, p, x));
        }
        EXPECT_EQ(interpolate(F, pts).c, p.c);
    }
}

TEST(Agreements, Bounds) {
    RationalField F;
    auto bdd = symss_to_bdd(F, symss(Qs({1, 2, 3}), 2, Qs({3})));
    EXPECT_EQ(count_agreements(F, bdd, Poly<BigRat>{}), 0u);
    EXPECT_THROW(count_agreements(F, bdd, make_poly(F, Qs({0, 0, 1}))), std::invalid_argument);
    // K = 3 allows the quadratic through every point.
    BddInstance<BigRat> b2{FieldDescriptor::rational(), Qs({0, 1, 2}), Qs({1, 2, 5}), 3, 1};
    std::vector<std::pair<BigRat, BigRat>> pts;
    for (std::size_t i = 0; i < 3; ++i) pts.emplace_back(b2.D[i], b2.y[i]);
    EXPECT_EQ(count_agreements(F, b2, interpolate(F, pts)), 3u);
}

TEST(Reconstruct, FindsCodewordOfSolvableInstance) {
    RationalField F;
    auto inst = symss(Qs({1, 2, 3, 4, 6}), 3, {});
    std::vector<BigRat> picked = Qs({2, 3, 6});
    inst.targets = elementary_symmetric(F, picked, 2);
    auto bdd = symss_to_bdd(F, inst);
    auto p = exhaustive_reconstruct(F, bdd);
    ASSERT_TRUE(p.has_value());
    EXPECT_GE(count_agreements(F, bdd, *p), bdd.threshold());
}

TEST(Reconstruct, GeneralPositionHasNone) {
    RationalField F;
    BddInstance<BigRat> b{FieldDescriptor::rational(), Qs({0, 1, 2, 3, 4}), Qs({1, 7, 2, 9, 4}), 2, 2};
    EXPECT_FALSE(exhaustive_reconstruct(F, b).has_value());
    SearchBudget tiny;
    tiny.max_subsets = 3;
    EXPECT_THROW(exhaustive_reconstruct(F, b, tiny), BudgetExceeded);
}
