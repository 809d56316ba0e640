#include <gtest/gtest.h>

#include "helpers.hpp"
#include "mssred/fields.hpp"
#include "mssred/modarith.hpp"

using namespace mssred;
using mssred::test::Z;

TEST(Primes, FindPrimeAbove) {
    EXPECT_EQ(find_prime_above(BigInt(1)), BigInt(2));
    EXPECT_EQ(find_prime_above(BigInt(16)), BigInt(17));
    EXPECT_EQ(find_prime_above(BigInt(17)), BigInt(19));
    EXPECT_EQ(find_prime_above(BigInt(10000)), BigInt(10007));
    EXPECT_EQ(find_prime_above(BigInt(-5)), BigInt(2));
}

TEST(Primes, NthPrimeAbove) {
    EXPECT_EQ(nth_prime_above(BigInt(16), 1), BigInt(17));
    EXPECT_EQ(nth_prime_above(BigInt(16), 3), BigInt(23));
    EXPECT_THROW(nth_prime_above(BigInt(16), 0), std::invalid_argument);
}

TEST(Primes, IsPrimeAgreesWithSieve) {
    std::vector<bool> comp(5000, false);
    for (std::size_t i = 2; i < comp.size(); ++i)
        if (!comp[i])
            for (std::size_t j = i * i; j < comp.size(); j += i) comp[j] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) EXPECT_EQ(is_prime(BigInt(static_cast<long long>(i))), i >= 2 && !comp[i]) << i;
}

TEST(Primes, LargeKnownValues) {
    EXPECT_TRUE(is_prime(Z("2305843009213693951")));   // 2^61 - 1
    EXPECT_FALSE(is_prime(Z("2305843009213693953")));
    EXPECT_TRUE(is_prime(Z("170141183460469231731687303715884105727")));  // 2^127 - 1
    EXPECT_FALSE(is_prime(Z("3825123056546413051")));  // strong pseudoprime to the first 9 prime bases
    mpz_class m = 1;
    m <<= 4423;
    m -= 1;
    EXPECT_TRUE(is_prime(BigInt(m)));
    m += 2;
    EXPECT_FALSE(is_prime(BigInt(m)));
}

TEST(Primes, MersenneTable) {
    auto m = mersenne_prime_above(BigInt(1000));
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(*m, BigInt(8191));
    mpz_class huge = 1;
    huge <<= 100000000;
    EXPECT_FALSE(mersenne_prime_above(BigInt(huge)).has_value());
}

template <class F>
void check_axioms(const F& f, const std::vector<typename F::Elem>& elems) {
    for (const auto& a : elems) {
        EXPECT_TRUE(f.eq(f.add(a, f.zero()), a));
        EXPECT_TRUE(f.eq(f.mul(a, f.one()), a));
        EXPECT_TRUE(f.is_zero(f.add(a, f.neg(a))));
        EXPECT_TRUE(f.eq(f.sub(a, a), f.zero()));
        if (!f.is_zero(a)) {
            EXPECT_TRUE(f.eq(f.mul(a, f.inv(a)), f.one()));
        }
        EXPECT_TRUE(f.eq(f.parse(f.to_string(a)), a));
        for (const auto& b : elems) {
            EXPECT_TRUE(f.eq(f.add(a, b), f.add(b, a)));
            EXPECT_TRUE(f.eq(f.mul(a, b), f.mul(b, a)));
            for (const auto& c : {elems.front(), elems.back()}) {
                EXPECT_TRUE(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
                EXPECT_TRUE(f.eq(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
            }
        }
        EXPECT_TRUE(f.eq(f.pow(a, 5), f.mul(f.mul(f.mul(a, a), f.mul(a, a)), a)));
    }
    EXPECT_THROW(f.inv(f.zero()), std::domain_error);
}

TEST(FieldAxioms, Rational) {
    std::mt19937_64 rng(5);
    std::vector<BigRat> v{BigRat(0), BigRat(1)};
    for (int i = 0; i < 8; ++i) v.push_back(mssred::test::random_rat(rng));
    check_axioms(RationalField{}, v);
}

TEST(FieldAxioms, PrimeField) {
    PrimeField f(Z("1000000007"));
    std::mt19937_64 rng(6);
    std::vector<BigInt> v{BigInt(0), BigInt(1), BigInt(1000000006)};
    for (int i = 0; i < 8; ++i) v.push_back(f.from_int(static_cast<long long>(rng() >> 2)));
    check_axioms(f, v);
    EXPECT_THROW(PrimeField(BigInt(15)), std::invalid_argument);
    EXPECT_EQ(f.from_rational(BigRat::normalize(BigInt(1), BigInt(2))), BigInt(500000004));
}

TEST(FieldAxioms, MersennePrimeField) {
    mpz_class p = 1;
    p <<= 127;
    p -= 1;
    PrimeField f{BigInt(p)};
    std::mt19937_64 rng(7);
    std::vector<BigInt> v{BigInt(0), BigInt(p - 1)};
    for (int i = 0; i < 6; ++i) v.push_back(f.from_bigint(BigInt(static_cast<long long>(rng() >> 1)) * BigInt(static_cast<long long>(rng() >> 1)) * BigInt(static_cast<long long>(rng() >> 1))));
    check_axioms(f, v);
}

TEST(FieldAxioms, SmallPrimeField) {
    SmallPrimeField f(31);
    std::vector<std::uint64_t> v;
    for (std::uint64_t i = 0; i < 31; ++i) v.push_back(i);
    check_axioms(f, v);
    EXPECT_EQ(f.from_int(-1), 30u);
}

TEST(FieldAxioms, ExtensionField) {
    ExtField f(make_ext_field(BigInt(5), 3));
    std::mt19937_64 rng(8);
    std::vector<ExtElem> v{f.zero(), f.one()};
    for (int i = 0; i < 8; ++i) v.push_back(f.from_coeffs({static_cast<std::uint32_t>(rng() % 5), static_cast<std::uint32_t>(rng() % 5),
                                                           static_cast<std::uint32_t>(rng() % 5)}));
    check_axioms(f, v);
}

TEST(ExtField, FrobeniusFixesPrimeSubfield) {
    ExtField f(make_ext_field(BigInt(7), 4));
    std::size_t fixed = 0;
    for (std::uint32_t a = 0; a < 7; ++a)
        for (std::uint32_t b = 0; b < 7; ++b) {
            ExtElem x = f.from_coeffs({a, b});
            if (f.eq(f.pow(x, 7), x)) ++fixed;
        }
    EXPECT_EQ(fixed, 7u);
}

TEST(ExtField, MultiplicativeGroupOrder) {
    ExtField f(make_ext_field(BigInt(3), 3));
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b)
            for (std::uint32_t c = 0; c < 3; ++c) {
                ExtElem x = f.from_coeffs({a, b, c});
                if (f.is_zero(x)) continue;
                EXPECT_TRUE(f.eq(f.pow(x, 26), f.one()));
            }
}

TEST(MakeExtField, SmallDefaults) {
    auto d23 = make_ext_field(BigInt(2), 3);
    EXPECT_EQ(d23.kind, FieldKind::extension);
    EXPECT_EQ(d23.ell, 3u);
    EXPECT_EQ(d23.modulus, (std::vector<std::uint32_t>{1, 1, 0, 1}));  // x^3 + x + 1
    auto d32 = make_ext_field(BigInt(3), 2);
    EXPECT_EQ(d32.modulus, (std::vector<std::uint32_t>{1, 0, 1}));  // x^2 + 1
}

TEST(MakeExtField, ModulusIsIrreducibleWithNonzeroConstant) {
    for (std::uint32_t p : {2u, 3u, 5u, 13u})
        for (std::size_t ell : {1u, 2u, 3u, 4u, 5u, 6u, 8u}) {
            auto d = make_ext_field(BigInt(static_cast<long long>(p)), ell);
            ASSERT_EQ(d.modulus.size(), ell + 1);
            EXPECT_EQ(d.modulus.back(), 1u);
            EXPECT_NE(d.modulus.front(), 0u);
            EXPECT_TRUE(is_irreducible(d.modulus, p)) << p << "^" << ell;
        }
}

TEST(MakeExtField, Errors) {
    EXPECT_THROW(make_ext_field(BigInt(4), 2), std::invalid_argument);
    EXPECT_THROW(make_ext_field(BigInt(5), 0), std::invalid_argument);
    EXPECT_THROW(make_ext_field(Z("4294967311"), 2), std::invalid_argument);
}

TEST(Binomial, IrreducibilityCriterion) {
    // x^2 + 1 over F_3 is irreducible, over F_5 it splits.
    EXPECT_TRUE(binomial_irreducible(3, 2, 1));
    EXPECT_FALSE(binomial_irreducible(5, 2, 1));
    for (std::uint32_t p : {3u, 5u, 7u, 13u})
        for (std::size_t ell = 1; ell <= 6; ++ell)
            for (std::uint32_t c = 1; c < p; ++c) {
                CoeffVec f(ell + 1, 0);
                f[0] = c;
                f[ell] = 1;
                EXPECT_EQ(binomial_irreducible(p, ell, c), is_irreducible(f, p)) << p << " " << ell << " " << c;
            }
}

TEST(Binomial, SuggestExtDegree) {
    for (std::size_t lo : {1u, 5u, 17u, 100u}) {
        const std::size_t ell = suggest_ext_degree(13, lo);
        EXPECT_GE(ell, lo);
        bool found = false;
        for (std::uint32_t c = 1; c < 13 && !found; ++c) found = binomial_irreducible(13, ell, c);
        EXPECT_TRUE(found);
    }
}

TEST(ExtMagnitude, Examples) {
    EXPECT_FALSE(ext_magnitude(ExtElem{}).has_value());
    EXPECT_EQ(ext_magnitude(ExtElem{{3}}), 0u);
    EXPECT_EQ(ext_magnitude(ExtElem{{1, 0, 2}}), 2u);
    EXPECT_EQ(ext_magnitude(ExtElem{{0, 4}}), 1u);
}

TEST(ExtMagnitude, Ultrametric) {
    ExtField f(make_ext_field(BigInt(5), 6));
    std::mt19937_64 rng(9);
    auto rnd = [&] {
        CoeffVec c(1 + rng() % 6);
        for (auto& x : c) x = static_cast<std::uint32_t>(rng() % 5);
        return f.from_coeffs(c);
    };
    for (int i = 0; i < 500; ++i) {
        ExtElem a = rnd(), b = rnd();
        auto s = ext_magnitude(f.add(a, b));
        auto ma = ext_magnitude(a), mb = ext_magnitude(b);
        if (!s) continue;
        ASSERT_TRUE(ma || mb);
        EXPECT_LE(*s, std::max(ma.value_or(0), mb.value_or(0)));
        if (ma && mb && *ma != *mb) EXPECT_EQ(*s, std::max(*ma, *mb));
    }
}

TEST(ExtField, GammaPowers) {
    ExtField f(make_ext_field(BigInt(13), 5));
    EXPECT_TRUE(f.eq(f.gamma_pow(0), f.one()));
    EXPECT_TRUE(f.eq(f.gamma_pow(2), f.from_coeffs({0, 0, 1})));
    for (std::int64_t e = -12; e <= 12; ++e) EXPECT_TRUE(f.eq(f.mul(f.gamma_pow(e), f.gamma_pow(-e)), f.one()));
    EXPECT_TRUE(f.eq(f.mul(f.gamma_pow(7), f.gamma_pow(-3)), f.gamma_pow(4)));
}

TEST(ExtField, ParseAndDescriptor) {
    ExtField f(make_ext_field(BigInt(13), 3));
    ExtElem x = f.parse("1,2,3");
    EXPECT_EQ(x.c, (CoeffVec{1, 2, 3}));
    EXPECT_EQ(f.parse(f.to_string(x)), x);
    EXPECT_EQ(f.descriptor().ell, 3u);
    EXPECT_EQ(ExtField(f.descriptor()).modulus(), f.modulus());
    EXPECT_EQ(f.from_int(-1).c, (CoeffVec{12}));
}

TEST(PowerSumsGeneric, FieldsAgreeWithNaive) {
    ExtField f(make_ext_field(BigInt(13), 4));
    std::vector<ExtElem> v;
    for (std::uint32_t i = 1; i < 9; ++i) v.push_back(f.from_coeffs({i, i * 3 % 13, 1}));
    auto ps = f.power_sums(v, 5);
    for (std::size_t k = 1; k <= 5; ++k) {
        ExtElem s = f.zero();
        for (const auto& x : v) s = f.add(s, f.pow(x, k));
        EXPECT_EQ(ps[k - 1], s);
    }
    PrimeField g(BigInt(101));
    std::vector<BigInt> w{BigInt(3), BigInt(50), BigInt(100)};
    auto pg = g.power_sums(w, 3);
    EXPECT_EQ(pg[0], BigInt(52));
    EXPECT_EQ(pg[1], BigInt((9 + 2500 + 10000) % 101));
}

TEST(MakeField, Variant) {
    EXPECT_TRUE(std::holds_alternative<RationalField>(make_field(FieldDescriptor::rational())));
    EXPECT_TRUE(std::holds_alternative<PrimeField>(make_field(FieldDescriptor::prime(BigInt(7)))));
    EXPECT_TRUE(std::holds_alternative<ExtField>(make_field(make_ext_field(BigInt(7), 2))));
}

TEST(ModArith, Basics) {
    EXPECT_EQ(invmod(3, 7), 5u);
    EXPECT_THROW(invmod(2, 4), std::domain_error);
    EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
    EXPECT_EQ(multiplicative_order(2, 7), 3u);
    EXPECT_EQ(powmod(3, 100, 101), 1u);
}
