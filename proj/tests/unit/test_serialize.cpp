#include <gtest/gtest.h>

#include "helpers.hpp"
#include "mssred/serialize.hpp"

using namespace mssred;
using mssred::test::Qs;

TEST(Json, FieldRoundTrip) {
    for (const auto& f : {FieldDescriptor::rational(), FieldDescriptor::prime(BigInt(1000003)), make_ext_field(BigInt(13), 5)})
        EXPECT_EQ(field_from_json(field_to_json(f)), f);
    EXPECT_THROW(field_from_json(Json{{"kind", "quaternion"}}), std::exception);
}

TEST(Json, MssRoundTripEachField) {
    auto red = sat_to_mss(mssred::test::example_phi(), 2);
    RationalField Q;
    auto back = mss_from_json(Q, mss_to_json(Q, red.instance));
    EXPECT_EQ(back.A, red.instance.A);
    EXPECT_EQ(back.targets, red.instance.targets);
    EXPECT_EQ(back.k, red.instance.k);

    auto pt = transport_to_prime_field(red.instance);
    PrimeField P(pt.p);
    auto bp = mss_from_json(P, mss_to_json(P, pt.instance));
    EXPECT_EQ(bp.A, pt.instance.A);
    EXPECT_EQ(bp.field, pt.instance.field);

    auto et = transport_to_ext_field(red.artifacts, 13, suggest_ext_degree(13, laurent_reduction(red.artifacts, 13).ell_min));
    ExtField E(et.instance.field);
    auto be = mss_from_json(E, mss_to_json(E, et.instance));
    EXPECT_EQ(be.A, et.instance.A);
    EXPECT_EQ(be.targets, et.instance.targets);
}

TEST(Json, SymssBddPolyRoundTrip) {
    RationalField F;
    SymSSInstance<BigRat> s{FieldDescriptor::rational(), Qs({1, 2, 3}), 2, Qs({3, 2})};
    auto bs = symss_from_json(F, symss_to_json(F, s));
    EXPECT_EQ(bs.A, s.A);
    EXPECT_EQ(bs.targets, s.targets);
    auto bdd = symss_to_bdd(F, s);
    auto bb = bdd_from_json(F, bdd_to_json(F, bdd));
    EXPECT_EQ(bb.D, bdd.D);
    EXPECT_EQ(bb.y, bdd.y);
    EXPECT_EQ(bb.K, bdd.K);
    EXPECT_EQ(bb.d, bdd.d);
    EXPECT_TRUE(poly_to_json(F, make_poly(F, Qs({-3, 2}))).dump().find("-3") != std::string::npos);
}

TEST(Json, WitnessRoundTripAndText) {
    RationalField F;
    auto w = prouhet_pte(2);
    auto back = witness_from_json(F, witness_to_json(F, w));
    EXPECT_EQ(back.X, w.X);
    EXPECT_EQ(back.Y, w.Y);
    EXPECT_EQ(back.d, w.d);
    EXPECT_EQ(witness_to_text(F, w), "X={0,3,5,6}\nY={1,2,4,7}\n");
    w.ab = std::make_pair(BigRat(3), BigRat(5));
    auto b2 = witness_from_json(F, witness_to_json(F, w));
    ASSERT_TRUE(b2.ab.has_value());
    EXPECT_EQ(b2.ab->second, BigRat(5));

    ExtField E(make_ext_field(BigInt(5), 2));
    PteWitness<ExtElem> we{{E.from_coeffs({1, 2})}, {E.from_coeffs({3})}, 1, std::nullopt};
    EXPECT_EQ(witness_to_text(E, we).substr(0, 3), "X={");
    EXPECT_NE(witness_to_text(E, we).find('('), std::string::npos);
}

TEST(Json, SubsetAndArtifacts) {
    Subset s{0, 4, 7};
    EXPECT_EQ(subset_from_json(subset_to_json(s)), s);
    auto red = sat_to_mss(mssred::test::example_phi(), 2);
    auto art = artifacts_from_json(artifacts_to_json(red.artifacts));
    EXPECT_EQ(art.d, red.artifacts.d);
    EXPECT_EQ(art.nu, red.artifacts.nu);
    EXPECT_EQ(art.origin, red.artifacts.origin);
    EXPECT_EQ(art.phi.clauses, red.artifacts.phi.clauses);
    EXPECT_EQ(encode_assignment(art, {true, false}), encode_assignment(red.artifacts, {true, false}));
}

TEST(Json, ReportIsSerializable) {
    auto red = sat_to_mss(mssred::test::example_phi(), 2);
    auto j = report_to_json(verify_properties(red.artifacts, PropertyOptions{100, 0}));
    EXPECT_TRUE(j.is_object());
    EXPECT_FALSE(j.dump().empty());
}

TEST(Json, Errors) {
    EXPECT_THROW(parse_json("{not json"), FormatError);
    RationalField F;
    EXPECT_THROW(mss_from_json(F, Json{{"A", 3}}), std::exception);
    EXPECT_THROW(elems_from_json(F, Json::array({"1/0"}), "A"), std::exception);
    EXPECT_THROW(elems_from_json(F, Json(5), "A"), FormatError);
    EXPECT_THROW(subset_from_json(Json{{"subset", "x"}}), std::exception);
}
