#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace delpezzo;
using delpezzo::testing::Gen;

TEST(Serialize, GoldenModels) {
    EXPECT_EQ(to_json(SurfaceModel::projective_plane()).dump(), R"({"kind":"plane"})");
    EXPECT_EQ(to_json(SurfaceModel::hirzebruch(3)).dump(), R"({"kind":"hirzebruch","m":3})");
    EXPECT_EQ(to_json(SurfaceModel::blowup_chain(SurfaceModel::quadric(), {2, 1})).dump(),
              R"({"kind":"blowup","base":{"kind":"quadric"},"centers":[2,1]})");
    EXPECT_EQ(to_json(SurfaceModel::lattice({"H"}, {{Rational(2)}}, {Rational(-2)})).dump(),
              R"({"kind":"lattice","labels":["H"],"form":[["2"]],"canonical":["-2"]})");
}

TEST(Serialize, GoldenClass) {
    auto d = DivisorClass(SurfaceModel::hirzebruch(4), {Rational::parse("1/2"), Rational(2)});
    EXPECT_EQ(to_json(d).dump(), R"({"model":{"kind":"hirzebruch","m":4},"coeffs":["1/2","2"]})");
}

TEST(Serialize, AcceptsIntegersAndBareArrays) {
    auto d = class_from_json(Json::parse(R"({"model":{"kind":"plane"},"coeffs":[3]})"));
    EXPECT_EQ(d, DivisorClass::of(SurfaceModel::projective_plane(), {3}));
    const auto q = SurfaceModel::quadric();
    EXPECT_EQ(class_from_json(Json::parse(R"(["1","-2/4"])"), &q),
              DivisorClass(q, {Rational(1), Rational::parse("-1/2")}));
    EXPECT_EQ(class_from_json(Json::parse(R"({"coeffs":[1,1]})"), &q), DivisorClass::of(q, {1, 1}));
}

TEST(Serialize, RoundTripRandom) {
    Gen gen(11);
    for (int i = 0; i < 1000; ++i) {
        SurfaceModel model = gen.integer(0, 1) ? gen.blowup_chain(8, 3)
                                               : delpezzo::testing::base_models(8)[static_cast<std::size_t>(
                                                     gen.integer(0, 18))];
        Coeffs c;
        for (std::size_t k = 0; k < model.rank(); ++k)
            c.emplace_back(BigInt(gen.integer(-50, 50)), BigInt(gen.integer(1, 7)));
        DivisorClass d(model, c);
        auto text = to_json(d).dump();
        auto back = class_from_json(Json::parse(text));
        ASSERT_EQ(back, d) << text;
        ASSERT_EQ(model_from_json(to_json(model)), model);
    }
    auto lat = SurfaceModel::lattice({"A", "B"}, {{Rational(0), Rational(1)}, {Rational(1), Rational(-2)}},
                                     {Rational(-2), Rational(-4)});
    EXPECT_EQ(model_from_json(to_json(lat)), lat);
}

TEST(Serialize, MalformedInputIsAFormatError) {
    const char* bad_models[] = {
        R"({"kind":"torus"})",
        R"({"kind":"hirzebruch"})",
        R"({"kind":"hirzebruch","m":"2"})",
        R"({"kind":"weighted_plane","m":0})",
        R"({"kind":"blowup","base":{"kind":"plane"}})",
        R"({"kind":"blowup","base":{"kind":"plane"},"centers":[0]})",
        R"({"kind":"lattice","labels":["A"],"form":[["1","2"]],"canonical":["0"]})",
        R"([1,2])",
        R"({})",
    };
    for (const char* text : bad_models) EXPECT_THROW(model_from_json(Json::parse(text)), FormatError) << text;

    const char* bad_classes[] = {
        R"({"model":{"kind":"plane"},"coeffs":[1,2]})",
        R"({"model":{"kind":"plane"},"coeffs":["x"]})",
        R"({"model":{"kind":"plane"},"coeffs":["1/0"]})",
        R"({"model":{"kind":"plane"},"coeffs":[1.5]})",
        R"({"model":{"kind":"plane"}})",
        R"({"coeffs":[1]})",
        R"([1])",
    };
    for (const char* text : bad_classes) EXPECT_THROW(class_from_json(Json::parse(text)), FormatError) << text;
}
