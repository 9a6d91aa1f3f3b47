#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>
#include <tuple>

using namespace delpezzo;

namespace {

using SM = SurfaceModel;

struct ExpectedRow {
    SurfaceModel model;
    std::vector<int> e;
    int gk_square;
    std::string kx;
};

void expect_rows(const std::vector<ClassificationRow>& got, const std::vector<ExpectedRow>& want) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        SCOPED_TRACE("row " + std::to_string(i));
        EXPECT_EQ(got[i].model, want[i].model) << got[i].model.name();
        Coeffs e;
        for (int v : want[i].e) e.emplace_back(v);
        EXPECT_EQ(got[i].e.coeffs(), e);
        EXPECT_EQ(got[i].gk_square, Rational(want[i].gk_square));
        EXPECT_EQ(got[i].kx_square.str(), want[i].kx);
    }
}

std::set<std::string> gk_values(const std::vector<RestrictionCase>& cases, const SurfaceModel& z) {
    std::set<std::string> out;
    for (const auto& c : cases)
        if (c.model == z) out.insert(c.gk_square.str());
    return out;
}

}  // namespace

TEST(RestrictionCases, ReferenceValues) {
    auto plane = restriction_cases(Family::Plane, 8);
    ASSERT_EQ(plane.size(), 2u);
    EXPECT_EQ(plane[0].d, DivisorClass::of(SM::projective_plane(), {1}));
    EXPECT_EQ(plane[0].gk_square, Rational(4));
    EXPECT_EQ(plane[1].d, DivisorClass::of(SM::projective_plane(), {2}));
    EXPECT_EQ(plane[1].gk_square, Rational(1));

    auto weighted = restriction_cases(Family::WeightedPlane, 5);
    ASSERT_EQ(weighted.size(), 4u);  // m = 2..5
    EXPECT_EQ(weighted.back().model, SM::weighted_plane(5));
    EXPECT_EQ(weighted.back().d, DivisorClass::of(SM::weighted_plane(5), {2}));
    EXPECT_EQ(weighted.back().gk_square, Rational(5));

    auto hirz = restriction_cases(Family::Hirzebruch, 2);
    ASSERT_EQ(hirz.size(), 4u);
    EXPECT_EQ(hirz[2].d, DivisorClass::of(SM::hirzebruch(2), {1, 0}));
    EXPECT_EQ(hirz[2].gk_square, Rational(6));
    EXPECT_EQ(hirz[3].d, DivisorClass::of(SM::hirzebruch(2), {1, 1}));
    EXPECT_EQ(hirz[3].gk_square, Rational(4));
}

TEST(RestrictionCases, GkSquareValuesPerFamily) {
    for (int m = 1; m <= 8; ++m) {
        EXPECT_EQ(gk_values(restriction_cases(Family::Hirzebruch, 8), SM::hirzebruch(m)),
                  (std::set<std::string>{std::to_string(m + 2), std::to_string(m + 4)}));
        if (m >= 2) {
            EXPECT_EQ(gk_values(restriction_cases(Family::WeightedPlane, 8), SM::weighted_plane(m)),
                      (std::set<std::string>{std::to_string(m)}));
        }
    }
    EXPECT_EQ(gk_values(restriction_cases(Family::Plane, 8), SM::projective_plane()),
              (std::set<std::string>{"1", "4"}));
    EXPECT_EQ(gk_values(restriction_cases(Family::Quadric, 8), SM::quadric()), (std::set<std::string>{"2", "4"}));
}

TEST(RestrictionCases, InvariantsHold) {
    for (Family f : kAllFamilies) {
        for (const auto& c : restriction_cases(f, 8)) {
            const auto& k = c.model.canonical();
            EXPECT_TRUE(c.d.is_integral());
            EXPECT_FALSE(c.d.is_zero());
            EXPECT_TRUE(is_effective(c.d));
            EXPECT_TRUE(is_ample(-(k + c.d))) << c.model.name();
            EXPECT_EQ(c.gk_square, self_intersection(k + c.d));
        }
    }
}

TEST(RestrictionOracle, ReferenceValues) {
    const auto plane = SM::projective_plane();
    auto p = restriction_cases_oracle(Family::Plane, 8, 10);
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p[0].d, DivisorClass::of(plane, {1}));
    EXPECT_EQ(p[1].d, DivisorClass::of(plane, {2}));

    std::vector<DivisorClass> h3;
    for (const auto& c : restriction_cases_oracle(Family::Hirzebruch, 3, 10))
        if (c.model == SM::hirzebruch(3)) h3.push_back(c.d);
    EXPECT_EQ(h3, (std::vector<DivisorClass>{DivisorClass::of(SM::hirzebruch(3), {1, 0}),
                                             DivisorClass::of(SM::hirzebruch(3), {1, 1})}));

    std::vector<DivisorClass> w4;
    for (const auto& c : restriction_cases_oracle(Family::WeightedPlane, 4, 10))
        if (c.model == SM::weighted_plane(4)) w4.push_back(c.d);
    EXPECT_EQ(w4, (std::vector<DivisorClass>{DivisorClass::of(SM::weighted_plane(4), {2})}));

    EXPECT_THROW(restriction_cases_oracle(Family::Plane, 8, 2), std::invalid_argument);
}

TEST(RestrictionOracle, EqualsClosedFormEverywhere) {
    for (Family f : kAllFamilies)
        for (int m_max = 1; m_max <= 8; ++m_max)
            EXPECT_TRUE(same_case_set(restriction_cases(f, m_max), restriction_cases_oracle(f, m_max, 12)))
                << family_name(f) << " m_max " << m_max;
}

TEST(RestrictionOracle, CIntegralityIsWhatCutsWeightedPlanes) {
    // Without the c-integrality condition, ampleness alone leaves d in [1, m+1] on P(1,1,m).
    const int m = 6;
    int ample_only = 0;
    const auto z = SM::weighted_plane(m);
    for (int d = 1; d <= 12; ++d)
        if (is_ample(-(z.canonical() + DivisorClass::of(z, {d})))) ++ample_only;
    EXPECT_EQ(ample_only, m + 1);
}

TEST(KxNormalForm, PAdicSplit) {
    EXPECT_EQ(kx_normal_form(2, Rational(6)), (KxSquare{2, 3, 1}));
    EXPECT_EQ(kx_normal_form(2, Rational(8)), (KxSquare{2, 1, 3}));
    EXPECT_EQ(kx_normal_form(3, Rational(3)), (KxSquare{3, 1, 1}));
    EXPECT_EQ(kx_normal_form(2, Rational(5)).str(), "5·2^ε");
    EXPECT_EQ(kx_normal_form(2, Rational(6)).str(), "3·2^(ε+1)");
    EXPECT_EQ(kx_normal_form(3, Rational(1)).str(), "3^ε");
    EXPECT_EQ(kx_normal_form(2, Rational(6)).at(3), BigInt(48));
    EXPECT_THROW(kx_normal_form(2, Rational::parse("1/2")), std::logic_error);
    EXPECT_THROW(kx_normal_form(2, Rational(0)), std::logic_error);
}

TEST(ClassifyRows, CharacteristicThree) {
    expect_rows(classify_rows(3), {
                                      {SM::projective_plane(), {1}, 1, "3^ε"},
                                      {SM::weighted_plane(3), {1}, 3, "3^(ε+1)"},
                                  });
}

TEST(ClassifyRows, CharacteristicTwo) {
    // The F_1, E = C+F row has (g^*K_X)^2 = (C+2F)^2 = 3, so K_X^2 = 3·2^ε.
    expect_rows(classify_rows(2), {
                                      {SM::projective_plane(), {1}, 4, "2^(ε+2)"},
                                      {SM::projective_plane(), {2}, 1, "2^ε"},
                                      {SM::weighted_plane(2), {2}, 2, "2^(ε+1)"},
                                      {SM::weighted_plane(4), {2}, 4, "2^(ε+2)"},
                                      {SM::quadric(), {1, 0}, 4, "2^(ε+2)"},
                                      {SM::quadric(), {1, 1}, 2, "2^(ε+1)"},
                                      {SM::hirzebruch(1), {1, 0}, 5, "5·2^ε"},
                                      {SM::hirzebruch(1), {1, 1}, 3, "3·2^ε"},
                                      {SM::hirzebruch(2), {1, 0}, 6, "3·2^(ε+1)"},
                                      {SM::hirzebruch(2), {1, 1}, 4, "2^(ε+2)"},
                                      {SM::hirzebruch(4), {1, 0}, 8, "2^(ε+3)"},
                                      {SM::hirzebruch(4), {1, 1}, 6, "3·2^(ε+1)"},
                                  });
}

TEST(ClassifyRows, NoFoldEmitsBothQuadricOrientations) {
    auto rows = classify_rows(2, {8, false});
    EXPECT_EQ(rows.size(), 13u);
    int quadric = 0;
    for (const auto& r : rows) quadric += r.model == SM::quadric() ? 1 : 0;
    EXPECT_EQ(quadric, 3);
    // Folding is only a presentation choice for p = 3 too (no quadric rows survive there).
    EXPECT_EQ(classify_rows(3, {8, false}).size(), 2u);
}

TEST(ClassifyRows, RejectsOtherCharacteristics) {
    EXPECT_THROW(classify_rows(5), std::invalid_argument);
    EXPECT_THROW(classify_rows(4), std::invalid_argument);
}

TEST(ClassifyRows, RowSoundness) {
    for (int p : {2, 3}) {
        const auto cases = [] {
            std::vector<RestrictionCase> all;
            for (Family f : kAllFamilies) {
                auto cs = restriction_cases(f, 8);
                all.insert(all.end(), cs.begin(), cs.end());
            }
            return all;
        }();
        for (const auto& row : classify_rows(p, {8, false})) {
            const auto d = Rational(p - 1) * row.e;
            const auto k = row.model.canonical();
            EXPECT_NE(std::find_if(cases.begin(), cases.end(), [&](const auto& c) { return c.d == d; }), cases.end());
            EXPECT_TRUE(is_cartier(k + d));
            EXPECT_TRUE(is_ample(-(k + d)));
            EXPECT_EQ(row.gk_square, self_intersection(k + d));
            EXPECT_EQ(Rational(row.kx_square.at(0)), row.gk_square);
        }
    }
}

TEST(ClassifyRows, CharacteristicThreeHasNoQuadricOrHirzebruch) {
    for (const auto& row : classify_rows(3, {8, false})) {
        EXPECT_NE(row.model.kind(), ModelKind::Quadric);
        EXPECT_NE(row.model.kind(), ModelKind::Hirzebruch);
    }
}

TEST(ClassifyRows, EnumerationBoundDoesNotChangeTables) {
    for (int m_max = 4; m_max <= 12; ++m_max) {
        EXPECT_EQ(classify_rows(2, {m_max, true}).size(), 12u) << m_max;
        EXPECT_EQ(classify_rows(3, {m_max, true}).size(), 2u) << m_max;
    }
    EXPECT_EQ(classify_rows(2, {2, true}).size(), 9u);
}

TEST(FilterAudit, ShowsCartierIndexDiscrepancy) {
    auto audits = audit_filters(2, 8);
    ASSERT_EQ(audits.size(), 3u);
    EXPECT_EQ(audits[0].filter, "m-filter on weighted_plane");
    EXPECT_EQ(audits[0].stated_pass, (std::vector<std::string>{"2", "4"}));
    EXPECT_EQ(audits[0].raw_pass, (std::vector<std::string>{"2", "4", "8"}));
    EXPECT_EQ(audits[1].stated_pass, (std::vector<std::string>{"1", "2", "4"}));
    EXPECT_EQ(audits[1].raw_pass.size(), 8u);
    EXPECT_EQ(audits[2].stated_pass, audits[2].raw_pass);

    auto a3 = audit_filters(3, 8);
    ASSERT_EQ(a3.size(), 2u);
    EXPECT_EQ(a3[0].stated_pass, (std::vector<std::string>{"3"}));
    EXPECT_EQ(a3[0].raw_pass, (std::vector<std::string>{"2", "3", "6"}));
}

TEST(VolumeBounds, ReferenceValues) {
    EXPECT_EQ(volume_bound_epsilon(5, 100), BigInt(9));
    EXPECT_EQ(volume_bound_epsilon(2, 0), BigInt(9));
    EXPECT_EQ(volume_bound_epsilon(3, 2), BigInt(27));
    EXPECT_EQ(volume_bound_r(2, 3), BigInt(128));
    EXPECT_EQ(volume_bound_r(3, 1), BigInt(9));
    EXPECT_EQ(volume_bound_r(7, 10), BigInt(9));
    EXPECT_THROW(volume_bound_epsilon(4, 1), std::invalid_argument);
    EXPECT_THROW(volume_bound_epsilon(2, -1), std::invalid_argument);
    EXPECT_THROW(volume_bound_r(2, -1), std::invalid_argument);
}

TEST(VolumeBounds, DerivedMatchesClosedForm) {
    for (int r = 0; r <= 12; ++r) {
        const BigInt nine = 9;
        EXPECT_EQ(volume_bound_r(2, r), std::max(nine, ipow(2, 2 * r + 1))) << r;
        EXPECT_EQ(volume_bound_r(3, r), std::max(nine, ipow(3, r))) << r;
        for (int p : {2, 3, 5, 7, 11}) EXPECT_EQ(volume_bound_r(p, r), volume_bound_r_closed(p, r)) << p << " " << r;
    }
}

TEST(VolumeBounds, Monotone) {
    for (int p : {2, 3, 5, 7}) {
        for (int x = 0; x < 20; ++x) {
            EXPECT_LE(volume_bound_epsilon(p, x), volume_bound_epsilon(p, x + 1));
            EXPECT_LE(volume_bound_r(p, x), volume_bound_r(p, x + 1));
        }
    }
}

TEST(VolumeBounds, DominateEveryTableValue) {
    for (int p : {2, 3})
        for (const auto& row : classify_rows(p))
            for (int eps = 0; eps <= 10; ++eps) EXPECT_LE(row.kx_square.at(eps), volume_bound_epsilon(p, eps));
}

TEST(VolumeBounds, ContextFormulas) {
    auto c = BoundContext::with_r(2, 0);
    EXPECT_EQ(c.bound(), BigInt(9));
    EXPECT_EQ(c.ell_max, 2);
    EXPECT_EQ(BoundContext::with_epsilon(3, 0).ell_max, 1);
    EXPECT_EQ(BoundContext::with_epsilon(7, 0).ell_max, 0);
    EXPECT_EQ(BoundContext::with_epsilon(3, 2).bound(), BigInt(27));
    EXPECT_NE(BoundContext::with_r(2, 3).formula().find("2^(2r+1)"), std::string::npos);
}

TEST(VeryAmpleness, Numerics) {
    EXPECT_EQ(gg_exponent(2), 4);
    EXPECT_EQ(gg_exponent(3), 3);
    EXPECT_THROW(gg_exponent(5), GeometricallyNormalRegime);
    EXPECT_THROW(gg_exponent(6), std::invalid_argument);
    EXPECT_EQ(fujita_multiple(2, 4), 12);
    EXPECT_EQ(fujita_multiple(2, 3), 9);
    EXPECT_EQ(fujita_multiple(0, 1), 1);
    EXPECT_EQ(va_threshold(), 12);
    EXPECT_GE(va_threshold(), fujita_multiple(2, gg_exponent(3)));
    EXPECT_EQ(va_threshold(), fujita_multiple(2, gg_exponent(2)));
    // q(d+1) is the exponent left after omega ⊗ H^(d+1) ⊗ A with H = -qK, A = -K: 1 - q(d+1) - 1.
    for (int d = 0; d <= 4; ++d)
        for (int q = 1; q <= 6; ++q) EXPECT_EQ(-fujita_multiple(d, q), 1 - q * (d + 1) - 1);
}
