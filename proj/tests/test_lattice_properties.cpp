// Randomized invariants of the lattice layer. Seeds are fixed so failures reproduce.

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace delpezzo;
using delpezzo::testing::Gen;

namespace {

constexpr int kCases = 2000;

SurfaceModel random_model(Gen& gen, bool allow_chains) {
    auto bases = delpezzo::testing::base_models(8);
    if (allow_chains && gen.integer(0, 2) == 0) return gen.blowup_chain(8, 3);
    return bases[static_cast<std::size_t>(gen.integer(0, static_cast<int>(bases.size()) - 1))];
}

}  // namespace

TEST(LatticeProperties, IntersectionIsSymmetricAndBilinear) {
    Gen gen(1);
    for (int i = 0; i < kCases; ++i) {
        auto model = random_model(gen, true);
        auto a = gen.integral_class(model);
        auto b = gen.integral_class(model);
        auto c = gen.integral_class(model);
        Rational s(gen.integer(-10, 10));
        ASSERT_EQ(intersect(a, b), intersect(b, a)) << model.name();
        ASSERT_EQ(intersect(a + b, c), intersect(a, c) + intersect(b, c)) << model.name();
        ASSERT_EQ(intersect(s * a, b), s * intersect(a, b)) << model.name();
    }
}

TEST(LatticeProperties, FormAgreesWithClosedFormulas) {
    Gen gen(2);
    for (int i = 0; i < kCases; ++i) {
        auto model = random_model(gen, false);
        auto a = gen.integral_class(model);
        auto b = gen.integral_class(model);
        ASSERT_EQ(intersect(a, b), delpezzo::testing::closed_form_intersection(a, b)) << model.name();
    }
}

TEST(LatticeProperties, CanonicalSquareClosedForms) {
    EXPECT_EQ(canonical_square(SurfaceModel::projective_plane()), Rational(9));
    EXPECT_EQ(canonical_square(SurfaceModel::quadric()), Rational(8));
    for (int m = 0; m <= 50; ++m) EXPECT_EQ(canonical_square(SurfaceModel::hirzebruch(m)), Rational(8)) << m;
    for (int m = 1; m <= 50; ++m)
        EXPECT_EQ(canonical_square(SurfaceModel::weighted_plane(m)), Rational(BigInt((m + 2) * (m + 2)), BigInt(m)))
            << m;
    Gen gen(3);
    for (int i = 0; i < kCases; ++i) {
        auto chain = gen.blowup_chain(8, 3);
        int drop = 0;
        for (int d : chain.centers()) drop += d;
        ASSERT_EQ(canonical_square(chain), canonical_square(chain.base()) - Rational(drop)) << chain.name();
    }
}

TEST(LatticeProperties, ConeCoherence) {
    Gen gen(4);
    for (int i = 0; i < kCases; ++i) {
        auto model = random_model(gen, false);
        auto d = gen.integral_class(model);
        const bool nef = is_nef(d);
        if (is_ample(d)) {
            ASSERT_TRUE(nef) << model.name();
        }
        if (nef) {
            for (const auto& g : model.effective_generators()) ASSERT_GE(intersect(d, g), Rational(0));
        }
    }
}

TEST(LatticeProperties, NakaiAgreesWithNefConeInterior) {
    Gen gen(5);
    int ample_seen = 0;
    for (int i = 0; i < kCases; ++i) {
        auto model = random_model(gen, false);
        auto d = gen.integral_class(model);
        const bool a = is_ample(d);
        ASSERT_EQ(a, nakai_ample(d)) << model.name();
        ASSERT_EQ(a, delpezzo::testing::closed_form_ample(d)) << model.name();
        ample_seen += a ? 1 : 0;
    }
    // The generator actually exercises both outcomes.
    EXPECT_GT(ample_seen, kCases / 20);
    EXPECT_LT(ample_seen, kCases);
}

TEST(LatticeProperties, ResolutionPullbackIsAnIsometry) {
    int checked = 0;
    for (int m = 1; m <= 8; ++m) {
        const auto z = SurfaceModel::weighted_plane(m);
        const auto c = SurfaceModel::hirzebruch(m).basis(0);
        for (int d1 = -20; d1 <= 20; ++d1) {
            auto p1 = resolution_pullback(m, DivisorClass::of(z, {d1}));
            ASSERT_EQ(intersect(p1, c), Rational(0));
            for (int d2 = -20; d2 <= 20; d2 += 3) {
                auto p2 = resolution_pullback(m, DivisorClass::of(z, {d2}));
                ASSERT_EQ(intersect(p1, p2), intersect(DivisorClass::of(z, {d1}), DivisorClass::of(z, {d2})));
                ++checked;
            }
        }
    }
    EXPECT_GE(checked, 1000);
}

TEST(LatticeProperties, DiscrepancySignMatchesCanonicalSingularities) {
    for (int m = 1; m <= 1000; ++m) ASSERT_EQ(discrepancy(m).sign() >= 0, m <= 2) << m;
}

TEST(LatticeProperties, BlowupPreservesPulledBackIntersections) {
    Gen gen(6);
    for (int i = 0; i < kCases; ++i) {
        auto chain = gen.blowup_chain(8, 3);
        const auto& base = chain.base();
        auto a = gen.integral_class(base);
        auto b = gen.integral_class(base);
        ASSERT_EQ(intersect(total_transform(chain, a), total_transform(chain, b)), intersect(a, b));
        const std::size_t r0 = base.rank();
        for (std::size_t k = r0; k < chain.rank(); ++k) {
            ASSERT_EQ(intersect(chain.basis(k), total_transform(chain, a)), Rational(0));
            ASSERT_EQ(self_intersection(chain.basis(k)), Rational(-chain.centers()[k - r0]));
            for (std::size_t l = r0; l < chain.rank(); ++l)
                if (l != k) {
                    ASSERT_EQ(intersect(chain.basis(k), chain.basis(l)), Rational(0));
                }
        }
        // Proper transform through the last center with multiplicity mu.
        const int mu = gen.integer(0, 3);
        ASSERT_EQ(self_intersection(proper_transform(chain, a, mu)),
                  self_intersection(a) - Rational(mu * mu * chain.centers().back()));
    }
}

TEST(LatticeProperties, RiemannRochNormalization) {
    for (const auto& model : delpezzo::testing::base_models(8)) {
        EXPECT_EQ(riemann_roch_chi(model.zero()), Rational(1)) << model.name();
        // K of P(1,1,m) is Cartier only for m | 2; chi is not defined off the Cartier classes.
        if (is_cartier(model.canonical())) {
            EXPECT_EQ(riemann_roch_chi(model.canonical()), Rational(1)) << model.name();
        } else {
            EXPECT_EQ(model.kind(), ModelKind::WeightedPlane);
            EXPECT_GE(model.m(), 3);
            EXPECT_THROW(riemann_roch_chi(model.canonical()), NotCartier);
        }
    }
    const auto plane = SurfaceModel::projective_plane();
    for (int n = 0; n <= 40; ++n) {
        auto d = DivisorClass::of(plane, {n});
        EXPECT_EQ(riemann_roch_chi(d), Rational((n + 1) * (n + 2) / 2));
        EXPECT_EQ(riemann_roch_chi(d), Rational(BigInt(delpezzo::testing::monomial_count(n, 3))));
    }
}

TEST(LatticeProperties, RiemannRochSerreSymmetry) {
    // chi(D) = chi(K - D) on every base model, over random Cartier classes.
    Gen gen(7);
    int checked = 0;
    while (checked < kCases) {
        auto model = random_model(gen, false);
        auto d = gen.integral_class(model);
        if (!is_cartier(d) || !is_cartier(model.canonical())) continue;
        ASSERT_EQ(riemann_roch_chi(d), riemann_roch_chi(model.canonical() - d)) << model.name();
        ++checked;
    }
}
