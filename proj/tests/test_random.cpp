#include <gtest/gtest.h>

#include <sdual/random.hpp>

using namespace sdual;

namespace {
const Alpha kBoth[] = {kClassical, kHyperbolic};
}

TEST(Rng, SameSeedSameStream) {
    Rng a(99), b(99), c(100);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        double x = a.uniform();
        EXPECT_EQ(x, b.uniform());
        differs = differs || x != c.uniform();
    }
    EXPECT_TRUE(differs);
}

TEST(Rng, MatchesEngineBits) {
    // first output of mt19937_64 with the default seed is documented by the standard
    Rng r(5489u);
    std::mt19937_64 eng(5489u);
    EXPECT_EQ(eng(), 14514284786278117030ull);
    double expect = static_cast<double>(14514284786278117030ull >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    EXPECT_EQ(r.uniform(), expect);
}

TEST(Rng, Ranges) {
    Rng r(7);
    for (int i = 0; i < 10000; ++i) {
        double u = r.uniform();
        EXPECT_GE(u, -1.0);
        EXPECT_LT(u, 1.0);
        long k = r.integer(-3, 3);
        EXPECT_GE(k, -3);
        EXPECT_LE(k, 3);
    }
}

TEST(Generators, Reproducible) {
    Rng a(5), b(5);
    for (Alpha al : kBoth) {
        EXPECT_EQ(max_abs(random_twistor<double>(a, al) - random_twistor<double>(b, al)), 0.0);
        EXPECT_EQ(max_abs(random_holo<double>(a, al)), max_abs(random_holo<double>(b, al)));
    }
}

TEST(Generators, PureQuaternionHasNoRealPart) {
    Rng r(8);
    for (Alpha a : kBoth)
        for (int i = 0; i < 50; ++i) EXPECT_TRUE(random_pure_quaternion<double>(r, a).is_pure());
}

TEST(Projections, BianchiIdempotent) {
    Rng r(9);
    for (Alpha a : kBoth)
        for (int i = 0; i < 50; ++i) {
            auto b = bianchi_projection(random_twistor<double>(r, a));
            EXPECT_LE(bianchi_residual(b), 1e-14);
            EXPECT_LE(pair_symmetry_residual(b).residual, 1e-15);
            EXPECT_LE(max_abs(bianchi_projection(b) - b), 1e-14);
        }
}

TEST(Projections, EinsteinAndScalar) {
    Rng r(10);
    for (Alpha a : kBoth)
        for (int i = 0; i < 50; ++i) {
            auto t = random_twistor<double>(r, a);
            auto e = einstein_projection(t);
            EXPECT_NEAR(ricci_t(e).kappa, ricci_t(t).kappa, 1e-12);
            EXPECT_NEAR(ricci_t(remove_scalar(t)).kappa, 0.0, 1e-12);
            // the Weyl part is untouched by both projections
            EXPECT_LE(max_abs(weyl_t(e) - weyl_t(t)), 1e-12);
            EXPECT_LE(max_abs(weyl_t(remove_scalar(t)) - weyl_t(t)), 1e-12);
        }
}

TEST(Projections, SemiflatKeepsOneBlock) {
    Rng r(11);
    for (Alpha a : kBoth)
        for (int xi : {1, -1}) {
            auto t = random_twistor<double>(r, a);
            auto s = semiflat_projection(t, xi);
            auto before = weyl_split_unchecked<double>(weyl_t(bianchi_projection(t)));
            auto after = weyl_split_unchecked<double>(weyl_t(s));
            EXPECT_LE(max_abs(xi > 0 ? after.plus - before.plus : after.minus - before.minus), 1e-12);
        }
}

TEST(HoloGenerators, SelfDualAndAntiSelfDual) {
    Rng r(12);
    for (Alpha a : kBoth)
        for (int i = 0; i < 50; ++i) {
            EXPECT_TRUE(is_self_dual_kaehler(random_self_dual_holo<double>(r, a), 1e-12).holds);
            EXPECT_NEAR(holo_ricci(random_anti_self_dual_holo<double>(r, a)).s, 0.0, 1e-14);
        }
}
