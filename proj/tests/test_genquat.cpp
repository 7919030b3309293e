#include <gtest/gtest.h>

#include <sdual/genquat.hpp>
#include <sdual/random.hpp>
#include <sdual/vertical_forms.hpp>

using namespace sdual;
using Q = GenQuaternion<double>;

namespace {

Q basis(int k, Alpha a) { return Q::basis(k, a); }

Mat4<double> mat(std::initializer_list<double> v) {
    Mat4<double> m;
    std::copy(v.begin(), v.end(), m.data.begin());
    return m;
}

double max_diff(const Mat4<double>& a, const Mat4<double>& b) { return max_abs(a - b); }

}  // namespace

TEST(GenQuaternion, J1TimesJ2IsJ3) {
    for (Alpha a : {kClassical, kHyperbolic}) EXPECT_EQ(basis(1, a) * basis(2, a), basis(3, a));
}

TEST(GenQuaternion, IdentityElement) {
    Rng rng(3);
    for (Alpha a : {kClassical, kHyperbolic}) {
        Q q = random_quaternion<double>(rng, a);
        EXPECT_EQ(basis(0, a) * q, q);
        EXPECT_EQ(q * basis(0, a), q);
    }
}

TEST(GenQuaternion, SplitJ2TimesJ3) {
    Q expect(0, -1, 0, 0, kHyperbolic);
    EXPECT_EQ(basis(2, kHyperbolic) * basis(3, kHyperbolic), expect);
    // same product through left-multiplication matrices
    auto m = rep_first(basis(2, kHyperbolic)).entries * rep_first(basis(3, kHyperbolic)).entries;
    EXPECT_EQ(m, rep_first(expect).entries);
}

TEST(GenQuaternion, MismatchedAlphaThrows) {
    EXPECT_THROW(basis(1, kClassical) * basis(1, kHyperbolic), InvalidInput);
}

TEST(GenQuaternion, InvalidAlphaThrows) { EXPECT_THROW(Alpha(0), InvalidInput); }

TEST(GenQuaternion, NormFormExamples) {
    EXPECT_EQ(norm_form(Q(1, 1, 0, 0, kClassical)), 2.0);
    EXPECT_EQ(norm_form(Q(0, 1, 0, 0, kHyperbolic)), -1.0);
    EXPECT_EQ(norm_form(Q(1, 1, 0, 0, kHyperbolic)), 0.0);
}

TEST(GenQuaternion, NormIsProductWithConjugate) {
    Rng rng(5);
    for (Alpha a : {kClassical, kHyperbolic})
        for (int i = 0; i < 200; ++i) {
            Q q = random_quaternion<double>(rng, a);
            Q p = q * conjugate(q);
            EXPECT_NEAR(p[0], norm_form(q), 1e-14);
            for (int k = 1; k < 4; ++k) EXPECT_NEAR(p[k], 0.0, 1e-14);
        }
}

TEST(GenQuaternion, NormIsMultiplicative) {
    Rng rng(6);
    for (Alpha a : {kClassical, kHyperbolic})
        for (int i = 0; i < 500; ++i) {
            Q p = random_quaternion<double>(rng, a), q = random_quaternion<double>(rng, a);
            EXPECT_NEAR(norm_form(p * q), norm_form(p) * norm_form(q), 1e-12);
        }
}

TEST(GenQuaternion, Associative) {
    Rng rng(7);
    for (Alpha a : {kClassical, kHyperbolic})
        for (int i = 0; i < 200; ++i) {
            Q p = random_quaternion<double>(rng, a), q = random_quaternion<double>(rng, a),
              r = random_quaternion<double>(rng, a);
            Q l = (p * q) * r, rr = p * (q * r);
            for (int k = 0; k < 4; ++k) EXPECT_NEAR(l[k], rr[k], 1e-13);
        }
}

TEST(RepFirst, J1MatchesDisplay) {
    for (Alpha a : {kClassical, kHyperbolic}) {
        double al = a.value();
        EXPECT_EQ(rep_first(basis(1, a)).entries, mat({0, al, 0, 0, 1, 0, 0, 0, 0, 0, 0, al, 0, 0, 1, 0}));
    }
}

TEST(RepFirst, IdentityAndKind) {
    auto m = rep_first(basis(0, kClassical));
    EXPECT_EQ(m.entries, Mat4<double>::identity());
    EXPECT_EQ(m.kind, RepKind::first);
    EXPECT_EQ(rep_second(basis(0, kHyperbolic)).entries, Mat4<double>::identity());
    EXPECT_EQ(rep_second(basis(0, kHyperbolic)).kind, RepKind::second);
}

TEST(RepFirst, ProductOfJ1J2IsJ3) {
    for (Alpha a : {kClassical, kHyperbolic})
        EXPECT_EQ(rep_first(basis(1, a)).entries * rep_first(basis(2, a)).entries, rep_first(basis(3, a)).entries);
}

TEST(RepSecond, J1MatchesDisplay) {
    for (Alpha a : {kClassical, kHyperbolic}) {
        double al = a.value();
        EXPECT_EQ(rep_second(basis(1, a)).entries, mat({0, al, 0, 0, 1, 0, 0, 0, 0, 0, 0, -al, 0, 0, -1, 0}));
    }
}

TEST(RepSecond, ReversesProducts) {
    for (Alpha a : {kClassical, kHyperbolic}) {
        Q minus_j3 = -1.0 * basis(3, a);
        EXPECT_EQ(basis(2, a) * basis(1, a), minus_j3);
        EXPECT_EQ(rep_second(basis(1, a)).entries * rep_second(basis(2, a)).entries, rep_second(minus_j3).entries);
    }
}

// Column j of lambda(e_i) must hold the coordinates of e_i e_j; of mu(e_i), those of e_j e_i.
TEST(StructureConstants, ReproduceRepresentationColumns) {
    for (Alpha a : {kClassical, kHyperbolic})
        for (int i = 0; i < 4; ++i) {
            auto L = rep_first(basis(i, a)).entries, M = rep_second(basis(i, a)).entries;
            for (int j = 0; j < 4; ++j) {
                Q left = basis(i, a) * basis(j, a), right = basis(j, a) * basis(i, a);
                for (int k = 0; k < 4; ++k) {
                    EXPECT_EQ(L(k, j), left[k]) << i << j << k;
                    EXPECT_EQ(M(k, j), right[k]) << i << j << k;
                }
            }
        }
}

TEST(RepFirst, HomomorphismOnRandomPairs) {
    Rng rng(11);
    for (Alpha a : {kClassical, kHyperbolic})
        for (int i = 0; i < 1000; ++i) {
            Q p = random_quaternion<double>(rng, a), q = random_quaternion<double>(rng, a);
            EXPECT_LE(max_diff(rep_first(p * q).entries, rep_first(p).entries * rep_first(q).entries), 1e-12);
            EXPECT_LE(max_diff(rep_second(p * q).entries, rep_second(q).entries * rep_second(p).entries), 1e-12);
        }
}

TEST(FundamentalForm, ClassicalJ1) {
    TwoForm<double> w = fundamental_form(basis(1, kClassical));
    EXPECT_EQ(w.c, mat({0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0}));
}

TEST(FundamentalForm, ZeroQuaternion) {
    EXPECT_EQ(max_abs(fundamental_form(Q(0, 0, 0, 0, kHyperbolic))), 0.0);
    EXPECT_EQ(max_abs(pseudofundamental_form(Q(0, 0, 0, 0, kClassical))), 0.0);
}

TEST(FundamentalForm, SplitJ3) {
    // g = diag(1,-1,-1,1) times lambda(j3) = [[0,0,0,-1],[0,0,1,0],[0,-1,0,0],[1,0,0,0]]
    TwoForm<double> w = fundamental_form(basis(3, kHyperbolic));
    EXPECT_EQ(w.c, mat({0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0}));
    EXPECT_EQ(skew_residual(w.c), 0.0);
}

TEST(FundamentalForm, ClassicalPseudoJ1) {
    TwoForm<double> w = pseudofundamental_form(basis(1, kClassical));
    EXPECT_EQ(w.c, mat({0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0}));
}

TEST(FundamentalForm, SkewIffPure) {
    Rng rng(13);
    for (Alpha a : {kClassical, kHyperbolic})
        for (int i = 0; i < 200; ++i) {
            Q q = random_quaternion<double>(rng, a);
            bool pure = q.is_pure();
            EXPECT_EQ(skew_residual(lower_index(rep_first(q), a)) == 0.0, pure);
            EXPECT_EQ(skew_residual(lower_index(rep_second(q), a)) == 0.0, pure);
            q[0] = 0;
            EXPECT_EQ(skew_residual(lower_index(rep_first(q), a)), 0.0);
            EXPECT_EQ(skew_residual(lower_index(rep_second(q), a)), 0.0);
        }
}

TEST(FundamentalForm, NonPureThrows) {
    EXPECT_THROW(fundamental_form(Q(1, 0, 0, 0, kClassical)), InvalidInput);
    EXPECT_THROW(pseudofundamental_form(Q(1, 0, 1, 0, kHyperbolic)), InvalidInput);
}

TEST(GenComplex, UnitSquaresToAlpha) {
    for (Alpha a : {kClassical, kHyperbolic}) {
        GenComplex<double> i(0, 1, a);
        auto sq = i * i;
        EXPECT_EQ(sq.re, a.value());
        EXPECT_EQ(sq.im, 0.0);
        EXPECT_EQ(i.conj().conj(), i);
    }
}

TEST(GenComplex, ConjugationIsAutomorphism) {
    Rng rng(17);
    for (Alpha a : {kClassical, kHyperbolic})
        for (int k = 0; k < 100; ++k) {
            GenComplex<double> x(rng.uniform(), rng.uniform(), a), y(rng.uniform(), rng.uniform(), a);
            auto l = (x * y).conj(), r = x.conj() * y.conj();
            EXPECT_NEAR(l.re, r.re, 1e-15);
            EXPECT_NEAR(l.im, r.im, 1e-15);
        }
}
