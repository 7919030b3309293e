#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <type_traits>

#include "core.hpp"
#include "genquat.hpp"
#include "kaehler.hpp"
#include "twistor.hpp"
#include "vertical_forms.hpp"

namespace sdual {

// Seeded source for fuzzing: mt19937_64 with explicit bit-level conversions,
// so a seed reproduces the same samples on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [-1, 1).
    double uniform() {
        double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return 2.0 * u - 1.0;
    }

    // Uniform integer in [lo, hi].
    long integer(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(eng_() % span);
    }

private:
    std::mt19937_64 eng_;
};

// Floating types draw from [-1, 1); exact types draw small fractions p/q.
template <class T>
T random_scalar(Rng& rng) {
    if constexpr (std::is_floating_point_v<T>) {
        return T(rng.uniform());
    } else {
        long num = rng.integer(-9, 9);
        long den = rng.integer(1, 4);
        return T(num) / T(den);
    }
}

template <class T>
GenQuaternion<T> random_quaternion(Rng& rng, Alpha alpha) {
    GenQuaternion<T> q;
    q.alpha = alpha;
    for (auto& x : q.coeff) x = random_scalar<T>(rng);
    return q;
}

template <class T>
GenQuaternion<T> random_pure_quaternion(Rng& rng, Alpha alpha) {
    GenQuaternion<T> q = random_quaternion<T>(rng, alpha);
    q.coeff[0] = T(0);
    return q;
}

template <class T>
TwoForm<T> random_two_form(Rng& rng, Alpha alpha) {
    TwoForm<T> w(alpha);
    for (const auto& [i, j] : kPairs) {
        w(i, j) = random_scalar<T>(rng);
        w(j, i) = -w(i, j);
    }
    return w;
}

// Generic tensor with the pair symmetries, from a random symmetric 6x6 matrix.
template <class T>
TwistorCurvature<T> random_twistor(Rng& rng, Alpha alpha) {
    auto s = Mat6<T>::zero();
    for (int p = 0; p < 6; ++p)
        for (int q = p; q < 6; ++q) s(p, q) = s(q, p) = random_scalar<T>(rng);
    return from_bivector_matrix(s, alpha);
}

// Projection onto tensors satisfying the first Bianchi identity.
template <class T>
TwistorCurvature<T> bianchi_projection(const TwistorCurvature<T>& r) {
    return r - alternating_part(r);
}

// Replaces the Ricci t-tensor by its trace part.
template <class T>
TwistorCurvature<T> einstein_projection(const TwistorCurvature<T>& r) {
    RicciT<T> rc = ricci_t(r);
    Mat4<T> z = rc.ric;
    for (int i = 0; i < 4; ++i) z(i, i) -= rc.kappa / T(4) * metric_diag<T>(r.alpha, i);
    return r + kulkarni_with_metric(z, r.alpha);
}

template <class T>
TwistorCurvature<T> remove_scalar(const TwistorCurvature<T>& r) {
    return r + ricci_t(r).kappa / T(12) * metric_product<T>(r.alpha);
}

// Removes W^- (xi = +1, self-dual result) or W^+ (xi = -1, anti-self-dual result).
template <class T>
TwistorCurvature<T> semiflat_projection(const TwistorCurvature<T>& r, int xi) {
    TwistorCurvature<T> b = bianchi_projection(r);
    return b - compose_projector<T>(weyl_t(b), -xi);
}

template <class T>
HoloCurvature<T> random_holo(Rng& rng, Alpha alpha) {
    static constexpr int pairs[3][2] = {{0, 0}, {0, 1}, {1, 1}};
    HoloCurvature<T> A(alpha);
    std::array<std::array<GenComplex<T>, 3>, 3> h;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            T re = random_scalar<T>(rng);
            T im = i == j ? T(0) : random_scalar<T>(rng);
            h[i][j] = GenComplex<T>(re, im, alpha);
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int a = pairs[i][0], d = pairs[i][1], b = pairs[j][0], c = pairs[j][1];
            GenComplex<T> v = h[std::min(i, j)][std::max(i, j)];
            if (i > j) {
                int w = eps_index(alpha, a) * eps_index(alpha, b) * eps_index(alpha, c) * eps_index(alpha, d);
                v = T(w) * v.conj();
            }
            A(a, d, b, c) = A(d, a, b, c) = A(a, d, c, b) = A(d, a, c, b) = v;
        }
    return A;
}

// A = 1/4 of the symmetrized expansion of a random t with t^1_0 = -alpha conj(t^0_1).
template <class T>
HoloCurvature<T> random_self_dual_holo(Rng& rng, Alpha alpha) {
    std::array<std::array<GenComplex<T>, 2>, 2> t;
    // draws are sequenced explicitly to keep the stream order fixed
    T t00 = random_scalar<T>(rng);
    T t11 = random_scalar<T>(rng);
    T re = random_scalar<T>(rng);
    T im = random_scalar<T>(rng);
    t[0][0] = GenComplex<T>(t00, T(0), alpha);
    t[1][1] = GenComplex<T>(t11, T(0), alpha);
    t[0][1] = GenComplex<T>(re, im, alpha);
    t[1][0] = T(-alpha.value()) * t[0][1].conj();
    HoloCurvature<T> e = symmetrized_expansion(t, alpha);
    for (auto& z : e.entries) z = T(1) / T(4) * z;
    return e;
}

// Random A shifted along the space-form direction to zero scalar curvature.
template <class T>
HoloCurvature<T> random_anti_self_dual_holo(Rng& rng, Alpha alpha) {
    HoloCurvature<T> A = random_holo<T>(rng, alpha);
    T s = holo_ricci(A).s;
    for (int a = 0; a < 2; ++a)
        for (int d = 0; d < 2; ++d)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) {
                    int k = (a == b && d == c ? 1 : 0) + (a == c && d == b ? 1 : 0);
                    if (k) A(a, d, b, c) += GenComplex<T>(T(k) * s / T(12), T(0), alpha);
                }
    return A;
}

}  // namespace sdual
