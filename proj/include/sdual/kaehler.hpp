#pragma once

#include <array>

#include "core.hpp"
#include "genquat.hpp"
#include "twistor.hpp"
#include "vertical_forms.hpp"

namespace sdual {

// Weight attached to a holomorphic index: 1 for index 0, -alpha for index 1.
inline int eps_index(Alpha alpha, int a) { return a == 0 ? 1 : -alpha.value(); }

// A^{ad}_{bc} with a, d, b, c in {0, 1}.
template <class T>
struct HoloCurvature {
    std::array<GenComplex<T>, 16> entries;
    Alpha alpha{};

    HoloCurvature() = default;
    explicit HoloCurvature(Alpha a) : alpha(a) { entries.fill(GenComplex<T>(T(0), T(0), a)); }

    static constexpr std::size_t index(int a, int d, int b, int c) {
        return static_cast<std::size_t>(((a * 2 + d) * 2 + b) * 2 + c);
    }
    GenComplex<T>& operator()(int a, int d, int b, int c) { return entries[index(a, d, b, c)]; }
    const GenComplex<T>& operator()(int a, int d, int b, int c) const { return entries[index(a, d, b, c)]; }

    friend bool operator==(const HoloCurvature& x, const HoloCurvature& y) {
        return x.alpha == y.alpha && x.entries == y.entries;
    }
};

template <class T>
using BochnerTensor = HoloCurvature<T>;

template <class T>
T max_abs(const HoloCurvature<T>& A) {
    T acc(0);
    for (const auto& z : A.entries) track_max(acc, max_abs(z));
    return acc;
}

// Symmetry in (a,d) and (b,c); reality conj(A^{ad}_{bc}) = e(a)e(b)e(c)e(d) A^{bc}_{ad}.
template <class T>
SymmetryReport<T> holo_residual(const HoloCurvature<T>& A) {
    SymmetryReport<T> rep;
    rep.index = {0, 0, 0, 0};
    for (int a = 0; a < 2; ++a)
        for (int d = 0; d < 2; ++d)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) {
                    const auto& v = A(a, d, b, c);
                    T w = T(eps_index(A.alpha, a) * eps_index(A.alpha, b) * eps_index(A.alpha, c) * eps_index(A.alpha, d));
                    for (const auto& dev : {v - A(d, a, b, c), v - A(a, d, c, b), v.conj() - w * A(b, c, a, d)}) {
                        T m = max_abs(dev);
                        if (rep.residual < m) {
                            rep.residual = m;
                            rep.index = {a, d, b, c};
                        }
                    }
                }
    return rep;
}

template <class T>
void validate_holo(const HoloCurvature<T>& A, const T& tol) {
    auto rep = holo_residual(A);
    if (tol < rep.residual) throw ValidationError("holomorphic curvature tensor violates symmetry or reality", rep.index);
}

// r^a_b stored at [a][b].
template <class T>
struct HoloRicci {
    std::array<std::array<GenComplex<T>, 2>, 2> r;
    T s{0};
};

template <class T>
HoloRicci<T> holo_ricci(const HoloCurvature<T>& A) {
    HoloRicci<T> out;
    const GenComplex<T> zero(T(0), T(0), A.alpha);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            GenComplex<T> acc = zero;
            for (int c = 0; c < 2; ++c) acc -= A(c, a, c, b);
            out.r[a][b] = acc;
        }
    // the imaginary part of the trace vanishes by reality
    out.s = T(2) * (out.r[0][0].re + out.r[1][1].re);
    return out;
}

// Rank-4 tensor over A-frame indices 0, 1, 0^ = 2, 1^ = 3 with K_alpha entries.
template <class T>
struct ATensor4 {
    std::array<GenComplex<T>, 256> data;
    Alpha alpha{};

    ATensor4() = default;
    explicit ATensor4(Alpha a) : alpha(a) { data.fill(GenComplex<T>(T(0), T(0), a)); }
    GenComplex<T>& operator()(int i, int j, int k, int l) { return data[Tensor4<T>::index(i, j, k, l)]; }
    const GenComplex<T>& operator()(int i, int j, int k, int l) const { return data[Tensor4<T>::index(i, j, k, l)]; }
};

template <class T>
struct ATensor2 {
    std::array<GenComplex<T>, 16> data;
    Alpha alpha{};

    ATensor2() = default;
    explicit ATensor2(Alpha a) : alpha(a) { data.fill(GenComplex<T>(T(0), T(0), a)); }
    GenComplex<T>& operator()(int i, int j) { return data[static_cast<std::size_t>(i * 4 + j)]; }
    const GenComplex<T>& operator()(int i, int j) const { return data[static_cast<std::size_t>(i * 4 + j)]; }
};

inline constexpr int hat(int i) { return (i + 2) % 4; }

// g_{0 0^} = 1, g_{1 1^} = -alpha.
template <class T>
ATensor2<T> aframe_metric(Alpha alpha) {
    ATensor2<T> g(alpha);
    g(0, 2) = g(2, 0) = GenComplex<T>(T(1), T(0), alpha);
    g(1, 3) = g(3, 1) = GenComplex<T>(T(-alpha.value()), T(0), alpha);
    return g;
}

template <class T>
ATensor4<T> riemann_aframe(const HoloCurvature<T>& A) {
    ATensor4<T> R(A.alpha);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    GenComplex<T> v = T(eps_index(A.alpha, a) * eps_index(A.alpha, d)) * A(a, d, b, c);
                    R(hat(a), b, c, hat(d)) = v;
                    R(b, hat(a), hat(d), c) = v;
                    R(hat(a), b, hat(d), c) = -v;
                    R(b, hat(a), c, hat(d)) = -v;
                }
    return R;
}

namespace detail {

// Unnormalized change of frame; the true matrix is this one over sqrt(2).
// to_real column i holds the A-frame components of the real vector f_i,
// real frame (e0, J e0, e1, J e1).
template <class T>
std::array<std::array<GenComplex<T>, 4>, 4> to_real_matrix(Alpha al) {
    auto z = [al](int re, int im) { return GenComplex<T>(T(re), T(im), al); };
    std::array<std::array<GenComplex<T>, 4>, 4> q;
    for (auto& row : q) row.fill(z(0, 0));
    q[0][0] = z(1, 0); q[2][0] = z(1, 0);
    q[0][1] = z(0, 1); q[2][1] = z(0, -1);
    q[1][2] = z(1, 0); q[3][2] = z(1, 0);
    q[1][3] = z(0, 1); q[3][3] = z(0, -1);
    return q;
}

// Column A holds the real-frame components of the A-frame vector eps_A.
template <class T>
std::array<std::array<GenComplex<T>, 4>, 4> to_aframe_matrix(Alpha al) {
    auto z = [al](int re, int im) { return GenComplex<T>(T(re), T(im), al); };
    const int a = al.value();
    std::array<std::array<GenComplex<T>, 4>, 4> p;
    for (auto& row : p) row.fill(z(0, 0));
    p[0][0] = z(1, 0); p[1][0] = z(0, a);
    p[2][1] = z(1, 0); p[3][1] = z(0, a);
    p[0][2] = z(1, 0); p[1][2] = z(0, -a);
    p[2][3] = z(1, 0); p[3][3] = z(0, -a);
    return p;
}

// out_{i..} = scale * sum m[A][i] ... in_{A..}, applied to every slot.
template <class T, std::size_t N>
std::array<GenComplex<T>, N> transform(const std::array<GenComplex<T>, N>& in, int rank,
                                       const std::array<std::array<GenComplex<T>, 4>, 4>& m, Alpha al) {
    std::array<GenComplex<T>, N> cur = in;
    for (int slot = 0; slot < rank; ++slot) {
        std::array<GenComplex<T>, N> next;
        next.fill(GenComplex<T>(T(0), T(0), al));
        int stride = 1;
        for (int k = slot + 1; k < rank; ++k) stride *= 4;
        for (std::size_t flat = 0; flat < N; ++flat) {
            int i = static_cast<int>(flat / stride) % 4;
            std::size_t base = flat - static_cast<std::size_t>(i * stride);
            for (int A = 0; A < 4; ++A) {
                const auto& coef = m[A][i];
                if (coef.re == T(0) && coef.im == T(0)) continue;
                next[flat] += coef * cur[base + static_cast<std::size_t>(A * stride)];
            }
        }
        cur = next;
    }
    return cur;
}

template <class T, std::size_t N>
T hat_reality_residual(const std::array<GenComplex<T>, N>& in, int rank) {
    T acc(0);
    for (std::size_t flat = 0; flat < N; ++flat) {
        std::size_t other = 0;
        std::size_t rest = flat;
        std::size_t mult = 1;
        for (int k = 0; k < rank; ++k) {
            int i = static_cast<int>(rest % 4);
            rest /= 4;
            other += static_cast<std::size_t>(hat(i)) * mult;
            mult *= 4;
        }
        track_max(acc, max_abs(in[flat].conj() - in[other]));
    }
    return acc;
}

template <class T>
T half_power(int rank) {
    T f(1);
    for (int k = 0; k < rank / 2; ++k) f /= T(2);
    return f;
}

}  // namespace detail

// Largest |conj(T_{I..}) - T_{I^..}|.
template <class T>
T hat_reality_residual(const ATensor4<T>& t) {
    return detail::hat_reality_residual(t.data, 4);
}
template <class T>
T hat_reality_residual(const ATensor2<T>& t) {
    return detail::hat_reality_residual(t.data, 2);
}

template <class T>
TwistorCurvature<T> frame_change_to_real(const ATensor4<T>& t, const T& tol = T(0)) {
    if (tol < hat_reality_residual(t)) throw InvalidInput("A-frame tensor is not hat-real");
    auto out = detail::transform(t.data, 4, detail::to_real_matrix<T>(t.alpha), t.alpha);
    TwistorCurvature<T> r(t.alpha);
    const T f = detail::half_power<T>(4);
    for (std::size_t i = 0; i < 256; ++i) r.t.data[i] = f * out[i].re;
    return r;
}

template <class T>
Mat4<T> frame_change_to_real(const ATensor2<T>& t, const T& tol = T(0)) {
    if (tol < hat_reality_residual(t)) throw InvalidInput("A-frame tensor is not hat-real");
    auto out = detail::transform(t.data, 2, detail::to_real_matrix<T>(t.alpha), t.alpha);
    Mat4<T> m;
    const T f = detail::half_power<T>(2);
    for (std::size_t i = 0; i < 16; ++i) m.data[i] = f * out[i].re;
    return m;
}

template <class T>
ATensor4<T> frame_change_to_aframe(const TwistorCurvature<T>& r) {
    ATensor4<T> in(r.alpha);
    for (std::size_t i = 0; i < 256; ++i) in.data[i] = GenComplex<T>(r.t.data[i], T(0), r.alpha);
    in.data = detail::transform(in.data, 4, detail::to_aframe_matrix<T>(r.alpha), r.alpha);
    const T f = detail::half_power<T>(4);
    for (auto& z : in.data) z = f * z;
    return in;
}

template <class T>
ATensor2<T> frame_change_to_aframe(const Mat4<T>& m, Alpha alpha) {
    ATensor2<T> in(alpha);
    for (std::size_t i = 0; i < 16; ++i) in.data[i] = GenComplex<T>(m.data[i], T(0), alpha);
    in.data = detail::transform(in.data, 2, detail::to_aframe_matrix<T>(alpha), alpha);
    const T f = detail::half_power<T>(2);
    for (auto& z : in.data) z = f * z;
    return in;
}

// Real-frame twistor tensor of a 4-dimensional Kaehler curvature (r = R when n = 1).
template <class T>
TwistorCurvature<T> real_twistor(const HoloCurvature<T>& A) {
    return frame_change_to_real(riemann_aframe(A));
}

// W_{ab}^{cd} at [a][b][c][d] and W_a^b_c^d at [a][b][c][d].
template <class T>
struct WeylComponents {
    std::array<GenComplex<T>, 16> holo;
    std::array<GenComplex<T>, 16> mixed;

    static constexpr std::size_t index(int a, int b, int c, int d) {
        return static_cast<std::size_t>(((a * 2 + b) * 2 + c) * 2 + d);
    }
};

namespace detail {
inline int kd(int a, int b) { return a == b ? 1 : 0; }
}  // namespace detail

template <class T>
WeylComponents<T> weyl_components(const HoloCurvature<T>& A) {
    const HoloRicci<T> rc = holo_ricci(A);
    const auto& r = rc.r;
    const T half = T(1) / T(2);
    const GenComplex<T> zero(T(0), T(0), A.alpha);
    const GenComplex<T> s6(rc.s / T(6), T(0), A.alpha);
    auto k = [](int x, int y) { return T(detail::kd(x, y)); };
    WeylComponents<T> out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    auto i = WeylComponents<T>::index(a, b, c, d);
                    out.holo[i] = half * (k(d, b) * r[c][a] + k(c, a) * r[d][b] - k(c, b) * r[d][a] - k(d, a) * r[c][b]) +
                                  (k(d, a) * k(c, b) - k(c, a) * k(d, b)) * s6;
                    out.mixed[i] = zero - A(b, d, a, c) - half * (k(b, c) * r[d][a] + k(d, a) * r[b][c]) +
                                   (k(b, c) * k(d, a)) * s6;
                }
    return out;
}

// B^{bd}_{ac} = A^{bd}_{ac} + 1/2 (r^b_c d^d_a + r^d_a d^b_c) - (s/6) d^b_c d^d_a, stored at (b, d, a, c).
template <class T>
HoloCurvature<T> b_tensor(const HoloCurvature<T>& A) {
    const HoloRicci<T> rc = holo_ricci(A);
    const T half = T(1) / T(2);
    const GenComplex<T> s6(rc.s / T(6), T(0), A.alpha);
    HoloCurvature<T> B(A.alpha);
    for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d)
            for (int a = 0; a < 2; ++a)
                for (int c = 0; c < 2; ++c) {
                    T bc(detail::kd(b, c)), da(detail::kd(d, a));
                    B(b, d, a, c) = A(b, d, a, c) + half * (da * rc.r[b][c] + bc * rc.r[d][a]) - (bc * da) * s6;
                }
    return B;
}

// 4-term expansion X^b_a d^d_c + X^d_c d^b_a + X^b_c d^d_a + X^d_a d^b_c, stored at (b, d, a, c).
template <class T>
HoloCurvature<T> symmetrized_expansion(const std::array<std::array<GenComplex<T>, 2>, 2>& x, Alpha alpha) {
    HoloCurvature<T> out(alpha);
    for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d)
            for (int a = 0; a < 2; ++a)
                for (int c = 0; c < 2; ++c) {
                    auto k = [](int p, int q) { return T(detail::kd(p, q)); };
                    out(b, d, a, c) = k(d, c) * x[b][a] + k(b, a) * x[d][c] + k(d, a) * x[b][c] + k(b, c) * x[d][a];
                }
    return out;
}

template <class T>
struct SelfDualKaehlerVerdict {
    bool holds = false;
    std::array<std::array<GenComplex<T>, 2>, 2> t;
    T residual{0};
};

template <class T>
SelfDualKaehlerVerdict<T> is_self_dual_kaehler(const HoloCurvature<T>& A, const T& tol) {
    const HoloRicci<T> rc = holo_ricci(A);
    SelfDualKaehlerVerdict<T> out;
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 2; ++a)
            out.t[b][a] = GenComplex<T>(T(0), T(0), A.alpha) - rc.r[b][a] +
                          GenComplex<T>(b == a ? rc.s / T(12) : T(0), T(0), A.alpha);
    HoloCurvature<T> e = symmetrized_expansion(out.t, A.alpha);
    for (std::size_t i = 0; i < 16; ++i) track_max(out.residual, max_abs(T(4) * A.entries[i] - e.entries[i]));
    out.holds = !(tol < out.residual);
    return out;
}

// Sign of the scalar term in L; fixed by reconcile_bochner_scalar_sign.
inline constexpr int kBochnerScalarSign = -1;

template <class T>
BochnerTensor<T> bochner(const HoloCurvature<T>& A, int scalar_sign = kBochnerScalarSign) {
    const HoloRicci<T> rc = holo_ricci(A);
    std::array<std::array<GenComplex<T>, 2>, 2> L;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            L[a][b] = T(1) / T(8) * rc.r[a][b] +
                      GenComplex<T>(a == b ? T(scalar_sign) * rc.s / T(96) : T(0), T(0), A.alpha);
    // expansion indices (b,d,a,c) -> here (a,d,b,c): L^a_b d^d_c + L^d_c d^a_b + L^a_c d^d_b + L^d_b d^a_c
    HoloCurvature<T> e = symmetrized_expansion(L, A.alpha);
    BochnerTensor<T> B(A.alpha);
    for (std::size_t i = 0; i < 16; ++i) B.entries[i] = A.entries[i] + T(2) * e.entries[i];
    return B;
}

template <class T>
Verdict<T> is_bochner_flat(const HoloCurvature<T>& A, const T& tol) {
    T res = max_abs(bochner(A));
    return {!(tol < res), T(0), res};
}

template <class T>
struct AntiSelfDualKaehlerVerdict {
    bool holds = false;
    T s{0};
    T residual{0};               // |s|
    T weyl_route_residual{0};    // max of |B^{bc}_{ac}| and |W_{ab}^{01}|
    bool routes_agree = true;    // both routes give the same verdict
};

template <class T>
AntiSelfDualKaehlerVerdict<T> is_anti_self_dual_kaehler(const HoloCurvature<T>& A, const T& tol) {
    AntiSelfDualKaehlerVerdict<T> out;
    out.s = holo_ricci(A).s;
    out.residual = abs_value(out.s);
    out.holds = !(tol < out.residual);
    HoloCurvature<T> B = b_tensor(A);
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 2; ++a) {
            GenComplex<T> tr = B(b, 0, a, 0) + B(b, 1, a, 1);
            track_max(out.weyl_route_residual, max_abs(tr));
        }
    WeylComponents<T> w = weyl_components(A);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) track_max(out.weyl_route_residual, max_abs(w.holo[WeylComponents<T>::index(a, b, 0, 1)]));
    out.routes_agree = out.holds == !(tol < out.weyl_route_residual);
    return out;
}

enum class Duality { sd, asd };

// Basis forms of the two eigenspaces in the A-frame, omega_{IJ} with I, J in (0, 1, 0^, 1^).
template <class T>
ATensor2<T> lemma4_forms(Alpha alpha, Duality kind, const T& x, const T& y, const T& z) {
    ATensor2<T> w(alpha);
    const T al(alpha.value());
    auto set = [&](int i, int j, GenComplex<T> v) {
        w(j, i) = -v;
        w(i, j) = v;
    };
    if (kind == Duality::sd) {
        set(0, 1, {x, z, alpha});
        set(0, 2, {T(0), y, alpha});
        set(1, 3, {T(0), T(-al * y), alpha});
        set(2, 3, {x, T(-z), alpha});
    } else {
        set(0, 2, {T(0), y, alpha});
        set(0, 3, {x, z, alpha});
        set(1, 2, {T(-x), z, alpha});
        set(1, 3, {T(0), T(al * y), alpha});
    }
    return w;
}

}  // namespace sdual
