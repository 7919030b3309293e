#pragma once

#include <array>
#include <vector>

#include "core.hpp"
#include "genquat.hpp"
#include "vertical_forms.hpp"

namespace sdual {

// Rank-4 array over fibre indices, row-major (b, c, d, e).
template <class T>
struct Tensor4 {
    std::array<T, 256> data{};

    static constexpr std::size_t index(int b, int c, int d, int e) {
        return static_cast<std::size_t>(((b * 4 + c) * 4 + d) * 4 + e);
    }
    T& operator()(int b, int c, int d, int e) { return data[index(b, c, d, e)]; }
    const T& operator()(int b, int c, int d, int e) const { return data[index(b, c, d, e)]; }

    static Tensor4 zero() {
        Tensor4 t;
        t.data.fill(T(0));
        return t;
    }
    friend bool operator==(const Tensor4&, const Tensor4&) = default;
};

// Twistor curvature tensor r_{bcde}; also used for its Weyl part.
template <class T>
struct TwistorCurvature {
    Tensor4<T> t = Tensor4<T>::zero();
    Alpha alpha{};

    TwistorCurvature() = default;
    explicit TwistorCurvature(Alpha a) : alpha(a) {}
    TwistorCurvature(Tensor4<T> x, Alpha a) : t(std::move(x)), alpha(a) {}

    T& operator()(int b, int c, int d, int e) { return t(b, c, d, e); }
    const T& operator()(int b, int c, int d, int e) const { return t(b, c, d, e); }

    friend TwistorCurvature operator+(const TwistorCurvature& x, const TwistorCurvature& y) {
        require_same_alpha(x.alpha, y.alpha);
        TwistorCurvature out = x;
        for (std::size_t i = 0; i < 256; ++i) out.t.data[i] += y.t.data[i];
        return out;
    }
    friend TwistorCurvature operator-(const TwistorCurvature& x, const TwistorCurvature& y) {
        require_same_alpha(x.alpha, y.alpha);
        TwistorCurvature out = x;
        for (std::size_t i = 0; i < 256; ++i) out.t.data[i] -= y.t.data[i];
        return out;
    }
    friend TwistorCurvature operator*(const T& s, const TwistorCurvature& x) {
        TwistorCurvature out = x;
        for (auto& v : out.t.data) v = s * v;
        return out;
    }
    friend bool operator==(const TwistorCurvature&, const TwistorCurvature&) = default;
};

template <class T>
T max_abs(const TwistorCurvature<T>& r) {
    T acc(0);
    for (const auto& v : r.t.data) track_max(acc, v);
    return acc;
}

// Trace-free part of r.
template <class T>
struct WeylT : TwistorCurvature<T> {
    WeylT() = default;
    explicit WeylT(TwistorCurvature<T> r) : TwistorCurvature<T>(std::move(r)) {}
};

template <class T>
struct SymmetryReport {
    T residual{0};
    std::vector<int> index;  // worst offending component
};

// Largest violation of r_{bcde} = -r_{cbde} = -r_{bced} = r_{debc}.
template <class T>
SymmetryReport<T> pair_symmetry_residual(const TwistorCurvature<T>& r) {
    SymmetryReport<T> rep;
    rep.index = {0, 0, 0, 0};
    for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d)
                for (int e = 0; e < 4; ++e) {
                    const T& v = r(b, c, d, e);
                    for (const T& dev : {T(v + r(c, b, d, e)), T(v + r(b, c, e, d)), T(v - r(d, e, b, c))}) {
                        T a = abs_value(dev);
                        if (rep.residual < a) {
                            rep.residual = a;
                            rep.index = {b, c, d, e};
                        }
                    }
                }
    return rep;
}

template <class T>
void validate_pair_symmetries(const TwistorCurvature<T>& r, const T& tol) {
    auto rep = pair_symmetry_residual(r);
    if (tol < rep.residual) throw ValidationError("twistor tensor violates pair symmetries", rep.index);
}

// Pull back a symmetric 6x6 matrix on index pairs (01,02,03,12,13,23).
template <class T>
TwistorCurvature<T> from_bivector_matrix(const Mat6<T>& s, Alpha alpha) {
    TwistorCurvature<T> r(alpha);
    for (int p = 0; p < 6; ++p)
        for (int q = 0; q < 6; ++q) {
            const auto [i, j] = kPairs[p];
            const auto [k, l] = kPairs[q];
            const T& v = s(p, q);
            r(i, j, k, l) = v;
            r(j, i, k, l) = -v;
            r(i, j, l, k) = -v;
            r(j, i, l, k) = v;
        }
    return r;
}

// g_{bd} g_{ce} - g_{be} g_{cd}.
template <class T>
TwistorCurvature<T> metric_product(Alpha alpha) {
    TwistorCurvature<T> x(alpha);
    for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
            if (b == c) continue;
            T v = metric_diag<T>(alpha, b) * metric_diag<T>(alpha, c);
            x(b, c, b, c) = v;
            x(b, c, c, b) = -v;
        }
    return x;
}

// 1/2 (Z_{bd} g_{ce} + Z_{ce} g_{bd} - Z_{be} g_{cd} - Z_{cd} g_{be}) for symmetric Z.
template <class T>
TwistorCurvature<T> kulkarni_with_metric(const Mat4<T>& z, Alpha alpha) {
    TwistorCurvature<T> out(alpha);
    const T half = T(1) / T(2);
    for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d)
                for (int e = 0; e < 4; ++e) {
                    T v(0);
                    if (c == e) v += z(b, d) * metric_diag<T>(alpha, c);
                    if (b == d) v += z(c, e) * metric_diag<T>(alpha, b);
                    if (c == d) v -= z(b, e) * metric_diag<T>(alpha, c);
                    if (b == e) v -= z(c, d) * metric_diag<T>(alpha, b);
                    out(b, c, d, e) = half * v;
                }
    return out;
}

// r(w)_{bc} = -r_{bcde} w^{de}.
template <class T>
TwoForm<T> act(const TwistorCurvature<T>& r, const TwoForm<T>& w) {
    require_same_alpha(r.alpha, w.alpha);
    const TwoForm<T> up = raise(w);
    TwoForm<T> out(r.alpha);
    for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
            T acc(0);
            for (int d = 0; d < 4; ++d)
                for (int e = 0; e < 4; ++e) acc += r(b, c, d, e) * up(d, e);
            out(b, c) = -acc;
        }
    return out;
}

// Matrix of act(r, .) in the basis (sd_basis, asd_basis); column j is the image of basis j.
template <class T>
Mat6<T> operator_matrix(const TwistorCurvature<T>& r) {
    auto basis = split_basis<T>(r.alpha);
    auto m = Mat6<T>::zero();
    for (int j = 0; j < 6; ++j) {
        TwoForm<T> img = act(r, basis[j]);
        SdParams<T> p = sd_coords(img), q = asd_coords(img);
        m(0, j) = p.x; m(1, j) = p.y; m(2, j) = p.z;
        m(3, j) = q.x; m(4, j) = q.y; m(5, j) = q.z;
    }
    return m;
}

template <class T>
struct RicciT {
    Mat4<T> ric;
    T kappa{0};
};

template <class T>
RicciT<T> ricci_t(const TwistorCurvature<T>& r) {
    RicciT<T> out{Mat4<T>::zero(), T(0)};
    for (int b = 0; b < 4; ++b)
        for (int e = 0; e < 4; ++e) {
            T acc(0);
            for (int c = 0; c < 4; ++c) acc += metric_diag<T>(r.alpha, c) * r(b, c, c, e);
            out.ric(b, e) = acc;
        }
    for (int b = 0; b < 4; ++b) out.kappa += metric_diag<T>(r.alpha, b) * out.ric(b, b);
    return out;
}

template <class T>
WeylT<T> weyl_t(const TwistorCurvature<T>& r) {
    RicciT<T> rc = ricci_t(r);
    return WeylT<T>(r + kulkarni_with_metric(rc.ric, r.alpha) - rc.kappa / T(6) * metric_product<T>(r.alpha));
}

template <class T>
struct WeylBlocks {
    Mat3<T> plus, minus, mixed;
    T mixed_residual{0};
};

namespace detail {
template <class T>
Mat3<T> block(const Mat6<T>& m, int r0, int c0) {
    Mat3<T> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out(i, j) = m(r0 + i, c0 + j);
    return out;
}
}  // namespace detail

// Blocks of W in the (sd, asd) frame; `mixed` maps anti-self-dual input to self-dual output.
template <class T>
WeylBlocks<T> weyl_split_unchecked(const TwistorCurvature<T>& w) {
    Mat6<T> m = operator_matrix(w);
    WeylBlocks<T> out{detail::block(m, 0, 0), detail::block(m, 3, 3), detail::block(m, 0, 3), T(0)};
    out.mixed_residual = max_abs(out.mixed);
    track_max(out.mixed_residual, max_abs(detail::block(m, 3, 0)));
    return out;
}

template <class T>
WeylBlocks<T> weyl_split(const WeylT<T>& w, const T& tol) {
    WeylBlocks<T> out = weyl_split_unchecked<T>(w);
    if (tol < out.mixed_residual) throw InvalidInput("Weyl tensor mixes self-dual and anti-self-dual forms");
    return out;
}

template <class T>
struct Verdict {
    bool holds = false;
    T value{0};     // associated scalar (Einstein constant, curvature value, ...)
    T residual{0};  // sup-norm defect behind the verdict
};

template <class T>
Verdict<T> is_einstein_bundle(const TwistorCurvature<T>& r, const T& tol) {
    RicciT<T> rc = ricci_t(r);
    T c = rc.kappa / T(4);
    T res(0);
    for (int b = 0; b < 4; ++b)
        for (int e = 0; e < 4; ++e) track_max(res, rc.ric(b, e) - (b == e ? c * metric_diag<T>(r.alpha, b) : T(0)));
    return {!(tol < res), c, res};
}

template <class T>
Verdict<T> preserves_sd_module(const TwistorCurvature<T>& r, const T& tol) {
    T res(0);
    for (const auto& b : sd_basis<T>(r.alpha)) track_max(res, max_abs(asd_project(act(r, b))));
    return {!(tol < res), T(0), res};
}

template <class T>
T bianchi_residual(const TwistorCurvature<T>& r) {
    T acc(0);
    for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d)
                for (int e = 0; e < 4; ++e) track_max(acc, r(b, c, d, e) + r(b, d, e, c) + r(b, e, c, d));
    return acc;
}

// Totally antisymmetric part of r.
template <class T>
TwistorCurvature<T> alternating_part(const TwistorCurvature<T>& r) {
    TwistorCurvature<T> out(r.alpha);
    static constexpr int perms[24][4] = {
        {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
        {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
        {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
        {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
    for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d)
                for (int e = 0; e < 4; ++e) {
                    const int idx[4] = {b, c, d, e};
                    T acc(0);
                    for (const auto& p : perms) {
                        int s = levi_civita(p[0], p[1], p[2], p[3]);
                        acc += T(s) * r(idx[p[0]], idx[p[1]], idx[p[2]], idx[p[3]]);
                    }
                    out(b, c, d, e) = acc / T(24);
                }
    return out;
}

// Tensor of w -> act(r, *w).
template <class T>
TwistorCurvature<T> compose_star(const TwistorCurvature<T>& r) {
    TwistorCurvature<T> out(r.alpha);
    for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d)
                for (int e = 0; e < 4; ++e) {
                    T acc(0);
                    for (const auto& [m, n] : kPairs) {
                        int s = levi_civita(m, n, d, e);
                        if (s)
                            acc += T(s) * metric_diag<T>(r.alpha, m) * metric_diag<T>(r.alpha, n) * r(b, c, m, n);
                    }
                    out(b, c, d, e) = acc;
                }
    return out;
}

// Tensor of w -> act(r, P(w)) with P the projector of the given sign (+1 self-dual).
template <class T>
TwistorCurvature<T> compose_projector(const TwistorCurvature<T>& r, int sign) {
    TwistorCurvature<T> s = compose_star(r);
    return T(1) / T(2) * (sign > 0 ? r + s : r - s);
}

template <class T>
struct SemiflatReport {
    int xi = 1;
    bool kappa_zero = false;
    bool maps_opposite_into_xi = false;
    bool ricci_zero = false;
    bool maps_all_into_xi = false;
    T kappa_residual{0}, opposite_residual{0}, ricci_residual{0}, all_residual{0};

    bool first_equivalence() const { return kappa_zero == maps_opposite_into_xi; }
    bool second_equivalence() const { return ricci_zero == maps_all_into_xi; }
};

// xi = +1: r self-dual (W^- = 0); xi = -1: anti-self-dual (W^+ = 0).
template <class T>
SemiflatReport<T> semiflat_mapping_checks(const TwistorCurvature<T>& r, int xi, const T& tol) {
    if (xi != 1 && xi != -1) throw InvalidInput("xi must be +1 or -1");
    WeylBlocks<T> wb = weyl_split_unchecked<T>(weyl_t(r));
    if (tol < max_abs(xi > 0 ? wb.minus : wb.plus)) throw InvalidInput("tensor is not semiflat for the requested sign");

    auto other = [&](const TwoForm<T>& w) { return xi > 0 ? asd_project(w) : sd_project(w); };
    SemiflatReport<T> rep;
    rep.xi = xi;
    RicciT<T> rc = ricci_t(r);
    rep.kappa_residual = abs_value(rc.kappa);
    rep.ricci_residual = max_abs(rc.ric);
    for (const auto& b : (xi > 0 ? asd_basis<T>(r.alpha) : sd_basis<T>(r.alpha)))
        track_max(rep.opposite_residual, max_abs(other(act(r, b))));
    rep.all_residual = rep.opposite_residual;
    for (const auto& b : (xi > 0 ? sd_basis<T>(r.alpha) : asd_basis<T>(r.alpha)))
        track_max(rep.all_residual, max_abs(other(act(r, b))));
    rep.kappa_zero = !(tol < rep.kappa_residual);
    rep.ricci_zero = !(tol < rep.ricci_residual);
    rep.maps_opposite_into_xi = !(tol < rep.opposite_residual);
    rep.maps_all_into_xi = !(tol < rep.all_residual);
    return rep;
}

// (r(w), w) / (w, w); `tol` bounds |(w, w)| from below.
template <class T>
T twistor_curvature_value(const TwistorCurvature<T>& r, const TwoForm<T>& w, const T& tol = T(0)) {
    T n = inner(w, w);
    if (!(tol < abs_value(n))) throw DomainError("twistor curvature undefined on an isotropic form");
    return inner(act(r, w), w) / n;
}

template <class T>
Verdict<T> constant_twistor_curvature(const TwistorCurvature<T>& r, const T& tol) {
    Mat3<T> p = detail::block(operator_matrix(r), 0, 0);
    T c = (p(0, 0) + p(1, 1) + p(2, 2)) / T(3);
    T res = max_abs(p - c * Mat3<T>::identity());
    return {!(tol < res), c, res};
}

// Curvature of M in a frame adapted to the structure: composite index I = beta * n + b.
template <class T>
struct HermitianBlockRiemann {
    int n = 1;
    Alpha alpha{};
    std::vector<T> base_metric;  // n x n, row-major
    std::vector<T> comps;        // (4n)^4, row-major

    HermitianBlockRiemann() = default;
    HermitianBlockRiemann(int n_, Alpha a) : n(n_), alpha(a) {
        if (n_ < 1) throw InvalidInput("block dimension n must be positive");
        base_metric.assign(static_cast<std::size_t>(n) * n, T(0));
        for (int i = 0; i < n; ++i) base_metric[static_cast<std::size_t>(i) * n + i] = T(1);
        comps.assign(static_cast<std::size_t>(dim()) * dim() * dim() * dim(), T(0));
    }

    int dim() const { return 4 * n; }
    int composite(int beta, int b) const { return beta * n + b; }
    T& operator()(int i, int j, int k, int l) { return comps[flat(i, j, k, l)]; }
    const T& operator()(int i, int j, int k, int l) const { return comps[flat(i, j, k, l)]; }
    const T& base(int b, int c) const { return base_metric[static_cast<std::size_t>(b) * n + c]; }

    // G_{(beta b)(gamma c)} = g_{beta gamma} G_{bc}.
    T metric(int i, int j) const {
        int beta = i / n, gamma = j / n;
        return beta == gamma ? metric_diag<T>(alpha, beta) * base(i % n, j % n) : T(0);
    }

private:
    std::size_t flat(int i, int j, int k, int l) const {
        std::size_t d = static_cast<std::size_t>(dim());
        return ((static_cast<std::size_t>(i) * d + j) * d + k) * d + l;
    }
};

// Inverse by Gauss-Jordan elimination; throws on a singular matrix.
template <class T>
std::vector<T> invert_square(std::vector<T> a, int n) {
    std::vector<T> inv(static_cast<std::size_t>(n) * n, T(0));
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + i] = T(1);
    auto at = [n](std::vector<T>& m, int i, int j) -> T& { return m[static_cast<std::size_t>(i) * n + j]; };
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int i = col + 1; i < n; ++i)
            if (abs_value(at(a, piv, col)) < abs_value(at(a, i, col))) piv = i;
        if (at(a, piv, col) == T(0)) throw InvalidInput("base metric is singular");
        for (int j = 0; j < n; ++j) {
            std::swap(at(a, col, j), at(a, piv, j));
            std::swap(at(inv, col, j), at(inv, piv, j));
        }
        T p = at(a, col, col);
        for (int j = 0; j < n; ++j) {
            at(a, col, j) /= p;
            at(inv, col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || at(a, i, col) == T(0)) continue;
            T f = at(a, i, col);
            for (int j = 0; j < n; ++j) {
                at(a, i, j) -= f * at(a, col, j);
                at(inv, i, j) -= f * at(inv, col, j);
            }
        }
    }
    return inv;
}

template <class T>
void validate_block_riemann(const HermitianBlockRiemann<T>& R, const T& tol) {
    const int D = R.dim();
    for (int b = 0; b < R.n; ++b)
        for (int c = 0; c < R.n; ++c)
            if (tol < abs_value(T(R.base(b, c) - R.base(c, b))))
                throw ValidationError("base metric is not symmetric", {b, c});
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            for (int k = 0; k < D; ++k)
                for (int l = 0; l < D; ++l) {
                    const T& v = R(i, j, k, l);
                    if (tol < abs_value(T(v + R(j, i, k, l))) || tol < abs_value(T(v + R(i, j, l, k))) ||
                        tol < abs_value(T(v - R(k, l, i, j))))
                        throw ValidationError("curvature tensor violates pair symmetries", {i, j, k, l});
                }
}

// r_{bcde} = (1/n) G^{pq} G^{st} R_{(b p)(c q)(d s)(e t)}.
template <class T>
TwistorCurvature<T> twistor_from_riemann(const HermitianBlockRiemann<T>& R, const T& tol = T(0)) {
    validate_block_riemann(R, tol);
    const int n = R.n;
    std::vector<T> gi = invert_square(R.base_metric, n);
    TwistorCurvature<T> r(R.alpha);
    for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d)
                for (int e = 0; e < 4; ++e) {
                    T acc(0);
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q) {
                            const T& gpq = gi[static_cast<std::size_t>(p) * n + q];
                            if (gpq == T(0)) continue;
                            for (int s = 0; s < n; ++s)
                                for (int t = 0; t < n; ++t) {
                                    const T& gst = gi[static_cast<std::size_t>(s) * n + t];
                                    if (gst == T(0)) continue;
                                    acc += gpq * gst * R(R.composite(b, p), R.composite(c, q), R.composite(d, s), R.composite(e, t));
                                }
                        }
                    r(b, c, d, e) = acc / T(n);
                }
    return r;
}

// Kaehler form on M of the almost structure given by a pure quaternion: (g lambda(q))_{bc} G_{pq}.
template <class T>
std::vector<T> block_kaehler_form(const HermitianBlockRiemann<T>& R, const GenQuaternion<T>& q) {
    TwoForm<T> w = fundamental_form(q);
    const int D = R.dim(), n = R.n;
    std::vector<T> out(static_cast<std::size_t>(D) * D, T(0));
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) out[static_cast<std::size_t>(i) * D + j] = w(i / n, j / n) * R.base(i % n, j % n);
    return out;
}

// Twistor curvature k(J) = (R(Omega), Omega) / |Omega|^2, evaluated on M.
template <class T>
T block_twistor_curvature_value(const HermitianBlockRiemann<T>& R, const GenQuaternion<T>& q) {
    require_same_alpha(R.alpha, q.alpha);
    const int D = R.dim(), n = R.n;
    std::vector<T> om = block_kaehler_form(R, q);
    std::vector<T> gi_base = invert_square(R.base_metric, n);
    std::vector<T> gi(static_cast<std::size_t>(D) * D, T(0));
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            if (i / n == j / n) gi[static_cast<std::size_t>(i) * D + j] = metric_diag<T>(R.alpha, i / n) * gi_base[static_cast<std::size_t>(i % n) * n + j % n];
    auto at = [D](const std::vector<T>& m, int i, int j) -> const T& { return m[static_cast<std::size_t>(i) * D + j]; };
    std::vector<T> up(static_cast<std::size_t>(D) * D, T(0));
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            T acc(0);
            for (int k = 0; k < D; ++k)
                for (int l = 0; l < D; ++l) acc += at(gi, i, k) * at(gi, j, l) * at(om, k, l);
            up[static_cast<std::size_t>(i) * D + j] = acc;
        }
    T num(0), den(0);
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            den += at(om, i, j) * at(up, i, j);
            T img(0);
            for (int k = 0; k < D; ++k)
                for (int l = 0; l < D; ++l) img -= R(i, j, k, l) * at(up, k, l);
            num += img * at(up, i, j);
        }
    if (den == T(0)) throw DomainError("twistor curvature undefined on an isotropic structure");
    return num / den;
}

}  // namespace sdual
