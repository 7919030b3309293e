#pragma once

#include <array>

#include "core.hpp"
#include "genquat.hpp"

namespace sdual {

// Skew 4x4 array of lower-index components on the fibre.
template <class T>
struct TwoForm {
    Mat4<T> c = Mat4<T>::zero();
    Alpha alpha{};

    TwoForm() = default;
    explicit TwoForm(Alpha a) : alpha(a) {}
    TwoForm(Mat4<T> m, Alpha a) : c(std::move(m)), alpha(a) {}

    T& operator()(int i, int j) { return c(i, j); }
    const T& operator()(int i, int j) const { return c(i, j); }

    // Unit bivector e^i ^ e^j (i != j).
    static TwoForm unit(int i, int j, Alpha a) {
        TwoForm w(a);
        w(i, j) = T(1);
        w(j, i) = T(-1);
        return w;
    }

    friend TwoForm operator+(const TwoForm& x, const TwoForm& y) {
        require_same_alpha(x.alpha, y.alpha);
        return {x.c + y.c, x.alpha};
    }
    friend TwoForm operator-(const TwoForm& x, const TwoForm& y) {
        require_same_alpha(x.alpha, y.alpha);
        return {x.c - y.c, x.alpha};
    }
    friend TwoForm operator*(const T& s, const TwoForm& x) {
        TwoForm out = x;
        for (auto& v : out.c.data) v = s * v;
        return out;
    }
    friend bool operator==(const TwoForm& x, const TwoForm& y) { return x.alpha == y.alpha && x.c == y.c; }
};

template <class T>
T max_abs(const TwoForm<T>& w) {
    return max_abs(w.c);
}

// Largest |w_ij + w_ji|.
template <class T>
T skew_residual(const Mat4<T>& m) {
    T acc(0);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) track_max(acc, m(i, j) + m(j, i));
    return acc;
}

template <class T>
TwoForm<T> checked_two_form(const Mat4<T>& m, Alpha alpha, const T& tol) {
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            if (tol < abs_value(T(m(i, j) + m(j, i))))
                throw ValidationError("two-form is not skew-symmetric", {i, j});
    return {m, alpha};
}

// The six index pairs in canonical order.
inline constexpr std::array<std::array<int, 2>, 6> kPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

template <class T>
TwoForm<T> raise(const TwoForm<T>& w) {
    TwoForm<T> out(w.alpha);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = metric_diag<T>(w.alpha, i) * metric_diag<T>(w.alpha, j) * w(i, j);
    return out;
}

template <class T>
T inner(const TwoForm<T>& w, const TwoForm<T>& p) {
    require_same_alpha(w.alpha, p.alpha);
    T acc(0);
    for (const auto& [i, j] : kPairs) acc += metric_diag<T>(w.alpha, i) * metric_diag<T>(w.alpha, j) * w(i, j) * p(i, j);
    return acc;
}

// Coefficient of e^0^e^1^e^2^e^3 in w ^ p.
template <class T>
T wedge(const TwoForm<T>& w, const TwoForm<T>& p) {
    require_same_alpha(w.alpha, p.alpha);
    return w(0, 1) * p(2, 3) - w(0, 2) * p(1, 3) + w(0, 3) * p(1, 2) + w(1, 2) * p(0, 3) - w(1, 3) * p(0, 2) +
           w(2, 3) * p(0, 1);
}

// (*w)_{bc} = 1/2 eta_{bcmn} w^{mn}, eta_{0123} = 1.
template <class T>
TwoForm<T> hodge_star(const TwoForm<T>& w) {
    const TwoForm<T> up = raise(w);
    TwoForm<T> out(w.alpha);
    for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
            if (b == c) continue;
            T acc(0);
            for (const auto& [m, n] : kPairs) {
                int s = levi_civita(b, c, m, n);
                if (s) acc += T(s) * up(m, n);
            }
            out(b, c) = acc;
        }
    return out;
}

template <class T>
TwoForm<T> sd_project(const TwoForm<T>& w) {
    return T(1) / T(2) * (w + hodge_star(w));
}

template <class T>
TwoForm<T> asd_project(const TwoForm<T>& w) {
    return T(1) / T(2) * (w - hodge_star(w));
}

// Eigenforms of * obtained by projecting e^0^e^k onto each eigenspace (scaled by 2).
template <class T>
std::array<TwoForm<T>, 3> sd_basis(Alpha alpha) {
    std::array<TwoForm<T>, 3> out;
    for (int k = 0; k < 3; ++k) out[k] = T(2) * sd_project(TwoForm<T>::unit(0, k + 1, alpha));
    return out;
}

template <class T>
std::array<TwoForm<T>, 3> asd_basis(Alpha alpha) {
    std::array<TwoForm<T>, 3> out;
    for (int k = 0; k < 3; ++k) out[k] = T(2) * asd_project(TwoForm<T>::unit(0, k + 1, alpha));
    return out;
}

// Self-dual basis followed by anti-self-dual basis.
template <class T>
std::array<TwoForm<T>, 6> split_basis(Alpha alpha) {
    auto p = sd_basis<T>(alpha);
    auto m = asd_basis<T>(alpha);
    return {p[0], p[1], p[2], m[0], m[1], m[2]};
}

template <class T>
struct SdParams {
    T x{0}, y{0}, z{0};
    friend bool operator==(const SdParams&, const SdParams&) = default;
};

// Coordinates of the self-dual part in sd_basis.
template <class T>
SdParams<T> sd_coords(const TwoForm<T>& w) {
    const T half = T(1) / T(2), al(w.alpha.value());
    return {half * (w(0, 1) - al * w(2, 3)), half * (w(0, 2) + al * w(1, 3)), half * (w(0, 3) + w(1, 2))};
}

// Coordinates of the anti-self-dual part in asd_basis.
template <class T>
SdParams<T> asd_coords(const TwoForm<T>& w) {
    const T half = T(1) / T(2), al(w.alpha.value());
    return {half * (w(0, 1) + al * w(2, 3)), half * (w(0, 2) - al * w(1, 3)), half * (w(0, 3) - w(1, 2))};
}

template <class T>
TwoForm<T> from_sd_coords(const SdParams<T>& p, Alpha alpha) {
    auto b = sd_basis<T>(alpha);
    return p.x * b[0] + p.y * b[1] + p.z * b[2];
}

template <class T>
TwoForm<T> from_asd_coords(const SdParams<T>& p, Alpha alpha) {
    auto b = asd_basis<T>(alpha);
    return p.x * b[0] + p.y * b[1] + p.z * b[2];
}

template <class T>
bool is_self_dual(const TwoForm<T>& w, const T& tol) {
    return !(tol < max_abs(hodge_star(w) - w));
}

template <class T>
bool is_anti_self_dual(const TwoForm<T>& w, const T& tol) {
    return !(tol < max_abs(hodge_star(w) + w));
}

// g * rep; skew exactly when the represented quaternion is pure.
template <class T>
Mat4<T> lower_index(const RepMatrix4<T>& rep, Alpha alpha) {
    Mat4<T> out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = metric_diag<T>(alpha, i) * rep.entries(i, j);
    return out;
}

namespace detail {
template <class T>
TwoForm<T> lower_pure(const RepMatrix4<T>& rep, const GenQuaternion<T>& q) {
    if (!q.is_pure()) throw InvalidInput("quaternion must be pure (zero real part)");
    return {lower_index(rep, q.alpha), q.alpha};
}
}  // namespace detail

template <class T>
TwoForm<T> fundamental_form(const GenQuaternion<T>& q) {
    return detail::lower_pure(rep_first(q), q);
}

template <class T>
TwoForm<T> pseudofundamental_form(const GenQuaternion<T>& q) {
    return detail::lower_pure(rep_second(q), q);
}

}  // namespace sdual
