#pragma once

#include <array>

#include "core.hpp"

namespace sdual {

// Element re + im*i of K_alpha, where i*i = alpha.
template <class T>
struct GenComplex {
    T re{0};
    T im{0};
    Alpha alpha{};

    GenComplex() = default;
    GenComplex(T r, T i, Alpha a) : re(std::move(r)), im(std::move(i)), alpha(a) {}

    GenComplex conj() const { return {re, T(-im), alpha}; }

    friend GenComplex operator+(const GenComplex& x, const GenComplex& y) {
        require_same_alpha(x.alpha, y.alpha);
        return {x.re + y.re, x.im + y.im, x.alpha};
    }
    friend GenComplex operator-(const GenComplex& x, const GenComplex& y) {
        require_same_alpha(x.alpha, y.alpha);
        return {x.re - y.re, x.im - y.im, x.alpha};
    }
    friend GenComplex operator-(const GenComplex& x) { return {T(-x.re), T(-x.im), x.alpha}; }
    friend GenComplex operator*(const GenComplex& x, const GenComplex& y) {
        require_same_alpha(x.alpha, y.alpha);
        return {x.re * y.re + T(x.alpha.value()) * x.im * y.im, x.re * y.im + x.im * y.re, x.alpha};
    }
    friend GenComplex operator*(const T& s, const GenComplex& x) { return {s * x.re, s * x.im, x.alpha}; }
    GenComplex& operator+=(const GenComplex& y) { return *this = *this + y; }
    GenComplex& operator-=(const GenComplex& y) { return *this = *this - y; }

    friend bool operator==(const GenComplex& x, const GenComplex& y) {
        return x.alpha == y.alpha && x.re == y.re && x.im == y.im;
    }
};

template <class T>
T max_abs(const GenComplex<T>& z) {
    T acc(0);
    track_max(acc, z.re);
    track_max(acc, z.im);
    return acc;
}

// a + b j1 + c j2 + d j3 in H_alpha.
template <class T>
struct GenQuaternion {
    std::array<T, 4> coeff{T(0), T(0), T(0), T(0)};
    Alpha alpha{};

    GenQuaternion() = default;
    GenQuaternion(T a, T b, T c, T d, Alpha al) : coeff{std::move(a), std::move(b), std::move(c), std::move(d)}, alpha(al) {}

    static GenQuaternion basis(int k, Alpha al) {
        GenQuaternion q;
        q.alpha = al;
        q.coeff[k] = T(1);
        return q;
    }

    const T& operator[](int k) const { return coeff[k]; }
    T& operator[](int k) { return coeff[k]; }

    bool is_pure() const { return coeff[0] == T(0); }

    friend bool operator==(const GenQuaternion& p, const GenQuaternion& q) {
        return p.alpha == q.alpha && p.coeff == q.coeff;
    }
};

namespace detail {

struct Product {
    int sign_const;  // constant factor
    int sign_alpha;  // exponent of alpha (0 or 1)
    int index;
};

// e_i * e_j = (sign_const * alpha^sign_alpha) e_index, basis {1, j1, j2, j3}.
inline constexpr Product kTable[4][4] = {
    {{1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {1, 0, 3}},
    {{1, 0, 1}, {1, 1, 0}, {1, 0, 3}, {1, 1, 2}},
    {{1, 0, 2}, {-1, 0, 3}, {1, 1, 0}, {-1, 1, 1}},
    {{1, 0, 3}, {-1, 1, 2}, {1, 1, 1}, {-1, 0, 0}},
};

inline int structure_constant(Alpha alpha, int i, int j) {
    const Product& p = kTable[i][j];
    return p.sign_const * (p.sign_alpha ? alpha.value() : 1);
}

inline int structure_index(int i, int j) { return kTable[i][j].index; }

}  // namespace detail

template <class T>
GenQuaternion<T> multiply(const GenQuaternion<T>& p, const GenQuaternion<T>& q) {
    require_same_alpha(p.alpha, q.alpha);
    GenQuaternion<T> out;
    out.alpha = p.alpha;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out.coeff[detail::structure_index(i, j)] +=
                T(detail::structure_constant(p.alpha, i, j)) * p.coeff[i] * q.coeff[j];
    return out;
}

template <class T>
GenQuaternion<T> operator*(const GenQuaternion<T>& p, const GenQuaternion<T>& q) {
    return multiply(p, q);
}

template <class T>
GenQuaternion<T> operator+(const GenQuaternion<T>& p, const GenQuaternion<T>& q) {
    require_same_alpha(p.alpha, q.alpha);
    GenQuaternion<T> out = p;
    for (int k = 0; k < 4; ++k) out.coeff[k] += q.coeff[k];
    return out;
}

template <class T>
GenQuaternion<T> operator*(const T& s, const GenQuaternion<T>& q) {
    GenQuaternion<T> out = q;
    for (auto& x : out.coeff) x = s * x;
    return out;
}

template <class T>
GenQuaternion<T> conjugate(const GenQuaternion<T>& q) {
    return {q[0], T(-q[1]), T(-q[2]), T(-q[3]), q.alpha};
}

template <class T>
T norm_form(const GenQuaternion<T>& q) {
    T al(q.alpha.value());
    return q[0] * q[0] - al * q[1] * q[1] - al * q[2] * q[2] + q[3] * q[3];
}

enum class RepKind { first, second };

template <class T>
struct RepMatrix4 {
    Mat4<T> entries;
    RepKind kind;
};

// Left multiplication X -> qX.
template <class T>
RepMatrix4<T> rep_first(const GenQuaternion<T>& q) {
    const T al(q.alpha.value());
    const T &a = q[0], &b = q[1], &c = q[2], &d = q[3];
    RepMatrix4<T> m{Mat4<T>::zero(), RepKind::first};
    auto& e = m.entries;
    e(0, 0) = a;      e(0, 1) = al * b;   e(0, 2) = al * c;   e(0, 3) = -d;
    e(1, 0) = b;      e(1, 1) = a;        e(1, 2) = al * d;   e(1, 3) = -al * c;
    e(2, 0) = c;      e(2, 1) = -al * d;  e(2, 2) = a;        e(2, 3) = al * b;
    e(3, 0) = d;      e(3, 1) = -c;       e(3, 2) = b;        e(3, 3) = a;
    return m;
}

// Right multiplication X -> Xq.
template <class T>
RepMatrix4<T> rep_second(const GenQuaternion<T>& q) {
    const T al(q.alpha.value());
    const T &a = q[0], &b = q[1], &c = q[2], &d = q[3];
    RepMatrix4<T> m{Mat4<T>::zero(), RepKind::second};
    auto& e = m.entries;
    e(0, 0) = a;      e(0, 1) = al * b;   e(0, 2) = al * c;   e(0, 3) = -d;
    e(1, 0) = b;      e(1, 1) = a;        e(1, 2) = -al * d;  e(1, 3) = al * c;
    e(2, 0) = c;      e(2, 1) = al * d;   e(2, 2) = a;        e(2, 3) = -al * b;
    e(3, 0) = d;      e(3, 1) = c;        e(3, 2) = -b;       e(3, 3) = a;
    return m;
}

}  // namespace sdual
