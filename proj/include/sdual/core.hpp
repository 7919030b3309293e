#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace sdual {

// Input that violates a documented precondition or type invariant.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation undefined at this argument (e.g. isotropic direction).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Tensor data failing a symmetry check; carries the offending index tuple.
class ValidationError : public InvalidInput {
public:
    ValidationError(const std::string& what, std::vector<int> index)
        : InvalidInput(what + " at index " + format_index(index)), index_(std::move(index)) {}

    const std::vector<int>& index() const noexcept { return index_; }

private:
    static std::string format_index(const std::vector<int>& idx) {
        std::string s = "(";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(idx[i]);
        }
        return s + ")";
    }
    std::vector<int> index_;
};

// The signature parameter: -1 classical, +1 hyperbolic (split).
class Alpha {
public:
    constexpr Alpha() = default;
    constexpr explicit Alpha(int v) : v_(v) {
        if (v != -1 && v != 1) throw InvalidInput("alpha must be -1 or +1");
    }
    constexpr int value() const noexcept { return v_; }
    friend constexpr bool operator==(Alpha, Alpha) = default;

private:
    int v_ = -1;
};

inline constexpr Alpha kClassical{-1};
inline constexpr Alpha kHyperbolic{1};

inline void require_same_alpha(Alpha a, Alpha b) {
    if (!(a == b)) throw InvalidInput("alpha mismatch between operands");
}

template <class T>
T abs_value(const T& x) {
    return x < T(0) ? T(-x) : x;
}

template <class T>
void track_max(T& acc, const std::type_identity_t<T>& x) {
    T ax = abs_value(x);
    if (acc < ax) acc = ax;
}

// Dense fixed-size matrix; row-major.
template <class T, std::size_t R, std::size_t C>
struct Matrix {
    std::array<T, R * C> data{};

    T& operator()(std::size_t i, std::size_t j) { return data[i * C + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data[i * C + j]; }

    static Matrix zero() {
        Matrix m;
        m.data.fill(T(0));
        return m;
    }
    static Matrix identity() requires(R == C) {
        Matrix m = zero();
        for (std::size_t i = 0; i < R; ++i) m(i, i) = T(1);
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

template <class T, std::size_t R, std::size_t K, std::size_t C>
Matrix<T, R, C> operator*(const Matrix<T, R, K>& a, const Matrix<T, K, C>& b) {
    auto out = Matrix<T, R, C>::zero();
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t j = 0; j < C; ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
}

template <class T, std::size_t R, std::size_t C>
Matrix<T, R, C> operator-(const Matrix<T, R, C>& a, const Matrix<T, R, C>& b) {
    Matrix<T, R, C> out;
    for (std::size_t i = 0; i < R * C; ++i) out.data[i] = a.data[i] - b.data[i];
    return out;
}

template <class T, std::size_t R, std::size_t C>
Matrix<T, R, C> operator+(const Matrix<T, R, C>& a, const Matrix<T, R, C>& b) {
    Matrix<T, R, C> out;
    for (std::size_t i = 0; i < R * C; ++i) out.data[i] = a.data[i] + b.data[i];
    return out;
}

template <class T, std::size_t R, std::size_t C>
Matrix<T, R, C> operator*(const T& s, const Matrix<T, R, C>& m) {
    Matrix<T, R, C> out = m;
    for (auto& v : out.data) v = s * v;
    return out;
}

template <class T, std::size_t R, std::size_t C>
T max_abs(const Matrix<T, R, C>& m) {
    T acc(0);
    for (const auto& x : m.data) track_max(acc, x);
    return acc;
}

template <class T>
using Mat3 = Matrix<T, 3, 3>;
template <class T>
using Mat4 = Matrix<T, 4, 4>;
template <class T>
using Mat6 = Matrix<T, 6, 6>;

// Fibre metric diag(1, -alpha, -alpha, 1); it is its own inverse.
template <class T>
T metric_diag(Alpha alpha, int i) {
    return (i == 1 || i == 2) ? T(-alpha.value()) : T(1);
}

template <class T>
Mat4<T> fibre_metric(Alpha alpha) {
    auto g = Mat4<T>::zero();
    for (int i = 0; i < 4; ++i) g(i, i) = metric_diag<T>(alpha, i);
    return g;
}

// Sign of the permutation (i,j,k,l) of (0,1,2,3); 0 if any index repeats.
inline int levi_civita(int i, int j, int k, int l) {
    int p[4] = {i, j, k, l};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (p[a] == p[b]) return 0;
    int sign = 1;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (p[a] > p[b]) sign = -sign;
    return sign;
}

}  // namespace sdual
