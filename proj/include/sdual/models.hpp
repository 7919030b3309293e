#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "genquat.hpp"
#include "kaehler.hpp"
#include "twistor.hpp"

namespace sdual {

// c (d^a_b d^d_c + d^a_c d^d_b).
template <class T>
HoloCurvature<T> complex_space_form(const T& c, Alpha alpha) {
    HoloCurvature<T> A(alpha);
    for (int a = 0; a < 2; ++a)
        for (int d = 0; d < 2; ++d)
            for (int b = 0; b < 2; ++b)
                for (int cc = 0; cc < 2; ++cc) {
                    int k = (a == b && d == cc ? 1 : 0) + (a == cc && d == b ? 1 : 0);
                    A(a, d, b, cc) = GenComplex<T>(T(k) * c, T(0), alpha);
                }
    return A;
}

// Product of surfaces with curvatures lambda and -lambda.
template <class T>
HoloCurvature<T> product_surfaces(const T& lambda, Alpha alpha) {
    HoloCurvature<T> A(alpha);
    A(0, 0, 0, 0) = GenComplex<T>(lambda, T(0), alpha);
    A(1, 1, 1, 1) = GenComplex<T>(T(-lambda), T(0), alpha);
    return A;
}

// R = c (G_{IL} G_{JK} - G_{IK} G_{JL}), G_{bc} = delta_{bc}.
template <class T>
HermitianBlockRiemann<T> constant_curvature_q(const T& c, int n, Alpha alpha) {
    HermitianBlockRiemann<T> R(n, alpha);
    const int D = R.dim();
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            if (i == j) continue;
            T v = c * R.metric(i, i) * R.metric(j, j);
            if (v == T(0)) continue;
            R(i, j, j, i) = v;
            R(i, j, i, j) = -v;
        }
    return R;
}

// Quaternionic space form: c [R0 + sum_k N_k (O_IL O_JK - O_IK O_JL - 2 O_IJ O_KL)],
// R0 the constant-curvature part, O_k the Kaehler forms of j1, j2, j3 and N_k = |j_k|^2.
template <class T>
HermitianBlockRiemann<T> quaternionic_space_form(const T& c, int n, Alpha alpha) {
    HermitianBlockRiemann<T> R = constant_curvature_q(c, n, alpha);
    const int D = R.dim();
    for (int k = 1; k <= 3; ++k) {
        GenQuaternion<T> q = GenQuaternion<T>::basis(k, alpha);
        const T w = c * norm_form(q);
        std::vector<T> om = block_kaehler_form(R, q);
        auto O = [&](int i, int j) -> const T& { return om[static_cast<std::size_t>(i) * D + j]; };
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j)
                for (int kk = 0; kk < D; ++kk)
                    for (int l = 0; l < D; ++l) {
                        T v = O(i, l) * O(j, kk) - O(i, kk) * O(j, l) - T(2) * O(i, j) * O(kk, l);
                        if (v != T(0)) R(i, j, kk, l) += w * v;
                    }
    }
    return R;
}

// Twistor curvature expected on a quaternionic-Kaehler manifold with scalar curvature s.
template <class T>
T quaternionic_kaehler_constant(const T& s, int n, Alpha alpha) {
    if (n < 1) throw InvalidInput("n must be positive");
    return T(-alpha.value()) * s / (T(4) * T(n + 2));
}

template <class T>
struct QuaternionicKaehlerCheck {
    T expected{0};      // formula value
    T measured{0};      // constant twistor curvature of r
    T residual{0};      // defect of r from acting as a scalar on self-dual forms
    bool agrees = false;
};

// Checks that r preserves the self-dual forms and acts there as a scalar, then compares it with the formula.
template <class T>
QuaternionicKaehlerCheck<T> check_quaternionic_kaehler(const TwistorCurvature<T>& r, const T& s, int n, const T& tol) {
    QuaternionicKaehlerCheck<T> out;
    out.expected = quaternionic_kaehler_constant(s, n, r.alpha);
    Verdict<T> pres = preserves_sd_module(r, tol);
    Verdict<T> ctc = constant_twistor_curvature(r, tol);
    out.residual = pres.residual;
    track_max(out.residual, ctc.residual);
    if (tol < out.residual) throw InvalidInput("tensor does not act as a scalar on self-dual forms");
    out.measured = ctc.value;
    out.agrees = !(tol < abs_value(T(out.measured - out.expected)));
    return out;
}

// Fibre tensor acting on self-dual forms by the quaternionic-Kaehler constant for (s, n).
template <class T>
TwistorCurvature<T> quaternionic_kaehler_pattern(const T& s, int n, Alpha alpha) {
    T mu = quaternionic_kaehler_constant(s, n, alpha);
    return T(-mu / T(2)) * metric_product<T>(alpha);
}

template <class T>
HoloCurvature<T> flat_holo(Alpha alpha) {
    return HoloCurvature<T>(alpha);
}

enum class ModelKind { complex_space_form, product_surfaces, constant_curvature_q, flat };

struct ModelDescriptor {
    ModelKind kind = ModelKind::flat;
    std::vector<double> parameters;  // c or lambda; empty for flat
    Alpha alpha{};
    int n = 1;

    std::string name() const {
        switch (kind) {
            case ModelKind::complex_space_form: return "complex_space_form";
            case ModelKind::product_surfaces: return "product_surfaces";
            case ModelKind::constant_curvature_q: return "constant_curvature_q";
            case ModelKind::flat: return "flat";
        }
        return "flat";
    }

    void validate() const {
        std::size_t want = kind == ModelKind::flat ? 0 : 1;
        if (parameters.size() != want) throw InvalidInput("model " + name() + " expects " + std::to_string(want) + " parameter(s)");
        if (n < 1) throw InvalidInput("model dimension n must be positive");
    }
};

inline std::optional<ModelKind> model_kind_from_name(const std::string& s) {
    if (s == "complex_space_form") return ModelKind::complex_space_form;
    if (s == "product_surfaces" || s == "product") return ModelKind::product_surfaces;
    if (s == "constant_curvature_q") return ModelKind::constant_curvature_q;
    if (s == "flat") return ModelKind::flat;
    return std::nullopt;
}

// Named pointwise fixtures for the model list; positive scalar curvature corresponds to c < 0.
inline const std::map<std::string, ModelDescriptor>& model_aliases() {
    static const std::map<std::string, ModelDescriptor> m = {
        {"CP2", {ModelKind::complex_space_form, {-1.0}, kClassical, 1}},
        {"CH2", {ModelKind::complex_space_form, {1.0}, kClassical, 1}},
        {"C2", {ModelKind::complex_space_form, {0.0}, kClassical, 1}},
        {"S2xH2", {ModelKind::product_surfaces, {1.0}, kClassical, 1}},
        {"double_plane", {ModelKind::complex_space_form, {0.0}, kHyperbolic, 1}},
        {"null_pairs", {ModelKind::complex_space_form, {-1.0}, kHyperbolic, 1}},
        {"null_pairs_dual", {ModelKind::complex_space_form, {1.0}, kHyperbolic, 1}},
        {"product_split", {ModelKind::product_surfaces, {1.0}, kHyperbolic, 1}},
    };
    return m;
}

// Parses "name[:key=value]*", e.g. "complex_space_form:c=1:alpha=-1", or an alias.
inline ModelDescriptor parse_model(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.empty()) throw InvalidInput("empty model name");

    ModelDescriptor d;
    if (auto it = model_aliases().find(parts[0]); it != model_aliases().end()) {
        d = it->second;
    } else if (auto k = model_kind_from_name(parts[0])) {
        d.kind = *k;
        if (d.kind != ModelKind::flat) d.parameters = {0.0};
    } else {
        throw InvalidInput("unknown model: " + parts[0]);
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        auto eq = parts[i].find('=');
        if (eq == std::string::npos) throw InvalidInput("malformed model parameter: " + parts[i]);
        std::string key = parts[i].substr(0, eq), val = parts[i].substr(eq + 1);
        double num = 0;
        try {
            std::size_t used = 0;
            num = std::stod(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw InvalidInput("malformed number in model parameter: " + parts[i]);
        }
        if (key == "alpha") {
            if (num != -1.0 && num != 1.0) throw InvalidInput("alpha must be -1 or +1");
            d.alpha = Alpha(static_cast<int>(num));
        } else if (key == "n") {
            if (num < 1 || num != static_cast<int>(num)) throw InvalidInput("n must be a positive integer");
            d.n = static_cast<int>(num);
        } else if ((key == "c" && (d.kind == ModelKind::complex_space_form || d.kind == ModelKind::constant_curvature_q)) ||
                   (key == "lambda" && d.kind == ModelKind::product_surfaces)) {
            d.parameters = {num};
        } else {
            throw InvalidInput("parameter '" + key + "' does not apply to model " + d.name());
        }
    }
    d.validate();
    return d;
}

}  // namespace sdual
