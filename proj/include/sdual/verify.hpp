#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "genquat.hpp"
#include "kaehler.hpp"
#include "models.hpp"
#include "random.hpp"
#include "twistor.hpp"
#include "vertical_forms.hpp"

namespace sdual {

// Sign sigma in  r|_{Lambda+} = (sigma kappa / 6) id  for anti-self-dual r, read off the
// complex space form, whose W^- vanishes so it acts on the anti-self-dual forms by one scalar.
inline int calibration_sigma(Alpha alpha) {
    TwistorCurvature<double> r = real_twistor(complex_space_form(1.0, alpha));
    double kappa = ricci_t(r).kappa;
    TwoForm<double> w = asd_basis<double>(alpha)[0];
    double lambda = inner(act(r, w), w) / inner(w, w);
    double sigma = lambda * 6.0 / kappa;
    long rounded = std::lround(sigma);
    if (std::abs(sigma - double(rounded)) > 1e-12 || (rounded != 1 && rounded != -1))
        throw DomainError("calibration does not yield a unit sign");
    return static_cast<int>(rounded);
}

// The scalar-term sign e in the Bochner tensor is affine: B(e) = B0 + e B1. Solves B(e) = 0 on the
// space form family and requires a unique solution.
inline int reconcile_bochner_scalar_sign(Alpha alpha) {
    HoloCurvature<double> A = complex_space_form(1.0, alpha);
    BochnerTensor<double> bp = bochner(A, 1), bm = bochner(A, -1);
    bool have = false;
    double e = 0;
    for (std::size_t i = 0; i < bp.entries.size(); ++i) {
        for (int part = 0; part < 2; ++part) {
            double p = part ? bp.entries[i].im : bp.entries[i].re;
            double m = part ? bm.entries[i].im : bm.entries[i].re;
            double b0 = (p + m) / 2, b1 = (p - m) / 2;
            if (b1 == 0.0) {
                if (b0 != 0.0) throw DomainError("no scalar sign makes the space form Bochner-flat");
                continue;
            }
            double cand = -b0 / b1;
            if (have && cand != e) throw DomainError("scalar sign is not unique");
            have = true;
            e = cand;
        }
    }
    if (!have) throw DomainError("scalar sign is undetermined");
    if (e != 1.0 && e != -1.0) throw DomainError("scalar sign is not a unit");
    return static_cast<int>(e);
}

struct PropertyResult {
    std::string name;
    long count = 0;
    long failures = 0;
    double max_residual = 0;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    long count = 0;
    std::vector<PropertyResult> properties;

    bool passed() const {
        for (const auto& p : properties)
            if (p.failures) return false;
        return !properties.empty();
    }
    long failures() const {
        long f = 0;
        for (const auto& p : properties) f += p.failures;
        return f;
    }
    const PropertyResult* find(const std::string& name) const {
        for (const auto& p : properties)
            if (p.name == name) return &p;
        return nullptr;
    }
};

namespace detail {

class Tally {
public:
    Tally(SuiteResult& out, std::vector<Alpha> alphas) : out_(out), alphas_(std::move(alphas)) {}

    const std::vector<Alpha>& alphas() const { return alphas_; }

    // Records one case; residual is tracked even for passing cases.
    void add(const std::string& name, bool ok, double residual = 0) {
        PropertyResult& p = slot(name);
        ++p.count;
        if (!ok) ++p.failures;
        if (std::isnan(residual) || residual > p.max_residual) p.max_residual = residual;
    }
    // Residual-bounded case.
    void bound(const std::string& name, double residual, double tol) { add(name, !(residual > tol), residual); }

private:
    PropertyResult& slot(const std::string& name) {
        for (auto& p : out_.properties)
            if (p.name == name) return p;
        out_.properties.push_back({name, 0, 0, 0});
        return out_.properties.back();
    }
    SuiteResult& out_;
    std::vector<Alpha> alphas_;
};

inline std::string tag(const std::string& name, Alpha a) { return name + (a.value() < 0 ? "[alpha=-1]" : "[alpha=+1]"); }

inline void suite_algebra(Rng& rng, long count, double, Tally& t) {
    for (Alpha a : t.alphas())
        for (long k = 0; k < count; ++k) {
            auto p = random_quaternion<double>(rng, a);
            auto q = random_quaternion<double>(rng, a);
            auto r = random_quaternion<double>(rng, a);
            t.bound(tag("first_kind_homomorphism", a), max_abs(rep_first(p * q).entries - rep_first(p).entries * rep_first(q).entries), 1e-12);
            t.bound(tag("second_kind_reverses_products", a), max_abs(rep_second(p * q).entries - rep_second(q).entries * rep_second(p).entries), 1e-12);
            double scale = std::max(1.0, std::abs(norm_form(p) * norm_form(q)));
            t.bound(tag("norm_multiplicative", a), std::abs(norm_form(p * q) - norm_form(p) * norm_form(q)) / scale, 1e-12);
            GenQuaternion<double> lhs = (p * q) * r, rhs = p * (q * r);
            double d = 0;
            for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(lhs[i] - rhs[i]));
            t.bound(tag("associative", a), d, 1e-12);
        }
}

inline void suite_hodge(Rng& rng, long count, double tol, Tally& t) {
    for (Alpha a : t.alphas()) {
        for (const auto& [i, j] : kPairs) {
            TwoForm<double> e = TwoForm<double>::unit(i, j, a);
            t.bound(tag("star_involution_on_basis", a), max_abs(hodge_star(hodge_star(e)) - e), 0.0);
        }
        // coordinates of the split basis must be the identity: both eigenspaces are 3-dimensional
        auto basis = split_basis<double>(a);
        double dim_defect = 0;
        for (int j = 0; j < 6; ++j) {
            auto p = sd_coords(basis[j]);
            auto m = asd_coords(basis[j]);
            double got[6] = {p.x, p.y, p.z, m.x, m.y, m.z};
            for (int i = 0; i < 6; ++i) dim_defect = std::max(dim_defect, std::abs(got[i] - (i == j ? 1.0 : 0.0)));
        }
        t.bound(tag("eigenspaces_have_dimension_three", a), dim_defect, 0.0);
        Mat3<double> fm = Mat3<double>::zero(), pm = Mat3<double>::zero();
        for (int k = 1; k < 4; ++k) {
            auto q = GenQuaternion<double>::basis(k, a);
            t.add(tag("fundamental_forms_self_dual", a), is_self_dual(fundamental_form(q), 0.0));
            t.add(tag("pseudofundamental_forms_anti_self_dual", a), is_anti_self_dual(pseudofundamental_form(q), 0.0));
            auto f = sd_coords(fundamental_form(q));
            auto p = asd_coords(pseudofundamental_form(q));
            fm(0, k - 1) = f.x, fm(1, k - 1) = f.y, fm(2, k - 1) = f.z;
            pm(0, k - 1) = p.x, pm(1, k - 1) = p.y, pm(2, k - 1) = p.z;
        }
        // linear maps from pure quaternions onto the eigenspaces: invertible coordinate matrices
        auto det3 = [](const Mat3<double>& m) {
            return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        };
        t.add(tag("fundamental_map_bijective", a), det3(fm) != 0.0);
        t.add(tag("pseudofundamental_map_bijective", a), det3(pm) != 0.0);
        for (long k = 0; k < count; ++k) {
            TwoForm<double> w = random_two_form<double>(rng, a);
            TwoForm<double> v = random_two_form<double>(rng, a);
            t.bound(tag("star_involution", a), max_abs(hodge_star(hodge_star(w)) - w), 1e-12);
            TwoForm<double> p = sd_project(w), m = asd_project(w);
            double proj = std::max({max_abs(p + m - w), max_abs(sd_project(p) - p), max_abs(asd_project(m) - m), max_abs(sd_project(m))});
            t.bound(tag("projectors_idempotent_complementary", a), proj, 1e-12);
            t.bound(tag("eigenspaces_orthogonal", a), std::abs(inner(p, asd_project(v))), 1e-12);
            auto q = random_pure_quaternion<double>(rng, a);
            t.add(tag("fundamental_forms_self_dual", a), is_self_dual(fundamental_form(q), tol));
            t.add(tag("pseudofundamental_forms_anti_self_dual", a), is_anti_self_dual(pseudofundamental_form(q), tol));
        }
    }
}

inline void suite_einstein(Rng& rng, long count, double tol, Tally& t) {
    for (Alpha a : t.alphas())
        for (long k = 0; k < count; ++k) {
            TwistorCurvature<double> r = random_twistor<double>(rng, a);
            // alternate generic, constructed Einstein, and constructed non-Einstein cases
            switch (k % 3) {
                case 1: r = einstein_projection(r); break;
                case 2: {
                    auto z = Mat4<double>::zero();
                    z(0, 0) = 1.0 + std::abs(rng.uniform());
                    z(3, 3) = -z(0, 0);
                    r = einstein_projection(r) + kulkarni_with_metric(z, a);
                    break;
                }
                default: break;
            }
            Verdict<double> e = is_einstein_bundle(r, tol), m = preserves_sd_module(r, tol);
            t.add(tag("einstein_iff_preserves_sd_forms", a), e.holds == m.holds);
            if (k % 3 == 1) t.bound(tag("constructed_einstein_detected", a), e.residual, tol);
            if (k % 3 == 2) t.add(tag("constructed_non_einstein_detected", a), !e.holds);
        }
}

inline void suite_bianchi(Rng& rng, long count, double tol, Tally& t) {
    for (Alpha a : t.alphas())
        for (int xi : {1, -1})
            for (long k = 0; k < count; ++k) {
                TwistorCurvature<double> s = semiflat_projection(random_twistor<double>(rng, a), xi);
                WeylBlocks<double> wb = weyl_split_unchecked<double>(weyl_t(s));
                std::string side = xi > 0 ? "self_dual" : "anti_self_dual";
                t.bound(tag(side + "_construction_vanishing_block", a), max_abs(xi > 0 ? wb.minus : wb.plus), tol);
                t.bound(tag(side + "_satisfies_bianchi", a), bianchi_residual(s), tol);
            }
}

inline void suite_semiflat(Rng& rng, long count, double tol, Tally& t) {
    const int sigma = calibration_sigma(kClassical);
    t.add("calibration_sign_consistent", calibration_sigma(kHyperbolic) == sigma);
    for (Alpha a : t.alphas())
        for (long k = 0; k < count; ++k) {
            TwistorCurvature<double> r = semiflat_projection(random_twistor<double>(rng, a), -1);
            double kappa = ricci_t(r).kappa;
            Verdict<double> c = constant_twistor_curvature(r, tol);
            t.bound(tag("anti_self_dual_acts_as_scalar", a), c.residual, tol);
            t.bound(tag("anti_self_dual_scalar_is_sigma_kappa_over_6", a), std::abs(c.value - sigma * kappa / 6), tol);

            for (int xi : {1, -1}) {
                TwistorCurvature<double> s = semiflat_projection(random_twistor<double>(rng, a), xi);
                TwistorCurvature<double> scalar_free = remove_scalar(s);
                TwistorCurvature<double> ricci_free = remove_scalar(einstein_projection(s));
                for (const auto* x : {&s, &scalar_free, &ricci_free}) {
                    SemiflatReport<double> rep = semiflat_mapping_checks(*x, xi, tol);
                    t.add(tag("scalar_free_iff_opposite_forms_map_in", a), rep.first_equivalence());
                    t.add(tag("ricci_free_iff_all_forms_map_in", a), rep.second_equivalence());
                }
            }
        }
}

inline void suite_self_dual_kaehler(Rng& rng, long count, double tol, Tally& t) {
    for (Alpha a : t.alphas())
        for (long k = 0; k < count; ++k) {
            HoloCurvature<double> A = k % 2 ? random_self_dual_holo<double>(rng, a) : random_holo<double>(rng, a);
            bool sd = is_self_dual_kaehler(A, tol).holds;
            bool bf = is_bochner_flat(A, tol).holds;
            bool wm = !(max_abs(weyl_split_unchecked<double>(weyl_t(real_twistor(A))).minus) > tol);
            t.add(tag("criterion_bochner_real_weyl_agree", a), sd == bf && bf == wm);
            if (k % 2) t.add(tag("constructed_self_dual_detected", a), sd && bf && wm);
        }
}

inline void suite_anti_self_dual_kaehler(Rng& rng, long count, double tol, Tally& t) {
    for (Alpha a : t.alphas())
        for (long k = 0; k < count; ++k) {
            HoloCurvature<double> A = k % 2 ? random_anti_self_dual_holo<double>(rng, a) : random_holo<double>(rng, a);
            AntiSelfDualKaehlerVerdict<double> v = is_anti_self_dual_kaehler(A, tol);
            bool wp = !(max_abs(weyl_split_unchecked<double>(weyl_t(real_twistor(A))).plus) > tol);
            t.add(tag("zero_scalar_iff_real_weyl_plus_vanishes", a), v.holds == wp);
            t.add(tag("component_route_agrees", a), v.routes_agree);
            if (k % 2) t.add(tag("constructed_anti_self_dual_detected", a), v.holds);
        }
}

inline void suite_models(Rng& rng, long, double tol, Tally& t) {
    for (Alpha a : t.alphas()) {
        for (double c : {-1.0, 0.5, 1.0}) {
            HoloCurvature<double> A = complex_space_form(c, a);
            t.add(tag("space_form_scalar_exact", a), holo_ricci(A).s == -12 * c);
            WeylComponents<double> w = weyl_components(A);
            double d = 0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int p = 0; p < 2; ++p)
                        for (int q = 0; q < 2; ++q) {
                            double want = -c * (detail::kd(p, i) * detail::kd(q, j) - detail::kd(p, j) * detail::kd(q, i));
                            auto got = w.holo[WeylComponents<double>::index(i, j, p, q)];
                            d = std::max({d, std::abs(got.re - want), std::abs(got.im)});
                        }
            t.bound(tag("space_form_weyl_exact", a), d, 0.0);
            t.add(tag("space_form_self_dual", a), is_self_dual_kaehler(A, tol).holds);
            t.bound(tag("space_form_bochner_zero", a), max_abs(bochner(A)), 0.0);

            HoloCurvature<double> P = product_surfaces(c, a);
            t.add(tag("product_conformally_flat", a), is_self_dual_kaehler(P, tol).holds && is_anti_self_dual_kaehler(P, tol).holds);
        }
        for (int n : {1, 2})
            for (double c : {-1.0, 0.5, 1.0}) {
                TwistorCurvature<double> r = twistor_from_riemann(constant_curvature_q(c, n, a));
                for (int k = 0; k < 5; ++k) {
                    TwoForm<double> w = sd_project(random_two_form<double>(rng, a));
                    if (std::abs(inner(w, w)) < 1e-3) continue;
                    t.bound(tag("constant_curvature_twistor_value_2c", a), std::abs(twistor_curvature_value(r, w) - 2 * c), 1e-9);
                }
                t.add(tag("constant_curvature_einstein", a), is_einstein_bundle(r, tol).holds);
            }
        for (int n : {1, 2, 3})
            for (double s : {-8.0, 0.0, 16.0}) {
                auto chk = check_quaternionic_kaehler(quaternionic_kaehler_pattern(s, n, a), s, n, tol);
                t.bound(tag("quaternionic_kaehler_pattern_matches_formula", a), std::abs(chk.measured - chk.expected), 1e-9);
            }
        HoloCurvature<double> F = flat_holo<double>(a);
        TwistorCurvature<double> rf = real_twistor(F);
        bool flat_ok = holo_ricci(F).s == 0.0 && max_abs(rf) == 0.0 && is_self_dual_kaehler(F, 0.0).holds &&
                       is_anti_self_dual_kaehler(F, 0.0).holds && constant_twistor_curvature(rf, 0.0).value == 0.0;
        t.add(tag("flat_all_zero", a), flat_ok);
    }
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"algebra", "hodge", "einstein", "bianchi", "semiflat",
                                                   "self_dual_kaehler", "anti_self_dual_kaehler", "models"};
    return names;
}

// Runs a named suite; `count` is the number of random cases per alpha (and per sign where applicable).
inline SuiteResult run_suite(const std::string& name, std::uint64_t seed, long count, double tol,
                             std::vector<Alpha> alphas = {kClassical, kHyperbolic}) {
    using Fn = void (*)(Rng&, long, double, detail::Tally&);
    static const std::vector<std::pair<std::string, Fn>> table = {
        {"algebra", detail::suite_algebra},
        {"hodge", detail::suite_hodge},
        {"einstein", detail::suite_einstein},
        {"bianchi", detail::suite_bianchi},
        {"semiflat", detail::suite_semiflat},
        {"self_dual_kaehler", detail::suite_self_dual_kaehler},
        {"anti_self_dual_kaehler", detail::suite_anti_self_dual_kaehler},
        {"models", detail::suite_models},
    };
    if (count < 0) throw InvalidInput("count must be non-negative");
    for (const auto& [n, fn] : table)
        if (n == name) {
            SuiteResult out;
            out.suite = name;
            out.seed = seed;
            out.count = count;
            Rng rng(seed);
            detail::Tally t(out, std::move(alphas));
            fn(rng, count, tol, t);
            return out;
        }
    throw InvalidInput("unknown suite: " + name);
}

}  // namespace sdual
