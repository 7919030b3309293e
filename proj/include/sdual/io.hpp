#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>
#include "kaehler.hpp"
#include "models.hpp"
#include "twistor.hpp"
#include "verify.hpp"
#include "vertical_forms.hpp"

namespace sdual {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "sdual-lab/1";
inline constexpr const char* kReportVersion = "sdual-lab-report/1";

struct Document {
    using Payload = std::variant<TwistorCurvature<double>, HoloCurvature<double>, ModelDescriptor, TwoForm<double>>;

    Alpha alpha{};
    Payload payload{TwistorCurvature<double>(Alpha{})};

    std::string kind() const {
        static const char* names[] = {"twistor_tensor", "holo_tensor", "model", "two_form"};
        return names[payload.index()];
    }
};

namespace detail {

inline double number_at(const Json& j, const std::string& where) {
    if (!j.is_number()) throw InvalidInput("expected a number at " + where);
    return j.get<double>();
}

inline const Json& array_of(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n) throw InvalidInput("expected an array of length " + std::to_string(n) + " at " + where);
    return j;
}

inline void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
    if (!j.is_object()) throw InvalidInput("expected an object at " + where);
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* key : keys) known = known || k == key;
        if (!known) throw InvalidInput("unknown field '" + k + "' at " + where);
    }
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "' at " + where);
    return *it;
}

inline std::string at_path(std::initializer_list<int> idx) {
    std::string s;
    for (int i : idx) s += "[" + std::to_string(i) + "]";
    return s;
}

inline Json twistor_json(const TwistorCurvature<double>& r) {
    Json out = Json::array();
    for (int b = 0; b < 4; ++b) {
        Json jb = Json::array();
        for (int c = 0; c < 4; ++c) {
            Json jc = Json::array();
            for (int d = 0; d < 4; ++d) {
                Json jd = Json::array();
                for (int e = 0; e < 4; ++e) jd.push_back(r(b, c, d, e));
                jc.push_back(std::move(jd));
            }
            jb.push_back(std::move(jc));
        }
        out.push_back(std::move(jb));
    }
    return out;
}

inline Json matrix_json(const Mat4<double>& m) {
    Json out = Json::array();
    for (int i = 0; i < 4; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 4; ++j) row.push_back(m(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

inline Mat4<double> parse_matrix(const Json& j, const std::string& where) {
    Mat4<double> m = Mat4<double>::zero();
    array_of(j, 4, where);
    for (int i = 0; i < 4; ++i) {
        array_of(j[i], 4, where + at_path({i}));
        for (int k = 0; k < 4; ++k) m(i, k) = number_at(j[i][k], where + at_path({i, k}));
    }
    return m;
}

inline TwistorCurvature<double> parse_twistor(const Json& j, Alpha alpha) {
    TwistorCurvature<double> r(alpha);
    const std::string w = "payload.twistor_tensor";
    array_of(j, 4, w);
    for (int b = 0; b < 4; ++b) {
        array_of(j[b], 4, w + at_path({b}));
        for (int c = 0; c < 4; ++c) {
            array_of(j[b][c], 4, w + at_path({b, c}));
            for (int d = 0; d < 4; ++d) {
                array_of(j[b][c][d], 4, w + at_path({b, c, d}));
                for (int e = 0; e < 4; ++e) r(b, c, d, e) = number_at(j[b][c][d][e], w + at_path({b, c, d, e}));
            }
        }
    }
    return r;
}

inline Json holo_json(const HoloCurvature<double>& A) {
    Json out = Json::array();
    for (int a = 0; a < 2; ++a)
        for (int d = 0; d < 2; ++d)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) {
                    const auto& z = A(a, d, b, c);
                    out.push_back(Json{{"index", {a, d, b, c}}, {"re", z.re}, {"im", z.im}});
                }
    return out;
}

// Entries not listed are zero; each index may appear once.
inline HoloCurvature<double> parse_holo(const Json& j, Alpha alpha) {
    HoloCurvature<double> A(alpha);
    if (!j.is_array()) throw InvalidInput("expected an array at payload.holo_tensor");
    bool seen[16] = {};
    for (std::size_t n = 0; n < j.size(); ++n) {
        const std::string w = "payload.holo_tensor[" + std::to_string(n) + "]";
        only_keys(j[n], {"index", "re", "im"}, w);
        const Json& idx = array_of(field(j[n], "index", w), 4, w + ".index");
        int v[4];
        for (int k = 0; k < 4; ++k) {
            if (!idx[k].is_number_integer() || idx[k].get<int>() < 0 || idx[k].get<int>() > 1)
                throw InvalidInput("index entries must be 0 or 1 at " + w);
            v[k] = idx[k].get<int>();
        }
        auto flat = HoloCurvature<double>::index(v[0], v[1], v[2], v[3]);
        if (seen[flat]) throw InvalidInput("duplicate index at " + w);
        seen[flat] = true;
        A(v[0], v[1], v[2], v[3]) = {number_at(field(j[n], "re", w), w + ".re"), number_at(field(j[n], "im", w), w + ".im"), alpha};
    }
    return A;
}

inline Json model_json(const ModelDescriptor& d) {
    return Json{{"name", d.name()}, {"parameters", d.parameters}, {"n", d.n}};
}

inline ModelDescriptor parse_model_payload(const Json& j, Alpha alpha) {
    const std::string w = "payload.model";
    only_keys(j, {"name", "parameters", "n"}, w);
    const Json& name = field(j, "name", w);
    if (!name.is_string()) throw InvalidInput("model name must be a string");
    auto kind = model_kind_from_name(name.get<std::string>());
    if (!kind) throw InvalidInput("unknown model: " + name.get<std::string>());
    ModelDescriptor d;
    d.kind = *kind;
    d.alpha = alpha;
    if (auto it = j.find("parameters"); it != j.end()) {
        if (!it->is_array()) throw InvalidInput("model parameters must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) d.parameters.push_back(number_at((*it)[i], w + ".parameters"));
    }
    if (auto it = j.find("n"); it != j.end()) {
        if (!it->is_number_integer()) throw InvalidInput("model n must be an integer");
        d.n = it->get<int>();
    }
    d.validate();
    return d;
}

}  // namespace detail

// Parses and validates a document; pair symmetries are checked against `tol`.
inline Document parse_document(const Json& j, double tol) {
    detail::only_keys(j, {"schema_version", "alpha", "payload"}, "document");
    const Json& ver = detail::field(j, "schema_version", "document");
    if (!ver.is_string() || ver.get<std::string>() != kSchemaVersion)
        throw InvalidInput(std::string("schema_version must be \"") + kSchemaVersion + "\"");
    const Json& al = detail::field(j, "alpha", "document");
    if (!al.is_number_integer()) throw InvalidInput("alpha must be the integer -1 or 1");
    Document doc;
    doc.alpha = Alpha(al.get<int>());
    const Json& p = detail::field(j, "payload", "document");
    if (!p.is_object() || p.size() != 1) throw InvalidInput("payload must hold exactly one of twistor_tensor, holo_tensor, model, two_form");
    const auto& [key, val] = *p.items().begin();
    if (key == "twistor_tensor") {
        TwistorCurvature<double> r = detail::parse_twistor(val, doc.alpha);
        validate_pair_symmetries(r, tol);
        doc.payload = r;
    } else if (key == "holo_tensor") {
        HoloCurvature<double> A = detail::parse_holo(val, doc.alpha);
        validate_holo(A, tol);
        doc.payload = A;
    } else if (key == "model") {
        doc.payload = detail::parse_model_payload(val, doc.alpha);
    } else if (key == "two_form") {
        doc.payload = checked_two_form(detail::parse_matrix(val, "payload.two_form"), doc.alpha, tol);
    } else {
        throw InvalidInput("unknown payload kind: " + key);
    }
    return doc;
}

inline Document parse_document(const std::string& text, double tol) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed document: ") + e.what());
    }
    return parse_document(j, tol);
}

inline Json to_json(const Document& doc) {
    Json payload;
    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, TwistorCurvature<double>>) payload["twistor_tensor"] = detail::twistor_json(p);
            else if constexpr (std::is_same_v<P, HoloCurvature<double>>) payload["holo_tensor"] = detail::holo_json(p);
            else if constexpr (std::is_same_v<P, ModelDescriptor>) payload["model"] = detail::model_json(p);
            else payload["two_form"] = detail::matrix_json(p.c);
        },
        doc.payload);
    return Json{{"schema_version", kSchemaVersion}, {"alpha", doc.alpha.value()}, {"payload", std::move(payload)}};
}

// Canonical text: sorted keys, two-space indent, shortest round-trip floats, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string serialize(const Document& doc) { return dump(to_json(doc)); }

inline Document model_document(const ModelDescriptor& d) {
    d.validate();
    Document doc;
    doc.alpha = d.alpha;
    doc.payload = d;
    return doc;
}

// Expands a model payload into explicit curvature data.
inline Document materialize(const Document& doc) {
    const auto* d = std::get_if<ModelDescriptor>(&doc.payload);
    if (!d) return doc;
    Document out;
    out.alpha = doc.alpha;
    double p = d->parameters.empty() ? 0.0 : d->parameters[0];
    switch (d->kind) {
        case ModelKind::complex_space_form: out.payload = complex_space_form(p, doc.alpha); break;
        case ModelKind::product_surfaces: out.payload = product_surfaces(p, doc.alpha); break;
        case ModelKind::flat: out.payload = flat_holo<double>(doc.alpha); break;
        case ModelKind::constant_curvature_q:
            out.payload = twistor_from_riemann(constant_curvature_q(p, d->n, doc.alpha));
            break;
    }
    return out;
}

struct AnalysisReport {
    std::string input_kind;
    Alpha alpha{};
    double tolerance = 0;
    std::map<std::string, bool> verdicts;
    std::map<std::string, double> scalars;
    std::map<std::string, double> residuals;
    int sigma = 0;
    int epsilon_L = 0;
};

namespace detail {

inline void analyze_twistor(const TwistorCurvature<double>& r, double tol, AnalysisReport& rep) {
    RicciT<double> rc = ricci_t(r);
    WeylBlocks<double> wb = weyl_split_unchecked<double>(weyl_t(r));
    Verdict<double> ein = is_einstein_bundle(r, tol), mod = preserves_sd_module(r, tol), ctc = constant_twistor_curvature(r, tol);
    double wm = max_abs(wb.minus), wp = max_abs(wb.plus);
    rep.verdicts["einstein_bundle"] = ein.holds;
    rep.residuals["einstein_bundle"] = ein.residual;
    rep.verdicts["preserves_self_dual_forms"] = mod.holds;
    rep.residuals["preserves_self_dual_forms"] = mod.residual;
    rep.verdicts["constant_twistor_curvature"] = ctc.holds;
    rep.residuals["constant_twistor_curvature"] = ctc.residual;
    rep.verdicts["weyl_minus_zero"] = !(wm > tol);
    rep.residuals["weyl_minus_zero"] = wm;
    rep.verdicts["weyl_plus_zero"] = !(wp > tol);
    rep.residuals["weyl_plus_zero"] = wp;
    rep.residuals["weyl_mixed_block"] = wb.mixed_residual;
    rep.scalars["kappa"] = rc.kappa;
    rep.scalars["twistor_curvature_c"] = ctc.value;
    rep.scalars["bianchi_residual"] = bianchi_residual(r);
}

}  // namespace detail

// Twistor data: self_dual / anti_self_dual are W^- = 0 / W^+ = 0 of the fibre tensor.
// Kaehler data: the component criteria, with the real-frame tensor analysed alongside.
inline AnalysisReport analyze(const Document& input, double tol) {
    if (std::holds_alternative<TwoForm<double>>(input.payload))
        throw InvalidInput("analyze needs curvature data; use hodge for two_form documents");
    AnalysisReport rep;
    rep.input_kind = input.kind();
    rep.alpha = input.alpha;
    rep.tolerance = tol;
    rep.sigma = calibration_sigma(input.alpha);
    rep.epsilon_L = reconcile_bochner_scalar_sign(input.alpha);
    Document doc = materialize(input);
    if (const auto* r = std::get_if<TwistorCurvature<double>>(&doc.payload)) {
        detail::analyze_twistor(*r, tol, rep);
        rep.verdicts["self_dual"] = rep.verdicts["weyl_minus_zero"];
        rep.residuals["self_dual"] = rep.residuals["weyl_minus_zero"];
        rep.verdicts["anti_self_dual"] = rep.verdicts["weyl_plus_zero"];
        rep.residuals["anti_self_dual"] = rep.residuals["weyl_plus_zero"];
    } else {
        const auto& A = std::get<HoloCurvature<double>>(doc.payload);
        detail::analyze_twistor(real_twistor(A), tol, rep);
        auto sd = is_self_dual_kaehler(A, tol);
        auto asd = is_anti_self_dual_kaehler(A, tol);
        auto bf = is_bochner_flat(A, tol);
        rep.verdicts["self_dual"] = sd.holds;
        rep.residuals["self_dual"] = sd.residual;
        rep.verdicts["anti_self_dual"] = asd.holds;
        rep.residuals["anti_self_dual"] = asd.residual;
        rep.verdicts["bochner_flat"] = bf.holds;
        rep.residuals["bochner_flat"] = bf.residual;
        rep.residuals["anti_self_dual_component_route"] = asd.weyl_route_residual;
        rep.scalars["s"] = holo_ricci(A).s;
    }
    return rep;
}

inline Json to_json(const AnalysisReport& r) {
    return Json{{"report_version", kReportVersion},
                {"command", "analyze"},
                {"input_kind", r.input_kind},
                {"alpha", r.alpha.value()},
                {"tolerance", r.tolerance},
                {"verdicts", r.verdicts},
                {"scalars", r.scalars},
                {"residuals", r.residuals},
                {"calibration", {{"sigma", r.sigma}, {"epsilon_L", r.epsilon_L}}}};
}

struct HodgeReport {
    TwoForm<double> input, plus, minus;
    SdParams<double> plus_coords, minus_coords;
    double reassembly_residual = 0;
};

inline HodgeReport hodge_report(const Document& doc) {
    const auto* w = std::get_if<TwoForm<double>>(&doc.payload);
    if (!w) throw InvalidInput("hodge needs a two_form document");
    HodgeReport h{*w, sd_project(*w), asd_project(*w), sd_coords(*w), asd_coords(*w), 0};
    h.reassembly_residual = max_abs(h.plus + h.minus - *w);
    return h;
}

inline Json to_json(const HodgeReport& h) {
    auto coords = [](const SdParams<double>& p) { return Json{{"x", p.x}, {"y", p.y}, {"z", p.z}}; };
    return Json{{"report_version", kReportVersion},
                {"command", "hodge"},
                {"alpha", h.input.alpha.value()},
                {"self_dual", detail::matrix_json(h.plus.c)},
                {"anti_self_dual", detail::matrix_json(h.minus.c)},
                {"self_dual_coords", coords(h.plus_coords)},
                {"anti_self_dual_coords", coords(h.minus_coords)},
                {"reassembly_residual", h.reassembly_residual}};
}

inline Json to_json(const SuiteResult& s) {
    Json props = Json::array();
    for (const auto& p : s.properties)
        props.push_back(Json{{"name", p.name}, {"count", p.count}, {"failures", p.failures}, {"max_residual", p.max_residual}});
    return Json{{"suite", s.suite}, {"seed", s.seed}, {"count", s.count}, {"passed", s.passed()}, {"properties", std::move(props)}};
}

inline Json verify_json(const std::vector<SuiteResult>& suites, double tol) {
    Json arr = Json::array();
    bool ok = true;
    for (const auto& s : suites) {
        arr.push_back(to_json(s));
        ok = ok && s.passed();
    }
    return Json{{"report_version", kReportVersion}, {"command", "verify"}, {"tolerance", tol}, {"passed", ok}, {"suites", std::move(arr)}};
}

// Flat "key: value" rendering of a report, one leaf per line in key order.
inline std::string to_text(const Json& j) {
    std::ostringstream out;
    auto walk = [&](auto&& self, const Json& node, const std::string& prefix) -> void {
        if (node.is_object()) {
            for (const auto& [k, v] : node.items()) self(self, v, prefix.empty() ? k : prefix + "." + k);
        } else if (node.is_array() && !node.empty() && (node[0].is_object() || node[0].is_array())) {
            for (std::size_t i = 0; i < node.size(); ++i) self(self, node[i], prefix + "[" + std::to_string(i) + "]");
        } else {
            out << prefix << ": " << node.dump() << "\n";
        }
    };
    walk(walk, j, "");
    return out.str();
}

}  // namespace sdual
