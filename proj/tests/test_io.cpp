#include <gtest/gtest.h>

#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>

#include <sdual/io.hpp>
#include <sdual/random.hpp>

using namespace sdual;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Document doc_of(Alpha a, Document::Payload p) {
    Document d;
    d.alpha = a;
    d.payload = std::move(p);
    return d;
}

std::string csf_text() { return serialize(model_document(parse_model("complex_space_form:c=1:alpha=-1"))); }

Json mutate(const std::function<void(Json&)>& f) {
    Json j = Json::parse(csf_text());
    f(j);
    return j;
}

}  // namespace

TEST(RoundTrip, SampleCatalogIsCanonical) {
    int n = 0;
    for (const auto& e : std::filesystem::directory_iterator(SDUAL_SAMPLES_DIR)) {
        if (e.path().extension() != ".json") continue;
        std::string text = slurp(e.path());
        EXPECT_EQ(serialize(parse_document(text, 1e-9)), text) << e.path();
        ++n;
    }
    EXPECT_GE(n, 10);
}

TEST(RoundTrip, RandomPayloadsExact) {
    Rng rng(1);
    for (Alpha a : {kClassical, kHyperbolic})
        for (int k = 0; k < 20; ++k) {
            auto r = random_twistor<double>(rng, a);
            Document d = parse_document(serialize(doc_of(a, r)), 0.0);
            EXPECT_EQ(max_abs(std::get<TwistorCurvature<double>>(d.payload) - r), 0.0);

            auto A = random_holo<double>(rng, a);
            const auto& B = std::get<HoloCurvature<double>>(parse_document(serialize(doc_of(a, A)), 0.0).payload);
            for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(B.entries[i], A.entries[i]);

            auto w = random_two_form<double>(rng, a);
            EXPECT_EQ(std::get<TwoForm<double>>(parse_document(serialize(doc_of(a, w)), 0.0).payload), w);
        }
}

TEST(RoundTrip, ModelDescriptor) {
    Document d = parse_document(serialize(model_document(parse_model("constant_curvature_q:c=0.25:n=3:alpha=1"))), 1e-9);
    const auto& m = std::get<ModelDescriptor>(d.payload);
    EXPECT_EQ(m.kind, ModelKind::constant_curvature_q);
    EXPECT_EQ(m.n, 3);
    EXPECT_EQ(m.parameters, std::vector<double>{0.25});
    EXPECT_EQ(d.alpha, kHyperbolic);
}

TEST(Parse, RejectsMalformedDocuments) {
    EXPECT_THROW(parse_document(std::string("{not json"), 1e-9), InvalidInput);
    EXPECT_THROW(parse_document(mutate([](Json& j) { j.erase("schema_version"); }), 1e-9), InvalidInput);
    EXPECT_THROW(parse_document(mutate([](Json& j) { j["schema_version"] = "sdual-lab/0"; }), 1e-9), InvalidInput);
    EXPECT_THROW(parse_document(mutate([](Json& j) { j["alpha"] = 0; }), 1e-9), InvalidInput);
    EXPECT_THROW(parse_document(mutate([](Json& j) { j["alpha"] = 1.5; }), 1e-9), InvalidInput);
    EXPECT_THROW(parse_document(mutate([](Json& j) { j["extra"] = 1; }), 1e-9), InvalidInput);
    EXPECT_THROW(parse_document(mutate([](Json& j) { j["payload"]["two_form"] = Json::array(); }), 1e-9), InvalidInput);
    EXPECT_THROW(parse_document(mutate([](Json& j) { j["payload"] = Json{{"tensor", 1}}; }), 1e-9), InvalidInput);
    EXPECT_THROW(parse_document(mutate([](Json& j) { j["payload"]["model"]["name"] = "sphere"; }), 1e-9), InvalidInput);
    EXPECT_THROW(parse_document(mutate([](Json& j) { j["payload"]["model"]["parameters"] = Json::array(); }), 1e-9), InvalidInput);
}

TEST(Parse, TwoFormShapeAndSkew) {
    Json j{{"schema_version", kSchemaVersion}, {"alpha", -1}, {"payload", {{"two_form", {{0, 1, 0}, {-1, 0, 0}}}}}};
    EXPECT_THROW(parse_document(j, 1e-9), InvalidInput);
    j["payload"]["two_form"] = {{0, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    try {
        parse_document(j, 1e-9);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.index(), (std::vector<int>{1, 2}));
    }
}

TEST(Parse, TwistorSymmetryViolationCarriesIndex) {
    Json j = Json::parse(serialize(doc_of(kClassical, TwistorCurvature<double>(kClassical))));
    j["payload"]["twistor_tensor"][0][1][2][3] = 1.0;
    EXPECT_THROW(parse_document(j, 1e-9), ValidationError);
    j["payload"]["twistor_tensor"][0][1][2][3] = "x";
    EXPECT_THROW(parse_document(j, 1e-9), InvalidInput);
}

TEST(Parse, HoloEntries) {
    Json j{{"schema_version", kSchemaVersion}, {"alpha", 1}, {"payload", {{"holo_tensor", Json::array()}}}};
    EXPECT_EQ(max_abs(std::get<HoloCurvature<double>>(parse_document(j, 0.0).payload)), 0.0);
    Json e{{"index", {0, 0, 0, 0}}, {"re", 1.0}, {"im", 0.0}};
    j["payload"]["holo_tensor"] = {e, e};
    EXPECT_THROW(parse_document(j, 1e-9), InvalidInput);
    e["index"] = {0, 0, 0, 2};
    j["payload"]["holo_tensor"] = {e};
    EXPECT_THROW(parse_document(j, 1e-9), InvalidInput);
    // a lone off-symmetric entry violates the index symmetries
    e["index"] = {0, 1, 0, 0};
    j["payload"]["holo_tensor"] = {e};
    EXPECT_THROW(parse_document(j, 1e-9), ValidationError);
}

TEST(Analyze, ComplexSpaceForm) {
    AnalysisReport r = analyze(parse_document(csf_text(), 1e-9), 1e-9);
    EXPECT_TRUE(r.verdicts.at("self_dual"));
    EXPECT_TRUE(r.verdicts.at("bochner_flat"));
    EXPECT_FALSE(r.verdicts.at("anti_self_dual"));
    EXPECT_EQ(r.scalars.at("s"), -12.0);
    EXPECT_EQ(r.sigma, 1);
    EXPECT_EQ(r.epsilon_L, -1);
    for (const auto& [k, v] : r.verdicts) EXPECT_TRUE(r.residuals.count(k)) << k;
}

TEST(Analyze, ZeroTensor) {
    AnalysisReport r = analyze(doc_of(kHyperbolic, TwistorCurvature<double>(kHyperbolic)), 1e-9);
    for (const auto& [k, v] : r.verdicts) EXPECT_TRUE(v) << k;
    for (const auto& [k, v] : r.scalars) EXPECT_EQ(v, 0.0) << k;
}

TEST(Analyze, EinsteinMatchesModuleVerdict) {
    Rng rng(2);
    for (Alpha a : {kClassical, kHyperbolic})
        for (int k = 0; k < 20; ++k) {
            auto t = random_twistor<double>(rng, a);
            if (k % 2) t = einstein_projection(t);
            AnalysisReport r = analyze(doc_of(a, t), 1e-9);
            EXPECT_EQ(r.verdicts.at("einstein_bundle"), r.verdicts.at("preserves_self_dual_forms"));
            EXPECT_EQ(r.verdicts.at("einstein_bundle"), k % 2 == 1);
        }
}

TEST(Analyze, ProductModelIsAntiSelfDual) {
    AnalysisReport r = analyze(model_document(parse_model("product:lambda=1:alpha=-1")), 1e-9);
    EXPECT_TRUE(r.verdicts.at("anti_self_dual"));
    EXPECT_EQ(r.scalars.at("s"), 0.0);
}

TEST(Analyze, RejectsTwoForm) {
    EXPECT_THROW(analyze(doc_of(kClassical, TwoForm<double>(kClassical)), 1e-9), InvalidInput);
}

TEST(Analyze, ReportBytesStable) {
    Document d = parse_document(csf_text(), 1e-9);
    EXPECT_EQ(dump(to_json(analyze(d, 1e-9))), dump(to_json(analyze(d, 1e-9))));
}

TEST(Hodge, E01HasHalfX) {
    HodgeReport h = hodge_report(doc_of(kClassical, TwoForm<double>::unit(0, 1, kClassical)));
    EXPECT_EQ(h.plus_coords.x, 0.5);
    EXPECT_EQ(h.minus_coords.x, 0.5);
    EXPECT_EQ(h.reassembly_residual, 0.0);
}

TEST(Hodge, ZeroAndRandom) {
    HodgeReport z = hodge_report(doc_of(kHyperbolic, TwoForm<double>(kHyperbolic)));
    EXPECT_EQ(max_abs(z.plus) + max_abs(z.minus), 0.0);
    Rng rng(3);
    for (Alpha a : {kClassical, kHyperbolic})
        for (int k = 0; k < 20; ++k) EXPECT_LE(hodge_report(doc_of(a, random_two_form<double>(rng, a))).reassembly_residual, 1e-12);
    EXPECT_THROW(hodge_report(doc_of(kClassical, TwistorCurvature<double>(kClassical))), InvalidInput);
}

TEST(Text, FlattensLeaves) {
    Json j{{"a", {{"b", 1}}}, {"c", {1, 2}}, {"d", Json::array({Json{{"e", true}}})}};
    EXPECT_EQ(to_text(j), "a.b: 1\nc: [1,2]\nd[0].e: true\n");
}
