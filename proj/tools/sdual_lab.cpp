// sdual_lab: analyse curvature data, split two-forms, run property suites, emit model fixtures.
// Exit codes: 0 success, 1 property failure, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <sdual/sdual.hpp>

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

struct Options {
    std::string input;
    std::optional<int> alpha;
    std::optional<double> tol;
    std::uint64_t seed = 1;
    long count = 1000;
    std::string format = "json";
    std::vector<std::string> suites;
    std::string model;
};

double resolve_tol(const Options& o) {
    if (o.tol) return *o.tol;
    if (const char* env = std::getenv("SDUAL_LAB_TOL")) {
        std::string s(env);
        try {
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (used == s.size() && v >= 0) return v;
        } catch (const std::exception&) {
        }
        throw sdual::InvalidInput("SDUAL_LAB_TOL is not a non-negative number: " + s);
    }
    return 1e-9;
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sdual::InvalidInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

sdual::Document load(const Options& o, double tol) {
    sdual::Document doc = sdual::parse_document(read_input(o.input), tol);
    if (o.alpha && doc.alpha.value() != *o.alpha)
        throw sdual::InvalidInput("--alpha " + std::to_string(*o.alpha) + " conflicts with document alpha " +
                                  std::to_string(doc.alpha.value()));
    return doc;
}

void emit(const sdual::Json& j, const Options& o) {
    std::cout << (o.format == "text" ? sdual::to_text(j) : sdual::dump(j));
}

int cmd_analyze(const Options& o) {
    double tol = resolve_tol(o);
    emit(sdual::to_json(sdual::analyze(load(o, tol), tol)), o);
    return kOk;
}

int cmd_hodge(const Options& o) {
    double tol = resolve_tol(o);
    emit(sdual::to_json(sdual::hodge_report(load(o, tol))), o);
    return kOk;
}

int cmd_verify(const Options& o) {
    double tol = resolve_tol(o);
    std::vector<std::string> names = o.suites;
    if (names.empty() || (names.size() == 1 && names[0] == "all")) names = sdual::suite_names();
    std::vector<sdual::Alpha> alphas = {sdual::kClassical, sdual::kHyperbolic};
    if (o.alpha) alphas = {sdual::Alpha(*o.alpha)};
    // validate every name before running anything
    for (const auto& n : names)
        if (std::find(sdual::suite_names().begin(), sdual::suite_names().end(), n) == sdual::suite_names().end())
            throw sdual::InvalidInput("unknown suite: " + n);
    std::vector<sdual::SuiteResult> results;
    for (const auto& n : names) results.push_back(sdual::run_suite(n, o.seed, o.count, tol, alphas));
    sdual::Json j = sdual::verify_json(results, tol);
    emit(j, o);
    return j["passed"].get<bool>() ? kOk : kPropertyFailure;
}

int cmd_models(const Options& o) {
    if (o.model.empty()) {
        sdual::Json cat = sdual::Json::object();
        for (const auto& [name, d] : sdual::model_aliases()) {
            sdual::Json doc = sdual::to_json(sdual::model_document(d));
            cat[name] = {{"alpha", doc["alpha"]}, {"model", doc["payload"]["model"]}};
        }
        sdual::Json j{{"models", {"complex_space_form", "product_surfaces", "constant_curvature_q", "flat"}}, {"aliases", cat}};
        emit(j, o);
        return kOk;
    }
    sdual::ModelDescriptor d = sdual::parse_model(o.model);
    if (o.alpha) d.alpha = sdual::Alpha(*o.alpha);
    // the document itself is always JSON so it can be fed back to analyze
    std::cout << sdual::serialize(sdual::model_document(d));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-duality laboratory for generalized quaternionic and Kaehler curvature data"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--alpha", o.alpha, "Signature parameter")->check(CLI::IsMember({-1, 1}));
        sub->add_option("--tol", o.tol, "Tolerance (default 1e-9, or SDUAL_LAB_TOL)")->check(CLI::NonNegativeNumber);
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Verdicts, scalars and residuals for a curvature document");
    analyze->add_option("--input", o.input, "Document path, or - for stdin")->required();
    common(analyze);

    CLI::App* hodge = app.add_subcommand("hodge", "Self-dual / anti-self-dual split of a two_form document");
    hodge->add_option("--input", o.input, "Document path, or - for stdin")->required();
    common(hodge);

    CLI::App* verify = app.add_subcommand("verify", "Run seeded property suites");
    verify->add_option("suite,--suite", o.suites, "Suite names, or all");
    verify->add_option("--seed", o.seed, "Random seed");
    verify->add_option("--count", o.count, "Random cases per alpha")->check(CLI::NonNegativeNumber);
    common(verify);

    CLI::App* models = app.add_subcommand("models", "Emit a model fixture document, or list the catalog");
    models->add_option("name", o.model, "Model, e.g. complex_space_form:c=1:alpha=-1 or CP2");
    common(models);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(o);
        if (hodge->parsed()) return cmd_hodge(o);
        if (verify->parsed()) return cmd_verify(o);
        if (models->parsed()) return cmd_models(o);
    } catch (const sdual::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const sdual::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const sdual::Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
