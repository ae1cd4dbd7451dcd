// weakid: command-line front end.
//
// Exit codes: 0 every check passed, 1 a mathematical check failed,
// 2 usage or parse error.

#include "weakid/expr.hpp"
#include "weakid/matrep.hpp"
#include "weakid/parallel.hpp"
#include "weakid/report.hpp"
#include "weakid/repthy.hpp"
#include "weakid/series.hpp"
#include "weakid/tideal.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace weakid;
using report::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    unsigned workers = 0;
    std::optional<unsigned> max_degree;
    bool json = false;
    bool deterministic = false;
    std::string out;

    unsigned degree_cap() const { return max_degree.value_or(7); }
    unsigned series_cap() const { return max_degree.value_or(series::kDefaultMaxDegree); }
};

// All output goes through here: JSON to --out, else JSON or text to stdout.
void emit(const Globals& g, const json& j, const std::string& human)
{
    if (!g.out.empty()) {
        std::ofstream f(g.out);
        if (!f)
            throw UsageError("cannot write " + g.out);
        f << j.dump(2) << '\n';
        std::cout << human;
    } else if (g.json) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << human;
    }
}

std::string matrix_text(const std::string& a, const std::string& b, const std::string& c, const std::string& d)
{
    return "[[" + a + ", " + b + "], [" + c + ", " + d + "]]";
}

int run_verify(const Globals& g, unsigned degree, bool proper)
{
    if (degree < 4 || degree > 7)
        throw UsageError("--degree must be between 4 and 7");
    if (degree > g.degree_cap())
        throw UsageError("degree " + std::to_string(degree) + " is above --max-degree " +
                         std::to_string(g.degree_cap()));
    tideal::ConsequenceEngine engine(tideal::GeneratorSet::standard(), g.degree_cap());
    tideal::VerifyOptions opts;
    opts.space = proper ? tideal::Space::Proper : tideal::Space::FullP;
    const auto r = tideal::verify_theorem(degree, engine, opts);

    std::ostringstream os;
    os << "degree " << degree << " in " << (proper ? "Gamma_" : "P_") << degree << ": dim " << r.dim_P
       << ", weak identities " << r.dim_kernel << ", consequences of S4 and [[x1,x2],[x3,x4]] "
       << r.dim_consequences << '\n'
       << "containment: " << (r.containment ? "yes" : "no") << '\n'
       << "equal: " << (r.equal ? "yes" : "no") << '\n'
       << "Gamma_" << degree << ": dim " << r.dim_gamma << ", weak identities " << r.dim_gamma_kernel
       << ", quotient " << r.decomposition.render() << '\n';
    emit(g, report::to_json(r, !g.deterministic), os.str());
    return r.passed() ? kOk : kFailed;
}

int run_check(const Globals& g, const std::string& src, const std::string& mode)
{
    const freealg::NcPoly f = expr::parse_poly(src);
    json j{{"expr", src}, {"poly", f.render()}, {"mode", mode}};
    std::ostringstream os;
    os << f.render() << '\n';
    bool ok = false;
    if (mode == "identity") {
        if (f.max_variable() > matrep::kMaxVars)
            throw UsageError("identity checks support at most " + std::to_string(matrep::kMaxVars) + " variables");
        const auto c = matrep::check_weak_identity(f);
        ok = c.holds;
        const json cj = report::to_json(c);
        j["result"] = ok;
        if (cj.contains("witness"))
            j["witness"] = cj["witness"];
        os << "weak identity: " << (ok ? "yes" : "no") << '\n';
        if (c.witness) {
            for (const auto& [var, abc] : c.witness->values)
                os << "  x" << unsigned(var) << " = "
                   << matrix_text(abc[0].get_str(), abc[1].get_str(), abc[1].get_str(), abc[2].get_str()) << '\n';
            const auto& v = c.witness->result;
            os << "  value = " << matrix_text(v[0].get_str(), v[1].get_str(), v[2].get_str(), v[3].get_str())
               << '\n';
        }
    } else {
        unsigned degree = 0;
        for (const auto& [w, c] : f.terms())
            degree = std::max(degree, static_cast<unsigned>(w.degree()));
        if (degree > g.degree_cap())
            throw UsageError("degree " + std::to_string(degree) + " is above --max-degree " +
                             std::to_string(g.degree_cap()));
        tideal::ConsequenceEngine engine(tideal::GeneratorSet::standard(), g.degree_cap());
        ok = engine.is_consequence(f);
        j["result"] = ok;
        os << "consequence of S4 and [[x1,x2],[x3,x4]]: " << (ok ? "yes" : "no") << '\n';
    }
    emit(g, j, os.str());
    return ok ? kOk : kFailed;
}

int run_decompose(const Globals& g, const std::string& space, unsigned degree)
{
    if (degree > g.degree_cap())
        throw UsageError("degree " + std::to_string(degree) + " is above --max-degree " +
                         std::to_string(g.degree_cap()));
    const auto gamma = freealg::gamma_span(degree);
    repthy::Decomposition d;
    std::size_t dim = 0;
    std::string label = "Gamma_" + std::to_string(degree);
    if (space == "gamma") {
        d = repthy::decompose(gamma, degree);
        dim = gamma.dim();
    } else {
        const auto k = matrep::kernel_of_pair(freealg::p_index(degree), gamma);
        if (space == "gamma-kernel") {
            d = repthy::decompose(k.kernel, degree);
            dim = k.kernel.dim();
            label += " cap weak identities";
        } else {
            d = repthy::decompose_quotient(gamma, k.kernel, degree);
            dim = k.image_rank();
            label += " / weak identities";
        }
    }
    const bool consistent = d.sn_dimension() == dim;
    json j{{"space", space},
           {"degree", degree},
           {"dimension", dim},
           {"decomposition", report::to_json(d)},
           {"toolkit_version", report::kToolkitVersion}};
    emit(g, j, label + " (dim " + std::to_string(dim) + ") = " + d.render() + "\n");
    return consistent ? kOk : kFailed;
}

int run_hilbert(const Globals& g, unsigned max)
{
    const auto computed = series::b2_tilde_dims(max, g.series_cap());
    const auto closed = series::h1_closed_form(max);
    const bool equal = computed == closed;
    json j{{"max", max},
           {"computed", report::to_json(computed)},
           {"closed_form", report::to_json(closed)},
           {"equal", equal},
           {"toolkit_version", report::kToolkitVersion}};
    std::ostringstream os;
    os << "computed:    " << computed.render() << '\n'
       << "closed form: " << closed.render() << '\n'
       << "equal: " << (equal ? "yes" : "no") << '\n';
    emit(g, j, os.str());
    return equal ? kOk : kFailed;
}

int run_report(const Globals& g, const std::vector<unsigned>& degrees, const std::string& format)
{
    if (g.out.empty())
        throw UsageError("report needs --out FILE");
    tideal::ConsequenceEngine engine(tideal::GeneratorSet::standard(), g.degree_cap());
    std::vector<tideal::DegreeReport> reports;
    for (unsigned n : degrees) {
        if (n < 4 || n > std::min(7u, g.degree_cap()))
            throw UsageError("degree " + std::to_string(n) + " is outside 4.." + std::to_string(std::min(7u, g.degree_cap())));
        reports.push_back(tideal::verify_theorem(n, engine));
    }
    bool all = true;
    std::ostringstream os;
    for (const auto& r : reports) {
        all = all && r.passed();
        os << "degree " << r.degree << ": " << (r.passed() ? "equal" : "NOT equal") << '\n';
    }
    std::ofstream f(g.out);
    if (!f)
        throw UsageError("cannot write " + g.out);
    if (format == "markdown") {
        f << report::markdown(reports);
    } else {
        json j{{"toolkit_version", report::kToolkitVersion}, {"reports", json::array()}};
        for (const auto& r : reports)
            j["reports"].push_back(report::to_json(r, !g.deterministic));
        f << j.dump(2) << '\n';
    }
    std::cout << os.str();
    return all ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weak polynomial identities of 2x2 matrices under symmetric substitutions"};
    app.set_version_flag("--version", report::kToolkitVersion);
    app.require_subcommand(1);

    Globals g;
    unsigned max_degree = 0;
    app.add_option("--workers", g.workers, "worker threads (default: hardware concurrency)")
        ->envname("WEAKID_WORKERS");
    auto* max_opt = app.add_option("--max-degree", max_degree,
                                   "degree cap: 7 for verify/check/decompose, 10 for hilbert")
                        ->envname("WEAKID_MAX_DEGREE");
    app.add_flag("--json", g.json, "print JSON instead of text");
    app.add_option("--out", g.out, "write the JSON report to FILE");
    app.add_flag("--deterministic", g.deterministic, "omit timings so reruns are byte-identical");

    unsigned degree = 0;
    bool full_p = false, proper = false;
    auto* verify = app.add_subcommand("verify", "compare weak identities with consequences of S4 and the metabelian identity");
    verify->fallthrough();
    verify->add_option("--degree", degree, "degree, 4..7")->required();
    auto* fp = verify->add_flag("--full-p", full_p, "work in P_n (default)");
    verify->add_flag("--proper", proper, "work in the proper polynomials Gamma_n")->excludes(fp);

    std::string src, mode = "identity";
    auto* check = app.add_subcommand("check", "test one polynomial");
    check->fallthrough();
    check->add_option("--expr", src, "polynomial, e.g. \"[[x1,x2],[x3,x4]]\"")->required();
    check->add_option("--mode", mode, "identity or consequence")
        ->check(CLI::IsMember({"identity", "consequence"}))
        ->capture_default_str();

    std::string space = "gamma";
    unsigned ddegree = 0;
    auto* decompose = app.add_subcommand("decompose", "Sym(n)-module structure");
    decompose->fallthrough();
    decompose->add_option("--space", space, "gamma, gamma-quotient or gamma-kernel")
        ->check(CLI::IsMember({"gamma", "gamma-quotient", "gamma-kernel"}))
        ->capture_default_str();
    decompose->add_option("--degree", ddegree, "degree")->required();

    unsigned hmax = 8;
    auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of B_2 modulo weak identities");
    hilbert->fallthrough();
    hilbert->add_option("--max", hmax, "largest degree")->capture_default_str();

    std::vector<unsigned> degrees{4, 5, 6};
    std::string format = "json";
    auto* rep = app.add_subcommand("report", "verify several degrees and write a report");
    rep->fallthrough();
    rep->add_option("--degrees", degrees, "comma-separated degrees")->delimiter(',')->capture_default_str();
    rep->add_option("--format", format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }
    if (max_opt->count() > 0)
        g.max_degree = max_degree;
    if (g.workers > 0)
        set_workers(g.workers);

    try {
        if (*verify)
            return run_verify(g, degree, proper);
        if (*check)
            return run_check(g, src, mode);
        if (*decompose)
            return run_decompose(g, space, ddegree);
        if (*hilbert)
            return run_hilbert(g, hmax);
        if (*rep)
            return run_report(g, degrees, format);
    } catch (const expr::ParseError& e) {
        std::cerr << "parse error at " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
