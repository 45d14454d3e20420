// weylpi: command-line front end.
//
// Exit codes: 0 success, 1 negative answer (not-identity / not all verified),
// 2 bad input, 3 resource limit.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylpi/bracket.hpp"
#include "weylpi/errors.hpp"
#include "weylpi/evaluation.hpp"
#include "weylpi/identities.hpp"
#include "weylpi/parser.hpp"
#include "weylpi/report.hpp"
#include "weylpi/rewriter.hpp"

using namespace weylpi;

namespace {

constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

int cmd_normalize(const std::string& field_text, const std::string& expr, bool trace, bool as_json) {
    const FieldSpec field = FieldSpec::parse(field_text);
    const NCPoly f = parse(expr, field);
    std::vector<RewriteStep> steps;
    RewriteOptions opts;
    if (trace) opts.trace = &steps;
    const auto forms = normal_form(f, opts);
    if (as_json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [d, nf] : forms) out.push_back(to_json(nf));
        nlohmann::json doc{{"field", field.name()}, {"normal_forms", out}};
        if (trace) {
            doc["trace"] = nlohmann::json::array();
            for (const auto& s : steps) doc["trace"].push_back(to_json(s));
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (trace) {
        for (const auto& s : steps) {
            std::cout << rule_name(s.rule) << ": " << s.before << "  ->  " << s.after << "   mw " << s.mw_before.to_string()
                      << " -> " << s.mw_after.to_string() << ", bw " << s.bw_before.to_string() << " -> "
                      << s.bw_after.to_string() << "\n";
        }
    }
    for (const auto& [d, nf] : forms) std::cout << d.to_string() << ": " << nf.to_string() << "\n";
    return 0;
}

int cmd_check(const std::string& field_text, const std::string& expr) {
    const NCPoly f = parse(expr, FieldSpec::parse(field_text));
    const bool yes = is_weak_identity(f);
    std::cout << (yes ? "identity" : "not-identity") << "\n";
    return yes ? 0 : kExitNo;
}

int cmd_enumerate(const std::string& mdeg) {
    const MultiDegree d = MultiDegree::parse(mdeg);
    std::vector<BracketMonomial> list;
    try {
        list = enumerate_completely_reduced(d);
    } catch (const DegreeTooSmall&) {
    }
    for (const auto& b : list) std::cout << b.to_string() << "\n";
    std::cout << "count=" << list.size() << "\n";
    return 0;
}

int cmd_idbasis(const std::string& mdeg, const std::string& field_text) {
    const MultiDegree d = MultiDegree::parse(mdeg);
    const FieldSpec field = FieldSpec::parse(field_text);
    if (d.total() > VerifyOptions::default_max_degree()) throw ResourceLimit("total degree over the cap");
    const auto basis = identity_basis(d, field);
    for (const auto& f : basis) std::cout << format(f) << "\n";
    std::cout << "dim=" << basis.size() << "\n";
    return 0;
}

int cmd_verify(int degree, const std::string& mdeg, const std::string& field_text, unsigned jobs,
               const std::string& json_path, bool no_timing) {
    const FieldSpec field = FieldSpec::parse(field_text);
    std::vector<MultiDegree> degrees;
    if (!mdeg.empty()) {
        degrees.push_back(MultiDegree::parse(mdeg));
    } else {
        degrees = sorted_multidegrees(static_cast<unsigned>(degree));
    }
    VerifyOptions opts;
    opts.jobs = jobs;
    auto reports = verify_all(degrees, field, opts);
    if (no_timing)
        for (auto& r : reports) r.elapsed_ms = 0;

    std::size_t verified = 0;
    for (const auto& r : reports) {
        std::cout << r.mdeg.to_string() << " " << r.field.name() << " n_reduced=" << r.n_reduced
                  << " eval_rank=" << r.eval_rank << " dim_id=" << r.dim_id
                  << " dim_I=" << (r.dim_I ? std::to_string(*r.dim_I) : "-") << " " << to_string(r.verdict) << "\n";
        if (r.witness) std::cout << "  witness: " << *r.witness << "\n";
        for (const auto& msg : r.diagnostics) std::cout << "  note: " << msg << "\n";
        verified += r.verdict == Verdict::Verified;
    }
    std::cout << "verified " << verified << "/" << reports.size() << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << to_json(reports).dump(2) << "\n";
    }
    return verified == reports.size() ? 0 : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weak polynomial identities of the Weyl algebra"};
    app.require_subcommand(1);

    std::string field = "q", expr, mdeg, json_path;
    bool trace = false, as_json = false, no_timing = false;
    int degree = 0;
    unsigned jobs = 1;

    auto* normalize = app.add_subcommand("normalize", "Normal form modulo I per multidegree");
    normalize->add_option("--field", field, "q or fp:P");
    normalize->add_option("--expr", expr, "Polynomial")->required();
    normalize->add_flag("--trace", trace, "Print each rewrite");
    normalize->add_flag("--json", as_json, "JSON output");

    auto* check = app.add_subcommand("check", "Is the polynomial a weak identity of (A1, V)");
    check->add_option("--field", field, "q or fp:P");
    check->add_option("--expr", expr, "Polynomial")->required();

    auto* enumerate = app.add_subcommand("enumerate", "List completely reduced bracket-monomials");
    enumerate->add_option("--mdeg", mdeg, "d1,d2,...")->required();

    auto* idbasis = app.add_subcommand("idbasis", "Basis of the weak identities of one multidegree");
    idbasis->add_option("--mdeg", mdeg, "d1,d2,...")->required();
    idbasis->add_option("--field", field, "q or fp:P");

    auto* verify = app.add_subcommand("verify", "Compare weak identities with the ideal I");
    auto* deg_opt = verify->add_option("--degree", degree, "All sorted multidegrees of this total degree")
                        ->check(CLI::PositiveNumber);
    auto* mdeg_opt = verify->add_option("--mdeg", mdeg, "d1,d2,...");
    deg_opt->excludes(mdeg_opt);
    verify->add_option("--field", field, "q or fp:P");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--json", json_path, "Write reports to this file");
    verify->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for byte-identical output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*normalize) return cmd_normalize(field, expr, trace, as_json);
        if (*check) return cmd_check(field, expr);
        if (*enumerate) return cmd_enumerate(mdeg);
        if (*idbasis) return cmd_idbasis(mdeg, field);
        if (*verify) {
            if (deg_opt->count() == 0 && mdeg_opt->count() == 0) {
                std::cerr << "verify: give --degree or --mdeg\n";
                return kExitInput;
            }
            return cmd_verify(degree, mdeg, field, jobs, json_path, no_timing);
        }
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
