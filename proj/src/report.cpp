#include "weylpi/report.hpp"

#include <algorithm>

namespace weylpi {

using nlohmann::json;

json to_json(const ConjectureReport& r) {
    json j;
    j["mdeg"] = r.mdeg.counts();
    j["field"] = r.field.name();
    j["n_reduced"] = r.n_reduced;
    j["eval_rank"] = r.eval_rank;
    j["dim_id"] = r.dim_id;
    j["dim_I"] = r.dim_I ? json(*r.dim_I) : json(nullptr);
    j["verdict"] = to_string(r.verdict);
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    j["elapsed_ms"] = r.elapsed_ms;
    j["diagnostics"] = r.diagnostics;
    return j;
}

json to_json(const std::vector<ConjectureReport>& reports) {
    json arr = json::array();
    std::size_t verified = 0;
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
        verified += r.verdict == Verdict::Verified;
    }
    return json{{"reports", arr}, {"summary", {{"total", reports.size()}, {"verified", verified}}}};
}

json to_json(const NormalForm& nf) {
    json terms = json::array();
    for (const auto& [b, c] : nf.terms) terms.push_back({{"monomial", b.to_string()}, {"coefficient", c.to_string()}});
    return json{{"mdeg", nf.mdeg.counts()}, {"beta", nf.beta.to_string()}, {"terms", terms}};
}

json to_json(const RewriteStep& s) {
    return json{{"rule", std::string(rule_name(s.rule))},
                {"before", s.before},
                {"after", s.after},
                {"mw_before", s.mw_before.entries()},
                {"bw_before", s.bw_before.entries()},
                {"mw_after", s.mw_after.entries()},
                {"bw_after", s.bw_after.entries()}};
}

namespace {

void check_count(const json& j, const char* key, bool nullable, std::vector<std::string>& errs) {
    if (!j.contains(key)) {
        errs.push_back(std::string("missing ") + key);
    } else if (!(j[key].is_number_unsigned() || (nullable && j[key].is_null()))) {
        errs.push_back(std::string(key) + " must be a nonnegative integer" + (nullable ? " or null" : ""));
    }
}

void check_one(const json& r, std::vector<std::string>& errs) {
    if (!r.is_object()) {
        errs.push_back("report is not an object");
        return;
    }
    static const std::vector<std::string> allowed = {"mdeg",   "field",   "n_reduced",  "eval_rank",  "dim_id",
                                                     "dim_I",  "verdict", "witness",    "elapsed_ms", "diagnostics"};
    for (const auto& [k, v] : r.items())
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) errs.push_back("unexpected key " + k);
    if (!r.contains("mdeg") || !r["mdeg"].is_array() || r["mdeg"].empty()) {
        errs.push_back("mdeg must be a nonempty array");
    } else {
        for (const auto& e : r["mdeg"])
            if (!e.is_number_unsigned()) errs.push_back("mdeg entries must be nonnegative integers");
    }
    if (!r.contains("field") || !r["field"].is_string()) {
        errs.push_back("field must be a string");
    } else {
        const std::string f = r["field"];
        if (f != "q" && f.rfind("fp:", 0) != 0) errs.push_back("field must be q or fp:P");
    }
    check_count(r, "n_reduced", false, errs);
    check_count(r, "eval_rank", false, errs);
    check_count(r, "dim_id", false, errs);
    check_count(r, "dim_I", true, errs);
    if (!r.contains("verdict") || !r["verdict"].is_string()) {
        errs.push_back("verdict must be a string");
    } else {
        const std::string v = r["verdict"];
        if (v != "Verified" && v != "Refuted" && v != "Inconclusive") errs.push_back("unknown verdict " + v);
    }
    if (!r.contains("witness") || !(r["witness"].is_string() || r["witness"].is_null()))
        errs.push_back("witness must be a string or null");
    if (!r.contains("elapsed_ms") || !r["elapsed_ms"].is_number() || r["elapsed_ms"].get<double>() < 0)
        errs.push_back("elapsed_ms must be a nonnegative number");
    if (r.contains("diagnostics")) {
        if (!r["diagnostics"].is_array()) {
            errs.push_back("diagnostics must be an array");
        } else {
            for (const auto& e : r["diagnostics"])
                if (!e.is_string()) errs.push_back("diagnostics entries must be strings");
        }
    }
}

}  // namespace

std::vector<std::string> validate_report(const json& j) {
    std::vector<std::string> errs;
    if (j.is_object() && j.contains("reports")) {
        if (!j["reports"].is_array()) {
            errs.push_back("reports must be an array");
        } else {
            for (const auto& r : j["reports"]) check_one(r, errs);
        }
        if (!j.contains("summary") || !j["summary"].is_object()) errs.push_back("summary must be an object");
    } else {
        check_one(j, errs);
    }
    return errs;
}

}  // namespace weylpi
