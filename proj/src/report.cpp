#include "qfrob/report.hpp"

namespace qfrob {

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::info: return "info";
    }
    return "?";
}

bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (c.status == Status::fail) return false;
    return true;
}

namespace {

nlohmann::json int_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    throw ConfigError("scalar entries must be integers");
}

}  // namespace

nlohmann::json scalar_json(const CycloScalar& s) {
    nlohmann::json num = nlohmann::json::array();
    for (const auto& c : s.numerator()) num.push_back(int_json(c));
    return {{"num", num}, {"den", int_json(s.denominator())}};
}

nlohmann::json scalar_json(const ModPScalar& s) { return {{"num", {s.value()}}, {"den", 1}}; }

CycloScalar scalar_from_json(const RootParams* rp, const nlohmann::json& j) {
    if (j.is_number_integer()) return CycloScalar(rp, j.get<long>());
    if (!j.is_object() || !j.contains("num")) throw ConfigError("scalar must be {\"num\":[...],\"den\":n}");
    std::vector<mpz_class> num;
    for (const auto& x : j.at("num")) num.push_back(int_from_json(x));
    mpz_class den = j.contains("den") ? int_from_json(j.at("den")) : mpz_class(1);
    if (den == 0) throw ConfigError("zero denominator");
    return CycloScalar(rp, std::move(num), den);
}

nlohmann::json checks_json(const std::vector<Check>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e = {{"name", c.name}, {"paper_ref", c.paper_ref}, {"status", status_name(c.status)}};
        if (!c.witness.is_null()) e["witness"] = c.witness;
        arr.push_back(std::move(e));
    }
    return arr;
}

nlohmann::json report_json(const nlohmann::json& config, const std::vector<Check>& checks) {
    int pass = 0, fail = 0, info = 0;
    for (const auto& c : checks) {
        if (c.status == Status::pass) ++pass;
        else if (c.status == Status::fail) ++fail;
        else ++info;
    }
    return {{"config", config},
            {"checks", checks_json(checks)},
            {"summary", {{"total", checks.size()}, {"passed", pass}, {"failed", fail}, {"info", info},
                         {"ok", fail == 0}}}};
}

}  // namespace qfrob
