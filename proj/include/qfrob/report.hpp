#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qfrob/cyclo.hpp"

namespace qfrob {

enum class Status { pass, fail, info };

struct Check {
    std::string name;
    std::string paper_ref;  // the statement being checked, as a formula
    Status status = Status::pass;
    nlohmann::json witness;  // null when absent
};

inline Check make_check(std::string name, std::string ref, bool ok, nlohmann::json witness = nullptr) {
    return Check{std::move(name), std::move(ref), ok ? Status::pass : Status::fail, std::move(witness)};
}

const char* status_name(Status s);
bool all_pass(const std::vector<Check>& checks);

nlohmann::json scalar_json(const CycloScalar& s);
nlohmann::json scalar_json(const ModPScalar& s);
CycloScalar scalar_from_json(const RootParams* rp, const nlohmann::json& j);

nlohmann::json checks_json(const std::vector<Check>& checks);
nlohmann::json report_json(const nlohmann::json& config, const std::vector<Check>& checks);

}  // namespace qfrob
