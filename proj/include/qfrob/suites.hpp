#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfrob/identities.hpp"
#include "qfrob/report.hpp"
#include "qfrob/torus.hpp"
#include "qfrob/uq_sl2.hpp"

namespace qfrob {

struct SuiteConfig {
    int l = 3;
    std::optional<long> p;
    CartanMatrix cartan = {{2}};
    int a_max = 0;   // 0: derived from l
    long t_max = 0;  // 0: derived from l
    size_t module_cap = 400;
    SuiteOptions opt;
    Exec exec = Exec::parallel;

    // throws ConfigError
    void validate() const;
    PBWBounds bounds(int a_floor, long t_floor) const;
    // p for the modular and block suites: explicit p, else l when prime
    long modular_p() const;
};

const std::vector<std::string>& suite_names();
std::vector<Check> run_suite(const std::string& name, const SuiteConfig& cfg);

std::vector<Check> torus_suite(const SuiteConfig& cfg);
std::vector<Check> splitting_suite(const SuiteConfig& cfg);
std::vector<Check> identities_suite(const SuiteConfig& cfg);
std::vector<Check> modular_suite(const SuiteConfig& cfg);
std::vector<Check> contraction_suite(const SuiteConfig& cfg);
std::vector<Check> hopf_suite(const SuiteConfig& cfg);
std::vector<Check> blocks_suite(const SuiteConfig& cfg);

// kappa_n (sign +1) or kappa_bar_n (sign -1) from the closed sum over i < l
TorusFn kappa_closed_form(const RootParams* rp, long n, int sign);

}  // namespace qfrob
