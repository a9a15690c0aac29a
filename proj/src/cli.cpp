#include "qfrob/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qfrob/hyper_mod.hpp"
#include "qfrob/identities.hpp"
#include "qfrob/repr.hpp"
#include "qfrob/serialize.hpp"
#include "qfrob/suites.hpp"

namespace qfrob {

namespace {

using nlohmann::json;

enum class Format { json, csv, text };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw ConfigError("format must be json, csv or text");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}

std::string join_csv(const std::vector<std::string>& v) {
    std::string o;
    for (size_t i = 0; i < v.size(); ++i) o += (i ? "," : "") + csv_field(v[i]);
    return o;
}

// ---------------------------------------------------------------- options shared by subcommands

struct Common {
    std::optional<int> l;
    std::optional<long> p;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    bool exhaustive = false;
    bool serial = false;
    std::string format = "json";
    std::string output;
    std::optional<int> a_max;
    std::optional<long> t_max;
};

void add_run_flags(CLI::App* sc, Common& c) {
    sc->add_option("--seed", c.seed, "seed for sampled checks (QFROB_SEED overrides)");
    sc->add_option("--samples", c.samples, "number of sampled cases (default 64)");
    sc->add_flag("--exhaustive", c.exhaustive, "enumerate instead of sampling where bounded");
    sc->add_flag("--serial", c.serial, "run sample loops without OpenMP");
}

void add_io_flags(CLI::App* sc, Common& c) {
    sc->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sc->add_option("--output,-o", c.output, "write the result to this file");
}

std::uint64_t env_seed(std::optional<std::uint64_t> flag) {
    if (const char* e = std::getenv("QFROB_SEED"); e && *e) {
        try {
            size_t pos = 0;
            auto v = std::stoull(e, &pos);
            if (pos != std::string(e).size()) throw std::invalid_argument(e);
            return v;
        } catch (const std::exception&) {
            throw ConfigError(std::string("QFROB_SEED is not an unsigned integer: ") + e);
        }
    }
    return flag.value_or(0);
}

SuiteConfig base_config(const Common& c) {
    SuiteConfig cfg;
    if (c.l) cfg.l = *c.l;
    cfg.p = c.p;
    cfg.opt.seed = env_seed(c.seed);
    cfg.opt.samples = c.samples.value_or(64);
    cfg.opt.exhaustive = c.exhaustive;
    cfg.exec = c.serial ? Exec::serial : Exec::parallel;
    if (c.a_max) cfg.a_max = *c.a_max;
    if (c.t_max) cfg.t_max = *c.t_max;
    return cfg;
}

json config_json(const SuiteConfig& cfg, const std::vector<std::string>& suites, const std::string& format) {
    json j = {{"l", cfg.l},
              {"cartan", cfg.cartan},
              {"bounds", {{"A_max", cfg.a_max}, {"T_max", cfg.t_max}, {"module_cap", cfg.module_cap}}},
              {"suites", suites},
              {"seed", cfg.opt.seed},
              {"samples", cfg.opt.samples},
              {"exhaustive", cfg.opt.exhaustive},
              {"format", format}};
    j["p"] = cfg.p ? json(*cfg.p) : json(nullptr);
    return j;
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw ConfigError("cannot open output file " + c.output);
    f << text;
}

int emit_report(const json& config, const std::vector<Check>& checks, const Common& c, std::ostream& out) {
    const json rep = report_json(config, checks);
    std::ostringstream s;
    switch (parse_format(c.format)) {
        case Format::json: s << rep.dump(2) << "\n"; break;
        case Format::csv:
            s << "name,paper_ref,status,witness\n";
            for (const auto& ch : checks)
                s << join_csv({ch.name, ch.paper_ref, status_name(ch.status),
                               ch.witness.is_null() ? "" : ch.witness.dump()})
                  << "\n";
            break;
        case Format::text:
            for (const auto& ch : checks) {
                s << "[" << status_name(ch.status) << "] " << ch.name;
                if (ch.status != Status::pass && !ch.witness.is_null()) s << "  " << ch.witness.dump();
                s << "\n";
            }
            s << "summary: " << rep["summary"].dump() << "\n";
            break;
    }
    emit(s.str(), c, out);
    if (!c.output.empty()) out << rep["summary"].dump() << "\n";
    return all_pass(checks) ? 0 : 1;
}

// ---------------------------------------------------------------- tables

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    json as_json;
};

void render_table(const Table& t, const Common& c, std::ostream& out) {
    std::ostringstream s;
    switch (parse_format(c.format)) {
        case Format::json: s << t.as_json.dump(2) << "\n"; break;
        case Format::csv:
            s << join_csv(t.header) << "\n";
            for (const auto& r : t.rows) s << join_csv(r) << "\n";
            break;
        case Format::text: {
            std::vector<size_t> w(t.header.size(), 0);
            for (size_t i = 0; i < w.size(); ++i) w[i] = t.header[i].size();
            for (const auto& r : t.rows)
                for (size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
            auto line = [&](const std::vector<std::string>& r) {
                for (size_t i = 0; i < r.size(); ++i) {
                    s << r[i];
                    if (i + 1 < r.size()) s << std::string(w[i] - r[i].size() + 2, ' ');
                }
                s << "\n";
            };
            line(t.header);
            for (const auto& r : t.rows) line(r);
            break;
        }
    }
    emit(s.str(), c, out);
}

std::string big_key(const BigTorusElement::Key& k) {
    return std::string(k.first ? "K" : "1") + "[K;" + std::to_string(k.second) + "]";
}

Table torus_table(const RootParams* rp, bool prime, const std::string& basis) {
    const long l = rp->l;
    Table t;
    t.as_json = {{"kind", prime ? "kappa_prime" : "kappa"}, {"l", l}, {"basis", basis}, {"rows", json::array()}};
    std::vector<SmallTorusElement> els;
    for (long n = 0; n < 2 * l; ++n) els.push_back(prime ? kappa_prime(rp, n) : kappa(rp, n));
    t.header = {"n"};
    if (basis == "small") {
        for (long i = 0; i < 2 * l; ++i) t.header.push_back("K^" + std::to_string(i));
        for (long n = 0; n < 2 * l; ++n) {
            std::vector<std::string> r{std::to_string(n)};
            json coords = json::array();
            for (const auto& c : els[n].c) {
                r.push_back(c.to_string());
                coords.push_back(scalar_json(c));
            }
            t.rows.push_back(std::move(r));
            t.as_json["rows"].push_back({{"n", n}, {"coords", coords}});
        }
        return t;
    }
    std::vector<BigTorusElement> bigs;
    std::set<BigTorusElement::Key> keys;
    for (const auto& e : els) {
        bigs.push_back(big_from_fn(torus_fn(e), 2 * l));
        for (const auto& [k, v] : bigs.back().coords) keys.insert(k);
    }
    for (const auto& k : keys) t.header.push_back(big_key(k));
    for (long n = 0; n < 2 * l; ++n) {
        std::vector<std::string> r{std::to_string(n)};
        json coords = json::array();
        for (const auto& k : keys) {
            auto it = bigs[n].coords.find(k);
            CycloScalar v = it == bigs[n].coords.end() ? CycloScalar(rp) : it->second;
            r.push_back(v.to_string());
            if (!v.is_zero()) coords.push_back({{k.first, k.second}, scalar_json(v)});
        }
        t.rows.push_back(std::move(r));
        t.as_json["rows"].push_back({{"n", n}, {"dyadic", bigs[n].all_dyadic()}, {"coords", coords}});
    }
    return t;
}

Table mu_table(long p, int r) {
    const long N = int_pow(p, r);
    Table t;
    t.as_json = {{"kind", "mu"}, {"p", p}, {"r", r}, {"rows", json::array()}};
    t.header = {"n"};
    for (long i = 0; i < N; ++i) t.header.push_back("binom(H," + std::to_string(i) + ")");
    for (long n = 0; n < N; ++n) {
        const auto m = mu(p, n, r);
        std::vector<std::string> row{std::to_string(n)};
        json coords = json::array();
        for (const auto& c : m.c) {
            row.push_back(std::to_string(c.value()));
            coords.push_back(c.value());
        }
        t.rows.push_back(std::move(row));
        t.as_json["rows"].push_back({{"n", n}, {"coords", coords}});
    }
    return t;
}

Table alpha_table(const RootParams* rp, long m, long tt, long c) {
    Table t;
    t.as_json = {{"kind", "alpha"}, {"l", rp->l}, {"m", m}, {"t", tt}, {"c", c}, {"rows", json::array()}};
    t.header = {"delta", "n", "alpha"};
    for (const auto& [k, v] : alpha_coefficients(rp, m, tt, c)) {
        t.rows.push_back({std::to_string(k.first), std::to_string(k.second), v.to_string()});
        t.as_json["rows"].push_back({{"delta", k.first}, {"n", k.second}, {"alpha", scalar_json(v)}});
    }
    return t;
}

const RootParams* checked_rp(std::optional<int> l) {
    if (!l) throw ConfigError("--l is required");
    SuiteConfig cfg;
    cfg.l = *l;
    cfg.validate();
    return make_root_params(*l);
}

long checked_p(std::optional<long> p) {
    if (!p) throw ConfigError("--p is required");
    if (*p < 2 || !is_prime(*p)) throw ConfigError("p must be prime");
    return *p;
}

json parse_json_arg(const std::string& s, const char* what) {
    if (s.empty()) throw ConfigError(std::string("--") + what + " is required");
    try {
        return json::parse(s);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("--") + what + " is not valid JSON: " + e.what());
    }
}

// ---------------------------------------------------------------- config file

void apply_config_file(const std::string& path, SuiteConfig& cfg, std::vector<std::string>& suites, Common& c) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config file " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error& e) {
        throw ConfigError("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
    static const std::set<std::string> known = {"l",    "p",       "cartan",     "bounds", "suites", "output",
                                                "format", "seed", "samples", "exhaustive"};
    try {
        for (const auto& [k, v] : j.items())
            if (!known.count(k)) throw ConfigError("unknown config field '" + k + "'");
        if (j.contains("l")) cfg.l = j["l"].get<int>();
        if (j.contains("p") && !j["p"].is_null()) cfg.p = j["p"].get<long>();
        if (j.contains("cartan")) cfg.cartan = j["cartan"].get<CartanMatrix>();
        if (j.contains("bounds")) {
            const auto& b = j["bounds"];
            for (const auto& [k, v] : b.items())
                if (k != "A_max" && k != "T_max" && k != "module_cap")
                    throw ConfigError("unknown bounds field '" + k + "'");
            if (b.contains("A_max")) cfg.a_max = b["A_max"].get<int>();
            if (b.contains("T_max")) cfg.t_max = b["T_max"].get<long>();
            if (b.contains("module_cap")) cfg.module_cap = b["module_cap"].get<size_t>();
        }
        if (j.contains("suites")) suites = j["suites"].get<std::vector<std::string>>();
        if (j.contains("output") && c.output.empty()) c.output = j["output"].get<std::string>();
        if (j.contains("format")) c.format = j["format"].get<std::string>();
        if (j.contains("seed")) cfg.opt.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("samples")) cfg.opt.samples = j["samples"].get<int>();
        if (j.contains("exhaustive")) cfg.opt.exhaustive = j["exhaustive"].get<bool>();
    } catch (const json::exception& e) {
        throw ConfigError("bad config field: " + std::string(e.what()));
    }
    parse_format(c.format);
}

// ---------------------------------------------------------------- element printing

std::string pbw_text(const PBWElement& x) {
    std::string s;
    for (const auto& [k, v] : x.coords()) {
        const auto [a, d, t, b] = k;
        if (!s.empty()) s += " + ";
        s += "(" + v.to_string() + ")";
        if (a) s += " F^(" + std::to_string(a) + ")";
        if (d) s += " K";
        if (t) s += " [K;" + std::to_string(t) + "]";
        if (b) s += " E^(" + std::to_string(b) + ")";
    }
    return s.empty() ? "0" : s;
}

template <class E, class V>
std::string hyper_text(const E& x, V&& value) {
    std::string s;
    for (const auto& [k, v] : x.coords()) {
        const auto [a, i, c] = k;
        if (!s.empty()) s += " + ";
        s += "(" + value(v) + ")";
        if (a) s += " X^(" + std::to_string(a) + ")";
        if (i) s += " binom(H," + std::to_string(i) + ")";
        if (c) s += " Y^(" + std::to_string(c) + ")";
    }
    return s.empty() ? "0" : s;
}

void emit_element(const json& j, const std::string& text, const Common& c, std::ostream& out) {
    switch (parse_format(c.format)) {
        case Format::json: emit(j.dump(2) + "\n", c, out); break;
        case Format::text: emit(text + "\n", c, out); break;
        case Format::csv: {
            std::ostringstream s;
            s << "index,scalar\n";
            for (const auto& e : j.at("result")) s << csv_field(e[0].dump()) << "," << csv_field(e[1].dump()) << "\n";
            emit(s.str(), c, out);
            break;
        }
    }
}

json character_json(const std::map<long, int>& ch) {
    json a = json::array();
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) a.push_back({{"weight", it->first}, {"multiplicity", it->second}});
    return a;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qfrob: exact checks for quantum sl2 at a root of unity and its quantum Frobenius"};
    app.require_subcommand(1);
    Common c;
    std::vector<std::string> suites;
    std::string config_path;
    std::vector<std::vector<int>> cartan;
    std::optional<size_t> module_cap;

    auto* verify = app.add_subcommand("verify", "run verification suites and write a report");
    verify->add_option("--l", c.l, "odd order of the root of unity");
    verify->add_option("--p", c.p, "prime for the modular suites");
    verify->add_option("--suite", suites, "suite name (repeatable): torus, splitting, identities, modular, "
                                          "contraction, hopf, blocks");
    verify->add_option("--config", config_path, "JSON config file; flags override it");
    verify->add_option("--a-max", c.a_max, "divided-power bound A_max");
    verify->add_option("--t-max", c.t_max, "torus bound T_max");
    verify->add_option("--module-cap", module_cap, "module dimension cap");
    verify->add_option("--cartan", cartan, "Cartan matrix rows, e.g. --cartan 2,-1 --cartan -1,2")->delimiter(',');
    add_run_flags(verify, c);
    add_io_flags(verify, c);

    std::string kind, basis = "big";
    std::optional<int> r;
    std::optional<long> m, t, cshift;
    auto* table = app.add_subcommand("table", "emit a coefficient table");
    table->add_option("kind", kind, "kappa, kappa_prime, mu or alpha")->required();
    table->add_option("--l", c.l);
    table->add_option("--p", c.p);
    table->add_option("--r", r);
    table->add_option("--m", m);
    table->add_option("--t", t);
    table->add_option("--c", cshift);
    table->add_option("--basis", basis, "big (K^delta[K;t]) or small (K^i)")->check(CLI::IsMember({"big", "small"}));
    add_io_flags(table, c);

    int sigma = 1;
    auto* contract_cmd = app.add_subcommand("contract", "character tables of V(m) before and after contraction");
    contract_cmd->add_option("--m", m, "highest weight")->required();
    contract_cmd->add_option("--l", c.l)->required();
    contract_cmd->add_option("--sigma", sigma, "sign of the K-action")->check(CLI::IsMember({1, -1}));
    add_io_flags(contract_cmd, c);

    auto* ident = app.add_subcommand("identities", "polynomial identity and nullity checks");
    ident->add_option("--l", c.l)->required();
    add_run_flags(ident, c);
    add_io_flags(ident, c);

    std::string xs, ys;
    auto* mul = app.add_subcommand("mul", "product of two U_B elements in PBW normal form");
    mul->add_option("--l", c.l)->required();
    mul->add_option("--x", xs, "[[[a,delta,t,b], scalar], ...]")->required();
    mul->add_option("--y", ys)->required();
    mul->add_option("--a-max", c.a_max);
    mul->add_option("--t-max", c.t_max);
    add_io_flags(mul, c);

    auto* fr = app.add_subcommand("fr", "quantum Frobenius of a U_B element");
    fr->add_option("--l", c.l)->required();
    fr->add_option("--x", xs)->required();
    fr->add_option("--a-max", c.a_max);
    fr->add_option("--t-max", c.t_max);
    add_io_flags(fr, c);

    auto* phic = app.add_subcommand("phi", "splitting of a classical element");
    phic->add_option("--l", c.l)->required();
    phic->add_option("--x", xs, "[[[a,i,c], scalar], ...]")->required();
    phic->add_option("--a-max", c.a_max);
    phic->add_option("--t-max", c.t_max);
    add_io_flags(phic, c);

    int va = 1, vb = 1;
    auto* van = app.add_subcommand("verify-vanishing", "kappa_{-s}[K;2s-la-lb;s] and the nullity families");
    van->add_option("--l", c.l)->required();
    van->add_option("--a", va)->check(CLI::Range(0, 8));
    van->add_option("--b", vb)->check(CLI::Range(0, 8));
    add_io_flags(van, c);

    auto* mut = app.add_subcommand("mu-table", "mu_n^(r) in the basis binom(H,i)");
    mut->add_option("--p", c.p)->required();
    mut->add_option("--r", r);
    add_io_flags(mut, c);

    auto* vmp = app.add_subcommand("verify-modular-phi", "modular idempotents and splitting");
    vmp->add_option("--p", c.p)->required();
    add_run_flags(vmp, c);
    add_io_flags(vmp, c);

    int br = 1, bs = 1;
    auto* blocks = app.add_subcommand("blocks", "block decompositions at dimension level");
    blocks->add_option("--p", c.p);
    blocks->add_option("--l", c.l);
    blocks->add_option("--r", br)->check(CLI::Range(1, 2));
    blocks->add_option("--s", bs)->check(CLI::Range(1, 2));
    add_io_flags(blocks, c);

    std::vector<std::string> argv_store = args;
    argv_store.insert(argv_store.begin(), "qfrob");
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            SuiteConfig cfg = base_config(c);
            std::vector<std::string> chosen = suites;
            if (!config_path.empty()) {
                std::vector<std::string> from_file;
                Common file_c = c;
                apply_config_file(config_path, cfg, from_file, file_c);
                c.format = verify->count("--format") ? c.format : file_c.format;
                c.output = file_c.output;
                if (chosen.empty()) chosen = from_file;
                if (c.l) cfg.l = *c.l;
                if (c.p) cfg.p = c.p;
                if (c.seed) cfg.opt.seed = *c.seed;
                if (c.samples) cfg.opt.samples = *c.samples;
                if (c.exhaustive) cfg.opt.exhaustive = true;
                if (c.a_max) cfg.a_max = *c.a_max;
                if (c.t_max) cfg.t_max = *c.t_max;
                cfg.opt.seed = std::getenv("QFROB_SEED") ? env_seed(std::nullopt) : cfg.opt.seed;
            }
            if (!cartan.empty()) cfg.cartan = cartan;
            if (module_cap) cfg.module_cap = *module_cap;
            if (chosen.empty()) chosen = suite_names();
            for (const auto& s : chosen)
                if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
                    throw ConfigError("unknown suite '" + s + "'");
            cfg.validate();
            for (const auto& s : chosen)
                if (s == "modular" || s == "blocks") (void)cfg.modular_p();
            std::vector<Check> checks;
            for (const auto& s : chosen) {
                auto v = run_suite(s, cfg);
                for (auto& ch : v) ch.name = s + ": " + ch.name;
                checks.insert(checks.end(), v.begin(), v.end());
            }
            return emit_report(config_json(cfg, chosen, c.format), checks, c, out);
        }
        if (*table) {
            Table tb;
            if (kind == "kappa" || kind == "kappa_prime") {
                tb = torus_table(checked_rp(c.l), kind == "kappa_prime", basis);
            } else if (kind == "mu") {
                const long p = checked_p(c.p);
                const int rr = r.value_or(1);
                if (rr < 1 || int_pow(p, rr) > 4096) throw ConfigError("need r >= 1 and p^r <= 4096");
                tb = mu_table(p, rr);
            } else if (kind == "alpha") {
                const auto* rp = checked_rp(c.l);
                if (!m || !t) throw ConfigError("alpha needs --m and --t");
                if (*m < 0 || *t < 0) throw ConfigError("m and t must be non-negative");
                tb = alpha_table(rp, *m, *t, cshift.value_or(0));
            } else {
                throw ConfigError("unknown table kind '" + kind + "'");
            }
            render_table(tb, c, out);
            return 0;
        }
        if (*contract_cmd) {
            const auto* rp = checked_rp(c.l);
            if (*m < 0) throw ConfigError("m must be >= 0");
            if (static_cast<size_t>(*m) + 1 > kModuleCap) throw ConfigError("module exceeds the dimension cap");
            const auto mod = weyl_module(rp, *m, sigma);
            const auto con = contract(mod);
            const auto before = mod.character(), after = con.character();
            json j = {{"l", rp->l},
                      {"m", *m},
                      {"sigma", sigma},
                      {"before", character_json(before)},
                      {"after", character_json(after)},
                      {"dim_before", mod.dim()},
                      {"dim_after", con.dim()}};
            Table tb;
            tb.as_json = j;
            tb.header = {"module", "weight", "multiplicity"};
            for (auto it = before.rbegin(); it != before.rend(); ++it)
                tb.rows.push_back({"V(" + std::to_string(*m) + ")", std::to_string(it->first), std::to_string(it->second)});
            for (auto it = after.rbegin(); it != after.rend(); ++it)
                tb.rows.push_back({"contracted", std::to_string(it->first), std::to_string(it->second)});
            render_table(tb, c, out);
            return 0;
        }
        if (*ident) {
            SuiteConfig cfg = base_config(c);
            cfg.validate();
            return emit_report(config_json(cfg, {"identities"}, c.format), identities_suite(cfg), c, out);
        }
        if (*mul || *fr || *phic) {
            const auto* rp = checked_rp(c.l);
            SuiteConfig cfg = base_config(c);
            const PBWBounds bd = cfg.bounds(3 * rp->l, 4L * rp->l);
            if (*mul) {
                const auto x = pbw_from_json(rp, parse_json_arg(xs, "x"), bd);
                const auto y = pbw_from_json(rp, parse_json_arg(ys, "y"), bd);
                const auto z = pbw_mul(x, y);
                emit_element({{"l", rp->l}, {"result", pbw_json(z)}}, pbw_text(z), c, out);
            } else if (*fr) {
                const auto x = pbw_from_json(rp, parse_json_arg(xs, "x"), bd);
                const auto z = frobenius(x);
                emit_element({{"l", rp->l}, {"result", classical_json(z)}},
                             hyper_text(z, [](const CycloScalar& v) { return v.to_string(); }), c, out);
            } else {
                const auto x = classical_from_json(rp, parse_json_arg(xs, "x"));
                const auto z = phi(x, bd);
                emit_element({{"l", rp->l}, {"result", pbw_json(z)}}, pbw_text(z), c, out);
            }
            return 0;
        }
        if (*van) {
            const auto* rp = checked_rp(c.l);
            auto checks = verify_fundamental_vanishing(rp, va, vb);
            if (va > 0 && vb > 0) {
                auto nf = nullity_suite(rp, va, vb);
                checks.insert(checks.end(), nf.begin(), nf.end());
            }
            SuiteConfig cfg = base_config(c);
            json conf = config_json(cfg, {"vanishing"}, c.format);
            conf["a"] = va;
            conf["b"] = vb;
            return emit_report(conf, checks, c, out);
        }
        if (*mut) {
            const long p = checked_p(c.p);
            const int rr = r.value_or(1);
            if (rr < 1 || int_pow(p, rr) > 4096) throw ConfigError("need r >= 1 and p^r <= 4096");
            render_table(mu_table(p, rr), c, out);
            return 0;
        }
        if (*vmp) {
            const long p = checked_p(c.p);
            SuiteConfig cfg = base_config(c);
            cfg.p = p;
            cfg.l = (p % 2 && p >= 3) ? static_cast<int>(p) : 3;
            cfg.validate();
            return emit_report(config_json(cfg, {"modular"}, c.format), modular_suite(cfg), c, out);
        }
        if (*blocks) {
            if (!c.p && !c.l) throw ConfigError("blocks needs --p or --l");
            std::vector<Check> checks;
            SuiteConfig cfg = base_config(c);
            if (c.l) {
                const auto* rp = checked_rp(c.l);
                if (rp->l > 9) throw ConfigError("small quantum group blocks are supported for l <= 9");
                for (long n = 0; n < 2L * rp->l; ++n) {
                    auto v = ideal_dimension_check(rp, n);
                    checks.insert(checks.end(), v.begin(), v.end());
                }
            }
            if (c.p) {
                const long p = checked_p(c.p);
                if (bs > br) throw ConfigError("need s <= r");
                if (int_pow(p, 3 * br) > 20000) throw ConfigError("Dist(G_r) too large for p^(3r) <= 20000");
                auto v = block_decomposition_check(p, br, bs);
                checks.insert(checks.end(), v.begin(), v.end());
            }
            json conf = config_json(cfg, {"blocks"}, c.format);
            conf["r"] = br;
            conf["s"] = bs;
            return emit_report(conf, checks, c, out);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TruncationError& e) {
        err << "error: bound exceeded: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace qfrob
