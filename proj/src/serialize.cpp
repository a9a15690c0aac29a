#include "qfrob/serialize.hpp"

#include "qfrob/report.hpp"

namespace qfrob {

namespace {

const nlohmann::json& entries(const nlohmann::json& j) {
    if (!j.is_array()) throw ConfigError("element must be a JSON array of [index, scalar] pairs");
    for (const auto& e : j)
        if (!e.is_array() || e.size() != 2 || !e[0].is_array())
            throw ConfigError("each element entry must be [index, scalar]: " + e.dump());
    return j;
}

std::vector<long> index_of(const nlohmann::json& k, size_t n) {
    if (k.size() != n) throw ConfigError("index " + k.dump() + " must have " + std::to_string(n) + " entries");
    std::vector<long> v;
    for (const auto& x : k) {
        if (!x.is_number_integer()) throw ConfigError("index entries must be integers: " + k.dump());
        v.push_back(x.get<long>());
        if (v.back() < 0) throw ConfigError("index entries must be non-negative: " + k.dump());
    }
    return v;
}

}  // namespace

nlohmann::json pbw_json(const PBWElement& x) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, v] : x.coords()) {
        const auto [a, d, t, b] = k;
        out.push_back({{a, d, t, b}, scalar_json(v)});
    }
    return out;
}

PBWElement pbw_from_json(const RootParams* rp, const nlohmann::json& j, PBWBounds b) {
    std::map<PBWElement::Coord, CycloScalar> c;
    for (const auto& e : entries(j)) {
        auto i = index_of(e[0], 4);
        if (i[1] > 1) throw ConfigError("delta must be 0 or 1");
        auto key = std::make_tuple(static_cast<int>(i[0]), static_cast<int>(i[1]), i[2], static_cast<int>(i[3]));
        auto it = c.emplace(key, CycloScalar(rp)).first;
        it->second += scalar_from_json(rp, e[1]);
    }
    return PBWElement::from_coords(rp, c, b);
}

nlohmann::json classical_json(const ClassicalElement& x) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, v] : x.coords()) {
        const auto [a, i, c] = k;
        out.push_back({{a, i, c}, scalar_json(v)});
    }
    return out;
}

ClassicalElement classical_from_json(const RootParams* rp, const nlohmann::json& j) {
    const CycloRing ring{rp};
    ClassicalElement x(ring);
    for (const auto& e : entries(j)) {
        auto i = index_of(e[0], 3);
        x += ClassicalElement::basis(ring, static_cast<int>(i[0]), static_cast<int>(i[1]), static_cast<int>(i[2]))
                 .scaled(scalar_from_json(rp, e[1]));
    }
    return x;
}

nlohmann::json mod_json(const ModElement& x) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, v] : x.coords()) {
        const auto [a, i, c] = k;
        out.push_back({{a, i, c}, v.value()});
    }
    return out;
}

ModElement mod_from_json(long p, const nlohmann::json& j) {
    const PrimeField f{p};
    ModElement x(f);
    for (const auto& e : entries(j)) {
        auto i = index_of(e[0], 3);
        if (!e[1].is_number_integer()) throw ConfigError("modular coefficients must be integers");
        x += mod_basis(p, static_cast<int>(i[0]), static_cast<int>(i[1]), static_cast<int>(i[2]))
                 .scaled(f.from_int(mpz_class(e[1].get<long>())));
    }
    return x;
}

}  // namespace qfrob
