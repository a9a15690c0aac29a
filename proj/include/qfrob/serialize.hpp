#pragma once

#include "json.hpp"
#include "qfrob/hyper_mod.hpp"
#include "qfrob/uq_sl2.hpp"

namespace qfrob {

// Sparse coordinate lists: [[[a, delta, t, b], scalar], ...] for U_B and
// [[[a, i, c], scalar], ...] for the classical and modular algebras.
nlohmann::json pbw_json(const PBWElement& x);
PBWElement pbw_from_json(const RootParams* rp, const nlohmann::json& j, PBWBounds b);

nlohmann::json classical_json(const ClassicalElement& x);
ClassicalElement classical_from_json(const RootParams* rp, const nlohmann::json& j);

nlohmann::json mod_json(const ModElement& x);
ModElement mod_from_json(long p, const nlohmann::json& j);

}  // namespace qfrob
