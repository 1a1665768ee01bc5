#pragma once

#include <json.hpp>

#include "howe/cores.hpp"
#include "howe/uniform.hpp"

namespace howe {

/// {"Z", "Zp", "sign", "kind", "pairs": [[lam, lamp], ...]}
nlohmann::json to_json(const RelationTable& t);

struct CoreReport {
    SpecialSymbol z;
    SpecialSymbol zp;
    CoreResult psi0;
    CoreResult psi0_prime;
    bool one_to_one = false;
};

/// Throws CoreStructureError when a structural check fails.
CoreReport core_report(const SpecialSymbol& z, const SpecialSymbol& zp);
/// {"Z", "Zp", "D_nonempty", "psi0": [...], "psi0_prime": [...], "one_to_one"}
nlohmann::json to_json(const CoreReport& r);

/// [{"Z", "Zp", "lam", "lamp", "num", "log2den"}, ...] in key order.
nlohmann::json to_json(const UniformVector& v);
UniformVector uniform_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CharacterVector& v);

}  // namespace howe
