#include "howe/json_io.hpp"

#include "howe/errors.hpp"

namespace howe {

using nlohmann::json;

json to_json(const RelationTable& t) {
    json pairs = json::array();
    for (const auto& [l, r] : t.pairs) pairs.push_back({to_string(l), to_string(r)});
    return {{"Z", to_string(t.z.symbol())},
            {"Zp", to_string(t.zp.symbol())},
            {"sign", sign_text(t.sign())},
            {"kind", kind_text(t.kind)},
            {"pairs", pairs}};
}

CoreReport core_report(const SpecialSymbol& z, const SpecialSymbol& zp) {
    CoreReport r{z, zp, core(z, zp), core_prime(z, zp), false};
    r.one_to_one = r.psi0_prime.d_nonempty && r.psi0.pairs.empty() && r.psi0_prime.pairs.empty();
    return r;
}

json to_json(const CoreReport& r) {
    const auto pairs = [](const PairSet& ps) {
        json a = json::array();
        for (const auto& p : ps) a.push_back(to_string(p));
        return a;
    };
    return {{"Z", to_string(r.z.symbol())},
            {"Zp", to_string(r.zp.symbol())},
            {"D_nonempty", r.psi0_prime.d_nonempty},
            {"psi0", pairs(r.psi0.pairs)},
            {"psi0_prime", pairs(r.psi0_prime.pairs)},
            {"one_to_one", r.one_to_one}};
}

json to_json(const UniformVector& v) {
    json out = json::array();
    for (const auto& [k, c] : v.entries())
        out.push_back({{"Z", to_string(k.z)},
                       {"Zp", to_string(k.zp)},
                       {"lam", to_string(k.lam)},
                       {"lamp", to_string(k.lamp)},
                       {"num", c.num()},
                       {"log2den", c.log2den()}});
    return out;
}

UniformVector uniform_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("uniform vector JSON must be an array");
    UniformVector v;
    try {
        for (const auto& e : j) {
            TensorKey k{parse_symbol(e.at("Z").get<std::string>()), parse_symbol(e.at("Zp").get<std::string>()),
                        parse_symbol(e.at("lam").get<std::string>()), parse_symbol(e.at("lamp").get<std::string>())};
            v.add(k, Dyadic(e.at("num").get<std::int64_t>(), e.at("log2den").get<int>()));
        }
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad uniform vector entry: ") + ex.what());
    }
    return v;
}

json to_json(const CharacterVector& v) {
    json out = json::array();
    for (const auto& [lam, c] : v.entries())
        out.push_back({{"lam", to_string(lam)}, {"num", c.num()}, {"log2den", c.log2den()}});
    return out;
}

}  // namespace howe
