#include "howe/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <optional>

#include "howe/errors.hpp"
#include "howe/json_io.hpp"
#include "howe/properties.hpp"
#include "text_util.hpp"

namespace howe {

namespace {

using nlohmann::json;

constexpr int kDefaultEnvelope = 5;

// Thrown after a command has printed its own report.
struct Exit {
    int code;
};

SpecialSymbol parse_special(const std::string& text) {
    return SpecialSymbol(parse_symbol(text));
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int envelope() {
    const char* env = std::getenv("HOWE_MAX_RANK");
    if (env == nullptr || *env == '\0') return kDefaultEnvelope;
    const int v = detail::parse_int(env);
    if (v < 0) throw ParseError("HOWE_MAX_RANK must be non-negative");
    return v;
}

std::vector<Sign> parse_signs(const std::string& text) {
    std::vector<Sign> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch != ',') {
            cur += ch;
            continue;
        }
        const auto s = parse_sign(detail::trim(cur));
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        cur.clear();
    }
    std::sort(out.begin(), out.end());
    return out;
}

RelationKind resolve_kind(const std::string& kind, const std::string& sign) {
    if (kind == "bar" || kind == "B") {
        if (sign.empty()) throw ParseError("relation kind '" + kind + "' needs a sign (+ or -)");
        const Sign s = parse_sign(sign);
        if (kind == "bar") return s == Sign::Plus ? RelationKind::BarPlus : RelationKind::BarMinus;
        return s == Sign::Plus ? RelationKind::BPlus : RelationKind::BMinus;
    }
    const RelationKind k = parse_kind(kind);
    if (!sign.empty() && (k == RelationKind::D || parse_sign(sign) != sign_of(k)))
        throw ParseError("sign '" + sign + "' conflicts with relation kind '" + kind + "'");
    return k;
}

struct EnumerateArgs {
    int rank = 0;
    int defect = 0;
    bool special = false;
    bool as_json = false;
};

void cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
    if (a.rank < 0) throw ParseError("--rank must be non-negative");
    std::vector<std::string> lines;
    if (a.special) {
        if (a.defect != 0 && a.defect != 1) throw DomainError("special symbols have defect 0 or 1");
        for (const auto& z : enumerate_special(a.rank, a.defect)) lines.push_back(to_string(z.symbol()));
    } else {
        for (const auto& s : enumerate_symbols(a.rank, a.defect)) lines.push_back(to_string(s));
    }
    if (a.as_json) {
        emit(out, json(lines));
        return;
    }
    for (const auto& l : lines) out << l << '\n';
}

struct RelationArgs {
    std::string z;
    std::string zp;
    std::string kind;
    std::string sign;
    bool cross = false;
};

void cmd_relation(const RelationArgs& a, std::ostream& out, std::ostream& err) {
    const auto z = parse_special(a.z);
    const auto zp = parse_special(a.zp);
    const RelationKind kind = resolve_kind(a.kind, a.sign);
    json j = to_json(relation(z, zp, kind));
    int code = kExitOk;
    if (a.cross) {
        json bad = json::array();
        for (const auto& [l, r] : cross_check(z, zp, sign_of(kind))) bad.push_back({to_string(l), to_string(r)});
        if (!bad.empty()) {
            err << "cross-check: " << bad.size() << " mismatches between the inequality criterion and the definition\n";
            code = kExitMismatch;
        }
        j["cross_check"] = {{"sign", sign_text(sign_of(kind))}, {"mismatches", bad}};
    }
    emit(out, j);
    if (code != kExitOk) throw Exit{code};
}

void cmd_cores(const std::string& zt, const std::string& zpt, std::ostream& out) {
    emit(out, to_json(core_report(parse_special(zt), parse_special(zpt))));
}

struct VerifyArgs {
    std::optional<int> nmax;
    std::optional<int> npmax;
    std::optional<int> max_rank;
    std::string signs = "+,-";
    bool amr = false;
    bool literal = false;
};

void cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const int env = a.max_rank ? *a.max_rank : envelope();
    const int nmax = a.nmax.value_or(env);
    const int npmax = a.npmax.value_or(env);
    if (nmax < 0 || npmax < 0) throw ParseError("--nmax and --npmax must be non-negative");
    if (nmax > env || npmax > env)
        throw DomainError("requested ranks exceed the verification envelope " + std::to_string(env) +
                          " (raise it with --max-rank or HOWE_MAX_RANK)");
    const auto signs = parse_signs(a.signs);
    const HalfConvention half = a.literal ? HalfConvention::Literal : HalfConvention::CollapseDegenerate;

    json sign_list = json::array();
    for (Sign s : signs) sign_list.push_back(sign_text(s));
    json verdicts = json::array();
    json failures = json::array();
    long checked = 0;
    for (const auto& [z, zp] : special_pairs(nmax, npmax))
        for (Sign s : signs) {
            const auto res = verify_theorem(z, zp, s, half);
            ++checked;
            verdicts.push_back({{"Z", to_string(z.symbol())},
                                {"Zp", to_string(zp.symbol())},
                                {"sign", sign_text(s)},
                                {"equal", res.equal}});
            if (!res.equal) {
                failures.push_back({{"Z", to_string(z.symbol())},
                                    {"Zp", to_string(zp.symbol())},
                                    {"sign", sign_text(s)},
                                    {"diff", to_json(res.diff)}});
                err << "FAIL " << to_string(z.symbol()) << ' ' << to_string(zp.symbol()) << ' ' << sign_text(s)
                    << ": " << res.diff.size() << " nonzero coefficients in lhs - rhs\n";
            }
        }

    json report = {{"parameters",
                    {{"nmax", nmax},
                     {"npmax", npmax},
                     {"signs", sign_list},
                     {"amr", a.amr},
                     {"half", a.literal ? "literal" : "collapse-degenerate"}}},
                   {"pairs_checked", checked},
                   {"verdicts", verdicts}};
    if (a.amr) {
        json amr = json::array();
        for (int n = 0; n <= nmax; ++n)
            for (int np = 0; np <= npmax; ++np)
                for (Sign s : signs) {
                    const bool ok = verify_amr_consistency(n, np, s, half);
                    amr.push_back({{"n", n}, {"np", np}, {"sign", sign_text(s)}, {"equal", ok}});
                    if (!ok) {
                        const auto diff = amr_uniform(n, np, s, half) - block_sum_lhs(n, np, s, half);
                        failures.push_back({{"n", n}, {"np", np}, {"sign", sign_text(s)}, {"diff", to_json(diff)}});
                        err << "FAIL amr n=" << n << " n'=" << np << ' ' << sign_text(s) << '\n';
                    }
                }
        report["amr_checks"] = amr;
    }
    const bool ok = failures.empty();
    report["failures"] = failures;
    report["ok"] = ok;
    emit(out, report);
    if (!ok) throw Exit{kExitFailure};
}

void cmd_proptest(const std::string& suite, std::uint64_t seed, std::optional<int> max_rank, std::ostream& out,
                  std::ostream& err) {
    SuiteOptions opts;
    opts.seed = seed;
    opts.max_rank = max_rank ? *max_rank : std::min(envelope(), kDefaultEnvelope);
    const auto results = run_suite(suite, opts);
    json rows = json::array();
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.ok();
        json row = {{"suite", r.suite}, {"name", r.name}, {"cases", r.cases}, {"failures", r.failures}};
        if (!r.ok()) {
            row["first_failure"] = r.first_failure;
            err << "FAIL " << r.suite << ": " << r.name << " (" << r.failures << " of " << r.cases
                << "), first: " << r.first_failure << '\n';
        }
        rows.push_back(row);
    }
    emit(out, {{"suite", suite}, {"seed", seed}, {"max_rank", opts.max_rank}, {"properties", rows}, {"ok", ok}});
    if (!ok) throw Exit{kExitFailure};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symbol combinatorics and Howe correspondence checks", "howe"};
    app.require_subcommand(1);

    EnumerateArgs ea;
    auto* en = app.add_subcommand("enumerate", "List symbols of a rank and defect");
    en->add_option("--rank", ea.rank, "rank n")->required();
    en->add_option("--defect", ea.defect, "defect (0 or 1 with --special)")->required();
    en->add_flag("--special", ea.special, "special symbols only");
    en->add_flag("--json", ea.as_json, "JSON array output");

    RelationArgs ra;
    auto* rel = app.add_subcommand("relation", "Relation table between two special symbol families");
    rel->add_option("Z", ra.z, "special symbol of defect 1")->required();
    rel->add_option("Zp", ra.zp, "special symbol of defect 0")->required();
    rel->add_option("kind", ra.kind, "bar, B, bar+, bar-, B+, B- or D")->required();
    rel->add_option("sign", ra.sign, "+ or - for kinds bar and B");
    rel->add_flag("--cross-check", ra.cross, "compare the inequality criterion with the definition");

    std::string cz, czp;
    auto* cores = app.add_subcommand("cores", "Core report for a special pair");
    cores->add_option("Z", cz)->required();
    cores->add_option("Zp", czp)->required();

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Check the main identity over a sweep of special pairs");
    ver->add_option("--nmax", va.nmax, "max rank of Z");
    ver->add_option("--npmax", va.npmax, "max rank of Z'");
    ver->add_option("--max-rank", va.max_rank, "verification envelope (default 5, or HOWE_MAX_RANK)");
    ver->add_option("--signs", va.signs, "comma list of signs")->capture_default_str();
    ver->add_flag("--amr", va.amr, "also check the whole-rank expansion");
    ver->add_flag("--literal-half", va.literal, "apply the factor 1/2 to every pair");

    std::string suite;
    std::uint64_t seed = 1;
    std::optional<int> prank;
    auto* prop = app.add_subcommand("proptest", "Run invariant suites");
    prop->add_option("suite", suite, "partitions, symbols, special, relations, cores, maps, uniform or all")
        ->required();
    prop->add_option("--seed", seed)->capture_default_str();
    prop->add_option("--max-rank", prank, "rank bound for exhaustive sweeps");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*en) cmd_enumerate(ea, out);
        else if (*rel) cmd_relation(ra, out, err);
        else if (*cores) cmd_cores(cz, czp, out);
        else if (*ver) cmd_verify(va, out, err);
        else if (*prop) cmd_proptest(suite, seed, prank, out, err);
    } catch (const Exit& e) {
        return e.code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const CoreStructureError& e) {
        err << "structure violated: " << e.what() << '\n';
        return kExitStructure;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace howe
