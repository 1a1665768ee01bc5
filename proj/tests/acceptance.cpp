#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "howe/cores.hpp"
#include "howe/errors.hpp"
#include "howe/regular_maps.hpp"
#include "howe/uniform.hpp"

using namespace howe;

namespace {

constexpr int kMaxRank = 5;

struct Tally {
    long cases = 0;
    long violations = 0;
    std::string first;

    void check(bool ok, const std::function<std::string()>& what) {
        ++cases;
        if (!ok && violations++ == 0) first = what();
    }
};

std::string text(const SpecialSymbol& z, const SpecialSymbol& zp) {
    return to_string(z.symbol()) + " " + to_string(zp.symbol());
}

int failed = 0;

void report(int id, const char* title, const Tally& t, double seconds, double budget) {
    const bool ok = t.violations == 0 && seconds <= budget;
    failed += !ok;
    std::printf("criterion %d: %s  %s  (%ld cases, %ld violations, %.2fs of %.0fs budget)%s%s\n", id, ok ? "PASS" : "FAIL",
                title, t.cases, t.violations, seconds, budget, t.first.empty() ? "" : "  first: ", t.first.c_str());
}

double since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// |P_2(n)| from prod_k (1 - x^k)^{-2}
std::vector<long> bipartition_counts(int nmax) {
    std::vector<long> c(static_cast<std::size_t>(nmax) + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= nmax; ++k)
        for (int rep = 0; rep < 2; ++rep)
            for (int n = k; n <= nmax; ++n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - k)];
    return c;
}

std::vector<Symbol> sorted(std::vector<Symbol> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const auto pairs = special_pairs(kMaxRank, kMaxRank);

    {
        const auto t0 = clock::now();
        Tally t;
        for (const auto& [z, zp] : pairs)
            for (Sign s : {Sign::Plus, Sign::Minus})
                t.check(verify_theorem(z, zp, s).equal, [&] { return text(z, zp) + " " + sign_text(s); });
        report(1, "main identity, exact, ranks <= 5, both signs", t, since(t0), 120);
    }
    {
        const auto t0 = clock::now();
        Tally t;
        for (const auto& [z, zp] : pairs) {
            if (!size_compatible(z, zp)) continue;
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                const auto bad = cross_check(z, zp, s);
                t.check(bad.empty(), [&] { return text(z, zp) + " " + sign_text(s); });
            }
        }
        report(2, "inequality chains vs definition", t, since(t0), 60);
    }
    {
        const auto t0 = clock::now();
        Tally t;
        for (const auto& [z, zp] : pairs) {
            CoreResult c, cp;
            try {
                c = core(z, zp);
                cp = core_prime(z, zp);
            } catch (const CoreStructureError& e) {
                t.check(false, [&] { return text(z, zp) + ": " + e.what(); });
                continue;
            }
            t.check(true, [] { return std::string(); });
            for (Sign s : {Sign::Plus, Sign::Minus})
                t.check(decomposition_check(z, zp, s), [&] { return "decomposition " + text(z, zp); });
            if (!cp.d_nonempty) continue;
            const auto dz = sub_unions(zp, cp.pairs);
            const auto dzp = sub_unions(z, c.pairs);
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                const RelationKind k = s == Sign::Plus ? RelationKind::BarPlus : RelationKind::BarMinus;
                for (const auto& l : family(z, FamilyKind::Bar)) {
                    const auto f = fiber(z, zp, k, l, Side::Left);
                    if (f.empty()) continue;
                    std::vector<Symbol> expect;
                    for (auto n : dz) expect.push_back(lambda_of(zp, subset_of(zp, f.front()) ^ n));
                    t.check(f == sorted(expect), [&] { return "fiber " + text(z, zp) + " " + to_string(l); });
                }
                for (const auto& r : family(zp, FamilyKind::Bar)) {
                    const auto f = fiber(z, zp, k, r, Side::Right);
                    if (f.empty()) continue;
                    std::vector<Symbol> expect;
                    for (auto m : dzp) expect.push_back(lambda_of(z, subset_of(z, f.front()) ^ m));
                    t.check(f == sorted(expect), [&] { return "fiber " + text(z, zp) + " " + to_string(r); });
                }
            }
        }
        report(3, "cores and fiber decompositions", t, since(t0), 120);
    }
    {
        const auto t0 = clock::now();
        Tally t;
        for (const auto& [z, zp] : pairs) {
            const auto left = family(z, FamilyKind::Bar);
            const auto right = family(zp, FamilyKind::Bar);
            for (const auto& l : left)
                for (const auto& r : right)
                    t.check(related_bar(l, r, Sign::Plus) == related_bar(transpose(l), transpose(r), Sign::Minus),
                            [&] { return "flip " + to_string(l) + " " + to_string(r); });
            if (!is_regular(z) || !is_regular(zp) || !size_compatible(z, zp) || !is_one_to_one(z, zp)) continue;
            const bool fwd = zp.m() == z.m() + 1;
            for (const auto& l : left)
                for (const auto& r : right) {
                    const bool gp = fwd ? theta_plus(z, zp, l) == r : theta_plus(z, zp, r) == l;
                    const bool gm = fwd ? theta_minus(z, zp, l) == r : theta_minus(z, zp, r) == l;
                    t.check(related_bar(l, r, Sign::Plus) == gp && related_bar(l, r, Sign::Minus) == gm,
                            [&] { return "theta " + to_string(l) + " " + to_string(r); });
                }
        }
        report(4, "transpose flip and theta graphs", t, since(t0), 120);
    }
    {
        const auto t0 = clock::now();
        Tally t;
        for (int n = 0; n <= kMaxRank; ++n) {
            for (const auto& z : enumerate_special(n, 1)) {
                for (const auto& sg : family_with_defect(z, 1))
                    t.check(norm2(r_sigma_sp(z, sg)) == Dyadic(1), [&] { return "norm " + to_string(sg); });
                for (const auto& l : family(z, FamilyKind::Sp))
                    t.check(!rho_sharp_sp(z, l).is_zero(), [&] { return "sharp " + to_string(l); });
            }
            for (const auto& zp : enumerate_special(n, 0))
                for (Sign e : {Sign::Plus, Sign::Minus}) {
                    for (const auto& sg : family_with_defect(zp, 0)) {
                        const auto r = r_sigma_orth(zp, sg, e);
                        if (!(is_degenerate(zp) && e == Sign::Minus)) {
                            const Dyadic want = is_degenerate(zp) ? Dyadic(1) : Dyadic(2);
                            t.check(norm2(r) == want, [&] { return "norm " + to_string(sg); });
                        }
                        t.check(r_sigma_orth(zp, transpose(sg), e) == r.scaled(sign_value(e)),
                                [&] { return "sign rule " + to_string(sg); });
                    }
                    for (const auto& l : family(zp, e == Sign::Plus ? FamilyKind::Plus : FamilyKind::Minus)) {
                        const auto v = rho_sharp_orth(zp, l, e);
                        t.check(!v.is_zero() && rho_sharp_orth(zp, transpose(l), e) == v,
                                [&] { return "sharp " + to_string(l); });
                    }
                }
        }
        report(5, "character-vector invariants", t, since(t0), 60);
    }
    {
        const auto t0 = clock::now();
        Tally t;
        for (int n = 0; n <= 4; ++n)
            for (int np = 0; np <= 4; ++np)
                for (Sign s : {Sign::Plus, Sign::Minus})
                    t.check(verify_amr_consistency(n, np, s),
                            [&] { return std::to_string(n) + "," + std::to_string(np) + " " + sign_text(s); });
        report(6, "whole-rank expansion vs block sum, n, n' <= 4", t, since(t0), 120);
    }
    {
        const auto t0 = clock::now();
        Tally t;
        const auto counts = bipartition_counts(8);
        for (int n = 0; n <= 8; ++n)
            t.check(static_cast<long>(enumerate_symbols(n, 1).size()) == counts[static_cast<std::size_t>(n)],
                    [&] { return "|S_{n,1}| n=" + std::to_string(n); });
        for (int n = 0; n <= kMaxRank; ++n) {
            for (const auto& z : enumerate_special(n, 1))
                t.check(family(z, FamilyKind::Sp).size() == (std::size_t{1} << (2 * degree(z))),
                        [&] { return "|S_Z| " + to_string(z.symbol()); });
            for (const auto& zp : enumerate_special(n, 0)) {
                const int d = degree(zp);
                if (d == 0) {
                    t.check(family(zp, FamilyKind::Plus).size() == 1 && family(zp, FamilyKind::Minus).empty(),
                            [&] { return "degenerate " + to_string(zp.symbol()); });
                    continue;
                }
                const std::size_t want = std::size_t{1} << (2 * d - 1);
                t.check(family(zp, FamilyKind::Plus).size() == want && family(zp, FamilyKind::Minus).size() == want,
                        [&] { return "|S+-| " + to_string(zp.symbol()); });
            }
        }
        for (int m = 0; m <= 3; ++m) {
            const auto [z, zp] = model_symbols(m);
            t.check(is_regular(z) && z.defect() == 1 && z.symbol().size() == std::pair{m + 1, m} &&
                        rank(z.symbol()) == m * (m + 1),
                    [&] { return "model Z m=" + std::to_string(m); });
            t.check(is_regular(zp) && zp.defect() == 0 && zp.symbol().size() == std::pair{m, m} &&
                        rank(zp.symbol()) == m * m,
                    [&] { return "model Z' m=" + std::to_string(m); });
        }
        report(7, "counting and model symbols", t, since(t0), 60);
    }
    {
        const auto t0 = clock::now();
        Tally t;
        for (const auto& [z, zp] : pairs) {
            const auto cp = core_prime(z, zp);
            if (!cp.d_nonempty || subset_of(zp, cp.pairs) != zp.all_singles()) continue;
            t.check(theorem_lhs(z, zp, Sign::Minus).is_zero(), [&] { return text(z, zp); });
        }
        report(8, "zero sum when the core fills Z'_I and eps = -", t, since(t0), 60);
    }
    {
        long bad = 0, total = 0, bad_degenerate_plus = 0;
        for (const auto& [z, zp] : pairs)
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                ++total;
                if (verify_theorem(z, zp, s, HalfConvention::Literal).equal) continue;
                ++bad;
                bad_degenerate_plus += is_degenerate(zp) && s == Sign::Plus;
            }
        std::printf("info: literal 1/2 on every D pair fails %ld of %ld cases, %ld of them with degenerate Z' and eps = +\n",
                    bad, total, bad_degenerate_plus);
    }
    return failed == 0 ? 0 : 1;
}
