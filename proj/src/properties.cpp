#include "howe/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "howe/cores.hpp"
#include "howe/errors.hpp"
#include "howe/regular_maps.hpp"
#include "howe/uniform.hpp"

namespace howe {

namespace {

class Prop {
public:
    Prop(std::vector<PropertyResult>& sink, std::string suite, std::string name) : sink_(sink) {
        r_.suite = std::move(suite);
        r_.name = std::move(name);
    }
    Prop(const Prop&) = delete;
    Prop& operator=(const Prop&) = delete;
    ~Prop() { sink_.push_back(std::move(r_)); }

    void check(bool ok, const std::function<std::string()>& what) {
        ++r_.cases;
        if (ok) return;
        if (r_.failures++ == 0) r_.first_failure = what();
    }

private:
    std::vector<PropertyResult>& sink_;
    PropertyResult r_;
};

std::string sym(const Symbol& s) { return to_string(s); }
std::string sym(const SpecialSymbol& s) { return to_string(s.symbol()); }
std::string pair_text(const SpecialSymbol& z, const SpecialSymbol& zp) { return sym(z) + " " + sym(zp); }

Partition random_partition(std::mt19937_64& rng, int n) {
    std::vector<int> parts;
    while (n > 0) {
        const int cap = parts.empty() ? n : std::min(n, parts.back());
        const int x = std::uniform_int_distribution<int>(1, cap)(rng);
        parts.push_back(x);
        n -= x;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(parts);
}

SinglesSubset random_subset(std::mt19937_64& rng, const SpecialSymbol& z) {
    return {static_cast<std::uint32_t>(rng()) & z.all_singles().mask};
}

std::vector<SinglesSubset> all_subsets(const SpecialSymbol& z) {
    std::vector<SinglesSubset> out;
    for (std::uint32_t m = 0; m <= z.all_singles().mask; ++m) out.push_back({m});
    return out;
}

std::vector<SpecialSymbol> specials_up_to(int max_rank, int d) {
    std::vector<SpecialSymbol> out;
    for (int n = 0; n <= max_rank; ++n)
        for (auto& z : enumerate_special(n, d)) out.push_back(std::move(z));
    return out;
}

std::vector<SpecialPair> compatible_pairs(int max_rank) {
    std::vector<SpecialPair> out;
    for (auto& pr : special_pairs(max_rank, max_rank))
        if (size_compatible(pr.first, pr.second)) out.push_back(std::move(pr));
    return out;
}

bool d_empty(const SpecialSymbol& z, const SpecialSymbol& zp) { return relation(z, zp, RelationKind::D).empty(); }


void suite_partitions(std::vector<PropertyResult>& out, const SuiteOptions& o) {
    const std::string s = "partitions";
    std::mt19937_64 rng(o.seed);
    {
        Prop p(out, s, "transpose is an involution preserving weight");
        for (int n = 0; n <= 10; ++n)
            for (const auto& q : partitions_of(n))
                p.check(transpose(transpose(q)) == q && weight(transpose(q)) == n, [&] { return to_string(q); });
    }
    {
        Prop p(out, s, "precede_transposed agrees with precede on transposes");
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= 3; ++k)
                for (const auto& a : partitions_of(n))
                    for (const auto& b : partitions_of(n + k))
                        p.check(precede_transposed(a, b) == precede(transpose(a), transpose(b)),
                                [&] { return to_string(a) + " vs " + to_string(b); });
    }
    {
        Prop p(out, s, "horizontal_extensions equals the filtered brute force");
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= 3; ++k)
                for (const auto& a : partitions_of(n)) {
                    std::vector<Partition> brute;
                    for (const auto& b : partitions_of(n + k))
                        if (precede_transposed(a, b)) brute.push_back(b);
                    p.check(horizontal_extensions(a, k) == brute,
                            [&] { return to_string(a) + " +" + std::to_string(k); });
                }
    }
    {
        Prop p(out, s, "random partition literals round-trip");
        for (int i = 0; i < 200; ++i) {
            const auto q = random_partition(rng, std::uniform_int_distribution<int>(0, 20)(rng));
            p.check(parse_partition(to_string(q)) == q, [&] { return to_string(q); });
        }
    }
}


void suite_symbols(std::vector<PropertyResult>& out, const SuiteOptions& o) {
    const std::string s = "symbols";
    std::mt19937_64 rng(o.seed);
    {
        Prop p(out, s, "Upsilon is a bijection onto bi-partitions");
        for (int n = 0; n <= 6; ++n)
            for (int beta = -4; beta <= 4; ++beta) {
                const auto syms = enumerate_symbols(n, beta);
                const int k = n - defect_rank_offset(beta);
                const std::size_t expected = k < 0 ? 0 : bipartitions_of(k).size();
                std::set<BiPartition> images;
                bool ranks_ok = true;
                for (const auto& x : syms) {
                    images.insert(upsilon(x));
                    ranks_ok = ranks_ok && rank(x) == n && defect(x) == beta;
                }
                p.check(syms.size() == expected && images.size() == syms.size() && ranks_ok,
                        [&] { return "n=" + std::to_string(n) + " beta=" + std::to_string(beta); });
            }
    }
    {
        Prop p(out, s, "upsilon_inverse inverts upsilon");
        for (int n = 0; n <= 6; ++n)
            for (int beta = -3; beta <= 3; ++beta)
                for (const auto& x : enumerate_symbols(n, beta))
                    p.check(upsilon_inverse(upsilon(x), beta) == x, [&] { return sym(x); });
    }
    {
        Prop p(out, s, "shift equivalence preserves rank and defect");
        for (int n = 0; n <= 5; ++n)
            for (int beta = -2; beta <= 2; ++beta)
                for (const auto& x : enumerate_symbols(n, beta))
                    for (int k = 0; k <= 3; ++k) {
                        const auto raw = inflate(x, k);
                        p.check(reduce(raw) == x && rank(raw) == rank(x) && defect(raw) == defect(x),
                                [&] { return sym(x) + " k=" + std::to_string(k); });
                    }
    }
    {
        Prop p(out, s, "transpose negates defect and keeps rank");
        for (int n = 0; n <= 5; ++n)
            for (int beta = -3; beta <= 3; ++beta)
                for (const auto& x : enumerate_symbols(n, beta)) {
                    const auto t = transpose(x);
                    p.check(defect(t) == -beta && rank(t) == n && transpose(t) == x, [&] { return sym(x); });
                }
    }
    {
        Prop p(out, s, "random symbol literals round-trip");
        for (int i = 0; i < 200; ++i) {
            const BiPartition b{random_partition(rng, std::uniform_int_distribution<int>(0, 8)(rng)),
                                random_partition(rng, std::uniform_int_distribution<int>(0, 8)(rng))};
            const int beta = std::uniform_int_distribution<int>(-4, 4)(rng);
            const auto x = upsilon_inverse(b, beta);
            p.check(parse_symbol(to_string(x)) == x && upsilon(x) == b,
                    [&] { return to_string(b) + " beta=" + std::to_string(beta); });
        }
    }
}


void suite_special(std::vector<PropertyResult>& out, const SuiteOptions& o) {
    const std::string s = "special";
    std::mt19937_64 rng(o.seed);
    std::vector<SpecialSymbol> zs = specials_up_to(o.max_rank, 1);
    const auto zs0 = specials_up_to(o.max_rank, 0);
    zs.insert(zs.end(), zs0.begin(), zs0.end());
    {
        Prop p(out, s, "transpose(Lambda_M) = Lambda_{Z_I minus M}");
        for (const auto& z : zs)
            for (auto m : all_subsets(z))
                p.check(transpose(lambda_of(z, m)) == lambda_of(z, m ^ z.all_singles()),
                        [&] { return sym(z) + " " + format_subset(z, m); });
    }
    {
        Prop p(out, s, "transpose(Lambda_M + Lambda_N) = transpose(Lambda_M) + Lambda_N");
        for (const auto& z : zs)
            for (auto m : all_subsets(z))
                for (auto n : all_subsets(z)) {
                    const auto lm = lambda_of(z, m);
                    const auto ln = lambda_of(z, n);
                    p.check(transpose(add(z, lm, ln)) == add(z, transpose(lm), ln), [&] { return sym(z); });
                }
    }
    {
        Prop p(out, s, "subset_of inverts lambda_of");
        for (const auto& z : zs)
            for (auto m : all_subsets(z)) p.check(subset_of(z, lambda_of(z, m)) == m, [&] { return sym(z); });
    }
    {
        Prop p(out, s, "pairing is bilinear");
        for (const auto& z : zs)
            for (int i = 0; i < 20; ++i) {
                const auto x = lambda_of(z, random_subset(rng, z));
                const auto y = lambda_of(z, random_subset(rng, z));
                const auto w = lambda_of(z, random_subset(rng, z));
                p.check(pairing(z, add(z, x, y), w) == (pairing(z, x, w) ^ pairing(z, y, w)) &&
                            pairing(z, w, add(z, x, y)) == (pairing(z, w, x) ^ pairing(z, w, y)),
                        [&] { return sym(z); });
            }
    }
    {
        Prop p(out, s, "pairing is non-degenerate");
        for (const auto& z : zs)
            for (auto m : all_subsets(z)) {
                if (m.empty()) continue;
                bool found = false;
                for (auto n : all_subsets(z)) found = found || pairing(m, n) == 1;
                p.check(found, [&] { return sym(z) + " " + format_subset(z, m); });
            }
    }
    {
        Prop p(out, s, "family cardinalities");
        for (const auto& z : zs) {
            const int d = degree(z);
            bool ok = family(z, FamilyKind::Bar).size() == (std::size_t{1} << z.single_count());
            if (z.defect() == 1) {
                ok = ok && family(z, FamilyKind::Sp).size() == (std::size_t{1} << (2 * d));
            } else if (is_degenerate(z)) {
                ok = ok && family(z, FamilyKind::Plus) == std::vector<Symbol>{z.symbol()} &&
                     family(z, FamilyKind::Minus).empty();
            } else {
                ok = ok && family(z, FamilyKind::Plus).size() == (std::size_t{1} << (2 * d - 1)) &&
                     family(z, FamilyKind::Minus).size() == (std::size_t{1} << (2 * d - 1));
            }
            p.check(ok, [&] { return sym(z); });
        }
    }
    {
        Prop p(out, s, "Z_I keeps the defect of Z");
        for (const auto& z : zs) p.check(defect(singles(z)) == z.defect(), [&] { return sym(z); });
    }
}


void suite_relations(std::vector<PropertyResult>& out, const SuiteOptions& o) {
    const std::string s = "relations";
    const auto all = special_pairs(o.max_rank, o.max_rank);
    {
        Prop p(out, s, "inequality chains agree with the definition");
        for (const auto& [z, zp] : all) {
            if (!size_compatible(z, zp)) continue;
            for (Sign sg : {Sign::Plus, Sign::Minus})
                p.check(cross_check(z, zp, sg).empty(), [&] { return pair_text(z, zp) + " " + sign_text(sg); });
        }
    }
    {
        Prop p(out, s, "transpose flip between bar+ and bar-");
        for (const auto& [z, zp] : all)
            for (const auto& l : family(z, FamilyKind::Bar))
                for (const auto& r : family(zp, FamilyKind::Bar))
                    p.check(related_bar(l, r, Sign::Plus) == related_bar(transpose(l), transpose(r), Sign::Minus),
                            [&] { return sym(l) + " " + sym(r); });
    }
    {
        Prop p(out, s, "nonempty D forces compatible sizes");
        for (const auto& [z, zp] : all) p.check(d_empty(z, zp) || size_compatible(z, zp), [&] { return pair_text(z, zp); });
    }
    {
        Prop p(out, s, "nonempty D contains (Z, Z')");
        for (const auto& [z, zp] : all) {
            const auto d = relation(z, zp, RelationKind::D);
            p.check(d.empty() || d.contains(z.symbol(), zp.symbol()), [&] { return pair_text(z, zp); });
        }
    }
    {
        Prop p(out, s, "bar relation from S_Z lands in S^eps");
        for (const auto& [z, zp] : all)
            for (Sign sg : {Sign::Plus, Sign::Minus}) {
                const FamilyKind k = sg == Sign::Plus ? FamilyKind::Plus : FamilyKind::Minus;
                for (const auto& l : family(z, FamilyKind::Sp))
                    for (const auto& r : family(zp, FamilyKind::Bar))
                        if (related_bar(l, r, sg))
                            p.check(subset_in_family(zp, subset_of(zp, r), k), [&] { return sym(l) + " " + sym(r); });
            }
    }
    {
        Prop p(out, s, "closed form for (Z_(m), Z'_(m+1))");
        for (int m = 0; m <= 3; ++m) {
            const SpecialSymbol z = model_symbols(m).first;
            const SpecialSymbol zp = model_symbols(m + 1).second;
            for (Sign sg : {Sign::Plus, Sign::Minus}) {
                std::vector<SymbolPair> expected;
                for (const auto& l : family(z, FamilyKind::Sp)) {
                    const auto t = transpose(l);
                    std::vector<int> a = t.top();
                    std::vector<int> b = t.bottom();
                    auto& row = sg == Sign::Plus ? a : b;
                    row.insert(row.begin(), 2 * m + 1);
                    expected.emplace_back(l, Symbol(a, b));
                }
                std::sort(expected.begin(), expected.end());
                const auto got = relation(z, zp, sg == Sign::Plus ? RelationKind::BPlus : RelationKind::BMinus);
                p.check(got.pairs == expected, [&] { return "m=" + std::to_string(m) + " " + sign_text(sg); });
            }
        }
    }
    {
        Prop p(out, s, "closed form for (Z_(m), Z'_(m))");
        for (int m = 0; m <= 3; ++m) {
            const auto [z, zp] = model_symbols(m);
            for (Sign sg : {Sign::Plus, Sign::Minus}) {
                const auto got = relation(z, zp, sg == Sign::Plus ? RelationKind::BPlus : RelationKind::BMinus);
                for (const auto& l : family(z, FamilyKind::Sp))
                    for (const auto& r : family(zp, sg == Sign::Plus ? FamilyKind::Plus : FamilyKind::Minus)) {
                        const auto t = transpose(r);
                        std::vector<int> a = t.top();
                        std::vector<int> b = t.bottom();
                        auto& row = sg == Sign::Plus ? a : b;
                        row.insert(row.begin(), 2 * m);
                        const bool expected = Symbol(a, b) == l;
                        p.check(got.contains(l, r) == expected, [&] { return sym(l) + " " + sym(r); });
                    }
            }
        }
    }
}


void suite_cores(std::vector<PropertyResult>& out, const SuiteOptions& o) {
    const std::string s = "cores";
    const auto pairs = special_pairs(o.max_rank, o.max_rank);
    struct Info {
        const SpecialSymbol* z;
        const SpecialSymbol* zp;
        CoreResult c;
        CoreResult cp;
    };
    std::vector<Info> infos;
    {
        Prop p(out, s, "cores are disjoint and generate the D fibers");
        for (const auto& [z, zp] : pairs) {
            try {
                infos.push_back({&z, &zp, core(z, zp), core_prime(z, zp)});
                p.check(true, [] { return std::string(); });
            } catch (const CoreStructureError& e) {
                p.check(false, [&] { return pair_text(z, zp) + ": " + e.what(); });
            }
        }
    }
    std::erase_if(infos, [](const Info& i) { return !i.cp.d_nonempty; });
    {
        Prop p(out, s, "pair criteria agree with membership in D");
        for (const auto& i : infos) {
            for (const auto& pr : consecutive_pairs(*i.zp)) {
                const bool def = related_bar(i.z->symbol(), lambda_of(*i.zp, subset_of(*i.zp, pr)), Sign::Plus);
                p.check(def == pair_condition_prime(*i.z, *i.zp, pr), [&] { return pair_text(*i.z, *i.zp) + " " + to_string(pr); });
            }
            for (const auto& pr : consecutive_pairs(*i.z)) {
                const bool def = related_bar(lambda_of(*i.z, subset_of(*i.z, pr)), i.zp->symbol(), Sign::Plus);
                p.check(def == pair_condition(*i.z, *i.zp, pr), [&] { return pair_text(*i.z, *i.zp) + " " + to_string(pr); });
            }
        }
    }
    {
        Prop p(out, s, "symbols splitting a core pair do not occur");
        for (const auto& i : infos) {
            const auto left = family(*i.z, FamilyKind::Bar);
            const auto right = family(*i.zp, FamilyKind::Bar);
            for (auto n : all_subsets(*i.zp)) {
                bool splits = false;
                for (const auto& pr : i.cp.pairs) splits = splits || (n & subset_of(*i.zp, pr)).count() == 1;
                if (!splits) continue;
                const auto ln = lambda_of(*i.zp, n);
                bool occurs = false;
                for (const auto& l : left) occurs = occurs || related_bar(l, ln, Sign::Plus);
                p.check(!occurs, [&] { return pair_text(*i.z, *i.zp) + " " + sym(ln); });
            }
            for (auto m : all_subsets(*i.z)) {
                bool splits = false;
                for (const auto& pr : i.c.pairs) splits = splits || (m & subset_of(*i.z, pr)).count() == 1;
                if (!splits) continue;
                const auto lm = lambda_of(*i.z, m);
                bool occurs = false;
                for (const auto& r : right) occurs = occurs || related_bar(lm, r, Sign::Plus);
                p.check(!occurs, [&] { return pair_text(*i.z, *i.zp) + " " + sym(lm); });
            }
        }
    }
    {
        Prop p(out, s, "fibers are translates of D_Z and D_Z'");
        for (const auto& i : infos) {
            const auto& z = *i.z;
            const auto& zp = *i.zp;
            const auto dz = sub_unions(zp, i.cp.pairs);
            const auto dzp = sub_unions(z, i.c.pairs);
            for (Sign sg : {Sign::Plus, Sign::Minus}) {
                const RelationKind k = sg == Sign::Plus ? RelationKind::BarPlus : RelationKind::BarMinus;
                for (const auto& l : family(z, FamilyKind::Bar)) {
                    const auto f = fiber(z, zp, k, l, Side::Left);
                    if (f.empty()) continue;
                    std::vector<Symbol> expect;
                    const auto n0 = subset_of(zp, f.front());
                    for (auto n : dz) expect.push_back(lambda_of(zp, n0 ^ n));
                    std::sort(expect.begin(), expect.end());
                    p.check(f == expect, [&] { return pair_text(z, zp) + " " + sym(l) + " " + sign_text(sg); });
                }
                for (const auto& r : family(zp, FamilyKind::Bar)) {
                    const auto f = fiber(z, zp, k, r, Side::Right);
                    if (f.empty()) continue;
                    std::vector<Symbol> expect;
                    const auto m0 = subset_of(z, f.front());
                    for (auto m : dzp) expect.push_back(lambda_of(z, m0 ^ m));
                    std::sort(expect.begin(), expect.end());
                    p.check(f == expect, [&] { return pair_text(z, zp) + " " + sym(r) + " " + sign_text(sg); });
                }
            }
        }
    }
    {
        Prop p(out, s, "one partner in the core-avoiding family");
        for (const auto& i : infos) {
            const auto restricted = restricted_family(*i.zp, i.cp.pairs, FamilyKind::Plus);
            for (const auto& l : family(*i.z, FamilyKind::Sp)) {
                const auto f = fiber(*i.z, *i.zp, RelationKind::BPlus, l, Side::Left);
                if (f.empty()) continue;
                long hits = 0;
                for (const auto& r : f) hits += std::binary_search(restricted.begin(), restricted.end(), r);
                p.check(hits == 1, [&] { return pair_text(*i.z, *i.zp) + " " + sym(l); });
            }
        }
    }
    {
        Prop p(out, s, "B^eps decomposes over the cores");
        for (const auto& i : infos)
            for (Sign sg : {Sign::Plus, Sign::Minus})
                p.check(decomposition_check(*i.z, *i.zp, sg), [&] { return pair_text(*i.z, *i.zp) + " " + sign_text(sg); });
    }
    {
        Prop p(out, s, "regular chain: entrywise bounds, regularity, singleton fibers");
        for (const auto& i : infos) {
            const auto& z = *i.z;
            const auto& zp = *i.zp;
            const auto& a = z.symbol().top();
            const auto& b = z.symbol().bottom();
            const auto& c = zp.symbol().top();
            const auto& d = zp.symbol().bottom();
            if (zp.m() == z.m() + 1 && is_regular(zp) && i.cp.pairs.empty()) {
                bool ok = true;
                for (std::size_t k = 0; k < a.size(); ++k) ok = ok && c[k] > a[k];
                for (std::size_t k = 0; k < b.size(); ++k) ok = ok && d[k] > b[k];
                ok = ok && is_regular(z) && i.c.pairs.empty();
                p.check(ok, [&] { return pair_text(z, zp); });
            }
            if (zp.m() == z.m() && is_regular(z) && i.c.pairs.empty()) {
                bool ok = true;
                for (std::size_t k = 0; k < c.size(); ++k) ok = ok && a[k] > c[k];
                for (std::size_t k = 0; k < d.size(); ++k) ok = ok && b[k] > d[k];
                ok = ok && is_regular(zp) && i.cp.pairs.empty();
                p.check(ok, [&] { return pair_text(z, zp); });
            }
        }
    }
    {
        Prop p(out, s, "every symbol occurs in the regular one-to-one cases");
        for (const auto& i : infos) {
            const auto& z = *i.z;
            const auto& zp = *i.zp;
            if (!is_regular(z) || !is_regular(zp)) continue;
            const bool both = i.c.pairs.empty() && i.cp.pairs.empty();
            const bool left_case = zp.m() == z.m() + 1 && both;
            const bool right_case = zp.m() == z.m() && both;
            for (Sign sg : {Sign::Plus, Sign::Minus}) {
                const RelationKind k = sg == Sign::Plus ? RelationKind::BarPlus : RelationKind::BarMinus;
                if (left_case)
                    for (const auto& l : family(z, FamilyKind::Bar))
                        p.check(!fiber(z, zp, k, l, Side::Left).empty(), [&] { return pair_text(z, zp) + " " + sym(l); });
                if (right_case)
                    for (const auto& r : family(zp, FamilyKind::Bar))
                        p.check(!fiber(z, zp, k, r, Side::Right).empty(), [&] { return pair_text(z, zp) + " " + sym(r); });
            }
        }
    }
}


void suite_maps(std::vector<PropertyResult>& out, const SuiteOptions& o) {
    const std::string s = "maps";
    {
        Prop p(out, s, "model symbols are regular special of the right size");
        for (int m = 0; m <= 3; ++m) {
            const auto [z, zp] = model_symbols(m);
            p.check(is_regular(z) && is_regular(zp) && z.symbol().size() == std::pair{m + 1, m} &&
                        zp.symbol().size() == std::pair{m, m} && rank(z.symbol()) == m * (m + 1) &&
                        rank(zp.symbol()) == m * m,
                    [&] { return "m=" + std::to_string(m); });
        }
    }
    {
        Prop p(out, s, "h and h' preserve intersection sizes and families");
        const int cap = std::max(o.max_rank, 6);
        for (int d = 0; d <= 1; ++d)
            for (const auto& z : specials_up_to(cap, d)) {
                if (!is_regular(z)) continue;
                const auto model = d == 1 ? model_symbols(z.m()).first : model_symbols(z.m()).second;
                const auto h = d == 1 ? iso_h(z) : iso_h_prime(z);
                for (auto m1 : all_subsets(z)) {
                    const auto hm1 = transport(h, z, model, m1);
                    p.check(defect_of(model, hm1) == defect_of(z, m1), [&] { return sym(z); });
                    for (auto m2 : all_subsets(z))
                        p.check((m1 & m2).count() == (hm1 & transport(h, z, model, m2)).count(), [&] { return sym(z); });
                }
            }
    }
    std::vector<SpecialPair> regular_one_to_one;
    for (auto& [z, zp] : compatible_pairs(o.max_rank))
        if (is_regular(z) && is_regular(zp) && is_one_to_one(z, zp)) regular_one_to_one.emplace_back(z, zp);
    {
        Prop p(out, s, "bar+ is the graph of theta+");
        for (const auto& [z, zp] : regular_one_to_one) {
            const bool fwd = zp.m() == z.m() + 1;
            for (const auto& l : family(z, FamilyKind::Bar))
                for (const auto& r : family(zp, FamilyKind::Bar)) {
                    const bool graph = fwd ? theta_plus(z, zp, l) == r : theta_plus(z, zp, r) == l;
                    p.check(related_bar(l, r, Sign::Plus) == graph, [&] { return sym(l) + " " + sym(r); });
                }
        }
    }
    {
        Prop p(out, s, "bar- is the graph of theta-");
        for (const auto& [z, zp] : regular_one_to_one) {
            const bool fwd = zp.m() == z.m() + 1;
            for (const auto& l : family(z, FamilyKind::Bar))
                for (const auto& r : family(zp, FamilyKind::Bar)) {
                    const bool graph = fwd ? theta_minus(z, zp, l) == r : theta_minus(z, zp, r) == l;
                    p.check(related_bar(l, r, Sign::Minus) == graph, [&] { return sym(l) + " " + sym(r); });
                }
        }
    }
    {
        Prop p(out, s, "theta- is theta+ conjugated by transpose");
        for (const auto& [z, zp] : regular_one_to_one) {
            const bool fwd = zp.m() == z.m() + 1;
            for (const auto& x : family(fwd ? z : zp, FamilyKind::Bar))
                p.check(transpose(theta_plus(z, zp, x)) == theta_minus(z, zp, transpose(x)), [&] { return sym(x); });
        }
    }
    {
        Prop p(out, s, "h, h' transport B^eps onto the model pair");
        for (const auto& [z, zp] : regular_one_to_one) {
            const auto mz = model_symbols(z.m()).first;
            const auto mzp = model_symbols(zp.m()).second;
            const auto h = iso_h(z);
            const auto hp = iso_h_prime(zp);
            for (Sign sg : {Sign::Plus, Sign::Minus}) {
                const RelationKind k = sg == Sign::Plus ? RelationKind::BPlus : RelationKind::BMinus;
                const auto rel = relation(z, zp, k);
                const auto model_rel = relation(mz, mzp, k);
                for (const auto& l : left_domain(z, k))
                    for (const auto& r : right_domain(zp, k))
                        p.check(rel.contains(l, r) == model_rel.contains(transport(h, z, mz, l), transport(hp, zp, mzp, r)),
                                [&] { return sym(l) + " " + sym(r); });
            }
        }
    }
}


void suite_uniform(std::vector<PropertyResult>& out, const SuiteOptions& o) {
    const std::string s = "uniform";
    const auto zs1 = specials_up_to(o.max_rank, 1);
    const auto zs0 = specials_up_to(o.max_rank, 0);
    {
        Prop p(out, s, "norms of R_Sigma");
        for (const auto& z : zs1)
            for (const auto& sg : family_with_defect(z, 1)) p.check(norm2(r_sigma_sp(z, sg)) == Dyadic(1), [&] { return sym(sg); });
        for (const auto& zp : zs0)
            for (Sign e : {Sign::Plus, Sign::Minus})
                for (const auto& sg : family_with_defect(zp, 0)) {
                    if (is_degenerate(zp) && e == Sign::Minus) continue;
                    const Dyadic want = is_degenerate(zp) ? Dyadic(1) : Dyadic(2);
                    p.check(norm2(r_sigma_orth(zp, sg, e)) == want, [&] { return sym(sg) + " " + sign_text(e); });
                }
    }
    {
        Prop p(out, s, "R of the transpose is eps times R");
        for (const auto& zp : zs0)
            for (Sign e : {Sign::Plus, Sign::Minus})
                for (const auto& sg : family_with_defect(zp, 0)) {
                    const auto r = r_sigma_orth(zp, sg, e);
                    p.check(r_sigma_orth(zp, transpose(sg), e) == r.scaled(sign_value(e)), [&] { return sym(sg); });
                }
    }
    {
        Prop p(out, s, "pairing parities against transposes");
        for (const auto& zp : zs0)
            for (Sign e : {Sign::Plus, Sign::Minus}) {
                const FamilyKind k = e == Sign::Plus ? FamilyKind::Plus : FamilyKind::Minus;
                for (auto sg : family_subsets_with_defect(zp, 0))
                    for (auto l : family_subsets(zp, k)) {
                        const auto lt = l ^ zp.all_singles();
                        const auto st = sg ^ zp.all_singles();
                        const bool same_t = pairing(sg, l) == pairing(sg, lt);
                        const bool flip = (pairing(st, l) == pairing(sg, l)) == (e == Sign::Plus);
                        p.check(same_t && flip, [&] { return sym(zp); });
                    }
            }
        for (const auto& z : zs1)
            for (auto m : all_subsets(z))
                for (auto n : all_subsets(z)) {
                    if (n.count() % 2) continue;
                    p.check(pairing(m, n) == pairing(m ^ z.all_singles(), n), [&] { return sym(z); });
                }
    }
    {
        Prop p(out, s, "rho-sharp is nonzero and idempotent");
        for (const auto& z : zs1)
            for (const auto& l : family(z, FamilyKind::Sp)) {
                const auto v = rho_sharp_sp(z, l);
                p.check(!v.is_zero() && project_sp(z, v) == v, [&] { return sym(l); });
            }
        for (const auto& zp : zs0)
            for (Sign e : {Sign::Plus, Sign::Minus})
                for (const auto& l : family(zp, e == Sign::Plus ? FamilyKind::Plus : FamilyKind::Minus)) {
                    const auto v = rho_sharp_orth(zp, l, e);
                    p.check(!v.is_zero() && project_orth(zp, v, e) == v && rho_sharp_orth(zp, transpose(l), e) == v,
                            [&] { return sym(l) + " " + sign_text(e); });
                }
    }
    {
        Prop p(out, s, "both sides of the main identity agree");
        for (const auto& [z, zp] : special_pairs(o.max_rank, o.max_rank))
            for (Sign e : {Sign::Plus, Sign::Minus})
                p.check(verify_theorem(z, zp, e).equal, [&] { return pair_text(z, zp) + " " + sign_text(e); });
    }
    {
        Prop p(out, s, "lhs vanishes when eps = - and the core fills Z'_I");
        for (const auto& [z, zp] : special_pairs(o.max_rank, o.max_rank)) {
            const auto cp = core_prime(z, zp);
            if (!cp.d_nonempty || subset_of(zp, cp.pairs) != zp.all_singles()) continue;
            p.check(theorem_lhs(z, zp, Sign::Minus).is_zero(), [&] { return pair_text(z, zp); });
        }
    }
    {
        Prop p(out, s, "whole-rank expansion matches the block sum");
        const int cap = std::min(o.max_rank, 3);
        for (int n = 0; n <= cap; ++n)
            for (int np = 0; np <= cap; ++np)
                for (Sign e : {Sign::Plus, Sign::Minus})
                    p.check(verify_amr_consistency(n, np, e),
                            [&] { return std::to_string(n) + "," + std::to_string(np) + " " + sign_text(e); });
    }
}

using SuiteFn = void (*)(std::vector<PropertyResult>&, const SuiteOptions&);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> r{
        {"partitions", suite_partitions}, {"symbols", suite_symbols}, {"special", suite_special},
        {"relations", suite_relations},   {"cores", suite_cores},     {"maps", suite_maps},
        {"uniform", suite_uniform},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"partitions", "symbols", "special", "relations",
                                                "cores",      "maps",    "uniform"};
    return names;
}

std::vector<PropertyResult> run_suite(std::string_view suite, const SuiteOptions& opts) {
    std::vector<PropertyResult> out;
    if (suite == "all") {
        for (const auto& name : suite_names()) registry().at(name)(out, opts);
        return out;
    }
    const auto it = registry().find(std::string(suite));
    if (it == registry().end()) throw ParseError("unknown property suite '" + std::string(suite) + "'");
    it->second(out, opts);
    return out;
}

}  // namespace howe
