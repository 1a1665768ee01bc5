#include "howe/cores.hpp"

#include <algorithm>
#include <set>

#include "howe/errors.hpp"

namespace howe {

namespace {

int entry(const std::vector<int>& row, int i) {
    const int len = static_cast<int>(row.size());
    return i <= len ? row[static_cast<std::size_t>(i - 1)] : len - i;
}

int index_in(const std::vector<int>& row, int value) {
    const auto it = std::find(row.begin(), row.end(), value);
    return it == row.end() ? 0 : static_cast<int>(it - row.begin()) + 1;
}

std::vector<Symbol> symbols_of(const SpecialSymbol& z, const std::vector<SinglesSubset>& subsets) {
    std::vector<Symbol> out;
    for (auto m : subsets) out.push_back(lambda_of(z, m));
    std::sort(out.begin(), out.end());
    return out;
}

void check_disjoint(const SpecialSymbol& z, const PairSet& ps, const char* which) {
    std::uint32_t seen = 0;
    for (const auto& p : ps) {
        const auto m = subset_of(z, p).mask;
        if (seen & m)
            throw CoreStructureError(std::string("overlapping pairs in ") + which + " for " + to_string(z.symbol()));
        seen |= m;
    }
}

}  // namespace

std::vector<ConsecutivePair> consecutive_pairs(const SpecialSymbol& z) {
    // Distinct values in decreasing order; doubles block adjacency.
    struct Slot {
        int value;
        bool single;
        Row row;
    };
    std::vector<Slot> slots;
    for (int x : z.doubles()) slots.push_back({x, false, Row::Top});
    for (const Entry& e : z.singles_list()) slots.push_back({e.value, true, e.row});
    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.value > b.value; });

    std::vector<ConsecutivePair> out;
    for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
        const Slot& hi = slots[i];
        const Slot& lo = slots[i + 1];
        if (!hi.single || !lo.single || hi.row == lo.row) continue;
        out.push_back(hi.row == Row::Top ? ConsecutivePair{hi.value, lo.value} : ConsecutivePair{lo.value, hi.value});
    }
    return out;
}

SinglesSubset subset_of(const SpecialSymbol& z, const ConsecutivePair& p) {
    const auto t = z.bit_of({p.top, Row::Top});
    const auto b = z.bit_of({p.bottom, Row::Bottom});
    if (!t || !b) throw DomainError(to_string(p) + " is not a pair of singles of " + to_string(z.symbol()));
    return {(std::uint32_t{1} << *t) | (std::uint32_t{1} << *b)};
}

SinglesSubset subset_of(const SpecialSymbol& z, const PairSet& ps) {
    SinglesSubset m;
    for (const auto& p : ps) m = m | subset_of(z, p);
    return m;
}

std::vector<SinglesSubset> sub_unions(const SpecialSymbol& z, const PairSet& ps) {
    std::vector<SinglesSubset> out;
    const std::uint32_t n = std::uint32_t{1} << ps.size();
    for (std::uint32_t pick = 0; pick < n; ++pick) {
        SinglesSubset m;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if ((pick >> i) & 1U) m = m | subset_of(z, ps[i]);
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CoreResult core_prime(const SpecialSymbol& z, const SpecialSymbol& zp) {
    const auto d = relation(z, zp, RelationKind::D);
    if (d.empty()) return {};
    CoreResult res{true, {}};
    for (const auto& p : consecutive_pairs(zp))
        if (related_bar(z.symbol(), lambda_of(zp, subset_of(zp, p)), Sign::Plus)) res.pairs.push_back(p);
    check_disjoint(zp, res.pairs, "the core of Z'_I");

    const auto expected = symbols_of(zp, sub_unions(zp, res.pairs));
    if (fiber(z, zp, RelationKind::D, z.symbol(), Side::Left) != expected)
        throw CoreStructureError("fiber D_Z is not generated by the core for " + to_string(z.symbol()) + ", " +
                                 to_string(zp.symbol()));
    return res;
}

CoreResult core(const SpecialSymbol& z, const SpecialSymbol& zp) {
    const auto d = relation(z, zp, RelationKind::D);
    if (d.empty()) return {};
    CoreResult res{true, {}};
    for (const auto& p : consecutive_pairs(z))
        if (related_bar(lambda_of(z, subset_of(z, p)), zp.symbol(), Sign::Plus)) res.pairs.push_back(p);
    check_disjoint(z, res.pairs, "the core of Z_I");

    const auto expected = symbols_of(z, sub_unions(z, res.pairs));
    if (fiber(z, zp, RelationKind::D, zp.symbol(), Side::Right) != expected)
        throw CoreStructureError("fiber D_Z' is not generated by the core for " + to_string(z.symbol()) + ", " +
                                 to_string(zp.symbol()));
    return res;
}

bool pair_condition_prime(const SpecialSymbol& z, const SpecialSymbol& zp, const ConsecutivePair& p) {
    if (!size_compatible(z, zp)) return false;
    const auto& a = z.symbol().top();
    const auto& b = z.symbol().bottom();
    const auto& c = zp.symbol().top();
    const auto& d = zp.symbol().bottom();
    const int k = index_in(c, p.top);
    const int l = index_in(d, p.bottom);
    if (k == 0 || l == 0) return false;
    const bool same = zp.m() == z.m();
    if (l == k) {
        return same ? entry(a, k) > entry(c, k) && entry(d, k) >= entry(b, k)
                    : entry(a, k) >= entry(c, k) && entry(d, k) > entry(b, k);
    }
    if (l == k - 1) {
        return same ? entry(c, k) >= entry(a, k) && entry(b, k - 1) > entry(d, k - 1)
                    : entry(c, k) > entry(a, k) && entry(b, k - 1) >= entry(d, k - 1);
    }
    return false;
}

bool pair_condition(const SpecialSymbol& z, const SpecialSymbol& zp, const ConsecutivePair& p) {
    if (!size_compatible(z, zp)) return false;
    const auto& a = z.symbol().top();
    const auto& b = z.symbol().bottom();
    const auto& c = zp.symbol().top();
    const auto& d = zp.symbol().bottom();
    const int k = index_in(a, p.top);
    const int l = index_in(b, p.bottom);
    if (k == 0 || l == 0) return false;
    const bool same = zp.m() == z.m();
    if (l == k) {
        return same ? entry(c, k) >= entry(a, k) && entry(b, k) > entry(d, k)
                    : entry(c, k) > entry(a, k) && entry(b, k) >= entry(d, k);
    }
    if (l == k - 1) {
        return same ? entry(a, k) > entry(c, k) && entry(d, k - 1) >= entry(b, k - 1)
                    : entry(a, k) >= entry(c, k) && entry(d, k - 1) > entry(b, k - 1);
    }
    return false;
}

bool is_one_to_one(const SpecialSymbol& z, const SpecialSymbol& zp) {
    const auto cp = core_prime(z, zp);
    return cp.d_nonempty && cp.pairs.empty() && core(z, zp).pairs.empty();
}

std::vector<Symbol> restricted_family(const SpecialSymbol& z, const PairSet& psi, FamilyKind kind) {
    const auto avoid = subset_of(z, psi);
    std::vector<SinglesSubset> keep;
    for (auto m : family_subsets(z, kind))
        if ((m & avoid).empty()) keep.push_back(m);
    return symbols_of(z, keep);
}

std::vector<Symbol> restricted_family_with_defect(const SpecialSymbol& z, const PairSet& psi, int delta) {
    const auto avoid = subset_of(z, psi);
    std::vector<SinglesSubset> keep;
    for (auto m : family_subsets_with_defect(z, delta))
        if ((m & avoid).empty()) keep.push_back(m);
    return symbols_of(z, keep);
}

DecompositionReport decomposition(const SpecialSymbol& z, const SpecialSymbol& zp, Sign sign) {
    DecompositionReport rep;
    const auto cp = core_prime(z, zp);
    const auto c = core(z, zp);
    rep.d_nonempty = cp.d_nonempty;

    const RelationKind kind = sign == Sign::Plus ? RelationKind::BPlus : RelationKind::BMinus;
    const FamilyKind right_kind = sign == Sign::Plus ? FamilyKind::Plus : FamilyKind::Minus;
    const auto full = relation(z, zp, kind);

    const auto left = restricted_family(z, c.pairs, FamilyKind::Sp);
    const auto right = restricted_family(zp, cp.pairs, right_kind);
    for (const auto& pr : full.pairs)
        if (std::binary_search(left.begin(), left.end(), pr.first) &&
            std::binary_search(right.begin(), right.end(), pr.second))
            rep.natural.push_back(pr);

    std::set<SymbolPair> rebuilt;
    const auto ms = sub_unions(z, c.pairs);
    const auto ns = sub_unions(zp, cp.pairs);
    for (const auto& [lam, lamp] : rep.natural) {
        const auto mi = subset_of(z, lam);
        const auto ni = subset_of(zp, lamp);
        for (auto m : ms)
            for (auto n : ns) rebuilt.emplace(lambda_of(z, mi ^ m), lambda_of(zp, ni ^ n));
    }
    rep.matches = std::vector<SymbolPair>(rebuilt.begin(), rebuilt.end()) == full.pairs;

    std::set<Symbol> lefts;
    std::set<Symbol> rights;
    for (const auto& [lam, lamp] : rep.natural) {
        lefts.insert(lam);
        rights.insert(lamp);
    }
    rep.natural_one_to_one = lefts.size() == rep.natural.size() && rights.size() == rep.natural.size();
    return rep;
}

bool decomposition_check(const SpecialSymbol& z, const SpecialSymbol& zp, Sign sign) {
    const auto rep = decomposition(z, zp, sign);
    return rep.matches && rep.natural_one_to_one;
}

std::string to_string(const ConsecutivePair& p) {
    return "[" + std::to_string(p.top) + "|" + std::to_string(p.bottom) + "]";
}

}  // namespace howe
