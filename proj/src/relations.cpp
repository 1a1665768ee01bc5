#include "howe/relations.hpp"

#include <algorithm>
#include <functional>

#include "howe/errors.hpp"

namespace howe {

Sign parse_sign(std::string_view text) {
    if (text == "+" || text == "plus") return Sign::Plus;
    if (text == "-" || text == "minus") return Sign::Minus;
    throw ParseError("sign must be + or -, got '" + std::string(text) + "'");
}

Sign sign_of(RelationKind k) {
    return (k == RelationKind::BarMinus || k == RelationKind::BMinus) ? Sign::Minus : Sign::Plus;
}

std::string kind_text(RelationKind k) {
    switch (k) {
        case RelationKind::BarPlus: return "bar+";
        case RelationKind::BarMinus: return "bar-";
        case RelationKind::BPlus: return "B+";
        case RelationKind::BMinus: return "B-";
        case RelationKind::D: return "D";
    }
    return "?";
}

RelationKind parse_kind(std::string_view text) {
    if (text == "bar+") return RelationKind::BarPlus;
    if (text == "bar-") return RelationKind::BarMinus;
    if (text == "B+") return RelationKind::BPlus;
    if (text == "B-") return RelationKind::BMinus;
    if (text == "D") return RelationKind::D;
    throw ParseError("relation kind must be one of bar+, bar-, B+, B-, D; got '" + std::string(text) + "'");
}

bool RelationTable::contains(const Symbol& lam, const Symbol& lamp) const {
    return std::binary_search(pairs.begin(), pairs.end(), SymbolPair{lam, lamp});
}

namespace {

bool related_upsilon(const BiPartition& l, int def, const BiPartition& r, int defp, Sign sign) {
    // l = (λ; μ), r = (ξ; ν)
    if (sign == Sign::Plus)
        return defp == -def + 1 && precede_transposed(l.bottom, r.top) && precede_transposed(r.bottom, l.top);
    return defp == -def - 1 && precede_transposed(r.top, l.bottom) && precede_transposed(l.top, r.bottom);
}

// i-th entry (1-based) of a row, continued past the end by len - i.
int entry(const std::vector<int>& row, int i) {
    const int len = static_cast<int>(row.size());
    return i <= len ? row[static_cast<std::size_t>(i - 1)] : len - i;
}

void check_families(const SpecialSymbol& z, const SpecialSymbol& zp, const Symbol& lam, const Symbol& lamp) {
    if (!in_family(z, lam)) throw NotInFamilyError(to_string(lam) + " is not in S̄ of " + to_string(z.symbol()));
    if (!in_family(zp, lamp)) throw NotInFamilyError(to_string(lamp) + " is not in S̄ of " + to_string(zp.symbol()));
}

}  // namespace

bool related_bar(const Symbol& lam, const Symbol& lamp, Sign sign) {
    return related_upsilon(upsilon(lam), defect(lam), upsilon(lamp), defect(lamp), sign);
}

bool related_bar(const SpecialSymbol& z, const SpecialSymbol& zp, const Symbol& lam, const Symbol& lamp, Sign sign) {
    check_families(z, zp, lam, lamp);
    return related_bar(lam, lamp, sign);
}

bool related_ineq(const Symbol& lam, const Symbol& lamp, Sign sign) {
    const auto& a = lam.top();
    const auto& b = lam.bottom();
    const auto& c = lamp.top();
    const auto& d = lamp.bottom();
    const int m1 = static_cast<int>(a.size());
    const int m2 = static_cast<int>(b.size());
    const int n1 = static_cast<int>(c.size());
    const int n2 = static_cast<int>(d.size());
    if ((m1 + m2) % 2 != 1 || (n1 + n2) % 2 != 0) return false;
    const int m = (m1 + m2 - 1) / 2;
    const int mp = (n1 + n2) / 2;
    if (mp != m && mp != m + 1) return false;

    // Row-length equation, then two strict/weak choices per chain.
    int want_n1 = 0;
    bool ad_strict = false;  // a_i vs d_i (top/bottom chain)
    bool cb_strict = false;  // c_i vs b_i
    if (sign == Sign::Plus) {
        want_n1 = mp == m ? m2 : m2 + 1;
        ad_strict = mp == m;
        cb_strict = mp != m;
    } else {
        want_n1 = mp == m ? m2 - 1 : m2;
        ad_strict = mp != m;
        cb_strict = mp == m;
    }
    if (n1 != want_n1) return false;

    const auto gt = [](int x, int y, bool strict) { return strict ? x > y : x >= y; };
    const int top = std::max({m1, m2, n1, n2}) + 1;
    for (int i = 1; i <= top; ++i) {
        const int ai = entry(a, i), ai1 = entry(a, i + 1);
        const int bi = entry(b, i), bi1 = entry(b, i + 1);
        const int ci = entry(c, i), ci1 = entry(c, i + 1);
        const int di = entry(d, i), di1 = entry(d, i + 1);
        if (sign == Sign::Plus) {
            // a_i (>|>=) d_i (>=|>) a_{i+1};  c_i (>=|>) b_i (>|>=) c_{i+1}
            if (!gt(ai, di, ad_strict) || !gt(di, ai1, !ad_strict)) return false;
            if (!gt(ci, bi, cb_strict) || !gt(bi, ci1, !cb_strict)) return false;
        } else {
            // d_i (>=|>) a_i (>|>=) d_{i+1};  b_i (>|>=) c_i (>=|>) b_{i+1}
            if (!gt(di, ai, ad_strict) || !gt(ai, di1, !ad_strict)) return false;
            if (!gt(bi, ci, cb_strict) || !gt(ci, bi1, !cb_strict)) return false;
        }
    }
    return true;
}

bool related_ineq(const SpecialSymbol& z, const SpecialSymbol& zp, const Symbol& lam, const Symbol& lamp, Sign sign) {
    check_families(z, zp, lam, lamp);
    return related_ineq(lam, lamp, sign);
}

std::vector<Symbol> left_domain(const SpecialSymbol& z, RelationKind kind) {
    switch (kind) {
        case RelationKind::BarPlus:
        case RelationKind::BarMinus: return family(z, FamilyKind::Bar);
        case RelationKind::BPlus:
        case RelationKind::BMinus: return family(z, FamilyKind::Sp);
        case RelationKind::D: return family_with_defect(z, 1);
    }
    return {};
}

std::vector<Symbol> right_domain(const SpecialSymbol& zp, RelationKind kind) {
    switch (kind) {
        case RelationKind::BarPlus:
        case RelationKind::BarMinus: return family(zp, FamilyKind::Bar);
        case RelationKind::BPlus: return family(zp, FamilyKind::Plus);
        case RelationKind::BMinus: return family(zp, FamilyKind::Minus);
        case RelationKind::D: return family_with_defect(zp, 0);
    }
    return {};
}

RelationTable relation(const SpecialSymbol& z, const SpecialSymbol& zp, RelationKind kind) {
    if (z.defect() != 1) throw DomainError("left special symbol must have defect 1: " + to_string(z.symbol()));
    if (zp.defect() != 0) throw DomainError("right special symbol must have defect 0: " + to_string(zp.symbol()));
    const auto left = left_domain(z, kind);
    const auto right = right_domain(zp, kind);
    std::vector<BiPartition> right_ups;
    right_ups.reserve(right.size());
    for (const auto& r : right) right_ups.push_back(upsilon(r));

    RelationTable table{z, zp, kind, {}};
    const Sign sign = sign_of(kind);
    for (const auto& l : left) {
        const auto lu = upsilon(l);
        const int ld = defect(l);
        for (std::size_t j = 0; j < right.size(); ++j)
            if (related_upsilon(lu, ld, right_ups[j], defect(right[j]), sign)) table.pairs.emplace_back(l, right[j]);
    }
    std::sort(table.pairs.begin(), table.pairs.end());
    return table;
}

std::vector<Symbol> fiber(const SpecialSymbol& z, const SpecialSymbol& zp, RelationKind kind, const Symbol& fixed,
                          Side side) {
    const Sign sign = sign_of(kind);
    std::vector<Symbol> out;
    if (side == Side::Left) {
        const auto dom = left_domain(z, kind);
        if (!std::binary_search(dom.begin(), dom.end(), fixed))
            throw NotInFamilyError(to_string(fixed) + " is not in the left domain of " + kind_text(kind));
        for (const auto& r : right_domain(zp, kind))
            if (related_bar(fixed, r, sign)) out.push_back(r);
    } else {
        const auto dom = right_domain(zp, kind);
        if (!std::binary_search(dom.begin(), dom.end(), fixed))
            throw NotInFamilyError(to_string(fixed) + " is not in the right domain of " + kind_text(kind));
        for (const auto& l : left_domain(z, kind))
            if (related_bar(l, fixed, sign)) out.push_back(l);
    }
    return out;
}

bool size_compatible(const SpecialSymbol& z, const SpecialSymbol& zp) {
    if (z.defect() != 1 || zp.defect() != 0) return false;
    return zp.m() == z.m() || zp.m() == z.m() + 1;
}

std::vector<SpecialPair> special_pairs(int nmax, int npmax) {
    std::vector<SpecialPair> out;
    for (int n = 0; n <= nmax; ++n)
        for (const auto& z : enumerate_special(n, 1))
            for (int np = 0; np <= npmax; ++np)
                for (const auto& zp : enumerate_special(np, 0)) out.emplace_back(z, zp);
    return out;
}

std::vector<SymbolPair> cross_check(const SpecialSymbol& z, const SpecialSymbol& zp, Sign sign) {
    std::vector<SymbolPair> bad;
    const auto left = family(z, FamilyKind::Bar);
    const auto right = family(zp, FamilyKind::Bar);
    for (const auto& l : left)
        for (const auto& r : right)
            if (related_bar(l, r, sign) != related_ineq(l, r, sign)) bad.emplace_back(l, r);
    return bad;
}

}  // namespace howe
