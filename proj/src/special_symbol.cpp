#include "howe/special_symbol.hpp"

#include <algorithm>

#include "howe/errors.hpp"
#include "text_util.hpp"

namespace howe {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

}  // namespace

bool SpecialSymbol::is_special(const Symbol& s) {
    const auto& a = s.top();
    const auto& b = s.bottom();
    const int d = howe::defect(s);
    if (d != 0 && d != 1) return false;
    // a_1 >= b_1 >= a_2 >= b_2 >= ...
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (a[i] < b[i]) return false;
        if (i + 1 < a.size() && b[i] < a[i + 1]) return false;
    }
    return true;
}

SpecialSymbol::SpecialSymbol(Symbol s) : sym_(std::move(s)) {
    if (!is_special(sym_)) throw DomainError("not a special symbol: " + to_string(sym_));
    const auto& a = sym_.top();
    const auto& b = sym_.bottom();
    for (int x : a) {
        if (std::binary_search(b.begin(), b.end(), x, std::greater<>()))
            doubles_.push_back(x);
        else
            singles_.push_back({x, Row::Top});
    }
    for (int x : b) {
        if (!std::binary_search(a.begin(), a.end(), x, std::greater<>())) singles_.push_back({x, Row::Bottom});
    }
    std::sort(singles_.begin(), singles_.end(), [](Entry x, Entry y) { return x.value > y.value; });
    if (singles_.size() > 30) throw DomainError("too many singles for the subset encoding");
}

std::optional<int> SpecialSymbol::bit_of(Entry e) const {
    for (std::size_t i = 0; i < singles_.size(); ++i)
        if (singles_[i] == e) return static_cast<int>(i);
    return std::nullopt;
}

Symbol singles(const SpecialSymbol& z) {
    std::vector<int> top;
    std::vector<int> bottom;
    for (const Entry& e : z.singles_list()) (e.row == Row::Top ? top : bottom).push_back(e.value);
    return Symbol(std::move(top), std::move(bottom));
}

int degree(const SpecialSymbol& z) {
    return z.defect() == 1 ? (z.single_count() - 1) / 2 : z.single_count() / 2;
}

bool is_regular(const SpecialSymbol& z) { return z.doubles().empty(); }

bool is_degenerate(const SpecialSymbol& z) { return z.defect() == 0 && z.single_count() == 0; }

Symbol lambda_of(const SpecialSymbol& z, SinglesSubset m) {
    if (m.mask >> z.single_count()) throw DomainError("subset refers to entries outside Z_I");
    std::vector<int> top;
    std::vector<int> bottom;
    for (int x : z.doubles()) {
        top.push_back(x);
        bottom.push_back(x);
    }
    for (int i = 0; i < z.single_count(); ++i) {
        const Entry e = z.single(i);
        const Row r = m.contains(i) ? opposite(e.row) : e.row;
        (r == Row::Top ? top : bottom).push_back(e.value);
    }
    std::sort(top.begin(), top.end(), std::greater<>());
    std::sort(bottom.begin(), bottom.end(), std::greater<>());
    return Symbol(std::move(top), std::move(bottom));
}

int defect_of(const SpecialSymbol& z, SinglesSubset m) {
    int d = z.defect();
    for (int i = 0; i < z.single_count(); ++i) {
        if (!m.contains(i)) continue;
        d += z.single(i).row == Row::Top ? -2 : 2;
    }
    return d;
}

SinglesSubset subset_of(const SpecialSymbol& z, const Symbol& lam) {
    SinglesSubset m;
    for (int i = 0; i < z.single_count(); ++i) {
        const Entry e = z.single(i);
        if (lam.contains(e)) continue;
        if (!lam.contains({e.value, opposite(e.row)}))
            throw NotInFamilyError(to_string(lam) + " is not in the family of " + to_string(z.symbol()));
        m.mask |= std::uint32_t{1} << i;
    }
    if (lambda_of(z, m) != lam)
        throw NotInFamilyError(to_string(lam) + " is not in the family of " + to_string(z.symbol()));
    return m;
}

bool in_family(const SpecialSymbol& z, const Symbol& lam) {
    try {
        subset_of(z, lam);
        return true;
    } catch (const NotInFamilyError&) {
        return false;
    }
}

Symbol add(const SpecialSymbol& z, const Symbol& lam1, const Symbol& lam2) {
    return lambda_of(z, subset_of(z, lam1) ^ subset_of(z, lam2));
}

int pairing(const SpecialSymbol& z, const Symbol& lam1, const Symbol& lam2) {
    return pairing(subset_of(z, lam1), subset_of(z, lam2));
}

bool subset_in_family(const SpecialSymbol& z, SinglesSubset m, FamilyKind kind) {
    const int d = defect_of(z, m);
    switch (kind) {
        case FamilyKind::Bar: return true;
        case FamilyKind::Sp: return mod4(d) == 1;
        case FamilyKind::Plus: return mod4(d) == 0;
        case FamilyKind::Minus: return mod4(d) == 2;
    }
    return false;
}

std::vector<SinglesSubset> family_subsets(const SpecialSymbol& z, FamilyKind kind) {
    if (kind == FamilyKind::Sp && z.defect() != 1)
        throw DomainError("S_Z requires a special symbol of defect 1");
    if ((kind == FamilyKind::Plus || kind == FamilyKind::Minus) && z.defect() != 0)
        throw DomainError("S+_Z / S-_Z require a special symbol of defect 0");
    std::vector<SinglesSubset> out;
    const std::uint32_t n = std::uint32_t{1} << z.single_count();
    for (std::uint32_t mask = 0; mask < n; ++mask)
        if (subset_in_family(z, {mask}, kind)) out.push_back({mask});
    return out;
}

std::vector<SinglesSubset> family_subsets_with_defect(const SpecialSymbol& z, int delta) {
    std::vector<SinglesSubset> out;
    const std::uint32_t n = std::uint32_t{1} << z.single_count();
    for (std::uint32_t mask = 0; mask < n; ++mask)
        if (defect_of(z, {mask}) == delta) out.push_back({mask});
    return out;
}

namespace {

std::vector<Symbol> to_symbols(const SpecialSymbol& z, const std::vector<SinglesSubset>& subsets) {
    std::vector<Symbol> out;
    out.reserve(subsets.size());
    for (auto m : subsets) out.push_back(lambda_of(z, m));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Symbol> family(const SpecialSymbol& z, FamilyKind kind) {
    return to_symbols(z, family_subsets(z, kind));
}

std::vector<Symbol> family_with_defect(const SpecialSymbol& z, int delta) {
    return to_symbols(z, family_subsets_with_defect(z, delta));
}

std::vector<SpecialSymbol> enumerate_special(int n, int d) {
    std::vector<SpecialSymbol> out;
    if (d != 0 && d != 1) return out;
    for (auto& s : enumerate_symbols(n, d))
        if (SpecialSymbol::is_special(s)) out.emplace_back(std::move(s));
    return out;
}

SpecialSymbol special_of(const Symbol& s) {
    std::vector<int> all = s.top();
    all.insert(all.end(), s.bottom().begin(), s.bottom().end());
    std::sort(all.begin(), all.end(), std::greater<>());
    std::vector<int> top;
    std::vector<int> bottom;
    for (std::size_t i = 0; i < all.size(); ++i) (i % 2 == 0 ? top : bottom).push_back(all[i]);
    return SpecialSymbol(Symbol(std::move(top), std::move(bottom)));
}

std::string format_subset(const SpecialSymbol& z, SinglesSubset m) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < z.single_count(); ++i) {
        if (!m.contains(i)) continue;
        if (!first) out += ", ";
        first = false;
        out += to_string(z.single(i));
    }
    return out + "}";
}

SinglesSubset parse_subset(const SpecialSymbol& z, std::string_view text) {
    auto body = detail::trim(text);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        throw ParseError("subset literal must look like {t:2, b:1}");
    body = detail::trim(body.substr(1, body.size() - 2));
    SinglesSubset m;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const auto item = detail::trim(body.substr(0, comma));
        if (item.size() < 3 || item[1] != ':' || (item[0] != 't' && item[0] != 'b'))
            throw ParseError("subset entry must be t:<value> or b:<value>");
        const Entry e{detail::parse_int(item.substr(2)), item[0] == 't' ? Row::Top : Row::Bottom};
        const auto bit = z.bit_of(e);
        if (!bit) throw ParseError(to_string(e) + " is not a single of " + to_string(z.symbol()));
        m.mask |= std::uint32_t{1} << *bit;
        if (comma == std::string_view::npos) break;
        body = detail::trim(body.substr(comma + 1));
    }
    return m;
}

}  // namespace howe
