#include "howe/regular_maps.hpp"

#include <set>

#include "howe/errors.hpp"

namespace howe {

Entry EntryMap::operator()(Entry e) const {
    const auto it = pairs.find(e);
    if (it == pairs.end()) throw DomainError("entry " + to_string(e) + " is outside the map's domain");
    return it->second;
}

bool EntryMap::injective() const {
    std::set<Entry> image;
    for (const auto& [k, v] : pairs) image.insert(v);
    return image.size() == pairs.size();
}

std::pair<SpecialSymbol, SpecialSymbol> model_symbols(int m) {
    if (m < 0) throw DomainError("model symbol index must be non-negative");
    std::vector<int> a, b, c, d;
    for (int i = 1; i <= m + 1; ++i) a.push_back(2 * m + 2 - 2 * i);
    for (int i = 1; i <= m; ++i) {
        b.push_back(2 * m + 1 - 2 * i);
        c.push_back(2 * m + 1 - 2 * i);
        d.push_back(2 * m - 2 * i);
    }
    return {SpecialSymbol(Symbol(a, b)), SpecialSymbol(Symbol(c, d))};
}

namespace {

void require_regular_pair(const SpecialSymbol& z, const SpecialSymbol& zp) {
    if (!is_regular(z) || !is_regular(zp))
        throw DomainError("theta is defined only for regular special symbols");
    if (!size_compatible(z, zp))
        throw DomainError("theta needs sizes (m+1,m) and (m',m') with m' in {m, m+1}");
}

bool forward(const SpecialSymbol& z, const SpecialSymbol& zp) { return zp.m() == z.m() + 1; }

Symbol theta_apply(const SpecialSymbol& z, const SpecialSymbol& zp, const Symbol& input, bool minus) {
    require_regular_pair(z, zp);
    const EntryMap th = theta_map(z, zp);
    const bool fwd = forward(z, zp);
    const SpecialSymbol& src = fwd ? z : zp;
    const SpecialSymbol& dst = fwd ? zp : z;
    SinglesSubset out = transport(th, src, dst, subset_of(src, input));
    if (minus) {
        const Entry extra = fwd ? Entry{zp.symbol().top().front(), Row::Top} : Entry{z.symbol().top().front(), Row::Top};
        out.mask |= std::uint32_t{1} << *dst.bit_of(extra);
    }
    return lambda_of(dst, out);
}

}  // namespace

EntryMap theta_map(const SpecialSymbol& z, const SpecialSymbol& zp) {
    require_regular_pair(z, zp);
    const auto& a = z.symbol().top();
    const auto& b = z.symbol().bottom();
    const auto& c = zp.symbol().top();
    const auto& d = zp.symbol().bottom();
    EntryMap th;
    if (forward(z, zp)) {
        for (std::size_t i = 0; i < a.size(); ++i) th.pairs[{a[i], Row::Top}] = {d[i], Row::Bottom};
        for (std::size_t i = 0; i < b.size(); ++i) th.pairs[{b[i], Row::Bottom}] = {c[i + 1], Row::Top};
    } else {
        for (std::size_t i = 0; i < c.size(); ++i) th.pairs[{c[i], Row::Top}] = {b[i], Row::Bottom};
        for (std::size_t i = 0; i < d.size(); ++i) th.pairs[{d[i], Row::Bottom}] = {a[i + 1], Row::Top};
    }
    return th;
}

Symbol theta_plus(const SpecialSymbol& z, const SpecialSymbol& zp, const Symbol& input) {
    return theta_apply(z, zp, input, false);
}

Symbol theta_minus(const SpecialSymbol& z, const SpecialSymbol& zp, const Symbol& input) {
    return theta_apply(z, zp, input, true);
}

EntryMap iso_h(const SpecialSymbol& z) {
    if (!is_regular(z) || z.defect() != 1) throw DomainError("h needs a regular special symbol of defect 1");
    const int m = z.m();
    const auto& a = z.symbol().top();
    const auto& b = z.symbol().bottom();
    EntryMap h;
    for (int i = 1; i <= m + 1; ++i) h.pairs[{a[static_cast<std::size_t>(i - 1)], Row::Top}] = {2 * m + 2 - 2 * i, Row::Top};
    for (int i = 1; i <= m; ++i)
        h.pairs[{b[static_cast<std::size_t>(i - 1)], Row::Bottom}] = {2 * m + 1 - 2 * i, Row::Bottom};
    return h;
}

EntryMap iso_h_prime(const SpecialSymbol& zp) {
    if (!is_regular(zp) || zp.defect() != 0) throw DomainError("h' needs a regular special symbol of defect 0");
    const int m = zp.m();
    const auto& c = zp.symbol().top();
    const auto& d = zp.symbol().bottom();
    EntryMap h;
    for (int i = 1; i <= m; ++i) {
        h.pairs[{c[static_cast<std::size_t>(i - 1)], Row::Top}] = {2 * m + 1 - 2 * i, Row::Top};
        h.pairs[{d[static_cast<std::size_t>(i - 1)], Row::Bottom}] = {2 * m - 2 * i, Row::Bottom};
    }
    return h;
}

SinglesSubset transport(const EntryMap& map, const SpecialSymbol& from, const SpecialSymbol& to, SinglesSubset m) {
    SinglesSubset out;
    for (int i = 0; i < from.single_count(); ++i) {
        if (!m.contains(i)) continue;
        const Entry e = map(from.single(i));
        const auto bit = to.bit_of(e);
        if (!bit) throw DomainError("image " + to_string(e) + " is not a single of " + to_string(to.symbol()));
        out.mask |= std::uint32_t{1} << *bit;
    }
    return out;
}

Symbol transport(const EntryMap& map, const SpecialSymbol& from, const SpecialSymbol& to, const Symbol& lam) {
    return lambda_of(to, transport(map, from, to, subset_of(from, lam)));
}

}  // namespace howe
