#include "howe/uniform.hpp"

#include <algorithm>

#include "howe/errors.hpp"

namespace howe {

namespace {

Dyadic signed_unit(int parity) { return parity ? Dyadic(-1) : Dyadic(1); }

Dyadic pair_weight(const SpecialSymbol& zp, HalfConvention half) {
    if (half == HalfConvention::CollapseDegenerate && is_degenerate(zp)) return 1;
    return Dyadic::pow2_inv(1);
}

FamilyKind orth_kind(Sign sign) { return sign == Sign::Plus ? FamilyKind::Plus : FamilyKind::Minus; }

SinglesSubset require_defect(const SpecialSymbol& z, const Symbol& s, int delta) {
    const auto m = subset_of(z, s);
    if (defect_of(z, m) != delta)
        throw NotInFamilyError(to_string(s) + " does not have defect " + std::to_string(delta) + " in the family of " +
                               to_string(z.symbol()));
    return m;
}

SinglesSubset require_kind(const SpecialSymbol& z, const Symbol& s, FamilyKind kind) {
    const auto m = subset_of(z, s);
    if (!subset_in_family(z, m, kind))
        throw NotInFamilyError(to_string(s) + " is outside the requested family of " + to_string(z.symbol()));
    return m;
}

void require_defect_of_z(const SpecialSymbol& z, int d) {
    if (z.defect() != d)
        throw DomainError("expected a special symbol of defect " + std::to_string(d) + ", got " + to_string(z.symbol()));
}

}  // namespace

UniformVector tensor(const SpecialSymbol& z, const SpecialSymbol& zp, const CharacterVector& x,
                     const CharacterVector& y) {
    UniformVector out;
    for (const auto& [l, a] : x.entries())
        for (const auto& [r, b] : y.entries()) out.add({z.symbol(), zp.symbol(), l, r}, a * b);
    return out;
}

CharacterVector r_sigma_sp(const SpecialSymbol& z, const Symbol& sigma) {
    require_defect_of_z(z, 1);
    const auto s = require_defect(z, sigma, 1);
    const Dyadic scale = Dyadic::pow2_inv(degree(z));
    CharacterVector out;
    for (auto m : family_subsets(z, FamilyKind::Sp)) out.add(lambda_of(z, m), signed_unit(pairing(s, m)) * scale);
    return out;
}

CharacterVector r_sigma_orth(const SpecialSymbol& zp, const Symbol& sigma, Sign sign) {
    require_defect_of_z(zp, 0);
    const auto s = require_defect(zp, sigma, 0);
    CharacterVector out;
    if (is_degenerate(zp)) {
        if (sign == Sign::Plus) out.add(zp.symbol(), 1);
        return out;
    }
    const Dyadic scale = Dyadic::pow2_inv(degree(zp) - 1);
    for (auto n : family_subsets(zp, orth_kind(sign))) out.add(lambda_of(zp, n), signed_unit(pairing(s, n)) * scale);
    return out;
}

CharacterVector rho_sharp_sp(const SpecialSymbol& z, const Symbol& lam) {
    require_defect_of_z(z, 1);
    const auto l = require_kind(z, lam, FamilyKind::Sp);
    CharacterVector out;
    for (auto s : family_subsets_with_defect(z, 1))
        out += r_sigma_sp(z, lambda_of(z, s)).scaled(signed_unit(pairing(s, l)));
    return out.scaled(Dyadic::pow2_inv(degree(z)));
}

CharacterVector rho_sharp_orth(const SpecialSymbol& zp, const Symbol& lam, Sign sign) {
    require_defect_of_z(zp, 0);
    const auto l = require_kind(zp, lam, orth_kind(sign));
    CharacterVector out;
    if (is_degenerate(zp)) {
        out.add(zp.symbol(), 1);
        return out;
    }
    for (auto s : family_subsets_with_defect(zp, 0))
        out += r_sigma_orth(zp, lambda_of(zp, s), sign).scaled(signed_unit(pairing(s, l)));
    return out.scaled(Dyadic::pow2_inv(degree(zp) + 1));
}

CharacterVector project_sp(const SpecialSymbol& z, const CharacterVector& v) {
    CharacterVector out;
    for (const auto& [lam, c] : v.entries()) out += rho_sharp_sp(z, lam).scaled(c);
    return out;
}

CharacterVector project_orth(const SpecialSymbol& zp, const CharacterVector& v, Sign sign) {
    CharacterVector out;
    for (const auto& [lam, c] : v.entries()) out += rho_sharp_orth(zp, lam, sign).scaled(c);
    return out;
}

UniformVector theorem_lhs(const SpecialSymbol& z, const SpecialSymbol& zp, Sign sign, HalfConvention half) {
    UniformVector out;
    for (const auto& [s, sp] : relation(z, zp, RelationKind::D).pairs)
        out += tensor(z, zp, r_sigma_sp(z, s), r_sigma_orth(zp, sp, sign));
    return out.scaled(pair_weight(zp, half));
}

UniformVector theorem_rhs(const SpecialSymbol& z, const SpecialSymbol& zp, Sign sign) {
    const RelationKind kind = sign == Sign::Plus ? RelationKind::BPlus : RelationKind::BMinus;
    UniformVector out;
    for (const auto& [l, lp] : relation(z, zp, kind).pairs)
        out += tensor(z, zp, rho_sharp_sp(z, l), rho_sharp_orth(zp, lp, sign));
    return out;
}

TheoremCheck verify_theorem(const SpecialSymbol& z, const SpecialSymbol& zp, Sign sign, HalfConvention half) {
    TheoremCheck res;
    res.diff = theorem_lhs(z, zp, sign, half) - theorem_rhs(z, zp, sign);
    res.equal = res.diff.is_zero();
    return res;
}

BiPartition epsilon0(const BiPartition& b) { return {b.bottom, b.top}; }

std::vector<BiPartition> induced_bipartitions(const BiPartition& b, int n) {
    const int k = b.size();
    if (k > n) throw DomainError("cannot induce a bi-partition of " + std::to_string(k) + " up to " + std::to_string(n));
    std::vector<BiPartition> out;
    for (auto& top : horizontal_extensions(b.top, n - k)) out.push_back({std::move(top), b.bottom});
    return out;
}

UniformVector amr_uniform(int n, int n_prime, Sign sign, HalfConvention half) {
    std::map<Symbol, CharacterVector> left_cache;
    std::map<Symbol, CharacterVector> right_cache;
    const auto r_left = [&](const Symbol& s) -> const CharacterVector& {
        auto it = left_cache.find(s);
        if (it == left_cache.end()) it = left_cache.emplace(s, r_sigma_sp(special_of(s), s)).first;
        return it->second;
    };
    const auto r_right = [&](const Symbol& s) -> const CharacterVector& {
        auto it = right_cache.find(s);
        if (it == right_cache.end()) it = right_cache.emplace(s, r_sigma_orth(special_of(s), s, sign)).first;
        return it->second;
    };

    UniformVector out;
    for (int k = 0; k <= std::min(n, n_prime); ++k) {
        for (const auto& chi : bipartitions_of(k)) {
            const auto lefts = induced_bipartitions(chi, n);
            const auto rights = induced_bipartitions(epsilon0(chi), n_prime);
            for (const auto& lb : lefts) {
                const Symbol s = upsilon_inverse(lb, 1);
                const SpecialSymbol z = special_of(s);
                const auto& rs = r_left(s);
                for (const auto& rb : rights) {
                    const Symbol sp = upsilon_inverse(rb, 0);
                    const SpecialSymbol zp = special_of(sp);
                    out += tensor(z, zp, rs, r_right(sp)).scaled(pair_weight(zp, half));
                }
            }
        }
    }
    return out;
}

UniformVector block_sum_lhs(int n, int n_prime, Sign sign, HalfConvention half) {
    UniformVector out;
    for (const auto& z : enumerate_special(n, 1))
        for (const auto& zp : enumerate_special(n_prime, 0)) out += theorem_lhs(z, zp, sign, half);
    return out;
}

bool verify_amr_consistency(int n, int n_prime, Sign sign, HalfConvention half) {
    return amr_uniform(n, n_prime, sign, half) == block_sum_lhs(n, n_prime, sign, half);
}

}  // namespace howe
