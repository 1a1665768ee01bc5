#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "howe/special_symbol.hpp"

namespace howe {

enum class Sign { Plus, Minus };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline const char* sign_text(Sign s) { return s == Sign::Plus ? "+" : "-"; }
Sign parse_sign(std::string_view text);

enum class RelationKind { BarPlus, BarMinus, BPlus, BMinus, D };

Sign sign_of(RelationKind k);
std::string kind_text(RelationKind k);
/// "bar+", "bar-", "B+", "B-", "D".
RelationKind parse_kind(std::string_view text);

using SymbolPair = std::pair<Symbol, Symbol>;

struct RelationTable {
    SpecialSymbol z;
    SpecialSymbol zp;
    RelationKind kind;
    std::vector<SymbolPair> pairs;  // sorted

    Sign sign() const { return sign_of(kind); }
    bool contains(const Symbol& lam, const Symbol& lamp) const;
    bool empty() const { return pairs.empty(); }
};

/// The defining condition of B̄±, evaluated on Υ images and defects only.
bool related_bar(const Symbol& lam, const Symbol& lamp, Sign sign);
/// As above, after checking lam ∈ S̄_Z and lamp ∈ S̄_Z' (NotInFamilyError).
bool related_bar(const SpecialSymbol& z, const SpecialSymbol& zp, const Symbol& lam, const Symbol& lamp, Sign sign);

/// The same relation via the entrywise inequality chains. Row entries past
/// the end are read as x_i = len - i. False when the sizes are not of the
/// form (m1+m2 = 2m+1, m1'+m2' = 2m') with m' in {m, m+1}.
bool related_ineq(const Symbol& lam, const Symbol& lamp, Sign sign);
bool related_ineq(const SpecialSymbol& z, const SpecialSymbol& zp, const Symbol& lam, const Symbol& lamp, Sign sign);

/// Left and right domains of a relation kind.
std::vector<Symbol> left_domain(const SpecialSymbol& z, RelationKind kind);
std::vector<Symbol> right_domain(const SpecialSymbol& zp, RelationKind kind);

/// Requires defect(z) == 1 and defect(zp) == 0 (DomainError otherwise).
RelationTable relation(const SpecialSymbol& z, const SpecialSymbol& zp, RelationKind kind);

enum class Side { Left, Right };

/// Fiber through `fixed` inside the kind's domain: with Side::Left the
/// partners Λ' of Λ = fixed, with Side::Right the partners Λ of Λ' = fixed.
std::vector<Symbol> fiber(const SpecialSymbol& z, const SpecialSymbol& zp, RelationKind kind, const Symbol& fixed,
                          Side side);

/// size(z) = (m+1, m) and size(zp) = (m', m') with m' in {m, m+1}.
bool size_compatible(const SpecialSymbol& z, const SpecialSymbol& zp);

using SpecialPair = std::pair<SpecialSymbol, SpecialSymbol>;

/// Every (Z, Z') with rank(Z) <= nmax, rank(Z') <= npmax, defects 1 and 0,
/// ordered by (rank Z, Z, rank Z', Z').
std::vector<SpecialPair> special_pairs(int nmax, int npmax);

/// Pairs (Λ, Λ') in S̄_Z × S̄_Z' where related_ineq and related_bar disagree.
std::vector<SymbolPair> cross_check(const SpecialSymbol& z, const SpecialSymbol& zp, Sign sign);

}  // namespace howe
