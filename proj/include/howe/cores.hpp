#pragma once

#include <compare>
#include <vector>

#include "howe/relations.hpp"

namespace howe {

/// Two singles of a special symbol, one in each row, with no entry of the
/// symbol (single or double) strictly between their values.
struct ConsecutivePair {
    int top = 0;
    int bottom = 0;

    friend bool operator==(const ConsecutivePair&, const ConsecutivePair&) = default;
    friend auto operator<=>(const ConsecutivePair&, const ConsecutivePair&) = default;
};

/// Mutually disjoint consecutive pairs, listed by decreasing max value.
using PairSet = std::vector<ConsecutivePair>;

/// Ordered by decreasing value of the larger entry.
std::vector<ConsecutivePair> consecutive_pairs(const SpecialSymbol& z);

SinglesSubset subset_of(const SpecialSymbol& z, const ConsecutivePair& p);
SinglesSubset subset_of(const SpecialSymbol& z, const PairSet& ps);
/// Λ_Ψ for every Ψ <= ps (unions of sub-collections), as subsets.
std::vector<SinglesSubset> sub_unions(const SpecialSymbol& z, const PairSet& ps);

struct CoreResult {
    bool d_nonempty = false;
    PairSet pairs;
};

/// Ψ'_0 ⊆ Z'_I: consecutive pairs Ψ' of Z'_I with (Z, Λ_Ψ') ∈ D.
/// Throws CoreStructureError if two of them overlap or if the brute-force
/// fiber D_Z is not {Λ_Ψ' : Ψ' <= Ψ'_0}.
CoreResult core_prime(const SpecialSymbol& z, const SpecialSymbol& zp);
/// Ψ_0 ⊆ Z_I, mirrored against the fiber D_Z'.
CoreResult core(const SpecialSymbol& z, const SpecialSymbol& zp);

/// Entrywise criterion for (Z, Λ_Ψ') ∈ D when D ≠ ∅, Ψ' a pair of Z'_I.
/// False if the pair is not of the shape (c_k over d_l) with l in {k-1, k}
/// or the sizes are incompatible.
bool pair_condition_prime(const SpecialSymbol& z, const SpecialSymbol& zp, const ConsecutivePair& p);
/// Entrywise criterion for (Λ_Ψ, Z') ∈ D, Ψ a pair of Z_I.
bool pair_condition(const SpecialSymbol& z, const SpecialSymbol& zp, const ConsecutivePair& p);

bool is_one_to_one(const SpecialSymbol& z, const SpecialSymbol& zp);

/// Members Λ_M of the family with M disjoint from every entry of psi.
std::vector<Symbol> restricted_family(const SpecialSymbol& z, const PairSet& psi, FamilyKind kind);
std::vector<Symbol> restricted_family_with_defect(const SpecialSymbol& z, const PairSet& psi, int delta);

struct DecompositionReport {
    bool d_nonempty = false;
    bool matches = false;         ///< brute-force Bε equals the product form
    bool natural_one_to_one = false;
    std::vector<SymbolPair> natural;  ///< Bε restricted to the core-avoiding families
};

DecompositionReport decomposition(const SpecialSymbol& z, const SpecialSymbol& zp, Sign sign);
/// matches && natural_one_to_one. With D empty both cores are empty and the
/// product form is Bε itself.
bool decomposition_check(const SpecialSymbol& z, const SpecialSymbol& zp, Sign sign);

/// "[c|d]", the pair as a one-by-one symbol literal.
std::string to_string(const ConsecutivePair& p);

}  // namespace howe
