#pragma once

#include <map>
#include <utility>

#include "howe/relations.hpp"

namespace howe {

/// An injective map between entries (value, row) of two symbols.
struct EntryMap {
    std::map<Entry, Entry> pairs;

    /// Throws DomainError if e is not in the domain.
    Entry operator()(Entry e) const;
    bool injective() const;
};

/// (Z_(m), Z'_(m)): [2m,...,2,0 | 2m-1,...,1] and [2m-1,...,1 | 2m-2,...,0].
std::pair<SpecialSymbol, SpecialSymbol> model_symbols(int m);

/// The entry map θ for regular z (size (m+1,m)) and zp (size (m',m')):
/// m' = m+1: a_i -> d_i, b_i -> c_{i+1};  m' = m: c_i -> b_i, d_i -> a_{i+1}.
/// Throws DomainError unless both are regular and m' in {m, m+1}.
EntryMap theta_map(const SpecialSymbol& z, const SpecialSymbol& zp);

/// Λ_M -> Λ_θ(M). Input lies in S̄_Z when m' = m+1, in S̄_Z' when m' = m.
Symbol theta_plus(const SpecialSymbol& z, const SpecialSymbol& zp, const Symbol& input);
/// Λ_M -> Λ_{θ(M) ∪ {c_1}} (m' = m+1) or Λ_{θ(M) ∪ {a_1}} (m' = m).
Symbol theta_minus(const SpecialSymbol& z, const SpecialSymbol& zp, const Symbol& input);

/// a_i -> 2m+2-2i, b_i -> 2m+1-2i, onto the entries of Z_(m).
EntryMap iso_h(const SpecialSymbol& z);
/// c_i -> 2m'+1-2i, d_i -> 2m'-2i, onto the entries of Z'_(m').
EntryMap iso_h_prime(const SpecialSymbol& zp);

/// The subset of `to` singles that `map` sends M onto.
SinglesSubset transport(const EntryMap& map, const SpecialSymbol& from, const SpecialSymbol& to, SinglesSubset m);
/// Λ_M over `from` -> Λ_{map(M)} over `to`.
Symbol transport(const EntryMap& map, const SpecialSymbol& from, const SpecialSymbol& to, const Symbol& lam);

}  // namespace howe
