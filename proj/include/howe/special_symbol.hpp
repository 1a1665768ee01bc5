#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "howe/symbol.hpp"

namespace howe {

/// A subset M of the singles Z_I, as a bitmask over the canonical singles
/// order (strictly decreasing value). Bit i refers to SpecialSymbol::single(i).
struct SinglesSubset {
    std::uint32_t mask = 0;

    int count() const { return __builtin_popcount(mask); }
    bool contains(int bit) const { return (mask >> bit) & 1U; }
    bool empty() const { return mask == 0; }

    friend SinglesSubset operator^(SinglesSubset a, SinglesSubset b) { return {a.mask ^ b.mask}; }
    friend SinglesSubset operator&(SinglesSubset a, SinglesSubset b) { return {a.mask & b.mask}; }
    friend SinglesSubset operator|(SinglesSubset a, SinglesSubset b) { return {a.mask | b.mask}; }
    friend bool operator==(SinglesSubset, SinglesSubset) = default;
    friend auto operator<=>(SinglesSubset, SinglesSubset) = default;
};

/// A special symbol of defect 0 or 1: a_1 >= b_1 >= a_2 >= b_2 >= ...
class SpecialSymbol {
public:
    /// Throws DomainError unless `s` has defect 0 or 1 and interleaves.
    explicit SpecialSymbol(Symbol s);

    static bool is_special(const Symbol& s);

    const Symbol& symbol() const { return sym_; }
    int defect() const { return howe::defect(sym_); }
    /// m, where size is (m+1, m) for defect 1 and (m, m) for defect 0.
    int m() const { return static_cast<int>(sym_.bottom().size()); }

    /// Singles in strictly decreasing value order, with their row in Z.
    const std::vector<Entry>& singles_list() const { return singles_; }
    Entry single(int bit) const { return singles_[static_cast<std::size_t>(bit)]; }
    int single_count() const { return static_cast<int>(singles_.size()); }
    /// Bit position of a single, or nullopt if `e` is not a single of Z.
    std::optional<int> bit_of(Entry e) const;
    /// Values shared by both rows, decreasing.
    const std::vector<int>& doubles() const { return doubles_; }

    SinglesSubset all_singles() const { return {(std::uint32_t{1} << singles_.size()) - 1U}; }

    friend bool operator==(const SpecialSymbol& a, const SpecialSymbol& b) { return a.sym_ == b.sym_; }
    friend auto operator<=>(const SpecialSymbol& a, const SpecialSymbol& b) { return a.sym_ <=> b.sym_; }

private:
    Symbol sym_;
    std::vector<Entry> singles_;
    std::vector<int> doubles_;
};

/// Z_I: the rows of Z with the doubles removed.
Symbol singles(const SpecialSymbol& z);
int degree(const SpecialSymbol& z);
bool is_regular(const SpecialSymbol& z);
/// Defect 0 with no singles (Z = Z^t).
bool is_degenerate(const SpecialSymbol& z);

/// Λ_M: Z with the singles in M moved to the opposite row.
Symbol lambda_of(const SpecialSymbol& z, SinglesSubset m);
/// defect(Λ_M) without building the symbol.
int defect_of(const SpecialSymbol& z, SinglesSubset m);
/// The unique M with Λ_M == lam; throws NotInFamilyError otherwise.
SinglesSubset subset_of(const SpecialSymbol& z, const Symbol& lam);
bool in_family(const SpecialSymbol& z, const Symbol& lam);

/// Λ_M + Λ_N = Λ_{M xor N}.
Symbol add(const SpecialSymbol& z, const Symbol& lam1, const Symbol& lam2);
/// <Λ_M, Λ_N> = |M ∩ N| mod 2.
int pairing(const SpecialSymbol& z, const Symbol& lam1, const Symbol& lam2);
inline int pairing(SinglesSubset m, SinglesSubset n) { return (m & n).count() & 1; }

enum class FamilyKind {
    Bar,    ///< S̄_Z, all 2^|Z_I| symbols
    Sp,     ///< S_Z, defect ≡ 1 mod 4 (Z of defect 1)
    Plus,   ///< S+_Z, defect ≡ 0 mod 4 (Z of defect 0)
    Minus,  ///< S-_Z, defect ≡ 2 mod 4 (Z of defect 0)
};

/// Subsets M whose Λ_M belongs to the family, in increasing mask order.
/// Throws DomainError if the kind does not match defect(z).
std::vector<SinglesSubset> family_subsets(const SpecialSymbol& z, FamilyKind kind);
/// Subsets M with defect(Λ_M) == delta, in increasing mask order.
std::vector<SinglesSubset> family_subsets_with_defect(const SpecialSymbol& z, int delta);
bool subset_in_family(const SpecialSymbol& z, SinglesSubset m, FamilyKind kind);

/// The family as symbols, sorted lexicographically.
std::vector<Symbol> family(const SpecialSymbol& z, FamilyKind kind);
std::vector<Symbol> family_with_defect(const SpecialSymbol& z, int delta);

/// Special symbols of rank n and defect d ∈ {0, 1}, sorted.
std::vector<SpecialSymbol> enumerate_special(int n, int d);

/// The special symbol Z (of defect 0 or 1 according to the parity of the
/// entry count) with s ∈ S̄_Z. Requires |defect(s)| parity to match.
SpecialSymbol special_of(const Symbol& s);

/// Subset literal "{t:2, b:1}": entries of Z_I tagged with their row in Z.
std::string format_subset(const SpecialSymbol& z, SinglesSubset m);
SinglesSubset parse_subset(const SpecialSymbol& z, std::string_view text);

}  // namespace howe
