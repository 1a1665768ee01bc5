#pragma once

#include <compare>
#include <map>
#include <vector>

#include "howe/dyadic.hpp"
#include "howe/relations.hpp"

namespace howe {

/// Finite formal combination of basis vectors with dyadic coefficients.
/// Zero coefficients are never stored.
template <class Key>
class SparseVector {
public:
    using Map = std::map<Key, Dyadic>;

    const Map& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    Dyadic operator[](const Key& k) const {
        const auto it = entries_.find(k);
        return it == entries_.end() ? Dyadic{} : it->second;
    }

    void add(const Key& k, const Dyadic& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = entries_.try_emplace(k, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    SparseVector& operator+=(const SparseVector& o) {
        for (const auto& [k, v] : o.entries_) add(k, v);
        return *this;
    }
    SparseVector& operator-=(const SparseVector& o) {
        for (const auto& [k, v] : o.entries_) add(k, -v);
        return *this;
    }
    SparseVector scaled(const Dyadic& s) const {
        SparseVector out;
        if (s.is_zero()) return out;
        for (const auto& [k, v] : entries_) out.entries_.emplace(k, v * s);
        return out;
    }

    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    Map entries_;
};

template <class Key>
Dyadic inner(const SparseVector<Key>& x, const SparseVector<Key>& y) {
    Dyadic s;
    for (const auto& [k, v] : x.entries()) s += v * y[k];
    return s;
}

template <class Key>
Dyadic norm2(const SparseVector<Key>& x) {
    return inner(x, x);
}

/// Coefficients against the formal orthonormal basis ρ_Λ.
using CharacterVector = SparseVector<Symbol>;

/// Basis key ρ_Λ ⊗ ρ_Λ' inside the block (Z, Z').
struct TensorKey {
    Symbol z;
    Symbol zp;
    Symbol lam;
    Symbol lamp;

    friend bool operator==(const TensorKey&, const TensorKey&) = default;
    friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
};

using UniformVector = SparseVector<TensorKey>;

UniformVector tensor(const SpecialSymbol& z, const SpecialSymbol& zp, const CharacterVector& x,
                     const CharacterVector& y);

/// R_Σ for Σ ∈ S_{Z,1}: coefficient (-1)^<Σ,Λ> 2^-δ on each Λ ∈ S_Z.
CharacterVector r_sigma_sp(const SpecialSymbol& z, const Symbol& sigma);
/// R_Σ for Σ ∈ S_{Z',0}: coefficient (-1)^<Σ,Λ> 2^-(δ-1) on each Λ ∈ Sε_Z'.
/// Degenerate Z': ρ_Z' for ε = +, zero for ε = -.
CharacterVector r_sigma_orth(const SpecialSymbol& zp, const Symbol& sigma, Sign sign);

/// ρ♯_Λ = 2^-δ Σ_{Σ ∈ S_{Z,1}} (-1)^<Σ,Λ> R_Σ, for Λ ∈ S_Z.
CharacterVector rho_sharp_sp(const SpecialSymbol& z, const Symbol& lam);
/// ρ♯_Λ = 2^-(δ+1) Σ_{Σ ∈ S_{Z',0}} (-1)^<Σ,Λ> R_Σ, for Λ ∈ Sε_Z'.
/// Degenerate Z' with ε = +: ρ_Z'.
CharacterVector rho_sharp_orth(const SpecialSymbol& zp, const Symbol& lam, Sign sign);

/// Orthogonal projection onto span{R_Σ}, computed from the ♯ formulas.
CharacterVector project_sp(const SpecialSymbol& z, const CharacterVector& v);
CharacterVector project_orth(const SpecialSymbol& zp, const CharacterVector& v, Sign sign);

/// How the factor 1/2 in front of the D-sum is applied.
enum class HalfConvention {
    /// 1/2 on every pair, except weight 1 when Σ' is degenerate (Σ' = Σ'^t).
    CollapseDegenerate,
    /// 1/2 on every pair.
    Literal,
};

/// 1/2 Σ_{(Σ,Σ') ∈ D} R_Σ ⊗ R_Σ'.
UniformVector theorem_lhs(const SpecialSymbol& z, const SpecialSymbol& zp, Sign sign,
                          HalfConvention half = HalfConvention::CollapseDegenerate);
/// Σ_{(Λ,Λ') ∈ Bε} ρ♯_Λ ⊗ ρ♯_Λ'.
UniformVector theorem_rhs(const SpecialSymbol& z, const SpecialSymbol& zp, Sign sign);

struct TheoremCheck {
    bool equal = false;
    UniformVector diff;  ///< lhs - rhs
};

TheoremCheck verify_theorem(const SpecialSymbol& z, const SpecialSymbol& zp, Sign sign,
                            HalfConvention half = HalfConvention::CollapseDegenerate);

/// Swap of the two rows of a bi-partition.
BiPartition epsilon0(const BiPartition& b);
/// {(λ; bottom(b)) : λ/top(b) a horizontal strip of n - |b| boxes}.
/// Throws DomainError if |b| > n.
std::vector<BiPartition> induced_bipartitions(const BiPartition& b, int n);

/// 1/2 Σ_k Σ_{χ ∈ E(W_k)} R_{I_{n,k}(χ)} ⊗ R_{I_{n',k}(ε_0 χ)}, with every
/// constituent R expanded inside its special-symbol block.
UniformVector amr_uniform(int n, int n_prime, Sign sign, HalfConvention half = HalfConvention::CollapseDegenerate);
/// Σ over special (Z, Z') of ranks (n, n') of theorem_lhs.
UniformVector block_sum_lhs(int n, int n_prime, Sign sign, HalfConvention half = HalfConvention::CollapseDegenerate);
bool verify_amr_consistency(int n, int n_prime, Sign sign, HalfConvention half = HalfConvention::CollapseDegenerate);

}  // namespace howe
