#ifndef BIER_BIER_HPP
#define BIER_BIER_HPP

#include <vector>

#include "bier/complex.hpp"

namespace bier {

/// Pair (I, J) selecting the full subcomplex Bier(K)|_{I ⊔ J̄}; J is stored
/// unbarred.
struct BierIndex {
    VertexSubset I;
    VertexSubset J;
    friend bool operator==(const BierIndex&, const BierIndex&) = default;
};

/// A complex on the doubled ground set [m] ⊔ [m̄] under the convention
/// vertex i ↦ plain i (1 ≤ i ≤ m) and vertex m+i ↦ barred ī.  No face may
/// contain both i and m+i; this is asserted on construction.
class BierComplex {
public:
    BierComplex(int base_m, Complex complex);

    int base_m() const { return base_m_; }
    const Complex& complex() const { return complex_; }

    friend bool operator==(const BierComplex& a, const BierComplex& b)
    {
        return a.base_m_ == b.base_m_ && a.complex_ == b.complex_;
    }

private:
    int base_m_;
    Complex complex_;
};

/// Deleted join {σ ⊔ τ̄ : σ ∈ K, τ ∈ L, σ ∩ τ = ∅} with L interpreted on the
/// barred copy; K and L must share the same ground size.
BierComplex deleted_join(const Complex& K, const Complex& L);

/// Bier sphere K ∗_Δ K̂; rejects K = 2^[m].  Postconditions checked: the
/// no-adjacent-pair condition, dim = m-2 (m ≥ 2), and the reduced Euler
/// characteristic of S^{m-2}.
BierComplex bier_sphere(const Complex& K);

/// Full subcomplex Bier(K)|_{I ⊔ J̄} as a Complex on ground size 2m
/// (unselected vertices become ghosts).
Complex bier_full(const BierComplex& B, const BierIndex& idx);

/// A_{(K,L)} = K ∪ {σ ∪ {v} : σ ∈ L̂} on ground size m+1 with v = m+1.
/// Requires L̂ ⊆ K (checked; violating inputs are rejected).  L = 2^[m]
/// yields K with one extra ghost vertex.
Complex build_A(const Complex& K, const Complex& L);

/// Cover pieces U_σ = Bier(K)|_{((I∖(I∩J))∪σ) ⊔ (J̄∖σ̄)}, one per
/// σ ∈ K|_{I∩J}, in canonical σ order.  Their union is Bier(K)|_{I⊔J̄}.
std::vector<std::pair<VertexSubset, Complex>> cover_pieces(const Complex& K, const BierIndex& idx);

/// Swaps plain and barred labels of a doubled-ground complex.
Complex swap_plain_barred(const Complex& doubled, int base_m);

} // namespace bier

#endif
