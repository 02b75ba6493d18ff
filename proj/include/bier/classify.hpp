#ifndef BIER_CLASSIFY_HPP
#define BIER_CLASSIFY_HPP

#include <optional>
#include <string>

#include "bier/bier.hpp"
#include "bier/complex.hpp"
#include "bier/homology.hpp"

namespace bier {

enum class HomotopyTag {
    CrossPolytopeBoundary, // S^{r-1}, exact combinatorial form
    SphereCodimTwo,        // S^{r-2}
    Contractible,
    SuspendedLink, // Σ^k of a link complex
};

enum class LinkSide { Plain, Barred };

/// Tagged homotopy type of Bier(K)|_{I ⊔ J̄}.
struct HomotopyClass {
    HomotopyTag tag = HomotopyTag::Contractible;
    int sphere_rank = 0;                 // r = |I| for the two sphere cases
    int suspension_steps = 0;            // k for SuspendedLink
    std::optional<Complex> link;         // the link complex for SuspendedLink
    LinkSide side = LinkSide::Plain;

    std::string tag_name() const;
};

/// Five-case dispatch on (K, I, J); K must be a proper complex.
HomotopyClass classify(const Complex& K, VertexSubset I, VertexSubset J);

/// Reduced Betti vector implied by a homotopy class tag.
ReducedBetti class_reduced_betti(const HomotopyClass& c);

namespace detail {

/// Lk(J, K|_I) for J ⊆ I with J ∈ K, built directly (faces τ ⊆ I∖J with
/// τ ∪ J ∈ K) on ground size m.
Complex link_in_restriction(const Complex& K, VertexSubset I, VertexSubset J);

/// Lk(Ī, K̂|_J̄) read off K without materializing the dual: faces τ ⊆ J∖I
/// with [m]∖(τ∪I) ∉ K.
Complex dual_link_in_restriction(const Complex& K, VertexSubset I, VertexSubset J);

} // namespace detail

} // namespace bier

#endif
