#include "bier/classify.hpp"

#include <cassert>
#include <stdexcept>

namespace bier {

std::string HomotopyClass::tag_name() const
{
    switch (tag) {
    case HomotopyTag::CrossPolytopeBoundary: return "cross-polytope";
    case HomotopyTag::SphereCodimTwo: return "codim-2-sphere";
    case HomotopyTag::Contractible: return "contractible";
    case HomotopyTag::SuspendedLink: return "suspended-link";
    }
    return "?";
}

namespace detail {

Complex link_in_restriction(const Complex& K, VertexSubset I, VertexSubset J)
{
    std::vector<VertexSubset> faces;
    for_each_subset_of(I - J, [&](VertexSubset t) {
        if (K.contains(t | J)) faces.push_back(t);
    });
    return Complex(K.ground_size(), std::move(faces), Complex::Unchecked{});
}

Complex dual_link_in_restriction(const Complex& K, VertexSubset I, VertexSubset J)
{
    const VertexSubset ground = K.ground_mask();
    std::vector<VertexSubset> faces;
    for_each_subset_of(J - I, [&](VertexSubset t) {
        if (!K.contains(ground - (t | I))) faces.push_back(t);
    });
    return Complex(K.ground_size(), std::move(faces), Complex::Unchecked{});
}

} // namespace detail

HomotopyClass classify(const Complex& K, VertexSubset I, VertexSubset J)
{
    const int m = K.ground_size();
    if (K.face_count() == (std::uint64_t(1) << m)) throw std::invalid_argument("classify requires K ≠ 2^[m]");
    if (!I.subset_of(K.ground_mask()) || !J.subset_of(K.ground_mask()))
        throw std::invalid_argument("I, J must lie inside {1..m}");

    // Ī ∈ K̂  ⟺  [m]∖I ∉ K, so the dual is never materialized here.
    const bool I_in_K = K.contains(I);
    const bool Ibar_in_dual = !K.contains(K.ground_mask() - I);

    HomotopyClass out;
    if (I == J) {
        if (I_in_K && Ibar_in_dual) {
            out.tag = HomotopyTag::CrossPolytopeBoundary;
            out.sphere_rank = I.size();
        } else if (!I_in_K && !Ibar_in_dual) {
            out.tag = HomotopyTag::SphereCodimTwo;
            out.sphere_rank = I.size();
        } else {
            out.tag = HomotopyTag::Contractible;
        }
        return out;
    }
    if (J.proper_subset_of(I) && K.contains(J)) {
        out.tag = HomotopyTag::SuspendedLink;
        out.suspension_steps = J.size();
        out.link = detail::link_in_restriction(K, I, J);
        out.side = LinkSide::Plain;
        return out;
    }
    if (I.proper_subset_of(J) && Ibar_in_dual) {
        out.tag = HomotopyTag::SuspendedLink;
        out.suspension_steps = I.size();
        out.link = detail::dual_link_in_restriction(K, I, J);
        out.side = LinkSide::Barred;
        return out;
    }
    // Remaining inputs: incomparable I, J; or a proper inclusion whose
    // membership hypothesis fails.  All are contractible.
    assert((!I.subset_of(J) && !J.subset_of(I)) || (J.proper_subset_of(I) && !K.contains(J)) ||
           (I.proper_subset_of(J) && !Ibar_in_dual));
    out.tag = HomotopyTag::Contractible;
    return out;
}

ReducedBetti class_reduced_betti(const HomotopyClass& c)
{
    switch (c.tag) {
    case HomotopyTag::CrossPolytopeBoundary: return ReducedBetti::sphere(c.sphere_rank - 1);
    case HomotopyTag::SphereCodimTwo: return ReducedBetti::sphere(c.sphere_rank - 2);
    case HomotopyTag::Contractible: return ReducedBetti();
    case HomotopyTag::SuspendedLink:
        return detail::reduced_betti_of_family(c.link->faces()).shifted(c.suspension_steps);
    }
    return ReducedBetti();
}

} // namespace bier
