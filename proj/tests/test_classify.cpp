#include <doctest.h>

#include <random>

#include "bier/classify.hpp"
#include "bier/corpus.hpp"
#include "bier/render.hpp"

using namespace bier;

namespace {

Complex m4_example()
{
    return make_complex(4, {VertexSubset::of({1, 2, 3}), VertexSubset::of({4})});
}

} // namespace

TEST_CASE("five-case dispatch on the running example")
{
    Complex K = m4_example();

    auto c1 = classify(K, VertexSubset::of({1, 2}), VertexSubset::of({1, 2}));
    CHECK(c1.tag == HomotopyTag::CrossPolytopeBoundary);
    CHECK(c1.sphere_rank == 2);

    auto c2 = classify(K, VertexSubset::of({1, 3, 4}), VertexSubset::of({1, 3, 4}));
    CHECK(c2.tag == HomotopyTag::SphereCodimTwo);
    CHECK(c2.sphere_rank == 3);
    CHECK(class_reduced_betti(c2) == ReducedBetti::sphere(1));

    auto c3 = classify(K, VertexSubset::of({1, 2, 4}), VertexSubset::of({1, 2}));
    CHECK(c3.tag == HomotopyTag::SuspendedLink);
    CHECK(c3.suspension_steps == 2);
    CHECK(c3.side == LinkSide::Plain);
    CHECK(c3.link->face_count() == 1); // Lk({1,2}, K|_I) = {∅}
    CHECK(class_reduced_betti(c3) == ReducedBetti::sphere(1));

    CHECK(classify(K, VertexSubset::of({1, 2, 4}), VertexSubset::of({1, 4})).tag == HomotopyTag::Contractible);
    CHECK(classify(K, VertexSubset::of({2, 4}), VertexSubset::of({1, 3})).tag == HomotopyTag::Contractible);
    CHECK(classify(K, VertexSubset::of({2, 3, 4}), VertexSubset::of({1, 2, 3})).tag == HomotopyTag::Contractible);
}

TEST_CASE("class reduced Betti vectors")
{
    HomotopyClass cross;
    cross.tag = HomotopyTag::CrossPolytopeBoundary;
    cross.sphere_rank = 2;
    CHECK(class_reduced_betti(cross) == ReducedBetti::sphere(1));

    HomotopyClass codim;
    codim.tag = HomotopyTag::SphereCodimTwo;
    codim.sphere_rank = 1;
    CHECK(class_reduced_betti(codim) == ReducedBetti::sphere(-1)); // the (-1)-sphere

    HomotopyClass contr;
    CHECK(class_reduced_betti(contr).is_zero());
}

TEST_CASE("degenerate index pairs")
{
    Complex K = m4_example();
    // I = J = ∅ is case 1 with r = 0: the boundary of the 0-dimensional
    // cross-polytope is {∅}
    auto c = classify(K, VertexSubset(), VertexSubset());
    CHECK(c.tag == HomotopyTag::CrossPolytopeBoundary);
    CHECK(c.sphere_rank == 0);
    CHECK(class_reduced_betti(c) == ReducedBetti::sphere(-1));

    // J = ∅ ⊊ I is case 3 with k = 0 and the unsuspended K|_I
    auto c0 = classify(K, VertexSubset::of({1, 2, 4}), VertexSubset());
    CHECK(c0.tag == HomotopyTag::SuspendedLink);
    CHECK(c0.suspension_steps == 0);
    CHECK(Complex::same_faces(*c0.link, full_subcomplex(K, VertexSubset::of({1, 2, 4}))));
}

TEST_CASE("case-1 exactness: the restriction is a join of S^0 pairs")
{
    Complex K = m4_example();
    BierComplex B = bier_sphere(K);
    const auto subsets = canonical_subsets(4);
    for (VertexSubset I : subsets) {
        if (classify(K, I, I).tag != HomotopyTag::CrossPolytopeBoundary) continue;
        Complex restriction = bier_full(B, {I, I});
        // expected: every subset of I ⊔ Ī avoiding all {i, ī} pairs
        std::vector<VertexSubset> faces;
        const std::uint64_t allowed = I.bits() | (I.bits() << 4);
        for_each_subset_of(VertexSubset(allowed), [&](VertexSubset f) {
            if (((f.bits() >> 4) & f.bits()) == 0) faces.push_back(f);
        });
        CHECK(restriction == Complex(8, std::move(faces), Complex::Unchecked{}));
    }
}

TEST_CASE("classifier rejects the power set")
{
    CHECK_THROWS_AS(classify(make_complex(2, {VertexSubset::of({1, 2})}), VertexSubset(), VertexSubset()),
                    std::invalid_argument);
}

TEST_CASE("oracle equivalence on all complexes with m <= 3")
{
    for (int m = 1; m <= 3; ++m) {
        const auto subsets = canonical_subsets(m);
        for (const Complex& K : all_complexes(m)) {
            BierComplex B = bier_sphere(K);
            for (VertexSubset I : subsets)
                for (VertexSubset J : subsets) {
                    const ReducedBetti predicted = class_reduced_betti(classify(K, I, J));
                    const ReducedBetti oracle = reduced_betti_q(bier_full(B, {I, J}));
                    REQUIRE_MESSAGE(predicted == oracle, "m=", m, " K=", serialize_faces(K), " I=", format_subset(I),
                                    " J=", format_subset(J));
                }
        }
    }
}

TEST_CASE("property: plain/barred symmetry of classification")
{
    std::mt19937_64 rng(41);
    for (int m = 2; m <= 6; ++m) {
        RandomComplexSource src(m, 4100 + static_cast<std::uint64_t>(m));
        for (int t = 0; t < 10; ++t) {
            Complex K = src.next();
            Complex D = alexander_dual(K);
            const VertexSubset I(rng() & K.ground_mask().bits());
            const VertexSubset J(rng() & K.ground_mask().bits());
            CHECK(class_reduced_betti(classify(K, I, J)) == class_reduced_betti(classify(D, J, I)));
        }
    }
}

TEST_CASE("link extraction agrees with the compositional route")
{
    // the closed Betti formula reuses these extractions; recompute them
    // independently through full_subcomplex/link/alexander_dual
    std::mt19937_64 rng(43);
    for (int m = 2; m <= 6; ++m) {
        RandomComplexSource src(m, 4300 + static_cast<std::uint64_t>(m));
        for (int t = 0; t < 10; ++t) {
            Complex K = src.next();
            const VertexSubset big(rng() & K.ground_mask().bits());
            std::vector<VertexSubset> smalls;
            for_each_subset_of(big, [&](VertexSubset s) { smalls.push_back(s); });
            const VertexSubset small = smalls[rng() % smalls.size()];
            if (small == big) continue;
            if (K.contains(small))
                CHECK(Complex::same_faces(detail::link_in_restriction(K, big, small),
                                          link(full_subcomplex(K, big), small)));
            Complex D = alexander_dual(K);
            if (D.contains(small))
                CHECK(Complex::same_faces(detail::dual_link_in_restriction(K, small, big),
                                          link(full_subcomplex(D, big), small)));
        }
    }
}

TEST_CASE("all-pairs report is in canonical pair order")
{
    Complex K = make_complex(2, {VertexSubset::of({1})});
    auto rows = all_pairs_classification(K);
    REQUIRE(rows.size() == 16);
    CHECK(rows[0].I == VertexSubset());
    CHECK(rows[0].J == VertexSubset());
    CHECK(rows[1].J == VertexSubset::of({1}));
    CHECK(rows.back().I == VertexSubset::of({1, 2}));
    CHECK(rows.back().J == VertexSubset::of({1, 2}));
}
