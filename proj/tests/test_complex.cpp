#include <doctest.h>

#include "bier/complex.hpp"
#include "bier/corpus.hpp"
#include "bier/homology.hpp"

using namespace bier;

namespace {

Complex m4_example()
{
    return make_complex(4, {VertexSubset::of({1, 2, 3}), VertexSubset::of({4})});
}

Complex square_boundary()
{
    return make_complex(4, {VertexSubset::of({1, 2}), VertexSubset::of({2, 3}), VertexSubset::of({3, 4}),
                            VertexSubset::of({1, 4})});
}

} // namespace

TEST_CASE("closure of a facet list")
{
    Complex K = m4_example();
    CHECK(K.face_count() == 9);
    std::vector<VertexSubset> expected = {
        VertexSubset(),          VertexSubset::of({1}),    VertexSubset::of({2}),    VertexSubset::of({3}),
        VertexSubset::of({4}),   VertexSubset::of({1, 2}), VertexSubset::of({1, 3}), VertexSubset::of({2, 3}),
        VertexSubset::of({1, 2, 3})};
    CHECK(K.faces() == expected);

    Complex empty = make_complex(3, {});
    CHECK(empty.face_count() == 1);
    CHECK(empty.ground_size() == 3);
    CHECK(empty.dim() == -1);

    Complex dedup = make_complex(5, {VertexSubset::of({1, 2}), VertexSubset::of({2, 1}), VertexSubset::of({1})});
    CHECK(dedup.face_count() == 4);
    CHECK(dedup.ground_size() == 5);

    CHECK_THROWS_WITH_AS(make_complex(4, {VertexSubset::of({5})}), doctest::Contains("5"), std::invalid_argument);
}

TEST_CASE("face membership")
{
    Complex K = m4_example();
    CHECK(is_face(K, VertexSubset::of({1, 2, 3})));
    CHECK(is_face(K, VertexSubset()));
    CHECK_FALSE(is_face(K, VertexSubset::of({1, 4})));
    CHECK_THROWS_AS(is_face(K, VertexSubset::of({6})), std::invalid_argument);
}

TEST_CASE("facets")
{
    Complex K = m4_example();
    CHECK(facets(K) == std::vector<VertexSubset>{VertexSubset::of({4}), VertexSubset::of({1, 2, 3})});
    CHECK(facets(make_complex(3, {})) == std::vector<VertexSubset>{VertexSubset()});
    auto sq = facets(square_boundary());
    CHECK(sq == std::vector<VertexSubset>{VertexSubset::of({1, 2}), VertexSubset::of({1, 4}), VertexSubset::of({2, 3}),
                                          VertexSubset::of({3, 4})});
}

TEST_CASE("full subcomplex")
{
    Complex K = m4_example();
    Complex R = full_subcomplex(K, VertexSubset::of({1, 2, 4}));
    CHECK(R.ground_size() == 4);
    CHECK(R.faces() == std::vector<VertexSubset>{VertexSubset(), VertexSubset::of({1}), VertexSubset::of({2}),
                                                 VertexSubset::of({4}), VertexSubset::of({1, 2})});
    CHECK(full_subcomplex(K, K.ground_mask()) == K);
    CHECK(full_subcomplex(K, VertexSubset()).face_count() == 1);
}

TEST_CASE("link")
{
    Complex K = m4_example();
    Complex R = full_subcomplex(K, VertexSubset::of({1, 2, 4}));
    CHECK(link(R, VertexSubset::of({1, 2})).face_count() == 1);
    CHECK(link(K, VertexSubset()) == K);
    Complex L = link(square_boundary(), VertexSubset::of({1}));
    CHECK(L.faces() == std::vector<VertexSubset>{VertexSubset(), VertexSubset::of({2}), VertexSubset::of({4})});
    CHECK_THROWS_WITH_AS(link(K, VertexSubset::of({1, 4})), doctest::Contains("not a face"), std::invalid_argument);
}

TEST_CASE("join")
{
    Complex point = make_complex(1, {VertexSubset::of({1})});
    Complex edge = join(point, point);
    CHECK(edge.ground_size() == 2);
    CHECK(edge.face_count() == 4);

    Complex K = m4_example();
    Complex J = join(K, make_complex(2, {}));
    CHECK(J.ground_size() == 6);
    CHECK(Complex::same_faces(J, K));

    Complex s0 = make_complex(2, {VertexSubset::of({1}), VertexSubset::of({2})});
    Complex cycle = join(s0, s0);
    CHECK(reduced_betti_q(cycle) == ReducedBetti::sphere(1)); // S^0 * S^0 = S^1
    CHECK(f_vector(cycle) == std::vector<long long>{4, 4});
}

TEST_CASE("suspension")
{
    Complex empty1 = make_complex(1, {});
    Complex s0 = suspension(empty1, 1);
    CHECK(s0.ground_size() == 3);
    CHECK(reduced_betti_q(s0) == ReducedBetti::sphere(0));

    CHECK(reduced_betti_q(suspension(empty1, 2)) == ReducedBetti::sphere(1));

    Complex base = make_complex(2, {VertexSubset::of({1}), VertexSubset::of({2})});
    CHECK(Complex::same_faces(suspension(base, 1), join(base, base)));
    CHECK(suspension(base, 0) == base);
}

TEST_CASE("alexander dual")
{
    Complex K = m4_example();
    Complex D = alexander_dual(K);
    CHECK(facets(D) == std::vector<VertexSubset>{VertexSubset::of({1, 2}), VertexSubset::of({1, 3}),
                                                 VertexSubset::of({2, 3})});
    CHECK_FALSE(D.contains(VertexSubset::of({4}))); // 4̄ is a ghost

    Complex interval = make_complex(3, {VertexSubset::of({1, 2})});
    CHECK(alexander_dual(interval) == interval); // self-dual

    Complex almost_full = skeleton_simplex(3, 1); // 2^[3] minus the top face
    CHECK(alexander_dual(almost_full).face_count() == 1);

    Complex full = make_complex(2, {VertexSubset::of({1, 2})});
    CHECK_THROWS_WITH_AS(alexander_dual(full), doctest::Contains("void"), std::invalid_argument);
}

TEST_CASE("f and h vectors")
{
    Complex sq = square_boundary();
    CHECK(f_vector(sq) == std::vector<long long>{4, 4});
    CHECK(h_vector(sq, 2).h == std::vector<long long>{1, 2, 1});

    CHECK(h_vector(make_complex(3, {}), 0).h == std::vector<long long>{1});

    CHECK_THROWS_AS(h_vector(sq, 1), std::invalid_argument);

    CHECK(h_vector(sq) == h_vector(sq, 2)); // default rank is dim+1
}

TEST_CASE("skeleton of a simplex")
{
    Complex s = skeleton_simplex(4, 2);
    CHECK(s.face_count() == 15); // all subsets of [4] except [4] itself
    CHECK(s.dim() == 2);
    CHECK(skeleton_simplex(5, -1).face_count() == 1);
    CHECK(skeleton_simplex(5, 1).face_count() == 16); // complete graph K5
    CHECK_THROWS_AS(skeleton_simplex(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(skeleton_simplex(4, -2), std::invalid_argument);
}

TEST_CASE("euler characteristic")
{
    CHECK(euler_characteristic(square_boundary()) == 0);
    CHECK(euler_characteristic(make_complex(2, {})) == 0);
}

TEST_CASE("canonical order determinism")
{
    Complex a = make_complex(4, {VertexSubset::of({1, 2, 3}), VertexSubset::of({4})});
    Complex b = make_complex(4, {VertexSubset::of({4}), VertexSubset::of({2, 3, 1}), VertexSubset::of({1, 2})});
    CHECK(serialize_faces(a) == serialize_faces(b));
    CHECK(serialize_faces(a) == serialize_faces(a));
}

TEST_CASE("canonical subset order is cardinality then lex")
{
    CHECK(canonical_less(VertexSubset::of({1, 4}), VertexSubset::of({2, 3})));
    CHECK_FALSE(canonical_less(VertexSubset::of({2, 3}), VertexSubset::of({1, 4})));
    CHECK(canonical_less(VertexSubset::of({3}), VertexSubset::of({1, 2})));
}

TEST_CASE("property: dual involution")
{
    for (int m = 2; m <= 8; ++m) {
        RandomComplexSource src(m, 7000 + static_cast<std::uint64_t>(m));
        for (int t = 0; t < 25; ++t) {
            Complex K = src.next();
            CHECK(alexander_dual(alexander_dual(K)) == K);
        }
    }
}

TEST_CASE("property: restriction of the dual")
{
    RandomComplexSource src(5, 11);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Complex K = src.next();
        const VertexSubset ground = K.ground_mask();
        const VertexSubset I(rng() & ground.bits());
        // widehat(K|_I) ⊆ K̂|_Ī: any τ ⊆ I with I∖τ ∉ K|_I has [m]∖τ ∉ K
        for_each_subset_of(I, [&](VertexSubset tau) {
            if (!K.contains(I - tau)) CHECK_FALSE(K.contains(ground - tau));
        });
    }
}

TEST_CASE("property: link composition")
{
    RandomComplexSource src(6, 12);
    for (int t = 0; t < 30; ++t) {
        Complex K = src.next();
        for (VertexSubset f : K.faces()) {
            if (f.size() < 2) continue;
            const int v = f.members().front();
            const VertexSubset sigma = VertexSubset::single(v);
            const VertexSubset tau = f - sigma;
            CHECK(link(link(K, sigma), tau) == link(K, f));
            break;
        }
    }
}

TEST_CASE("property: suspension and link commute")
{
    RandomComplexSource src(5, 13);
    for (int t = 0; t < 20; ++t) {
        Complex K = src.next();
        for (VertexSubset f : K.faces()) {
            if (f.empty()) continue;
            CHECK(Complex::same_faces(link(suspension(K, 1), f), suspension(link(K, f), 1)));
            break;
        }
    }
}

TEST_CASE("property: h identity")
{
    for (int m = 2; m <= 6; ++m) {
        RandomComplexSource src(m, 7700 + static_cast<std::uint64_t>(m));
        for (int t = 0; t < 20; ++t) {
            Complex K = src.next();
            const std::vector<long long> f = f_vector(K);
            const HVector h = h_vector(K, K.dim() + 1);
            long long sum = 0;
            for (long long x : h.h) sum += x;
            CHECK(sum == (f.empty() ? 1 : f.back())); // h(1) = f_top
            CHECK(h.h.front() == 1);
        }
    }
}
