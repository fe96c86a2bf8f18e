#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "lhom/complex.hpp"

using namespace lhom;
using namespace lhom::testing;

TEST_CASE("downward closure and validation") {
    Complex K = build_complex({{"a", "b", "c"}});
    CHECK(K.contains({}));
    CHECK(K.contains({0}));
    CHECK(K.contains({0, 2}));
    CHECK(K.dim() == 2);
    CHECK_NOTHROW(validate(K));
    for (const auto& e : corpus()) CHECK_NOTHROW(validate(e.K));
}

TEST_CASE("f-vectors of standard complexes") {
    Complex full3 = standard_complex(StandardKind::Full, 3);
    CHECK(full3.f_vector() == std::vector<long>({4, 6, 4, 1}));
    Complex bd3 = standard_complex(StandardKind::Boundary, 3);
    CHECK(bd3.f_vector() == std::vector<long>({4, 6, 4}));
    CHECK(bd3.euler_characteristic() == 2);  // S^2
    Complex pt = standard_complex(StandardKind::Full, 0);
    CHECK(pt.f_vector() == std::vector<long>({1}));
    Complex empty = standard_complex(StandardKind::Boundary, 0);
    CHECK(empty.dim() == -1);  // boundary of a point is {phi}
}

TEST_CASE("link identities") {
    for (const auto& e : corpus(false)) {
        // link over phi is the complex itself
        Complex lk = link(e.K, {});
        CHECK(lk.all_simplices() == e.K.all_simplices());
    }
    // link of the top simplex of 2^sigma is {phi}
    Complex full2 = standard_complex(StandardKind::Full, 2);
    Complex lk = link(full2, {0, 1, 2});
    CHECK(lk.dim() == -1);
    CHECK(lk.contains({}));
    // in boundary(sigma): link of tau is boundary(sigma - tau)
    Complex bd3 = standard_complex(StandardKind::Boundary, 3);
    Complex l01 = link(bd3, {0, 1});  // should be S^0 = boundary of edge {2,3}
    CHECK(l01.f_vector() == std::vector<long>({2}));
    Complex l0 = link(bd3, {0});  // boundary of triangle {1,2,3}
    CHECK(l0.isomorphic_to(standard_complex(StandardKind::Boundary, 2)));
}

TEST_CASE("join, cone and disjoint union sizes") {
    Complex s0 = standard_complex(StandardKind::Boundary, 1);
    Complex j = join(s0, s0);  // S^0 * S^0 = 4-cycle (S^1)
    CHECK(j.f_vector() == std::vector<long>({4, 4}));
    CHECK(j.isomorphic_to(four_cycle()));
    // join f-vector is the convolution of augmented f-vectors
    Complex bd2 = standard_complex(StandardKind::Boundary, 2);
    Complex jj = join(bd2, s0);
    auto fa = bd2.f_vector(), fb = s0.f_vector(), fj = jj.f_vector();
    auto aug = [](const std::vector<long>& f) {
        std::vector<long> g(f.size() + 1, 1);
        std::copy(f.begin(), f.end(), g.begin() + 1);
        return g;
    };
    auto ga = aug(fa), gb = aug(fb), gj = aug(fj);
    for (size_t k = 0; k < gj.size(); ++k) {
        long conv = 0;
        for (size_t i = 0; i < ga.size(); ++i)
            if (k >= i && k - i < gb.size()) conv += ga[i] * gb[k - i];
        CHECK(gj[k] == conv);
    }
    Complex c = cone(bd2);
    CHECK(c.isomorphic_to(standard_complex(StandardKind::Full, 2)) == false);
    CHECK(c.f_vector() == std::vector<long>({4, 6, 3}));
    Complex du = disjoint_union(bd2, s0);
    CHECK(du.vertex_count() == 5);
    CHECK(du.euler_characteristic() ==
          bd2.euler_characteristic() + s0.euler_characteristic());
}

TEST_CASE("wedge identifies one vertex") {
    Complex c4 = four_cycle();
    Complex w = wedge(c4, c4);
    CHECK(w.vertex_count() == 7);
    CHECK(w.euler_characteristic() == -1);  // figure eight
}

TEST_CASE("staircase product multiplies Euler characteristics") {
    std::vector<Complex> factors = {
        standard_complex(StandardKind::Full, 1),
        standard_complex(StandardKind::Boundary, 2),
        two_edge_path(),
        four_cycle(),
    };
    for (const Complex& A : factors)
        for (const Complex& B : factors) {
            Complex P = cartesian_product(A, B);
            CHECK(P.euler_characteristic() ==
                  A.euler_characteristic() * B.euler_characteristic());
            CHECK(P.vertex_count() == A.vertex_count() * B.vertex_count());
        }
}

TEST_CASE("stellar subdivision") {
    Complex bd2 = standard_complex(StandardKind::Boundary, 2);
    // subdividing an edge of the triangle yields the square
    Complex sq = stellar_subdivision(bd2, {0, 1});
    CHECK(sq.isomorphic_to(four_cycle()));
    // phi is a no-op
    CHECK(stellar_subdivision(bd2, {}) == bd2);
    // vertex subdivision only renames
    Complex rn = stellar_subdivision(bd2, {0});
    CHECK(rn.isomorphic_to(bd2));
    // subdividing a facet of full2 cones the boundary: 4 vertices, 3 triangles
    Complex f2 = standard_complex(StandardKind::Full, 2);
    Complex sub = stellar_subdivision(f2, {0, 1, 2});
    CHECK(sub.f_vector() == std::vector<long>({4, 6, 3}));
    // Euler characteristic is preserved for every simplex of every corpus complex
    for (const auto& e : corpus(false)) {
        for (const Simplex& s : e.K.all_simplices()) {
            if (s.empty()) continue;
            Complex L = stellar_subdivision(e.K, s);
            CHECK(L.euler_characteristic() == e.K.euler_characteristic());
            CHECK_NOTHROW(validate(L));
        }
    }
}

TEST_CASE("vertex permutation preserves the complex up to isomorphism") {
    Complex rp2 = rp2_six_vertex();
    std::vector<int> perm = {3, 5, 0, 2, 4, 1};
    Complex P = permuted_vertices(rp2, perm);
    CHECK(P.isomorphic_to(rp2));
    CHECK(P.f_vector() == rp2.f_vector());
}
