/**
 * Tests for simplicial complexes, face vectors and homology.
 */
#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include "stresslab/complex.hpp"

using namespace stresslab;

using LL = std::vector<long long>;

namespace {

bool has_face(const SimplicialComplex& K, const std::vector<std::string>& labels)
{
    for (const auto& l : labels)
        if (std::find(K.labels().begin(), K.labels().end(), l) == K.labels().end())
            return false;
    return K.contains(K.face_from_labels(labels));
}

}   // namespace

TEST_CASE("build_from_facets", "[complex]")
{
    auto K = SimplicialComplex::from_facets({{"1", "2"}, {"2", "3"}});
    REQUIRE(K.f(-1) == 1);
    REQUIRE(K.f(0) == 3);
    REQUIRE(K.f(1) == 2);
    REQUIRE(K.contains({}));
    REQUIRE(K.contains(K.face_from_labels({"1", "2"})));
    REQUIRE_FALSE(K.contains(K.face_from_labels({"1", "3"})));

    auto T = SimplicialComplex::from_facets({{"1", "2", "3"}});
    REQUIRE(f_h_g_vectors(T).f == LL{3, 3, 1});

    REQUIRE_THROWS_AS(SimplicialComplex::from_facets({{"1", "2"}, {"1", "2"}}), DuplicateOrNestedFacet);
    REQUIRE_THROWS_AS(SimplicialComplex::from_facets({{"1", "2", "3"}, {"1", "2"}}), DuplicateOrNestedFacet);
}

TEST_CASE("link and star", "[complex]")
{
    auto oct = cross_polytope_boundary(3);
    Face v = oct.face_from_labels({"+1"});
    auto L = link(oct, v);
    REQUIRE(L.num_vertices() == 4);
    REQUIRE(L.f(1) == 4);
    REQUIRE(classify(L, Field::Q).is_homology_sphere);
    REQUIRE(f_h_g_vectors(link(oct, {})).f == f_h_g_vectors(oct).f);

    auto tri = simplex_boundary(2);
    auto e = link(tri, tri.face_from_labels({"1", "2"}));
    REQUIRE(e.dim() == -1);
    REQUIRE(e.f(-1) == 1);

    REQUIRE_THROWS_AS(link(oct, oct.face_from_labels({"+1", "-1"})), FaceNotFound);

    // Ast(v) ∪ closed star(v) = Δ and St(v) = Δ \ Ast(v)
    for (int u = 0; u < oct.num_vertices(); ++u)
    {
        Face fu{u};
        auto ast = antistar(oct, fu);
        auto cst = closed_star(oct, fu);
        auto st = star(oct, fu);
        for (int k = -1; k <= oct.dim(); ++k)
            for (const Face& F : oct.faces(k))
            {
                bool in_ast = has_face(ast, oct.face_labels(F));
                bool in_cst = has_face(cst, oct.face_labels(F));
                REQUIRE((in_ast || in_cst));
                bool in_st = std::find(st.begin(), st.end(), F) != st.end();
                REQUIRE(in_st == !in_ast);
            }
    }
}

TEST_CASE("cone, join, suspension", "[complex]")
{
    auto c4 = polygon(4);
    auto pyr = cone(c4, "a");
    REQUIRE(f_h_g_vectors(pyr).f == LL{5, 8, 4});
    REQUIRE(f_h_g_vectors(link(pyr, pyr.face_from_labels({"a"}))).f == f_h_g_vectors(c4).f);

    auto s0a = SimplicialComplex::from_facets({{"a"}, {"b"}});
    auto s0b = SimplicialComplex::from_facets({{"c"}, {"d"}});
    auto j = join(s0a, s0b);
    REQUIRE(f_h_g_vectors(j).f == LL{4, 4});
    REQUIRE(classify(j, Field::Q).is_homology_sphere);
    REQUIRE(j.dim() == 1);

    auto susp = suspension(simplex_boundary(2));
    REQUIRE(f_h_g_vectors(susp).f == LL{5, 9, 6});
    auto oct = suspension(suspension(SimplicialComplex::from_facets({{"x"}, {"y"}}), "p", "q"), "r", "s");
    REQUIRE(f_h_g_vectors(oct).f == LL{6, 12, 8});

    REQUIRE_THROWS_AS(cone(c4, "1"), VertexCollision);
    REQUIRE_THROWS_AS(join(c4, c4), VertexCollision);
}

TEST_CASE("fixture generators", "[complex]")
{
    REQUIRE(f_h_g_vectors(simplex_boundary(3)).f == LL{4, 6, 4});
    REQUIRE(f_h_g_vectors(cross_polytope_boundary(3)).f == LL{6, 12, 8});
    REQUIRE(f_h_g_vectors(cyclic_polytope_boundary(4, 7)).f == LL{7, 21, 28, 14});
    REQUIRE(f_h_g_vectors(polygon(5)).f == LL{5, 5});
    REQUIRE_THROWS_AS(simplex_boundary(0), InvalidParameters);
    REQUIRE_THROWS_AS(cyclic_polytope_boundary(4, 4), InvalidParameters);

    // Gale evenness for d = 2 gives the n-gon
    auto c25 = cyclic_polytope_boundary(2, 5);
    REQUIRE(f_h_g_vectors(c25).f == LL{5, 5});

    // barycentric subdivision of the triangle boundary is a hexagon
    auto sd = barycentric_subdivision(simplex_boundary(2));
    REQUIRE(f_h_g_vectors(sd).f == LL{6, 6});
}

TEST_CASE("f/h/g vectors", "[complex]")
{
    auto fv = f_h_g_vectors(cross_polytope_boundary(3));
    REQUIRE(fv.h == LL{1, 3, 3, 1});
    REQUIRE(fv.g == LL{1, 2});
    for (int d = 1; d <= 6; ++d)
        REQUIRE(f_h_g_vectors(simplex_boundary(d + 1)).h == LL(d + 2, 1));
    fv = f_h_g_vectors(cyclic_polytope_boundary(4, 7));
    REQUIRE(fv.h == LL{1, 3, 6, 3, 1});
    REQUIRE(fv.g == LL{1, 2, 3});
}

TEST_CASE("face vector invariants on generated spheres", "[complex]")
{
    std::vector<SimplicialComplex> all = {simplex_boundary(3), simplex_boundary(5),
                                          cross_polytope_boundary(4), cyclic_polytope_boundary(4, 8),
                                          cyclic_polytope_boundary(5, 8),
                                          suspension(cyclic_polytope_boundary(3, 6)),
                                          join(polygon(5), SimplicialComplex::from_facets({{"a"}, {"b"}}))};
    for (const auto& K : all)
    {
        auto fv = f_h_g_vectors(K);
        int d = fv.d;
        REQUIRE(f_from_h(fv.h) == fv.f);
        long long sum = 0;
        for (int i = 0; i <= d + 1; ++i)
        {
            REQUIRE(fv.h[i] == fv.h[d + 1 - i]);
            sum += fv.h[i];
        }
        REQUIRE(sum == fv.f[d]);
        long long chi = -1;
        for (int i = 0; i <= d; ++i)
            chi += (i % 2 ? -1 : 1) * fv.f[i];
        REQUIRE(chi == (d % 2 ? -1 : 1));
    }
}

TEST_CASE("betti numbers", "[complex]")
{
    auto b = betti(cross_polytope_boundary(3), Field::Q);
    REQUIRE(b.at(-1) == 0);
    REQUIRE(b.at(0) == 0);
    REQUIRE(b.at(1) == 0);
    REQUIRE(b.at(2) == 1);

    auto cb = betti(cone(cyclic_polytope_boundary(3, 6), "apex"), Field::Q);
    for (long long x : cb.beta)
        REQUIRE(x == 0);

    auto rp = projective_plane_6();
    auto g2 = betti(rp, Field::GF2);
    REQUIRE(g2.at(1) == 1);
    REQUIRE(g2.at(2) == 1);
    auto q = betti(rp, Field::Q);
    REQUIRE(q.at(1) == 0);
    REQUIRE(q.at(2) == 0);

    auto t = betti(torus_7(), Field::Q);
    REQUIRE(t.beta == LL{0, 0, 2, 1});
}

TEST_CASE("classify", "[complex]")
{
    auto c = classify(cross_polytope_boundary(3), Field::Q);
    REQUIRE(c.is_pure);
    REQUIRE(c.is_strongly_connected);
    REQUIRE(c.is_pseudomanifold);
    REQUIRE(c.is_homology_manifold);
    REQUIRE(c.is_homology_sphere);
    REQUIRE(c.is_orientable_candidate);

    auto two = SimplicialComplex::from_facets({{"1", "2", "3"}, {"2", "3", "4"}});
    REQUIRE_FALSE(classify(two, Field::Q).is_pseudomanifold);

    auto rp = classify(projective_plane_6(), Field::Q);
    REQUIRE(rp.is_homology_manifold);
    REQUIRE_FALSE(rp.is_homology_sphere);
    REQUIRE_FALSE(rp.is_orientable_candidate);

    for (int d = 2; d <= 6; ++d)
        REQUIRE(classify(simplex_boundary(d), Field::Q).is_homology_sphere);

    auto torus = classify(torus_7(), Field::GF2);
    REQUIRE(torus.is_homology_manifold);
    REQUIRE_FALSE(torus.is_homology_sphere);
}

TEST_CASE("h'' vectors", "[complex]")
{
    auto oct = cross_polytope_boundary(3);
    REQUIRE(h_double_prime(oct, Field::Q) == LL{1, 3, 3, 1});
    auto c47 = cyclic_polytope_boundary(4, 7);
    REQUIRE(h_double_prime(c47, Field::Q) == f_h_g_vectors(c47).h);

    // torus: f = (7,21,14), h = (1,4,10,-1), beta = (0,2,1) for i = 0,1,2
    auto T = torus_7();
    auto fv = f_h_g_vectors(T);
    REQUIRE(fv.h == LL{1, 4, 10, -1});
    // h'_1 = h_1 + 3*beta_{-1} = 4
    // h'_2 = h_2 + 3*(-beta_{-1} + beta_0) = 10
    // h'_3 = h_3 + 1*(beta_{-1} - beta_0 + beta_1) = -1 + 2 = 1
    REQUIRE(h_prime(T, Field::Q) == LL{1, 4, 10, 1});
    // h''_2 = h'_2 - 3*beta_1 = 4; h''_3 = h'_3
    REQUIRE(h_double_prime(T, Field::Q) == LL{1, 4, 4, 1});
}
