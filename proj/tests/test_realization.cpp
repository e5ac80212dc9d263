/**
 * Tests for realizations, link realizations and cone projections.
 */
#include <catch2/catch_amalgamated.hpp>
#include "stresslab/realization.hpp"

using namespace stresslab;

namespace {

Rational det3(const RatVector& a, const RatVector& b, const RatVector& c)
{
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
           + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool is_square(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return mpz_perfect_square_p(c.get_num().get_mpz_t()) && mpz_perfect_square_p(c.get_den().get_mpz_t());
}

}   // namespace

TEST_CASE("realize_random", "[realization]")
{
    SimplicialComplex oct = cross_polytope_boundary(3);
    Realization nu = realize_random(oct, 1, 100);
    REQUIRE(nu.d == 2);
    REQUIRE(nu.coords.size() == 6);
    for (const auto& c : nu.coords)
        REQUIRE(c[2] == 1);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k)
                REQUIRE(det3(nu.coords[i], nu.coords[j], nu.coords[k]) != 0);
    REQUIRE(in_general_position(nu));

    Realization again = realize_random(oct, 1, 100);
    REQUIRE(again.coords == nu.coords);

    Realization tri = realize_random_in(simplex_boundary(2), 2, 5, 10);
    REQUIRE(det3(tri.coords[0], tri.coords[1], tri.coords[2]) != 0);

    REQUIRE_THROWS_AS(realize_random(oct, 1, 0), InvalidParameters);
    // four distinct points of {-1,0,1} do not exist
    REQUIRE_THROWS_AS(realize_random(polygon(4), 1, 1, 5), RetriesExhausted);
}

TEST_CASE("make_realization invariants", "[realization]")
{
    SimplicialComplex tri = SimplicialComplex::from_facets({{"a", "b", "c"}});
    REQUIRE_THROWS_AS(make_realization(tri, 2, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}}), InvalidParameters);
    REQUIRE_THROWS_AS(make_realization(tri, 2, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}), InvalidParameters);
    REQUIRE_THROWS_AS(make_realization(tri, 2, {{0, 0, 1}, {1, 0, 1}}), DimensionMismatch);
    Realization ok = make_realization(tri, 2, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
    REQUIRE(ok.d == 2);
}

TEST_CASE("face multivectors and induced points", "[realization]")
{
    SimplicialComplex tri = SimplicialComplex::from_facets({{"a", "b", "c"}});
    Realization nu = make_realization(tri, 2, {{2, 4, 2}, {0, 0, 5}, {3, 1, 1}});
    REQUIRE(face_multivector(nu, {}) == MultiVector::scalar(3, 1));
    REQUIRE(face_multivector(nu, {0}) == MultiVector::vector({2, 4, 2}));
    REQUIRE(face_multivector(nu, {0, 1, 2}).coeff(7u) == det3(nu.coords[0], nu.coords[1], nu.coords[2]));
    REQUIRE_THROWS_AS(face_multivector(nu, {0, 3}), FaceNotFound);

    REQUIRE(induced_point(nu, 0) == RatVector{1, 2});
    REQUIRE(induced_point(nu, 1) == RatVector{0, 0});
    REQUIRE(induced_point(nu, 2) == RatVector{3, 1});

    Realization s = scaled(nu, {Rational(1, 2), 3, -1});
    for (int v = 0; v < 3; ++v)
        REQUIRE(induced_point(s, v) == induced_point(nu, v));
}

TEST_CASE("Cramer gradients agree with interpolation", "[realization]")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
    {
        Realization nu = realize_random(cross_polytope_boundary(3), seed, 30);
        for (const Face& F : nu.complex.facets())
            for (int v : F)
            {
                RatVector m = cramer_gradient(nu, F, v);
                RatVector pv = induced_point(nu, v);
                Rational c = 1 - (m[0] * pv[0] + m[1] * pv[1]);
                for (int u : F)
                {
                    RatVector pu = induced_point(nu, u);
                    REQUIRE(m[0] * pu[0] + m[1] * pu[1] + c == (u == v ? 1 : 0));
                }
            }
        Face F = nu.complex.facets()[0];
        int outside = -1;
        for (int u = 0; u < 6; ++u)
            if (!face_contains(F, {u}))
                outside = u;
        REQUIRE(cramer_gradient(nu, F, outside) == RatVector{0, 0});
    }
}

TEST_CASE("ridge conormals and volumes", "[realization]")
{
    SimplicialComplex tet = simplex_boundary(3);
    Realization nu = make_realization(tet, 3, {{0, 0, 0, 1}, {3, 0, 0, 1}, {0, 4, 0, 1}, {1, 1, 5, 1}});
    // triangle (0,0,0),(3,0,0),(0,4,0): area 6, normal along e3
    RatVector n = ridge_conormal(nu, {0, 1, 2}, 3);
    REQUIRE(n[0] == 0);
    REQUIRE(n[1] == 0);
    REQUIRE(n[2] < 0);
    REQUIRE(n[2] * n[2] == 4 * 36);
    REQUIRE(face_volume_squared(nu, {0, 1, 2}) == 36);
    REQUIRE(face_volume_squared(nu, {0, 1}) == 9);
    REQUIRE(face_volume_squared(nu, {0}) == 1);

    Realization pent = make_realization(polygon(5), 1, {{0, 1}, {1, 1}, {3, 1}, {7, 1}, {12, 1}});
    REQUIRE(ridge_conormal(pent, {1}, 0) == RatVector{1});
    REQUIRE(ridge_conormal(pent, {1}, 2) == RatVector{-1});
}

TEST_CASE("zeta squares of rational realizations are rational squares", "[realization]")
{
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
    {
        Realization nu = realize_random(cross_polytope_boundary(3), seed, 50);
        GenericityReport rep = q_genericity_check(nu);
        REQUIRE(rep.general_position);
        REQUIRE(rep.zeta_squares.size() == 12 * 4);
        for (const auto& [key, z] : rep.zeta_squares)
        {
            REQUIRE(z > 0);
            REQUIRE(is_square(z));
        }
        REQUIRE_FALSE(rep.verdict);
    }
    Realization pent = make_realization(polygon(5), 1, {{0, 1}, {1, 1}, {3, 1}, {7, 1}, {12, 1}});
    GenericityReport rep = q_genericity_check(pent);
    // hat function at x = 1 has slopes 1 and -1/2 on its two edges
    REQUIRE(rep.zeta_squares.at({Face{1}, 1}) == Rational(9, 4));
    REQUIRE(rep.zeta_squares.at({Face{1}, 0}) == 1);
    REQUIRE_FALSE(rep.verdict);
    REQUIRE_THROWS_AS(q_genericity_check(realize_random_in(SimplicialComplex::from_facets({{"a", "b"}}), 1, 3)),
                      PreconditionViolated);
}

TEST_CASE("distinguished bases and link realizations", "[realization]")
{
    Realization nu = realize_random(cross_polytope_boundary(3), 7, 40);

    LinkRealization L0 = link_realization(nu, {}, 3);
    REQUIRE(L0.realization.d == 2);
    for (int u = 0; u < L0.realization.complex.num_vertices(); ++u)
    {
        RatVector c = L0.realization.coords[u];
        RatVector back(3, Rational(0));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                back[j] += c[i] * L0.basis.vectors[i][j];
        REQUIRE(back == nu.coords[L0.to_parent[u]]);
    }

    for (int v = 0; v < 6; ++v)
    {
        LinkRealization L = link_realization(nu, {v}, 11 + v);
        REQUIRE(L.realization.d == 1);
        REQUIRE(L.realization.complex.num_vertices() == 4);
        REQUIRE(L.realization.complex.f(1) == 4);
        REQUIRE(is_distinguished(nu, L.basis));
        for (const Face& e : L.realization.complex.faces(1))
            REQUIRE_FALSE(face_multivector(L.realization, e).is_zero());
        for (const auto& b : L.basis.vectors)
            REQUIRE(b[0] * nu.coords[v][0] + b[1] * nu.coords[v][1] + b[2] * nu.coords[v][2] == 0);
    }

    // T_B is multiplicative on multivectors
    LinkRealization L = link_realization(nu, {0}, 2);
    MultiVector x = MultiVector::vector(L.basis.vectors[0]) * Rational(3) + MultiVector::vector(L.basis.vectors[1]);
    MultiVector y = MultiVector::vector(L.basis.vectors[1]) * Rational(-2);
    MultiVector tx = L.basis.apply(x), ty = L.basis.apply(y);
    REQUIRE(L.basis.apply(wedge(x, y)) == wedge(tx, ty));
    REQUIRE(tx == MultiVector::vector({3, 1}));
    REQUIRE_THROWS_AS(L.basis.apply(nu.coords[0]), DimensionMismatch);

    int a = nu.complex.vertex_id("+1"), b = nu.complex.vertex_id("-1");
    REQUIRE_THROWS_AS(link_realization(nu, {std::min(a, b), std::max(a, b)}), FaceNotFound);

    DistinguishedBasis bad = make_basis(nu, {0}, L.basis.vectors);
    bad.base = {1};
    REQUIRE_THROWS_AS(link_realization_with(nu, {0}, bad), BasisNotDistinguished);
}

TEST_CASE("cone and project", "[realization]")
{
    SimplicialComplex oct = cross_polytope_boundary(3);
    SimplicialComplex C = cone(oct, "a");
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
    {
        Realization nup = realize_random(C, seed, 40);
        ConeProjection P = cone_and_project(nup, "a");
        REQUIRE(P.base.d == 2);
        REQUIRE(in_general_position(P.base));
        REQUIRE(P.base.complex.f(2) == 8);
        const RatVector& av = nup.coords[P.apex];
        for (int u = 0; u < 6; ++u)
        {
            // re-insert the dropped coordinate from ℓ(y) = 0 and test that
            // a, ν'(v) and the image are dependent
            RatVector y = P.base.coords[u];
            RatVector full(4);
            Rational rest = 0;
            for (int i = 0, r = 0; i < 4; ++i)
                if (i != P.dropped)
                {
                    full[i] = y[r++];
                    rest += P.ell[i] * full[i];
                }
            full[P.dropped] = -rest / P.ell[P.dropped];
            RatMatrix m = rows_matrix({av, nup.coords[P.to_cone[u]], full}, 4);
            REQUIRE(rat_rank(m) == 2);
        }
    }
    Realization nup = realize_random(C, 1, 40);
    const RatVector& av = nup.coords[nup.complex.vertex_id("a")];
    RatVector through{av[1], -av[0], 0, 0};
    if (av[0] == 0 && av[1] == 0)
        through = {1, 0, 0, 0};
    REQUIRE_THROWS_AS(cone_and_project(nup, "a", through), DegenerateProjection);
    REQUIRE_THROWS_AS(cone_and_project(realize_random(oct, 1, 40), "+1"), InvalidParameters);
}
