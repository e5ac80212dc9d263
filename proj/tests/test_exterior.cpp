/**
 * Tests for the exterior algebra layer.
 */
#include <random>
#include <bit>
#include <catch2/catch_amalgamated.hpp>
#include "stresslab/exterior.hpp"

using namespace stresslab;

namespace {

MultiVector e(int D, std::vector<int> idx)
{
    return MultiVector::blade(D, idx);
}

MultiVector random_homogeneous(std::mt19937_64& rng, int D, int r)
{
    std::uniform_int_distribution<int> coef(-4, 4);
    MultiVector m(D);
    for (unsigned b = 0; b < (1u << D); ++b)
        if (std::popcount(b) == r)
            m.add(b, coef(rng));
    return m;
}

// Determinant-based oracle for the wedge of 1-vectors: coefficient on a
// blade is the corresponding maximal minor.
Rational minor(const std::vector<RatVector>& vs, const std::vector<int>& cols)
{
    std::size_t k = vs.size();
    RatMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            m(i, j) = vs[i][cols[j]];
    return rat_det(m);
}

}   // namespace

TEST_CASE("wedge examples", "[exterior]")
{
    REQUIRE(wedge(e(3, {1}), e(3, {1})).is_zero());
    REQUIRE(wedge(e(3, {1}), e(3, {2})) == -wedge(e(3, {2}), e(3, {1})));
    REQUIRE(wedge(e(3, {1}) + e(3, {2}), e(3, {2})) == e(3, {1, 2}));
    REQUIRE_THROWS_AS(wedge(e(3, {1}), e(4, {1})), DimensionMismatch);
}

TEST_CASE("wedge of vectors matches maximal minors", "[exterior]")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int D = 2; D <= 6; ++D)
        for (int k = 1; k <= D; ++k)
        {
            std::vector<RatVector> vs(k, RatVector(D));
            for (auto& v : vs)
                for (auto& x : v)
                    x = c(rng);
            MultiVector w = wedge_vectors(D, vs);
            for (unsigned b = 0; b < (1u << D); ++b)
            {
                if (std::popcount(b) != k)
                    continue;
                std::vector<int> cols;
                for (int i = 0; i < D; ++i)
                    if (b & (1u << i))
                        cols.push_back(i);
                REQUIRE(w.coeff(b) == minor(vs, cols));
            }
        }
}

TEST_CASE("hodge star examples", "[exterior]")
{
    REQUIRE(hodge_star(e(3, {1})) == e(3, {2, 3}));
    REQUIRE(hodge_star(MultiVector::scalar(3, 1)) == MultiVector::xi(3));
    REQUIRE(hodge_star(hodge_star(e(4, {1, 2}))) == e(4, {1, 2}));
    REQUIRE_THROWS_AS(hodge_star(e(3, {1}) + e(3, {1, 2})), NotHomogeneous);
}

TEST_CASE("Hodge identity and double-star law", "[exterior]")
{
    std::mt19937_64 rng(9);
    for (int D = 2; D <= 6; ++D)
        for (int r = 0; r <= D; ++r)
        {
            int trials = 500 / (D + 1);
            for (int t = 0; t < trials; ++t)
            {
                MultiVector a = random_homogeneous(rng, D, r);
                MultiVector b = random_homogeneous(rng, D, r);
                REQUIRE(wedge(a, hodge_star(b)) == inner(a, b) * MultiVector::xi(D));
                MultiVector ss = hodge_star(hodge_star(a));
                REQUIRE(ss == ((r * (D - r)) % 2 ? -a : a));
                REQUIRE(hodge_star_inv(hodge_star(a)) == a);
                REQUIRE(hodge_star(hodge_star_inv(a)) == a);
            }
        }
}

TEST_CASE("Grassmann-Cayley meet", "[exterior]")
{
    std::mt19937_64 rng(21);
    MultiVector x = random_homogeneous(rng, 4, 2);
    REQUIRE(gc_meet(MultiVector::xi(4), x) == x);

    // two planes in Q^3: span{e1,e2} and span{e2,e3} meet in the e2 line
    MultiVector m = gc_meet(e(3, {1, 2}), e(3, {2, 3}));
    REQUIRE(m.grade() == 1);
    RatVector v = m.as_vector();
    REQUIRE(v[0] == 0);
    REQUIRE(v[2] == 0);
    REQUIRE(v[1] != 0);

    // meet of random planes is orthogonal to both normals
    for (int t = 0; t < 50; ++t)
    {
        MultiVector a = wedge(random_homogeneous(rng, 3, 1), random_homogeneous(rng, 3, 1));
        MultiVector b = wedge(random_homogeneous(rng, 3, 1), random_homogeneous(rng, 3, 1));
        MultiVector mm = gc_meet(a, b);
        if (mm.is_zero())
            continue;
        REQUIRE(wedge(mm, a).is_zero());
        REQUIRE(wedge(mm, b).is_zero());
    }

    // graded anti-commutativity: a meet b = (-1)^{(D-p)(D-q)} b meet a
    for (int D = 2; D <= 5; ++D)
        for (int p = 0; p <= D; ++p)
            for (int q = 0; q <= D; ++q)
            {
                MultiVector a = random_homogeneous(rng, D, p);
                MultiVector b = random_homogeneous(rng, D, q);
                int s = ((D - p) * (D - q)) % 2 ? -1 : 1;
                REQUIRE(gc_meet(a, b) == Rational(s) * gc_meet(b, a));
            }
}

TEST_CASE("sgn", "[exterior]")
{
    REQUIRE(sgn({1}, {1, 2}) == 1);
    REQUIRE(sgn({2}, {1, 2}) == -1);
    REQUIRE(sgn({}, {1, 2, 3}) == 1);
    REQUIRE(sgn({3, 1}, {1, 2, 3}) == 1);
    REQUIRE(sgn({2, 1}, {1, 2, 3}) == -1);
    REQUIRE_THROWS_AS(sgn({4}, {1, 2}), NotSubset);
}

TEST_CASE("m_vector", "[exterior]")
{
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<int> c(-5, 5);
    std::vector<RatVector> coords(5, RatVector(4));
    for (auto& v : coords)
    {
        for (auto& x : v)
            x = c(rng);
        v[3] = 1;
    }
    MultiVector same = m_vector(coords, {0, 1}, {0, 1});
    REQUIRE(same.grade() == 0);
    REQUIRE_FALSE(same.is_zero());

    MultiVector from_empty = m_vector(coords, {}, {0, 2});
    MultiVector nuF = wedge_vectors(4, {coords[0], coords[2]});
    // ★1 = ξ and ξ is the identity of the meet
    REQUIRE(from_empty == nuF);

    REQUIRE_THROWS_AS(m_vector(coords, {3}, {0, 1}), FaceNotNested);

    // saturated flags: the chained wedge picks up the scalars m_{F_i,F_i} of the
    // intermediate faces; from the empty face the vertex form carries prod Sgn
    for (int D = 3; D <= 6; ++D)
        for (int t = 0; t < 40; ++t)
        {
            std::vector<RatVector> pts(D, RatVector(D));
            for (auto& v : pts)
            {
                for (auto& x : v)
                    x = c(rng);
                v[D - 1] = 1;
            }
            std::vector<int> order(D);
            for (int i = 0; i < D; ++i)
                order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<std::vector<int> > flag = {{}};
            for (int i = 0; i < D; ++i)
            {
                std::vector<int> F = flag.back();
                F.push_back(order[i]);
                std::sort(F.begin(), F.end());
                flag.push_back(F);
            }
            int s0 = t % 2, s1 = D - (t / 2) % 2;
            MultiVector chain = MultiVector::scalar(D, 1);
            Rational scale = 1;
            for (int i = s0; i < s1; ++i)
            {
                chain = wedge(chain, m_vector(pts, flag[i], flag[i + 1]));
                if (i > s0)
                    scale *= m_vector(pts, flag[i], flag[i]).coeff(0u);
            }
            REQUIRE(chain == scale * m_vector(pts, flag[s0], flag[s1]));

            MultiVector verts = MultiVector::scalar(D, 1);
            int sign = 1;
            for (int i = 0; i < s1; ++i)
            {
                verts = wedge(verts, m_vector(pts, {}, {order[i]}));
                sign *= sgn(flag[i], flag[i + 1]);
            }
            REQUIRE(verts == Rational(sign) * m_vector(pts, {}, flag[s1]));
        }
}
