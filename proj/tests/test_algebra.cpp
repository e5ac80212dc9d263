/**
 * Tests for the stress algebra.
 */
#include <catch2/catch_amalgamated.hpp>
#include <random>
#include "stresslab/algebra.hpp"

using namespace stresslab;

namespace {

StressVector random_stress(const GradedStressSpace& S, int r, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-7, 7);
    RatVector c(S.dim(r));
    for (auto& x : c)
        x = dist(rng);
    return S.combination(r, c);
}

/** Rank test on the union, over every pair of faces. */
std::set<FacePair> brute_pf(const Realization& nu, const Face& f)
{
    std::set<FacePair> out;
    auto faces = all_faces(nu.complex);
    for (const Face& g : faces)
        for (const Face& h : faces)
        {
            if (face_intersection(g, h) != f)
                continue;
            Face u = face_union(g, h);
            RatMatrix M(u.size(), nu.d + 1);
            for (std::size_t i = 0; i < u.size(); ++i)
                for (int j = 0; j <= nu.d; ++j)
                    M(i, j) = nu.coords[u[i]][j];
            if (rat_rank(M) == static_cast<std::size_t>(nu.d + 1))
                out.insert({g, h});
        }
    return out;
}

/** (ab)(F) summed straight from the pair set. */
RatVector brute_product(const Realization& nu, const StressVector& a, const StressVector& b)
{
    const auto& target = nu.complex.faces(nu.d - a.degree - b.degree);
    RatVector out;
    for (const Face& f : target)
    {
        Rational s = 0;
        for (const auto& [g, h] : pf_pairs(nu, f).pairs)
            if (static_cast<int>(g.size()) == nu.d - a.degree + 1 && static_cast<int>(h.size()) == nu.d - b.degree + 1)
                s += stress_value(nu, a, g) * stress_value(nu, b, h);
        out.push_back(s);
    }
    return out;
}

/** dim Ψ_i - dim(Ψ_i ∩ im) through the kernel of [basis | -M]. */
long long brute_quotient(const StressAlgebra& alg, const StressVector& w, int i)
{
    const auto& B = alg.space().basis[i];
    RatMatrix M = multiplication_matrix(alg, w, i);
    RatMatrix J(M.rows, B.size() + M.cols);
    for (std::size_t t = 0; t < M.rows; ++t)
    {
        for (std::size_t j = 0; j < B.size(); ++j)
            J(t, j) = B[j][t];
        for (std::size_t j = 0; j < M.cols; ++j)
            J(t, B.size() + j) = -M(t, j);
    }
    std::vector<RatVector> ker = rat_nullspace(J);
    std::vector<RatVector> parts;
    for (const auto& k : ker)
        parts.emplace_back(k.begin(), k.begin() + static_cast<long>(B.size()));
    return static_cast<long long>(B.size()) - static_cast<long long>(span_dim(parts, B.size()));
}

}   // namespace

TEST_CASE("pair sets agree with a rank enumeration", "[algebra]")
{
    Realization nu = realize_random(cross_polytope_boundary(3), 2, 60);
    for (const Face& f : all_faces(nu.complex))
    {
        PairSet p = pf_pairs(nu, f);
        CHECK(p.pairs == brute_pf(nu, f));
        for (const auto& [g, h] : p.pairs)
            CHECK(p.pairs.count({h, g}) == 1);
    }
    CHECK(pf_pairs(nu, {}).pairs.size() == brute_pf(nu, {}).size());
    CHECK(!pf_pairs(nu, {}).pairs.empty());

    const Face& facet = nu.complex.faces(2)[0];
    PairSet top = pf_pairs(nu, facet);
    REQUIRE(top.pairs.size() == 1);
    CHECK(top.pairs.begin()->first == facet);

    CHECK_THROWS_AS(pf_pairs(nu, {0, 1, 2, 3}), FaceNotFound);
}

TEST_CASE("double counting at the empty face and at facets", "[algebra]")
{
    Realization oct = realize_random(cross_polytope_boundary(3), 1, 60);
    CHECK(double_counting_check(oct, {}));
    Realization pent = realize_random(polygon(5), 1, 60);
    CHECK(double_counting_check(pent, {}));

    DoubleCountingReport top = double_counting(oct, oct.complex.faces(2)[0]);
    CHECK(top.lhs.empty());
    CHECK(top.rhs.empty());

    DoubleCountingReport v = double_counting(oct, {0});
    CHECK(std::includes(v.rhs.begin(), v.rhs.end(), v.lhs.begin(), v.lhs.end()));
}

TEST_CASE("product matches the pair-sum definition", "[algebra]")
{
    std::mt19937_64 rng(11);
    for (auto K : {cross_polytope_boundary(3), cyclic_polytope_boundary(4, 7), polygon(6)})
    {
        StressAlgebra alg(realize_random(K, 3, 60));
        int d = alg.d();
        for (int r = 0; r <= d + 1; ++r)
            for (int s = 0; r + s <= d + 1; ++s)
            {
                StressVector a = random_stress(alg.space(), r, rng);
                StressVector b = random_stress(alg.space(), s, rng);
                StressVector p = alg.multiply(a, b);
                CHECK(p.degree == r + s);
                CHECK(p.values == brute_product(alg.realization(), a, b));
                CHECK(stress_product(a, b, alg.realization()).values == p.values);
            }
    }
}

TEST_CASE("product is commutative and graded", "[algebra]")
{
    std::mt19937_64 rng(4);
    StressAlgebra alg(realize_random(cross_polytope_boundary(3), 1, 60));
    std::uniform_int_distribution<int> deg(0, 3);
    for (int t = 0; t < 100; ++t)
    {
        int r = deg(rng), s = deg(rng);
        StressVector a = random_stress(alg.space(), r, rng);
        StressVector b = random_stress(alg.space(), s, rng);
        StressVector ab = alg.multiply(a, b);
        CHECK(ab.values == alg.multiply(b, a).values);
        CHECK(ab.degree == r + s);
        if (r + s > 3)
            CHECK(ab.values.empty());
    }
    StressVector a = random_stress(alg.space(), 1, rng);
    StressVector b = random_stress(alg.space(), 2, rng);
    CHECK(check_equilibrium(alg.multiply(a, b), alg.realization(), EquilibriumForm::Projective));
    CHECK_THROWS_AS(alg.multiply(a, StressVector{1, 3, {}}), DimensionMismatch);
}

TEST_CASE("unit action is reported per degree", "[algebra]")
{
    StressAlgebra alg(realize_random(cross_polytope_boundary(3), 1, 60));
    UnitReport u = unit_action(alg);
    REQUIRE(u.scalar.size() == 4);
    CHECK(u.scalar[3].has_value());
    CHECK(u.acts_as_scalar == (u.scalar[0] && u.scalar[1] && u.scalar[2] && u.scalar[3]));
}

TEST_CASE("Hilbert function and socle", "[algebra]")
{
    StressAlgebra oct(realize_random(cross_polytope_boundary(3), 1, 60));
    GenerationReport g = hilbert_and_generation(oct);
    CHECK(g.hilbert == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(g.product_span[1] == 3);
    SocleReport s = socle_and_gorenstein(oct);
    CHECK(s.socle_dims[3] == 1);
    CHECK(s.socle_dims == std::vector<std::size_t>{0, 0, 0, 1});
    CHECK(s.gorenstein);

    StressAlgebra cyc(realize_random(cyclic_polytope_boundary(4, 7), 1, 60));
    CHECK(hilbert_and_generation(cyc).hilbert == std::vector<std::size_t>{1, 3, 6, 3, 1});
    CHECK(socle_and_gorenstein(cyc).socle_dims[4] == 1);
}

TEST_CASE("weak Lefschetz ranks", "[algebra]")
{
    StressAlgebra oct(realize_random(cross_polytope_boundary(3), 1, 60));
    LefschetzReport w = wlp_check(oct, 5, 9);
    REQUIRE(w.trials.size() == 5);
    for (const auto& t : w.trials)
    {
        CHECK(t.ranks == std::vector<std::size_t>{1, 3, 1});
        CHECK(t.weak == w.trials[0].weak);
    }
    CHECK(w.verdict_weak);

    LefschetzTrial zero = lefschetz_trial(oct, RatVector(3, Rational(0)));
    CHECK(zero.ranks == std::vector<std::size_t>{0, 0, 0});
    CHECK(!zero.weak);

    StressAlgebra simp(realize_random(simplex_boundary(4), 1, 60));
    CHECK(hilbert_and_generation(simp).hilbert == std::vector<std::size_t>{1, 1, 1, 1, 1});
    LefschetzTrial t = wlp_check(simp, 1, 2).trials[0];
    CHECK(t.ranks == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(t.injective == std::vector<bool>{true, true, true, true});
}

TEST_CASE("quotient dimensions against a kernel computation", "[algebra]")
{
    for (auto K : {cross_polytope_boundary(3), cyclic_polytope_boundary(4, 7), simplex_boundary(4)})
    {
        StressAlgebra alg(realize_random(K, 5, 60));
        RatVector omega = wlp_check(alg, 1, 3).trials[0].omega;
        std::vector<long long> q = quotient_g_vector(alg, omega);
        REQUIRE(q.size() == static_cast<std::size_t>((alg.d() + 1) / 2 + 1));
        CHECK(q[0] == 1);
        StressVector w = alg.degree_one(omega);
        for (std::size_t i = 1; i < q.size(); ++i)
            CHECK(q[i] == brute_quotient(alg, w, static_cast<int>(i)));
        CHECK_THROWS_AS(quotient_g_vector(alg, RatVector(alg.space().dim(1), Rational(0))),
                        NotInjectiveAtLowDegrees);
    }
}

TEST_CASE("Macaulay bound", "[algebra]")
{
    for (long n = 0; n < 20; ++n)
        CHECK(macaulay_bound(Integer(n), 1) == Integer(n * (n + 1) / 2));
    // 5 = C(3,2) + C(2,1), 10 = C(5,3), 11 = C(5,3) + C(2,2)
    CHECK(macaulay_bound(Integer(5), 2) == 7);
    CHECK(macaulay_bound(Integer(10), 3) == 15);
    CHECK(macaulay_bound(Integer(11), 3) == 16);
    CHECK(macaulay_bound(Integer(0), 4) == 0);
    Integer big("1000000000000000000000", 10);
    CHECK(macaulay_bound(big, 1) == big * (big + 1) / 2);

    CHECK(macaulay_check({1, 2, 3}));
    CHECK(!macaulay_check({1, 2, 4}));
    CHECK(macaulay_check({1}));
    CHECK(!macaulay_check({0}));
    CHECK(!macaulay_check({1, -1}));
    CHECK(macaulay_check({1, 3, 6, 10}));
    CHECK(!macaulay_check({1, 3, 6, 11}));
}

TEST_CASE("strong Lefschetz ranks", "[algebra]")
{
    StressAlgebra oct(realize_random(cross_polytope_boundary(3), 1, 60));
    StrongLefschetzReport s = sl_check_experimental(oct, 3, 1);
    REQUIRE(s.trials.size() == 3);
    for (const auto& t : s.trials)
    {
        REQUIRE(t.ranks.size() == 2);
        CHECK(t.ranks[0] == 1);
    }
    CHECK(!sl_check(oct, RatVector(3, Rational(0))).verdict);
}

TEST_CASE("g-conjecture pipeline", "[algebra]")
{
    GConjectureOptions opt;
    opt.max_retries = 2;
    GConjectureReport r = g_conjecture_verdict(cross_polytope_boundary(3), opt);
    CHECK(r.homology_sphere);
    CHECK(r.general_position);
    CHECK(r.h_vector == std::vector<long long>{1, 3, 3, 1});
    CHECK(r.g_vector == std::vector<long long>{1, 2});
    CHECK(r.hilbert_matches_h);
    CHECK(r.wlp.trials.size() == 3);
    CHECK(r.draws >= 1);

    GConjectureReport c = g_conjecture_verdict(cyclic_polytope_boundary(4, 7), opt);
    CHECK(c.g_vector == std::vector<long long>{1, 2, 3});
    CHECK(c.hilbert_matches_h);
    CHECK(macaulay_check(c.g_vector));

    CHECK_THROWS_AS(g_conjecture_verdict(projective_plane_6()), NotAHomologySphere);
    if (!r.q_generic)
    {
        opt.strict_genericity = true;
        CHECK_THROWS_AS(g_conjecture_verdict(cross_polytope_boundary(3), opt), GenericityNotAchieved);
    }
}
