/**
 * The stress algebra: P_F pair sets, the product of stresses, Hilbert
 * function and generation, socle, weak and strong Lefschetz rank profiles,
 * quotient dimensions, Macaulay's bound and the g-conjecture pipeline.
 */
#ifndef STRESSLAB_ALGEBRA_HPP
#define STRESSLAB_ALGEBRA_HPP

#include <map>
#include <set>
#include "stresslab/rigidity.hpp"

namespace stresslab {

using FacePair = std::pair<Face, Face>;

/** P_F: pairs (G,H) of faces with G ∩ H = F and rank ν(G ∪ H) = d+1. */
struct PairSet
{
    Face base;
    std::set<FacePair> pairs;
};

/** Every face of the complex, the empty face first. */
std::vector<Face> all_faces(const SimplicialComplex& K);

/** Throws FaceNotFound. */
PairSet pf_pairs(const Realization& nu, const Face& f);

/** A_{P'} for P' = (G', H'); the vertex side condition applies when G' ∩ H' = ∅ and P' spans. */
std::set<FacePair> a_pairs(const Realization& nu, const FacePair& p);

struct DoubleCountingReport
{
    Face base;
    std::set<FacePair> lhs;   // ∪_{F ≻ F'} P_F
    std::set<FacePair> rhs;   // ∪_{P' ∈ P_F'} A_{P'}
    std::vector<FacePair> only_lhs, only_rhs;
    bool equal() const { return only_lhs.empty() && only_rhs.empty(); }
};

DoubleCountingReport double_counting(const Realization& nu, const Face& f);
bool double_counting_check(const Realization& nu, const Face& f);

/**
 * Realization together with its graded stress space and cached product
 * tables.  The product of degrees r and s is supported on the
 * (d-r-s)-faces: (ab)(F) = Σ_{(G,H) ∈ P_F} a(G) b(H) with dim G = d-r and
 * dim H = d-s.
 */
class StressAlgebra
{
    public:
        explicit StressAlgebra(Realization nu);
        StressAlgebra(Realization nu, GradedStressSpace space);

        const Realization& realization() const { return nu_; }
        const GradedStressSpace& space() const { return space_; }
        int d() const { return nu_.d; }

        /** Index pairs (G, H) per (d-r-s)-face, G among (d-r)-faces, H among (d-s)-faces. */
        const std::vector<std::vector<std::pair<std::size_t, std::size_t> > >& table(int r, int s) const;

        /** Degree r+s; values empty when r+s > d+1. */
        StressVector multiply(const StressVector& a, const StressVector& b) const;

        /** Σ c_i · basis_1[i]. */
        StressVector degree_one(const RatVector& coeffs) const;

    private:
        Realization nu_;
        GradedStressSpace space_;
        std::map<std::pair<int, int>, std::vector<std::vector<std::pair<std::size_t, std::size_t> > > > tables_;
};

StressVector stress_product(const StressVector& a, const StressVector& b, const Realization& nu);

/** Columns: ω · basis_{r-1}[j] as functions on the (d-r)-faces. */
RatMatrix multiplication_matrix(const StressAlgebra& alg, const StressVector& omega, int r);

struct GenerationReport
{
    std::vector<std::size_t> hilbert;
    /** Per degree r >= 1: dimension of the span of the r-fold products of degree-one elements. */
    std::vector<std::size_t> product_span;
    std::vector<bool> products_in_psi;
    bool generated_in_degree_one = false;
};

/** How the first Ψ_0 basis element e acts: e·b = c_s b on all of Ψ_s, if such c_s exists. */
struct UnitReport
{
    std::vector<std::optional<Rational> > scalar;   // per degree s = 0..d+1
    bool acts_as_scalar = false;
    bool unital = false;   // every c_s equals 1
};

UnitReport unit_action(const StressAlgebra& alg);

GenerationReport hilbert_and_generation(const StressAlgebra& alg);

struct SocleReport
{
    std::vector<std::size_t> socle_dims;   // per degree 0..d+1
    std::size_t total = 0;
    bool gorenstein = false;
};

SocleReport socle_and_gorenstein(const StressAlgebra& alg);

struct LefschetzTrial
{
    RatVector omega;                  // over the Ψ_1 basis
    std::vector<std::size_t> ranks;   // ranks[r-1] for ·ω: Ψ_{r-1} -> Ψ_r, r = 1..d+1
    std::vector<bool> injective, surjective, image_in_psi;
    bool weak = false;
    bool pattern = false;
};

struct LefschetzReport
{
    std::vector<LefschetzTrial> trials;
    bool verdict_weak = false;
    bool verdict_pattern = false;
};

/** One trial with the given ω. */
LefschetzTrial lefschetz_trial(const StressAlgebra& alg, const RatVector& omega);

/** ω drawn with integer coefficients in [-9, 9]. */
LefschetzReport wlp_check(const StressAlgebra& alg, int trials, std::uint64_t seed);

/**
 * dim Ψ_i - dim(Ψ_i ∩ ω Ψ_{i-1}) for i = 0..⌊(d+1)/2⌋.  Throws
 * NotInjectiveAtLowDegrees.
 */
std::vector<long long> quotient_g_vector(const StressAlgebra& alg, const RatVector& omega);

/** v_0 = 1, v_i >= 0 and v_{i+1} <= v_i^{<i>} for i >= 1. */
bool macaulay_check(const std::vector<long long>& v);

/** The i-th Macaulay pseudo-power n^{<i>}. */
Integer macaulay_bound(const Integer& n, int i);

struct StrongLefschetzReport
{
    struct Trial
    {
        RatVector omega;
        std::vector<std::size_t> ranks;   // ·ω^{d+1-2r}: Ψ_r -> Ψ_{d+1-r}, r < (d+1)/2
        bool strong = false;
    };
    std::vector<Trial> trials;
    bool verdict = false;
};

StrongLefschetzReport sl_check(const StressAlgebra& alg, const RatVector& omega);
StrongLefschetzReport sl_check_experimental(const StressAlgebra& alg, int trials, std::uint64_t seed);

struct GConjectureOptions
{
    std::uint64_t seed = 1;
    long bound = 60;
    int max_retries = 10;
    int trials = 3;
    unsigned long prime_bound = kDefaultPrimeBound;
    /** Throw GenericityNotAchieved instead of continuing with a general-position draw. */
    bool strict_genericity = false;
};

struct GConjectureReport
{
    bool homology_sphere = false;
    int draws = 0;
    bool q_generic = false;
    bool general_position = false;
    Realization realization;
    std::vector<std::size_t> hilbert;
    std::vector<long long> h_vector;
    bool hilbert_matches_h = false;
    LefschetzReport wlp;
    std::vector<long long> quotient_g;
    std::vector<long long> g_vector;
    bool quotient_matches_g = false;
    bool m_vector = false;
    bool verdict = false;
};

/** Throws NotAHomologySphere; GenericityNotAchieved only in strict mode. */
GConjectureReport g_conjecture_verdict(const SimplicialComplex& K, const GConjectureOptions& opt = {});

}   // namespace stresslab

#endif
