/**
 * Skeletal chain complexes R_r(Δ,ν), the cone projection Π, the chain map
 * φ^{ν,w}, the ξ/M matrices of the cone argument and the diagram behind the
 * weak Lefschetz proof.
 */
#ifndef STRESSLAB_SKELETAL_HPP
#define STRESSLAB_SKELETAL_HPP

#include "stresslab/maxwell.hpp"

namespace stresslab {

/**
 * One summand W^{(k)}_F, k = r-1-|F|+1, stored as V_F = {α ∧ ν(F)} ⊆ Λ^r.
 * basis holds RREF rows in Λ^r coordinates; lifts[j] ∧ ν(F) = basis row j.
 */
struct SkeletalCell
{
    Face face;
    RatMatrix basis;
    std::vector<std::size_t> pivots;
    std::vector<MultiVector> lifts;
    std::size_t offset = 0;
};

struct SkeletalChainComplex
{
    int r = 0;
    int d = 0;
    std::vector<MultiVector::Blade> blades;            // grade-r blades of R^{d+1}
    std::vector<std::vector<SkeletalCell> > cells;     // cells[i+1], i = -1..r-1
    std::vector<std::size_t> dims;                     // dims[i+1]
    std::vector<RatMatrix> boundary;                   // boundary[i+1]: C_i -> C_{i-1}

    int top() const { return r - 1; }
    std::size_t dim(int i) const;
    const RatMatrix& del(int i) const;
    const SkeletalCell& cell(int i, std::size_t c) const { return cells.at(i + 1).at(c); }

    /** dim ker ∂_i - rank ∂_{i+1}. */
    std::size_t homology_dim(int i) const;
    bool boundary_squared_zero() const;

    /** The representative α ∧ ν(F) of a basis vector. */
    MultiVector representative(int i, std::size_t coordinate) const;

    /** Coordinates of y ∈ V_F in the cell basis.  Throws DimensionMismatch off V_F. */
    RatVector coordinates(int i, std::size_t c, const MultiVector& y) const;
};

/** Cells of degree i are ordered like faces(i).  pre: 0 <= r <= d+1. */
SkeletalChainComplex skeletal_complex(const Realization& nu, int r);

/** Top-degree chain Σ x(H)·[H] of a function on (r-1)-faces, and back. */
RatVector stress_to_chain(const SkeletalChainComplex& C, const std::vector<QuadExt>& x);
std::vector<QuadExt> chain_to_stress(const SkeletalChainComplex& C, const std::vector<QuadExt>& coords);

struct StressHomologyReport
{
    int r = 0;
    std::size_t homology = 0;
    std::size_t stresses = 0;
    bool boundary_squared_zero = false;
    bool equal = false;
};

StressHomologyReport stress_homology(const Realization& nu, int r);
bool stress_homology_check(const Realization& nu, int r);

struct ChainMapReport
{
    int r = 0;
    std::vector<RatMatrix> pi;          // pi[i+1]: C_i(Δ') -> C_i(Δ)
    std::vector<bool> surjective_at;
    bool surjective = false;
    bool commutes = false;              // Π∂ = ∂Π
    std::size_t top_rank = 0;           // rank of Π on ker ∂_{r-1}(Δ')
    std::size_t top_source = 0;
    std::size_t top_target = 0;
    bool iso_top = false;
};

/** Π_i(α·[F]) = π_a(α)·[F], zero on faces through the apex. */
ChainMapReport cone_projection_chain_map(const Realization& cone_nu, const ConeProjection& proj, int r);

/** Precondition gate for w ∈ Ξ₀.  Throws InvalidParameters. */
void require_xi0(const Realization& nu, const Face& base, const RatVector& w);

/**
 * φ_i: C_i(R_r(Γ)) -> C_{i-1}(R_{r-1}(Γ)), i = 0..r-1, with
 * φ(α·[H]) = Σ_{v∈H} Σ_{G ⊇ H\v, v ∉ G} ζ_w(G) α·[H\v] on the canonical lifts.
 * to_delta sends vertex ids of Γ to those of Δ, or -1.
 */
std::vector<QuadMatrix> phi_matrices(const Realization& gamma, const SkeletalChainComplex& src,
                                     const SkeletalChainComplex& dst, const Realization& nu, const PLOrientation& rho, const RatVector& w,
                                     const std::vector<int>& to_delta);

/**
 * Number of kernel vectors β of α ↦ α ∧ ν(H), over all cells, whose φ-image
 * is nonzero.  Zero iff φ is well defined on the quotients W_H.
 */
std::size_t phi_ambiguity(const Realization& gamma, const SkeletalChainComplex& src,
                          const SkeletalChainComplex& dst, const Realization& nu, const PLOrientation& rho,
                          const RatVector& w, const std::vector<int>& to_delta);

struct PhiReport
{
    int r = 0;
    std::vector<QuadMatrix> phi_cone;
    std::vector<QuadMatrix> phi_base;
    bool is_chain_map = false;          // on both Δ' and Δ
    bool cone_chain_map = false;
    bool base_chain_map = false;
    bool commutes_with_pi = false;
    std::vector<int> chain_defect_degrees;   // degrees i with ∂φ_i != φ_{i-1}∂ (cone)
    std::size_t ambiguous_cone = 0;
    std::size_t ambiguous_base = 0;
    bool well_defined = false;
};

/** ν = proj.base.  pre: 1 <= r <= d+1, w ∈ Ξ₀. */
PhiReport phi_chain_map(const Realization& cone_nu, const ConeProjection& proj, const PLOrientation& rho,
                        const RatVector& w, int r);

/** ξ_{(F,H)} for F ∈ F_{k-1}(Δ'), H ∈ H[φ]. */
struct XiTable
{
    int k = 0;
    std::vector<Face> rows;             // F_{k-1}(Δ') in order
    std::vector<Face> columns;          // non-pivot k-faces
    QuadMatrix M;
    bool zero_off_base = false;         // rows through the apex vanish
};

struct CruxReport
{
    int r = 0;
    int k = 0;
    XiTable xi;
    std::size_t m_rank = 0;
    std::size_t expected = 0;           // h_{d-r+2}(Δ')
    bool full_rank = false;
    bool formula_agrees = false;        // direct φ^r equals M x
    std::size_t psi_dim = 0;
    std::size_t phi_rank = 0;
    bool injective = false;
    std::size_t images_in_psi = 0;      // basis images in Ψ_{r+1}(Δ')
    int swaps = 0;
};

CruxReport technical_crux(const Realization& cone_nu, const ConeProjection& proj, const PLOrientation& rho,
                          const RatVector& w, int r);

struct CruxCheckReport
{
    std::vector<CruxReport> per_r;      // r = 1..⌈(d+1)/2⌉
    int draws = 0;
    std::uint64_t seed_used = 0;
    bool all_full_rank = false;
    bool all_injective = false;
    bool verdict = false;
};

/** Nonzero w in [-9, 9] on the vertices outside the base, zero on it. */
RatVector random_weights(const SimplicialComplex& K, const Face& base, std::uint64_t seed);

inline constexpr const char* kConeApex = "a*";

/**
 * ν' = a random realization of Δ * {a} with the base vertices rescaled so
 * that ν = π_a ν' has last coordinate 1, ρ on ν and random w ∈ Ξ₀.
 */
struct ConeSetup
{
    Realization cone_nu;
    ConeProjection proj;
    PLOrientation rho;
    RatVector w;
};

ConeSetup cone_setup(const SimplicialComplex& K, std::uint64_t seed, long bound = 60);

/** Draws ν' on cone(Δ), ν = π_a ν', and redraws until every M has full rank. */
CruxCheckReport technical_crux_check(const SimplicialComplex& K, std::uint64_t seed, int max_redraws = 10,
                                     long bound = 60);

struct DiagramDegree
{
    int r = 0;                          // ·ω: Ψ_{r-1} -> Ψ_r
    bool matrices_equal = false;        // φ_* and ·ω on a basis, entrywise
    bool random_equal = false;
    bool zero_equal = false;
    std::size_t omega_rank = 0;
    std::size_t source_dim = 0;
    bool injective = false;
};

struct DiagramReport
{
    std::uint64_t seed = 0;
    RatVector w;
    bool zeta_matches_omega = false;    // ζ_w(G) = ω(G)
    bool omega_in_psi = false;
    std::vector<DiagramDegree> degrees;
    CruxCheckReport crux;
    bool degrees_match = false;         // ·ω injective iff φ^r injective, r <= ⌈(d+1)/2⌉
    bool commutes = false;
};

DiagramReport wlp_diagram_check(const SimplicialComplex& K, std::uint64_t seed, int trials = 3, long bound = 60);

}   // namespace stresslab

#endif
