/**
 * Rigidity matrices, stress spaces and equilibrium checks, restriction of
 * stresses to links, pivotal orders and weights, autonomous vertex sets and
 * pivot-compatible face sets.
 */
#ifndef STRESSLAB_RIGIDITY_HPP
#define STRESSLAB_RIGIDITY_HPP

#include <cstdint>
#include <optional>
#include <vector>
#include "stresslab/realization.hpp"

namespace stresslab {

/**
 * Element of Ψ_r: values on the (d-r)-faces, indexed like
 * complex.faces(d - r).  Degree d+1 lives on the empty face.
 */
struct StressVector
{
    int degree = 0;
    int d = 0;
    RatVector values;

    int face_dim() const { return d - degree; }
    /** The r of an r-stress in the (d+1-degree) numbering. */
    int stress_order() const { return d + 1 - degree; }
    bool is_zero() const;
};

StressVector zero_stress(const Realization& nu, int degree);

/** Value of a stress on a face of the right dimension (0 if absent). */
Rational stress_value(const Realization& nu, const StressVector& a, const Face& f);

/**
 * R^k_ν: (d+1) rows per (k-1)-face F and one column per k-face H.  The
 * block for F holds, in the column of F ∪ v, ν(v) reduced modulo span ν(F)
 * (pivot coordinates of the RREF of ν(F) cleared), so that the nullspace
 * is Ψ_{d-k}.  Orders are permutations of face indices.
 */
RatMatrix rigidity_matrix(const Realization& nu, int k,
                          const std::vector<std::size_t>* row_order = nullptr,
                          const std::vector<std::size_t>* col_order = nullptr);

/**
 * Exact bases of Ψ_r for r = 0..d+1, with the RREF of R^{d-r} for r <= d.
 */
struct GradedStressSpace
{
    int d = 0;
    std::vector<std::vector<RatVector> > basis;
    std::vector<RrefResult> rref;   // rref[k] for R^k, k = 0..d

    std::vector<std::size_t> hilbert() const;
    std::size_t dim(int r) const;
    StressVector element(int r, std::size_t i) const;
    /** Σ c_i basis_i. */
    StressVector combination(int r, const RatVector& coeffs) const;
};

GradedStressSpace stress_space(const Realization& nu);

/** Basis of Ψ_r alone. */
std::vector<RatVector> stress_basis(const Realization& nu, int r);

enum class EquilibriumForm { Projective, Cayley, Geometric };

/**
 * Projective and Cayley forms are exact.  The geometric form is evaluated
 * in 60-digit floating point with relative tolerance 1e-30; for stresses
 * on vertices it checks Σ a(v) ν(v) = 0, and for the empty face it is
 * vacuous.
 */
bool check_equilibrium(const StressVector& a, const Realization& nu, EquilibriumForm form);

/**
 * Local stresses on the star of H: functions on the (d-r)-faces containing
 * H satisfying the equilibrium equation at every (d-r-1)-face containing H.
 */
std::vector<RatVector> local_stress_basis(const Realization& nu, const Face& h, int r);

/** Equilibrium at the faces of the star of H only. */
bool check_local_equilibrium(const StressVector& a, const Realization& nu, const Face& h);

/**
 * a'(G) = a(F ∪ G) ∏_{u ∈ G} Sgn[F, F ∪ u] on the link of F, as a stress of
 * the same degree on the link realization ν_B(u) = T_B(m_{F,F∪u}).  The sign
 * absorbs the orientation of m_{F,F∪u}; it is 1 when F precedes its link.
 * Throws BasisNotDistinguished.
 */
StressVector restrict_to_link(const StressVector& a, const Realization& nu, const Face& f,
                              const LinkRealization& link);

/**
 * Pivotal linear order on the k-faces: pivots first, then the N non-pivot
 * faces H_φ(1..N).  Face references are indices into faces(k).
 */
struct PivotalOrder
{
    int k = 0;
    std::vector<std::size_t> order;       // position -> face index
    std::vector<std::size_t> pivots;      // Ĥ[φ] in order
    std::vector<std::size_t> nonpivots;   // H[φ] in order
    RatMatrix rhat;                       // (f_k - N) x N

    std::size_t nullity() const { return nonpivots.size(); }
    bool is_pivot(std::size_t face) const;
};

/** RREF under the given column order, with pivots moved first. */
PivotalOrder pivotal_order_from(const Realization& nu, int k, const std::vector<std::size_t>& order);

/** Seed 0 starts from the lexicographic order, other seeds from a shuffle. */
PivotalOrder pivotal_order(const Realization& nu, int k, std::uint64_t seed = 0);

/** Permute the pivot and non-pivot blocks; σ's are position permutations. */
PivotalOrder pivotal_reordering(const Realization& nu, const PivotalOrder& po,
                                const std::vector<std::size_t>& sigma_hat,
                                const std::vector<std::size_t>& sigma);

struct PivotalWeights
{
    std::vector<int> wt;        // per k-face, 1..N
    std::vector<int> subwt;     // per (k-1)-face, 1..N
};

/** Throws PreconditionViolated for realizations not in general position or N = 0. */
PivotalWeights pivotal_weights(const Realization& nu, const PivotalOrder& po);

bool is_autonomous(const SimplicialComplex& K, const std::vector<int>& A, int k);

struct PivotCompatibleResult
{
    std::vector<Face> hhat;                 // F_i ∪ v_i
    std::vector<Face> private_ridges;       // F_i
    PivotalOrder order;
    int swaps = 0;
};

/**
 * Ĥ = {F_i ∪ v_i} for the (k-1)-faces F_i avoiding A, and a pivotal order
 * with Ĥ among its pivots, found by the swap descent.  Throws
 * PreconditionViolated (A not (k-1)-autonomous) or DescentStalled.
 */
PivotCompatibleResult pivot_compatible_set(const Realization& nu, const std::vector<int>& A, int k,
                                           std::uint64_t seed = 0);

}   // namespace stresslab

#endif
