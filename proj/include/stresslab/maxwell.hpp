/**
 * Liftings, reciprocals and 1-stresses of a realized pseudomanifold, the ζ
 * scalars, the A/B matrices and the product formula for Ψ_1 · Ψ_d.
 */
#ifndef STRESSLAB_MAXWELL_HPP
#define STRESSLAB_MAXWELL_HPP

#include "stresslab/algebra.hpp"

namespace stresslab {

/** ρ per facet, indexed like faces(d). */
struct PLOrientation
{
    Face base;
    std::vector<int> rho;

    int at(const SimplicialComplex& K, const Face& facet) const;
};

/** The lexicographically least facet. */
Face default_base(const SimplicialComplex& K);

/**
 * ρ(base) = +1, propagated across ridges: ρ(F) = ρ(F') iff the apexes of F
 * and F' lie on opposite sides of the ridge.  Throws NonOrientable,
 * PreconditionViolated (not a pseudomanifold), SingularFacetMatrix.
 */
PLOrientation pl_orientation(const Realization& nu, const std::optional<Face>& base = std::nullopt);

/**
 * Piecewise affine function on ν̄: heights per vertex, and per facet the
 * gradient m_F and offset c_F with ⟨m_F, ν̄(v)⟩ + c_F = heights[v].
 */
struct Lifting
{
    Face base;
    RatVector heights;
    std::vector<RatVector> m;
    RatVector c;
};

/** Throws InvalidParameters (nonzero height on the base) or SingularFacetMatrix. */
Lifting lifting_from_heights(const Realization& nu, const Face& base, const RatVector& heights);

/** μ_v: height 1 at v, m_F from Cramer's rule.  Throws InvalidParameters for v in the base. */
Lifting basis_lifting(const Realization& nu, const Face& base, int v);

Lifting operator+(const Lifting& a, const Lifting& b);
Lifting operator*(const Rational& s, const Lifting& a);

/** The affine pieces of adjacent facets agree on the shared ridge. */
bool lifting_consistent(const Realization& nu, const Lifting& mu);

/**
 * a(G) = ρ(F) (d-1)! ⟨m_{F'} - m_F, ñ⟩ / ⟨ñ, ñ⟩ / ∏_{u∈G} λ_u, where F = G ∪ v,
 * F' the other facet on G and ñ = ridge_conormal(G, v).
 */
StressVector lifting_to_stress(const Realization& nu, const PLOrientation& rho, const Lifting& mu);

/** The same values as ρ(F)/vol(G) ⟨m_{F'} - m_F, n̂⟩/∏λ with a unit normal, at 60 digits. */
std::vector<Float> lifting_to_stress_float(const Realization& nu, const PLOrientation& rho, const Lifting& mu);

/** Inverse of lifting_to_stress on Lift(Σ, ν, Q).  Throws InvalidParameters off Ψ_1. */
Lifting stress_to_lifting(const Realization& nu, const PLOrientation& rho, const StressVector& a);

/**
 * Points R(F) = m_F, edge lengths ℓ_G = ρ(F)⟨R(F') - R(F), ñ⟩/|ñ| and their
 * normalized form ℓ_G / vol ν̄(G), per ridge.
 */
struct Reciprocal
{
    Face base;
    std::vector<RatVector> points;
    std::vector<QuadExt> lengths;
    std::vector<QuadExt> normalized;
};

Reciprocal lifting_to_reciprocal(const Realization& nu, const PLOrientation& rho, const Lifting& mu);

/** R(F') - R(F) parallel to the ridge normal on every ridge, and R(base) = 0. */
bool reciprocal_valid(const Realization& nu, const Reciprocal& R);

/** a(G) = L̂(G) / ∏_{u∈G} λ_u.  Throws InvalidParameters if some L̂ is irrational. */
StressVector reciprocal_to_stress(const Realization& nu, const Reciprocal& R);

/** ζ_{(G,v)}: the normalized edge length of the reciprocal of μ_v at G. */
QuadExt zeta(const Realization& nu, const PLOrientation& rho, const Face& g, int v);

/** Σ w(v) ζ_{(G,v)} over the vertices v of the closed star of G outside the base. */
QuadExt zeta_w(const Realization& nu, const PLOrientation& rho, const RatVector& w, const Face& g);

struct ABMatrices
{
    std::vector<int> vertex_order;   // non-base vertices first, then the base
    QuadMatrix A;                    // n x m, ζ_{(G_j, v_i)}
    RatMatrix B;                     // 1 iff v_i ∉ G_j
    RatMatrix Bbar;                  // vertex-ridge incidence
    std::size_t abt_rank = 0;
    bool abt_invertible = false;
    bool rows_equal = false;         // Row(B) = Row(B̄)
    RatMatrix w;                     // (W̄_Q W_Q^{-1})^T, (d+1) x (n-d-1)
    QuadMatrix C;
    bool c_invertible = false;
};

ABMatrices ab_matrices(const Realization& nu, const PLOrientation& rho);

struct ProductFormulaReport
{
    QuadExt algebra_value;   // (ab)(∅)
    QuadExt formula_value;   // Σ_v (Σ_{G ∌ v} L̂_a(G)) b(v)
    QuadExt matrix_value;    // α Â B^T b, α the μ-coordinates of a
    bool equal = false;
};

/** a ∈ Ψ_1 (values on ridges), b ∈ Ψ_d (values on vertices). */
ProductFormulaReport product_formula(const StressAlgebra& alg, const PLOrientation& rho,
                                     const StressVector& a, const StressVector& b);

bool product_formula_check(const StressAlgebra& alg, const PLOrientation& rho, const StressVector& a,
                           const StressVector& b);

/**
 * Local version on the star of vertex h: heights on the closed star, values
 * on the ridges through h (zero elsewhere).
 */
StressVector local_lifting_to_stress(const Realization& nu, const PLOrientation& rho, int h,
                                     const RatVector& heights);

}   // namespace stresslab

#endif
