/**
 * PL realizations of simplicial complexes: vertex coordinates in Q^{d+1},
 * random general-position draws, induced points, Q-genericity reports,
 * link realizations through distinguished bases, and cone projections.
 */
#ifndef STRESSLAB_REALIZATION_HPP
#define STRESSLAB_REALIZATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>
#include "stresslab/complex.hpp"
#include "stresslab/exterior.hpp"
#include "stresslab/numeric.hpp"

namespace stresslab {

/**
 * ν: vertex id -> nonzero vector of Q^{d+1} with nonzero last coordinate,
 * such that every face has a nonzero multivector.
 */
struct Realization
{
    SimplicialComplex complex;
    int d = 0;
    std::vector<RatVector> coords;

    int ambient() const { return d + 1; }
};

/** Validate and build.  Throws DimensionMismatch or InvalidParameters. */
Realization make_realization(const SimplicialComplex& K, int d, std::vector<RatVector> coords);

/** A face whose multivector vanishes, if any. */
std::optional<Face> degenerate_face(const SimplicialComplex& K, const std::vector<RatVector>& coords);

/**
 * First (d+1)-subset of vertices (or the whole vertex set when n < d+1)
 * that is linearly dependent.  With sample > 0 only that many random
 * subsets are tested.
 */
std::optional<Face> general_position_witness(const Realization& nu, std::size_t sample = 0,
                                             std::uint64_t seed = 0);

bool in_general_position(const Realization& nu, std::size_t sample = 0, std::uint64_t seed = 0);

/**
 * Integer coordinates drawn uniformly from [-bound, bound], last
 * coordinate 1, redrawn until the vertices are in general position.
 */
Realization realize_random(const SimplicialComplex& K, std::uint64_t seed, long bound = 100,
                           int max_retries = 100);

/** As realize_random, but in R^d for a complex of dimension below d. */
Realization realize_random_in(const SimplicialComplex& K, int d, std::uint64_t seed, long bound = 100,
                              int max_retries = 100);

/** Multiply ν(v) by λ(v) (all nonzero). */
Realization scaled(const Realization& nu, const std::vector<Rational>& lambda);

/** ν(F) in the fixed vertex order; ν(∅) = 1.  Throws FaceNotFound. */
MultiVector face_multivector(const Realization& nu, const Face& f);

/** The point ν(v) / last coordinate, in Q^d. */
RatVector induced_point(const Realization& nu, int v);

/** ν̄: all induced points. */
std::vector<RatVector> induced_points(const Realization& nu);

/** W_F: rows (ν̄(v), 1) for the vertices of F in order. */
RatMatrix facet_matrix(const Realization& nu, const Face& f);

/**
 * Gradient m_F^{μ_v} of the affine function on ν̄(F) with value 1 at v and 0
 * at the other vertices (Cramer's rule); zero when v is not in F.  F must
 * have d+1 vertices.  Throws SingularFacetMatrix.
 */
RatVector cramer_gradient(const Realization& nu, const Face& f, int v);

/**
 * Normal ñ to aff ν̄(G) for a (d-1)-face G, with ⟨ñ, x - p⟩ = det of the
 * edge vectors of G followed by x - p, oriented away from ν̄(opposite).
 * |ñ| = (d-1)! vol(ν̄(G)).  Throws SingularFacetMatrix if ν̄(opposite) lies
 * on the hyperplane.
 */
RatVector ridge_conormal(const Realization& nu, const Face& g, int opposite);

/** vol(ν̄(G))^2 for a face G (Gram determinant of its edge vectors over (k!)^2). */
Rational face_volume_squared(const Realization& nu, const Face& g);

/** The two facets containing a ridge; throws PreconditionViolated otherwise. */
std::pair<Face, Face> ridge_cofacets(const SimplicialComplex& K, const Face& g);

/** ζ²_{(G,v)} = |m_{G'}^{μ_v} - m_{G''}^{μ_v}|^2 / vol(ν̄(G))^2. */
Rational zeta_squared(const Realization& nu, const Face& g, int v);

struct GenericityReport
{
    bool is_rational = true;
    bool general_position = false;
    std::map<std::pair<Face, int>, Rational> zeta_squares;
    std::map<std::pair<Face, int>, SquarefreeKernel> kernels;
    std::size_t kernel_gf2_rank = 0;
    bool all_nonzero = false;
    bool verdict = false;
    std::string sign_convention = "rho(G'')";
};

/**
 * ζ² for every ridge G and every vertex of its closed star, squarefree
 * kernels, and the GF(2)-independence verdict.  Requires a pseudomanifold.
 */
GenericityReport q_genericity_check(const Realization& nu, unsigned long prime_bound = kDefaultPrimeBound);

/**
 * Ordered basis of V̂_F = span(ν(F))^⊥ with the coordinate map T_B.  T_B is
 * evaluated through rows P on which the basis matrix is invertible.
 */
struct DistinguishedBasis
{
    Face base;
    int ambient = 0;
    std::vector<RatVector> vectors;
    std::vector<std::size_t> pivot_rows;
    RatMatrix pivot_inverse;

    int rank() const { return static_cast<int>(vectors.size()); }

    /** Coordinates in the basis; throws DimensionMismatch off V̂_F. */
    RatVector apply(const RatVector& x) const;

    /** Λ(T_B) on a multivector of Λ(V̂_F). */
    MultiVector apply(const MultiVector& x) const;
};

struct LinkRealization
{
    DistinguishedBasis basis;
    Realization realization;
    std::vector<int> to_parent;     // link vertex id -> vertex id of Δ
};

/** π̂(T_B(m_{G',G})) != 0 for all F ⊆ G' ≺ G. */
bool is_distinguished(const Realization& nu, const DistinguishedBasis& B);

/** Basis of V̂_F from the given vectors (validated, not tested for distinction). */
DistinguishedBasis make_basis(const Realization& nu, const Face& f, std::vector<RatVector> vectors);

/**
 * ν_B(v) = T_B(m_{F,F∪v}) on Lk(F), with B redrawn at random until it is
 * distinguished.  Throws FaceNotFound, RetriesExhausted.
 */
LinkRealization link_realization(const Realization& nu, const Face& f, std::uint64_t seed = 1,
                                 int max_retries = 50);

/** Link realization for a given basis; throws BasisNotDistinguished. */
LinkRealization link_realization_with(const Realization& nu, const Face& f, const DistinguishedBasis& B);

/**
 * Central projection from ν'(a) onto U = ker ℓ, expressed in coordinates by
 * dropping coordinate `dropped` (where ℓ is nonzero).
 */
struct ConeProjection
{
    int apex = -1;                  // vertex id of a in Δ*{a}
    RatVector ell;
    int dropped = -1;
    RatMatrix map;                  // (d+1) x (d+2)
    Realization base;               // realization of Δ in R^d
    std::vector<int> to_cone;       // vertex id of Δ -> vertex id of Δ*{a}
};

/**
 * Project a realization of Δ*{a} in R^{d+1} to a realization of Δ in R^d.
 * With no ℓ given, ℓ = e_j^* for a coordinate j with ν'(a)_j != 0,
 * preferring j other than the last.  Throws DegenerateProjection.
 */
ConeProjection cone_and_project(const Realization& cone_nu, const std::string& apex,
                                const std::optional<RatVector>& ell = std::nullopt);

}   // namespace stresslab

#endif
