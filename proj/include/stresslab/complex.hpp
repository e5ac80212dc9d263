/**
 * Abstract simplicial complexes: construction, face queries, combinatorial
 * operations (link, star, cone, join, suspension, subdivision), face
 * vectors, simplicial homology over Q and GF(2), and recognition predicates.
 */
#ifndef STRESSLAB_COMPLEX_HPP
#define STRESSLAB_COMPLEX_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>
#include "stresslab/errors.hpp"

namespace stresslab {

/** A face is a strictly increasing list of vertex ids. */
using Face = std::vector<int>;

struct FaceHash
{
    std::size_t operator()(const Face& f) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (int v : f)
            h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ULL;
        return h;
    }
};

/** Sorted union of two faces. */
Face face_union(const Face& a, const Face& b);

/** Sorted intersection of two faces. */
Face face_intersection(const Face& a, const Face& b);

/** Elements of a not in b. */
Face face_difference(const Face& a, const Face& b);

bool face_contains(const Face& big, const Face& small);

/** Face with one vertex added. */
Face face_with(const Face& f, int v);

/** Face with one vertex removed. */
Face face_without(const Face& f, int v);

/**
 * Simplicial complex with vertices labelled by strings.  Vertex ids are the
 * positions of the labels in lexicographic order; faces of each dimension
 * are kept sorted lexicographically by id tuple.
 */
class SimplicialComplex
{
    public:
        SimplicialComplex() = default;

        /**
         * Close the given facets under inclusion.  A list containing only
         * the empty facet yields the complex {∅}.
         */
        static SimplicialComplex from_facets(const std::vector<std::vector<std::string> >& facets);

        const std::vector<std::string>& labels() const { return labels_; }
        int num_vertices() const { return static_cast<int>(labels_.size()); }
        int vertex_id(const std::string& label) const;

        /** dim = max face dimension; -1 for {∅}. */
        int dim() const { return static_cast<int>(faces_.size()) - 2; }

        /** Faces of dimension k, for -1 <= k <= dim(). */
        const std::vector<Face>& faces(int k) const;

        /** f_k, zero outside -1..dim. */
        std::size_t f(int k) const;

        /** Position of the face within faces(|F|-1), or -1. */
        int index(const Face& f) const;
        bool contains(const Face& f) const { return index(f) >= 0; }

        /** Facets in input order (as id tuples). */
        const std::vector<Face>& facets() const { return facets_; }

        /** Vertices v with F ∪ v a face and v not in F. */
        std::vector<int> link_vertices(const Face& f) const;

        /** All faces F ∪ v of dimension dim F + 1. */
        std::vector<Face> cofacets(const Face& f) const;

        /** Facets containing F. */
        std::vector<Face> facets_containing(const Face& f) const;

        std::vector<std::string> face_labels(const Face& f) const;
        Face face_from_labels(const std::vector<std::string>& labels) const;

        /** Facets as label lists. */
        std::vector<std::vector<std::string> > facet_labels() const;

    private:
        std::vector<std::string> labels_;
        std::unordered_map<std::string, int> label_index_;
        std::vector<Face> facets_;
        std::vector<std::vector<Face> > faces_;     // faces_[k+1] = k-faces
        std::vector<std::unordered_map<Face, int, FaceHash> > face_index_;
};

SimplicialComplex link(const SimplicialComplex& K, const Face& f);

/** Open star: all faces containing F. */
std::vector<Face> star(const SimplicialComplex& K, const Face& f);

/** Subcomplex generated by the facets containing F. */
SimplicialComplex closed_star(const SimplicialComplex& K, const Face& f);

/** Antistar: faces not containing F (as a subcomplex). */
SimplicialComplex antistar(const SimplicialComplex& K, const Face& f);

SimplicialComplex cone(const SimplicialComplex& K, const std::string& apex);
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);
SimplicialComplex suspension(const SimplicialComplex& K, const std::string& north = "N",
                             const std::string& south = "S");
SimplicialComplex barycentric_subdivision(const SimplicialComplex& K);

/** Boundary of the d-simplex (a (d-1)-sphere on d+1 vertices "1".."d+1"). */
SimplicialComplex simplex_boundary(int d);

/** Boundary of the d-dimensional cross-polytope, vertices "+i" / "-i". */
SimplicialComplex cross_polytope_boundary(int d);

/** Boundary of the cyclic d-polytope on n vertices "1".."n" (Gale evenness). */
SimplicialComplex cyclic_polytope_boundary(int d, int n);

/** Boundary of an n-gon, the cyclic 1-sphere. */
SimplicialComplex polygon(int n);

/** 6-vertex triangulation of the real projective plane. */
SimplicialComplex projective_plane_6();

/** 7-vertex (Möbius) triangulation of the torus. */
SimplicialComplex torus_7();

struct FaceVector
{
    int d = -1;
    std::vector<long long> f;   // f_0..f_d
    std::vector<long long> h;   // h_0..h_{d+1}
    std::vector<long long> g;   // g_0..g_{floor((d+1)/2)}
};

long long binomial(long long n, long long k);

FaceVector f_h_g_vectors(const SimplicialComplex& K);

/** Inverse of the f -> h transform, for round-trip checks. */
std::vector<long long> f_from_h(const std::vector<long long>& h);

enum class Field { Q, GF2 };

struct BettiProfile
{
    Field field = Field::Q;
    std::vector<long long> beta;    // beta[i+1] = reduced beta_i, i = -1..d

    long long at(int i) const;
};

BettiProfile betti(const SimplicialComplex& K, Field field);

struct Classification
{
    bool is_pure = false;
    bool is_strongly_connected = false;
    bool is_pseudomanifold = false;
    bool is_homology_manifold = false;
    bool is_homology_sphere = false;
    bool is_orientable_candidate = false;
};

Classification classify(const SimplicialComplex& K, Field field);

std::vector<long long> h_prime(const SimplicialComplex& K, Field field);
std::vector<long long> h_double_prime(const SimplicialComplex& K, Field field);

/** True iff the reduced Betti numbers are those of a sphere of dimension dim. */
bool is_sphere_betti(const BettiProfile& b, int dim);

}   // namespace stresslab

#endif
