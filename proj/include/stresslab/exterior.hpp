/**
 * Exterior algebra of Q^{N+1} with its standard inner product: wedge
 * products, the Hodge star and its inverse, the Grassmann-Cayley meet,
 * permutation signs of ordered subsets, and m-vectors of nested faces.
 */
#ifndef STRESSLAB_EXTERIOR_HPP
#define STRESSLAB_EXTERIOR_HPP

#include <map>
#include <optional>
#include <vector>
#include "stresslab/numeric.hpp"

namespace stresslab {

/**
 * Multivector in the exterior algebra of Q^D.  Basis blades are encoded as
 * bitmasks: bit i stands for e_{i+1}.  Zero coefficients are never stored.
 */
class MultiVector
{
    public:
        using Blade = unsigned;

        MultiVector() = default;
        explicit MultiVector(int ambient_dim);

        static MultiVector scalar(int ambient_dim, const Rational& c);
        static MultiVector vector(const RatVector& v);

        /** c * e_{i_1} ∧ ... ∧ e_{i_k}, indices 1-based and arbitrary order. */
        static MultiVector blade(int ambient_dim, const std::vector<int>& indices, const Rational& c = 1);

        /** The volume element ξ = e_1 ∧ ... ∧ e_D. */
        static MultiVector xi(int ambient_dim);

        int ambient_dim() const { return dim_; }
        const std::map<Blade, Rational>& terms() const { return terms_; }
        Rational coeff(Blade b) const;

        /** Coefficient of the blade with the given sorted 1-based indices. */
        Rational coeff(const std::vector<int>& sorted_indices) const;

        bool is_zero() const { return terms_.empty(); }

        /** Grade if homogeneous; -1 for zero; nullopt if mixed. */
        std::optional<int> grade() const;

        MultiVector grade_part(int r) const;

        /** Coefficients of a 1-vector as a length-D list. */
        RatVector as_vector() const;

        void add(Blade b, const Rational& c);

        MultiVector operator-() const;
        MultiVector& operator+=(const MultiVector& other);
        MultiVector& operator-=(const MultiVector& other);
        MultiVector& operator*=(const Rational& c);

        friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
        friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
        friend MultiVector operator*(MultiVector a, const Rational& c) { return a *= c; }
        friend MultiVector operator*(const Rational& c, MultiVector a) { return a *= c; }
        friend bool operator==(const MultiVector& a, const MultiVector& b)
        {
            return a.dim_ == b.dim_ && a.terms_ == b.terms_;
        }
        friend bool operator!=(const MultiVector& a, const MultiVector& b) { return !(a == b); }

    private:
        int dim_ = 0;
        std::map<Blade, Rational> terms_;
};

/** Sign of e_a ∧ e_b relative to e_{a∪b}; 0 if the blades overlap. */
int blade_wedge_sign(MultiVector::Blade a, MultiVector::Blade b);

MultiVector wedge(const MultiVector& a, const MultiVector& b);

/** Wedge of a list of 1-vectors, in order; the empty list gives 1. */
MultiVector wedge_vectors(int ambient_dim, const std::vector<RatVector>& vs);

/**
 * Image of a multivector under the exterior power of the linear map given
 * by M (M.rows x M.cols, acting on column vectors of length M.cols).
 */
MultiVector induced_map(const RatMatrix& M, const MultiVector& a);

/** Standard inner product extended to blades. */
Rational inner(const MultiVector& a, const MultiVector& b);

MultiVector hodge_star(const MultiVector& a);
MultiVector hodge_star_inv(const MultiVector& a);

/** a ∧̃ b = ★⁻¹(★a ∧ ★b). */
MultiVector gc_meet(const MultiVector& a, const MultiVector& b);

/**
 * Sign of the permutation taking U to the concatenation (U', U \ U'),
 * where U' keeps its given order.  Throws NotSubset.
 */
int sgn(const std::vector<int>& uprime, const std::vector<int>& u);

/**
 * m_{F',F} = ν(F) ∧̃ ★ν(F') where ν(F) is the wedge of the rows of
 * `coords` listed by F.  F' must be a subset of F.
 */
MultiVector m_vector(const std::vector<RatVector>& coords, const std::vector<int>& fprime,
                     const std::vector<int>& f);

}   // namespace stresslab

#endif
