/**
 * Exact arithmetic and linear algebra: rationals, elements of real
 * multi-quadratic extensions of Q, dense matrices over both, and GF(2) rank.
 */
#ifndef STRESSLAB_NUMERIC_HPP
#define STRESSLAB_NUMERIC_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>
#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>
#include "stresslab/errors.hpp"

namespace stresslab {

using Integer = mpz_class;
using Rational = mpq_class;
using Float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60> >;
using RatVector = std::vector<Rational>;

constexpr unsigned long kDefaultPrimeBound = 1000000;

/** Serialize as "num/den" (the denominator is always written). */
std::string to_string(const Rational& q);

/** Parse "num/den" or "num"; throws ParseError on malformed input. */
Rational parse_rational(const std::string& s);

Float to_float(const Rational& q);

/**
 * A squarefree positive integer, stored as its sorted list of distinct
 * prime factors.  The empty list encodes 1.
 */
struct SquarefreeKernel
{
    std::vector<Integer> primes;

    Integer value() const;
    bool is_one() const { return primes.empty(); }
    bool operator==(const SquarefreeKernel& other) const { return primes == other.primes; }
    bool operator<(const SquarefreeKernel& other) const { return primes < other.primes; }
};

struct SquarefreePart
{
    SquarefreeKernel kernel;
    Rational root_cofactor;
};

/**
 * Write q = c^2 * k with k squarefree, by trial division up to the given
 * prime bound.  Throws FactorizationIncomplete if an unresolved non-square
 * cofactor larger than bound^2 survives.
 */
SquarefreePart squarefree_part(const Rational& q, unsigned long prime_bound = kDefaultPrimeBound);

/**
 * An element sum_K c_K sqrt(K) of Q[sqrt(p) : p prime], with K ranging over
 * squarefree kernels.  Zero terms are never stored, so x == 0 iff the term
 * map is empty.
 */
class QuadExt
{
    public:
        using TermMap = std::map<SquarefreeKernel, Rational>;

        QuadExt() = default;
        QuadExt(const Rational& q);
        QuadExt(long q) : QuadExt(Rational(q)) {}
        QuadExt(int q) : QuadExt(Rational(q)) {}

        /** c * sqrt(kernel). */
        static QuadExt root(const SquarefreeKernel& kernel, const Rational& c = 1);

        /** sqrt(q) for q >= 0. */
        static QuadExt sqrt(const Rational& q, unsigned long prime_bound = kDefaultPrimeBound);

        const TermMap& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }
        bool is_rational() const;

        /** The coefficient of sqrt(1). */
        Rational rational_part() const;

        /** Negate every term whose kernel contains p. */
        QuadExt conjugate(const Integer& p) const;

        /** All primes occurring in some kernel. */
        std::vector<Integer> primes() const;

        QuadExt inverse() const;

        Float to_float() const;
        std::string to_string() const;

        QuadExt operator-() const;
        QuadExt& operator+=(const QuadExt& other);
        QuadExt& operator-=(const QuadExt& other);
        QuadExt& operator*=(const QuadExt& other);
        QuadExt& operator/=(const QuadExt& other);

        friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
        friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
        friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
        friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
        friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.terms_ == b.terms_; }
        friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    private:
        TermMap terms_;

        void add_term(const SquarefreeKernel& k, const Rational& c);
};

QuadExt quad_mul(const QuadExt& a, const QuadExt& b);

/** Dense row-major matrix. */
template <typename T>
struct Matrix
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

    T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T> >& rows, std::size_t ncols = 0)
    {
        Matrix m(rows.size(), rows.empty() ? ncols : rows[0].size());
        for (std::size_t i = 0; i < m.rows; ++i)
        {
            if (rows[i].size() != m.cols)
                throw DimensionMismatch("ragged rows");
            for (std::size_t j = 0; j < m.cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    Matrix transpose() const
    {
        Matrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data.begin() + i * cols, data.begin() + (i + 1) * cols);
    }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows);
        for (std::size_t i = 0; i < rows; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    bool is_zero() const
    {
        for (const T& x : data)
            if (x != T(0))
                return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

using RatMatrix = Matrix<Rational>;
using QuadMatrix = Matrix<QuadExt>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols != b.rows)
        throw DimensionMismatch("matrix product");
    Matrix<T> c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k)
        {
            const T& x = a(i, k);
            if (x == T(0))
                continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c(i, j) += x * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x)
{
    if (a.cols != x.size())
        throw DimensionMismatch("matrix-vector product");
    std::vector<T> y(a.rows, T(0));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (x[j] != T(0))
                y[i] += a(i, j) * x[j];
    return y;
}

QuadMatrix to_quad(const RatMatrix& m);

struct RrefResult
{
    RatMatrix R;
    std::vector<std::size_t> pivots;
};

/** Reduced row-echelon form by Gauss-Jordan elimination over Q. */
RrefResult rat_rref(const RatMatrix& m);

/**
 * Standard RREF-parametrized nullspace basis: one vector per non-pivot
 * column, with a 1 in that coordinate.
 */
std::vector<RatVector> rat_nullspace(const RatMatrix& m);

/** Rank via fraction-free (Bareiss) elimination on a cleared integer copy. */
std::size_t rat_rank(const RatMatrix& m);

Rational rat_det(const RatMatrix& m);

/** Inverse of a square matrix; nullopt if singular. */
std::optional<RatMatrix> rat_inverse(const RatMatrix& m);

/** Some x with m x = b, or nullopt if inconsistent. */
std::optional<RatVector> rat_solve(const RatMatrix& m, const RatVector& b);

/** Rank over Q[sqrt primes] via Bareiss elimination with exact division. */
std::size_t quad_rank(const QuadMatrix& m);

/** Matrix whose rows are the given vectors (all of length n). */
RatMatrix rows_matrix(const std::vector<RatVector>& vs, std::size_t n);

/** Dimension of the span of the given vectors. */
std::size_t span_dim(const std::vector<RatVector>& vs, std::size_t n);

/** True iff every vector of b lies in span(a). */
bool span_contains(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t n);

using BitVector = std::vector<bool>;

/** Rank over the two-element field. */
std::size_t gf2_rank(const std::vector<BitVector>& vectors);

}   // namespace stresslab

#endif
