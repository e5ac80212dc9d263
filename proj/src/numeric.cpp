#include "stresslab/numeric.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace stresslab {

std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw ParseError("empty rational");
    std::string t = s;
    t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
    std::size_t slash = t.find('/');
    auto valid_int = [](const std::string& x) {
        if (x.empty())
            return false;
        std::size_t start = (x[0] == '-' || x[0] == '+') ? 1 : 0;
        if (start == x.size())
            return false;
        return std::all_of(x.begin() + start, x.end(), ::isdigit);
    };
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw ParseError("malformed rational '" + s + "'");
    if (num[0] == '+')
        num = num.substr(1);
    if (den[0] == '+')
        den = den.substr(1);
    Integer d(den);
    if (d == 0)
        throw ParseError("zero denominator in '" + s + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

Float to_float(const Rational& q)
{
    return Float(q.get_num().get_str()) / Float(q.get_den().get_str());
}

// ------------------------------------------------------------------ //
//                       Squarefree decomposition                     //
// ------------------------------------------------------------------ //
Integer SquarefreeKernel::value() const
{
    Integer v = 1;
    for (const Integer& p : primes)
        v *= p;
    return v;
}

namespace {

const std::vector<unsigned long>& primes_up_to(unsigned long bound)
{
    // Sieve is cached per bound; the default bound is by far the common case.
    static thread_local unsigned long cached_bound = 0;
    static thread_local std::vector<unsigned long> cached;
    if (cached_bound != bound)
    {
        std::vector<bool> composite(bound + 1, false);
        cached.clear();
        for (unsigned long i = 2; i <= bound; ++i)
        {
            if (composite[i])
                continue;
            cached.push_back(i);
            for (unsigned long j = i * i; j <= bound; j += i)
                composite[j] = true;
        }
        cached_bound = bound;
    }
    return cached;
}

// Split a positive integer n into (square root of square part, squarefree
// primes); `cofactor` holds whatever is left after trial division.
void split_integer(Integer n, unsigned long bound, Integer& root, std::vector<Integer>& odd_primes,
                   Integer& cofactor)
{
    root = 1;
    if (n == 1)
    {
        cofactor = 1;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t()))
    {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        cofactor = 1;
        return;
    }
    for (unsigned long p : primes_up_to(bound))
    {
        if (n == 1)
            break;
        Integer pp(p);
        if (pp * pp > n)
        {
            // n itself is prime now
            break;
        }
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p))
        {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e / 2 > 0)
        {
            Integer f;
            mpz_ui_pow_ui(f.get_mpz_t(), p, e / 2);
            root *= f;
        }
        if (e % 2 == 1)
            odd_primes.push_back(pp);
        if (e > 0 && n > 1 && mpz_perfect_square_p(n.get_mpz_t()))
        {
            Integer s;
            mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
            root *= s;
            n = 1;
        }
    }
    cofactor = n;
}

}   // namespace

SquarefreePart squarefree_part(const Rational& q, unsigned long prime_bound)
{
    if (q <= 0)
        throw InvalidParameters("squarefree_part needs q > 0");
    // q = a/b = (a*b)/b^2
    Integer n = q.get_num() * q.get_den();
    Integer root, cofactor;
    std::vector<Integer> odd;
    split_integer(n, prime_bound, root, odd, cofactor);
    if (cofactor > 1)
    {
        Integer bound_sq = Integer(prime_bound) * Integer(prime_bound);
        if (cofactor > bound_sq)
            throw FactorizationIncomplete("cofactor " + cofactor.get_str() + " exceeds prime bound squared");
        odd.push_back(cofactor);    // no factor <= bound and <= bound^2, hence prime
    }
    std::sort(odd.begin(), odd.end());
    SquarefreePart out;
    out.kernel.primes = odd;
    out.root_cofactor = Rational(root, q.get_den());
    out.root_cofactor.canonicalize();
    return out;
}

// ------------------------------------------------------------------ //
//                               QuadExt                              //
// ------------------------------------------------------------------ //
QuadExt::QuadExt(const Rational& q)
{
    if (q != 0)
    {
        Rational c = q;
        c.canonicalize();
        terms_[SquarefreeKernel{}] = c;
    }
}

QuadExt QuadExt::root(const SquarefreeKernel& kernel, const Rational& c)
{
    QuadExt x;
    if (c != 0)
    {
        Rational cc = c;
        cc.canonicalize();
        x.terms_[kernel] = cc;
    }
    return x;
}

QuadExt QuadExt::sqrt(const Rational& q, unsigned long prime_bound)
{
    if (q < 0)
        throw InvalidParameters("sqrt of negative rational");
    if (q == 0)
        return QuadExt();
    SquarefreePart sp = squarefree_part(q, prime_bound);
    return root(sp.kernel, sp.root_cofactor);
}

bool QuadExt::is_rational() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational QuadExt::rational_part() const
{
    auto it = terms_.find(SquarefreeKernel{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void QuadExt::add_term(const SquarefreeKernel& k, const Rational& c)
{
    if (c == 0)
        return;
    auto it = terms_.find(k);
    if (it == terms_.end())
    {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

QuadExt QuadExt::conjugate(const Integer& p) const
{
    QuadExt x;
    for (const auto& [k, c] : terms_)
    {
        bool has = std::binary_search(k.primes.begin(), k.primes.end(), p);
        x.terms_.emplace(k, has ? Rational(-c) : c);
    }
    return x;
}

std::vector<Integer> QuadExt::primes() const
{
    std::set<Integer> ps;
    for (const auto& [k, c] : terms_)
        ps.insert(k.primes.begin(), k.primes.end());
    return std::vector<Integer>(ps.begin(), ps.end());
}

QuadExt QuadExt::inverse() const
{
    if (is_zero())
        throw std::domain_error("QuadExt: division by zero");
    if (is_rational())
        return QuadExt(Rational(1) / rational_part());
    // x * sigma_p(x) lies in the subfield without sqrt(p); recurse on it.
    Integer p = primes().back();
    QuadExt c = conjugate(p);
    QuadExt y = (*this) * c;
    return c * y.inverse();
}

Float QuadExt::to_float() const
{
    Float s = 0;
    for (const auto& [k, c] : terms_)
    {
        Float r = boost::multiprecision::sqrt(Float(k.value().get_str()));
        s += stresslab::to_float(c) * r;
    }
    return s;
}

std::string QuadExt::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_)
    {
        if (!first)
            s += " + ";
        first = false;
        s += stresslab::to_string(c);
        if (!k.is_one())
            s += "*sqrt(" + k.value().get_str() + ")";
    }
    return s;
}

QuadExt QuadExt::operator-() const
{
    QuadExt x;
    for (const auto& [k, c] : terms_)
        x.terms_.emplace(k, -c);
    return x;
}

QuadExt& QuadExt::operator+=(const QuadExt& other)
{
    for (const auto& [k, c] : other.terms_)
        add_term(k, c);
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& other)
{
    for (const auto& [k, c] : other.terms_)
        add_term(k, -c);
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& other)
{
    QuadExt out;
    for (const auto& [k1, c1] : terms_)
    {
        for (const auto& [k2, c2] : other.terms_)
        {
            // sqrt(k1) sqrt(k2) = (prod of shared primes) sqrt(symmetric difference)
            SquarefreeKernel k;
            Integer shared = 1;
            std::size_t i = 0, j = 0;
            while (i < k1.primes.size() || j < k2.primes.size())
            {
                if (j == k2.primes.size() || (i < k1.primes.size() && k1.primes[i] < k2.primes[j]))
                    k.primes.push_back(k1.primes[i++]);
                else if (i == k1.primes.size() || k2.primes[j] < k1.primes[i])
                    k.primes.push_back(k2.primes[j++]);
                else
                {
                    shared *= k1.primes[i];
                    ++i;
                    ++j;
                }
            }
            out.add_term(k, c1 * c2 * shared);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& other)
{
    if (other.is_rational())
    {
        if (other.is_zero())
            throw std::domain_error("QuadExt: division by zero");
        Rational q = other.rational_part();
        for (auto& [k, c] : terms_)
            c /= q;
        return *this;
    }
    return *this *= other.inverse();
}

QuadExt quad_mul(const QuadExt& a, const QuadExt& b)
{
    return a * b;
}

QuadMatrix to_quad(const RatMatrix& m)
{
    QuadMatrix q(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i)
        q.data[i] = QuadExt(m.data[i]);
    return q;
}

// ------------------------------------------------------------------ //
//                         Rational linear algebra                    //
// ------------------------------------------------------------------ //
RrefResult rat_rref(const RatMatrix& m)
{
    RrefResult out{m, {}};
    RatMatrix& R = out.R;
    std::size_t r = 0;
    for (std::size_t c = 0; c < R.cols && r < R.rows; ++c)
    {
        std::size_t p = r;
        while (p < R.rows && R(p, c) == 0)
            ++p;
        if (p == R.rows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < R.cols; ++j)
                std::swap(R(p, j), R(r, j));
        Rational inv = 1 / R(r, c);
        for (std::size_t j = c; j < R.cols; ++j)
            R(r, j) *= inv;
        for (std::size_t i = 0; i < R.rows; ++i)
        {
            if (i == r || R(i, c) == 0)
                continue;
            Rational f = R(i, c);
            for (std::size_t j = c; j < R.cols; ++j)
                if (R(r, j) != 0)
                    R(i, j) -= f * R(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::vector<RatVector> rat_nullspace(const RatMatrix& m)
{
    RrefResult rr = rat_rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t p : rr.pivots)
        is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols; ++f)
    {
        if (is_pivot[f])
            continue;
        RatVector v(m.cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.R(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Bareiss elimination in place; returns rank.  `div` must perform exact
// division.
template <typename T, typename IsZero, typename Div>
std::size_t bareiss_rank(Matrix<T>& A, IsZero is_zero, Div div, T* det_sign_out = nullptr)
{
    std::size_t rank = 0;
    T prev(1);
    int sign = 1;
    for (std::size_t c = 0; c < A.cols && rank < A.rows; ++c)
    {
        std::size_t p = rank;
        while (p < A.rows && is_zero(A(p, c)))
            ++p;
        if (p == A.rows)
            continue;
        if (p != rank)
        {
            for (std::size_t j = 0; j < A.cols; ++j)
                std::swap(A(p, j), A(rank, j));
            sign = -sign;
        }
        for (std::size_t i = rank + 1; i < A.rows; ++i)
        {
            for (std::size_t j = c + 1; j < A.cols; ++j)
                A(i, j) = div(A(rank, c) * A(i, j) - A(i, c) * A(rank, j), prev);
            A(i, c) = T(0);
        }
        prev = A(rank, c);
        ++rank;
    }
    if (det_sign_out)
        *det_sign_out = T(sign);
    return rank;
}

Matrix<Integer> clear_denominators(const RatMatrix& m)
{
    Matrix<Integer> A(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
    {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols; ++j)
            A(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return A;
}

}   // namespace

std::size_t rat_rank(const RatMatrix& m)
{
    Matrix<Integer> A = clear_denominators(m);
    return bareiss_rank<Integer>(
        A, [](const Integer& x) { return x == 0; },
        [](const Integer& a, const Integer& b) {
            Integer q;
            mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            return q;
        });
}

Rational rat_det(const RatMatrix& m)
{
    if (m.rows != m.cols)
        throw DimensionMismatch("determinant of non-square matrix");
    if (m.rows == 0)
        return 1;
    RatMatrix A = m;
    Rational det = 1;
    for (std::size_t c = 0; c < A.cols; ++c)
    {
        std::size_t p = c;
        while (p < A.rows && A(p, c) == 0)
            ++p;
        if (p == A.rows)
            return 0;
        if (p != c)
        {
            for (std::size_t j = 0; j < A.cols; ++j)
                std::swap(A(p, j), A(c, j));
            det = -det;
        }
        det *= A(c, c);
        for (std::size_t i = c + 1; i < A.rows; ++i)
        {
            if (A(i, c) == 0)
                continue;
            Rational f = A(i, c) / A(c, c);
            for (std::size_t j = c; j < A.cols; ++j)
                A(i, j) -= f * A(c, j);
        }
    }
    return det;
}

std::optional<RatMatrix> rat_inverse(const RatMatrix& m)
{
    if (m.rows != m.cols)
        throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = m.rows;
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult rr = rat_rref(aug);
    if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1)
        return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = rr.R(i, n + j);
    return inv;
}

std::optional<RatVector> rat_solve(const RatMatrix& m, const RatVector& b)
{
    if (b.size() != m.rows)
        throw DimensionMismatch("rat_solve rhs");
    RatMatrix aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i)
    {
        for (std::size_t j = 0; j < m.cols; ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols) = b[i];
    }
    RrefResult rr = rat_rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols)
        return std::nullopt;
    RatVector x(m.cols, 0);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        x[rr.pivots[i]] = rr.R(i, m.cols);
    return x;
}

std::size_t quad_rank(const QuadMatrix& m)
{
    QuadMatrix A = m;
    return bareiss_rank<QuadExt>(
        A, [](const QuadExt& x) { return x.is_zero(); },
        [](const QuadExt& a, const QuadExt& b) { return a / b; });
}

RatMatrix rows_matrix(const std::vector<RatVector>& vs, std::size_t n)
{
    RatMatrix m(vs.size(), n);
    for (std::size_t i = 0; i < vs.size(); ++i)
    {
        if (vs[i].size() != n)
            throw DimensionMismatch("rows_matrix");
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = vs[i][j];
    }
    return m;
}

std::size_t span_dim(const std::vector<RatVector>& vs, std::size_t n)
{
    if (vs.empty())
        return 0;
    return rat_rank(rows_matrix(vs, n));
}

bool span_contains(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t n)
{
    std::vector<RatVector> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    return span_dim(ab, n) == span_dim(a, n);
}

std::size_t gf2_rank(const std::vector<BitVector>& vectors)
{
    if (vectors.empty())
        return 0;
    std::size_t n = vectors[0].size();
    std::vector<BitVector> rows = vectors;
    for (const BitVector& v : rows)
        if (v.size() != n)
            throw DimensionMismatch("gf2_rank: unequal lengths");
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c)
    {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c])
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (i != rank && rows[i][c])
                for (std::size_t j = c; j < n; ++j)
                    rows[i][j] = rows[i][j] != rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}   // namespace stresslab
