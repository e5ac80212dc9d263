#include "stresslab/exterior.hpp"

#include <algorithm>
#include <bit>

namespace stresslab {

MultiVector::MultiVector(int ambient_dim) : dim_(ambient_dim)
{
    if (ambient_dim < 0 || ambient_dim > 30)
        throw DimensionMismatch("ambient dimension out of range");
}

MultiVector MultiVector::scalar(int ambient_dim, const Rational& c)
{
    MultiVector m(ambient_dim);
    m.add(0, c);
    return m;
}

MultiVector MultiVector::vector(const RatVector& v)
{
    MultiVector m(static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        m.add(1u << i, v[i]);
    return m;
}

MultiVector MultiVector::blade(int ambient_dim, const std::vector<int>& indices, const Rational& c)
{
    MultiVector m = scalar(ambient_dim, c);
    for (int i : indices)
    {
        if (i < 1 || i > ambient_dim)
            throw DimensionMismatch("blade index out of range");
        RatVector e(ambient_dim, 0);
        e[i - 1] = 1;
        m = wedge(m, vector(e));
    }
    return m;
}

MultiVector MultiVector::xi(int ambient_dim)
{
    MultiVector m(ambient_dim);
    m.add((1u << ambient_dim) - 1, 1);
    return m;
}

Rational MultiVector::coeff(Blade b) const
{
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiVector::coeff(const std::vector<int>& sorted_indices) const
{
    Blade b = 0;
    for (int i : sorted_indices)
        b |= 1u << (i - 1);
    return coeff(b);
}

std::optional<int> MultiVector::grade() const
{
    if (terms_.empty())
        return -1;
    int g = std::popcount(terms_.begin()->first);
    for (const auto& [b, c] : terms_)
        if (std::popcount(b) != g)
            return std::nullopt;
    return g;
}

MultiVector MultiVector::grade_part(int r) const
{
    MultiVector m(dim_);
    for (const auto& [b, c] : terms_)
        if (std::popcount(b) == r)
            m.terms_.emplace(b, c);
    return m;
}

RatVector MultiVector::as_vector() const
{
    RatVector v(dim_, 0);
    for (const auto& [b, c] : terms_)
    {
        if (std::popcount(b) != 1)
            throw NotHomogeneous("as_vector needs a 1-vector");
        v[std::countr_zero(b)] = c;
    }
    return v;
}

void MultiVector::add(Blade b, const Rational& c)
{
    if (c == 0)
        return;
    auto it = terms_.find(b);
    if (it == terms_.end())
    {
        terms_.emplace(b, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

MultiVector MultiVector::operator-() const
{
    MultiVector m(dim_);
    for (const auto& [b, c] : terms_)
        m.terms_.emplace(b, -c);
    return m;
}

MultiVector& MultiVector::operator+=(const MultiVector& other)
{
    if (other.dim_ != dim_)
        throw DimensionMismatch("multivector sum");
    for (const auto& [b, c] : other.terms_)
        add(b, c);
    return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& other)
{
    if (other.dim_ != dim_)
        throw DimensionMismatch("multivector difference");
    for (const auto& [b, c] : other.terms_)
        add(b, -c);
    return *this;
}

MultiVector& MultiVector::operator*=(const Rational& c)
{
    if (c == 0)
    {
        terms_.clear();
        return *this;
    }
    for (auto& [b, x] : terms_)
        x *= c;
    return *this;
}

int blade_wedge_sign(MultiVector::Blade a, MultiVector::Blade b)
{
    if (a & b)
        return 0;
    int swaps = 0;
    for (MultiVector::Blade rest = b; rest; rest &= rest - 1)
    {
        int j = std::countr_zero(rest);
        swaps += std::popcount(a >> (j + 1));
    }
    return swaps % 2 ? -1 : 1;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("wedge of multivectors in different ambient spaces");
    MultiVector out(a.ambient_dim());
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms())
        {
            int s = blade_wedge_sign(ba, bb);
            if (s != 0)
                out.add(ba | bb, s > 0 ? Rational(ca * cb) : Rational(-ca * cb));
        }
    return out;
}

MultiVector wedge_vectors(int ambient_dim, const std::vector<RatVector>& vs)
{
    MultiVector m = MultiVector::scalar(ambient_dim, 1);
    for (const RatVector& v : vs)
    {
        if (static_cast<int>(v.size()) != ambient_dim)
            throw DimensionMismatch("wedge_vectors");
        m = wedge(m, MultiVector::vector(v));
    }
    return m;
}

MultiVector induced_map(const RatMatrix& M, const MultiVector& a)
{
    if (static_cast<int>(M.cols) != a.ambient_dim())
        throw DimensionMismatch("induced_map");
    int out_dim = static_cast<int>(M.rows);
    std::vector<MultiVector> images;
    for (std::size_t j = 0; j < M.cols; ++j)
        images.push_back(MultiVector::vector(M.column(j)));
    MultiVector out(out_dim);
    for (const auto& [b, c] : a.terms())
    {
        MultiVector img = MultiVector::scalar(out_dim, c);
        for (std::size_t j = 0; j < M.cols && !img.is_zero(); ++j)
            if (b & (1u << j))
                img = wedge(img, images[j]);
        out += img;
    }
    return out;
}

Rational inner(const MultiVector& a, const MultiVector& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("inner product");
    Rational s = 0;
    for (const auto& [ba, ca] : a.terms())
    {
        auto it = b.terms().find(ba);
        if (it != b.terms().end())
            s += ca * it->second;
    }
    return s;
}

MultiVector hodge_star(const MultiVector& a)
{
    if (!a.grade())
        throw NotHomogeneous("hodge_star of a mixed-grade multivector");
    int D = a.ambient_dim();
    MultiVector::Blade full = (1u << D) - 1;
    MultiVector out(D);
    for (const auto& [b, c] : a.terms())
    {
        MultiVector::Blade comp = full & ~b;
        int s = blade_wedge_sign(b, comp);
        out.add(comp, s > 0 ? c : Rational(-c));
    }
    return out;
}

MultiVector hodge_star_inv(const MultiVector& a)
{
    std::optional<int> g = a.grade();
    if (!g)
        throw NotHomogeneous("hodge_star_inv of a mixed-grade multivector");
    if (*g < 0)
        return a;
    int D = a.ambient_dim();
    // a has grade N+1-r; ★★ = (-1)^{r(N+1-r)} on r-vectors
    int r = D - *g;
    MultiVector s = hodge_star(a);
    return (r * (D - r)) % 2 ? -s : s;
}

MultiVector gc_meet(const MultiVector& a, const MultiVector& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("gc_meet");
    if (!a.grade() || !b.grade())
        throw NotHomogeneous("gc_meet needs homogeneous arguments");
    return hodge_star_inv(wedge(hodge_star(a), hodge_star(b)));
}

int sgn(const std::vector<int>& uprime, const std::vector<int>& u)
{
    std::vector<int> pos;
    std::vector<bool> used(u.size(), false);
    for (int x : uprime)
    {
        auto it = std::find(u.begin(), u.end(), x);
        if (it == u.end())
            throw NotSubset("element of U' not in U");
        std::size_t p = static_cast<std::size_t>(it - u.begin());
        if (used[p])
            throw NotSubset("U' repeats an element");
        used[p] = true;
        pos.push_back(static_cast<int>(p));
    }
    for (std::size_t p = 0; p < u.size(); ++p)
        if (!used[p])
            pos.push_back(static_cast<int>(p));
    int inversions = 0;
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i] > pos[j])
                ++inversions;
    return inversions % 2 ? -1 : 1;
}

MultiVector m_vector(const std::vector<RatVector>& coords, const std::vector<int>& fprime,
                     const std::vector<int>& f)
{
    for (int v : fprime)
        if (std::find(f.begin(), f.end(), v) == f.end())
            throw FaceNotNested("F' is not a subset of F");
    if (coords.empty())
        throw DimensionMismatch("m_vector without coordinates");
    int D = static_cast<int>(coords[0].size());
    std::vector<RatVector> vf, vfp;
    for (int v : f)
        vf.push_back(coords.at(v));
    for (int v : fprime)
        vfp.push_back(coords.at(v));
    return gc_meet(wedge_vectors(D, vf), hodge_star(wedge_vectors(D, vfp)));
}

}   // namespace stresslab
