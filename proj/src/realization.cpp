/**
 * PL realizations and the constructions derived from them.
 */
#include "stresslab/realization.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace stresslab {

namespace {

Rational factorial(int k)
{
    Rational r = 1;
    for (int i = 2; i <= k; ++i)
        r *= i;
    return r;
}

RatVector sub(const RatVector& a, const RatVector& b)
{
    RatVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] - b[i];
    return c;
}

Rational dot(const RatVector& a, const RatVector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::vector<RatVector> face_rows(const std::vector<RatVector>& coords, const Face& f)
{
    std::vector<RatVector> rows;
    for (int v : f)
        rows.push_back(coords.at(v));
    return rows;
}

bool next_combination(std::vector<int>& c, int n)
{
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i)
        if (c[i] < n - k + i)
        {
            ++c[i];
            for (int j = i + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    return false;
}

Realization draw(const SimplicialComplex& K, int d, std::uint64_t seed, long bound, int max_retries)
{
    if (bound <= 0)
        throw InvalidParameters("coordinate bound must be positive");
    if (d < 0)
        throw InvalidParameters("cannot realize a complex of negative dimension");
    if (K.dim() > d)
        throw InvalidParameters("complex dimension exceeds the ambient dimension");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-bound, bound);
    for (int attempt = 0; attempt < max_retries; ++attempt)
    {
        std::vector<RatVector> coords(K.num_vertices(), RatVector(d + 1));
        for (auto& c : coords)
        {
            for (int i = 0; i < d; ++i)
                c[i] = coord(rng);
            c[d] = 1;
        }
        Realization nu{K, d, coords};
        if (in_general_position(nu) && !degenerate_face(K, coords))
            return nu;
    }
    throw RetriesExhausted("no general-position draw within " + std::to_string(max_retries) + " attempts");
}

}   // namespace

std::optional<Face> degenerate_face(const SimplicialComplex& K, const std::vector<RatVector>& coords)
{
    int D = coords.empty() ? 0 : static_cast<int>(coords[0].size());
    for (int k = 0; k <= K.dim(); ++k)
        for (const Face& f : K.faces(k))
        {
            if (static_cast<int>(f.size()) > D
                || rat_rank(rows_matrix(face_rows(coords, f), D)) != f.size())
                return f;
        }
    return std::nullopt;
}

Realization make_realization(const SimplicialComplex& K, int d, std::vector<RatVector> coords)
{
    if (static_cast<int>(coords.size()) != K.num_vertices())
        throw DimensionMismatch("one coordinate vector per vertex required");
    if (K.dim() > d)
        throw DimensionMismatch("complex dimension exceeds the ambient dimension");
    for (auto& c : coords)
    {
        if (static_cast<int>(c.size()) != d + 1)
            throw DimensionMismatch("coordinate vectors must have length d+1");
        for (auto& x : c)
            x.canonicalize();
        if (c[d] == 0)
            throw InvalidParameters("vertex with zero last coordinate");
    }
    if (auto bad = degenerate_face(K, coords))
    {
        std::string s;
        for (const auto& l : K.face_labels(*bad))
            s += (s.empty() ? "" : ",") + l;
        throw InvalidParameters("face {" + s + "} has a vanishing multivector");
    }
    return Realization{K, d, std::move(coords)};
}

std::optional<Face> general_position_witness(const Realization& nu, std::size_t sample, std::uint64_t seed)
{
    int n = nu.complex.num_vertices();
    int D = nu.ambient();
    int k = std::min(n, D);
    if (k == 0)
        return std::nullopt;
    auto dependent = [&](const Face& s) {
        RatMatrix m = rows_matrix(face_rows(nu.coords, s), D);
        if (static_cast<int>(s.size()) == D)
            return rat_det(m) == 0;
        return rat_rank(m) != s.size();
    };
    if (sample > 0)
    {
        std::mt19937_64 rng(seed);
        std::vector<int> ids(n);
        std::iota(ids.begin(), ids.end(), 0);
        for (std::size_t t = 0; t < sample; ++t)
        {
            std::shuffle(ids.begin(), ids.end(), rng);
            Face s(ids.begin(), ids.begin() + k);
            std::sort(s.begin(), s.end());
            if (dependent(s))
                return s;
        }
        return std::nullopt;
    }
    Face s(k);
    std::iota(s.begin(), s.end(), 0);
    do
    {
        if (dependent(s))
            return s;
    } while (next_combination(s, n));
    return std::nullopt;
}

bool in_general_position(const Realization& nu, std::size_t sample, std::uint64_t seed)
{
    return !general_position_witness(nu, sample, seed).has_value();
}

Realization realize_random(const SimplicialComplex& K, std::uint64_t seed, long bound, int max_retries)
{
    return draw(K, K.dim(), seed, bound, max_retries);
}

Realization realize_random_in(const SimplicialComplex& K, int d, std::uint64_t seed, long bound, int max_retries)
{
    return draw(K, d, seed, bound, max_retries);
}

Realization scaled(const Realization& nu, const std::vector<Rational>& lambda)
{
    if (lambda.size() != nu.coords.size())
        throw DimensionMismatch("one scale per vertex required");
    std::vector<RatVector> coords = nu.coords;
    for (std::size_t v = 0; v < coords.size(); ++v)
    {
        if (lambda[v] == 0)
            throw InvalidParameters("scale factors must be nonzero");
        for (auto& x : coords[v])
            x *= lambda[v];
    }
    return Realization{nu.complex, nu.d, coords};
}

MultiVector face_multivector(const Realization& nu, const Face& f)
{
    if (!nu.complex.contains(f))
        throw FaceNotFound("face is not in the complex");
    return wedge_vectors(nu.ambient(), face_rows(nu.coords, f));
}

RatVector induced_point(const Realization& nu, int v)
{
    const RatVector& c = nu.coords.at(v);
    RatVector p(c.begin(), c.end() - 1);
    for (auto& x : p)
        x /= c.back();
    return p;
}

std::vector<RatVector> induced_points(const Realization& nu)
{
    std::vector<RatVector> out;
    for (int v = 0; v < nu.complex.num_vertices(); ++v)
        out.push_back(induced_point(nu, v));
    return out;
}

RatMatrix facet_matrix(const Realization& nu, const Face& f)
{
    RatMatrix W(f.size(), nu.d + 1);
    for (std::size_t i = 0; i < f.size(); ++i)
    {
        RatVector p = induced_point(nu, f[i]);
        for (int j = 0; j < nu.d; ++j)
            W(i, j) = p[j];
        W(i, nu.d) = 1;
    }
    return W;
}

RatVector cramer_gradient(const Realization& nu, const Face& f, int v)
{
    if (static_cast<int>(f.size()) != nu.d + 1)
        throw DimensionMismatch("cramer_gradient needs a d-face");
    RatVector m(nu.d, Rational(0));
    auto it = std::find(f.begin(), f.end(), v);
    if (it == f.end())
        return m;
    std::size_t k = static_cast<std::size_t>(it - f.begin());
    RatMatrix W = facet_matrix(nu, f);
    Rational det = rat_det(W);
    if (det == 0)
        throw SingularFacetMatrix("facet matrix is singular");
    for (int j = 0; j < nu.d; ++j)
    {
        RatMatrix Wj = W;
        for (std::size_t i = 0; i < W.rows; ++i)
            Wj(i, j) = (i == k) ? 1 : 0;
        m[j] = rat_det(Wj) / det;
    }
    return m;
}

RatVector ridge_conormal(const Realization& nu, const Face& g, int opposite)
{
    int d = nu.d;
    if (static_cast<int>(g.size()) != d)
        throw DimensionMismatch("ridge_conormal needs a (d-1)-face");
    RatVector p0 = induced_point(nu, g[0]);
    std::vector<RatVector> edges;
    for (std::size_t i = 1; i < g.size(); ++i)
        edges.push_back(sub(induced_point(nu, g[i]), p0));
    RatVector n(d);
    for (int j = 0; j < d; ++j)
    {
        RatMatrix M(d, d);
        for (int i = 0; i < d - 1; ++i)
            for (int c = 0; c < d; ++c)
                M(i, c) = edges[i][c];
        M(d - 1, j) = 1;
        n[j] = rat_det(M);
    }
    Rational s = dot(n, sub(induced_point(nu, opposite), p0));
    if (s == 0)
        throw SingularFacetMatrix("opposite vertex lies on the ridge hyperplane");
    if (s > 0)
        for (auto& x : n)
            x = -x;
    return n;
}

Rational face_volume_squared(const Realization& nu, const Face& g)
{
    if (g.empty())
        throw InvalidParameters("volume of the empty face");
    RatVector p0 = induced_point(nu, g[0]);
    std::vector<RatVector> edges;
    for (std::size_t i = 1; i < g.size(); ++i)
        edges.push_back(sub(induced_point(nu, g[i]), p0));
    std::size_t k = edges.size();
    RatMatrix G(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            G(i, j) = dot(edges[i], edges[j]);
    Rational f = factorial(static_cast<int>(k));
    return (k ? rat_det(G) : Rational(1)) / (f * f);
}

std::pair<Face, Face> ridge_cofacets(const SimplicialComplex& K, const Face& g)
{
    std::vector<Face> c = K.cofacets(g);
    if (c.size() != 2)
        throw PreconditionViolated("ridge does not have exactly two cofacets");
    return {c[0], c[1]};
}

Rational zeta_squared(const Realization& nu, const Face& g, int v)
{
    auto [f1, f2] = ridge_cofacets(nu.complex, g);
    RatVector dm = sub(cramer_gradient(nu, f1, v), cramer_gradient(nu, f2, v));
    return dot(dm, dm) / face_volume_squared(nu, g);
}

GenericityReport q_genericity_check(const Realization& nu, unsigned long prime_bound)
{
    GenericityReport rep;
    rep.general_position = in_general_position(nu);
    rep.all_nonzero = true;
    int d = nu.d;
    for (const Face& g : nu.complex.faces(d - 1))
    {
        auto [f1, f2] = ridge_cofacets(nu.complex, g);
        for (int v : face_union(f1, f2))
        {
            Rational z = zeta_squared(nu, g, v);
            rep.zeta_squares[{g, v}] = z;
            if (z == 0)
            {
                rep.all_nonzero = false;
                rep.kernels[{g, v}] = SquarefreeKernel{};
            }
            else
                rep.kernels[{g, v}] = squarefree_part(z, prime_bound).kernel;
        }
    }
    std::set<Integer> primes;
    for (const auto& [key, k] : rep.kernels)
        primes.insert(k.primes.begin(), k.primes.end());
    std::vector<Integer> plist(primes.begin(), primes.end());
    std::vector<BitVector> rows;
    for (const auto& [key, k] : rep.kernels)
    {
        BitVector b(plist.size(), false);
        for (const auto& p : k.primes)
            b[std::lower_bound(plist.begin(), plist.end(), p) - plist.begin()] = true;
        rows.push_back(b);
    }
    rep.kernel_gf2_rank = rows.empty() ? 0 : gf2_rank(rows);
    rep.verdict = rep.is_rational && rep.general_position && rep.all_nonzero
                  && rep.kernel_gf2_rank == rep.kernels.size();
    return rep;
}

// ------------------------------------------------------------------ //
//                         Distinguished bases                        //
// ------------------------------------------------------------------ //

RatVector DistinguishedBasis::apply(const RatVector& x) const
{
    if (static_cast<int>(x.size()) != ambient)
        throw DimensionMismatch("T_B: wrong ambient dimension");
    std::size_t m = vectors.size();
    RatVector xp(m);
    for (std::size_t i = 0; i < m; ++i)
        xp[i] = x[pivot_rows[i]];
    RatVector c = pivot_inverse * xp;
    RatVector back(ambient, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (int j = 0; j < ambient; ++j)
            back[j] += c[i] * vectors[i][j];
    if (back != x)
        throw DimensionMismatch("T_B: vector is not in the span of the basis");
    return c;
}

MultiVector DistinguishedBasis::apply(const MultiVector& x) const
{
    if (x.ambient_dim() != ambient)
        throw DimensionMismatch("T_B: wrong ambient dimension");
    std::size_t m = vectors.size();
    RatMatrix P(m, ambient);
    for (std::size_t i = 0; i < m; ++i)
        P(i, pivot_rows[i]) = 1;
    MultiVector out = induced_map(pivot_inverse, induced_map(P, x));
    RatMatrix B(ambient, m);
    for (std::size_t i = 0; i < m; ++i)
        for (int j = 0; j < ambient; ++j)
            B(j, i) = vectors[i][j];
    if (induced_map(B, out) != x)
        throw DimensionMismatch("T_B: multivector is not in the exterior algebra of the span");
    return out;
}

DistinguishedBasis make_basis(const Realization& nu, const Face& f, std::vector<RatVector> vectors)
{
    if (!nu.complex.contains(f))
        throw FaceNotFound("face is not in the complex");
    int D = nu.ambient();
    std::size_t m = static_cast<std::size_t>(D) - f.size();
    if (vectors.size() != m)
        throw DimensionMismatch("basis of V_F has the wrong size");
    for (const auto& b : vectors)
    {
        if (static_cast<int>(b.size()) != D)
            throw DimensionMismatch("basis vector of the wrong length");
        for (int v : f)
            if (dot(b, nu.coords[v]) != 0)
                throw InvalidParameters("basis vector not orthogonal to nu(F)");
    }
    DistinguishedBasis B;
    B.base = f;
    B.ambient = D;
    B.vectors = std::move(vectors);
    RrefResult rr = rat_rref(rows_matrix(B.vectors, D));
    if (rr.pivots.size() != m)
        throw InvalidParameters("basis vectors are dependent");
    B.pivot_rows = rr.pivots;
    RatMatrix BP(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            BP(i, j) = B.vectors[j][B.pivot_rows[i]];
    B.pivot_inverse = m ? *rat_inverse(BP) : RatMatrix(0, 0);
    return B;
}

bool is_distinguished(const Realization& nu, const DistinguishedBasis& B)
{
    const SimplicialComplex& K = nu.complex;
    for (int k = static_cast<int>(B.base.size()) - 1; k < K.dim(); ++k)
        for (const Face& gp : K.faces(k))
        {
            if (!face_contains(gp, B.base))
                continue;
            for (const Face& g : K.cofacets(gp))
            {
                MultiVector m = m_vector(nu.coords, gp, g);
                if (m.is_zero())
                    return false;
                RatVector t = B.apply(m.as_vector());
                if (t.back() == 0)
                    return false;
            }
        }
    return true;
}

LinkRealization link_realization_with(const Realization& nu, const Face& f, const DistinguishedBasis& B)
{
    if (!nu.complex.contains(f))
        throw FaceNotFound("face is not in the complex");
    if (B.base != f || !is_distinguished(nu, B))
        throw BasisNotDistinguished("basis is not distinguished for this face");
    LinkRealization out;
    out.basis = B;
    SimplicialComplex L = link(nu.complex, f);
    std::vector<RatVector> coords;
    for (int u = 0; u < L.num_vertices(); ++u)
    {
        int v = nu.complex.vertex_id(L.labels()[u]);
        out.to_parent.push_back(v);
        coords.push_back(B.apply(m_vector(nu.coords, f, face_with(f, v)).as_vector()));
    }
    out.realization = make_realization(L, B.rank() - 1, coords);
    return out;
}

LinkRealization link_realization(const Realization& nu, const Face& f, std::uint64_t seed, int max_retries)
{
    if (!nu.complex.contains(f))
        throw FaceNotFound("face is not in the complex");
    int D = nu.ambient();
    std::vector<RatVector> null = rat_nullspace(rows_matrix(face_rows(nu.coords, f), D));
    std::size_t m = null.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int attempt = 0; attempt < max_retries; ++attempt)
    {
        RatMatrix M(m, m);
        for (auto& x : M.data)
            x = c(rng);
        if (m && rat_det(M) == 0)
            continue;
        std::vector<RatVector> vectors(m, RatVector(D, Rational(0)));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (int t = 0; t < D; ++t)
                    vectors[i][t] += M(i, j) * null[j][t];
        DistinguishedBasis B = make_basis(nu, f, vectors);
        if (is_distinguished(nu, B))
            return link_realization_with(nu, f, B);
    }
    throw RetriesExhausted("no distinguished basis within " + std::to_string(max_retries) + " attempts");
}

// ------------------------------------------------------------------ //
//                           Cone projection                          //
// ------------------------------------------------------------------ //

namespace {

ConeProjection project_with(const Realization& cone_nu, int apex, const RatVector& ell)
{
    const SimplicialComplex& K = cone_nu.complex;
    int D = cone_nu.ambient();
    const RatVector& a = cone_nu.coords[apex];
    ConeProjection out;
    out.apex = apex;
    out.ell = ell;
    Rational la = dot(ell, a);
    if (la == 0)
        throw DegenerateProjection("hyperplane passes through the apex");
    out.dropped = D - 1;
    for (int i = 0; i < D - 1; ++i)
        if (ell[i] != 0)
        {
            out.dropped = i;
            break;
        }
    out.map = RatMatrix(D - 1, D);
    for (int r = 0, i = 0; i < D; ++i)
    {
        if (i == out.dropped)
            continue;
        for (int j = 0; j < D; ++j)
            out.map(r, j) = Rational(i == j ? 1 : 0) - a[i] * ell[j] / la;
        ++r;
    }
    SimplicialComplex base = link(K, {apex});
    std::vector<RatVector> coords;
    for (int u = 0; u < base.num_vertices(); ++u)
    {
        int v = K.vertex_id(base.labels()[u]);
        out.to_cone.push_back(v);
        RatVector y = out.map * cone_nu.coords[v];
        if (y.back() == 0)
            throw DegenerateProjection("projected vertex has zero last coordinate");
        coords.push_back(y);
    }
    if (degenerate_face(base, coords))
        throw DegenerateProjection("a projected face multivector vanishes");
    out.base = make_realization(base, cone_nu.d - 1, coords);
    return out;
}

}   // namespace

ConeProjection cone_and_project(const Realization& cone_nu, const std::string& apex,
                                const std::optional<RatVector>& ell)
{
    const SimplicialComplex& K = cone_nu.complex;
    int a = K.vertex_id(apex);
    for (const Face& F : K.facets())
        if (!face_contains(F, {a}))
            throw InvalidParameters("complex is not a cone over the given apex");
    int D = cone_nu.ambient();
    if (D < 2)
        throw InvalidParameters("cone realization must live in R^1 or higher");
    if (ell)
    {
        if (static_cast<int>(ell->size()) != D)
            throw DimensionMismatch("functional of the wrong length");
        return project_with(cone_nu, a, *ell);
    }
    // coordinate functionals first, then random ones
    const RatVector& av = cone_nu.coords[a];
    std::vector<RatVector> candidates;
    for (int j = 0; j < D; ++j)
        if (av[j] != 0)
        {
            RatVector e(D, Rational(0));
            e[j] = 1;
            candidates.push_back(e);
        }
    std::mt19937_64 rng(D);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int t = 0; t < 50; ++t)
    {
        RatVector e(D);
        for (auto& x : e)
            x = c(rng);
        candidates.push_back(e);
    }
    for (const RatVector& e : candidates)
    {
        if (dot(e, av) == 0)
            continue;
        try
        {
            return project_with(cone_nu, a, e);
        }
        catch (const DegenerateProjection&)
        {
        }
    }
    throw DegenerateProjection("no projection hyperplane keeps the faces nondegenerate");
}

}   // namespace stresslab
