/**
 * Liftings, reciprocals and the ζ scalars.
 */
#include "stresslab/maxwell.hpp"

#include <algorithm>
#include <deque>
#include "stresslab/parallel.hpp"

namespace stresslab {

namespace {

RatVector vsub(const RatVector& a, const RatVector& b)
{
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

Rational vdot(const RatVector& a, const RatVector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational factorial(int k)
{
    Rational f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

Rational lambda_product(const Realization& nu, const Face& g)
{
    Rational p = 1;
    for (int u : g)
        p *= nu.coords[u][nu.d];
    return p;
}

int apex(const Face& facet, const Face& ridge)
{
    return face_difference(facet, ridge).at(0);
}

/** (F, F', ñ) with ñ pointing away from the apex of F. */
struct RidgeData
{
    std::size_t f1, f2;
    RatVector n;
};

RidgeData ridge_data(const Realization& nu, const Face& g)
{
    const SimplicialComplex& K = nu.complex;
    auto [a, b] = ridge_cofacets(K, g);
    return {static_cast<std::size_t>(K.index(a)), static_cast<std::size_t>(K.index(b)),
            ridge_conormal(nu, g, apex(a, g))};
}

/** ρ(F) (d-1)! ⟨m_{F'} - m_F, ñ⟩ / ⟨ñ,ñ⟩. */
Rational normalized_jump(const Realization& nu, const PLOrientation& rho, const RidgeData& r,
                         const RatVector& m1, const RatVector& m2)
{
    return rho.rho[r.f1] * factorial(nu.d - 1) * vdot(vsub(m2, m1), r.n) / vdot(r.n, r.n);
}

RatVector affine_piece(const Realization& nu, const Face& f, const RatVector& heights)
{
    RatMatrix W = facet_matrix(nu, f);
    if (rat_det(W) == 0)
        throw SingularFacetMatrix("facet matrix is singular");
    RatVector h;
    for (int v : f)
        h.push_back(heights[v]);
    return *rat_solve(W, h);
}

}   // namespace

int PLOrientation::at(const SimplicialComplex& K, const Face& facet) const
{
    int i = K.index(facet);
    if (i < 0 || static_cast<int>(facet.size()) != K.dim() + 1)
        throw FaceNotFound("not a facet");
    return rho[i];
}

Face default_base(const SimplicialComplex& K)
{
    const auto& F = K.faces(K.dim());
    return *std::min_element(F.begin(), F.end());
}

PLOrientation pl_orientation(const Realization& nu, const std::optional<Face>& base)
{
    const SimplicialComplex& K = nu.complex;
    int d = nu.d;
    if (K.dim() != d)
        throw DimensionMismatch("complex dimension differs from the realization dimension");
    PLOrientation out;
    out.base = base ? *base : default_base(K);
    int b = K.index(out.base);
    if (b < 0 || static_cast<int>(out.base.size()) != d + 1)
        throw FaceNotFound("base is not a facet");
    const auto& facets = K.faces(d);
    out.rho.assign(facets.size(), 0);
    out.rho[b] = 1;
    std::deque<std::size_t> queue{static_cast<std::size_t>(b)};
    while (!queue.empty())
    {
        std::size_t f = queue.front();
        queue.pop_front();
        for (int v : facets[f])
        {
            Face g = face_without(facets[f], v);
            auto [a, c] = ridge_cofacets(K, g);
            const Face& other = a == facets[f] ? c : a;
            std::size_t o = K.index(other);
            RatVector n = ridge_conormal(nu, g, v);
            Rational s = vdot(n, vsub(induced_point(nu, apex(other, g)), induced_point(nu, g[0])));
            if (s == 0)
                throw SingularFacetMatrix("apex lies on the ridge hyperplane");
            int want = s > 0 ? out.rho[f] : -out.rho[f];
            if (out.rho[o] == 0)
            {
                out.rho[o] = want;
                queue.push_back(o);
            }
            else if (out.rho[o] != want)
                throw NonOrientable("inconsistent PL orientation around a cycle of facets");
        }
    }
    for (int r : out.rho)
        if (r == 0)
            throw PreconditionViolated("dual graph is not connected");
    return out;
}

Lifting lifting_from_heights(const Realization& nu, const Face& base, const RatVector& heights)
{
    const SimplicialComplex& K = nu.complex;
    if (heights.size() != static_cast<std::size_t>(K.num_vertices()))
        throw DimensionMismatch("one height per vertex");
    for (int v : base)
        if (heights[v] != 0)
            throw InvalidParameters("heights on the base facet must vanish");
    Lifting mu;
    mu.base = base;
    mu.heights = heights;
    for (const Face& f : K.faces(nu.d))
    {
        RatVector x = affine_piece(nu, f, heights);
        mu.c.push_back(x.back());
        x.pop_back();
        mu.m.push_back(std::move(x));
    }
    return mu;
}

Lifting basis_lifting(const Realization& nu, const Face& base, int v)
{
    const SimplicialComplex& K = nu.complex;
    if (face_contains(base, {v}))
        throw InvalidParameters("basis liftings are indexed by vertices off the base");
    if (v < 0 || v >= static_cast<int>(K.num_vertices()))
        throw InvalidParameters("vertex out of range");
    Lifting mu;
    mu.base = base;
    mu.heights.assign(K.num_vertices(), Rational(0));
    mu.heights[v] = 1;
    for (const Face& f : K.faces(nu.d))
    {
        RatVector m = cramer_gradient(nu, f, v);
        RatVector p = induced_point(nu, f[0]);
        mu.c.push_back(mu.heights[f[0]] - vdot(m, p));
        mu.m.push_back(std::move(m));
    }
    return mu;
}

Lifting operator+(const Lifting& a, const Lifting& b)
{
    if (a.base != b.base || a.heights.size() != b.heights.size())
        throw DimensionMismatch("liftings over different bases");
    Lifting out = a;
    for (std::size_t i = 0; i < a.heights.size(); ++i)
        out.heights[i] += b.heights[i];
    for (std::size_t f = 0; f < a.m.size(); ++f)
    {
        for (std::size_t j = 0; j < a.m[f].size(); ++j)
            out.m[f][j] += b.m[f][j];
        out.c[f] += b.c[f];
    }
    return out;
}

Lifting operator*(const Rational& s, const Lifting& a)
{
    Lifting out = a;
    for (auto& h : out.heights)
        h *= s;
    for (auto& m : out.m)
        for (auto& x : m)
            x *= s;
    for (auto& c : out.c)
        c *= s;
    return out;
}

bool lifting_consistent(const Realization& nu, const Lifting& mu)
{
    const SimplicialComplex& K = nu.complex;
    for (int v : mu.base)
        if (mu.heights[v] != 0)
            return false;
    for (const Face& g : K.faces(nu.d - 1))
    {
        auto [a, b] = ridge_cofacets(K, g);
        std::size_t i = K.index(a), j = K.index(b);
        for (int v : g)
        {
            RatVector p = induced_point(nu, v);
            if (vdot(mu.m[i], p) + mu.c[i] != vdot(mu.m[j], p) + mu.c[j])
                return false;
        }
    }
    return true;
}

StressVector lifting_to_stress(const Realization& nu, const PLOrientation& rho, const Lifting& mu)
{
    const auto& ridges = nu.complex.faces(nu.d - 1);
    StressVector a{1, nu.d, RatVector(ridges.size())};
    parallel_for(ridges.size(), [&](std::size_t i) {
        RidgeData r = ridge_data(nu, ridges[i]);
        a.values[i] = normalized_jump(nu, rho, r, mu.m[r.f1], mu.m[r.f2]) / lambda_product(nu, ridges[i]);
    });
    return a;
}

std::vector<Float> lifting_to_stress_float(const Realization& nu, const PLOrientation& rho, const Lifting& mu)
{
    const auto& ridges = nu.complex.faces(nu.d - 1);
    std::vector<Float> out;
    for (const Face& g : ridges)
    {
        RidgeData r = ridge_data(nu, g);
        Float len = boost::multiprecision::sqrt(to_float(vdot(r.n, r.n)));
        Float jump = 0;
        for (int j = 0; j < nu.d; ++j)
            jump += to_float(mu.m[r.f2][j] - mu.m[r.f1][j]) * (to_float(r.n[j]) / len);
        Float vol = boost::multiprecision::sqrt(to_float(face_volume_squared(nu, g)));
        out.push_back(rho.rho[r.f1] * jump / vol / to_float(lambda_product(nu, g)));
    }
    return out;
}

Lifting stress_to_lifting(const Realization& nu, const PLOrientation& rho, const StressVector& a)
{
    const SimplicialComplex& K = nu.complex;
    std::vector<int> free;
    for (int v = 0; v < static_cast<int>(K.num_vertices()); ++v)
        if (!face_contains(rho.base, {v}))
            free.push_back(v);
    std::vector<StressVector> cols;
    for (int v : free)
        cols.push_back(lifting_to_stress(nu, rho, basis_lifting(nu, rho.base, v)));
    RatMatrix M(a.values.size(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j)
        for (std::size_t i = 0; i < a.values.size(); ++i)
            M(i, j) = cols[j].values[i];
    auto x = rat_solve(M, a.values);
    if (!x)
        throw InvalidParameters("not a 1-stress of this realization");
    RatVector heights(K.num_vertices(), Rational(0));
    for (std::size_t j = 0; j < free.size(); ++j)
        heights[free[j]] = (*x)[j];
    return lifting_from_heights(nu, rho.base, heights);
}

Reciprocal lifting_to_reciprocal(const Realization& nu, const PLOrientation& rho, const Lifting& mu)
{
    const auto& ridges = nu.complex.faces(nu.d - 1);
    Reciprocal R;
    R.base = mu.base;
    R.points = mu.m;
    for (const Face& g : ridges)
    {
        RidgeData r = ridge_data(nu, g);
        Rational proj = rho.rho[r.f1] * vdot(vsub(R.points[r.f2], R.points[r.f1]), r.n);
        QuadExt len = QuadExt(proj) / QuadExt::sqrt(vdot(r.n, r.n));
        R.lengths.push_back(len);
        R.normalized.push_back(len / QuadExt::sqrt(face_volume_squared(nu, g)));
    }
    return R;
}

bool reciprocal_valid(const Realization& nu, const Reciprocal& R)
{
    const SimplicialComplex& K = nu.complex;
    for (const auto& x : R.points[K.index(R.base)])
        if (x != 0)
            return false;
    for (const Face& g : K.faces(nu.d - 1))
    {
        RidgeData r = ridge_data(nu, g);
        RatVector dm = vsub(R.points[r.f2], R.points[r.f1]);
        for (int i = 0; i < nu.d; ++i)
            for (int j = i + 1; j < nu.d; ++j)
                if (dm[i] * r.n[j] != dm[j] * r.n[i])
                    return false;
    }
    return true;
}

StressVector reciprocal_to_stress(const Realization& nu, const Reciprocal& R)
{
    const auto& ridges = nu.complex.faces(nu.d - 1);
    StressVector a{1, nu.d, {}};
    for (std::size_t i = 0; i < ridges.size(); ++i)
    {
        if (!R.normalized[i].is_rational())
            throw InvalidParameters("normalized edge length is irrational");
        a.values.push_back(R.normalized[i].rational_part() / lambda_product(nu, ridges[i]));
    }
    return a;
}

QuadExt zeta(const Realization& nu, const PLOrientation& rho, const Face& g, int v)
{
    RidgeData r = ridge_data(nu, g);
    const auto& facets = nu.complex.faces(nu.d);
    return QuadExt(normalized_jump(nu, rho, r, cramer_gradient(nu, facets[r.f1], v),
                                   cramer_gradient(nu, facets[r.f2], v)));
}

QuadExt zeta_w(const Realization& nu, const PLOrientation& rho, const RatVector& w, const Face& g)
{
    auto [a, b] = ridge_cofacets(nu.complex, g);
    QuadExt s;
    for (int v : face_union(a, b))
        if (!face_contains(rho.base, {v}) && w.at(v) != 0)
            s += QuadExt(w[v]) * zeta(nu, rho, g, v);
    return s;
}

ABMatrices ab_matrices(const Realization& nu, const PLOrientation& rho)
{
    const SimplicialComplex& K = nu.complex;
    int d = nu.d;
    std::size_t n = K.num_vertices();
    const auto& ridges = K.faces(d - 1);
    std::size_t m = ridges.size();
    ABMatrices out;
    for (int v = 0; v < static_cast<int>(n); ++v)
        if (!face_contains(rho.base, {v}))
            out.vertex_order.push_back(v);
    for (int v : rho.base)
        out.vertex_order.push_back(v);

    out.A = QuadMatrix(n, m);
    out.B = RatMatrix(n, m);
    out.Bbar = RatMatrix(n, m);
    std::vector<std::vector<QuadExt> > cols(m);
    parallel_for(m, [&](std::size_t j) {
        for (std::size_t i = 0; i < n; ++i)
            cols[j].push_back(zeta(nu, rho, ridges[j], out.vertex_order[i]));
    });
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
        {
            bool in = face_contains(ridges[j], {out.vertex_order[i]});
            out.A(i, j) = cols[j][i];
            out.B(i, j) = in ? 0 : 1;
            out.Bbar(i, j) = in ? 1 : 0;
        }
    QuadMatrix ABt = out.A * to_quad(out.B.transpose());
    out.abt_rank = quad_rank(ABt);
    out.abt_invertible = out.abt_rank == n;
    std::vector<RatVector> rb, rbb;
    for (std::size_t i = 0; i < n; ++i)
    {
        rb.push_back(out.B.row(i));
        rbb.push_back(out.Bbar.row(i));
    }
    out.rows_equal = span_contains(rb, rbb, m) && span_contains(rbb, rb, m);

    std::size_t k = n - static_cast<std::size_t>(d) - 1;
    RatMatrix WQ(d + 1, d + 1), WbarQ(k, d + 1);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            WQ(i, j) = nu.coords[out.vertex_order[k + i]][j];
    for (std::size_t i = 0; i < k; ++i)
        for (int j = 0; j <= d; ++j)
            WbarQ(i, j) = nu.coords[out.vertex_order[i]][j];
    auto inv = rat_inverse(WQ);
    if (!inv)
        throw SingularFacetMatrix("base facet is degenerate");
    out.w = (WbarQ * *inv).transpose();
    QuadMatrix Cp = ABt;
    for (int i = 0; i <= d; ++i)
        for (std::size_t j = 0; j < k; ++j)
        {
            if (out.w(i, j) == 0)
                continue;
            QuadExt s(out.w(i, j));
            for (std::size_t r = 0; r < n; ++r)
                Cp(r, j) -= s * Cp(r, k + i);
        }
    out.C = QuadMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out.C(i, j) = Cp(i, j);
    out.c_invertible = quad_rank(out.C) == k;
    return out;
}

ProductFormulaReport product_formula(const StressAlgebra& alg, const PLOrientation& rho, const StressVector& a,
                                     const StressVector& b)
{
    const Realization& nu = alg.realization();
    const SimplicialComplex& K = nu.complex;
    int d = nu.d;
    if (a.degree != 1 || b.degree != d)
        throw DimensionMismatch("product formula needs a in Psi_1 and b in Psi_d");
    ProductFormulaReport rep;
    StressVector ab = alg.multiply(a, b);
    rep.algebra_value = QuadExt(ab.values.at(0));

    Lifting mu = stress_to_lifting(nu, rho, a);
    Reciprocal R = lifting_to_reciprocal(nu, rho, mu);
    const auto& ridges = K.faces(d - 1);
    for (int v = 0; v < static_cast<int>(K.num_vertices()); ++v)
    {
        if (b.values[v] == 0)
            continue;
        QuadExt s;
        for (std::size_t j = 0; j < ridges.size(); ++j)
            if (!face_contains(ridges[j], {v}))
                s += R.normalized[j];
        rep.formula_value += s * QuadExt(b.values[v]);
    }

    ABMatrices M = ab_matrices(nu, rho);
    std::size_t n = K.num_vertices(), k = n - d - 1;
    std::vector<QuadExt> bt(n);
    for (std::size_t i = 0; i < n; ++i)
        bt[i] = QuadExt(b.values[M.vertex_order[i]]);
    QuadMatrix ABt = M.A * to_quad(M.B.transpose());
    std::vector<QuadExt> y = ABt * bt;
    for (std::size_t i = 0; i < k; ++i)
        rep.matrix_value += QuadExt(mu.heights[M.vertex_order[i]]) * y[i];
    rep.equal = rep.algebra_value == rep.formula_value && rep.formula_value == rep.matrix_value;
    return rep;
}

bool product_formula_check(const StressAlgebra& alg, const PLOrientation& rho, const StressVector& a,
                           const StressVector& b)
{
    return product_formula(alg, rho, a, b).equal;
}

StressVector local_lifting_to_stress(const Realization& nu, const PLOrientation& rho, int h,
                                     const RatVector& heights)
{
    const SimplicialComplex& K = nu.complex;
    const auto& ridges = K.faces(nu.d - 1);
    const auto& facets = K.faces(nu.d);
    StressVector a{1, nu.d, RatVector(ridges.size(), Rational(0))};
    for (std::size_t i = 0; i < ridges.size(); ++i)
    {
        if (!face_contains(ridges[i], {h}))
            continue;
        RidgeData r = ridge_data(nu, ridges[i]);
        RatVector m1 = affine_piece(nu, facets[r.f1], heights);
        RatVector m2 = affine_piece(nu, facets[r.f2], heights);
        m1.pop_back();
        m2.pop_back();
        a.values[i] = normalized_jump(nu, rho, r, m1, m2) / lambda_product(nu, ridges[i]);
    }
    return a;
}

}   // namespace stresslab
