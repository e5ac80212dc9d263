/**
 * Rigidity matrices, stress spaces, pivotal orders.
 */
#include "stresslab/rigidity.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include "stresslab/parallel.hpp"

namespace stresslab {

namespace {

using FloatVector = std::vector<Float>;

std::vector<RatVector> face_rows(const Realization& nu, const Face& f)
{
    std::vector<RatVector> rows;
    for (int v : f)
        rows.push_back(nu.coords[v]);
    return rows;
}

/** x reduced modulo the row space of an RREF: pivot coordinates cleared. */
RatVector reduce_mod(const RrefResult& rr, RatVector x)
{
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    {
        Rational c = x[rr.pivots[i]];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < x.size(); ++j)
            x[j] -= c * rr.R(i, j);
    }
    return x;
}

std::vector<RatVector> nullspace_from_rref(const RrefResult& rr, std::size_t cols)
{
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : rr.pivots)
        is_pivot[p] = true;
    std::vector<RatVector> out;
    for (std::size_t j = 0; j < cols; ++j)
    {
        if (is_pivot[j])
            continue;
        RatVector v(cols, Rational(0));
        v[j] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.R(i, j);
        out.push_back(v);
    }
    return out;
}

std::vector<std::size_t> identity_order(std::size_t n)
{
    std::vector<std::size_t> o(n);
    std::iota(o.begin(), o.end(), 0);
    return o;
}

void require_shape(const StressVector& a, const Realization& nu)
{
    if (a.d != nu.d || a.degree < 0 || a.degree > nu.d + 1)
        throw DimensionMismatch("stress degree does not fit the realization");
    if (a.values.size() != nu.complex.f(a.face_dim()))
        throw DimensionMismatch("stress vector has the wrong length");
}

/**
 * Rows of the equations at the given (m-1)-faces restricted to the given
 * m-face columns.
 */
RatMatrix equation_matrix(const Realization& nu, const std::vector<Face>& row_faces,
                          const std::vector<Face>& col_faces)
{
    int D = nu.ambient();
    const SimplicialComplex& K = nu.complex;
    RatMatrix M(row_faces.size() * D, col_faces.size());
    std::unordered_map<Face, std::size_t, FaceHash> col_of;
    for (std::size_t j = 0; j < col_faces.size(); ++j)
        col_of[col_faces[j]] = j;
    for (std::size_t b = 0; b < row_faces.size(); ++b)
    {
        const Face& F = row_faces[b];
        RrefResult rr = rat_rref(rows_matrix(face_rows(nu, F), D));
        for (int v : K.link_vertices(F))
        {
            auto it = col_of.find(face_with(F, v));
            if (it == col_of.end())
                continue;
            RatVector red = reduce_mod(rr, nu.coords[v]);
            for (int i = 0; i < D; ++i)
                M(b * D + i, it->second) = red[i];
        }
    }
    return M;
}

// ------------------------------------------------------------------ //
//                     60-digit geometric evaluation                  //
// ------------------------------------------------------------------ //

FloatVector fsub(const FloatVector& a, const FloatVector& b)
{
    FloatVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] - b[i];
    return c;
}

Float fdot(const FloatVector& a, const FloatVector& b)
{
    Float s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

/** Solve A x = b by Gaussian elimination with partial pivoting. */
FloatVector fsolve(std::vector<FloatVector> A, FloatVector b)
{
    std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c)
    {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(A[r][c]) > abs(A[p][c]))
                p = r;
        std::swap(A[c], A[p]);
        std::swap(b[c], b[p]);
        for (std::size_t r = c + 1; r < n; ++r)
        {
            Float f = A[r][c] / A[c][c];
            for (std::size_t j = c; j < n; ++j)
                A[r][j] -= f * A[c][j];
            b[r] -= f * b[c];
        }
    }
    FloatVector x(n);
    for (std::size_t i = n; i-- > 0;)
    {
        Float s = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s -= A[i][j] * x[j];
        x[i] = s / A[i][i];
    }
    return x;
}

Float fdet(std::vector<FloatVector> A)
{
    std::size_t n = A.size();
    Float det = 1;
    for (std::size_t c = 0; c < n; ++c)
    {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(A[r][c]) > abs(A[p][c]))
                p = r;
        if (A[p][c] == 0)
            return 0;
        if (p != c)
        {
            std::swap(A[c], A[p]);
            det = -det;
        }
        det *= A[c][c];
        for (std::size_t r = c + 1; r < n; ++r)
        {
            Float f = A[r][c] / A[c][c];
            for (std::size_t j = c; j < n; ++j)
                A[r][j] -= f * A[c][j];
        }
    }
    return det;
}

FloatVector fpoint(const Realization& nu, int v)
{
    FloatVector p(nu.d);
    const RatVector& c = nu.coords[v];
    for (int i = 0; i < nu.d; ++i)
        p[i] = to_float(c[i]) / to_float(c.back());
    return p;
}

/** Euclidean volume of the simplex on the given points. */
Float fvolume(const std::vector<FloatVector>& pts)
{
    std::size_t k = pts.size() - 1;
    std::vector<FloatVector> edges;
    for (std::size_t i = 1; i < pts.size(); ++i)
        edges.push_back(fsub(pts[i], pts[0]));
    std::vector<FloatVector> G(k, FloatVector(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            G[i][j] = fdot(edges[i], edges[j]);
    Float f = 1;
    for (std::size_t i = 2; i <= k; ++i)
        f *= i;
    return k ? Float(sqrt(fdet(G))) / f : Float(1);
}

/** Orthogonal projection of x onto the affine hull of pts. */
FloatVector fproject(const std::vector<FloatVector>& pts, const FloatVector& x)
{
    std::size_t k = pts.size() - 1;
    if (k == 0)
        return pts[0];
    std::vector<FloatVector> edges;
    for (std::size_t i = 1; i < pts.size(); ++i)
        edges.push_back(fsub(pts[i], pts[0]));
    std::vector<FloatVector> G(k, FloatVector(k));
    FloatVector rhs(k);
    FloatVector xr = fsub(x, pts[0]);
    for (std::size_t i = 0; i < k; ++i)
    {
        for (std::size_t j = 0; j < k; ++j)
            G[i][j] = fdot(edges[i], edges[j]);
        rhs[i] = fdot(edges[i], xr);
    }
    FloatVector c = fsolve(G, rhs);
    FloatVector p = pts[0];
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            p[j] += c[i] * edges[i][j];
    return p;
}

bool float_vanishes(const FloatVector& sum, const Float& scale)
{
    Float n = sqrt(fdot(sum, sum));
    static const Float tol("1e-30");
    return n <= tol * scale || n == 0;
}

bool geometric_equilibrium(const StressVector& a, const Realization& nu)
{
    const SimplicialComplex& K = nu.complex;
    int m = a.face_dim();
    const auto& faces = K.faces(m);
    if (m < 0)
        return true;
    if (m == 0)
    {
        FloatVector sum(nu.ambient(), Float(0));
        Float scale = 0;
        for (std::size_t i = 0; i < faces.size(); ++i)
        {
            Float av = to_float(a.values[i]);
            FloatVector term(nu.ambient());
            for (int j = 0; j < nu.ambient(); ++j)
            {
                term[j] = av * to_float(nu.coords[faces[i][0]][j]);
                sum[j] += term[j];
            }
            scale += sqrt(fdot(term, term));
        }
        return float_vanishes(sum, scale);
    }
    // affine chart: a(F) ∏ λ_u on ν̄
    for (const Face& G : K.faces(m - 1))
    {
        std::vector<FloatVector> gp;
        for (int u : G)
            gp.push_back(fpoint(nu, u));
        FloatVector sum(nu.d, Float(0));
        Float scale = 0;
        for (int v : K.link_vertices(G))
        {
            Face F = face_with(G, v);
            if (static_cast<int>(F.size()) != m + 1)
                continue;
            Rational w = a.values[K.index(F)];
            if (w == 0)
                continue;
            for (int u : F)
                w *= nu.coords[u].back();
            std::vector<FloatVector> fp = gp;
            FloatVector apex = fpoint(nu, v);
            fp.push_back(apex);
            FloatVector dir = fsub(fproject(gp, apex), apex);
            Float len = sqrt(fdot(dir, dir));
            Float coef = to_float(w) * fvolume(fp) / len;
            for (int j = 0; j < nu.d; ++j)
                sum[j] += coef * dir[j];
            scale += abs(coef) * len;
        }
        if (!float_vanishes(sum, scale))
            return false;
    }
    return true;
}

}   // namespace

// ------------------------------------------------------------------ //
//                          Stress vectors                            //
// ------------------------------------------------------------------ //

bool StressVector::is_zero() const
{
    for (const auto& x : values)
        if (x != 0)
            return false;
    return true;
}

StressVector zero_stress(const Realization& nu, int degree)
{
    if (degree < 0 || degree > nu.d + 1)
        throw DimensionMismatch("stress degree out of range");
    return StressVector{degree, nu.d, RatVector(nu.complex.f(nu.d - degree), Rational(0))};
}

Rational stress_value(const Realization& nu, const StressVector& a, const Face& f)
{
    if (static_cast<int>(f.size()) - 1 != a.face_dim())
        return 0;
    int i = nu.complex.index(f);
    return i < 0 ? Rational(0) : a.values[i];
}

RatMatrix rigidity_matrix(const Realization& nu, int k, const std::vector<std::size_t>* row_order,
                          const std::vector<std::size_t>* col_order)
{
    const SimplicialComplex& K = nu.complex;
    if (k < 0 || k > nu.d)
        throw DimensionMismatch("rigidity matrix degree out of range");
    const auto& rows = K.faces(k - 1);
    const std::vector<Face> empty;
    const auto& cols = k <= K.dim() ? K.faces(k) : empty;
    std::vector<Face> rf, cf;
    if (row_order)
    {
        if (row_order->size() != rows.size())
            throw DimensionMismatch("row order has the wrong length");
        for (std::size_t i : *row_order)
            rf.push_back(rows.at(i));
    }
    else
        rf = rows;
    if (col_order)
    {
        if (col_order->size() != cols.size())
            throw DimensionMismatch("column order has the wrong length");
        for (std::size_t i : *col_order)
            cf.push_back(cols.at(i));
    }
    else
        cf = cols;
    return equation_matrix(nu, rf, cf);
}

std::vector<std::size_t> GradedStressSpace::hilbert() const
{
    std::vector<std::size_t> h;
    for (const auto& b : basis)
        h.push_back(b.size());
    return h;
}

std::size_t GradedStressSpace::dim(int r) const
{
    return (r < 0 || r > d + 1) ? 0 : basis[r].size();
}

StressVector GradedStressSpace::element(int r, std::size_t i) const
{
    return StressVector{r, d, basis.at(r).at(i)};
}

StressVector GradedStressSpace::combination(int r, const RatVector& coeffs) const
{
    const auto& B = basis.at(r);
    if (coeffs.size() != B.size())
        throw DimensionMismatch("coefficient count differs from dim Psi_r");
    std::size_t len = B.empty() ? 0 : B[0].size();
    StressVector s{r, d, RatVector(len, Rational(0))};
    for (std::size_t i = 0; i < B.size(); ++i)
        if (coeffs[i] != 0)
            for (std::size_t j = 0; j < len; ++j)
                s.values[j] += coeffs[i] * B[i][j];
    return s;
}

GradedStressSpace stress_space(const Realization& nu)
{
    GradedStressSpace S;
    S.d = nu.d;
    S.basis.resize(nu.d + 2);
    S.rref.resize(nu.d + 1);
    parallel_for(static_cast<std::size_t>(nu.d + 1), [&](std::size_t k) {
        RatMatrix M = rigidity_matrix(nu, static_cast<int>(k));
        S.rref[k] = rat_rref(M);
        S.basis[nu.d - k] = nullspace_from_rref(S.rref[k], M.cols);
    });
    S.basis[nu.d + 1] = {RatVector{1}};
    return S;
}

std::vector<RatVector> stress_basis(const Realization& nu, int r)
{
    if (r == nu.d + 1)
        return {RatVector{1}};
    RatMatrix M = rigidity_matrix(nu, nu.d - r);
    return nullspace_from_rref(rat_rref(M), M.cols);
}

bool check_equilibrium(const StressVector& a, const Realization& nu, EquilibriumForm form)
{
    require_shape(a, nu);
    if (form == EquilibriumForm::Geometric)
        return geometric_equilibrium(a, nu);
    const SimplicialComplex& K = nu.complex;
    int m = a.face_dim();
    if (m < 0)
        return true;
    int D = nu.ambient();
    for (const Face& G : K.faces(m - 1))
    {
        MultiVector sum(D);
        MultiVector nuG = face_multivector(nu, G);
        for (int v : K.link_vertices(G))
        {
            Face F = face_with(G, v);
            Rational w = a.values[K.index(F)];
            if (w == 0)
                continue;
            if (form == EquilibriumForm::Projective)
                sum += w * wedge(nuG, MultiVector::vector(nu.coords[v]));
            else
                sum += (w * sgn(G, F)) * m_vector(nu.coords, G, F);
        }
        if (!sum.is_zero())
            return false;
    }
    return true;
}

std::vector<RatVector> local_stress_basis(const Realization& nu, const Face& h, int r)
{
    const SimplicialComplex& K = nu.complex;
    if (!K.contains(h))
        throw FaceNotFound("face is not in the complex");
    int m = nu.d - r;
    if (m < 0 || m > K.dim())
        throw DimensionMismatch("degree out of range");
    std::vector<Face> cols, rows;
    std::vector<std::size_t> col_index;
    for (std::size_t i = 0; i < K.faces(m).size(); ++i)
        if (face_contains(K.faces(m)[i], h))
        {
            cols.push_back(K.faces(m)[i]);
            col_index.push_back(i);
        }
    for (const Face& G : K.faces(m - 1))
        if (face_contains(G, h))
            rows.push_back(G);
    std::vector<RatVector> local;
    if (rows.empty())
    {
        for (std::size_t j = 0; j < cols.size(); ++j)
        {
            RatVector e(cols.size(), Rational(0));
            e[j] = 1;
            local.push_back(e);
        }
    }
    else
    {
        RatMatrix M = equation_matrix(nu, rows, cols);
        local = nullspace_from_rref(rat_rref(M), M.cols);
    }
    std::vector<RatVector> out;
    for (const auto& x : local)
    {
        RatVector full(K.f(m), Rational(0));
        for (std::size_t j = 0; j < cols.size(); ++j)
            full[col_index[j]] = x[j];
        out.push_back(full);
    }
    return out;
}

bool check_local_equilibrium(const StressVector& a, const Realization& nu, const Face& h)
{
    require_shape(a, nu);
    const SimplicialComplex& K = nu.complex;
    int m = a.face_dim();
    if (m < 0)
        return true;
    std::vector<Face> cols, rows;
    RatVector x;
    for (std::size_t i = 0; i < K.faces(m).size(); ++i)
        if (face_contains(K.faces(m)[i], h))
        {
            cols.push_back(K.faces(m)[i]);
            x.push_back(a.values[i]);
        }
    for (const Face& G : K.faces(m - 1))
        if (face_contains(G, h))
            rows.push_back(G);
    if (rows.empty())
        return true;
    RatVector y = equation_matrix(nu, rows, cols) * x;
    return std::all_of(y.begin(), y.end(), [](const Rational& q) { return q == 0; });
}

StressVector restrict_to_link(const StressVector& a, const Realization& nu, const Face& f,
                              const LinkRealization& link)
{
    require_shape(a, nu);
    if (link.basis.base != f || !is_distinguished(nu, link.basis))
        throw BasisNotDistinguished("link basis is not distinguished for this face");
    const Realization& L = link.realization;
    StressVector out = zero_stress(L, a.degree);
    int m = out.face_dim();
    if (m < -1 || m > L.complex.dim())
        return out;
    const auto& faces = L.complex.faces(m);
    for (std::size_t i = 0; i < faces.size(); ++i)
    {
        Face G = f;
        int sign = 1;
        for (int u : faces[i])
        {
            int v = link.to_parent[u];
            G = face_with(G, v);
            sign *= sgn(f, face_with(f, v));
        }
        out.values[i] = sign * stress_value(nu, a, G);
    }
    return out;
}

// ------------------------------------------------------------------ //
//                           Pivotal orders                           //
// ------------------------------------------------------------------ //

bool PivotalOrder::is_pivot(std::size_t face) const
{
    return std::find(pivots.begin(), pivots.end(), face) != pivots.end();
}

PivotalOrder pivotal_order_from(const Realization& nu, int k, const std::vector<std::size_t>& order)
{
    RatMatrix M = rigidity_matrix(nu, k, nullptr, &order);
    RrefResult rr = rat_rref(M);
    std::vector<bool> piv(order.size(), false);
    for (std::size_t p : rr.pivots)
        piv[p] = true;
    PivotalOrder po;
    po.k = k;
    for (std::size_t j = 0; j < order.size(); ++j)
        if (piv[j])
            po.pivots.push_back(order[j]);
    for (std::size_t j = 0; j < order.size(); ++j)
        if (!piv[j])
            po.nonpivots.push_back(order[j]);
    po.order = po.pivots;
    po.order.insert(po.order.end(), po.nonpivots.begin(), po.nonpivots.end());
    if (po.order != order)
    {
        M = rigidity_matrix(nu, k, nullptr, &po.order);
        rr = rat_rref(M);
    }
    std::size_t P = po.pivots.size();
    for (std::size_t i = 0; i < P; ++i)
        if (rr.pivots[i] != i)
            throw PreconditionViolated("reordered columns are not pivotal");
    po.rhat = RatMatrix(P, po.nonpivots.size());
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t t = 0; t < po.nonpivots.size(); ++t)
            po.rhat(i, t) = rr.R(i, P + t);
    return po;
}

PivotalOrder pivotal_order(const Realization& nu, int k, std::uint64_t seed)
{
    std::size_t n = k <= nu.complex.dim() ? nu.complex.f(k) : 0;
    std::vector<std::size_t> order = identity_order(n);
    if (seed != 0)
    {
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    return pivotal_order_from(nu, k, order);
}

PivotalOrder pivotal_reordering(const Realization& nu, const PivotalOrder& po,
                                const std::vector<std::size_t>& sigma_hat,
                                const std::vector<std::size_t>& sigma)
{
    std::size_t P = po.pivots.size(), N = po.nonpivots.size();
    if (sigma_hat.size() != P || sigma.size() != N)
        throw DimensionMismatch("permutation sizes do not match the blocks");
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < P; ++i)
        order.push_back(po.pivots.at(sigma_hat[i]));
    for (std::size_t i = 0; i < N; ++i)
        order.push_back(po.nonpivots.at(sigma[i]));
    return pivotal_order_from(nu, po.k, order);
}

PivotalWeights pivotal_weights(const Realization& nu, const PivotalOrder& po)
{
    if (!in_general_position(nu))
        throw PreconditionViolated("pivotal weights need vertices in general position");
    std::size_t N = po.nullity();
    if (N == 0)
        throw PreconditionViolated("pivotal weights need a nonzero nullspace");
    const SimplicialComplex& K = nu.complex;
    PivotalWeights w;
    w.wt.assign(K.f(po.k), 0);
    for (std::size_t t = 0; t < N; ++t)
        w.wt[po.nonpivots[t]] = static_cast<int>(t + 1);
    for (std::size_t i = 0; i < po.pivots.size(); ++i)
    {
        int last = 1;
        for (std::size_t t = 0; t < N; ++t)
            if (po.rhat(i, t) != 0)
                last = static_cast<int>(t + 1);
        w.wt[po.pivots[i]] = last;
    }
    const auto& lower = K.faces(po.k - 1);
    w.subwt.assign(lower.size(), 1);
    for (std::size_t i = 0; i < lower.size(); ++i)
        for (const Face& H : K.cofacets(lower[i]))
            w.subwt[i] = std::max(w.subwt[i], w.wt[K.index(H)]);
    return w;
}

bool is_autonomous(const SimplicialComplex& K, const std::vector<int>& A, int k)
{
    if (k == -1)
        return !A.empty();
    if (k < -1 || k > K.dim())
        return true;
    for (const Face& F : K.faces(k))
    {
        bool avoids = std::none_of(A.begin(), A.end(), [&](int a) { return face_contains(F, {a}); });
        if (!avoids)
            continue;
        bool found = std::any_of(A.begin(), A.end(), [&](int a) { return K.contains(face_with(F, a)); });
        if (!found)
            return false;
    }
    return true;
}

PivotCompatibleResult pivot_compatible_set(const Realization& nu, const std::vector<int>& A, int k,
                                           std::uint64_t seed)
{
    const SimplicialComplex& K = nu.complex;
    if (!is_autonomous(K, A, k - 1))
        throw PreconditionViolated("vertex set is not (k-1)-autonomous");
    std::vector<int> sortedA(A.begin(), A.end());
    std::sort(sortedA.begin(), sortedA.end());
    PivotCompatibleResult res;
    std::vector<std::size_t> hhat_index;
    for (const Face& F : K.faces(k - 1))
    {
        if (std::any_of(sortedA.begin(), sortedA.end(), [&](int a) { return face_contains(F, {a}); }))
            continue;
        for (int a : sortedA)
        {
            Face H = face_with(F, a);
            if (K.contains(H))
            {
                res.hhat.push_back(H);
                res.private_ridges.push_back(F);
                hhat_index.push_back(static_cast<std::size_t>(K.index(H)));
                break;
            }
        }
    }
    PivotalOrder po = pivotal_order(nu, k, seed);
    std::size_t limit = hhat_index.size() + K.f(k) + 1;
    while (true)
    {
        std::size_t offender = hhat_index.size();
        for (std::size_t i = 0; i < hhat_index.size(); ++i)
            if (!po.is_pivot(hhat_index[i]))
            {
                offender = i;
                break;
            }
        if (offender == hhat_index.size())
            break;
        if (static_cast<std::size_t>(res.swaps) >= limit)
            throw DescentStalled("swap limit reached");
        std::size_t H = hhat_index[offender];
        std::size_t N = po.nullity();
        // non-pivot reordering that puts the offender last
        std::vector<std::size_t> sigma;
        std::size_t at = 0;
        for (std::size_t t = 0; t < N; ++t)
            if (po.nonpivots[t] == H)
                at = t;
            else
                sigma.push_back(t);
        sigma.push_back(at);
        po = pivotal_reordering(nu, po, identity_order(po.pivots.size()), sigma);
        PivotalWeights w = pivotal_weights(nu, po);
        std::optional<std::size_t> substitute;
        for (const Face& Hp : K.cofacets(res.private_ridges[offender]))
        {
            std::size_t idx = static_cast<std::size_t>(K.index(Hp));
            if (idx != H && w.wt[idx] == static_cast<int>(N) && po.is_pivot(idx))
            {
                substitute = idx;
                break;
            }
        }
        if (!substitute)
            throw DescentStalled("no pivot cofacet of weight N on the private ridge");
        std::vector<std::size_t> order = po.order;
        auto a = std::find(order.begin(), order.end(), *substitute);
        auto b = std::find(order.begin(), order.end(), H);
        std::iter_swap(a, b);
        std::set<std::size_t> expected(po.pivots.begin(), po.pivots.end());
        expected.erase(*substitute);
        expected.insert(H);
        po = pivotal_order_from(nu, k, order);
        if (std::set<std::size_t>(po.pivots.begin(), po.pivots.end()) != expected)
            throw DescentStalled("swap did not produce the expected pivot set");
        ++res.swaps;
    }
    res.order = po;
    return res;
}

}   // namespace stresslab
