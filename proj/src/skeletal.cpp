#include "stresslab/skeletal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include "stresslab/parallel.hpp"

namespace stresslab {

namespace {

std::vector<MultiVector::Blade> grade_blades(int D, int k)
{
    std::vector<MultiVector::Blade> out;
    if (k < 0 || k > D)
        return out;
    for (MultiVector::Blade b = 0; b < (1u << D); ++b)
        if (__builtin_popcount(b) == k)
            out.push_back(b);
    return out;
}

RatVector blade_coords(const MultiVector& y, const std::vector<MultiVector::Blade>& blades)
{
    RatVector out(blades.size());
    for (std::size_t j = 0; j < blades.size(); ++j)
        out[j] = y.coeff(blades[j]);
    return out;
}

MultiVector from_coords(int D, const RatVector& c, const std::vector<MultiVector::Blade>& blades)
{
    MultiVector y(D);
    for (std::size_t j = 0; j < blades.size(); ++j)
        if (c[j] != 0)
            y.add(blades[j], c[j]);
    return y;
}

/** Sorted image of f under a vertex map, with the sign of the sorting permutation; nullopt on -1. */
std::optional<std::pair<Face, int> > map_face(const Face& f, const std::vector<int>& to)
{
    Face g;
    for (int v : f)
    {
        int u = to.at(v);
        if (u < 0)
            return std::nullopt;
        g.push_back(u);
    }
    int sign = 1;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g[i] > g[j])
                sign = -sign;
    std::sort(g.begin(), g.end());
    return std::make_pair(g, sign);
}

std::vector<int> invert(const std::vector<int>& to, int n)
{
    std::vector<int> out(n, -1);
    for (std::size_t i = 0; i < to.size(); ++i)
        out.at(to[i]) = static_cast<int>(i);
    return out;
}

std::size_t cell_index(int i, const Face& f, const SimplicialComplex& K)
{
    int idx = K.index(f);
    if (idx < 0 || static_cast<int>(f.size()) != i + 1)
        throw FaceNotFound("no cell for this face");
    return static_cast<std::size_t>(idx);
}

template <typename T>
Matrix<T> times(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows == 0 || b.cols == 0)
        return Matrix<T>(a.rows, b.cols);
    return a * b;
}

QuadMatrix product_q(const QuadMatrix& a, const QuadMatrix& b)
{
    if (a.cols != b.rows)
        throw DimensionMismatch("matrix product");
    return times(a, b);
}

}   // namespace

std::size_t SkeletalChainComplex::dim(int i) const
{
    if (i < -1 || i > top())
        return 0;
    return dims[i + 1];
}

const RatMatrix& SkeletalChainComplex::del(int i) const
{
    return boundary.at(i + 1);
}

std::size_t SkeletalChainComplex::homology_dim(int i) const
{
    if (i < -1 || i > top())
        return 0;
    std::size_t rk = rat_rank(del(i));
    std::size_t rk_next = i + 1 <= top() ? rat_rank(del(i + 1)) : 0;
    return dim(i) - rk - rk_next;
}

bool SkeletalChainComplex::boundary_squared_zero() const
{
    for (int i = 1; i <= top(); ++i)
        if (!times(del(i - 1), del(i)).is_zero())
            return false;
    return true;
}

MultiVector SkeletalChainComplex::representative(int i, std::size_t coordinate) const
{
    for (const SkeletalCell& c : cells.at(i + 1))
        if (coordinate >= c.offset && coordinate < c.offset + c.basis.rows)
            return from_coords(d + 1, c.basis.row(coordinate - c.offset), blades);
    throw DimensionMismatch("coordinate out of range");
}

RatVector SkeletalChainComplex::coordinates(int i, std::size_t c, const MultiVector& y) const
{
    const SkeletalCell& cl = cell(i, c);
    RatVector v = blade_coords(y, blades);
    RatVector out(cl.basis.rows);
    RatVector rest = v;
    for (std::size_t j = 0; j < cl.basis.rows; ++j)
    {
        out[j] = v[cl.pivots[j]];
        if (out[j] != 0)
            for (std::size_t t = 0; t < rest.size(); ++t)
                rest[t] -= out[j] * cl.basis(j, t);
    }
    for (const Rational& x : rest)
        if (x != 0)
            throw DimensionMismatch("element is not in V_F");
    return out;
}

SkeletalChainComplex skeletal_complex(const Realization& nu, int r)
{
    const SimplicialComplex& K = nu.complex;
    int d = nu.d;
    int D = d + 1;
    if (r < 0 || r > d + 1)
        throw InvalidParameters("r must lie in 0..d+1");
    SkeletalChainComplex C;
    C.r = r;
    C.d = d;
    C.blades = grade_blades(D, r);
    C.cells.resize(r + 1);
    C.dims.assign(r + 1, 0);
    for (int i = -1; i <= r - 1; ++i)
    {
        if (i > K.dim())
            continue;
        int k = r - 1 - i;
        auto alpha_blades = grade_blades(D, k);
        const auto& faces = K.faces(i);
        std::vector<SkeletalCell>& cells = C.cells[i + 1];
        cells.resize(faces.size());
        parallel_for(faces.size(), [&](std::size_t c) {
            SkeletalCell& cl = cells[c];
            cl.face = faces[c];
            MultiVector nf = face_multivector(nu, faces[c]);
            RatMatrix M(C.blades.size(), alpha_blades.size());
            for (std::size_t s = 0; s < alpha_blades.size(); ++s)
            {
                MultiVector e(D);
                e.add(alpha_blades[s], 1);
                RatVector col = blade_coords(wedge(e, nf), C.blades);
                for (std::size_t t = 0; t < col.size(); ++t)
                    M(t, s) = col[t];
            }
            RrefResult rr = rat_rref(M.transpose());
            std::size_t rank = rr.pivots.size();
            cl.basis = RatMatrix(rank, C.blades.size());
            for (std::size_t j = 0; j < rank; ++j)
                for (std::size_t t = 0; t < C.blades.size(); ++t)
                    cl.basis(j, t) = rr.R(j, t);
            cl.pivots = rr.pivots;
            for (std::size_t j = 0; j < rank; ++j)
            {
                auto sol = rat_solve(M, cl.basis.row(j));
                if (!sol)
                    throw SingularFacetMatrix("basis row outside the wedge image");
                cl.lifts.push_back(from_coords(D, *sol, alpha_blades));
            }
        });
        std::size_t off = 0;
        for (SkeletalCell& cl : cells)
        {
            cl.offset = off;
            off += cl.basis.rows;
        }
        C.dims[i + 1] = off;
    }
    C.boundary.resize(r + 1);
    C.boundary[0] = RatMatrix(0, C.dim(-1));
    for (int i = 0; i <= r - 1; ++i)
    {
        RatMatrix B(C.dim(i - 1), C.dim(i));
        for (std::size_t c = 0; c < C.cells[i + 1].size(); ++c)
        {
            const SkeletalCell& cl = C.cells[i + 1][c];
            for (std::size_t j = 0; j < cl.basis.rows; ++j)
            {
                MultiVector y = from_coords(D, cl.basis.row(j), C.blades);
                for (std::size_t p = 0; p < cl.face.size(); ++p)
                {
                    Face g = face_without(cl.face, cl.face[p]);
                    std::size_t gc = cell_index(i - 1, g, K);
                    RatVector co = C.coordinates(i - 1, gc, y);
                    const SkeletalCell& gl = C.cells[i][gc];
                    for (std::size_t t = 0; t < co.size(); ++t)
                        B(gl.offset + t, cl.offset + j) += (p % 2 ? -co[t] : co[t]);
                }
            }
        }
        C.boundary[i + 1] = B;
    }
    return C;
}

RatVector stress_to_chain(const SkeletalChainComplex& C, const std::vector<QuadExt>& x)
{
    int i = C.top();
    const auto& cells = C.cells.at(i + 1);
    if (x.size() != cells.size())
        throw DimensionMismatch("stress length differs from the number of top cells");
    RatVector out(C.dim(i));
    for (std::size_t c = 0; c < cells.size(); ++c)
    {
        if (!x[c].is_rational())
            throw InvalidParameters("irrational stress value");
        // basis row = ν(H) / ν(H)[pivot]
        const SkeletalCell& cl = cells[c];
        MultiVector y = cl.lifts[0];
        out[cl.offset] = x[c].rational_part() / y.coeff(0u);
    }
    return out;
}

std::vector<QuadExt> chain_to_stress(const SkeletalChainComplex& C, const std::vector<QuadExt>& coords)
{
    int i = C.top();
    const auto& cells = C.cells.at(i + 1);
    if (coords.size() != C.dim(i))
        throw DimensionMismatch("chain length");
    std::vector<QuadExt> out(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
        out[c] = coords[cells[c].offset] * QuadExt(cells[c].lifts[0].coeff(0u));
    return out;
}

StressHomologyReport stress_homology(const Realization& nu, int r)
{
    SkeletalChainComplex C = skeletal_complex(nu, r);
    StressHomologyReport rep;
    rep.r = r;
    rep.boundary_squared_zero = C.boundary_squared_zero();
    rep.homology = C.homology_dim(r - 1);
    rep.stresses = stress_basis(nu, nu.d + 1 - r).size();
    rep.equal = rep.homology == rep.stresses && rep.boundary_squared_zero;
    return rep;
}

bool stress_homology_check(const Realization& nu, int r)
{
    return stress_homology(nu, r).equal;
}

ChainMapReport cone_projection_chain_map(const Realization& cone_nu, const ConeProjection& proj, int r)
{
    const Realization& nu = proj.base;
    SkeletalChainComplex Cp = skeletal_complex(cone_nu, r);
    SkeletalChainComplex C = skeletal_complex(nu, r);
    std::vector<int> to_base = invert(proj.to_cone, cone_nu.complex.num_vertices());
    int Dp = cone_nu.ambient();
    ChainMapReport rep;
    rep.r = r;
    rep.pi.resize(r + 1);
    rep.surjective = true;
    for (int i = -1; i <= r - 1; ++i)
    {
        RatMatrix P(C.dim(i), Cp.dim(i));
        if (i <= cone_nu.complex.dim())
            for (const SkeletalCell& cl : Cp.cells[i + 1])
            {
                auto mapped = map_face(cl.face, to_base);
                if (!mapped)
                    continue;
                std::size_t c = cell_index(i, mapped->first, nu.complex);
                const SkeletalCell& tl = C.cell(i, c);
                for (std::size_t j = 0; j < cl.basis.rows; ++j)
                {
                    MultiVector y = from_coords(Dp, cl.basis.row(j), Cp.blades);
                    MultiVector py = induced_map(proj.map, y) * Rational(mapped->second);
                    RatVector co = C.coordinates(i, c, py);
                    for (std::size_t t = 0; t < co.size(); ++t)
                        P(tl.offset + t, cl.offset + j) = co[t];
                }
            }
        bool s = rat_rank(P) == C.dim(i);
        rep.surjective_at.push_back(s);
        rep.surjective = rep.surjective && s;
        rep.pi[i + 1] = P;
    }
    rep.commutes = true;
    for (int i = 0; i <= r - 1; ++i)
        if (!(times(rep.pi[i], Cp.del(i)) == times(C.del(i), rep.pi[i + 1])))
            rep.commutes = false;
    int top = r - 1;
    std::vector<RatVector> kernel = rat_nullspace(Cp.del(top));
    rep.top_source = kernel.size();
    rep.top_target = C.homology_dim(top);
    std::vector<RatVector> images;
    for (const RatVector& z : kernel)
        images.push_back(rep.pi[top + 1] * z);
    rep.top_rank = span_dim(images, C.dim(top));
    rep.iso_top = rep.commutes && rep.top_rank == rep.top_source && rep.top_rank == rep.top_target;
    return rep;
}

void require_xi0(const Realization& nu, const Face& base, const RatVector& w)
{
    if (static_cast<int>(w.size()) != nu.complex.num_vertices())
        throw DimensionMismatch("one weight per vertex expected");
    for (int v = 0; v < nu.complex.num_vertices(); ++v)
        if (!face_contains(base, {v}) && w[v] == 0)
            throw InvalidParameters("w vanishes at a vertex outside the base");
}


namespace {

/** Σ ζ_w(G) over ridges G of Δ with G ⊇ f and v ∉ G, f and v in Γ ids. */
struct PhiWeights
{
    std::vector<Face> ridges;
    std::vector<QuadExt> zw;
    std::vector<int> to_delta;

    PhiWeights(const Realization& nu, const PLOrientation& rho, const RatVector& w, std::vector<int> to)
        : ridges(nu.complex.faces(nu.d - 1)), zw(ridges.size()), to_delta(std::move(to))
    {
        require_xi0(nu, rho.base, w);
        parallel_for(ridges.size(), [&](std::size_t g) { zw[g] = zeta_w(nu, rho, w, ridges[g]); });
    }

    QuadExt operator()(const Face& f, int v) const
    {
        QuadExt s;
        auto mf = map_face(f, to_delta);
        if (!mf)
            return s;
        int dv = to_delta.at(v);
        for (std::size_t g = 0; g < ridges.size(); ++g)
            if (face_contains(ridges[g], mf->first) && (dv < 0 || !face_contains(ridges[g], {dv})))
                s += zw[g];
        return s;
    }
};

/** Σ_v weight(H\v, v) α ∧ ν(H\v), in the coordinates of the degree i-1 cells of dst. */
std::vector<std::pair<std::size_t, QuadExt> > phi_image(const Realization& gamma, const SkeletalChainComplex& dst,
                                                         const PhiWeights& wt, int i, const Face& h,
                                                         const MultiVector& alpha)
{
    std::map<std::size_t, QuadExt> acc;
    for (int v : h)
    {
        Face g = face_without(h, v);
        QuadExt c = wt(g, v);
        if (c.is_zero())
            continue;
        std::size_t gc = cell_index(i - 1, g, gamma.complex);
        const SkeletalCell& tl = dst.cell(i - 1, gc);
        RatVector co = dst.coordinates(i - 1, gc, wedge(alpha, face_multivector(gamma, g)));
        for (std::size_t t = 0; t < co.size(); ++t)
            if (co[t] != 0)
                acc[tl.offset + t] += c * QuadExt(co[t]);
    }
    std::vector<std::pair<std::size_t, QuadExt> > out;
    for (auto& [row, x] : acc)
        if (!x.is_zero())
            out.emplace_back(row, x);
    return out;
}

void check_phi_shapes(const SkeletalChainComplex& src, const SkeletalChainComplex& dst)
{
    if (src.r < 1 || dst.r != src.r - 1)
        throw DimensionMismatch("φ lowers r by one");
}

}   // namespace

std::vector<QuadMatrix> phi_matrices(const Realization& gamma, const SkeletalChainComplex& src,
                                     const SkeletalChainComplex& dst, const Realization& nu,
                                     const PLOrientation& rho, const RatVector& w,
                                     const std::vector<int>& to_delta)
{
    check_phi_shapes(src, dst);
    PhiWeights wt(nu, rho, w, to_delta);
    std::vector<QuadMatrix> out;
    for (int i = 0; i <= src.r - 1; ++i)
    {
        QuadMatrix P(dst.dim(i - 1), src.dim(i));
        const auto& cells = src.cells[i + 1];
        parallel_for(cells.size(), [&](std::size_t c) {
            const SkeletalCell& cl = cells[c];
            for (std::size_t j = 0; j < cl.basis.rows; ++j)
                for (auto& [row, x] : phi_image(gamma, dst, wt, i, cl.face, cl.lifts[j]))
                    P(row, cl.offset + j) = x;
        });
        out.push_back(P);
    }
    return out;
}

std::size_t phi_ambiguity(const Realization& gamma, const SkeletalChainComplex& src,
                          const SkeletalChainComplex& dst, const Realization& nu, const PLOrientation& rho,
                          const RatVector& w, const std::vector<int>& to_delta)
{
    check_phi_shapes(src, dst);
    PhiWeights wt(nu, rho, w, to_delta);
    int D = src.d + 1;
    std::size_t count = 0;
    for (int i = 0; i <= src.r - 1; ++i)
    {
        auto alpha_blades = grade_blades(D, src.r - 1 - i);
        for (const SkeletalCell& cl : src.cells[i + 1])
        {
            MultiVector nf = face_multivector(gamma, cl.face);
            RatMatrix M(src.blades.size(), alpha_blades.size());
            for (std::size_t s = 0; s < alpha_blades.size(); ++s)
            {
                MultiVector e(D);
                e.add(alpha_blades[s], 1);
                RatVector col = blade_coords(wedge(e, nf), src.blades);
                for (std::size_t t = 0; t < col.size(); ++t)
                    M(t, s) = col[t];
            }
            for (const RatVector& beta : rat_nullspace(M))
                if (!phi_image(gamma, dst, wt, i, cl.face, from_coords(D, beta, alpha_blades)).empty())
                    ++count;
        }
    }
    return count;
}

namespace {

bool chain_map_holds(const SkeletalChainComplex& src, const SkeletalChainComplex& dst,
                     const std::vector<QuadMatrix>& phi, std::vector<int>* defects)
{
    bool ok = true;
    for (int i = 1; i <= src.r - 1; ++i)
    {
        QuadMatrix lhs = product_q(to_quad(dst.del(i - 1)), phi[i]);
        QuadMatrix rhs = product_q(phi[i - 1], to_quad(src.del(i)));
        if (!(lhs == rhs))
        {
            ok = false;
            if (defects)
                defects->push_back(i);
        }
    }
    return ok;
}

std::vector<int> identity_map(int n)
{
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v)
        out[v] = v;
    return out;
}

}   // namespace

PhiReport phi_chain_map(const Realization& cone_nu, const ConeProjection& proj, const PLOrientation& rho,
                        const RatVector& w, int r)
{
    const Realization& nu = proj.base;
    if (r < 1 || r > nu.d + 1)
        throw InvalidParameters("r must lie in 1..d+1");
    require_xi0(nu, rho.base, w);
    SkeletalChainComplex Cp = skeletal_complex(cone_nu, r);
    SkeletalChainComplex Cp1 = skeletal_complex(cone_nu, r - 1);
    SkeletalChainComplex C = skeletal_complex(nu, r);
    SkeletalChainComplex C1 = skeletal_complex(nu, r - 1);
    std::vector<int> to_delta = invert(proj.to_cone, cone_nu.complex.num_vertices());
    PhiReport rep;
    rep.r = r;
    rep.phi_cone = phi_matrices(cone_nu, Cp, Cp1, nu, rho, w, to_delta);
    rep.phi_base = phi_matrices(nu, C, C1, nu, rho, w, identity_map(nu.complex.num_vertices()));
    rep.cone_chain_map = chain_map_holds(Cp, Cp1, rep.phi_cone, &rep.chain_defect_degrees);
    rep.base_chain_map = chain_map_holds(C, C1, rep.phi_base, nullptr);
    rep.is_chain_map = rep.cone_chain_map && rep.base_chain_map;
    rep.ambiguous_cone = phi_ambiguity(cone_nu, Cp, Cp1, nu, rho, w, to_delta);
    rep.ambiguous_base = phi_ambiguity(nu, C, C1, nu, rho, w, identity_map(nu.complex.num_vertices()));
    rep.well_defined = rep.ambiguous_cone == 0 && rep.ambiguous_base == 0;

    ChainMapReport pi_r = cone_projection_chain_map(cone_nu, proj, r);
    ChainMapReport pi_r1 = cone_projection_chain_map(cone_nu, proj, r - 1);
    rep.commutes_with_pi = true;
    for (int i = 0; i <= r - 1; ++i)
    {
        QuadMatrix lhs = product_q(to_quad(pi_r1.pi[i]), rep.phi_cone[i]);
        QuadMatrix rhs = product_q(rep.phi_base[i], to_quad(pi_r.pi[i + 1]));
        if (!(lhs == rhs))
            rep.commutes_with_pi = false;
    }
    return rep;
}

CruxReport technical_crux(const Realization& cone_nu, const ConeProjection& proj, const PLOrientation& rho,
                          const RatVector& w, int r)
{
    const Realization& nu = proj.base;
    int d = nu.d;
    if (r < 1 || r > d)
        throw InvalidParameters("r must lie in 1..d");
    require_xi0(nu, rho.base, w);
    const SimplicialComplex& Kp = cone_nu.complex;
    int k = d - r + 1;
    std::vector<int> to_delta = invert(proj.to_cone, Kp.num_vertices());
    PivotCompatibleResult pcs = pivot_compatible_set(cone_nu, {proj.apex}, k);
    const PivotalOrder& po = pcs.order;

    const auto& ridges = nu.complex.faces(d - 1);
    std::vector<QuadExt> zw(ridges.size());
    parallel_for(ridges.size(), [&](std::size_t g) { zw[g] = zeta_w(nu, rho, w, ridges[g]); });

    // Σ ζ_w(G) over ridges G ⊇ F with X ⊄ G, F and X in cone ids
    auto ridge_sum = [&](const Face& f, const Face& x) {
        QuadExt s;
        auto mf = map_face(f, to_delta);
        if (!mf)
            return s;
        auto mx = map_face(x, to_delta);
        for (std::size_t g = 0; g < ridges.size(); ++g)
            if (face_contains(ridges[g], mf->first) && (!mx || !face_contains(ridges[g], mx->first)))
                s += zw[g];
        return s;
    };

    const auto& kfaces = Kp.faces(k);
    CruxReport rep;
    rep.r = r;
    rep.k = k;
    rep.swaps = pcs.swaps;
    XiTable& xi = rep.xi;
    xi.k = k;
    xi.rows = Kp.faces(k - 1);
    for (std::size_t t : po.nonpivots)
        xi.columns.push_back(kfaces[t]);
    xi.M = QuadMatrix(xi.rows.size(), xi.columns.size());
    parallel_for(xi.rows.size(), [&](std::size_t fi) {
        const Face& F = xi.rows[fi];
        std::vector<std::pair<std::size_t, QuadExt> > hats;
        for (std::size_t p = 0; p < po.pivots.size(); ++p)
        {
            const Face& hh = kfaces[po.pivots[p]];
            if (face_contains(hh, F))
                hats.emplace_back(p, ridge_sum(F, hh));
        }
        for (std::size_t t = 0; t < xi.columns.size(); ++t)
        {
            const Face& H = xi.columns[t];
            QuadExt v;
            if (face_contains(H, F))
                v += ridge_sum(F, H);
            for (const auto& [p, s] : hats)
                if (po.rhat(p, t) != 0)
                    v -= QuadExt(po.rhat(p, t)) * s;
            xi.M(fi, t) = v;
        }
    });
    xi.zero_off_base = true;
    for (std::size_t fi = 0; fi < xi.rows.size(); ++fi)
        if (face_contains(xi.rows[fi], {proj.apex}))
            for (std::size_t t = 0; t < xi.columns.size(); ++t)
                if (!xi.M(fi, t).is_zero())
                    xi.zero_off_base = false;
    rep.m_rank = quad_rank(xi.M);
    rep.expected = static_cast<std::size_t>(f_h_g_vectors(Kp).h.at(k + 1));
    rep.full_rank = rep.m_rank == rep.expected && po.nullity() == rep.expected;

    std::vector<RatVector> basis = stress_basis(cone_nu, r);
    rep.psi_dim = basis.size();
    QuadMatrix images(xi.rows.size(), basis.size());
    rep.formula_agrees = true;
    for (std::size_t j = 0; j < basis.size(); ++j)
    {
        const RatVector& x = basis[j];
        for (std::size_t fi = 0; fi < xi.rows.size(); ++fi)
        {
            const Face& F = xi.rows[fi];
            QuadExt direct;
            for (std::size_t h = 0; h < kfaces.size(); ++h)
                if (x[h] != 0 && face_contains(kfaces[h], F))
                    direct += ridge_sum(F, kfaces[h]) * QuadExt(x[h]);
            QuadExt via;
            for (std::size_t t = 0; t < xi.columns.size(); ++t)
                via += xi.M(fi, t) * QuadExt(x[po.nonpivots[t]]);
            if (direct != via)
                rep.formula_agrees = false;
            images(fi, j) = direct;
        }
    }
    rep.phi_rank = quad_rank(images);
    rep.injective = rep.phi_rank == rep.psi_dim;
    std::vector<RatVector> target = stress_basis(cone_nu, r + 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
    {
        RatVector v;
        bool rational = true;
        for (std::size_t fi = 0; fi < xi.rows.size(); ++fi)
        {
            rational = rational && images(fi, j).is_rational();
            v.push_back(images(fi, j).rational_part());
        }
        if (rational && span_contains(target, {v}, xi.rows.size()))
            ++rep.images_in_psi;
    }
    return rep;
}

RatVector random_weights(const SimplicialComplex& K, const Face& base, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(1, 9);
    std::bernoulli_distribution neg(0.5);
    RatVector w(K.num_vertices(), Rational(0));
    for (int v = 0; v < K.num_vertices(); ++v)
        if (!face_contains(base, {v}))
            w[v] = neg(rng) ? -dist(rng) : dist(rng);
    return w;
}

ConeSetup cone_setup(const SimplicialComplex& K, std::uint64_t seed, long bound)
{
    ConeSetup c;
    Realization raw = realize_random(cone(K, kConeApex), seed, bound);
    ConeProjection p0 = cone_and_project(raw, kConeApex);
    std::vector<Rational> lambda(raw.coords.size(), Rational(1));
    for (std::size_t u = 0; u < p0.to_cone.size(); ++u)
        lambda[p0.to_cone[u]] = 1 / p0.base.coords[u].back();
    c.cone_nu = scaled(raw, lambda);
    c.proj = cone_and_project(c.cone_nu, kConeApex, p0.ell);
    c.rho = pl_orientation(c.proj.base);
    c.w = random_weights(c.proj.base.complex, c.rho.base, seed);
    return c;
}

CruxCheckReport technical_crux_check(const SimplicialComplex& K, std::uint64_t seed, int max_redraws, long bound)
{
    int d = K.dim();
    CruxCheckReport rep;
    for (int attempt = 0; attempt < std::max(1, max_redraws); ++attempt)
    {
        std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
        rep.draws = attempt + 1;
        ConeSetup c;
        try
        {
            c = cone_setup(K, s, bound);
        }
        catch (const DegenerateProjection&)
        {
            continue;
        }
        catch (const SingularFacetMatrix&)
        {
            continue;
        }
        rep.per_r.clear();
        rep.seed_used = s;
        rep.all_full_rank = true;
        rep.all_injective = true;
        for (int r = 1; r <= (d + 2) / 2; ++r)
        {
            rep.per_r.push_back(technical_crux(c.cone_nu, c.proj, c.rho, c.w, r));
            rep.all_full_rank = rep.all_full_rank && rep.per_r.back().full_rank;
            rep.all_injective = rep.all_injective && rep.per_r.back().injective;
        }
        rep.verdict = rep.all_full_rank && rep.all_injective;
        if (rep.verdict)
            break;
    }
    return rep;
}

DiagramReport wlp_diagram_check(const SimplicialComplex& K, std::uint64_t seed, int trials, long bound)
{
    DiagramReport rep;
    rep.crux = technical_crux_check(K, seed, 10, bound);
    rep.seed = rep.crux.seed_used;
    ConeSetup c = cone_setup(K, rep.seed, bound);
    const Realization& nu = c.proj.base;
    int d = nu.d;
    rep.w = c.w;

    RatVector om(nu.complex.f(d - 1), Rational(0));
    for (int v = 0; v < nu.complex.num_vertices(); ++v)
        if (c.w[v] != 0)
        {
            StressVector s = lifting_to_stress(nu, c.rho, basis_lifting(nu, c.rho.base, v));
            for (std::size_t g = 0; g < om.size(); ++g)
                om[g] += c.w[v] * s.values[g];
        }
    StressVector omega{1, d, om};
    const auto& ridges = nu.complex.faces(d - 1);
    rep.zeta_matches_omega = true;
    for (std::size_t g = 0; g < ridges.size(); ++g)
        if (zeta_w(nu, c.rho, c.w, ridges[g]) != QuadExt(om[g]))
            rep.zeta_matches_omega = false;
    StressAlgebra alg(nu);
    rep.omega_in_psi = span_contains(alg.space().basis[1], {om}, om.size());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::vector<int> id = identity_map(nu.complex.num_vertices());
    rep.commutes = rep.zeta_matches_omega;
    for (int r = 1; r <= d + 1; ++r)
    {
        int rc = d + 2 - r;
        SkeletalChainComplex src = skeletal_complex(nu, rc);
        SkeletalChainComplex dst = skeletal_complex(nu, rc - 1);
        QuadMatrix phi = phi_matrices(nu, src, dst, nu, c.rho, c.w, id)[rc - 1];
        const auto& basis = alg.space().basis[r - 1];
        RatMatrix mult = multiplication_matrix(alg, omega, r);

        auto phi_star = [&](const RatVector& x) {
            std::vector<QuadExt> xq(x.begin(), x.end());
            RatVector chain = src.dim(rc - 1) ? stress_to_chain(src, xq) : RatVector();
            std::vector<QuadExt> img = phi * std::vector<QuadExt>(chain.begin(), chain.end());
            return chain_to_stress(dst, img);
        };
        auto same = [](const std::vector<QuadExt>& a, const RatVector& b) {
            if (a.size() != b.size())
                return false;
            for (std::size_t t = 0; t < a.size(); ++t)
                if (a[t] != QuadExt(b[t]))
                    return false;
            return true;
        };

        DiagramDegree dd;
        dd.r = r;
        dd.source_dim = basis.size();
        dd.matrices_equal = true;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (!same(phi_star(basis[j]), mult.column(j)))
                dd.matrices_equal = false;
        dd.random_equal = true;
        for (int t = 0; t < trials && !basis.empty(); ++t)
        {
            RatVector x(basis[0].size(), Rational(0));
            for (const RatVector& b : basis)
            {
                Rational cf = coef(rng);
                for (std::size_t h = 0; h < x.size(); ++h)
                    x[h] += cf * b[h];
            }
            StressVector prod = alg.multiply(omega, StressVector{r - 1, d, x});
            if (!same(phi_star(x), prod.values))
                dd.random_equal = false;
        }
        RatVector zero(nu.complex.f(d + 1 - r), Rational(0));
        StressVector zprod = alg.multiply(omega, StressVector{r - 1, d, zero});
        dd.zero_equal = same(phi_star(zero), zprod.values);
        for (const Rational& z : zprod.values)
            dd.zero_equal = dd.zero_equal && z == 0;
        dd.omega_rank = rat_rank(mult);
        dd.injective = dd.omega_rank == dd.source_dim;
        rep.commutes = rep.commutes && dd.matrices_equal && dd.random_equal && dd.zero_equal;
        rep.degrees.push_back(dd);
    }
    rep.degrees_match = !rep.crux.per_r.empty();
    for (const CruxReport& cr : rep.crux.per_r)
        if (cr.injective != rep.degrees.at(cr.r - 1).injective)
            rep.degrees_match = false;
    return rep;
}

}   // namespace stresslab
