/**
 * Stress algebra.
 */
#include "stresslab/algebra.hpp"

#include <algorithm>
#include <random>
#include "stresslab/parallel.hpp"

namespace stresslab {

namespace {

bool spans(const Realization& nu, const Face& g, const Face& h)
{
    Face u = face_union(g, h);
    if (static_cast<int>(u.size()) < nu.ambient())
        return false;
    std::vector<RatVector> rows;
    for (int v : u)
        rows.push_back(nu.coords[v]);
    return span_dim(rows, nu.ambient()) == static_cast<std::size_t>(nu.ambient());
}

/** Row basis of the span. */
std::vector<RatVector> span_basis(const std::vector<RatVector>& vs, std::size_t n)
{
    if (vs.empty())
        return {};
    RrefResult rr = rat_rref(rows_matrix(vs, n));
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        out.push_back(rr.R.row(i));
    return out;
}

std::vector<RatVector> columns(const RatMatrix& m)
{
    std::vector<RatVector> out;
    for (std::size_t j = 0; j < m.cols; ++j)
        out.push_back(m.column(j));
    return out;
}

RatVector draw_omega(std::size_t n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> c(-9, 9);
    RatVector w(n);
    for (auto& x : w)
    {
        int v = 0;
        while (v == 0)
            v = c(rng);
        x = v;
    }
    return w;
}

int ceil_half(int d) { return (d + 2) / 2; }

}   // namespace

std::vector<Face> all_faces(const SimplicialComplex& K)
{
    std::vector<Face> out;
    for (int k = -1; k <= K.dim(); ++k)
        for (const Face& f : K.faces(k))
            out.push_back(f);
    return out;
}

PairSet pf_pairs(const Realization& nu, const Face& f)
{
    const SimplicialComplex& K = nu.complex;
    if (!K.contains(f))
        throw FaceNotFound("face is not in the complex");
    std::vector<Face> star;
    for (const Face& g : all_faces(K))
        if (face_contains(g, f))
            star.push_back(g);
    PairSet out;
    out.base = f;
    for (const Face& g : star)
        for (const Face& h : star)
            if (face_intersection(g, h) == f && spans(nu, g, h))
                out.pairs.insert({g, h});
    return out;
}

std::set<FacePair> a_pairs(const Realization& nu, const FacePair& p)
{
    const SimplicialComplex& K = nu.complex;
    const auto& [g, h] = p;
    bool empty_side = face_intersection(g, h).empty() && spans(nu, g, h);
    std::set<FacePair> out;
    auto keep = [&](const Face& a, const Face& b) {
        if (!empty_side || face_intersection(a, b).size() == 1)
            out.insert({a, b});
    };
    for (const Face& hh : K.cofacets(h))
        keep(g, hh);
    for (const Face& gg : K.cofacets(g))
        keep(gg, h);
    return out;
}

DoubleCountingReport double_counting(const Realization& nu, const Face& f)
{
    const SimplicialComplex& K = nu.complex;
    DoubleCountingReport rep;
    rep.base = f;
    for (const Face& F : K.cofacets(f))
    {
        PairSet p = pf_pairs(nu, F);
        rep.lhs.insert(p.pairs.begin(), p.pairs.end());
    }
    for (const FacePair& pp : pf_pairs(nu, f).pairs)
    {
        auto a = a_pairs(nu, pp);
        rep.rhs.insert(a.begin(), a.end());
    }
    std::set_difference(rep.lhs.begin(), rep.lhs.end(), rep.rhs.begin(), rep.rhs.end(),
                        std::back_inserter(rep.only_lhs));
    std::set_difference(rep.rhs.begin(), rep.rhs.end(), rep.lhs.begin(), rep.lhs.end(),
                        std::back_inserter(rep.only_rhs));
    return rep;
}

bool double_counting_check(const Realization& nu, const Face& f)
{
    return double_counting(nu, f).equal();
}

// ------------------------------------------------------------------ //
//                             The algebra                            //
// ------------------------------------------------------------------ //

StressAlgebra::StressAlgebra(Realization nu) : StressAlgebra(nu, stress_space(nu)) {}

StressAlgebra::StressAlgebra(Realization nu, GradedStressSpace space)
    : nu_(std::move(nu)), space_(std::move(space))
{
    const SimplicialComplex& K = nu_.complex;
    int d = nu_.d;
    std::vector<std::pair<int, int> > keys;
    for (int r = 0; r <= d + 1; ++r)
        for (int s = 0; r + s <= d + 1; ++s)
            keys.push_back({r, s});
    std::vector<std::vector<std::vector<std::pair<std::size_t, std::size_t> > > > built(keys.size());
    parallel_for(keys.size(), [&](std::size_t i) {
        auto [r, s] = keys[i];
        int gd = d - r, hd = d - s, fd = d - r - s;
        if (gd > K.dim() || hd > K.dim())
        {
            built[i].assign(fd <= K.dim() ? K.f(fd) : 0, {});
            return;
        }
        const auto& G = K.faces(gd);
        const auto& H = K.faces(hd);
        std::vector<std::vector<std::pair<std::size_t, std::size_t> > > t(K.f(fd));
        for (std::size_t a = 0; a < G.size(); ++a)
            for (std::size_t b = 0; b < H.size(); ++b)
            {
                Face I = face_intersection(G[a], H[b]);
                if (static_cast<int>(I.size()) - 1 != fd)
                    continue;
                int idx = K.index(I);
                if (idx < 0 || !spans(nu_, G[a], H[b]))
                    continue;
                t[idx].push_back({a, b});
            }
        built[i] = std::move(t);
    });
    for (std::size_t i = 0; i < keys.size(); ++i)
        tables_[keys[i]] = std::move(built[i]);
}

const std::vector<std::vector<std::pair<std::size_t, std::size_t> > >& StressAlgebra::table(int r, int s) const
{
    auto it = tables_.find({r, s});
    if (it == tables_.end())
        throw DimensionMismatch("no product table for these degrees");
    return it->second;
}

StressVector StressAlgebra::multiply(const StressVector& a, const StressVector& b) const
{
    int d = nu_.d;
    if (a.d != d || b.d != d)
        throw DimensionMismatch("stresses belong to a different realization");
    int r = a.degree, s = b.degree;
    if (r + s > d + 1)
        return StressVector{r + s, d, {}};
    if (a.values.size() != nu_.complex.f(d - r) || b.values.size() != nu_.complex.f(d - s))
        throw DimensionMismatch("stress vector has the wrong length");
    const auto& t = table(r, s);
    StressVector out{r + s, d, RatVector(t.size(), Rational(0))};
    for (std::size_t f = 0; f < t.size(); ++f)
        for (const auto& [g, h] : t[f])
            if (a.values[g] != 0 && b.values[h] != 0)
                out.values[f] += a.values[g] * b.values[h];
    return out;
}

StressVector StressAlgebra::degree_one(const RatVector& coeffs) const
{
    return space_.combination(1, coeffs);
}

StressVector stress_product(const StressVector& a, const StressVector& b, const Realization& nu)
{
    GradedStressSpace empty;
    empty.d = nu.d;
    empty.basis.resize(nu.d + 2);
    return StressAlgebra(nu, empty).multiply(a, b);
}

RatMatrix multiplication_matrix(const StressAlgebra& alg, const StressVector& omega, int r)
{
    const auto& src = alg.space().basis.at(r - 1);
    std::size_t rows = r <= alg.d() + 1 ? alg.realization().complex.f(alg.d() - r) : 0;
    RatMatrix M(rows, src.size());
    for (std::size_t j = 0; j < src.size(); ++j)
    {
        StressVector p = alg.multiply(StressVector{r - 1, alg.d(), src[j]}, omega);
        for (std::size_t i = 0; i < rows; ++i)
            M(i, j) = p.values[i];
    }
    return M;
}

UnitReport unit_action(const StressAlgebra& alg)
{
    const GradedStressSpace& S = alg.space();
    int d = alg.d();
    UnitReport rep;
    if (S.dim(0) == 0)
        return rep;
    StressVector e = S.element(0, 0);
    rep.acts_as_scalar = true;
    rep.unital = true;
    for (int s = 0; s <= d + 1; ++s)
    {
        std::optional<Rational> c;
        bool ok = true;
        for (std::size_t i = 0; ok && i < S.dim(s); ++i)
        {
            StressVector b = S.element(s, i);
            StressVector p = alg.multiply(e, b);
            for (std::size_t t = 0; ok && t < b.values.size(); ++t)
            {
                if (b.values[t] == 0)
                {
                    ok = p.values[t] == 0;
                    continue;
                }
                Rational q = p.values[t] / b.values[t];
                if (!c)
                    c = q;
                ok = *c == q;
            }
        }
        if (ok && !c)
            c = Rational(1);
        rep.scalar.push_back(ok ? c : std::nullopt);
        rep.acts_as_scalar = rep.acts_as_scalar && ok;
        rep.unital = rep.unital && ok && *c == 1;
    }
    return rep;
}

GenerationReport hilbert_and_generation(const StressAlgebra& alg)
{
    const GradedStressSpace& S = alg.space();
    int d = alg.d();
    GenerationReport rep;
    rep.hilbert = S.hilbert();
    rep.product_span.assign(d + 2, 0);
    rep.products_in_psi.assign(d + 2, true);
    rep.product_span[0] = S.dim(0);
    rep.product_span[1] = S.dim(1);
    std::vector<RatVector> cur = S.basis[1];
    bool ok = true;
    for (int r = 2; r <= d + 1; ++r)
    {
        std::size_t n = alg.realization().complex.f(d - r);
        std::vector<RatVector> prods;
        for (const auto& x : cur)
            for (const auto& y : S.basis[1])
                prods.push_back(alg.multiply(StressVector{r - 1, d, x}, StressVector{1, d, y}).values);
        cur = span_basis(prods, n);
        rep.product_span[r] = cur.size();
        rep.products_in_psi[r] = span_contains(S.basis[r], cur, n);
        ok = ok && rep.products_in_psi[r] && cur.size() == S.dim(r);
    }
    rep.generated_in_degree_one = ok;
    return rep;
}

SocleReport socle_and_gorenstein(const StressAlgebra& alg)
{
    const GradedStressSpace& S = alg.space();
    int d = alg.d();
    SocleReport rep;
    rep.socle_dims.assign(d + 2, 0);
    for (int r = 0; r <= d + 1; ++r)
    {
        std::size_t m = S.dim(r);
        if (r == d + 1 || S.dim(1) == 0 || m == 0)
        {
            rep.socle_dims[r] = m;
            continue;
        }
        std::size_t rows = alg.realization().complex.f(d - r - 1);
        RatMatrix M(rows * S.dim(1), m);
        for (std::size_t j = 0; j < S.dim(1); ++j)
            for (std::size_t i = 0; i < m; ++i)
            {
                StressVector p = alg.multiply(S.element(r, i), S.element(1, j));
                for (std::size_t t = 0; t < rows; ++t)
                    M(j * rows + t, i) = p.values[t];
            }
        rep.socle_dims[r] = m - rat_rank(M);
    }
    for (auto x : rep.socle_dims)
        rep.total += x;
    rep.gorenstein = rep.total == 1;
    return rep;
}

LefschetzTrial lefschetz_trial(const StressAlgebra& alg, const RatVector& omega)
{
    const GradedStressSpace& S = alg.space();
    int d = alg.d();
    LefschetzTrial t;
    t.omega = omega;
    StressVector w = alg.degree_one(omega);
    t.weak = true;
    t.pattern = true;
    for (int r = 1; r <= d + 1; ++r)
    {
        RatMatrix M = multiplication_matrix(alg, w, r);
        std::size_t rank = rat_rank(M);
        bool in_psi = span_contains(S.basis[r], columns(M), M.rows);
        bool inj = rank == S.dim(r - 1);
        bool surj = in_psi && rank == S.dim(r);
        t.ranks.push_back(rank);
        t.injective.push_back(inj);
        t.surjective.push_back(surj);
        t.image_in_psi.push_back(in_psi);
        t.weak = t.weak && (inj || surj);
        t.pattern = t.pattern && (r <= ceil_half(d) ? inj : surj);
    }
    return t;
}

LefschetzReport wlp_check(const StressAlgebra& alg, int trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    LefschetzReport rep;
    rep.verdict_weak = trials > 0;
    rep.verdict_pattern = trials > 0;
    for (int i = 0; i < trials; ++i)
    {
        LefschetzTrial t = lefschetz_trial(alg, draw_omega(alg.space().dim(1), rng));
        rep.verdict_weak = rep.verdict_weak && t.weak;
        rep.verdict_pattern = rep.verdict_pattern && t.pattern;
        rep.trials.push_back(std::move(t));
    }
    return rep;
}

std::vector<long long> quotient_g_vector(const StressAlgebra& alg, const RatVector& omega)
{
    const GradedStressSpace& S = alg.space();
    int d = alg.d();
    StressVector w = alg.degree_one(omega);
    for (int r = 1; r <= std::min(ceil_half(d), d + 1); ++r)
        if (rat_rank(multiplication_matrix(alg, w, r)) != S.dim(r - 1))
            throw NotInjectiveAtLowDegrees("multiplication by omega is not injective into degree "
                                           + std::to_string(r));
    std::vector<long long> g{static_cast<long long>(S.dim(0))};
    for (int i = 1; i <= (d + 1) / 2; ++i)
    {
        RatMatrix M = multiplication_matrix(alg, w, i);
        std::vector<RatVector> im = columns(M);
        std::size_t n = M.rows;
        std::size_t dim_im = span_dim(im, n);
        std::vector<RatVector> both = S.basis[i];
        both.insert(both.end(), im.begin(), im.end());
        std::size_t dim_sum = span_dim(both, n);
        long long meet = static_cast<long long>(S.dim(i) + dim_im) - static_cast<long long>(dim_sum);
        g.push_back(static_cast<long long>(S.dim(i)) - meet);
    }
    return g;
}

Integer macaulay_bound(const Integer& n, int i)
{
    if (i < 1)
        throw InvalidParameters("Macaulay bound needs i >= 1");
    Integer rest = n, out = 0;
    auto binom = [](const Integer& a, long k) {
        if (a < k)
            return Integer(0);
        Integer r;
        mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), k);
        return r;
    };
    for (long k = i; k >= 1 && rest > 0; --k)
    {
        Integer lo = k, hi = k + 1;
        while (binom(hi, k) <= rest)
            hi *= 2;
        while (hi - lo > 1)
        {
            Integer mid = (lo + hi) / 2;
            (binom(mid, k) <= rest ? lo : hi) = mid;
        }
        Integer a = lo;
        rest -= binom(a, k);
        out += binom(a + 1, k + 1);
    }
    return out;
}

bool macaulay_check(const std::vector<long long>& v)
{
    if (v.empty() || v[0] != 1)
        return false;
    for (long long x : v)
        if (x < 0)
            return false;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (Integer(static_cast<long>(v[i + 1])) > macaulay_bound(Integer(static_cast<long>(v[i])), static_cast<int>(i)))
            return false;
    return true;
}

StrongLefschetzReport sl_check(const StressAlgebra& alg, const RatVector& omega)
{
    const GradedStressSpace& S = alg.space();
    int d = alg.d();
    StressVector w = alg.degree_one(omega);
    StrongLefschetzReport::Trial t;
    t.omega = omega;
    t.strong = true;
    for (int r = 0; 2 * r < d + 1; ++r)
    {
        int target = d + 1 - r;
        std::vector<RatVector> images;
        for (std::size_t i = 0; i < S.dim(r); ++i)
        {
            StressVector x = S.element(r, i);
            for (int k = 0; k < d + 1 - 2 * r; ++k)
                x = alg.multiply(x, w);
            images.push_back(x.values);
        }
        std::size_t n = alg.realization().complex.f(d - target);
        std::size_t rank = span_dim(images, n);
        t.ranks.push_back(rank);
        bool ok = rank == S.dim(r) && rank == S.dim(target) && span_contains(S.basis[target], images, n);
        t.strong = t.strong && ok;
    }
    StrongLefschetzReport rep;
    rep.verdict = t.strong;
    rep.trials.push_back(t);
    return rep;
}

StrongLefschetzReport sl_check_experimental(const StressAlgebra& alg, int trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    StrongLefschetzReport rep;
    rep.verdict = trials > 0;
    for (int i = 0; i < trials; ++i)
    {
        StrongLefschetzReport one = sl_check(alg, draw_omega(alg.space().dim(1), rng));
        rep.verdict = rep.verdict && one.verdict;
        rep.trials.push_back(one.trials[0]);
    }
    return rep;
}

GConjectureReport g_conjecture_verdict(const SimplicialComplex& K, const GConjectureOptions& opt)
{
    GConjectureReport rep;
    rep.homology_sphere = classify(K, Field::Q).is_homology_sphere;
    if (!rep.homology_sphere)
        throw NotAHomologySphere("complex fails the rational homology sphere test");
    std::optional<Realization> chosen;
    for (int attempt = 0; attempt < opt.max_retries; ++attempt)
    {
        Realization nu = realize_random(K, opt.seed + attempt, opt.bound);
        ++rep.draws;
        bool generic = false;
        try
        {
            generic = q_genericity_check(nu, opt.prime_bound).verdict;
        }
        catch (const FactorizationIncomplete&)
        {
        }
        chosen = nu;
        if (generic)
        {
            rep.q_generic = true;
            break;
        }
    }
    if (!rep.q_generic && opt.strict_genericity)
        throw GenericityNotAchieved("no Q-generic draw within " + std::to_string(opt.max_retries) + " retries");
    rep.realization = *chosen;
    rep.general_position = in_general_position(rep.realization);

    StressAlgebra alg(rep.realization);
    FaceVector fv = f_h_g_vectors(K);
    rep.hilbert = alg.space().hilbert();
    rep.h_vector = fv.h;
    rep.g_vector = fv.g;
    rep.hilbert_matches_h = rep.hilbert.size() == fv.h.size();
    for (std::size_t i = 0; rep.hilbert_matches_h && i < fv.h.size(); ++i)
        rep.hilbert_matches_h = static_cast<long long>(rep.hilbert[i]) == fv.h[i];
    rep.wlp = wlp_check(alg, opt.trials, opt.seed);
    if (!rep.wlp.trials.empty())
    {
        try
        {
            rep.quotient_g = quotient_g_vector(alg, rep.wlp.trials[0].omega);
        }
        catch (const NotInjectiveAtLowDegrees&)
        {
        }
    }
    rep.quotient_matches_g = !rep.quotient_g.empty() && rep.quotient_g == rep.g_vector;
    rep.m_vector = !rep.quotient_g.empty() && macaulay_check(rep.quotient_g);
    rep.verdict = rep.homology_sphere && rep.hilbert_matches_h && rep.wlp.verdict_weak && rep.wlp.verdict_pattern
                  && rep.quotient_matches_g && rep.m_vector;
    return rep;
}

}   // namespace stresslab
