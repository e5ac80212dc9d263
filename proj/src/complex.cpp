#include "stresslab/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include "stresslab/numeric.hpp"

namespace stresslab {

Face face_union(const Face& a, const Face& b)
{
    Face out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Face face_intersection(const Face& a, const Face& b)
{
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Face face_difference(const Face& a, const Face& b)
{
    Face out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool face_contains(const Face& big, const Face& small)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Face face_with(const Face& f, int v)
{
    Face out = f;
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

Face face_without(const Face& f, int v)
{
    Face out;
    out.reserve(f.size());
    for (int u : f)
        if (u != v)
            out.push_back(u);
    return out;
}

// ------------------------------------------------------------------ //
//                          SimplicialComplex                         //
// ------------------------------------------------------------------ //
SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string> >& facets)
{
    if (facets.empty())
        throw InvalidParameters("facet list is empty");
    SimplicialComplex K;
    std::set<std::string> all;
    for (const auto& F : facets)
    {
        std::set<std::string> s(F.begin(), F.end());
        if (s.size() != F.size())
            throw DuplicateOrNestedFacet("facet repeats a vertex");
        all.insert(F.begin(), F.end());
    }
    K.labels_.assign(all.begin(), all.end());
    for (std::size_t i = 0; i < K.labels_.size(); ++i)
        K.label_index_[K.labels_[i]] = static_cast<int>(i);

    for (const auto& F : facets)
    {
        Face f;
        for (const auto& l : F)
            f.push_back(K.label_index_.at(l));
        std::sort(f.begin(), f.end());
        K.facets_.push_back(f);
    }
    for (std::size_t i = 0; i < K.facets_.size(); ++i)
        for (std::size_t j = 0; j < K.facets_.size(); ++j)
            if (i != j && face_contains(K.facets_[j], K.facets_[i]))
                throw DuplicateOrNestedFacet("facet " + std::to_string(i) + " is contained in facet "
                                             + std::to_string(j));

    std::size_t top = 0;
    for (const Face& f : K.facets_)
        top = std::max(top, f.size());
    std::vector<std::set<Face> > by_dim(top + 1);
    for (const Face& f : K.facets_)
    {
        std::size_t m = f.size();
        for (unsigned long mask = 0; mask < (1UL << m); ++mask)
        {
            Face g;
            for (std::size_t b = 0; b < m; ++b)
                if (mask & (1UL << b))
                    g.push_back(f[b]);
            by_dim[g.size()].insert(g);
        }
    }
    K.faces_.resize(top + 1);
    K.face_index_.resize(top + 1);
    for (std::size_t s = 0; s <= top; ++s)
    {
        K.faces_[s].assign(by_dim[s].begin(), by_dim[s].end());
        for (std::size_t i = 0; i < K.faces_[s].size(); ++i)
            K.face_index_[s][K.faces_[s][i]] = static_cast<int>(i);
    }
    return K;
}

int SimplicialComplex::vertex_id(const std::string& label) const
{
    auto it = label_index_.find(label);
    if (it == label_index_.end())
        throw FaceNotFound("unknown vertex '" + label + "'");
    return it->second;
}

const std::vector<Face>& SimplicialComplex::faces(int k) const
{
    static const std::vector<Face> empty;
    if (k + 1 < 0 || k + 1 >= static_cast<int>(faces_.size()))
        return empty;
    return faces_[k + 1];
}

std::size_t SimplicialComplex::f(int k) const
{
    return faces(k).size();
}

int SimplicialComplex::index(const Face& f) const
{
    if (f.size() >= face_index_.size())
        return -1;
    auto it = face_index_[f.size()].find(f);
    return it == face_index_[f.size()].end() ? -1 : it->second;
}

std::vector<int> SimplicialComplex::link_vertices(const Face& f) const
{
    std::vector<int> out;
    for (const Face& g : cofacets(f))
        for (int v : g)
            if (!std::binary_search(f.begin(), f.end(), v))
                out.push_back(v);
    return out;
}

std::vector<Face> SimplicialComplex::cofacets(const Face& f) const
{
    std::vector<Face> out;
    if (!contains(f))
        return out;
    for (int v = 0; v < num_vertices(); ++v)
    {
        if (std::binary_search(f.begin(), f.end(), v))
            continue;
        Face g = face_with(f, v);
        if (contains(g))
            out.push_back(g);
    }
    return out;
}

std::vector<Face> SimplicialComplex::facets_containing(const Face& f) const
{
    std::vector<Face> out;
    for (const Face& F : facets_)
        if (face_contains(F, f))
            out.push_back(F);
    return out;
}

std::vector<std::string> SimplicialComplex::face_labels(const Face& f) const
{
    std::vector<std::string> out;
    for (int v : f)
        out.push_back(labels_.at(v));
    return out;
}

Face SimplicialComplex::face_from_labels(const std::vector<std::string>& labels) const
{
    Face f;
    for (const auto& l : labels)
        f.push_back(vertex_id(l));
    std::sort(f.begin(), f.end());
    return f;
}

std::vector<std::vector<std::string> > SimplicialComplex::facet_labels() const
{
    std::vector<std::vector<std::string> > out;
    for (const Face& f : facets_)
        out.push_back(face_labels(f));
    return out;
}

// ------------------------------------------------------------------ //
//                       Combinatorial operations                     //
// ------------------------------------------------------------------ //
namespace {

void require_face(const SimplicialComplex& K, const Face& f)
{
    if (!K.contains(f))
        throw FaceNotFound("face is not in the complex");
}

SimplicialComplex from_id_facets(const SimplicialComplex& K, const std::vector<Face>& facets)
{
    std::vector<std::vector<std::string> > lf;
    for (const Face& f : facets)
        lf.push_back(K.face_labels(f));
    return SimplicialComplex::from_facets(lf);
}

std::vector<Face> maximal_faces(std::vector<Face> faces)
{
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    std::vector<Face> out;
    for (const Face& f : faces)
    {
        bool covered = false;
        for (const Face& g : out)
            if (face_contains(g, f))
            {
                covered = true;
                break;
            }
        if (!covered)
            out.push_back(f);
    }
    return out;
}

}   // namespace

SimplicialComplex link(const SimplicialComplex& K, const Face& f)
{
    require_face(K, f);
    std::vector<Face> lf;
    for (const Face& F : K.facets_containing(f))
        lf.push_back(face_difference(F, f));
    return from_id_facets(K, maximal_faces(lf));
}

std::vector<Face> star(const SimplicialComplex& K, const Face& f)
{
    require_face(K, f);
    std::vector<Face> out;
    for (int k = static_cast<int>(f.size()) - 1; k <= K.dim(); ++k)
        for (const Face& g : K.faces(k))
            if (face_contains(g, f))
                out.push_back(g);
    return out;
}

SimplicialComplex closed_star(const SimplicialComplex& K, const Face& f)
{
    require_face(K, f);
    return from_id_facets(K, K.facets_containing(f));
}

SimplicialComplex antistar(const SimplicialComplex& K, const Face& f)
{
    require_face(K, f);
    std::vector<Face> keep;
    for (int k = -1; k <= K.dim(); ++k)
        for (const Face& g : K.faces(k))
            if (!face_contains(g, f))
                keep.push_back(g);
    if (keep.empty())
        throw InvalidParameters("antistar of the empty face is empty");
    return from_id_facets(K, maximal_faces(keep));
}

SimplicialComplex cone(const SimplicialComplex& K, const std::string& apex)
{
    for (const auto& l : K.labels())
        if (l == apex)
            throw VertexCollision("apex label '" + apex + "' already used");
    auto facets = K.facet_labels();
    for (auto& F : facets)
        F.push_back(apex);
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L)
{
    std::set<std::string> a(K.labels().begin(), K.labels().end());
    for (const auto& l : L.labels())
        if (a.count(l))
            throw VertexCollision("label '" + l + "' occurs in both complexes");
    std::vector<std::vector<std::string> > facets;
    for (const auto& F : K.facet_labels())
        for (const auto& G : L.facet_labels())
        {
            auto H = F;
            H.insert(H.end(), G.begin(), G.end());
            facets.push_back(H);
        }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex suspension(const SimplicialComplex& K, const std::string& north, const std::string& south)
{
    if (north == south)
        throw VertexCollision("suspension poles must differ");
    return join(K, SimplicialComplex::from_facets({{north}, {south}}));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& K)
{
    auto name = [&](const Face& f) {
        std::string s;
        for (std::size_t i = 0; i < f.size(); ++i)
            s += (i ? "." : "") + K.labels()[f[i]];
        return s;
    };
    std::vector<std::vector<std::string> > facets;
    for (const Face& F : K.facets())
    {
        if (F.empty())
            continue;
        Face perm = F;
        do
        {
            std::vector<std::string> chain;
            Face prefix;
            for (int v : perm)
            {
                prefix = face_with(prefix, v);
                chain.push_back(name(prefix));
            }
            facets.push_back(chain);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (facets.empty())
        throw InvalidParameters("cannot subdivide the empty complex");
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex simplex_boundary(int d)
{
    if (d < 1)
        throw InvalidParameters("simplex_boundary needs d >= 1");
    std::vector<std::vector<std::string> > facets;
    for (int skip = 1; skip <= d + 1; ++skip)
    {
        std::vector<std::string> F;
        for (int v = 1; v <= d + 1; ++v)
            if (v != skip)
                F.push_back(std::to_string(v));
        facets.push_back(F);
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cross_polytope_boundary(int d)
{
    if (d < 1 || d > 20)
        throw InvalidParameters("cross_polytope_boundary needs 1 <= d <= 20");
    std::vector<std::vector<std::string> > facets;
    for (unsigned long mask = 0; mask < (1UL << d); ++mask)
    {
        std::vector<std::string> F;
        for (int i = 0; i < d; ++i)
            F.push_back(((mask >> i) & 1 ? "-" : "+") + std::to_string(i + 1));
        facets.push_back(F);
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cyclic_polytope_boundary(int d, int n)
{
    if (d < 2 || n < d + 1 || n > 30)
        throw InvalidParameters("cyclic_polytope_boundary needs d >= 2 and d+1 <= n <= 30");
    std::vector<std::vector<std::string> > facets;
    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 1);
    while (true)
    {
        std::vector<bool> in(n + 2, false);
        for (int v : idx)
            in[v] = true;
        bool even = true;
        for (int i = 1; i <= n && even; ++i)
        {
            if (in[i])
                continue;
            for (int j = i + 1; j <= n; ++j)
            {
                if (in[j])
                    continue;
                int between = 0;
                for (int k = i + 1; k < j; ++k)
                    between += in[k];
                if (between % 2)
                {
                    even = false;
                    break;
                }
            }
        }
        if (even)
        {
            std::vector<std::string> F;
            for (int v : idx)
                F.push_back(std::to_string(v));
            facets.push_back(F);
        }
        int p = d - 1;
        while (p >= 0 && idx[p] == n - d + 1 + p)
            --p;
        if (p < 0)
            break;
        ++idx[p];
        for (int q = p + 1; q < d; ++q)
            idx[q] = idx[q - 1] + 1;
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex polygon(int n)
{
    if (n < 3)
        throw InvalidParameters("polygon needs n >= 3");
    std::vector<std::vector<std::string> > facets;
    for (int i = 1; i <= n; ++i)
        facets.push_back({std::to_string(i), std::to_string(i % n + 1)});
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex projective_plane_6()
{
    return SimplicialComplex::from_facets({{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"},
                                           {"1", "5", "6"}, {"1", "6", "2"}, {"2", "3", "5"},
                                           {"3", "4", "6"}, {"4", "5", "2"}, {"5", "6", "3"},
                                           {"6", "2", "4"}});
}

SimplicialComplex torus_7()
{
    std::vector<std::vector<std::string> > facets;
    for (int i = 0; i < 7; ++i)
    {
        facets.push_back({std::to_string(i), std::to_string((i + 1) % 7), std::to_string((i + 3) % 7)});
        facets.push_back({std::to_string(i), std::to_string((i + 2) % 7), std::to_string((i + 3) % 7)});
    }
    return SimplicialComplex::from_facets(facets);
}

// ------------------------------------------------------------------ //
//                             Face vectors                           //
// ------------------------------------------------------------------ //
long long binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

FaceVector f_h_g_vectors(const SimplicialComplex& K)
{
    FaceVector fv;
    int d = K.dim();
    fv.d = d;
    for (int k = 0; k <= d; ++k)
        fv.f.push_back(static_cast<long long>(K.f(k)));
    auto fm1 = [&](int i) -> long long { return i == 0 ? 1 : fv.f[i - 1]; };   // f_{i-1}
    for (int k = 0; k <= d + 1; ++k)
    {
        long long h = 0;
        for (int i = 0; i <= k; ++i)
            h += ((k - i) % 2 ? -1 : 1) * binomial(d + 1 - i, k - i) * fm1(i);
        fv.h.push_back(h);
    }
    fv.g.push_back(1);
    for (int i = 1; i <= (d + 1) / 2; ++i)
        fv.g.push_back(fv.h[i] - fv.h[i - 1]);
    return fv;
}

std::vector<long long> f_from_h(const std::vector<long long>& h)
{
    int d = static_cast<int>(h.size()) - 2;
    std::vector<long long> f;
    for (int j = 1; j <= d + 1; ++j)
    {
        long long s = 0;
        for (int i = 0; i <= j; ++i)
            s += binomial(d + 1 - i, j - i) * h[i];
        f.push_back(s);
    }
    return f;
}

// ------------------------------------------------------------------ //
//                               Homology                             //
// ------------------------------------------------------------------ //
long long BettiProfile::at(int i) const
{
    if (i + 1 < 0 || i + 1 >= static_cast<int>(beta.size()))
        return 0;
    return beta[i + 1];
}

namespace {

// rank of the boundary map from k-faces to (k-1)-faces
std::size_t boundary_rank(const SimplicialComplex& K, int k, Field field)
{
    const auto& cols = K.faces(k);
    const auto& rows = K.faces(k - 1);
    if (cols.empty() || rows.empty())
        return 0;
    if (field == Field::GF2)
    {
        std::vector<BitVector> vs;
        for (const Face& F : cols)
        {
            BitVector b(rows.size(), false);
            for (int v : F)
                b[K.index(face_without(F, v))] = true;
            vs.push_back(b);
        }
        return gf2_rank(vs);
    }
    RatMatrix M(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
    {
        const Face& F = cols[j];
        for (std::size_t p = 0; p < F.size(); ++p)
            M(K.index(face_without(F, F[p])), j) = (p % 2) ? -1 : 1;
    }
    return rat_rank(M);
}

}   // namespace

BettiProfile betti(const SimplicialComplex& K, Field field)
{
    BettiProfile b;
    b.field = field;
    int d = K.dim();
    std::vector<std::size_t> rk(d + 3, 0);   // rk[k+1] = rank of boundary on k-faces
    for (int k = 0; k <= d; ++k)
        rk[k + 1] = boundary_rank(K, k, field);
    for (int i = -1; i <= d; ++i)
    {
        long long fi = static_cast<long long>(K.f(i));
        b.beta.push_back(fi - static_cast<long long>(rk[i + 1]) - static_cast<long long>(rk[i + 2]));
    }
    return b;
}

bool is_sphere_betti(const BettiProfile& b, int dim)
{
    for (int i = -1; i < static_cast<int>(b.beta.size()) - 1; ++i)
        if (b.at(i) != (i == dim ? 1 : 0))
            return false;
    return dim < static_cast<int>(b.beta.size()) - 1;
}

Classification classify(const SimplicialComplex& K, Field field)
{
    Classification c;
    int d = K.dim();
    c.is_pure = std::all_of(K.facets().begin(), K.facets().end(),
                            [&](const Face& f) { return static_cast<int>(f.size()) == d + 1; });
    if (c.is_pure)
    {
        // dual graph connectivity through ridges
        const auto& facets = K.faces(d);
        std::vector<std::vector<int> > adj(facets.size());
        std::map<Face, std::vector<int> > by_ridge;
        for (std::size_t i = 0; i < facets.size(); ++i)
            for (int v : facets[i])
                by_ridge[face_without(facets[i], v)].push_back(static_cast<int>(i));
        bool ridges_ok = true;
        for (const auto& [r, fs] : by_ridge)
        {
            if (fs.size() != 2)
                ridges_ok = false;
            for (std::size_t a = 0; a < fs.size(); ++a)
                for (std::size_t b = a + 1; b < fs.size(); ++b)
                {
                    adj[fs[a]].push_back(fs[b]);
                    adj[fs[b]].push_back(fs[a]);
                }
        }
        std::vector<bool> seen(facets.size(), false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        std::size_t count = 1;
        while (!q.empty())
        {
            int u = q.front();
            q.pop();
            for (int w : adj[u])
                if (!seen[w])
                {
                    seen[w] = true;
                    ++count;
                    q.push(w);
                }
        }
        c.is_strongly_connected = count == facets.size();
        c.is_pseudomanifold = c.is_strongly_connected && ridges_ok && d >= 0;
    }
    if (c.is_pure)
    {
        bool manifold = true;
        for (int k = 0; k <= d && manifold; ++k)
            for (const Face& F : K.faces(k))
            {
                SimplicialComplex L = link(K, F);
                if (!is_sphere_betti(betti(L, field), d - k - 1))
                {
                    manifold = false;
                    break;
                }
            }
        c.is_homology_manifold = manifold;
        c.is_homology_sphere = manifold && is_sphere_betti(betti(K, field), d);
    }
    if (c.is_pseudomanifold)
        c.is_orientable_candidate = betti(K, Field::Q).at(d) == 1;
    return c;
}

std::vector<long long> h_prime(const SimplicialComplex& K, Field field)
{
    FaceVector fv = f_h_g_vectors(K);
    BettiProfile b = betti(K, field);
    int d = fv.d;
    std::vector<long long> hp(d + 2);
    hp[0] = 1;
    for (int j = 1; j <= d + 1; ++j)
    {
        long long s = 0;
        for (int i = 0; i <= j - 1; ++i)
            s += ((j - i - 1) % 2 ? -1 : 1) * b.at(i - 1);
        hp[j] = fv.h[j] + binomial(d + 1, j) * s;
    }
    return hp;
}

std::vector<long long> h_double_prime(const SimplicialComplex& K, Field field)
{
    std::vector<long long> hp = h_prime(K, field);
    BettiProfile b = betti(K, field);
    int d = K.dim();
    std::vector<long long> hpp = hp;
    for (int j = 0; j <= d; ++j)
        hpp[j] = hp[j] - binomial(d + 1, j) * b.at(j - 1);
    return hpp;
}

}   // namespace stresslab
