/**
 * stresslab command-line front end.
 *
 *   stresslab gen crosspoly 3 --out oct.json
 *   stresslab verify oct.json
 *   stresslab stress oct.json --seed 7
 *   stresslab gconj | wlp | gorenstein | maxwell | pivot | skeletal  oct.json
 *
 * Exit codes: 0 all gates pass, 1 some gate fails, 2 operational error.
 */
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include "CLI11.hpp"
#include "json.hpp"
#include "stresslab/io.hpp"
#include "stresslab/skeletal.hpp"

using namespace stresslab;
using json = nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct Options
{
    std::uint64_t seed = 1;
    long bound = 60;
    int trials = 3;
    int max_retries = 10;
    unsigned long prime_bound = kDefaultPrimeBound;
    bool float_fallback = false;
    bool timings = false;
    std::string out;
};

class Report
{
    public:
        Report(std::string command, const Options& opt, const std::string& inputs)
        {
            j_["schema_version"] = kSchemaVersion;
            j_["command"] = std::move(command);
            j_["inputs_digest"] = digest(inputs);
            j_["seed"] = opt.seed;
            j_["gates"] = json::array();
            j_["data"] = json::object();
        }

        void gate(const std::string& name, bool verdict, json witness = nullptr, bool approximate = false)
        {
            json g;
            g["name"] = name;
            g["verdict"] = verdict;
            g["witness"] = std::move(witness);
            if (approximate)
                g["approximate"] = true;
            j_["gates"].push_back(g);
            pass_ = pass_ && verdict;
        }

        json& data() { return j_["data"]; }
        json& root() { return j_; }
        bool pass() const { return pass_; }

    private:
        json j_;
        bool pass_ = true;
};

json rats(const RatVector& v)
{
    json a = json::array();
    for (const Rational& q : v)
        a.push_back(to_string(q));
    return a;
}

json labels(const SimplicialComplex& K, const Face& f)
{
    return K.face_labels(f);
}

json bools(const std::vector<bool>& v)
{
    json a = json::array();
    for (bool b : v)
        a.push_back(b);
    return a;
}

int emit(Report& rep, const Options& opt, std::chrono::steady_clock::time_point start)
{
    if (opt.timings)
    {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        rep.root()["timings"] = {{"total_ms", ms}};
    }
    rep.root()["verdict"] = rep.pass();
    std::string text = rep.root().dump(2) + "\n";
    if (opt.out.empty())
        std::cout << text;
    else
        write_text_file(opt.out, text);
    return rep.pass() ? 0 : 1;
}

struct Loaded
{
    ComplexFile file;
    std::string text;
};

Loaded load(const std::string& path)
{
    Loaded l;
    l.text = read_text_file(path);
    l.file = read_complex(l.text);
    return l;
}

std::string fhg_line(const SimplicialComplex& K)
{
    FaceVector fv = f_h_g_vectors(K);
    auto tuple = [](const std::vector<long long>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    return "f=" + tuple(fv.f) + " h=" + tuple(fv.h) + " g=" + tuple(fv.g);
}

int parse_int(const std::string& s)
{
    try
    {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size())
            throw InvalidParameters("not an integer: " + s);
        return v;
    }
    catch (const std::logic_error&)
    {
        throw InvalidParameters("not an integer: " + s);
    }
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params, const Options& opt)
{
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw InvalidParameters(kind + " takes " + std::to_string(n) + " parameter(s)");
    };
    ComplexFile f;
    if (kind == "simplex")
    {
        need(1);
        int d = parse_int(params[0]);
        if (d < 1)
            throw InvalidParameters("simplex needs d >= 1");
        f = {"simplex_boundary(" + params[0] + ")", simplex_boundary(d)};
    }
    else if (kind == "crosspoly")
    {
        need(1);
        int d = parse_int(params[0]);
        if (d < 1)
            throw InvalidParameters("crosspoly needs d >= 1");
        f = {"cross_polytope_boundary(" + params[0] + ")", cross_polytope_boundary(d)};
    }
    else if (kind == "cyclic")
    {
        need(2);
        f = {"cyclic(" + params[0] + "," + params[1] + ")",
             cyclic_polytope_boundary(parse_int(params[0]), parse_int(params[1]))};
    }
    else if (kind == "polygon")
    {
        need(1);
        int n = parse_int(params[0]);
        if (n < 3)
            throw InvalidParameters("polygon needs n >= 3");
        f = {"polygon(" + params[0] + ")", polygon(n)};
    }
    else if (kind == "rp2")
    {
        need(0);
        f = {"projective_plane_6", projective_plane_6()};
    }
    else if (kind == "torus")
    {
        need(0);
        f = {"torus_7", torus_7()};
    }
    else if (kind == "cone")
    {
        need(1);
        ComplexFile base = load(params[0]).file;
        f = {"cone(" + base.name + ")", cone(base.complex, kConeApex)};
    }
    else if (kind == "suspension")
    {
        need(1);
        ComplexFile base = load(params[0]).file;
        f = {"suspension(" + base.name + ")", suspension(base.complex)};
    }
    else if (kind == "barycentric")
    {
        need(1);
        ComplexFile base = load(params[0]).file;
        f = {"barycentric(" + base.name + ")", barycentric_subdivision(base.complex)};
    }
    else if (kind == "join")
    {
        need(2);
        ComplexFile a = load(params[0]).file;
        ComplexFile b = load(params[1]).file;
        f = {"join(" + a.name + "," + b.name + ")", join(a.complex, b.complex)};
    }
    else
        throw InvalidParameters("unknown kind " + kind);
    std::string text = write_complex(f);
    if (opt.out.empty())
    {
        std::cout << text;
        std::cerr << fhg_line(f.complex) << "\n";
    }
    else
    {
        write_text_file(opt.out, text);
        std::cout << fhg_line(f.complex) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& path, const std::string& field, const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Loaded l = load(path);
    const SimplicialComplex& K = l.file.complex;
    Field fld = field == "GF2" ? Field::GF2 : Field::Q;
    if (field != "Q" && field != "GF2")
        throw InvalidParameters("field must be Q or GF2");
    Report rep("verify", opt, l.text + field);
    Classification c = classify(K, fld);
    FaceVector fv = f_h_g_vectors(K);
    rep.gate("pure", c.is_pure);
    rep.gate("pseudomanifold", c.is_pseudomanifold);
    rep.gate("homology_manifold", c.is_homology_manifold);
    rep.gate("homology_sphere", c.is_homology_sphere);
    rep.gate("orientable", c.is_orientable_candidate);
    json bad = nullptr;
    int n = static_cast<int>(fv.h.size());
    for (int i = 0; i < n && bad.is_null(); ++i)
        if (fv.h[i] != fv.h[n - 1 - i])
            bad = {{"i", i}, {"h_i", fv.h[i]}, {"h_d+1-i", fv.h[n - 1 - i]}};
    rep.gate("dehn_sommerville", bad.is_null(), bad);
    rep.data()["name"] = l.file.name;
    rep.data()["field"] = field;
    rep.data()["f"] = fv.f;
    rep.data()["h"] = fv.h;
    rep.data()["g"] = fv.g;
    rep.data()["betti"] = betti(K, fld).beta;
    return emit(rep, opt, start);
}

Realization draw_or_read(const SimplicialComplex& K, const std::string& realization_path, const Options& opt,
                         std::string& inputs, bool check = true)
{
    if (realization_path.empty())
        return realize_random(K, opt.seed, opt.bound, opt.max_retries);
    std::string text = read_text_file(realization_path);
    inputs += text;
    return read_realization(text, K, check);
}

int cmd_stress(const std::string& path, const std::string& realization_path, const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Loaded l = load(path);
    const SimplicialComplex& K = l.file.complex;
    std::string inputs = l.text;
    Realization nu = draw_or_read(K, realization_path, opt, inputs, false);
    Report rep("stress", opt, inputs);
    rep.data()["realization"] = json::parse(write_realization(nu));
    auto degenerate = degenerate_face(K, nu.coords);
    rep.gate("nondegenerate", !degenerate, degenerate ? labels(K, *degenerate) : json(nullptr));
    if (degenerate)
        return emit(rep, opt, start);
    auto gp = general_position_witness(nu);
    rep.gate("general_position", !gp, gp ? labels(K, *gp) : json(nullptr));

    FaceVector fv = f_h_g_vectors(K);
    std::vector<std::size_t> hil = stress_space(nu).hilbert();
    json diff = nullptr;
    for (std::size_t i = 0; i < hil.size() && i < fv.h.size() && diff.is_null(); ++i)
        if (static_cast<long long>(hil[i]) != fv.h[i])
            diff = {{"i", i}, {"hilbert", hil[i]}, {"h", fv.h[i]}};
    if (hil.size() != fv.h.size() && diff.is_null())
        diff = {{"length", hil.size()}};
    rep.gate("hilbert_equals_h", diff.is_null(), diff);
    rep.data()["hilbert"] = hil;
    rep.data()["h"] = fv.h;

    json q;
    try
    {
        GenericityReport g = q_genericity_check(nu, opt.prime_bound);
        q = {{"verdict", g.verdict},
             {"kernel_gf2_rank", g.kernel_gf2_rank},
             {"zeta_count", g.zeta_squares.size()},
             {"all_nonzero", g.all_nonzero},
             {"sign_convention", g.sign_convention}};
    }
    catch (const FactorizationIncomplete& e)
    {
        if (!opt.float_fallback)
            throw;
        q = {{"verdict", nullptr}, {"approximate", true}, {"reason", e.what()}};
    }
    rep.data()["q_genericity"] = q;
    return emit(rep, opt, start);
}

int cmd_gconj(const std::string& path, const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Loaded l = load(path);
    Report rep("gconj", opt, l.text);
    GConjectureOptions go;
    go.seed = opt.seed;
    go.bound = opt.bound;
    go.max_retries = opt.max_retries;
    go.trials = opt.trials;
    go.prime_bound = opt.prime_bound;
    GConjectureReport g;
    try
    {
        g = g_conjecture_verdict(l.file.complex, go);
    }
    catch (const NotAHomologySphere& e)
    {
        rep.gate("homology_sphere", false, e.what());
        return emit(rep, opt, start);
    }
    rep.gate("homology_sphere", g.homology_sphere);
    rep.gate("general_position", g.general_position);
    rep.gate("hilbert_matches_h", g.hilbert_matches_h);
    rep.gate("weak_lefschetz", g.wlp.verdict_weak);
    rep.gate("quotient_matches_g", g.quotient_matches_g, json{{"quotient", g.quotient_g}, {"g", g.g_vector}});
    rep.gate("m_vector", g.m_vector);
    rep.data()["hilbert"] = g.hilbert;
    rep.data()["h"] = g.h_vector;
    rep.data()["g"] = g.g_vector;
    rep.data()["quotient_g"] = g.quotient_g;
    rep.data()["q_generic"] = g.q_generic;
    rep.data()["draws"] = g.draws;
    rep.data()["verdict"] = g.verdict;
    return emit(rep, opt, start);
}

json trial_json(const LefschetzTrial& t)
{
    json inj = json::array(), sur = json::array();
    for (std::size_t i = 0; i < t.ranks.size(); ++i)
    {
        if (t.injective[i])
            inj.push_back(i + 1);
        if (t.surjective[i])
            sur.push_back(i + 1);
    }
    return {{"omega", rats(t.omega)}, {"ranks", t.ranks},         {"injective_degrees", inj},
            {"surjective_degrees", sur}, {"image_in_psi", bools(t.image_in_psi)},
            {"weak", t.weak},             {"pattern", t.pattern}};
}

int cmd_wlp(const std::string& path, const std::string& realization_path, const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Loaded l = load(path);
    std::string inputs = l.text;
    Realization nu = draw_or_read(l.file.complex, realization_path, opt, inputs);
    Report rep("wlp", opt, inputs + std::to_string(opt.trials));
    StressAlgebra alg(nu);
    LefschetzReport w = wlp_check(alg, opt.trials, opt.seed);
    rep.gate("weak_lefschetz", w.verdict_weak);
    rep.gate("injective_then_surjective", w.verdict_pattern);
    json trials = json::array();
    for (const LefschetzTrial& t : w.trials)
        trials.push_back(trial_json(t));
    rep.data()["hilbert"] = alg.space().hilbert();
    rep.data()["trials"] = trials;
    rep.data()["turning_degree"] = (nu.d + 2) / 2;
    return emit(rep, opt, start);
}

int cmd_gorenstein(const std::string& path, const std::string& realization_path, const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Loaded l = load(path);
    std::string inputs = l.text;
    Realization nu = draw_or_read(l.file.complex, realization_path, opt, inputs);
    Report rep("gorenstein", opt, inputs);
    StressAlgebra alg(nu);
    GenerationReport gen = hilbert_and_generation(alg);
    SocleReport soc = socle_and_gorenstein(alg);
    rep.gate("socle_total_one", soc.total == 1, json{{"socle", soc.socle_dims}});
    rep.gate("gorenstein", soc.gorenstein);
    rep.gate("generated_in_degree_one", gen.generated_in_degree_one, json{{"product_span", gen.product_span}});
    rep.data()["hilbert"] = gen.hilbert;
    rep.data()["socle"] = soc.socle_dims;
    rep.data()["products_in_psi"] = bools(gen.products_in_psi);
    return emit(rep, opt, start);
}

int cmd_maxwell(const std::string& path, const std::string& realization_path, const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Loaded l = load(path);
    std::string inputs = l.text;
    Realization nu = draw_or_read(l.file.complex, realization_path, opt, inputs);
    Report rep("maxwell", opt, inputs + std::to_string(opt.trials));
    const SimplicialComplex& K = nu.complex;
    PLOrientation rho;
    try
    {
        rho = pl_orientation(nu);
    }
    catch (const NonOrientable& e)
    {
        rep.gate("orientable", false, e.what());
        return emit(rep, opt, start);
    }
    rep.gate("orientable", true);
    StressAlgebra alg(nu);
    bool round_trip = true, recip_valid = true, recip_trip = true, equilibrium = true;
    json witness = nullptr;
    std::vector<RatVector> stresses;
    for (int v = 0; v < K.num_vertices(); ++v)
    {
        if (face_contains(rho.base, {v}))
            continue;
        Lifting mu = basis_lifting(nu, rho.base, v);
        StressVector a = lifting_to_stress(nu, rho, mu);
        stresses.push_back(a.values);
        equilibrium = equilibrium && check_equilibrium(a, nu, EquilibriumForm::Projective);
        Lifting back = stress_to_lifting(nu, rho, a);
        if (back.heights != mu.heights)
        {
            round_trip = false;
            witness = K.labels()[v];
        }
        Reciprocal R = lifting_to_reciprocal(nu, rho, mu);
        recip_valid = recip_valid && reciprocal_valid(nu, R);
        recip_trip = recip_trip && reciprocal_to_stress(nu, R).values == a.values;
    }
    std::size_t span = span_dim(stresses, K.f(nu.d - 1));
    std::size_t expected = K.num_vertices() - nu.d - 1;
    rep.gate("stress_equilibrium", equilibrium);
    rep.gate("lifting_round_trip", round_trip, witness);
    rep.gate("reciprocal_valid", recip_valid);
    rep.gate("reciprocal_round_trip", recip_trip);
    rep.gate("stresses_span_psi1", span == expected && span == alg.space().dim(1),
             json{{"span", span}, {"n-d-1", expected}});

    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> c(-5, 5);
    auto random_element = [&](int r) {
        RatVector coeffs(alg.space().dim(r));
        for (auto& x : coeffs)
            x = c(rng);
        return alg.space().combination(r, coeffs);
    };
    bool product = true;
    json failing = nullptr;
    for (int t = 0; t < std::max(1, opt.trials); ++t)
    {
        StressVector a = random_element(1);
        StressVector b = random_element(nu.d);
        ProductFormulaReport pf = product_formula(alg, rho, a, b);
        if (!pf.equal && failing.is_null())
            failing = {{"algebra", pf.algebra_value.to_string()},
                       {"formula", pf.formula_value.to_string()},
                       {"matrix", pf.matrix_value.to_string()}};
        product = product && pf.equal;
    }
    rep.gate("product_formula", product, failing);
    ABMatrices ab = ab_matrices(nu, rho);
    rep.data()["abt_rank"] = ab.abt_rank;
    rep.data()["abt_invertible"] = ab.abt_invertible;
    rep.data()["c_invertible"] = ab.c_invertible;
    rep.data()["rows_equal"] = ab.rows_equal;
    rep.data()["base"] = labels(K, rho.base);
    return emit(rep, opt, start);
}

int cmd_pivot(const std::string& path, const std::string& realization_path, int k,
              const std::vector<std::string>& autonomous, const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Loaded l = load(path);
    std::string inputs = l.text;
    const SimplicialComplex& K = l.file.complex;
    Realization nu = draw_or_read(K, realization_path, opt, inputs);
    if (k < 0)
        k = nu.d - 1;
    if (k < 0 || k > nu.d)
        throw InvalidParameters("k must lie in 0..d");
    std::string akey;
    for (const auto& a : autonomous)
        akey += a + ",";
    Report rep("pivot", opt, inputs + std::to_string(k) + akey);
    PivotalOrder po = pivotal_order(nu, k, opt.seed);
    FaceVector fv = f_h_g_vectors(K);
    const auto& faces = K.faces(k);
    json piv = json::array(), non = json::array();
    for (std::size_t i : po.pivots)
        piv.push_back(labels(K, faces[i]));
    for (std::size_t i : po.nonpivots)
        non.push_back(labels(K, faces[i]));
    rep.gate("nullity_equals_h", static_cast<long long>(po.nullity()) == fv.h.at(k + 1),
             json{{"nullity", po.nullity()}, {"h_k+1", fv.h.at(k + 1)}});
    rep.data()["k"] = k;
    rep.data()["pivots"] = piv;
    rep.data()["nonpivots"] = non;
    try
    {
        PivotalWeights pw = pivotal_weights(nu, po);
        rep.data()["weights"] = pw.wt;
    }
    catch (const PreconditionViolated& e)
    {
        rep.data()["weights"] = e.what();
    }
    if (!autonomous.empty())
    {
        std::vector<int> A;
        for (const auto& a : autonomous)
            A.push_back(K.vertex_id(a));
        PivotCompatibleResult pc = pivot_compatible_set(nu, A, k, opt.seed);
        bool contained = true;
        json hh = json::array();
        for (const Face& f : pc.hhat)
        {
            hh.push_back(labels(K, f));
            contained = contained && pc.order.is_pivot(static_cast<std::size_t>(K.index(f)));
        }
        rep.gate("hhat_among_pivots", contained);
        rep.data()["hhat"] = hh;
        rep.data()["swaps"] = pc.swaps;
    }
    return emit(rep, opt, start);
}

int cmd_skeletal(const std::string& path, const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Loaded l = load(path);
    const SimplicialComplex& K = l.file.complex;
    Report rep("skeletal", opt, l.text + std::to_string(opt.trials));
    ConeSetup c = cone_setup(K, opt.seed, opt.bound);
    const Realization& nu = c.proj.base;
    bool dd = true, homology = true, surj = true, comm = true, iso = true;
    bool wd = true, chain = true, phi_pi = true;
    json per_r = json::array();
    for (int r = 0; r <= nu.d + 1; ++r)
    {
        StressHomologyReport h = stress_homology(nu, r);
        ChainMapReport pi = cone_projection_chain_map(c.cone_nu, c.proj, r);
        dd = dd && h.boundary_squared_zero;
        homology = homology && h.equal;
        surj = surj && pi.surjective;
        comm = comm && pi.commutes;
        iso = iso && pi.iso_top;
        json e = {{"r", r}, {"homology", h.homology}, {"stresses", h.stresses}, {"pi_surjective", pi.surjective},
                  {"pi_iso_top", pi.iso_top}};
        if (r >= 1)
        {
            PhiReport p = phi_chain_map(c.cone_nu, c.proj, c.rho, c.w, r);
            wd = wd && p.well_defined;
            chain = chain && p.is_chain_map;
            phi_pi = phi_pi && p.commutes_with_pi;
            e["phi_well_defined"] = p.well_defined;
            e["phi_chain_map"] = p.is_chain_map;
            e["phi_commutes_with_pi"] = p.commutes_with_pi;
            e["phi_defect_degrees"] = p.chain_defect_degrees;
        }
        per_r.push_back(e);
    }
    rep.gate("boundary_squared_zero", dd);
    rep.gate("stress_homology", homology);
    rep.gate("pi_surjective", surj);
    rep.gate("pi_chain_map", comm);
    rep.gate("pi_iso_top", iso);
    rep.gate("phi_well_defined", wd);
    rep.gate("phi_chain_map", chain);
    rep.gate("phi_commutes_with_pi", phi_pi);

    CruxCheckReport crux = technical_crux_check(K, opt.seed, opt.max_retries, opt.bound);
    json cr = json::array();
    for (const CruxReport& x : crux.per_r)
        cr.push_back({{"r", x.r},
                      {"m_rank", x.m_rank},
                      {"expected", x.expected},
                      {"injective", x.injective},
                      {"formula_agrees", x.formula_agrees},
                      {"images_in_psi", x.images_in_psi}});
    rep.gate("technical_crux", crux.verdict, json{{"draws", crux.draws}});

    DiagramReport dg = wlp_diagram_check(K, opt.seed, opt.trials, opt.bound);
    rep.gate("zeta_equals_omega", dg.zeta_matches_omega);
    rep.gate("phi_star_equals_omega", dg.commutes);
    rep.gate("injectivity_degrees_match", dg.degrees_match);
    rep.data()["per_r"] = per_r;
    rep.data()["crux"] = cr;
    rep.data()["w"] = rats(c.w);
    return emit(rep, opt, start);
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"stresslab: stresses, stress algebras and skeletal complexes of simplicial spheres"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--bound", opt.bound, "coordinate bound for random realizations");
    app.add_option("--trials", opt.trials, "random trials per check");
    app.add_option("--max-retries", opt.max_retries, "redraws before giving up");
    app.add_option("--prime-bound", opt.prime_bound, "trial-division bound for squarefree kernels");
    app.add_flag("--float-fallback", opt.float_fallback, "continue with approximate gates when factoring fails");
    app.add_flag("--timings", opt.timings, "include wall-clock timings in the report");
    app.add_option("--out", opt.out, "output file (default stdout)");

    std::function<int()> run;
    std::string kind, path, realization, field = "Q";
    std::vector<std::string> params, autonomous;
    int k = -1;

    auto* gen = app.add_subcommand("gen", "generate a complex file");
    gen->add_option("kind", kind, "simplex|crosspoly|cyclic|polygon|rp2|torus|cone|join|suspension|barycentric")->required();
    gen->add_option("params", params, "integers or complex files");
    gen->callback([&] { run = [&] { return cmd_gen(kind, params, opt); }; });

    auto* verify = app.add_subcommand("verify", "classification and Dehn-Sommerville gates");
    verify->add_option("complex", path)->required();
    verify->add_option("--field", field, "Q or GF2");
    verify->callback([&] { run = [&] { return cmd_verify(path, field, opt); }; });

    auto with_realization = [&](CLI::App* sub) {
        sub->add_option("complex", path)->required();
        sub->add_option("--realization", realization, "realization file (default: random draw)");
    };
    auto* stress = app.add_subcommand("stress", "stress spaces against the h-vector");
    with_realization(stress);
    stress->callback([&] { run = [&] { return cmd_stress(path, realization, opt); }; });

    auto* gconj = app.add_subcommand("gconj", "g-conjecture pipeline");
    gconj->add_option("complex", path)->required();
    gconj->callback([&] { run = [&] { return cmd_gconj(path, opt); }; });

    auto* wlp = app.add_subcommand("wlp", "weak Lefschetz rank profile");
    with_realization(wlp);
    wlp->callback([&] { run = [&] { return cmd_wlp(path, realization, opt); }; });

    auto* gor = app.add_subcommand("gorenstein", "socle and degree-one generation");
    with_realization(gor);
    gor->callback([&] { run = [&] { return cmd_gorenstein(path, realization, opt); }; });

    auto* mx = app.add_subcommand("maxwell", "liftings, reciprocals and the product formula");
    with_realization(mx);
    mx->callback([&] { run = [&] { return cmd_maxwell(path, realization, opt); }; });

    auto* pivot = app.add_subcommand("pivot", "pivotal order on the k-faces");
    with_realization(pivot);
    pivot->add_option("--k", k, "face dimension (default d-1)");
    pivot->add_option("--autonomous", autonomous, "vertex labels of an autonomous set");
    pivot->callback([&] { run = [&] { return cmd_pivot(path, realization, k, autonomous, opt); }; });

    auto* sk = app.add_subcommand("skeletal", "skeletal complexes, cone projection and phi");
    sk->add_option("complex", path)->required();
    sk->callback([&] { run = [&] { return cmd_skeletal(path, opt); }; });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return 2;
    }
    try
    {
        return run();
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
