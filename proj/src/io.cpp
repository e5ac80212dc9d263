#include "stresslab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include "json.hpp"

namespace stresslab {

using json = nlohmann::json;

namespace {

json parse(const std::string& text)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::exception& e)
    {
        throw ParseError(e.what());
    }
}

}   // namespace

std::string write_complex(const ComplexFile& f)
{
    json j;
    j["name"] = f.name;
    j["facets"] = f.complex.facet_labels();
    return j.dump(2) + "\n";
}

ComplexFile read_complex(const std::string& text)
{
    json j = parse(text);
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw ParseError("complex file needs a \"facets\" array");
    ComplexFile out;
    out.name = j.value("name", std::string());
    std::vector<std::vector<std::string> > facets;
    for (const json& f : j["facets"])
    {
        if (!f.is_array())
            throw ParseError("each facet must be an array of labels");
        std::vector<std::string> labels;
        for (const json& v : f)
        {
            if (v.is_string())
                labels.push_back(v.get<std::string>());
            else if (v.is_number_integer())
                labels.push_back(std::to_string(v.get<long long>()));
            else
                throw ParseError("vertex labels must be strings or integers");
        }
        facets.push_back(labels);
    }
    if (facets.empty())
        throw ParseError("no facets");
    out.complex = SimplicialComplex::from_facets(facets);
    return out;
}

std::string write_realization(const Realization& nu)
{
    json j;
    j["dim"] = nu.d;
    json coords = json::object();
    for (int v = 0; v < nu.complex.num_vertices(); ++v)
    {
        json c = json::array();
        for (const Rational& x : nu.coords[v])
            c.push_back(to_string(x));
        coords[nu.complex.labels()[v]] = c;
    }
    j["coords"] = coords;
    return j.dump(2) + "\n";
}

Realization read_realization(const std::string& text, const SimplicialComplex& K, bool check)
{
    json j = parse(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("coords") || !j["coords"].is_object())
        throw ParseError("realization file needs \"dim\" and a \"coords\" object");
    int d = j["dim"].get<int>();
    std::vector<RatVector> coords(K.num_vertices());
    for (int v = 0; v < K.num_vertices(); ++v)
    {
        const std::string& label = K.labels()[v];
        if (!j["coords"].contains(label))
            throw ParseError("no coordinates for vertex " + label);
        const json& c = j["coords"][label];
        if (!c.is_array() || static_cast<int>(c.size()) != d + 1)
            throw ParseError("vertex " + label + " needs d+1 coordinates");
        for (const json& x : c)
        {
            if (!x.is_string())
                throw ParseError("coordinates are \"num/den\" strings");
            coords[v].push_back(parse_rational(x.get<std::string>()));
        }
        if (coords[v].back() == 0)
            throw ParseError("vertex " + label + " has zero last coordinate");
    }
    if (!check)
    {
        if (K.dim() > d)
            throw DimensionMismatch("complex dimension exceeds the ambient dimension");
        return Realization{K, d, coords};
    }
    return make_realization(K, d, coords);
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw InvalidParameters("cannot write " + path);
    out << text;
}

std::string digest(const std::string& text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text)
        h = (h ^ c) * 0x100000001b3ULL;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}   // namespace stresslab
