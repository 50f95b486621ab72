#include "skm/io.hpp"

#include <fstream>
#include <sstream>

namespace skm {

namespace {

SimplicialComplex parse_json_complex(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("complex JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
        throw InputError("complex JSON needs the keys \"n\" and \"facets\"");
    if (!j["n"].is_number_integer())
        throw InputError("complex JSON: \"n\" must be an integer");
    const int n = j["n"].get<int>();
    std::vector<std::vector<int>> facets;
    if (!j["facets"].is_array())
        throw InputError("complex JSON: \"facets\" must be an array");
    for (const auto& f : j["facets"]) {
        if (!f.is_array())
            throw InputError("complex JSON: each facet must be an array");
        std::vector<int> facet;
        for (const auto& v : f) {
            if (!v.is_number_integer())
                throw InputError("complex JSON: vertex ids must be integers");
            facet.push_back(v.get<int>());
        }
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex parse_text_complex(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::vector<int>> facets;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::istringstream fields(line.substr(start));
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (n < 0) {
            std::string key;
            fields >> key;
            if (key != "n" || !(fields >> n))
                throw InputError(where + "expected \"n <N>\" as the first data line");
            std::string extra;
            if (fields >> extra)
                throw InputError(where + "unexpected text after n");
            continue;
        }
        std::vector<int> facet;
        std::string token;
        bool empty_marker = false;
        while (fields >> token) {
            if (token == "-") {
                empty_marker = true;
                continue;
            }
            try {
                std::size_t used = 0;
                const int v = std::stoi(token, &used);
                if (used != token.size())
                    throw std::invalid_argument(token);
                facet.push_back(v);
            } catch (const std::exception&) {
                throw InputError(where + "bad vertex id \"" + token + "\"");
            }
        }
        if (empty_marker && !facet.empty())
            throw InputError(where + "\"-\" must stand alone");
        facets.push_back(std::move(facet));
    }
    if (n < 0)
        throw InputError("complex text has no \"n <N>\" line");
    return SimplicialComplex::from_facets(n, facets);
}

} // namespace

SimplicialComplex parse_complex(const std::string& text)
{
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{')
        return parse_json_complex(text);
    return parse_text_complex(text);
}

SimplicialComplex load_complex(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

std::string complex_to_text(const SimplicialComplex& delta)
{
    std::ostringstream os;
    os << "n " << delta.n() << "\n";
    for (Mask f : delta.facets()) {
        if (f == 0) {
            os << "-\n";
            continue;
        }
        const auto vs = to_vertices(f);
        for (std::size_t k = 0; k < vs.size(); ++k)
            os << (k ? " " : "") << vs[k];
        os << "\n";
    }
    return os.str();
}

Json vertices_json(Mask m)
{
    Json arr = Json::array();
    for (int v : to_vertices(m))
        arr.push_back(v);
    return arr;
}

Json complex_to_json(const SimplicialComplex& delta)
{
    Json facets = Json::array();
    for (Mask f : delta.facets())
        facets.push_back(vertices_json(f));
    return Json{{"n", delta.n()}, {"facets", facets}};
}

Json to_json(const ReducedHomologyProfile& h)
{
    Json dims = Json::array();
    for (int i = -1; i <= h.top_degree(); ++i)
        dims.push_back(Json{{"degree", i}, {"dim", h(i)}});
    return Json{{"reduced_homology", dims}};
}

Json to_json(const HilbertSeriesMulti& h)
{
    Json terms = Json::array();
    for (const auto& [b, c] : h.terms)
        terms.push_back(Json{{"support", vertices_json(b)}, {"coeff", c}});
    return Json{{"terms", terms}};
}

Json to_json(const BettiTable& t)
{
    Json entries = Json::array();
    for (const auto& [key, beta] : t.entries)
        entries.push_back(Json{{"h", key.first}, {"support", vertices_json(key.second)}, {"beta", beta}});
    Json out{{"entries", entries}, {"pdim", t.projective_dimension()}};
    if (const auto reg = t.regularity())
        out["reg"] = *reg;
    else
        out["reg"] = "-inf";
    return out;
}

Json to_json(const CoordinateSubspaceArrangement& a)
{
    Json comps = Json::array();
    for (Mask c : a.components())
        comps.push_back(vertices_json(c));
    Json out{{"components", comps}};
    if (a.is_empty())
        out["value"] = "empty";
    else if (a.is_origin())
        out["value"] = "origin";
    else
        out["value"] = "arrangement";
    return out;
}

Json to_json(const SquareFreeMonomialIdeal& ideal)
{
    Json gens = Json::array();
    for (Mask g : ideal.generators())
        gens.push_back(vertices_json(g));
    return Json{{"generators", gens}};
}

} // namespace skm
