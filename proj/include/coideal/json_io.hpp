#pragma once

// JSON serialization of the public value types and the bicharacter loader.
// Output is deterministic: object keys are sorted, scalar strings render
// terms by descending exponent vector.

#include <json.hpp>

#include "coideal/classifier.hpp"

namespace coideal {

using json = nlohmann::json;  // sorted keys for byte-identical output

inline std::string render_coeff(const PBWCoeff& c, const std::vector<std::string>& names) {
    std::vector<std::string> qnames{"q"};
    if (c.is_laurent()) return to_string(c.num, names);
    return "(" + to_string(c.num, qnames) + ")/(" + to_string(c.den, qnames) + ")";
}

inline json to_json(const Constitution& c) {
    json a = json::array();
    for (long v : c.m) a.push_back(v);
    return a;
}

inline json to_json(const Bicharacter& bc, const ShuffleElement& a) {
    json j;
    auto d = a.degree(bc.rank());
    j["degree"] = d ? to_json(*d) : json();
    json terms = json::array();
    for (const auto& [w, c] : a.terms()) {
        json t;
        t["word"] = w;
        t["coeff"] = to_string(c, bc.param_names());
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline json to_json(const Bicharacter& bc, const std::vector<PBWTerm>& dec) {
    json out = json::array();
    for (const auto& t : dec) {
        json j;
        json mono = json::array();
        for (const auto& [sl, e] : t.monomial.factors) mono.push_back({to_string(sl), e});
        j["monomial"] = mono;
        j["coeff"] = render_coeff(t.coeff, bc.param_names());
        out.push_back(j);
    }
    return out;
}

inline json to_json(const ColoredScheme& sc) {
    json j;
    j["k"] = sc.k;
    j["m"] = sc.m;
    json black = json::array();
    for (int p : sc.black_points) black.push_back(p);
    j["black"] = black;
    return j;
}

inline json to_json(const SubalgebraDescriptor& d) {
    int n = d.rt.n;
    json j;
    json theta = json::array();
    for (int v : d.theta) theta.push_back(v);
    j["theta"] = theta;
    json R = json::object(), T = json::object();
    for (int k = 1; k <= n; ++k) {
        R[std::to_string(k)] = json(d.rt.R[k]);
        T[std::to_string(k)] = json(d.rt.T[k]);
    }
    j["R"] = R;
    j["T"] = T;
    json gens = json::array();
    for (const auto& g : d.generators) {
        json gj;
        gj["S"] = json(g.S);
        gj["k"] = g.k;
        gj["m"] = g.m;
        gens.push_back(gj);
    }
    j["generators"] = gens;
    json simple = json::array(), roots = json::array();
    for (const auto& r : d.simple_roots) simple.push_back(to_string(r));
    for (const auto& r : d.roots) roots.push_back(to_string(r));
    j["simple_roots"] = simple;
    j["roots"] = roots;
    return j;
}

inline json to_json(const Lattice& lat) {
    json j;
    json nodes = json::array();
    for (const auto& t : lat.nodes) {
        json tj = json::array();
        for (int v : t) tj.push_back(v);
        nodes.push_back(tj);
    }
    j["nodes"] = nodes;
    json edges = json::array();
    for (const auto& [a, b] : lat.edges) edges.push_back({a, b});
    j["edges"] = edges;
    return j;
}

// ---------------------------------------------------------------------------
// Bicharacter loading: {n, parameters:[names], matrix:[[monomial strings]]}
// with monomials written like "q^-2*t1".

inline ParamMonomial parse_monomial(const std::string& text,
                                    const std::vector<std::string>& names) {
    ParamMonomial m(names.size());
    if (text.empty() || text == "1") return m;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t star = text.find('*', pos);
        std::string factor = text.substr(pos, star == std::string::npos ? star : star - pos);
        pos = star == std::string::npos ? text.size() : star + 1;
        std::size_t caret = factor.find('^');
        std::string name = factor.substr(0, caret);
        int exp = 1;
        if (caret != std::string::npos) exp = std::stoi(factor.substr(caret + 1));
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw std::invalid_argument("unknown parameter: " + name);
        m.e[it - names.begin()] += exp;
    }
    return m;
}

inline Bicharacter bicharacter_from_json(const json& j, ScalarRing ring) {
    int n = j.at("n").get<int>();
    std::vector<std::string> names;
    if (j.contains("parameters")) names = j.at("parameters").get<std::vector<std::string>>();
    if (names.empty() || names[0] != "q") names.insert(names.begin(), "q");
    if (ring.nparams() != names.size()) {
        if (ring.is_cyclotomic())
            throw std::invalid_argument("cyclotomic mode admits no extra parameters");
        ring = ScalarRing::generic(names.size());
    }
    auto rows = j.at("matrix");
    std::vector<std::vector<ParamMonomial>> matrix;
    for (const auto& row : rows) {
        std::vector<ParamMonomial> r;
        for (const auto& cell : row) r.push_back(parse_monomial(cell.get<std::string>(), names));
        matrix.push_back(std::move(r));
    }
    return Bicharacter::from_matrix(n, names, matrix, ring);
}

}  // namespace coideal
