// coideal-lab: exact computations in the quantum Borel algebra of type B_n
// realized inside the quantum shuffle algebra -- Phi^S(k,m) coideal
// generators, PBW decompositions, and the classification of right coideal
// subalgebras over the coradical.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "coideal/json_io.hpp"
#include "coideal/verify.hpp"

using namespace coideal;

namespace {

struct RunConfig {
    int n = 2;
    std::string mode = "generic";
    int t = 5;
    std::string bicharacter_file;
    long degree_bound = 8;
    bool as_json = false;

    ScalarRing ring() const {
        if (mode == "generic") return ScalarRing::generic(1);
        if (mode == "cyclotomic") return ScalarRing::cyclotomic(t);
        throw std::invalid_argument("mode must be generic or cyclotomic");
    }

    Bicharacter bicharacter() const {
        if (bicharacter_file.empty()) return Bicharacter::standard(n, ring());
        std::ifstream in(bicharacter_file);
        if (!in) throw std::invalid_argument("cannot open " + bicharacter_file);
        json j;
        in >> j;
        return bicharacter_from_json(j, ring());
    }
};

IndexSet parse_set(const std::string& text) {
    IndexSet S;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) S.insert(std::stoi(cur));
    return S;
}

RootSequence parse_theta(const std::string& text) {
    RootSequence theta;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) theta.push_back(std::stoi(cur));
    return theta;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--n", cfg.n, "rank of the root system B_n")->check(CLI::PositiveNumber);
    cmd->add_option("--mode", cfg.mode, "generic | cyclotomic")
        ->check(CLI::IsMember({"generic", "cyclotomic"}));
    cmd->add_option("--t", cfg.t, "order of the root of unity (cyclotomic mode, t > 4)");
    cmd->add_option("--bicharacter", cfg.bicharacter_file, "bicharacter matrix JSON file");
    cmd->add_option("--degree-bound", cfg.degree_bound, "degree cap for span computations")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--json", cfg.as_json, "machine-readable JSON output");
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_phi(const RunConfig& cfg, const IndexSet& S, int k, int m) {
    Engine eng(cfg.bicharacter());
    const Bicharacter& bc = eng.bc();
    int n = bc.rank();
    ShuffleElement v = phi(eng, S, k, m);
    ColoredScheme sc(n, S, k, m);
    bool wr = is_white_regular(n, S, k, m), br = is_black_regular(n, S, k, m);
    json j;
    j["S"] = json(PhiElement(S, k, m).S);
    j["k"] = k;
    j["m"] = m;
    j["white_regular"] = wr;
    j["black_regular"] = br;
    j["value"] = to_json(bc, v);
    j["scheme"] = to_json(sc);
    // PBW solves work over Q(q) or the cyclotomic field; skip them for
    // multiparameter bicharacters.
    if (!v.is_zero() && m < psi(n, k) && bc.nparams() == 1)
        j["pbw"] = to_json(bc, pbw_decompose(eng, v));

    std::ostringstream os;
    os << to_string(PhiElement(S, k, m)) << "\n";
    os << "value: " << to_string(v, bc.param_names()) << "\n";
    os << "regular: " << (wr ? "white" : "") << (wr && br ? "+" : "") << (br ? "black" : "")
       << (!wr && !br ? "none" : "") << "\n";
    os << "scheme: " << sc.render_plain() << "\n";
    if (k <= n && n < m) os << "shifted:\n" << sc.render_shifted() << "\n";
    if (j.contains("pbw")) {
        os << "pbw:";
        for (const auto& t : pbw_decompose(eng, v))
            os << "  (" << render_coeff(t.coeff, bc.param_names()) << ") " << to_string(t.monomial);
        os << "\n";
    }
    emit(j, cfg.as_json, os.str());
    return 0;
}

int cmd_coproduct(const RunConfig& cfg, int k, int m) {
    Engine eng(cfg.bicharacter());
    const Bicharacter& bc = eng.bc();
    int n = bc.rank();
    DecoratedCoproduct got = hopf_coproduct(bc, u_bracket(eng, k, m));
    // the three-part explicit formula
    DecoratedCoproduct want;
    LaurentScalar one_m_q2 = bc.one_scalar() - bc.q_scalar(-2);
    want[Constitution(n)].emplace(std::make_pair(u_word_desc(n, m, k), Word{}),
                                  alpha_shuffle(bc, k, m));
    want[interval_constitution(n, k, m)].emplace(std::make_pair(Word{}, u_word_desc(n, m, k)),
                                                 alpha_shuffle(bc, k, m));
    for (int i = k; i < m; ++i) {
        LaurentScalar c = bc.ring().reduce(tau(bc, i) * one_m_q2 * alpha_shuffle(bc, i + 1, m) *
                                           alpha_shuffle(bc, k, i));
        if (!c.is_zero())
            want[interval_constitution(n, k, i)].emplace(
                std::make_pair(u_word_desc(n, m, i + 1), u_word_desc(n, i, k)), c);
    }
    bool match = got == want;
    json j;
    j["k"] = k;
    j["m"] = m;
    j["matches_formula"] = match;
    json terms = json::array();
    std::ostringstream os;
    os << "Delta(u[" << k << "," << m << "]):\n";
    for (const auto& [g, tensor] : got) {
        for (const auto& [legs, c] : tensor) {
            json t;
            t["group"] = to_json(g);
            t["left"] = legs.first;
            t["right"] = legs.second;
            t["coeff"] = to_string(c, bc.param_names());
            terms.push_back(t);
            os << "  g" << json(g.m).dump() << " (" << to_string(c, bc.param_names()) << ") ("
               << to_string(legs.first) << ") x (" << to_string(legs.second) << ")\n";
        }
    }
    j["terms"] = terms;
    os << "matches the explicit three-part formula: " << (match ? "yes" : "NO") << "\n";
    emit(j, cfg.as_json, os.str());
    return match ? 0 : 1;
}

int cmd_classify(const RunConfig& cfg, const RootSequence& theta) {
    SubalgebraDescriptor d = classify(cfg.n, theta);
    json j = to_json(d);
    std::ostringstream os;
    os << "theta = " << json(theta).dump() << "\n";
    for (int k = 1; k <= cfg.n; ++k) {
        os << "R_" << k << " = " << json(d.rt.R[k]).dump() << "  T_" << k << " = "
           << json(d.rt.T[k]).dump() << "\n";
    }
    os << "generators:";
    for (const auto& g : d.generators) os << " " << to_string(g);
    os << "\nsimple roots:";
    for (const auto& r : d.simple_roots) os << " " << to_string(r);
    os << "\nroots:";
    for (const auto& r : d.roots) os << " " << to_string(r);
    os << "\n";
    emit(j, cfg.as_json, os.str());
    return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
    auto all = enumerate_subalgebras(cfg.n);
    json j = json::array();
    std::ostringstream os;
    for (const auto& d : all) {
        j.push_back(to_json(d));
        os << json(d.theta).dump() << "  simple:";
        for (const auto& r : d.simple_roots) os << " " << to_string(r);
        os << "  generators:";
        for (const auto& g : d.generators) os << " " << to_string(g);
        os << "\n";
    }
    os << all.size() << " right coideal subalgebras over the coradical ((2n)!!)\n";
    emit(j, cfg.as_json, os.str());
    return 0;
}

int cmd_lattice(const RunConfig& cfg) {
    Engine eng(cfg.bicharacter());
    Lattice lat = lattice(eng, cfg.n, cfg.degree_bound);
    json j = to_json(lat);
    std::ostringstream os;
    for (const auto& [a, b] : lat.edges)
        os << json(lat.nodes[a]).dump() << " < " << json(lat.nodes[b]).dump() << "\n";
    os << lat.nodes.size() << " nodes, " << lat.edges.size() << " covering edges\n";
    emit(j, cfg.as_json, os.str());
    return 0;
}

int cmd_decompose(const RunConfig& cfg, const IndexSet& S, int k, int m, long exponent) {
    Engine eng(cfg.bicharacter());
    const Bicharacter& bc = eng.bc();
    ShuffleElement v = phi(eng, S, k, m);
    if (exponent > 1) v = power(bc, v, exponent);
    if (v.is_zero()) {
        emit(json::array(), cfg.as_json, "0\n");
        return 0;
    }
    auto dec = pbw_decompose(eng, v);
    json j = to_json(bc, dec);
    std::ostringstream os;
    for (const auto& t : dec)
        os << "(" << render_coeff(t.coeff, bc.param_names()) << ") " << to_string(t.monomial)
           << "\n";
    emit(j, cfg.as_json, os.str());
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& suites) {
    Engine eng(cfg.bicharacter());
    auto results = run_verify(eng, suites);
    json j = json::array();
    bool all_ok = true;
    std::ostringstream os;
    for (const auto& r : results) {
        all_ok = all_ok && r.ok;
        json e;
        e["suite"] = r.name;
        e["ok"] = r.ok;
        e["message"] = r.message;
        j.push_back(e);
        os << (r.ok ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.message << "\n";
    }
    emit(j, cfg.as_json, os.str());
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coideal-lab: the quantum Borel algebra of type B_n in the shuffle model"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string set_text, theta_text;
    int k = 1, m = 1;
    long exponent = 1;
    std::vector<std::string> suites;

    CLI::App* c_phi = app.add_subcommand("phi", "evaluate Phi^S(k,m) with scheme and regularity");
    add_common(c_phi, cfg);
    c_phi->add_option("--S", set_text, "comma-separated black points (may be empty)");
    c_phi->add_option("--k", k, "start index")->required();
    c_phi->add_option("--m", m, "end index")->required();

    CLI::App* c_cop = app.add_subcommand("coproduct", "coproduct of u[k,m] vs the explicit formula");
    add_common(c_cop, cfg);
    c_cop->add_option("--k", k, "start index")->required();
    c_cop->add_option("--m", m, "end index")->required();

    CLI::App* c_cls = app.add_subcommand("classify", "R_k/T_k data and generators of U_theta");
    add_common(c_cls, cfg);
    c_cls->add_option("--theta", theta_text, "comma-separated root sequence")->required();

    CLI::App* c_enum = app.add_subcommand("enumerate", "all (2n)!! subalgebras over the coradical");
    add_common(c_enum, cfg);

    CLI::App* c_lat = app.add_subcommand("lattice", "containment Hasse diagram (span oracle)");
    add_common(c_lat, cfg);

    CLI::App* c_dec = app.add_subcommand("decompose", "PBW decomposition of Phi^S(k,m)^e");
    add_common(c_dec, cfg);
    c_dec->add_option("--S", set_text, "comma-separated black points (may be empty)");
    c_dec->add_option("--k", k, "start index")->required();
    c_dec->add_option("--m", m, "end index")->required();
    c_dec->add_option("--power", exponent, "exponent e >= 1");

    CLI::App* c_ver = app.add_subcommand("verify", "run identity suites");
    add_common(c_ver, cfg);
    c_ver->add_option("--suite", suites,
                      "identities | coproduct | duality | serre | classification | cyclotomic");

    try {
        app.parse(argc, argv);
        cfg.ring();  // validates the mode/t combination up front
        if (c_phi->parsed()) return cmd_phi(cfg, parse_set(set_text), k, m);
        if (c_cop->parsed()) return cmd_coproduct(cfg, k, m);
        if (c_cls->parsed()) return cmd_classify(cfg, parse_theta(theta_text));
        if (c_enum->parsed()) return cmd_enumerate(cfg);
        if (c_lat->parsed()) return cmd_lattice(cfg);
        if (c_dec->parsed()) return cmd_decompose(cfg, parse_set(set_text), k, m, exponent);
        if (c_ver->parsed()) return cmd_verify(cfg, suites);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
