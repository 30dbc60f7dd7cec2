// Command-line front end: decide derived equivalence of Brauer graph
// algebras and build/inspect the supporting objects (quiver presentations,
// multiplicity-free covers, cut algebras, trivial-extension checks).
//
// Exit codes: 0 = success / verified-true, 1 = verified-false,
// 2 = input error (malformed JSON, invariant violations, local-algebra
// guard), with a one-line reason on stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bga/cover.hpp"
#include "bga/gentle.hpp"
#include "bga/invariants.hpp"
#include "bga/isomorphism.hpp"
#include "bga/quiver.hpp"
#include "bga/serialization.hpp"
#include "bga/trivial_extension.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bga::BrauerGraph load(const std::string& path) { return bga::parse_document(read_input(path)); }

// "--cut v0:h0,v1:h1,..." with one entry per vertex
bga::Cut parse_cut(const bga::BrauerGraph& bg, const std::string& text) {
    bga::Cut cut;
    cut.chosen.assign(bg.vertex_count(), -1);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("cut entries must look like vertexId:halfEdgeId");
        }
        int v = std::stoi(item.substr(0, colon));
        int h = std::stoi(item.substr(colon + 1));
        if (v < 0 || v >= bg.vertex_count()) {
            throw std::invalid_argument("cut vertex id out of range: " + std::to_string(v));
        }
        if (cut.chosen[v] != -1) {
            throw std::invalid_argument("cut lists vertex " + std::to_string(v) + " twice");
        }
        cut.chosen[v] = h;
    }
    for (int v = 0; v < bg.vertex_count(); ++v) {
        if (cut.chosen[v] == -1) {
            throw std::invalid_argument("cut misses vertex " + std::to_string(v));
        }
    }
    bga::validate_cut(bg, cut);
    return cut;
}

nlohmann::json invariants_json(const bga::DerivedInvariants& inv) {
    nlohmann::json j;
    j["V"] = inv.num_vertices;
    j["E"] = inv.num_edges;
    j["F"] = inv.num_faces;
    j["perimeters"] = inv.perimeters;
    j["multiplicities"] = inv.multiplicities;
    j["sigma"] = inv.sigma;
    j["genus"] = inv.genus;
    j["k0_rank"] = inv.k0_rank;
    j["k0_sg_rank"] = inv.k0_sg_rank;
    return j;
}

nlohmann::json presentation_json(const bga::QuiverPresentation& q) {
    nlohmann::json j;
    j["quiver_vertices"] = q.quiver_vertices;
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : q.arrows) {
        j["arrows"].push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
    }
    j["pi"] = q.pi;
    j["zero_relations"] = nlohmann::json::array();
    for (auto [a, b] : q.zero_relations) j["zero_relations"].push_back({a, b});
    j["commutation_relations"] = nlohmann::json::array();
    for (const auto& r : q.commutation_relations) {
        auto cyc = [](const bga::CyclePower& c) {
            return nlohmann::json{{"start_half_edge", c.start_half_edge},
                                  {"power", c.power},
                                  {"arrow_count", c.arrow_count}};
        };
        j["commutation_relations"].push_back(
            {{"edge", r.edge}, {"lhs", cyc(r.lhs)}, {"sign", r.sign}, {"rhs", cyc(r.rhs)}});
    }
    return j;
}

std::string cycle_text(const bga::BrauerGraph& bg, const bga::CyclePower& c) {
    std::string s = "(";
    int h = c.start_half_edge;
    for (int i = 0; i < c.arrow_count; ++i) {
        if (i) s += ".";
        s += "a" + std::to_string(h);
        h = bg.rho(h);
    }
    s += ")";
    if (c.power != 1) s += "^" + std::to_string(c.power);
    return s;
}

int cmd_validate(const std::string& file, bool json_out) {
    auto text = read_input(file);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    std::vector<std::string> violations;
    try {
        bga::parse_document(text);
    } catch (const std::invalid_argument& e) {
        violations.push_back(e.what());
    }
    // structural diagnostics beyond the first parse failure, when rho/iota exist
    if (!violations.empty() && doc.is_object() && doc.contains("rho") && doc.contains("iota") &&
        doc["rho"].is_array() && doc["iota"].is_array()) {
        bga::RibbonGraph g;
        for (const auto& x : doc["rho"]) g.rho.push_back(x.is_number_integer() ? x.get<int>() : -1);
        for (const auto& x : doc["iota"])
            g.iota.push_back(x.is_number_integer() ? x.get<int>() : -1);
        for (auto& d : bga::validate(g)) violations.push_back(d);
    }
    if (json_out) {
        nlohmann::json j;
        j["valid"] = violations.empty();
        j["violations"] = violations;
        std::cout << j.dump() << "\n";
    } else if (violations.empty()) {
        std::cout << "valid\n";
    } else {
        for (const auto& v : violations) std::cout << v << "\n";
    }
    if (violations.empty()) return 0;
    std::cerr << "error: " << violations.front() << "\n";
    return 2;
}

int cmd_invariants(const std::string& file, bool json_out) {
    auto inv = bga::derived_invariants(load(file));
    if (json_out) {
        std::cout << invariants_json(inv).dump() << "\n";
        return 0;
    }
    std::cout << "V=" << inv.num_vertices << " E=" << inv.num_edges << " F=" << inv.num_faces
              << "\n";
    std::cout << "perimeters:";
    for (int p : inv.perimeters) std::cout << " " << p;
    std::cout << "\nmultiplicities:";
    for (int m : inv.multiplicities) std::cout << " " << m;
    std::cout << "\nsigma=" << inv.sigma << " genus=" << inv.genus << " k0_rank=" << inv.k0_rank
              << " k0_sg_rank=" << inv.k0_sg_rank << "\n";
    return 0;
}

int cmd_equal(const std::string& file1, const std::string& file2, bool json_out) {
    bool eq = bga::derived_equivalent(load(file1), load(file2));
    if (json_out) {
        std::cout << nlohmann::json{{"derived_equivalent", eq}}.dump() << "\n";
    } else {
        std::cout << "derived-equivalent: " << (eq ? "true" : "false") << "\n";
    }
    return eq ? 0 : 1;
}

int cmd_orbit(const std::string& file1, const std::string& file2, bool json_out) {
    bool eq = bga::orbit_equivalent(load(file1), load(file2));
    if (json_out) {
        std::cout << nlohmann::json{{"orbit_equivalent", eq}}.dump() << "\n";
    } else {
        std::cout << "orbit-equivalent: " << (eq ? "true" : "false") << "\n";
    }
    return eq ? 0 : 1;
}

int cmd_present(const std::string& file, bool json_out) {
    auto bg = load(file);
    auto q = bga::build_quiver(bg);
    if (json_out) {
        std::cout << presentation_json(q).dump() << "\n";
        return 0;
    }
    std::cout << "quiver vertices (edges): " << q.quiver_vertices.size() << "\n";
    for (const auto& a : q.arrows) {
        std::cout << "arrow a" << a.id << ": e" << a.source << " -> e" << a.target << "\n";
    }
    std::cout << "zero relations:";
    for (auto [a, b] : q.zero_relations) std::cout << " a" << a << ".a" << b;
    std::cout << "\n";
    for (const auto& r : q.commutation_relations) {
        std::cout << "commutation at e" << r.edge << ": " << cycle_text(bg, r.lhs)
                  << (r.sign == 1 ? " - " : " + ") << cycle_text(bg, r.rhs) << "\n";
    }
    return 0;
}

int cmd_cover(const std::string& file, const std::string& cut_text, bool json_out) {
    auto bg = load(file);
    auto cut = parse_cut(bg, cut_text);
    auto cd = bga::build_cover(bg, cut);
    auto rep = bga::verify_cover(cd);
    if (json_out) {
        nlohmann::json j;
        j["cover"] = nlohmann::json::parse(bga::serialize_document(cd.cover));
        j["deck_generator"] = cd.deck_generator;
        j["mbar"] = cd.mbar;
        j["verified"] = rep.pass();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "mbar=" << cd.mbar << " cover: V=" << cd.cover.vertex_count()
                  << " E=" << cd.cover.edge_count() << " genus=" << bga::genus(cd.cover.graph())
                  << "\n";
        std::cout << "cover document: " << bga::serialize_document(cd.cover) << "\n";
        std::cout << "deck generator:";
        for (int x : cd.deck_generator) std::cout << " " << x;
        std::cout << "\nverify: " << (rep.pass() ? "all checks pass" : "FAILED") << "\n";
        for (const auto& n : rep.notes) std::cout << "  " << n << "\n";
    }
    return rep.pass() ? 0 : 1;
}

int cmd_gentle(const std::string& file, const std::string& cut_text, bool json_out) {
    auto bg = load(file);
    auto cut = parse_cut(bg, cut_text);
    auto lam = bga::gentle_from_cut(bg, cut);
    auto table = bga::build_trivial_extension(lam);
    if (json_out) {
        nlohmann::json j;
        j["quiver_vertices"] = lam.num_vertices;
        j["arrows"] = nlohmann::json::array();
        for (const auto& a : lam.arrows) {
            j["arrows"].push_back(
                {{"id", a.id}, {"source", a.source}, {"target", a.target}, {"degree", a.degree}});
        }
        j["zero_relations"] = nlohmann::json::array();
        for (auto [a, b] : lam.zero_relations) j["zero_relations"].push_back({a, b});
        j["dimension"] = table.dim_lambda;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "gentle algebra on " << lam.num_vertices << " vertices, dim=" << table.dim_lambda
              << "\n";
    for (const auto& a : lam.arrows) {
        std::cout << "arrow a" << a.id << ": e" << a.source << " -> e" << a.target
                  << " degree=" << a.degree << "\n";
    }
    std::cout << "zero relations:";
    for (auto [a, b] : lam.zero_relations) std::cout << " a" << a << ".a" << b;
    std::cout << "\n";
    return 0;
}

int cmd_trivcheck(const std::string& file, const std::string& cut_text, bool json_out) {
    auto bg = load(file);
    auto cut = parse_cut(bg, cut_text);
    auto rep = bga::verify_phi(bg, cut);
    if (json_out) {
        nlohmann::json j;
        j["pass"] = rep.pass;
        j["dimension_match"] = rep.dimension_match;
        j["pairs_checked"] = rep.pairs_checked;
        j["delta_p"] = rep.delta_p;
        j["failures"] = rep.failures;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "phi-verified: " << (rep.pass ? "true" : "false") << " ("
                  << rep.pairs_checked << " pairs)\n";
        std::cout << "delta_p:";
        for (int d : rep.delta_p) std::cout << " " << d;
        std::cout << "\n";
        for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    }
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brauer graph algebras: derived invariants, covers, cuts"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_out = false;
    app.add_flag("--json", json_out, "canonical JSON output");

    std::string file1, file2, cut_text;

    auto* validate = app.add_subcommand("validate", "check the ribbon graph axioms");
    validate->add_option("file", file1)->required();

    auto* invariants = app.add_subcommand("invariants", "derived-invariant bundle");
    invariants->add_option("file", file1)->required();

    auto* equal = app.add_subcommand("equal", "decide derived equivalence");
    equal->add_option("file1", file1)->required();
    equal->add_option("file2", file2)->required();

    auto* orbit = app.add_subcommand("orbit", "decide line-field orbit equivalence");
    orbit->add_option("file1", file1)->required();
    orbit->add_option("file2", file2)->required();

    auto* present = app.add_subcommand("present", "quiver presentation with relations");
    present->add_option("file", file1)->required();

    auto* cover = app.add_subcommand("cover", "multiplicity-free cover with deck action");
    cover->add_option("file", file1)->required();
    cover->add_option("--cut", cut_text, "v0:h0,v1:h1,...")->required();

    auto* gentle = app.add_subcommand("gentle", "gentle algebra of a cut");
    gentle->add_option("file", file1)->required();
    gentle->add_option("--cut", cut_text, "v0:h0,v1:h1,...")->required();

    auto* trivcheck = app.add_subcommand("trivcheck", "verify the trivial-extension isomorphism");
    trivcheck->add_option("file", file1)->required();
    trivcheck->add_option("--cut", cut_text, "v0:h0,v1:h1,...")->required();

    try {
        app.parse(argc, argv);
        if (validate->parsed()) return cmd_validate(file1, json_out);
        if (invariants->parsed()) return cmd_invariants(file1, json_out);
        if (equal->parsed()) return cmd_equal(file1, file2, json_out);
        if (orbit->parsed()) return cmd_orbit(file1, file2, json_out);
        if (present->parsed()) return cmd_present(file1, json_out);
        if (cover->parsed()) return cmd_cover(file1, cut_text, json_out);
        if (gentle->parsed()) return cmd_gentle(file1, cut_text, json_out);
        if (trivcheck->parsed()) return cmd_trivcheck(file1, cut_text, json_out);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
