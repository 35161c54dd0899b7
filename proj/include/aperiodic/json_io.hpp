// JSON forms of numbers, words, morphisms, tile sets, partitions and actions.
#pragma once

#include "markers.hpp"
#include "morphism2d.hpp"
#include "pet.hpp"
#include "wangtiles.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace aperiodic::io {

using json = nlohmann::ordered_json;

struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline json to_json(const QPhi& x) { return x.str(); }

inline QPhi qphi_from_json(const json& j) {
    if (j.is_number_integer()) return QPhi(j.get<long>());
    if (!j.is_string()) throw FormatError("number must be a string like \"1/2+3*phi\"");
    return QPhi::parse(j.get<std::string>());
}

inline json to_json(const Point& p) { return json::array({to_json(p.x), to_json(p.y)}); }

inline Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw FormatError("point must be a pair");
    return {qphi_from_json(j[0]), qphi_from_json(j[1])};
}

// list of columns, each bottom-to-top
inline json to_json(const Word2d& w) { return w.columns(); }

inline Word2d word_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("word must be a list of columns");
    return Word2d::from_columns(j.get<std::vector<std::vector<Letter>>>());
}

inline json to_json(const Morphism2d& m) {
    json rule = json::object();
    for (int a = 0; a < m.domain_size; ++a) rule[std::to_string(a)] = to_json(m.rule[a]);
    return {{"domain", m.domain_size}, {"codomain", m.codomain_size}, {"rule", rule}};
}

inline Morphism2d morphism_from_json(const json& j) {
    if (!j.contains("rule")) throw FormatError("morphism needs a \"rule\"");
    const json& r = j.at("rule");
    int dom = j.value("domain", static_cast<int>(r.size()));
    std::vector<Word2d> rule(static_cast<std::size_t>(dom));
    std::vector<char> seen(static_cast<std::size_t>(dom), 0);
    int cod = 0;
    for (auto& [k, v] : r.items()) {
        int a = std::stoi(k);
        if (a < 0 || a >= dom) throw FormatError("rule letter " + k + " outside the domain");
        rule[a] = word_from_json(v);
        seen[a] = 1;
        for (Letter b : rule[a].data()) cod = std::max(cod, b + 1);
    }
    for (int a = 0; a < dom; ++a)
        if (!seen[a]) throw FormatError("no image for letter " + std::to_string(a));
    return Morphism2d(dom, j.value("codomain", cod), std::move(rule));
}

inline json to_json(const WangTileSet& T) {
    json tiles = json::array();
    for (auto& t : T.tiles()) tiles.push_back(json::array({t.right(), t.top(), t.left(), t.bottom()}));
    return {{"tiles", tiles}};
}

inline WangTileSet tiles_from_json(const json& j) {
    if (!j.is_object() || !j.contains("tiles") || !j.at("tiles").is_array()) throw FormatError("tile set needs \"tiles\"");
    std::vector<WangTile> v;
    for (auto& t : j.at("tiles")) {
        if (t.is_string()) {
            auto s = t.get<std::string>();
            if (s.size() != 4) throw FormatError("tile string must have 4 colors: " + s);
            v.push_back({{s.substr(0, 1), s.substr(1, 1), s.substr(2, 1), s.substr(3, 1)}});
        } else {
            if (!t.is_array() || t.size() != 4) throw FormatError("tile must list 4 colors");
            v.push_back({{t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>(), t[3].get<std::string>()}});
        }
    }
    return WangTileSet(std::move(v));
}

inline json to_json(const Language2d& L) {
    json words = json::array();
    for (auto& w : L) words.push_back(to_json(w));
    return {{"size", L.size()}, {"words", words}};
}

inline json to_json(const MarkerReport& r) {
    return {{"axis", r.axis}, {"radius", r.radius}, {"markers", r.marker_subsets}};
}

inline json to_json(const DesubstitutionResult& d) {
    return {{"axis", d.axis}, {"side", side_name(d.side)}, {"tiles", to_json(d.tiles)["tiles"]}, {"morphism", to_json(d.morphism)}};
}

inline json to_json(const EquivalenceCertificate& c) {
    json v = json::object(), h = json::object();
    for (auto& [a, b] : c.vert) v[a] = b;
    for (auto& [a, b] : c.horiz) h[a] = b;
    return {{"vert", v}, {"horiz", h}, {"tile_map", c.tile_map}};
}

inline json to_json(const Z2Action& a) {
    return {{"lattice", json::array({to_json(a.lattice().l1), to_json(a.lattice().l2)})},
            {"v1", to_json(a.v1())},
            {"v2", to_json(a.v2())}};
}

inline Z2Action action_from_json(const json& j) {
    const json& l = j.at("lattice");
    return Z2Action(Lattice{qphi_from_json(l.at(0)), qphi_from_json(l.at(1))}, point_from_json(j.at("v1")),
                    point_from_json(j.at("v2")));
}

// lattice given by its diagonal basis
inline json to_json(const TorusPartition& p) {
    json atoms = json::array();
    for (auto& [k, r] : p.atoms()) {
        json cells = json::array();
        for (auto& c : r.cells) {
            json vs = json::array();
            for (auto& v : c.v) vs.push_back(to_json(v));
            cells.push_back(vs);
        }
        atoms.push_back({{"label", k}, {"cells", cells}});
    }
    const Lattice& L = p.lattice();
    return {{"lattice", json::array({json::array({to_json(L.l1), "0"}), json::array({"0", to_json(L.l2)})})},
            {"atoms", atoms}};
}

inline TorusPartition partition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("atoms") || !j.contains("lattice")) throw FormatError("partition needs \"lattice\" and \"atoms\"");
    const json& b = j.at("lattice");
    if (!b.is_array() || b.size() != 2 || b[0].size() != 2 || b[1].size() != 2) throw FormatError("lattice must be a 2x2 basis");
    if (!qphi_from_json(b[0][1]).is_zero() || !qphi_from_json(b[1][0]).is_zero())
        throw FormatError("only diagonal lattices are supported");
    Lattice L{qphi_from_json(b[0][0]), qphi_from_json(b[1][1])};
    std::map<int, Region> atoms;
    for (auto& a : j.at("atoms")) {
        Region r;
        for (auto& c : a.at("cells")) {
            Polygon poly;
            for (auto& v : c) poly.v.push_back(point_from_json(v));
            if (poly.v.size() < 3 || area(poly).sign() <= 0) throw FormatError("cell must be a counterclockwise polygon");
            r.cells.push_back(std::move(poly));
        }
        atoms[a.at("label").get<int>()] = std::move(r);
    }
    return {L, std::move(atoms)};
}

}  // namespace aperiodic::io
