// Markers, fusion of Wang tiles, desubstitution and equivalence of tile sets.
#pragma once

#include "morphism2d.hpp"
#include "wangtiles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace aperiodic {

struct EdgeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAMarkerSet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

struct MarkerReport {
    int axis = 2;
    int radius = 0;
    std::vector<std::vector<int>> marker_subsets;
};

class UnionFind {
public:
    explicit UnionFind(int n) : p_(n) { std::iota(p_.begin(), p_.end(), 0); }
    int find(int a) { return p_[a] == a ? a : p_[a] = find(p_[a]); }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) p_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> p_;
};

// classes of the perpendicular-domino relation that never touch themselves along the axis
inline MarkerReport find_markers(const WangTileSet& T, int axis, int r, int jobs = 0) {
    int perp = 3 - axis;
    auto Dperp = dominoes_with_surrounding(T, perp, r, jobs);
    UnionFind uf(static_cast<int>(T.size()));
    for (auto [u, v] : Dperp) uf.unite(u, v);
    std::map<int, std::vector<int>> classes;
    for (int t = 0; t < static_cast<int>(T.size()); ++t) classes[uf.find(t)].push_back(t);
    auto D = dominoes_with_surrounding(T, axis, r, jobs);
    MarkerReport rep{axis, r, {}};
    for (auto& [root, M] : classes) {
        std::set<int> in(M.begin(), M.end());
        bool ok = true;
        for (auto [u, v] : D)
            if (in.count(u) && in.count(v)) ok = false;
        if (ok) rep.marker_subsets.push_back(M);
    }
    return rep;
}

// u ⊙^axis v as a single tile
inline WangTile fuse(const WangTile& u, const WangTile& v, int axis) {
    if (axis == 1) {
        if (u.right() != v.left()) throw EdgeMismatch("RIGHT " + u.right() + " != LEFT " + v.left());
        return {{v.right(), u.top() + v.top(), u.left(), u.bottom() + v.bottom()}};
    }
    if (u.top() != v.bottom()) throw EdgeMismatch("TOP " + u.top() + " != BOTTOM " + v.bottom());
    return {{u.right() + v.right(), v.top(), u.left() + v.left(), u.bottom()}};
}

struct DesubstitutionResult {
    WangTileSet tiles;
    Morphism2d morphism;  // new tile index -> word over the old tiles
    Side side = Side::Right;
    int axis = 2;
};

// families that must be absent for a marker set; returns a description of the first violation
inline std::optional<std::string> marker_violation(const WangTileSet& T, const std::set<int>& M, int axis,
                                                   const DominoSet& Daxis, const DominoSet& Dperp) {
    for (auto [u, v] : Daxis)
        if (M.count(u) && M.count(v))
            return "markers adjacent along the axis: " + std::to_string(u) + "," + std::to_string(v);
    for (auto [u, v] : Dperp)
        if (M.count(u) != M.count(v))
            return "marker next to non-marker across the axis: " + std::to_string(u) + "," + std::to_string(v);
    (void)T;
    (void)axis;
    return std::nullopt;
}

inline DesubstitutionResult find_substitution(const WangTileSet& T, const std::vector<int>& markers, int axis, int r,
                                              Side side, int jobs = 0) {
    std::set<int> M(markers.begin(), markers.end());
    if (M.empty()) throw NotAMarkerSet("empty marker set");
    auto D = dominoes_with_surrounding(T, axis, r, jobs);
    auto Dperp = dominoes_with_surrounding(T, 3 - axis, r, jobs);
    if (auto why = marker_violation(T, M, axis, D, Dperp)) throw NotAMarkerSet(*why);
    std::set<int> K;
    std::vector<std::pair<int, int>> P;
    for (auto [u, v] : D) {
        bool mu = M.count(u), mv = M.count(v);
        if (side == Side::Right) {
            if (!mu && mv) P.push_back({u, v});
            if (!mu && !mv) K.insert(u);
        } else {
            if (mu && !mv) P.push_back({u, v});
            if (!mu && !mv) K.insert(v);
        }
    }
    std::sort(P.begin(), P.end());
    std::vector<WangTile> tiles;
    std::vector<Word2d> rule;
    for (int k : K) {
        tiles.push_back(T[k]);
        rule.push_back(Word2d::letter(k));
    }
    for (auto [u, v] : P) {
        tiles.push_back(fuse(T[u], T[v], axis));
        rule.push_back(domino(u, v, axis));
    }
    int n = static_cast<int>(tiles.size());
    return {WangTileSet(std::move(tiles)), Morphism2d(n, static_cast<int>(T.size()), std::move(rule)), side, axis};
}

struct EquivalenceCertificate {
    std::map<std::string, std::string> vert;   // vertical colors of T -> colors of S
    std::map<std::string, std::string> horiz;  // horizontal colors of T -> colors of S
    std::vector<int> tile_map;                 // T index -> S index
};

// color maps and tile bijection turning T into exactly S; first found in tile order
inline std::optional<EquivalenceCertificate> is_equivalent(const WangTileSet& T, const WangTileSet& S) {
    if (T.size() != S.size()) return std::nullopt;
    if (T.vertical_colors().size() != S.vertical_colors().size()) return std::nullopt;
    if (T.horizontal_colors().size() != S.horizontal_colors().size()) return std::nullopt;
    const int n = static_cast<int>(T.size());
    EquivalenceCertificate cert;
    std::map<std::string, std::string> vinv, hinv;
    std::vector<int> tm(n, -1);
    std::vector<char> used(n, 0);

    auto bind = [](std::map<std::string, std::string>& f, std::map<std::string, std::string>& finv,
                   const std::string& a, const std::string& b, std::vector<std::string>& added) {
        auto it = f.find(a);
        if (it != f.end()) return it->second == b;
        auto jt = finv.find(b);
        if (jt != finv.end()) return false;
        f[a] = b;
        finv[b] = a;
        added.push_back(a);
        return true;
    };

    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        const WangTile& t = T[i];
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            const WangTile& s = S[j];
            std::vector<std::string> va, ha;
            bool ok = bind(cert.vert, vinv, t.right(), s.right(), va) && bind(cert.vert, vinv, t.left(), s.left(), va) &&
                      bind(cert.horiz, hinv, t.top(), s.top(), ha) &&
                      bind(cert.horiz, hinv, t.bottom(), s.bottom(), ha);
            if (ok) {
                used[j] = 1;
                tm[i] = j;
                if (self(self, i + 1)) return true;
                used[j] = 0;
                tm[i] = -1;
            }
            for (auto& a : va) vinv.erase(cert.vert[a]), cert.vert.erase(a);
            for (auto& a : ha) hinv.erase(cert.horiz[a]), cert.horiz.erase(a);
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    cert.tile_map = tm;
    return cert;
}

// the letter permutation T -> S of a certificate, as 1x1 images
inline Morphism2d certificate_morphism(const EquivalenceCertificate& c) {
    return Morphism2d::from_permutation(c.tile_map, static_cast<int>(c.tile_map.size()));
}

}  // namespace aperiodic
