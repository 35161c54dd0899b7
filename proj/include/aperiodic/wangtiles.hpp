// Wang tiles, validity, a rectangle/torus solver with two backends, surroundings.
#pragma once

#include "parallel.hpp"
#include "word2d.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aperiodic {

struct UnknownTileIndex : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct SingularLattice : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (right, top, left, bottom)
struct WangTile {
    std::array<std::string, 4> c;
    const std::string& right() const { return c[0]; }
    const std::string& top() const { return c[1]; }
    const std::string& left() const { return c[2]; }
    const std::string& bottom() const { return c[3]; }
    friend bool operator==(const WangTile&, const WangTile&) = default;
    friend auto operator<=>(const WangTile&, const WangTile&) = default;
    std::string str() const { return "(" + c[0] + "," + c[1] + "," + c[2] + "," + c[3] + ")"; }
};

class WangTileSet {
public:
    WangTileSet() = default;
    explicit WangTileSet(std::vector<WangTile> tiles) : tiles_(std::move(tiles)) {}

    // one character per color, e.g. "FOJO"
    static WangTileSet from_strings(const std::vector<std::string>& ts) {
        std::vector<WangTile> v;
        for (auto& s : ts) {
            if (s.size() != 4) throw std::invalid_argument("tile string must have 4 colors: " + s);
            v.push_back({{std::string(1, s[0]), std::string(1, s[1]), std::string(1, s[2]), std::string(1, s[3])}});
        }
        return WangTileSet(std::move(v));
    }

    std::size_t size() const { return tiles_.size(); }
    bool empty() const { return tiles_.empty(); }
    const WangTile& operator[](std::size_t i) const {
        if (i >= tiles_.size()) throw UnknownTileIndex("tile index " + std::to_string(i));
        return tiles_[i];
    }
    const std::vector<WangTile>& tiles() const { return tiles_; }

    std::set<std::string> vertical_colors() const {
        std::set<std::string> s;
        for (auto& t : tiles_) s.insert(t.right()), s.insert(t.left());
        return s;
    }
    std::set<std::string> horizontal_colors() const {
        std::set<std::string> s;
        for (auto& t : tiles_) s.insert(t.top()), s.insert(t.bottom());
        return s;
    }

    friend bool operator==(const WangTileSet&, const WangTileSet&) = default;

private:
    std::vector<WangTile> tiles_;
};

inline void check_indices(const WangTileSet& T, const Word2d& w) {
    for (auto a : w.data())
        if (a < 0 || static_cast<std::size_t>(a) >= T.size()) throw UnknownTileIndex("tile index " + std::to_string(a));
}

inline bool is_valid_pattern(const WangTileSet& T, const Word2d& w) {
    check_indices(T, w);
    for (int x = 0; x < w.width(); ++x)
        for (int y = 0; y < w.height(); ++y) {
            if (x + 1 < w.width() && T[w(x, y)].right() != T[w(x + 1, y)].left()) return false;
            if (y + 1 < w.height() && T[w(x, y)].top() != T[w(x, y + 1)].bottom()) return false;
        }
    return true;
}

// sublattice <(a,0),(b,d)> in Hermite normal form; the quotient is an a x d twisted torus
struct PeriodLattice {
    int a = 1, b = 0, d = 1;
    long index() const { return static_cast<long>(a) * d; }

    // columns (p1,q1), (p2,q2)
    static PeriodLattice from_basis(long p1, long q1, long p2, long q2) {
        long det = p1 * q2 - p2 * q1;
        if (det == 0) throw SingularLattice("period basis is singular");
        // extended gcd on the second coordinates
        long r0 = q1, r1 = q2, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            long qt = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - qt * s1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - qt * t1);
        }
        if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
        long d = r0;
        long wx = s0 * p1 + t0 * p2;
        long a = std::labs(det) / d;
        long b = ((wx % a) + a) % a;
        return {static_cast<int>(a), static_cast<int>(b), static_cast<int>(d)};
    }

    friend bool operator==(const PeriodLattice&, const PeriodLattice&) = default;
};

// all sublattices of Z^2 with index <= n, one HNF each
inline std::vector<PeriodLattice> sublattices_up_to(int n) {
    std::vector<PeriodLattice> out;
    for (int idx = 1; idx <= n; ++idx)
        for (int a = 1; a <= idx; ++a)
            if (idx % a == 0)
                for (int b = 0; b < a; ++b) out.push_back({a, b, idx / a});
    return out;
}

struct TilingInstance {
    const WangTileSet* tiles = nullptr;
    Shape shape;
    std::vector<std::pair<Vec2i, int>> fixed;
    std::optional<PeriodLattice> wrap;  // requires shape == (a, d)
};

enum class SolverBackend { Backtracking, DancingLinks };

namespace detail {

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n, bool full = false) : n_(n), w_((n + 63) / 64, 0) {
        if (full) {
            for (std::size_t i = 0; i < n; ++i) set(i);
        }
    }
    void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t(1) << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    bool any() const {
        for (auto v : w_)
            if (v) return true;
        return false;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto v : w_) c += static_cast<std::size_t>(__builtin_popcountll(v));
        return c;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // returns true if something was removed
    bool and_with(const Bits& o) {
        bool ch = false;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            auto nv = w_[i] & o.w_[i];
            ch |= nv != w_[i];
            w_[i] = nv;
        }
        return ch;
    }
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }
    std::vector<int> members() const {
        std::vector<int> r;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            auto v = w_[i];
            while (v) {
                r.push_back(static_cast<int>(i * 64 + __builtin_ctzll(v)));
                v &= v - 1;
            }
        }
        return r;
    }
    std::size_t size() const { return n_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// integer view of a tile set: vertical colors (right/left) and horizontal colors (top/bottom)
struct CompiledTiles {
    int m = 0, nv = 0, nh = 0;
    std::vector<int> R, T, L, B;
    std::vector<Bits> withRight, withTop, withLeft, withBottom;

    explicit CompiledTiles(const WangTileSet& ts) : m(static_cast<int>(ts.size())) {
        std::map<std::string, int> vid, hid;
        for (auto& c : ts.vertical_colors()) vid.emplace(c, static_cast<int>(vid.size()));
        for (auto& c : ts.horizontal_colors()) hid.emplace(c, static_cast<int>(hid.size()));
        nv = static_cast<int>(vid.size());
        nh = static_cast<int>(hid.size());
        withRight.assign(nv, Bits(m));
        withLeft.assign(nv, Bits(m));
        withTop.assign(nh, Bits(m));
        withBottom.assign(nh, Bits(m));
        for (int t = 0; t < m; ++t) {
            auto& tile = ts[t];
            R.push_back(vid[tile.right()]);
            L.push_back(vid[tile.left()]);
            T.push_back(hid[tile.top()]);
            B.push_back(hid[tile.bottom()]);
            withRight[R[t]].set(t);
            withLeft[L[t]].set(t);
            withTop[T[t]].set(t);
            withBottom[B[t]].set(t);
        }
    }
};

// cells indexed y*w + x; horizontal edges (c, right(c)) and vertical edges (c, top(c))
struct GridGraph {
    int w = 0, h = 0;
    std::vector<std::pair<int, int>> hedges, vedges;

    GridGraph(Shape s, const std::optional<PeriodLattice>& wrap) : w(s.w), h(s.h) {
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                int c = y * w + x;
                if (x + 1 < w) hedges.push_back({c, c + 1});
                else if (wrap) hedges.push_back({c, y * w});
                if (y + 1 < h) vedges.push_back({c, c + w});
                else if (wrap) {
                    int nx = ((x - wrap->b) % w + w) % w;
                    vedges.push_back({c, nx});
                }
            }
    }
    int cells() const { return w * h; }
};

class BacktrackingSolver {
public:
    BacktrackingSolver(const CompiledTiles& ct, const GridGraph& g) : ct_(ct), g_(g) {
        arcs_.resize(g.cells());
        for (auto [a, b] : g.hedges) {
            if (a == b) continue;
            arcs_[a].push_back({b, 0});  // b is right of a
            arcs_[b].push_back({a, 1});  // a is left of b
        }
        for (auto [a, b] : g.vedges) {
            if (a == b) continue;
            arcs_[a].push_back({b, 2});  // b above a
            arcs_[b].push_back({a, 3});  // a below b
        }
    }

    std::optional<std::vector<int>> solve(std::vector<Bits> dom) {
        // unary constraints from self-adjacent cells
        for (auto [a, b] : g_.hedges)
            if (a == b) {
                Bits ok(ct_.m);
                for (int t = 0; t < ct_.m; ++t)
                    if (ct_.R[t] == ct_.L[t]) ok.set(t);
                dom[a].and_with(ok);
            }
        for (auto [a, b] : g_.vedges)
            if (a == b) {
                Bits ok(ct_.m);
                for (int t = 0; t < ct_.m; ++t)
                    if (ct_.T[t] == ct_.B[t]) ok.set(t);
                dom[a].and_with(ok);
            }
        std::vector<int> all(g_.cells());
        std::iota(all.begin(), all.end(), 0);
        if (!propagate(dom, all)) return std::nullopt;
        if (!search(dom)) return std::nullopt;
        std::vector<int> sol;
        for (auto& d : result_) sol.push_back(d.first());
        return sol;
    }

private:
    struct Arc {
        int to, kind;
    };
    const CompiledTiles& ct_;
    const GridGraph& g_;
    std::vector<std::vector<Arc>> arcs_;
    std::vector<Bits> result_;

    Bits support(const Bits& d, int kind) const {
        Bits out(ct_.m);
        switch (kind) {
            case 0:
                for (int c = 0; c < ct_.nv; ++c)
                    if (d.intersects(ct_.withRight[c])) out |= ct_.withLeft[c];
                break;
            case 1:
                for (int c = 0; c < ct_.nv; ++c)
                    if (d.intersects(ct_.withLeft[c])) out |= ct_.withRight[c];
                break;
            case 2:
                for (int c = 0; c < ct_.nh; ++c)
                    if (d.intersects(ct_.withTop[c])) out |= ct_.withBottom[c];
                break;
            default:
                for (int c = 0; c < ct_.nh; ++c)
                    if (d.intersects(ct_.withBottom[c])) out |= ct_.withTop[c];
                break;
        }
        return out;
    }

    bool propagate(std::vector<Bits>& dom, std::vector<int> queue) const {
        std::vector<char> inq(dom.size(), 0);
        for (int c : queue) {
            if (!dom[c].any()) return false;
            inq[c] = 1;
        }
        std::size_t head = 0;
        while (head < queue.size()) {
            int c = queue[head++];
            inq[c] = 0;
            for (auto& arc : arcs_[c]) {
                if (dom[arc.to].and_with(support(dom[c], arc.kind))) {
                    if (!dom[arc.to].any()) return false;
                    if (!inq[arc.to]) inq[arc.to] = 1, queue.push_back(arc.to);
                }
            }
        }
        return true;
    }

    bool search(std::vector<Bits>& dom) {
        int cell = -1;
        for (int c = 0; c < static_cast<int>(dom.size()); ++c)
            if (dom[c].count() > 1) {
                cell = c;
                break;
            }
        if (cell < 0) {
            result_ = dom;
            return true;
        }
        for (int t : dom[cell].members()) {
            std::vector<Bits> next = dom;
            next[cell] = Bits(ct_.m);
            next[cell].set(t);
            if (propagate(next, {cell}) && search(next)) return true;
        }
        return false;
    }
};

// Algorithm X with dancing links. Rows are (cell, tile); columns are the cells plus,
// for every edge and color, a column covered exactly once iff the edge colors agree.
class DancingLinksSolver {
public:
    DancingLinksSolver(const CompiledTiles& ct, const GridGraph& g) : ct_(ct), g_(g) {}

    std::optional<std::vector<int>> solve(const std::vector<Bits>& dom) {
        const int ncells = g_.cells();
        int ncols = ncells;
        std::vector<int> hbase, vbase;
        for (std::size_t e = 0; e < g_.hedges.size(); ++e) {
            hbase.push_back(g_.hedges[e].first == g_.hedges[e].second ? -1 : ncols);
            if (hbase.back() >= 0) ncols += ct_.nv;
        }
        for (std::size_t e = 0; e < g_.vedges.size(); ++e) {
            vbase.push_back(g_.vedges[e].first == g_.vedges[e].second ? -1 : ncols);
            if (vbase.back() >= 0) ncols += ct_.nh;
        }
        // which edges touch a cell, and on which side
        std::vector<std::vector<std::pair<int, int>>> hl(ncells), hr(ncells), vb(ncells), vt(ncells);
        for (std::size_t e = 0; e < g_.hedges.size(); ++e) {
            auto [a, b] = g_.hedges[e];
            if (a == b) continue;
            hl[a].push_back({static_cast<int>(e), hbase[e]});
            hr[b].push_back({static_cast<int>(e), hbase[e]});
        }
        for (std::size_t e = 0; e < g_.vedges.size(); ++e) {
            auto [a, b] = g_.vedges[e];
            if (a == b) continue;
            vb[a].push_back({static_cast<int>(e), vbase[e]});
            vt[b].push_back({static_cast<int>(e), vbase[e]});
        }
        init(ncols);
        for (int c = 0; c < ncells; ++c) {
            for (int t : dom[c].members()) {
                bool selfok = true;
                for (auto [a, b] : g_.hedges)
                    if (a == c && b == c && ct_.R[t] != ct_.L[t]) selfok = false;
                for (auto [a, b] : g_.vedges)
                    if (a == c && b == c && ct_.T[t] != ct_.B[t]) selfok = false;
                if (!selfok) continue;
                std::vector<int> cols{c};
                for (auto [e, base] : hl[c])  // c is the left cell: all colors but RIGHT(t)
                    for (int k = 0; k < ct_.nv; ++k)
                        if (k != ct_.R[t]) cols.push_back(base + k);
                for (auto [e, base] : hr[c]) cols.push_back(base + ct_.L[t]);
                for (auto [e, base] : vb[c])
                    for (int k = 0; k < ct_.nh; ++k)
                        if (k != ct_.T[t]) cols.push_back(base + k);
                for (auto [e, base] : vt[c]) cols.push_back(base + ct_.B[t]);
                add_row(c, t, cols);
            }
        }
        ncells_ = ncells;
        std::vector<int> chosen;
        if (!search(chosen)) return std::nullopt;
        std::vector<int> sol(ncells, -1);
        for (int r : chosen) sol[row_cell_[r]] = row_tile_[r];
        return sol;
    }

private:
    const CompiledTiles& ct_;
    const GridGraph& g_;
    int ncells_ = 0;
    // node arrays; nodes 0..ncols-1 are column headers, node ncols is the root
    std::vector<int> L_, R_, U_, D_, C_, rowof_, size_;
    std::vector<int> row_cell_, row_tile_;
    int root_ = 0;

    int new_node() {
        L_.push_back(0), R_.push_back(0), U_.push_back(0), D_.push_back(0), C_.push_back(0), rowof_.push_back(-1);
        return static_cast<int>(L_.size()) - 1;
    }

    void init(int ncols) {
        for (int i = 0; i <= ncols; ++i) new_node();
        root_ = ncols;
        size_.assign(ncols, 0);
        for (int i = 0; i <= ncols; ++i) {
            L_[i] = (i == 0 ? ncols : i - 1);
            R_[i] = (i == ncols ? 0 : i + 1);
            U_[i] = D_[i] = i;
            C_[i] = i;
        }
    }

    void add_row(int cell, int tile, const std::vector<int>& cols) {
        int r = static_cast<int>(row_cell_.size());
        row_cell_.push_back(cell);
        row_tile_.push_back(tile);
        int first = -1;
        for (int c : cols) {
            int n = new_node();
            C_[n] = c;
            rowof_[n] = r;
            U_[n] = U_[c];
            D_[n] = c;
            D_[U_[c]] = n;
            U_[c] = n;
            ++size_[c];
            if (first < 0) {
                first = n;
                L_[n] = R_[n] = n;
            } else {
                L_[n] = L_[first];
                R_[n] = first;
                R_[L_[first]] = n;
                L_[first] = n;
            }
        }
    }

    void cover(int c) {
        L_[R_[c]] = L_[c];
        R_[L_[c]] = R_[c];
        for (int i = D_[c]; i != c; i = D_[i])
            for (int j = R_[i]; j != i; j = R_[j]) {
                U_[D_[j]] = U_[j];
                D_[U_[j]] = D_[j];
                --size_[C_[j]];
            }
    }
    void uncover(int c) {
        for (int i = U_[c]; i != c; i = U_[i])
            for (int j = L_[i]; j != i; j = L_[j]) {
                ++size_[C_[j]];
                U_[D_[j]] = j;
                D_[U_[j]] = j;
            }
        L_[R_[c]] = c;
        R_[L_[c]] = c;
    }

    bool search(std::vector<int>& chosen) {
        if (R_[root_] == root_) return true;
        int pick = -1;
        for (int c = R_[root_]; c != root_; c = R_[c]) {
            if (size_[c] == 0) return false;
            if (pick < 0 && c < ncells_) pick = c;
        }
        if (pick < 0) return false;  // only edge columns left, yet uncovered
        cover(pick);
        for (int r = D_[pick]; r != pick; r = D_[r]) {
            chosen.push_back(rowof_[r]);
            for (int j = R_[r]; j != r; j = R_[j]) cover(C_[j]);
            if (search(chosen)) return true;
            for (int j = L_[r]; j != r; j = L_[j]) uncover(C_[j]);
            chosen.pop_back();
        }
        uncover(pick);
        return false;
    }
};

}  // namespace detail

// Complete search; returns the lexicographically least solution in row-major
// cell order (y, then x) under tile-index order, for both backends.
inline std::optional<Word2d> solve(const TilingInstance& inst, SolverBackend backend = SolverBackend::Backtracking) {
    if (!inst.tiles) throw std::invalid_argument("instance without tile set");
    const WangTileSet& T = *inst.tiles;
    Shape s = inst.shape;
    if (s.w <= 0 || s.h <= 0) return Word2d(s.w, s.h);
    if (inst.wrap && (inst.wrap->a != s.w || inst.wrap->d != s.h))
        throw std::invalid_argument("wrapped instance shape must equal the lattice rectangle");
    if (T.empty()) return std::nullopt;
    detail::CompiledTiles ct(T);
    detail::GridGraph g(s, inst.wrap);
    std::vector<detail::Bits> dom(g.cells(), detail::Bits(ct.m, true));
    for (auto& [p, t] : inst.fixed) {
        if (p.x < 0 || p.y < 0 || p.x >= s.w || p.y >= s.h) throw std::out_of_range("fixed cell outside shape");
        if (t < 0 || t >= ct.m) throw UnknownTileIndex("tile index " + std::to_string(t));
        detail::Bits one(ct.m);
        one.set(t);
        dom[p.y * s.w + p.x].and_with(one);
    }
    for (auto& d : dom)
        if (!d.any()) return std::nullopt;
    std::optional<std::vector<int>> sol;
    if (backend == SolverBackend::Backtracking) {
        detail::BacktrackingSolver bs(ct, g);
        sol = bs.solve(dom);
    } else {
        detail::DancingLinksSolver dl(ct, g);
        sol = dl.solve(dom);
    }
    if (!sol) return std::nullopt;
    Word2d w(s.w, s.h);
    for (int y = 0; y < s.h; ++y)
        for (int x = 0; x < s.w; ++x) w.at(x, y) = (*sol)[y * s.w + x];
    return w;
}

inline std::optional<Word2d> solve_rectangle(const WangTileSet& T, Shape s,
                                             SolverBackend backend = SolverBackend::Backtracking) {
    TilingInstance inst{&T, s, {}, std::nullopt};
    return solve(inst, backend);
}

inline bool admits_surrounding(const WangTileSet& T, const Word2d& u, int r,
                               SolverBackend backend = SolverBackend::Backtracking) {
    check_indices(T, u);
    if (!is_valid_pattern(T, u)) return false;
    TilingInstance inst{&T, {u.width() + 2 * r, u.height() + 2 * r}, {}, std::nullopt};
    for (int x = 0; x < u.width(); ++x)
        for (int y = 0; y < u.height(); ++y) inst.fixed.push_back({{x + r, y + r}, u(x, y)});
    return solve(inst, backend).has_value();
}

inline Word2d domino(Letter u, Letter v, int axis) {
    return axis == 1 ? Word2d::from_columns({{u}, {v}}) : Word2d::from_columns({{u, v}});
}

using DominoSet = std::set<std::pair<int, int>>;

// D_i: pairs (u,v) such that u ⊙^i v admits a surrounding of radius r
inline DominoSet dominoes_with_surrounding(const WangTileSet& T, int axis, int r, int jobs = 0) {
    std::vector<std::pair<int, int>> cand;
    for (int u = 0; u < static_cast<int>(T.size()); ++u)
        for (int v = 0; v < static_cast<int>(T.size()); ++v) {
            bool match = axis == 1 ? T[u].right() == T[v].left() : T[u].top() == T[v].bottom();
            if (match) cand.push_back({u, v});
        }
    std::vector<char> ok(cand.size(), 0);
    parallel_for(cand.size(), jobs, [&](std::size_t i) {
        ok[i] = admits_surrounding(T, domino(cand[i].first, cand[i].second, axis), r) ? 1 : 0;
    });
    DominoSet out;
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (ok[i]) out.insert(cand[i]);
    return out;
}

inline bool exists_periodic_tiling(const WangTileSet& T, const PeriodLattice& L,
                                   SolverBackend backend = SolverBackend::Backtracking) {
    if (T.empty()) return false;
    TilingInstance inst{&T, {L.a, L.d}, {}, L};
    return solve(inst, backend).has_value();
}

// basis given as columns (p1,q1), (p2,q2)
inline bool exists_periodic_tiling(const WangTileSet& T, long p1, long q1, long p2, long q2) {
    return exists_periodic_tiling(T, PeriodLattice::from_basis(p1, q1, p2, q2));
}

// every valid pattern of the given shape, in lexicographic row-major order
inline std::vector<Word2d> valid_patterns(const WangTileSet& T, Shape s) {
    std::vector<Word2d> out;
    if (s.w <= 0 || s.h <= 0) return out;
    Word2d w(s.w, s.h);
    const int n = s.w * s.h, m = static_cast<int>(T.size());
    std::vector<int> cur(n, -1);
    auto rec = [&](auto&& self, int c) -> void {
        if (c == n) {
            for (int i = 0; i < n; ++i) w.at(i % s.w, i / s.w) = cur[i];
            out.push_back(w);
            return;
        }
        int x = c % s.w, y = c / s.w;
        for (int t = 0; t < m; ++t) {
            if (x > 0 && T[cur[c - 1]].right() != T[t].left()) continue;
            if (y > 0 && T[cur[c - s.w]].top() != T[t].bottom()) continue;
            cur[c] = t;
            self(self, c + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// shape-s patterns admitting a surrounding of radius r
inline Language2d surrounding_language(const WangTileSet& T, Shape s, int r, int jobs = 0) {
    auto cand = valid_patterns(T, s);
    std::vector<char> ok(cand.size(), 0);
    parallel_for(cand.size(), jobs, [&](std::size_t i) { ok[i] = admits_surrounding(T, cand[i], r) ? 1 : 0; });
    Language2d out;
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (ok[i]) out.insert(cand[i]);
    return out;
}

}  // namespace aperiodic
