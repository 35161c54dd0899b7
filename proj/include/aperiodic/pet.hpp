// Polygon exchange transformations, toral Z^2-rotations, induced actions and partitions.
#pragma once

#include "geometry.hpp"
#include "morphism2d.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aperiodic {

struct NonReturningPiece : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAToralTranslation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PetPiece {
    Polygon poly;
    Point v;
};

class PET {
public:
    PET() = default;
    PET(Lattice L, std::vector<PetPiece> pieces) : lattice_(std::move(L)), pieces_(std::move(pieces)) {}

    const Lattice& lattice() const { return lattice_; }
    const std::vector<PetPiece>& pieces() const { return pieces_; }

    Point apply(const Point& x) const {
        for (auto& pc : pieces_)
            if (contains_closed(pc.poly, x)) {
                if (!contains_interior(pc.poly, x)) break;
                return x + pc.v;
            }
        throw BoundaryHit("PET undefined at " + x.str());
    }

    PET inverse() const {
        std::vector<PetPiece> inv;
        for (auto& pc : pieces_) inv.push_back({pc.poly.translated(pc.v), {-pc.v.x, -pc.v.y}});
        return {lattice_, std::move(inv)};
    }

    // pieces and their images both tile the domain
    bool is_bijective() const {
        QPhi dom = lattice_.covolume(), s;
        Polygon D = lattice_.domain();
        std::vector<Polygon> img;
        for (auto& pc : pieces_) {
            s += area(pc.poly);
            img.push_back(pc.poly.translated(pc.v));
            auto inside = intersect(img.back(), D);
            if (!inside || !(area(*inside) == area(pc.poly))) return false;
        }
        if (!(s == dom)) return false;
        for (std::size_t i = 0; i < pieces_.size(); ++i)
            for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
                if (intersect(pieces_[i].poly, pieces_[j].poly)) return false;
                if (intersect(img[i], img[j])) return false;
            }
        return true;
    }

private:
    Lattice lattice_;
    std::vector<PetPiece> pieces_;
};

// x -> x + v on R^2 / (l1 Z x l2 Z) as an exchange of at most four rectangles
inline PET toral_translation(const Lattice& L, const Point& v) {
    Point w = L.reduce(v);
    auto split = [](const QPhi& t, const QPhi& l) {
        std::vector<std::tuple<QPhi, QPhi, QPhi>> r;  // [lo, hi) moved by d
        if (t.is_zero()) {
            r.emplace_back(QPhi(0), l, QPhi(0));
        } else {
            r.emplace_back(QPhi(0), l - t, t);
            r.emplace_back(l - t, l, t - l);
        }
        return r;
    };
    std::vector<PetPiece> pieces;
    for (auto& [x0, x1, dx] : split(w.x, L.l1))
        for (auto& [y0, y1, dy] : split(w.y, L.l2)) pieces.push_back({Polygon::rect(x0, y0, x1, y1), {dx, dy}});
    return {L, std::move(pieces)};
}

// the strip {x : x_axis < bound}
struct Window {
    int axis = 2;
    QPhi bound;

    Polygon polygon(const Lattice& L) const {
        return axis == 1 ? Polygon::rect(0, 0, bound, L.l2) : Polygon::rect(0, 0, L.l1, bound);
    }
    Lattice induced_lattice(const Lattice& L) const { return axis == 1 ? Lattice{bound, L.l2} : Lattice{L.l1, bound}; }
    const QPhi& coord(const Point& p) const { return axis == 1 ? p.x : p.y; }
    HalfPlane inside() const { return axis == 1 ? HalfPlane{1, 0, bound} : HalfPlane{0, 1, bound}; }
    bool contains(const Point& p) const {
        const QPhi& c = coord(p);
        if (c.is_zero() || c == bound) throw BoundaryHit("point " + p.str() + " on the window boundary");
        return c.sign() > 0 && c < bound;
    }
};

struct InducedMap {
    PET pet;                        // on the induced lattice
    std::vector<int> return_time;   // per piece
    int max_return_time() const { return return_time.empty() ? 0 : *std::max_element(return_time.begin(), return_time.end()); }
};

// first-return map of t on the window
inline InducedMap induced_transformation(const PET& t, const Window& w, int max_time = 1000) {
    const Lattice& L = t.lattice();
    Lattice IL = w.induced_lattice(L);
    HalfPlane in = w.inside(), out = in.opposite();
    struct State {
        Polygon cur;
        Point tau;
        int k;
    };
    std::vector<State> todo{{w.polygon(L), {0, 0}, 0}};
    InducedMap res;
    std::vector<PetPiece> pieces;
    while (!todo.empty()) {
        State s = std::move(todo.back());
        todo.pop_back();
        if (s.k >= max_time) throw NonReturningPiece("no return within " + std::to_string(max_time) + " steps");
        Box sb = s.cur.box();
        for (auto& pc : t.pieces()) {
            if (!sb.overlaps(pc.poly.box())) continue;
            auto z = intersect(s.cur, pc.poly);
            if (!z) continue;
            Polygon moved = z->translated(pc.v);
            Point tau = s.tau + pc.v;
            if (auto a = clip(moved, in)) {
                Polygon X = a->translated({-tau.x, -tau.y});
                pieces.push_back({X, tau});
                res.return_time.push_back(s.k + 1);
            }
            if (auto b = clip(moved, out)) todo.push_back({*b, tau, s.k + 1});
        }
    }
    res.pet = PET(IL, std::move(pieces));
    return res;
}

class Z2Action {
public:
    Z2Action() = default;
    Z2Action(Lattice L, Point v1, Point v2)
        : lattice_(std::move(L)), v1_(lattice_.reduce(v1)), v2_(lattice_.reduce(v2)),
          gen1_(toral_translation(lattice_, v1_)), gen2_(toral_translation(lattice_, v2_)) {}

    const Lattice& lattice() const { return lattice_; }
    const Point& v1() const { return v1_; }
    const Point& v2() const { return v2_; }
    const PET& gen1() const { return gen1_; }
    const PET& gen2() const { return gen2_; }
    const PET& gen(int axis) const { return axis == 1 ? gen1_ : gen2_; }
    const Point& vec(int axis) const { return axis == 1 ? v1_ : v2_; }

    // R^n(x)
    Point act(const Point& x, long n1, long n2) const {
        return lattice_.reduce(x + v1_ * QPhi(n1) + v2_ * QPhi(n2));
    }
    bool axis_aligned() const { return v1_.y.is_zero() && v2_.x.is_zero(); }

private:
    Lattice lattice_;
    Point v1_, v2_;
    PET gen1_, gen2_;
};

inline bool operator==(const Z2Action& a, const Z2Action& b) {
    return a.lattice() == b.lattice() && a.v1() == b.v1() && a.v2() == b.v2();
}

// translation of a first-return map that is a single toral translation of the induced torus
inline Point recognize_translation(const InducedMap& m) {
    const auto& ps = m.pet.pieces();
    if (ps.empty()) throw NotAToralTranslation("empty map");
    const Lattice& L = m.pet.lattice();
    Point v = L.reduce(ps[0].v);
    for (auto& pc : ps)
        if (!(L.reduce(pc.v) == v)) throw NotAToralTranslation("pieces move by " + v.str() + " and " + L.reduce(pc.v).str());
    return v;
}

inline Z2Action induce_action(const Z2Action& a, const Window& w) {
    if (!a.axis_aligned()) throw std::invalid_argument("generators are not axis-aligned");
    Lattice IL = w.induced_lattice(a.lattice());
    Point v1 = recognize_translation(induced_transformation(a.gen1(), w));
    Point v2 = recognize_translation(induced_transformation(a.gen2(), w));
    return {IL, v1, v2};
}

inline int code(const TorusPartition& p, const Z2Action& a, const Point& x, long n1, long n2) {
    return p.code(a.act(x, n1, n2));
}

// patch of Config_x over [offset, offset + shape)
inline Word2d config_patch(const TorusPartition& p, const Z2Action& a, const Point& x, Shape shape,
                           Vec2i offset = {0, 0}) {
    std::vector<Letter> cells(static_cast<std::size_t>(shape.w * shape.h));
    for (int i = 0; i < shape.w; ++i)
        for (int j = 0; j < shape.h; ++j) {
            long n1 = offset.x + i, n2 = offset.y + j;
            try {
                cells[static_cast<std::size_t>(i * shape.h + j)] = code(p, a, x, n1, n2);
            } catch (const BoundaryHit&) {
                throw BoundaryHit("orbit hits a boundary at n = (" + std::to_string(n1) + "," + std::to_string(n2) + ")");
            }
        }
    return Word2d(shape, std::move(cells));
}

inline int first_return_time(const Z2Action& a, const Window& w, const Point& x, int axis, int max_time = 1000) {
    for (int k = 1; k <= max_time; ++k) {
        Point y = axis == 1 ? a.act(x, k, 0) : a.act(x, 0, k);
        if (w.contains(y)) return k;
    }
    throw NonReturningPiece("no return within " + std::to_string(max_time) + " steps");
}

inline Word2d return_word(const TorusPartition& p, const Z2Action& a, const Window& w, const Point& x) {
    Point y = a.lattice().reduce(x);
    if (!w.contains(y)) throw std::invalid_argument("point " + x.str() + " is outside the window");
    int r = first_return_time(a, w, y, 1), s = first_return_time(a, w, y, 2);
    return config_patch(p, a, y, {r, s});
}

namespace detail {

// shorter first, then lexicographic on the flattened reading
inline bool return_word_less(const Word2d& u, const Word2d& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return u.data() < v.data();
}

}  // namespace detail

struct InducedPartition {
    TorusPartition partition;
    Morphism2d morphism;
};

// atoms = regions of constant return word; morphism b -> return word of atom b
inline InducedPartition induced_partition(const TorusPartition& p, const Z2Action& a, const Window& w,
                                          int max_time = 1000) {
    if (!a.axis_aligned()) throw std::invalid_argument("generators are not axis-aligned");
    const Lattice& L = a.lattice();
    const int axis = w.axis;
    // the other generator preserves the strip, so the return time along it is 1
    const PET& g = a.gen(axis);
    HalfPlane in = w.inside(), out = in.opposite();
    struct State {
        Polygon cur;
        Point tau;
        std::vector<Letter> word;
    };
    std::vector<std::pair<std::vector<Letter>, Polygon>> done;
    std::vector<State> todo{{w.polygon(L), {0, 0}, {}}};
    std::vector<std::pair<int, Polygon>> atom_cells;
    std::vector<Box> atom_boxes;
    for (auto& [k, r] : p.atoms())
        for (auto& c : r.cells) atom_cells.push_back({k, c}), atom_boxes.push_back(c.box());
    while (!todo.empty()) {
        State s = std::move(todo.back());
        todo.pop_back();
        if (static_cast<int>(s.word.size()) >= max_time) throw NonReturningPiece("return word too long");
        Box sb = s.cur.box();
        for (std::size_t ai = 0; ai < atom_cells.size(); ++ai) {
            if (!sb.overlaps(atom_boxes[ai])) continue;
            auto z = intersect(s.cur, atom_cells[ai].second);
            if (!z) continue;
            std::vector<Letter> word = s.word;
            word.push_back(atom_cells[ai].first);
            Box zb = z->box();
            for (auto& pc : g.pieces()) {
                if (!zb.overlaps(pc.poly.box())) continue;
                auto zz = intersect(*z, pc.poly);
                if (!zz) continue;
                Polygon moved = zz->translated(pc.v);
                Point tau = s.tau + pc.v;
                if (auto ia = clip(moved, in)) done.push_back({word, ia->translated({-tau.x, -tau.y})});
                if (auto ob = clip(moved, out)) todo.push_back({*ob, tau, word});
            }
        }
    }
    auto to_word = [axis](const std::vector<Letter>& ls) {
        int n = static_cast<int>(ls.size());
        return Word2d(axis == 1 ? Shape{n, 1} : Shape{1, n}, ls);
    };
    std::vector<Word2d> words;
    for (auto& [ls, poly] : done) words.push_back(to_word(ls));
    std::sort(words.begin(), words.end(), detail::return_word_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    std::map<Word2d, int> index;
    for (int i = 0; i < static_cast<int>(words.size()); ++i) index[words[i]] = i;
    std::map<int, Region> atoms;
    for (auto& [ls, poly] : done) atoms[index.at(to_word(ls))].cells.push_back(std::move(poly));
    int codomain = p.atoms().empty() ? 0 : p.atoms().rbegin()->first + 1;
    int n = static_cast<int>(words.size());
    return {TorusPartition(w.induced_lattice(L), std::move(atoms)), Morphism2d(n, codomain, std::move(words))};
}

// allowed patterns of the coding: nonempty intersections of R^{-k}(P_{w_k}) over the shape
inline Language2d enumerate_language(const TorusPartition& p, const Z2Action& a, Shape shape) {
    struct Cell {
        Polygon poly;
        Box box;
        std::vector<Letter> word;  // in column-major order of the support visited so far
    };
    std::vector<Cell> cells;
    for (auto& [k, r] : p.atoms())
        for (auto& c : r.cells) cells.push_back({c, c.box(), {k}});
    for (int i = 0; i < shape.w; ++i)
        for (int j = 0; j < shape.h; ++j) {
            if (i == 0 && j == 0) continue;
            Point shift = a.lattice().reduce(a.v1() * QPhi(i) + a.v2() * QPhi(j));
            Point back{-shift.x, -shift.y};
            std::vector<std::pair<int, Polygon>> pre;
            std::vector<Box> pre_box;
            for (auto& [k, r] : p.atoms())
                for (auto& c : r.cells)
                    for (auto& piece : reduce_to_domain(c.translated(back), a.lattice())) {
                        pre_box.push_back(piece.box());
                        pre.push_back({k, std::move(piece)});
                    }
            std::vector<Cell> next;
            for (auto& c : cells)
                for (std::size_t t = 0; t < pre.size(); ++t) {
                    if (!c.box.overlaps(pre_box[t])) continue;
                    auto z = intersect(c.poly, pre[t].second);
                    if (!z) continue;
                    std::vector<Letter> wd = c.word;
                    wd.push_back(pre[t].first);
                    Box zb = z->box();
                    next.push_back({std::move(*z), zb, std::move(wd)});
                }
            cells = std::move(next);
        }
    Language2d lang;
    for (auto& c : cells) lang.insert(Word2d(shape, c.word));
    return lang;
}

using PairSet = std::set<std::pair<Letter, Letter>>;

// labels 0..n-1 for the atoms of p such that the coding's horizontal dominoes lie in H and vertical ones in V
inline TorusPartition relabel_to_match(const TorusPartition& p, const PairSet& H, const PairSet& V, const Z2Action& a) {
    std::vector<int> prov = p.labels();
    const int n = static_cast<int>(prov.size());
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[prov[i]] = i;
    // constraints between provisional indices: (i, j, axis) means i left of / below j
    std::vector<std::vector<std::tuple<int, int, int>>> cons(n);
    auto add = [&](const Language2d& L, int axis) {
        for (auto& w : L) {
            int i = pos.at(axis == 1 ? w.at(0, 0) : w.at(0, 0));
            int j = pos.at(axis == 1 ? w.at(1, 0) : w.at(0, 1));
            cons[i].emplace_back(i, j, axis);
            if (i != j) cons[j].emplace_back(i, j, axis);
        }
    };
    add(enumerate_language(p, a, {2, 1}), 1);
    add(enumerate_language(p, a, {1, 2}), 2);
    std::vector<int> order, seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> q{start};
        seen[start] = 1;
        for (std::size_t h = 0; h < q.size(); ++h) {
            order.push_back(q[h]);
            for (auto& [i, j, ax] : cons[q[h]])
                for (int k : {i, j})
                    if (!seen[k]) seen[k] = 1, q.push_back(k);
        }
    }
    std::vector<int> assign(n, -1), used(n, 0);
    std::vector<int> first;
    int found = 0;
    auto ok = [&](int i) {
        for (auto& [u, v, ax] : cons[i]) {
            if (assign[u] < 0 || assign[v] < 0) continue;
            const PairSet& S = ax == 1 ? H : V;
            if (!S.count({assign[u], assign[v]})) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t d) -> void {
        if (found >= 2) return;
        if (d == order.size()) {
            if (found++ == 0) first = assign;
            return;
        }
        int i = order[d];
        for (int t = 0; t < n && found < 2; ++t) {
            if (used[t]) continue;
            assign[i] = t;
            used[t] = 1;
            if (ok(i)) self(self, d + 1);
            used[t] = 0;
            assign[i] = -1;
        }
    };
    rec(rec, 0);
    if (found == 0) throw NoConsistentLabeling("no labeling maps the coding dominoes into H and V");
    if (found > 1) throw AmbiguousLabeling("several labelings are consistent with H and V");
    std::map<int, int> m;
    for (int i = 0; i < n; ++i) m[prov[i]] = first[i];
    return p.relabeled(m);
}

}  // namespace aperiodic
