// Exact convex polygons over Q(phi) and labeled partitions of R^2 / (l1 Z x l2 Z).
#pragma once

#include "exactnum.hpp"
#include "markers.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace aperiodic {

struct BoundaryHit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateArrangement : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroFactor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoConsistentLabeling : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AmbiguousLabeling : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point {
    QPhi x, y;
    friend bool operator==(const Point&, const Point&) = default;
    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(const QPhi& s) const { return {x * s, y * s}; }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }

inline QPhi cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline QPhi dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

// {p : nx*px + ny*py <= c}
struct HalfPlane {
    QPhi nx, ny, c;
    QPhi eval(const Point& p) const { return nx * p.x + ny * p.y - c; }
    HalfPlane opposite() const { return {-nx, -ny, -c}; }
};

struct Box {
    QPhi x0, y0, x1, y1;
    bool overlaps(const Box& o) const { return x0 < o.x1 && o.x0 < x1 && y0 < o.y1 && o.y0 < y1; }
};

// convex, counterclockwise, no repeated or collinear consecutive vertices
struct Polygon {
    std::vector<Point> v;

    static Polygon rect(const QPhi& x0, const QPhi& y0, const QPhi& x1, const QPhi& y1) {
        return {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
    }
    std::size_t size() const { return v.size(); }
    Box box() const {
        Box b{v[0].x, v[0].y, v[0].x, v[0].y};
        for (auto& p : v) {
            if (p.x < b.x0) b.x0 = p.x;
            if (p.x > b.x1) b.x1 = p.x;
            if (p.y < b.y0) b.y0 = p.y;
            if (p.y > b.y1) b.y1 = p.y;
        }
        return b;
    }
    Polygon translated(const Point& t) const {
        Polygon q;
        q.v.reserve(v.size());
        for (auto& p : v) q.v.push_back(p + t);
        return q;
    }
    Point centroid_hint() const {  // vertex average, strictly inside
        QPhi sx, sy;
        for (auto& p : v) sx += p.x, sy += p.y;
        QPhi n(static_cast<long>(v.size()));
        return {sx / n, sy / n};
    }
};

inline QPhi area(const Polygon& p) {
    QPhi s;
    for (std::size_t i = 0; i < p.v.size(); ++i) s += cross(p.v[i], p.v[(i + 1) % p.v.size()]);
    return s * QPhi(mpq_class(1, 2), 0);
}

namespace detail {

inline std::optional<Polygon> cleanup(std::vector<Point> pts) {
    std::vector<Point> out;
    for (auto& p : pts)
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    bool changed = true;
    while (changed && out.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            auto& a = out[(i + out.size() - 1) % out.size()];
            auto& b = out[i];
            auto& c = out[(i + 1) % out.size()];
            if (cross(b - a, c - b).is_zero()) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (out.size() < 3) return std::nullopt;
    Polygon p{std::move(out)};
    if (area(p).sign() <= 0) return std::nullopt;
    return p;
}

}  // namespace detail

// p ∩ h, or nothing when the intersection has empty interior
inline std::optional<Polygon> clip(const Polygon& p, const HalfPlane& h) {
    const std::size_t n = p.v.size();
    std::vector<QPhi> s(n);
    int inside = 0, outside = 0;
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = h.eval(p.v[i]);
        int sg = s[i].sign();
        if (sg <= 0) ++inside;
        if (sg > 0) ++outside;
    }
    if (outside == 0) return p;
    if (inside == 0) return std::nullopt;
    std::vector<Point> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = p.v[i];
        const Point& b = p.v[(i + 1) % n];
        int sa = s[i].sign(), sb = s[(i + 1) % n].sign();
        if (sa <= 0) out.push_back(a);
        if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
            QPhi t = s[i] / (s[i] - s[(i + 1) % n]);
            out.push_back(a + (b - a) * t);
        }
    }
    return detail::cleanup(std::move(out));
}

// halfplanes whose intersection is p (left of each counterclockwise edge)
inline std::vector<HalfPlane> edge_halfplanes(const Polygon& p) {
    std::vector<HalfPlane> hs;
    for (std::size_t i = 0; i < p.v.size(); ++i) {
        const Point& a = p.v[i];
        const Point& b = p.v[(i + 1) % p.v.size()];
        Point e = b - a;
        hs.push_back({e.y, -e.x, e.y * a.x - e.x * a.y});
    }
    return hs;
}

inline std::optional<Polygon> intersect(const Polygon& a, const Polygon& b) {
    std::optional<Polygon> r = a;
    for (auto& h : edge_halfplanes(b)) {
        r = clip(*r, h);
        if (!r) return std::nullopt;
    }
    return r;
}

inline bool contains_closed(const Polygon& p, const Point& x) {
    for (auto& h : edge_halfplanes(p))
        if (h.eval(x).sign() > 0) return false;
    return true;
}

inline bool contains_interior(const Polygon& p, const Point& x) {
    for (auto& h : edge_halfplanes(p))
        if (h.eval(x).sign() >= 0) return false;
    return true;
}

struct Region {
    std::vector<Polygon> cells;
};

inline QPhi area(const Region& r) {
    QPhi s;
    for (auto& c : r.cells) s += area(c);
    return s;
}

inline QPhi intersection_area(const Region& a, const Region& b) {
    QPhi s;
    std::vector<Box> bb;
    for (auto& c : b.cells) bb.push_back(c.box());
    for (auto& ca : a.cells) {
        Box ba = ca.box();
        for (std::size_t j = 0; j < b.cells.size(); ++j) {
            if (!ba.overlaps(bb[j])) continue;
            if (auto z = intersect(ca, b.cells[j])) s += area(*z);
        }
    }
    return s;
}

struct Lattice {
    QPhi l1{1}, l2{1};
    QPhi covolume() const { return l1 * l2; }
    Polygon domain() const { return Polygon::rect(0, 0, l1, l2); }
    Point reduce(const Point& p) const { return {p.x.mod(l1), p.y.mod(l2)}; }
    friend bool operator==(const Lattice&, const Lattice&) = default;
};

// the parts of p (any position) folded into the fundamental rectangle
inline std::vector<Polygon> reduce_to_domain(const Polygon& p, const Lattice& L) {
    Box b = p.box();
    mpz_class i0 = (b.x0 / L.l1).floor(), i1 = (b.x1 / L.l1).floor();
    mpz_class j0 = (b.y0 / L.l2).floor(), j1 = (b.y1 / L.l2).floor();
    std::vector<Polygon> out;
    for (mpz_class i = i0; i <= i1; ++i)
        for (mpz_class j = j0; j <= j1; ++j) {
            QPhi ox = L.l1 * QPhi(mpq_class(i), 0), oy = L.l2 * QPhi(mpq_class(j), 0);
            std::optional<Polygon> q = p;
            q = clip(*q, {-1, 0, -ox});
            if (q) q = clip(*q, {1, 0, ox + L.l1});
            if (q) q = clip(*q, {0, -1, -oy});
            if (q) q = clip(*q, {0, 1, oy + L.l2});
            if (q) out.push_back(q->translated({-ox, -oy}));
        }
    return out;
}

class TorusPartition {
public:
    TorusPartition() = default;
    TorusPartition(Lattice L, std::map<int, Region> atoms) : lattice_(std::move(L)), atoms_(std::move(atoms)) {}

    const Lattice& lattice() const { return lattice_; }
    const std::map<int, Region>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    std::vector<int> labels() const {
        std::vector<int> r;
        for (auto& [k, v] : atoms_) r.push_back(k);
        return r;
    }
    const Region& atom(int label) const { return atoms_.at(label); }

    QPhi total_area() const {
        QPhi s;
        for (auto& [k, r] : atoms_) s += area(r);
        return s;
    }

    // label -> new label
    TorusPartition relabeled(const std::map<int, int>& m) const {
        std::map<int, Region> a;
        for (auto& [k, r] : atoms_) {
            int nk = m.at(k);
            if (a.count(nk)) throw std::invalid_argument("relabeling is not injective");
            a[nk] = r;
        }
        return {lattice_, std::move(a)};
    }

    // all labels whose closed cells contain the (reduced) point, seam copies included
    std::set<int> labels_at(const Point& x) const {
        Point p = lattice_.reduce(x);
        std::vector<Point> copies{p};
        if (p.x.is_zero()) copies.push_back({lattice_.l1, p.y});
        if (p.y.is_zero()) copies.push_back({p.x, lattice_.l2});
        if (p.x.is_zero() && p.y.is_zero()) copies.push_back({lattice_.l1, lattice_.l2});
        std::set<int> s;
        for (auto& [k, r] : atoms_)
            for (auto& c : r.cells)
                for (auto& q : copies)
                    if (contains_closed(c, q)) s.insert(k);
        return s;
    }

    int code(const Point& x) const {
        auto s = labels_at(x);
        if (s.size() != 1) throw BoundaryHit("point " + x.str() + " lies on an atom boundary");
        return *s.begin();
    }

    friend bool operator==(const TorusPartition& a, const TorusPartition& b) {
        if (!(a.lattice_ == b.lattice_) || a.atoms_.size() != b.atoms_.size()) return false;
        for (auto& [k, r] : a.atoms_) {
            auto it = b.atoms_.find(k);
            if (it == b.atoms_.end()) return false;
            QPhi ar = area(r);
            if (!(area(it->second) == ar) || !(intersection_area(r, it->second) == ar)) return false;
        }
        return true;
    }

private:
    Lattice lattice_;
    std::map<int, Region> atoms_;
};

inline int code(const TorusPartition& p, const Point& x) { return p.code(x); }

namespace detail {

struct Line {
    QPhi nx, ny, c;  // nx*x + ny*y = c, first nonzero of (nx,ny) equal to 1

    static Line through(const Point& p, const Point& q) {
        Point d = q - p;
        QPhi nx = d.y, ny = -d.x;
        QPhi s = nx.is_zero() ? ny : nx;
        nx /= s, ny /= s;
        return {nx, ny, nx * p.x + ny * p.y};
    }
    bool contains(const Point& p) const { return (nx * p.x + ny * p.y - c).is_zero(); }
    // 1-d coordinate along the line
    const QPhi& param(const Point& p) const { return ny.is_zero() ? p.y : p.x; }
    bool operator<(const Line& o) const {
        auto key = [](const Line& l) {
            return std::make_tuple(l.nx.a(), l.nx.b(), l.ny.a(), l.ny.b(), l.c.a(), l.c.b());
        };
        return key(*this) < key(o);
    }
};

using Interval = std::pair<QPhi, QPhi>;

inline std::vector<Interval> merge_intervals(std::vector<Interval> v) {
    std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.first < b.first; });
    std::vector<Interval> out;
    for (auto& iv : v) {
        if (!out.empty() && iv.first <= out.back().second) {
            if (iv.second > out.back().second) out.back().second = iv.second;
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

inline bool covered(const std::vector<Interval>& merged, const Interval& q) {
    for (auto& iv : merged)
        if (iv.first <= q.first && q.second <= iv.second) return true;
    return false;
}

// segment clipped to the closed rectangle [0,l1]x[0,l2]
inline std::optional<std::pair<Point, Point>> clip_segment(const Point& p, const Point& q, const Lattice& L) {
    QPhi t0(0), t1(1);
    Point d = q - p;
    auto edge = [&](const QPhi& num, const QPhi& den) {  // constraint den*t <= num
        if (den.is_zero()) return num.sign() >= 0;
        QPhi t = num / den;
        if (den.sign() > 0) {
            if (t < t1) t1 = t;
        } else {
            if (t > t0) t0 = t;
        }
        return true;
    };
    if (!edge(p.x, -d.x) || !edge(L.l1 - p.x, d.x) || !edge(p.y, -d.y) || !edge(L.l2 - p.y, d.y)) return std::nullopt;
    if (!(t0 < t1)) return std::nullopt;
    return std::make_pair(p + d * t0, p + d * t1);
}

}  // namespace detail

using Segment = std::pair<Point, Point>;

// atoms of the torus cut along all lattice translates of the segments
inline TorusPartition partition_from_segments(const std::vector<Segment>& segments, const Lattice& L) {
    using detail::Interval;
    using detail::Line;
    std::map<Line, std::vector<Interval>> pieces;
    std::vector<Interval> seam_x, seam_y;  // coverage of x = 0 (by y) and y = 0 (by x)
    for (auto& [p, q] : segments) {
        if (p == q) throw DegenerateArrangement("zero-length segment at " + p.str());
        Box b = Polygon{{p, q}}.box();
        mpz_class i0 = (b.x0 / L.l1).floor() - 1, i1 = (b.x1 / L.l1).floor() + 1;
        mpz_class j0 = (b.y0 / L.l2).floor() - 1, j1 = (b.y1 / L.l2).floor() + 1;
        for (mpz_class i = i0; i <= i1; ++i)
            for (mpz_class j = j0; j <= j1; ++j) {
                Point off{L.l1 * QPhi(mpq_class(i), 0), L.l2 * QPhi(mpq_class(j), 0)};
                auto s = detail::clip_segment(p - off, q - off, L);
                if (!s) continue;
                Line ln = Line::through(s->first, s->second);
                QPhi a = ln.param(s->first), bb = ln.param(s->second);
                Interval iv = a < bb ? Interval{a, bb} : Interval{bb, a};
                bool vert = ln.ny.is_zero(), hor = ln.nx.is_zero();
                if (vert && (ln.c.is_zero() || ln.c == L.l1)) seam_x.push_back(iv);
                else if (hor && (ln.c.is_zero() || ln.c == L.l2)) seam_y.push_back(iv);
                else pieces[ln].push_back(iv);
            }
    }
    for (auto& [ln, ivs] : pieces) ivs = detail::merge_intervals(ivs);
    seam_x = detail::merge_intervals(seam_x);
    seam_y = detail::merge_intervals(seam_y);

    std::vector<Polygon> cells{L.domain()};
    for (auto& [ln, ivs] : pieces) {
        HalfPlane h{ln.nx, ln.ny, ln.c};
        std::vector<Polygon> next;
        for (auto& c : cells) {
            if (auto a = clip(c, h)) next.push_back(*a);
            if (auto b = clip(c, h.opposite())) next.push_back(*b);
        }
        cells = std::move(next);
    }

    // edges of cells, grouped by supporting line
    struct EdgeRef {
        int cell;
        Interval iv;
    };
    std::map<Line, std::vector<EdgeRef>> on_line;
    std::vector<EdgeRef> left_seam, right_seam, bottom_seam, top_seam;
    for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
        auto& c = cells[ci];
        for (std::size_t k = 0; k < c.v.size(); ++k) {
            const Point& a = c.v[k];
            const Point& b = c.v[(k + 1) % c.v.size()];
            Line ln = Line::through(a, b);
            QPhi pa = ln.param(a), pb = ln.param(b);
            Interval iv = pa < pb ? Interval{pa, pb} : Interval{pb, pa};
            if (ln.ny.is_zero() && ln.c.is_zero()) left_seam.push_back({ci, iv});
            else if (ln.ny.is_zero() && ln.c == L.l1) right_seam.push_back({ci, iv});
            else if (ln.nx.is_zero() && ln.c.is_zero()) bottom_seam.push_back({ci, iv});
            else if (ln.nx.is_zero() && ln.c == L.l2) top_seam.push_back({ci, iv});
            else on_line[ln].push_back({ci, iv});
        }
    }
    UnionFind uf(static_cast<int>(cells.size()));
    auto join = [&](const std::vector<EdgeRef>& A, const std::vector<EdgeRef>& B, const std::vector<Interval>& cov) {
        for (auto& ea : A)
            for (auto& eb : B) {
                if (ea.cell == eb.cell) continue;
                Interval ov{max(ea.iv.first, eb.iv.first), min(ea.iv.second, eb.iv.second)};
                if (!(ov.first < ov.second)) continue;
                if (!detail::covered(cov, ov)) uf.unite(ea.cell, eb.cell);
            }
    };
    static const std::vector<Interval> none;
    for (auto& [ln, refs] : on_line) {
        auto it = pieces.find(ln);
        join(refs, refs, it == pieces.end() ? none : it->second);
    }
    join(left_seam, right_seam, seam_x);
    join(bottom_seam, top_seam, seam_y);

    std::map<int, int> root_label;
    std::map<int, Region> atoms;
    for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
        int r = uf.find(ci);
        auto it = root_label.find(r);
        if (it == root_label.end()) it = root_label.emplace(r, static_cast<int>(root_label.size())).first;
        atoms[it->second].cells.push_back(cells[ci]);
    }
    return {L, std::move(atoms)};
}

// permutation pi with atom_p(a) = atom_q(pi(a))
inline std::optional<std::map<int, int>> is_equal_up_to_relabeling(const TorusPartition& p, const TorusPartition& q) {
    if (!(p.lattice() == q.lattice()) || p.size() != q.size()) return std::nullopt;
    std::map<int, int> pi;
    std::set<int> used;
    for (auto& [a, ra] : p.atoms()) {
        QPhi ar = area(ra);
        bool found = false;
        for (auto& [b, rb] : q.atoms()) {
            if (used.count(b) || !(area(rb) == ar)) continue;
            if (intersection_area(ra, rb) == ar) {
                pi[a] = b;
                used.insert(b);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return pi;
}

// atoms mapped by x -> f*x + t, then folded into the new fundamental rectangle
inline TorusPartition rescale(const TorusPartition& p, const QPhi& f, const Point& t) {
    if (f.is_zero()) throw ZeroFactor("rescale by zero");
    QPhi af = abs(f);
    Lattice L{p.lattice().l1 * af, p.lattice().l2 * af};
    std::map<int, Region> atoms;
    for (auto& [k, r] : p.atoms()) {
        Region nr;
        for (auto& c : r.cells) {
            Polygon img;
            for (auto& v : c.v) img.v.push_back(v * f + t);
            for (auto& piece : reduce_to_domain(img, L)) nr.cells.push_back(std::move(piece));
        }
        atoms[k] = std::move(nr);
    }
    return {L, std::move(atoms)};
}

// partition translated by v on the torus (atom a becomes P_a + v)
inline TorusPartition translate(const TorusPartition& p, const Point& v) {
    std::map<int, Region> atoms;
    for (auto& [k, r] : p.atoms()) {
        Region nr;
        for (auto& c : r.cells)
            for (auto& piece : reduce_to_domain(c.translated(v), p.lattice())) nr.cells.push_back(std::move(piece));
        atoms[k] = std::move(nr);
    }
    return {p.lattice(), std::move(atoms)};
}

}  // namespace aperiodic
