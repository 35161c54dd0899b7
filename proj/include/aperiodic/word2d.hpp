// Finite 2-dimensional words, column-major, (x,y) with y pointing up.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <set>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aperiodic {

using Letter = int;

struct Shape {
    int w = 0, h = 0;
    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;
    bool fits_in(const Shape& o) const { return w <= o.w && h <= o.h; }
    std::string str() const { return std::to_string(w) + "x" + std::to_string(h); }
};

struct Vec2i {
    int x = 0, y = 0;
    friend bool operator==(const Vec2i&, const Vec2i&) = default;
    friend auto operator<=>(const Vec2i&, const Vec2i&) = default;
    Vec2i operator+(const Vec2i& o) const { return {x + o.x, y + o.y}; }
    Vec2i operator-(const Vec2i& o) const { return {x - o.x, y - o.y}; }
};

struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Word2d {
public:
    Word2d() = default;
    Word2d(int w, int h, Letter fill = 0) : w_(std::max(w, 0)), h_(std::max(h, 0)) {
        cells_.assign(static_cast<std::size_t>(w_) * h_, fill);
    }
    explicit Word2d(Shape s, Letter fill = 0) : Word2d(s.w, s.h, fill) {}
    // column-major cells
    Word2d(Shape s, std::vector<Letter> cells) : w_(s.w), h_(s.h), cells_(std::move(cells)) {
        if (cells_.size() != static_cast<std::size_t>(w_) * h_) throw ShapeMismatch("cell count differs from shape");
    }

    // columns, each bottom-to-top
    static Word2d from_columns(const std::vector<std::vector<Letter>>& cols) {
        if (cols.empty()) return Word2d();
        int h = static_cast<int>(cols[0].size());
        for (auto& c : cols)
            if (static_cast<int>(c.size()) != h) throw ShapeMismatch("ragged columns");
        Word2d u(static_cast<int>(cols.size()), h);
        for (int x = 0; x < u.w_; ++x)
            for (int y = 0; y < h; ++y) u.at(x, y) = cols[x][y];
        return u;
    }

    // rows as displayed, top row first
    static Word2d from_rows_top_down(const std::vector<std::vector<Letter>>& rows) {
        if (rows.empty()) return Word2d();
        int w = static_cast<int>(rows[0].size());
        int h = static_cast<int>(rows.size());
        for (auto& r : rows)
            if (static_cast<int>(r.size()) != w) throw ShapeMismatch("ragged rows");
        Word2d u(w, h);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) u.at(x, y) = rows[h - 1 - y][x];
        return u;
    }

    static Word2d letter(Letter a) { return Word2d(1, 1, a); }

    int width() const { return w_; }
    int height() const { return h_; }
    Shape shape() const { return {w_, h_}; }
    bool empty() const { return w_ == 0 || h_ == 0; }
    std::size_t size() const { return cells_.size(); }

    Letter& at(int x, int y) { return cells_[static_cast<std::size_t>(x) * h_ + y]; }
    Letter at(int x, int y) const { return cells_[static_cast<std::size_t>(x) * h_ + y]; }
    Letter operator()(int x, int y) const { return at(x, y); }
    Letter operator()(Vec2i p) const { return at(p.x, p.y); }

    const std::vector<Letter>& data() const { return cells_; }

    std::vector<std::vector<Letter>> columns() const {
        std::vector<std::vector<Letter>> cols(w_);
        for (int x = 0; x < w_; ++x)
            cols[x].assign(cells_.begin() + static_cast<std::ptrdiff_t>(x) * h_,
                           cells_.begin() + static_cast<std::ptrdiff_t>(x + 1) * h_);
        return cols;
    }

    Word2d sub(int x0, int y0, int w, int h) const {
        if (x0 < 0 || y0 < 0 || x0 + w > w_ || y0 + h > h_) throw ShapeMismatch("subword out of range");
        Word2d r(w, h);
        for (int x = 0; x < w; ++x)
            for (int y = 0; y < h; ++y) r.at(x, y) = at(x0 + x, y0 + y);
        return r;
    }

    std::set<Letter> letters() const { return {cells_.begin(), cells_.end()}; }

    // matrix display, top row first
    std::string str() const {
        std::ostringstream os;
        for (int y = h_ - 1; y >= 0; --y) {
            for (int x = 0; x < w_; ++x) os << (x ? " " : "") << at(x, y);
            if (y) os << '\n';
        }
        return os.str();
    }

    friend bool operator==(const Word2d& u, const Word2d& v) {
        return u.w_ == v.w_ && u.h_ == v.h_ && u.cells_ == v.cells_;
    }
    friend bool operator<(const Word2d& u, const Word2d& v) {
        if (u.w_ != v.w_) return u.w_ < v.w_;
        if (u.h_ != v.h_) return u.h_ < v.h_;
        return u.cells_ < v.cells_;
    }

private:
    int w_ = 0, h_ = 0;
    std::vector<Letter> cells_;
};

inline std::ostream& operator<<(std::ostream& os, const Word2d& w) { return os << w.str(); }

using Language2d = std::set<Word2d>;

// u ⊙^axis v: axis 1 puts v right of u, axis 2 puts v above u
inline Word2d concat(const Word2d& u, const Word2d& v, int axis) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("axis must be 1 or 2");
    if (axis == 1) {
        if (u.width() == 0) return v;
        if (v.width() == 0) return u;
        if (u.height() != v.height()) throw ShapeMismatch("heights differ: " + u.shape().str() + " vs " + v.shape().str());
        Word2d r(u.width() + v.width(), u.height());
        for (int x = 0; x < u.width(); ++x)
            for (int y = 0; y < u.height(); ++y) r.at(x, y) = u(x, y);
        for (int x = 0; x < v.width(); ++x)
            for (int y = 0; y < v.height(); ++y) r.at(u.width() + x, y) = v(x, y);
        return r;
    }
    if (u.height() == 0) return v;
    if (v.height() == 0) return u;
    if (u.width() != v.width()) throw ShapeMismatch("widths differ: " + u.shape().str() + " vs " + v.shape().str());
    Word2d r(u.width(), u.height() + v.height());
    for (int x = 0; x < u.width(); ++x) {
        for (int y = 0; y < u.height(); ++y) r.at(x, y) = u(x, y);
        for (int y = 0; y < v.height(); ++y) r.at(x, u.height() + y) = v(x, y);
    }
    return r;
}

inline bool occurs_at(const Word2d& u, const Word2d& v, Vec2i p) {
    if (p.x < 0 || p.y < 0 || p.x + u.width() > v.width() || p.y + u.height() > v.height()) return false;
    for (int x = 0; x < u.width(); ++x)
        for (int y = 0; y < u.height(); ++y)
            if (v(p.x + x, p.y + y) != u(x, y)) return false;
    return true;
}

inline std::vector<Vec2i> occurrences(const Word2d& u, const Word2d& v) {
    std::vector<Vec2i> out;
    for (int x = 0; x + u.width() <= v.width(); ++x)
        for (int y = 0; y + u.height() <= v.height(); ++y)
            if (occurs_at(u, v, {x, y})) out.push_back({x, y});
    return out;
}

inline void add_subwords(const Word2d& v, Shape s, Language2d& out) {
    for (int x = 0; x + s.w <= v.width(); ++x)
        for (int y = 0; y + s.h <= v.height(); ++y) out.insert(v.sub(x, y, s.w, s.h));
}

inline Language2d subwords(const Word2d& v, Shape s) {
    if (!s.fits_in(v.shape())) throw ShapeMismatch("shape " + s.str() + " exceeds " + v.shape().str());
    Language2d out;
    add_subwords(v, s, out);
    return out;
}

}  // namespace aperiodic

template <>
struct std::hash<aperiodic::Word2d> {
    std::size_t operator()(const aperiodic::Word2d& u) const {
        std::size_t h = static_cast<std::size_t>(u.width()) * 7919u + static_cast<std::size_t>(u.height());
        for (auto c : u.data()) h = h * 1000003u ^ static_cast<std::size_t>(c);
        return h;
    }
};
