// 2-dimensional morphisms: rule tables letter -> Word2d.
#pragma once

#include "word2d.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

namespace aperiodic {

struct UndefinedImage : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownLetter : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct NotStabilized : std::runtime_error {
    explicit NotStabilized(int bound)
        : std::runtime_error("language still growing after " + std::to_string(bound) + " rounds"), bound(bound) {}
    int bound;
};
struct PreconditionViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Morphism2d {
    int domain_size = 0;    // letters 0..domain_size-1
    int codomain_size = 0;  // letters 0..codomain_size-1
    std::vector<Word2d> rule;

    Morphism2d() = default;
    Morphism2d(int dom, int cod, std::vector<Word2d> r) : domain_size(dom), codomain_size(cod), rule(std::move(r)) {
        if (static_cast<int>(rule.size()) != domain_size) throw std::invalid_argument("rule size differs from domain size");
        for (auto& w : rule) {
            if (w.empty()) throw std::invalid_argument("empty image");
            for (auto c : w.data())
                if (c < 0 || c >= codomain_size) throw UnknownLetter("image letter " + std::to_string(c) + " outside codomain");
        }
    }

    static Morphism2d identity(int n) {
        std::vector<Word2d> r;
        for (int a = 0; a < n; ++a) r.push_back(Word2d::letter(a));
        return {n, n, std::move(r)};
    }

    // letter a -> perm[a], 1x1 images
    static Morphism2d from_permutation(const std::vector<Letter>& perm, int codomain) {
        std::vector<Word2d> r;
        for (auto b : perm) r.push_back(Word2d::letter(b));
        return {static_cast<int>(perm.size()), codomain, std::move(r)};
    }

    const Word2d& operator()(Letter a) const {
        if (a < 0 || a >= domain_size) throw UnknownLetter("letter " + std::to_string(a) + " outside domain");
        return rule[a];
    }

    bool is_endomorphism() const { return domain_size == codomain_size; }

    friend bool operator==(const Morphism2d& m, const Morphism2d& n) {
        return m.domain_size == n.domain_size && m.codomain_size == n.codomain_size && m.rule == n.rule;
    }

    std::string str() const {
        std::string s;
        for (int a = 0; a < domain_size; ++a) {
            s += std::to_string(a) + " ->\n" + rule[a].str() + "\n";
        }
        return s;
    }
};

namespace detail {

// column widths / row heights of the block image, or nullopt if inconsistent
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> block_sizes(const Morphism2d& m, const Word2d& u,
                                                                                 std::string* why = nullptr) {
    std::vector<int> ws(u.width()), hs(u.height());
    for (int x = 0; x < u.width(); ++x)
        for (int y = 0; y < u.height(); ++y) {
            Letter a = u(x, y);
            if (a < 0 || a >= m.domain_size) throw UnknownLetter("letter " + std::to_string(a) + " outside domain");
        }
    for (int x = 0; x < u.width(); ++x) {
        ws[x] = m.rule[u(x, 0)].width();
        for (int y = 1; y < u.height(); ++y)
            if (m.rule[u(x, y)].width() != ws[x]) {
                if (why) *why = "widths differ in column " + std::to_string(x) + " at rows 0," + std::to_string(y);
                return std::nullopt;
            }
    }
    for (int y = 0; y < u.height(); ++y) {
        hs[y] = m.rule[u(0, y)].height();
        for (int x = 1; x < u.width(); ++x)
            if (m.rule[u(x, y)].height() != hs[y]) {
                if (why) *why = "heights differ in row " + std::to_string(y) + " at columns 0," + std::to_string(x);
                return std::nullopt;
            }
    }
    return std::make_pair(std::move(ws), std::move(hs));
}

}  // namespace detail

inline bool image_defined(const Morphism2d& m, const Word2d& u) { return detail::block_sizes(m, u).has_value(); }

inline Word2d apply(const Morphism2d& m, const Word2d& u) {
    if (u.empty()) return Word2d();
    std::string why;
    auto sizes = detail::block_sizes(m, u, &why);
    if (!sizes) throw UndefinedImage("image undefined: " + why);
    auto& [ws, hs] = *sizes;
    int W = 0, H = 0;
    for (int w : ws) W += w;
    for (int h : hs) H += h;
    Word2d r(W, H);
    int x0 = 0;
    for (int x = 0; x < u.width(); ++x) {
        int y0 = 0;
        for (int y = 0; y < u.height(); ++y) {
            const Word2d& img = m.rule[u(x, y)];
            for (int i = 0; i < img.width(); ++i)
                for (int j = 0; j < img.height(); ++j) r.at(x0 + i, y0 + j) = img(i, j);
            y0 += hs[y];
        }
        x0 += ws[x];
    }
    return r;
}

inline Word2d apply_power(const Morphism2d& m, Word2d u, int k) {
    for (int i = 0; i < k; ++i) u = apply(m, u);
    return u;
}

// rule: a -> m1(m2(a))
inline Morphism2d compose(const Morphism2d& m1, const Morphism2d& m2) {
    if (m2.codomain_size > m1.domain_size) throw PreconditionViolation("codomain of inner morphism exceeds domain of outer");
    std::vector<Word2d> r;
    r.reserve(m2.domain_size);
    for (int a = 0; a < m2.domain_size; ++a) {
        try {
            r.push_back(apply(m1, m2.rule[a]));
        } catch (const UndefinedImage& e) {
            throw UndefinedImage("composite image of letter " + std::to_string(a) + ": " + e.what());
        }
    }
    return {m2.domain_size, m1.codomain_size, std::move(r)};
}

inline Morphism2d compose(const Morphism2d& m1, const Morphism2d& m2, const Morphism2d& m3) {
    return compose(m1, compose(m2, m3));
}

namespace detail {

// growth of path counts in the multigraph a -> b (one edge per occurrence)
inline std::vector<bool> unbounded_growth(const std::vector<std::vector<int>>& edges) {
    int n = static_cast<int>(edges.size());
    // Tarjan SCC
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on(n, false);
    std::vector<int> st;
    int counter = 0, ncomp = 0;
    std::function<void(int)> dfs = [&](int v) {
        index[v] = low[v] = counter++;
        st.push_back(v);
        on[v] = true;
        for (int w : edges[v]) {
            if (index[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                int w = st.back();
                st.pop_back();
                on[w] = false;
                comp[w] = ncomp;
                if (w == v) break;
            }
            ++ncomp;
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] < 0) dfs(v);
    // a component is "growing" if it is cyclic and one of its vertices has out-degree >= 2
    std::vector<int> csize(ncomp, 0);
    std::vector<bool> cyclic(ncomp, false), growing(ncomp, false);
    for (int v = 0; v < n; ++v) ++csize[comp[v]];
    for (int v = 0; v < n; ++v)
        for (int w : edges[v])
            if (comp[w] == comp[v]) cyclic[comp[v]] = true;
    for (int v = 0; v < n; ++v)
        if (cyclic[comp[v]] && edges[v].size() >= 2) growing[comp[v]] = true;
    // reachability of a growing component
    std::vector<bool> res(n, false);
    for (int v = 0; v < n; ++v) {
        std::vector<bool> seen(n, false);
        std::vector<int> todo{v};
        seen[v] = true;
        while (!todo.empty()) {
            int u = todo.back();
            todo.pop_back();
            if (growing[comp[u]]) {
                res[v] = true;
                break;
            }
            for (int w : edges[u])
                if (!seen[w]) seen[w] = true, todo.push_back(w);
        }
    }
    return res;
}

}  // namespace detail

// Both dimensions of m^k(a) tend to infinity for every letter a. The first `bound`
// iterates are assembled from shape vectors to detect inconsistent blocks.
inline bool is_expansive(const Morphism2d& m, int bound = 32) {
    if (!m.is_endomorphism()) throw PreconditionViolation("is_expansive needs domain = codomain");
    int n = m.domain_size;
    const std::int64_t cap = std::int64_t(1) << 40;
    std::vector<std::int64_t> W(n, 1), H(n, 1);
    for (int k = 0; k < bound; ++k) {
        std::vector<std::int64_t> W2(n), H2(n);
        for (int a = 0; a < n; ++a) {
            const Word2d& img = m.rule[a];
            for (int x = 0; x < img.width(); ++x)
                for (int y = 1; y < img.height(); ++y)
                    if (W[img(x, y)] != W[img(x, 0)])
                        throw UndefinedImage("iterate " + std::to_string(k + 1) + " of letter " + std::to_string(a) +
                                             " has inconsistent column widths");
            for (int y = 0; y < img.height(); ++y)
                for (int x = 1; x < img.width(); ++x)
                    if (H[img(x, y)] != H[img(0, y)])
                        throw UndefinedImage("iterate " + std::to_string(k + 1) + " of letter " + std::to_string(a) +
                                             " has inconsistent row heights");
            std::int64_t w = 0, h = 0;
            for (int x = 0; x < img.width(); ++x) w = std::min(cap, w + W[img(x, 0)]);
            for (int y = 0; y < img.height(); ++y) h = std::min(cap, h + H[img(0, y)]);
            W2[a] = w;
            H2[a] = h;
        }
        W = std::move(W2);
        H = std::move(H2);
    }
    std::vector<std::vector<int>> ew(n), eh(n);
    for (int a = 0; a < n; ++a) {
        const Word2d& img = m.rule[a];
        for (int x = 0; x < img.width(); ++x) ew[a].push_back(img(x, 0));
        for (int y = 0; y < img.height(); ++y) eh[a].push_back(img(0, y));
    }
    auto gw = detail::unbounded_growth(ew);
    auto gh = detail::unbounded_growth(eh);
    for (int a = 0; a < n; ++a)
        if (!gw[a] || !gh[a]) return false;
    return true;
}

inline bool is_primitive(const Morphism2d& m) {
    if (!m.is_endomorphism()) throw PreconditionViolation("is_primitive needs domain = codomain");
    int n = m.domain_size;
    if (n == 0) return false;
    using Mat = std::vector<std::vector<bool>>;
    Mat M(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (auto b : m.rule[a].data()) M[a][b] = true;
    Mat P = M;
    long limit = static_cast<long>(n - 1) * (n - 1) + 1;
    for (long k = 1; k <= limit; ++k) {
        bool all = true;
        for (int a = 0; a < n && all; ++a)
            for (int b = 0; b < n && all; ++b) all = P[a][b];
        if (all) return true;
        Mat Q(n, std::vector<bool>(n, false));
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c)
                if (P[a][c])
                    for (int b = 0; b < n; ++b)
                        if (M[c][b]) Q[a][b] = true;
        P = std::move(Q);
    }
    return false;
}

// All factors of shape <= s (componentwise) of the words m^n(a): closure of the
// letters under "take the image, extract factors", iterated until nothing new appears.
inline Language2d language_upto(const Morphism2d& m, Shape s, int max_rounds = 1000) {
    Language2d all;
    std::vector<Word2d> frontier;
    for (int a = 0; a < m.domain_size; ++a) {
        auto w = Word2d::letter(a);
        if (all.insert(w).second) frontier.push_back(w);
    }
    int rounds = 0;
    while (!frontier.empty()) {
        if (++rounds > max_rounds) throw NotStabilized(max_rounds);
        std::vector<Word2d> next;
        for (const auto& u : frontier) {
            if (!image_defined(m, u)) continue;
            Word2d img = apply(m, u);
            for (int w = 1; w <= std::min(s.w, img.width()); ++w)
                for (int h = 1; h <= std::min(s.h, img.height()); ++h)
                    for (int x = 0; x + w <= img.width(); ++x)
                        for (int y = 0; y + h <= img.height(); ++y) {
                            Word2d f = img.sub(x, y, w, h);
                            if (all.insert(f).second) next.push_back(std::move(f));
                        }
        }
        frontier = std::move(next);
    }
    return all;
}

// shape-s factors of the language of m
inline Language2d language(const Morphism2d& m, Shape s, int max_rounds = 1000) {
    if (!m.is_endomorphism()) throw PreconditionViolation("language needs domain = codomain");
    Language2d out;
    if (s.w <= 0 || s.h <= 0) return out;
    if (s.w <= 2 && s.h <= 2) {
        for (auto& u : language_upto(m, s, max_rounds))
            if (u.shape() == s) out.insert(u);
        return out;
    }
    // every s-window of m^k(y) meets at most 2x2 blocks once all blocks of m^k are >= s - 1
    Language2d base = language_upto(m, {2, 2}, max_rounds);
    std::vector<Word2d> iter;
    for (int a = 0; a < m.domain_size; ++a) iter.push_back(Word2d::letter(a));
    int k = 0;
    while (true) {
        bool big = true;
        for (auto& w : iter) {
            if (w.width() >= s.w && w.height() >= s.h) add_subwords(w, s, out);
            if (w.width() < s.w - 1 || w.height() < s.h - 1) big = false;
        }
        if (big) break;
        if (++k > max_rounds) throw NotStabilized(max_rounds);
        for (auto& w : iter) w = apply(m, w);
    }
    for (auto& u : base) {
        Word2d img = apply_power(m, u, k);
        if (s.fits_in(img.shape())) add_subwords(img, s, out);
    }
    return out;
}

// 2x2 words lying on a cycle of the graph u -> factors of m(u)
inline Language2d seeds(const Morphism2d& m) {
    if (!m.is_endomorphism()) throw PreconditionViolation("seeds needs domain = codomain");
    const int n = m.domain_size;
    const std::int64_t N = std::int64_t(n) * n * n * n;
    auto encode = [n](Letter a, Letter b, Letter c, Letter d) {  // (0,0),(1,0),(0,1),(1,1)
        return ((std::int64_t(d) * n + c) * n + b) * n + a;
    };
    auto decode = [n](std::int64_t v) {
        Word2d u(2, 2);
        u.at(0, 0) = static_cast<Letter>(v % n);
        v /= n;
        u.at(1, 0) = static_cast<Letter>(v % n);
        v /= n;
        u.at(0, 1) = static_cast<Letter>(v % n);
        v /= n;
        u.at(1, 1) = static_cast<Letter>(v);
        return u;
    };
    std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(N));
    for (std::int64_t v = 0; v < N; ++v) {
        Word2d u = decode(v);
        if (!image_defined(m, u)) continue;
        Word2d img = apply(m, u);
        for (int x = 0; x + 2 <= img.width(); ++x)
            for (int y = 0; y + 2 <= img.height(); ++y) {
                auto e = encode(img(x, y), img(x + 1, y), img(x, y + 1), img(x + 1, y + 1));
                adj[v].push_back(e);
            }
        std::sort(adj[v].begin(), adj[v].end());
        adj[v].erase(std::unique(adj[v].begin(), adj[v].end()), adj[v].end());
    }
    // iterative Tarjan
    std::vector<std::int64_t> index(N, -1), low(N, 0);
    std::vector<char> on(N, 0), oncycle(N, 0);
    std::vector<std::int64_t> st;
    std::int64_t counter = 0;
    for (std::int64_t root = 0; root < N; ++root) {
        if (index[root] >= 0) continue;
        std::vector<std::pair<std::int64_t, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        st.push_back(root);
        on[root] = 1;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < adj[v].size()) {
                auto w = adj[v][i++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    st.push_back(w);
                    on[w] = 1;
                    call.push_back({w, 0});
                } else if (on[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<std::int64_t> compv;
                while (true) {
                    auto w = st.back();
                    st.pop_back();
                    on[w] = 0;
                    compv.push_back(w);
                    if (w == v) break;
                }
                bool cyc = compv.size() > 1 || std::binary_search(adj[v].begin(), adj[v].end(), v);
                if (cyc)
                    for (auto w : compv) oncycle[w] = 1;
            }
            auto vv = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[vv]);
        }
    }
    Language2d out;
    for (std::int64_t v = 0; v < N; ++v)
        if (oncycle[v]) out.insert(decode(v));
    return out;
}

struct PeriodicSeed {
    Word2d seed;
    int k;
};

// (u,k): m^k(u) contains u straddling its four image blocks, so u grows into a fixed point of m^k
inline std::vector<PeriodicSeed> periodic_seeds(const Morphism2d& m, int max_period) {
    if (!is_expansive(m)) throw PreconditionViolation("periodic_seeds needs an expansive morphism");
    std::vector<PeriodicSeed> out;
    for (const auto& u : language(m, {2, 2})) {
        Word2d img = u, corner = Word2d::letter(u(0, 0));
        for (int k = 1; k <= max_period; ++k) {
            img = apply(m, img);
            corner = apply(m, corner);
            Vec2i pos{corner.width() - 1, corner.height() - 1};
            if (occurs_at(u, img, pos)) out.push_back({u, k});
        }
    }
    return out;
}

// distinct generated configurations among periodic seeds
inline std::size_t count_periodic_points(const std::vector<PeriodicSeed>& ps) {
    std::set<Word2d> s;
    for (auto& p : ps) s.insert(p.seed);
    return s.size();
}

// one way of reading a window w as a factor of m(x): the preimage blocks meeting w and w's offset in their image
struct PreimageCandidate {
    Word2d patch;
    Vec2i offset;
    friend bool operator<(const PreimageCandidate& a, const PreimageCandidate& b) {
        if (!(a.patch == b.patch)) return a.patch < b.patch;
        return std::make_pair(a.offset.x, a.offset.y) < std::make_pair(b.offset.x, b.offset.y);
    }
};

// all shape-s windows of m(x), x in preimages, with every decomposition found
inline std::map<Word2d, std::set<PreimageCandidate>> preimage_candidates(const Morphism2d& m, const Language2d& preimages,
                                                                         Shape s) {
    std::map<Word2d, std::set<PreimageCandidate>> out;
    for (const auto& x : preimages) {
        auto sizes = detail::block_sizes(m, x);
        if (!sizes) continue;
        auto& [ws, hs] = *sizes;
        std::vector<int> xs{0}, ys{0};  // block starts
        for (int w : ws) xs.push_back(xs.back() + w);
        for (int h : hs) ys.push_back(ys.back() + h);
        Word2d img = apply(m, x);
        auto block_of = [](const std::vector<int>& starts, int c) {
            return static_cast<int>(std::upper_bound(starts.begin(), starts.end(), c) - starts.begin()) - 1;
        };
        for (int i = 0; i + s.w <= img.width(); ++i)
            for (int j = 0; j + s.h <= img.height(); ++j) {
                int bx0 = block_of(xs, i), bx1 = block_of(xs, i + s.w - 1);
                int by0 = block_of(ys, j), by1 = block_of(ys, j + s.h - 1);
                PreimageCandidate c{x.sub(bx0, by0, bx1 - bx0 + 1, by1 - by0 + 1), {i - xs[bx0], j - ys[by0]}};
                out[img.sub(i, j, s.w, s.h)].insert(std::move(c));
            }
    }
    return out;
}

struct CenteredPreimage {
    Letter letter;  // preimage letter whose image covers the center cell
    Vec2i k;        // position of the center cell inside that image
    friend bool operator<(const CenteredPreimage& a, const CenteredPreimage& b) {
        return std::make_tuple(a.letter, a.k.x, a.k.y) < std::make_tuple(b.letter, b.k.x, b.k.y);
    }
};

inline CenteredPreimage center_of(const Morphism2d& m, const PreimageCandidate& c, Vec2i center) {
    int cx = c.offset.x + center.x, cy = c.offset.y + center.y;
    int bx = 0, by = 0;
    while (cx >= m.rule[c.patch(bx, 0)].width()) cx -= m.rule[c.patch(bx++, 0)].width();
    while (cy >= m.rule[c.patch(0, by)].height()) cy -= m.rule[c.patch(0, by++)].height();
    return {c.patch(bx, by), {cx, cy}};
}

inline std::map<Word2d, std::set<CenteredPreimage>> centered_preimages(const Morphism2d& m, const Language2d& preimages,
                                                                       Shape s, Vec2i center) {
    std::map<Word2d, std::set<CenteredPreimage>> out;
    for (auto& [w, cs] : preimage_candidates(m, preimages, s))
        for (auto& c : cs) out[w].insert(center_of(m, c, center));
    return out;
}

}  // namespace aperiodic
