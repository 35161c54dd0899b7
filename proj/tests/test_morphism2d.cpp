#include "support.hpp"

#include <gtest/gtest.h>

using namespace aperiodic;
using testing_support::Phi;
using testing_support::rows;
using testing_support::U;

namespace {

// subwords of phi^k(a) for every letter and k <= K; no stabilization test
Language2d naive_language(const Morphism2d& m, Shape s, int K) {
    Language2d out;
    for (int a = 0; a < m.domain_size; ++a) {
        Word2d w = Word2d::letter(a);
        for (int k = 1; k <= K; ++k) {
            w = apply(m, w);
            if (w.width() >= s.w && w.height() >= s.h) add_subwords(w, s, out);
        }
    }
    return out;
}

Language2d dominoes(const std::vector<std::array<Letter, 2>>& v, int axis) {
    Language2d out;
    for (auto& d : v) out.insert(axis == 1 ? Word2d::from_columns({{d[0]}, {d[1]}}) : Word2d::from_columns({{d[0], d[1]}}));
    return out;
}

const Word2d& seed_9_14_1_6() {
    static const Word2d s = rows({{9, 14}, {1, 6}});
    return s;
}

}  // namespace

TEST(Morphism2d, RuleTable) {
    const Morphism2d& m = Phi();
    EXPECT_EQ(m.domain_size, 19);
    EXPECT_EQ(m.codomain_size, 19);
    EXPECT_EQ(m(0), Word2d::letter(17));
    EXPECT_EQ(m(2), Word2d::from_columns({{15}, {11}}));
    EXPECT_EQ(m(18), Word2d::from_columns({{14, 2}, {8, 0}}));
    EXPECT_THROW(m(19), UnknownLetter);
    EXPECT_THROW(m(-1), UnknownLetter);
}

TEST(Morphism2d, ApplyExample) {
    EXPECT_EQ(apply(Phi(), rows({{7, 1}, {13, 9}})), rows({{14, 8, 16}, {6, 1, 3}, {14, 11, 17}}));
}

TEST(Morphism2d, ApplyUndefined) {
    Word2d d = Word2d::from_columns({{11, 6}});
    EXPECT_FALSE(image_defined(Phi(), d));
    EXPECT_THROW(apply(Phi(), d), UndefinedImage);
    EXPECT_THROW(apply(Phi(), Word2d::letter(42)), UnknownLetter);
}

TEST(Morphism2d, IdentityAndCompose) {
    Word2d u = rows({{3, 4, 5}, {0, 1, 2}});
    EXPECT_EQ(apply(Morphism2d::identity(19), u), u);
    EXPECT_EQ(compose(Morphism2d::identity(19), Phi()), Phi());
    EXPECT_EQ(compose(Phi(), Morphism2d::identity(19)), Phi());
    Morphism2d p2 = compose(Phi(), Phi());
    for (int a = 0; a < 19; ++a) EXPECT_EQ(p2(a), apply_power(Phi(), Word2d::letter(a), 2));
}

TEST(Morphism2d, Expansive) {
    EXPECT_TRUE(is_expansive(Phi()));
    EXPECT_FALSE(is_expansive(Morphism2d::identity(1)));
    Morphism2d col(1, 1, {Word2d::from_columns({{0, 0}})});
    EXPECT_FALSE(is_expansive(col));
    Morphism2d sq(1, 1, {Word2d::from_columns({{0, 0}, {0, 0}})});
    EXPECT_TRUE(is_expansive(sq));
}

TEST(Morphism2d, Primitive) {
    EXPECT_TRUE(is_primitive(Phi()));
    EXPECT_FALSE(is_primitive(Morphism2d::identity(2)));
    EXPECT_FALSE(is_primitive(Morphism2d::from_permutation({1, 0}, 2)));
    Morphism2d mix(2, 2, {Word2d::from_columns({{0, 1}}), Word2d::letter(0)});
    EXPECT_TRUE(is_primitive(mix));
}

TEST(Morphism2d, LanguageSizes) {
    EXPECT_EQ(language(Phi(), {2, 2}).size(), 50u);
    EXPECT_EQ(language(Phi(), {2, 1}), dominoes(data::h_dominoes(), 1));
    EXPECT_EQ(language(Phi(), {1, 2}), dominoes(data::v_dominoes(), 2));
    EXPECT_EQ(language(Phi(), {2, 1}).size(), 31u);
    EXPECT_EQ(language(Phi(), {1, 2}).size(), 35u);
    EXPECT_EQ(language(Phi(), {1, 1}).size(), 19u);
}

TEST(Morphism2d, LanguageAgreesWithNaiveIteration) {
    for (Shape s : {Shape{1, 1}, Shape{2, 1}, Shape{1, 2}, Shape{2, 2}, Shape{3, 2}, Shape{2, 3}, Shape{3, 3}})
        EXPECT_EQ(language(Phi(), s), naive_language(Phi(), s, 10)) << s.w << "x" << s.h;
}

TEST(Morphism2d, MembershipQuestion) {
    Word2d u = rows({{1, 2}, {10, 14}});
    bool in_oracle = naive_language(Phi(), {2, 2}, 10).count(u) > 0;
    EXPECT_EQ(language(Phi(), {2, 2}).count(u) > 0, in_oracle);
}

TEST(Morphism2d, Seeds) {
    Language2d s = seeds(Phi());
    EXPECT_TRUE(s.count(seed_9_14_1_6()));
    EXPECT_EQ(seeds(Morphism2d::identity(2)).size(), 16u);
    // seeds outside the language exist, e.g. a 2-cycle between two illegal words
    Word2d a = rows({{8, 14}, {1, 6}}), b = rows({{6, 7}, {14, 13}});
    auto L = language(Phi(), {2, 2});
    EXPECT_FALSE(L.count(a));
    EXPECT_FALSE(L.count(b));
    EXPECT_TRUE(s.count(a));
    EXPECT_TRUE(s.count(b));
}

TEST(Morphism2d, PeriodicSeeds) {
    auto ps = periodic_seeds(Phi(), 2);
    EXPECT_EQ(ps.size(), 8u);
    EXPECT_EQ(count_periodic_points(ps), 8u);
    bool found = false;
    for (auto& p : ps) {
        EXPECT_EQ(p.k, 2);
        if (p.seed == seed_9_14_1_6()) found = true;
    }
    EXPECT_TRUE(found);
    EXPECT_THROW(periodic_seeds(Morphism2d::identity(2), 1), PreconditionViolation);
}

TEST(Morphism2d, MorphismLaw) {
    std::mt19937 g(17);
    for (int axis : {1, 2}) {
        Shape big = axis == 1 ? Shape{6, 3} : Shape{3, 6};
        auto Lv = language(Phi(), big);
        std::vector<Word2d> ws(Lv.begin(), Lv.end());
        ASSERT_FALSE(ws.empty());
        for (int i = 0; i < 100; ++i) {
            const Word2d& w = ws[g() % ws.size()];
            Word2d u = w.sub(0, 0, 3, 3);
            Word2d v = axis == 1 ? w.sub(3, 0, 3, 3) : w.sub(0, 3, 3, 3);
            ASSERT_EQ(concat(u, v, axis), w);
            ASSERT_TRUE(image_defined(Phi(), w)) << w.str();
            EXPECT_EQ(apply(Phi(), w), concat(apply(Phi(), u), apply(Phi(), v), axis));
        }
    }
}

TEST(Morphism2d, NestedFixedPointPatches) {
    const Word2d& s = seed_9_14_1_6();
    Word2d prev = s, corner_prev = Word2d::letter(s(0, 0));
    for (int k = 1; k <= 4; ++k) {
        Word2d next = apply_power(Phi(), prev, 2);
        Word2d corner = apply_power(Phi(), corner_prev, 2);
        Vec2i off{corner.width() - corner_prev.width(), corner.height() - corner_prev.height()};
        EXPECT_TRUE(occurs_at(prev, next, off)) << "k=" << k;
        prev = next;
        corner_prev = corner;
    }
    EXPECT_GT(prev.width(), 80);
}

TEST(Morphism2d, CenteredRecognizability) {
    auto L6 = language(Phi(), {6, 6});
    auto cands = centered_preimages(Phi(), language(Phi(), {5, 5}), {6, 6}, {3, 3});
    std::size_t multi = 0;
    for (auto& w : L6) {
        auto it = cands.find(w);
        ASSERT_NE(it, cands.end()) << w.str();
        EXPECT_EQ(it->second.size(), 1u) << w.str();
    }
    // as whole patches the reading is not unique
    auto raw = preimage_candidates(Phi(), language(Phi(), {5, 5}), {6, 6});
    for (auto& w : L6)
        if (raw.at(w).size() > 1) ++multi;
    EXPECT_GT(multi, 0u);
}

TEST(Morphism2d, AperiodicityDeskCheck) {
    auto L8 = language(Phi(), {8, 8});
    std::set<std::pair<int, int>> periods;
    for (int px = -4; px <= 4; ++px)
        for (int py = 0; py <= 4; ++py) {
            if (py == 0 && px <= 0) continue;
            for (auto& w : L8) {
                bool same = true;
                for (int x = 0; x < 8 && same; ++x)
                    for (int y = 0; y < 8 && same; ++y) {
                        int X = x + px, Y = y + py;
                        if (X >= 0 && X < 8 && Y < 8) same = w(x, y) == w(X, Y);
                    }
                if (same) {
                    periods.insert({px, py});
                    break;
                }
            }
        }
    RecordProperty("locally_periodic_offsets", static_cast<int>(periods.size()));
    // every locally periodic candidate fails to extend to a periodic tiling
    for (auto [px, py] : periods)
        for (auto& L : sublattices_up_to(16)) {
            if (py % L.d != 0) continue;
            long r = px - static_cast<long>(L.b) * (py / L.d);
            if (((r % L.a) + L.a) % L.a != 0) continue;
            EXPECT_FALSE(exists_periodic_tiling(U(), L)) << px << "," << py;
        }
}
