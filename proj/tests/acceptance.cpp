#include "support.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace aperiodic;
using testing_support::phi_pow;
using testing_support::Phi;
using testing_support::PU;
using testing_support::rat;
using testing_support::U;

namespace {

using Big = boost::multiprecision::cpp_dec_float_100;

struct Outcome {
    bool ok = true;
    std::string why;
    void require(bool c, const std::string& what) {
        if (!c && ok) {
            ok = false;
            why = what;
        }
    }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.why = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s > limit_s) o.require(false, "over time limit of " + std::to_string(limit_s) + " s");
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << n << " " << title << " (" << std::fixed << std::setprecision(2) << s
              << " s)" << (o.ok ? "" : ": " + o.why) << std::endl;
}

const std::vector<int> M0{0, 1, 2, 3, 4, 5, 6, 7};
const std::vector<int> M1{0, 1, 2, 8, 9, 10, 11};

Big value(const QPhi& x) {
    static const Big ph = (Big(1) + boost::multiprecision::sqrt(Big(5))) / 2;
    auto big = [](const mpq_class& r) { return Big(r.get_num().get_str()) / Big(r.get_den().get_str()); };
    return big(x.a()) + big(x.b()) * ph;
}

QPhi random_elem(std::mt19937& g) {
    std::uniform_int_distribution<long> n(-1000, 1000), d(1, 97);
    return QPhi(mpq_class(n(g), d(g)), mpq_class(n(g), d(g)));
}

Word2d random_word(std::mt19937& g, int w, int h) {
    std::vector<std::vector<Letter>> cols(w, std::vector<Letter>(h));
    for (auto& c : cols)
        for (auto& x : c) x = static_cast<Letter>(g() % 5);
    return Word2d::from_columns(cols);
}

Point random_in_window(std::mt19937& g, const Lattice& L, const Window& w) {
    while (true) {
        Point x = testing_support::random_point(g, L);
        if (w.contains(x)) return x;
    }
}

void exactnum_properties(Outcome& o) {
    std::mt19937 g(11);
    for (int i = 0; i < 10000 && o.ok; ++i) {
        QPhi x = random_elem(g), y = random_elem(g), z = random_elem(g);
        o.require((x + y) + z == x + (y + z), "additive associativity");
        o.require((x * y) * z == x * (y * z), "multiplicative associativity");
        o.require(x * (y + z) == x * y + x * z, "distributivity");
        o.require(x * y == y * x && x + y == y + x, "commutativity");
        o.require(x.is_zero() || x * x.inverse() == QPhi(1), "inverse");
        Big vx = value(x), vy = value(y);
        o.require((x < y) == (vx < vy), "ordering disagrees with oracle: " + x.str() + " " + y.str());
    }
}

void word2d_properties(Outcome& o) {
    std::mt19937 g(4);
    for (int i = 0; i < 500 && o.ok; ++i) {
        int a = g() % 4 + 1, b = g() % 4 + 1, c = g() % 4 + 1, d = g() % 4 + 1;
        Word2d u = random_word(g, a, b), v = random_word(g, c, b), w = random_word(g, d, b);
        o.require(concat(u, v, 1).shape() == Shape{a + c, b}, "horizontal shape");
        o.require(concat(concat(u, v, 1), w, 1) == concat(u, concat(v, w, 1), 1), "horizontal associativity");
        Word2d p = random_word(g, a, c), q = random_word(g, a, d);
        o.require(concat(u, p, 2).shape() == Shape{a, b + c}, "vertical shape");
        o.require(concat(concat(u, p, 2), q, 2) == concat(u, concat(p, q, 2), 2), "vertical associativity");
    }
}

void morphism_law(Outcome& o) {
    std::mt19937 g(17);
    for (int axis : {1, 2}) {
        auto L = language(Phi(), axis == 1 ? Shape{6, 3} : Shape{3, 6});
        std::vector<Word2d> ws(L.begin(), L.end());
        for (int i = 0; i < 100 && o.ok; ++i) {
            const Word2d& w = ws[g() % ws.size()];
            Word2d u = w.sub(0, 0, 3, 3), v = axis == 1 ? w.sub(3, 0, 3, 3) : w.sub(0, 3, 3, 3);
            o.require(apply(Phi(), w) == concat(apply(Phi(), u), apply(Phi(), v), axis), "morphism law at " + w.str());
        }
    }
}

void pet_properties(Outcome& o, const Z2Action& R1, const Z2Action& R2) {
    std::mt19937 g(33);
    for (const Z2Action* a : {&PU().action, &R1, &R2}) {
        o.require(a->gen1().is_bijective() && a->gen2().is_bijective(), "generator not bijective");
        for (int i = 0; i < 1000 && o.ok; ++i) {
            Point x = testing_support::random_point(g, a->lattice());
            o.require(a->gen1().apply(a->gen2().apply(x)) == a->gen2().apply(a->gen1().apply(x)), "generators do not commute");
        }
    }
}

void desubstitution_identity(Outcome& o, const Z2Action& R1, const InducedPartition& I1, const Z2Action& R2,
                             const InducedPartition& I2, const Window& W0, const Window& W1) {
    std::mt19937 g(10);
    for (int i = 0; i < 20 && o.ok; ++i) {
        Point x = random_in_window(g, {}, W0);
        Word2d lifted = apply(I1.morphism, config_patch(I1.partition, R1, x, {10, 10}));
        o.require(lifted.sub(0, 0, 10, 10) == config_patch(PU().partition, PU().action, x, {10, 10}), "first stage patch");
    }
    for (int i = 0; i < 20 && o.ok; ++i) {
        Point x = random_in_window(g, R1.lattice(), W1);
        Word2d lifted = apply(I2.morphism, config_patch(I2.partition, R2, x, {10, 10}));
        o.require(lifted.sub(0, 0, 10, 10) == config_patch(I1.partition, R1, x, {10, 10}), "second stage patch");
    }
}

void recognizability(Outcome& o) {
    auto L6 = language(Phi(), {6, 6});
    auto cands = centered_preimages(Phi(), language(Phi(), {5, 5}), {6, 6}, {3, 3});
    for (auto& w : L6) {
        auto it = cands.find(w);
        o.require(it != cands.end() && it->second.size() == 1, "non-unique centered preimage of " + w.str());
        if (!o.ok) return;
    }
}

}  // namespace

int main() {
    DesubstitutionResult V, W;

    criterion(1, "markers of U along e2 at radius 2", 60, [&](Outcome& o) {
        auto r = find_markers(U(), 2, 2);
        o.require(r.marker_subsets == std::vector<std::vector<int>>{M0}, "unexpected marker sets");
    });

    criterion(2, "two desubstitutions return to a set equivalent to U", 0, [&](Outcome& o) {
        V = find_substitution(U(), M0, 2, 2, Side::Right);
        o.require(V.tiles.size() == 21, "first step has " + std::to_string(V.tiles.size()) + " tiles");
        auto r = find_markers(V.tiles, 1, 1);
        o.require(r.marker_subsets == std::vector<std::vector<int>>{M1, {3, 5, 13, 14, 17, 20}, {4, 6, 7, 12, 15, 16, 18, 19}},
                  "unexpected marker sets on the 21 tiles");
        W = find_substitution(V.tiles, M1, 1, 1, Side::Right);
        o.require(W.tiles.size() == 19, "second step has " + std::to_string(W.tiles.size()) + " tiles");
        auto cert = is_equivalent(U(), W.tiles);
        o.require(cert.has_value(), "not equivalent to U");
        if (!cert) return;
        std::map<std::string, std::string> vert{{"A", "IJ"}, {"B", "IH"}, {"C", "BF"}, {"D", "G"}, {"E", "AF"},
                                                {"F", "I"},  {"G", "ID"}, {"H", "B"},  {"I", "GF"}, {"J", "A"}};
        std::map<std::string, std::string> horiz{{"K", "PO"}, {"L", "M"}, {"M", "PL"}, {"N", "MO"}, {"O", "K"}, {"P", "KO"}};
        o.require(cert->vert == vert, "vertical color map differs");
        o.require(cert->horiz == horiz, "horizontal color map differs");
    });

    criterion(3, "compose(alpha0, alpha1, alpha2) equals phi", 0, [&](Outcome& o) {
        auto cert = is_equivalent(U(), W.tiles);
        o.require(cert.has_value(), "no certificate");
        if (cert) o.require(compose(V.morphism, W.morphism, certificate_morphism(*cert)) == Phi(), "composite differs from phi");
    });

    criterion(4, "partition of the torus into 19 atoms of total area 1", 0, [&](Outcome& o) {
        auto P = partition_from_segments(partition_u_segments(), Lattice{});
        o.require(P.size() == 19, std::to_string(P.size()) + " atoms");
        o.require(P.total_area() == QPhi(1), "total area " + P.total_area().str());
    });

    PetLoop pet;
    criterion(5, "induction pipeline on the partition returns phi", 0, [&](Outcome& o) {
        pet = run_pet_pipeline(Phi(), standard_pet_route(), PU());
        o.require(pet.actions.size() == 2, "expected two induction steps");
        if (!o.ok) return;
        QPhi ip = phi_pow(-1);
        o.require(pet.actions[0] == Z2Action(Lattice{1, ip}, {phi_pow(-2), 0}, {0, -phi_pow(-3)}), "first induced action");
        o.require(pet.actions[1] == Z2Action(Lattice{ip, ip}, {-phi_pow(-3), 0}, {0, -phi_pow(-3)}), "second induced action");
        o.require(pet.match.has_value(), "rescaled partition does not match");
        o.require(pet.composite_is_phi, "composite of betas differs from phi");
    });

    criterion(6, "beta_i equals alpha_i for i = 0, 1, 2", 0, [&](Outcome& o) {
        auto cert = is_equivalent(U(), W.tiles);
        o.require(cert.has_value() && pet.betas.size() == 3, "missing stages");
        if (!o.ok) return;
        std::vector<Morphism2d> alphas{V.morphism, W.morphism, certificate_morphism(*cert)};
        o.require(alphas == pet.betas, morphisms_equal_detail(alphas, pet.betas));
    });

    criterion(7, "languages of phi, U and the partition agree up to 2x2", 600, [&](Outcome& o) {
        auto rows = cross_check_languages(Phi(), U(), PU(), {2, 2});
        std::map<std::pair<int, int>, std::size_t> expect{{{1, 1}, 19}, {{2, 1}, 31}, {{1, 2}, 35}, {{2, 2}, 50}};
        for (auto& r : rows) {
            std::string s = std::to_string(r.shape.w) + "x" + std::to_string(r.shape.h);
            o.require(r.radius == 2, s + " needed radius " + std::to_string(r.radius));
            o.require(r.equal(), s + " languages differ");
            o.require(r.n_phi == expect.at({r.shape.w, r.shape.h}), s + " has " + std::to_string(r.n_phi) + " words");
        }
    });

    criterion(8, "phi has 8 periodic points", 0, [&](Outcome& o) {
        auto n = count_periodic_points(periodic_seeds(Phi(), 2));
        o.require(n == 8, std::to_string(n) + " periodic points");
    });

    criterion(9, "property suites", 0, [&](Outcome& o) {
        exactnum_properties(o);
        word2d_properties(o);
        morphism_law(o);
        const Window W0{2, phi_pow(-1)}, W1{1, phi_pow(-1)};
        Z2Action R1 = induce_action(PU().action, W0);
        auto I1 = induced_partition(PU().partition, PU().action, W0);
        Z2Action R2 = induce_action(R1, W1);
        auto I2 = induced_partition(I1.partition, R1, W1);
        pet_properties(o, R1, R2);
        desubstitution_identity(o, R1, I1, R2, I2, W0, W1);
        recognizability(o);
        for (auto& L : sublattices_up_to(16))
            o.require(!exists_periodic_tiling(U(), L),
                      "periodic tiling for lattice " + std::to_string(L.a) + "," + std::to_string(L.b) + "," + std::to_string(L.d));
    });

    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
    return failures ? 1 : 0;
}
