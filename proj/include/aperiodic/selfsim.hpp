// End-to-end checks: the Wang desubstitution loop, the PET induction loop, uniqueness hypotheses, languages.
#pragma once

#include "data.hpp"
#include "markers.hpp"
#include "morphism2d.hpp"
#include "pet.hpp"
#include "wangtiles.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aperiodic {

struct StageFailure : std::runtime_error {
    std::string stage;
    StageFailure(std::string st, const std::string& what) : std::runtime_error(st + ": " + what), stage(std::move(st)) {}
};

namespace detail {

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const StageFailure&) {
        throw;
    } catch (const std::exception& e) {
        throw StageFailure(name, e.what());
    }
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

struct DesubStep {
    int axis = 2;
    int radius = 1;
    Side side = Side::Right;
    std::vector<std::vector<int>> markers;  // all marker sets found
    int chosen = 0;                          // index of the set used
    DesubstitutionResult result;
};

struct WangLoop {
    std::vector<DesubStep> steps;
    std::optional<EquivalenceCertificate> certificate;
    Morphism2d last;       // certificate letter map
    Morphism2d composite;  // alpha_0 ... alpha_n
    bool composite_is_phi = false;
};

struct WangRouteStep {
    int axis;
    int radius;  // 0: escalate from 1 to 3 until markers appear
    Side side = Side::Right;
};

inline std::vector<WangRouteStep> standard_wang_route() { return {{2, 2, Side::Right}, {1, 1, Side::Right}}; }
inline std::vector<WangRouteStep> e1_first_wang_route() { return {{1, 0, Side::Right}, {2, 0, Side::Right}}; }

// desubstitute along the route, then compare the last tile set with T itself
inline WangLoop run_wang_pipeline(const WangTileSet& U, const Morphism2d& expected,
                                  const std::vector<WangRouteStep>& route = standard_wang_route(), int jobs = 0) {
    WangLoop loop;
    WangTileSet cur = U;
    for (std::size_t i = 0; i < route.size(); ++i) {
        const auto& rs = route[i];
        std::string name = "wang step " + std::to_string(i) + " (axis " + std::to_string(rs.axis) + ")";
        DesubStep st;
        st.axis = rs.axis;
        st.side = rs.side;
        int r0 = rs.radius > 0 ? rs.radius : 1, r1 = rs.radius > 0 ? rs.radius : 3;
        for (int r = r0; r <= r1 && st.markers.empty(); ++r) {
            st.radius = r;
            st.markers = detail::stage(name + " markers", [&] { return find_markers(cur, rs.axis, r, jobs).marker_subsets; });
        }
        if (st.markers.empty()) throw StageFailure(name + " markers", "no marker set; try increasing the radius");
        std::optional<std::string> last_err;
        for (std::size_t k = 0; k < st.markers.size(); ++k) {
            try {
                st.result = find_substitution(cur, st.markers[k], rs.axis, st.radius, rs.side, jobs);
                st.chosen = static_cast<int>(k);
                last_err.reset();
                break;
            } catch (const std::exception& e) {
                last_err = e.what();
            }
        }
        if (last_err) throw StageFailure(name + " substitution", *last_err);
        cur = st.result.tiles;
        loop.steps.push_back(std::move(st));
    }
    loop.certificate = is_equivalent(U, cur);
    if (!loop.certificate) throw StageFailure("wang equivalence", "final tile set is not equivalent to the input");
    loop.last = certificate_morphism(*loop.certificate);  // letters of U -> letters of the last set
    Morphism2d c = loop.last;
    for (std::size_t i = loop.steps.size(); i-- > 0;) c = compose(loop.steps[i].result.morphism, c);
    loop.composite = c;
    loop.composite_is_phi = (c == expected);
    return loop;
}

inline std::vector<Morphism2d> wang_morphisms(const WangLoop& l) {
    std::vector<Morphism2d> r;
    for (auto& s : l.steps) r.push_back(s.result.morphism);
    r.push_back(l.last);
    return r;
}

struct PartitionU {
    TorusPartition partition;
    Z2Action action;
};

inline std::vector<Segment> partition_u_segments() {
    QPhi phi = QPhi::phi(), one(1), ip2 = (phi * phi).inverse();
    auto P = [](QPhi x, QPhi y) { return Point{x, y}; };
    return {{P(one, phi * phi), P(0, phi * phi)}, {P(0, phi * phi), P(phi, 0)},       {P(phi, 0), P(phi, one)},
            {P(one, one), P(0, one)},             {P(0, one), P(one, 0)},             {P(one, 0), P(one, one)},
            {P(ip2, 2), P(one + ip2, one)},       {P(one + ip2, one), P(one + ip2, 2)}};
}

inline Z2Action rotation_u() {
    QPhi ip2 = (QPhi::phi() * QPhi::phi()).inverse();
    return Z2Action(Lattice{}, {ip2, 0}, {0, ip2});
}

inline PairSet to_pairs(const std::vector<std::array<Letter, 2>>& v) {
    PairSet s;
    for (auto& d : v) s.insert({d[0], d[1]});
    return s;
}

// the 19-atom partition with labels fixed by the H/V domino lists
inline PartitionU build_partition_u() {
    Z2Action R = rotation_u();
    auto prov = partition_from_segments(partition_u_segments(), Lattice{});
    auto P = relabel_to_match(prov, to_pairs(data::h_dominoes()), to_pairs(data::v_dominoes()), R);
    return {std::move(P), std::move(R)};
}

struct PetLoop {
    TorusPartition PU;
    Z2Action RU;
    std::vector<TorusPartition> partitions;  // P1, P2, ...
    std::vector<Z2Action> actions;           // R1, R2, ...
    std::vector<Morphism2d> betas;           // beta_0, ..., beta_n (last one from the relabeling)
    std::optional<std::map<int, int>> match; // rescaled last partition label -> PU label
    Morphism2d composite;
    bool composite_is_phi = false;
};

struct PetRoute {
    std::vector<Window> windows;
    QPhi factor;
    Point translate;
};

inline PetRoute standard_pet_route() {
    QPhi ip = QPhi::phi().inverse();
    return {{Window{2, ip}, Window{1, ip}}, -QPhi::phi(), {1, 1}};
}
inline PetRoute horizontal_first_pet_route() {
    QPhi ip = QPhi::phi().inverse();
    return {{Window{1, ip}, Window{2, ip}}, -QPhi::phi(), {1, 1}};
}

inline PetLoop run_pet_pipeline(const Morphism2d& expected, const PetRoute& route = standard_pet_route(),
                                const std::optional<PartitionU>& given = std::nullopt) {
    PetLoop loop;
    PartitionU pu = given ? *given : detail::stage("pet partition", [] { return build_partition_u(); });
    loop.PU = pu.partition;
    loop.RU = pu.action;
    TorusPartition P = loop.PU;
    Z2Action R = loop.RU;
    for (std::size_t i = 0; i < route.windows.size(); ++i) {
        const Window& w = route.windows[i];
        std::string name = "pet induction " + std::to_string(i);
        auto ip = detail::stage(name, [&] { return induced_partition(P, R, w); });
        R = detail::stage(name, [&] { return induce_action(R, w); });
        P = ip.partition;
        loop.partitions.push_back(P);
        loop.actions.push_back(R);
        loop.betas.push_back(ip.morphism);
    }
    TorusPartition scaled = detail::stage("pet rescale", [&] { return rescale(P, route.factor, route.translate); });
    loop.match = is_equal_up_to_relabeling(scaled, loop.PU);
    if (!loop.match) throw StageFailure("pet match", "rescaled partition differs from the initial one");
    std::vector<int> inv(loop.match->size());
    for (auto [a, b] : *loop.match) inv[b] = a;
    loop.betas.push_back(Morphism2d::from_permutation(inv, static_cast<int>(P.size())));
    Morphism2d c = loop.betas.back();
    for (std::size_t i = loop.betas.size() - 1; i-- > 0;) c = detail::stage("pet compose", [&] { return compose(loop.betas[i], c); });
    loop.composite = c;
    loop.composite_is_phi = (c == expected);
    return loop;
}

struct UniquenessCheck {
    bool expansive = false;
    bool primitive = false;
    bool seeds_in_language = false;
    std::size_t seeds = 0;
    std::size_t seeds_outside = 0;
    std::vector<PeriodicSeed> periodic;
    std::size_t periodic_points = 0;
};

inline UniquenessCheck check_uniqueness_hypotheses(const Morphism2d& m, int max_period = 2) {
    UniquenessCheck u;
    u.expansive = is_expansive(m);
    u.primitive = is_primitive(m);
    Language2d S = seeds(m);
    u.seeds = S.size();
    if (u.expansive) {
        Language2d L = language(m, {2, 2});
        for (auto& w : S)
            if (!L.count(w)) ++u.seeds_outside;
        u.seeds_in_language = u.seeds_outside == 0;
        u.periodic = periodic_seeds(m, max_period);
        u.periodic_points = count_periodic_points(u.periodic);
    }
    return u;
}

struct LanguageRow {
    Shape shape;
    std::size_t n_phi = 0, n_wang = 0, n_pet = 0;
    int radius = 2;
    bool wang_equal = false, pet_equal = false;
    bool equal() const { return wang_equal && pet_equal; }
};

inline std::vector<LanguageRow> cross_check_languages(const Morphism2d& m, const WangTileSet& U, const PartitionU& pu,
                                                      Shape max_shape, int radius = 2, int jobs = 0) {
    std::vector<LanguageRow> rows;
    for (int w = 1; w <= max_shape.w; ++w)
        for (int h = 1; h <= max_shape.h; ++h) {
            LanguageRow row;
            row.shape = {w, h};
            Language2d Lphi = language(m, row.shape);
            row.n_phi = Lphi.size();
            row.radius = radius;
            Language2d Lw = surrounding_language(U, row.shape, radius, jobs);
            if (Lw != Lphi && radius < 3) {
                row.radius = 3;
                Lw = surrounding_language(U, row.shape, 3, jobs);
            }
            row.n_wang = Lw.size();
            row.wang_equal = Lw == Lphi;
            Language2d Lp = enumerate_language(pu.partition, pu.action, row.shape);
            row.n_pet = Lp.size();
            row.pet_equal = Lp == Lphi;
            rows.push_back(row);
        }
    return rows;
}

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
    bool informational = false;  // reported, not required
};

struct VerificationReport {
    std::optional<WangLoop> wang;
    std::optional<WangLoop> wang_e1_first;
    std::optional<PetLoop> pet;
    std::optional<PetLoop> pet_horizontal_first;
    UniquenessCheck uniqueness;
    std::vector<LanguageRow> languages;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, double>> timing;
    std::string first_failure;

    bool ok() const {
        for (auto& c : checks)
            if (!c.ok && !c.informational) return false;
        return true;
    }

    std::string summary(bool with_timing = false) const {
        std::ostringstream os;
        for (auto& c : checks)
            os << (c.ok ? "ok   " : (c.informational ? "note " : "FAIL ")) << c.name << (c.detail.empty() ? "" : ": ")
               << c.detail << "\n";
        if (with_timing)
            for (auto& [k, t] : timing) os << "time " << k << " " << t << " s\n";
        return os.str();
    }
};

struct VerifyOptions {
    WangTileSet tiles = WangTileSet::from_strings(data::u_tile_strings());
    Morphism2d phi = data::phi();
    Shape max_shape{2, 2};
    int radius = 2;
    int jobs = 0;
};

inline std::string morphisms_equal_detail(const std::vector<Morphism2d>& a, const std::vector<Morphism2d>& b) {
    if (a.size() != b.size()) return "different number of steps";
    std::string d;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += std::string(i ? ", " : "") + std::to_string(i) + (a[i] == b[i] ? "=" : "!=");
    return d;
}

inline VerificationReport verify_all(const VerifyOptions& opt = {}) {
    VerificationReport rep;
    auto add = [&](std::string name, bool ok, std::string detail = "", bool info = false) {
        if (!ok && !info && rep.first_failure.empty()) rep.first_failure = name;
        rep.checks.push_back({std::move(name), ok, std::move(detail), info});
    };
    auto timed = [&](const std::string& name, auto&& f, bool info = false) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            f();
        } catch (const std::exception& e) {
            add(name, false, e.what(), info);
        }
        rep.timing.push_back({name, detail::seconds_since(t0)});
    };

    timed("wang", [&] {
        rep.wang = run_wang_pipeline(opt.tiles, opt.phi, standard_wang_route(), opt.jobs);
        add("wang: composite equals phi", rep.wang->composite_is_phi);
    });
    timed("wang e1 first", [&] {
        rep.wang_e1_first = run_wang_pipeline(opt.tiles, opt.phi, e1_first_wang_route(), opt.jobs);
        add("wang e1 first: loop closes", true,
            std::string("composite ") + (rep.wang_e1_first->composite_is_phi ? "equals" : "differs from") + " phi", true);
    }, true);
    std::optional<PartitionU> pu;
    timed("pet", [&] {
        pu = build_partition_u();
        add("pet: 19 atoms of total area 1", pu->partition.size() == 19 && pu->partition.total_area() == QPhi(1));
        rep.pet = run_pet_pipeline(opt.phi, standard_pet_route(), pu);
        add("pet: composite equals phi", rep.pet->composite_is_phi);
    });
    timed("pet horizontal first", [&] {
        rep.pet_horizontal_first = run_pet_pipeline(opt.phi, horizontal_first_pet_route(), pu);
        std::string d = std::string("composite ") + (rep.pet_horizontal_first->composite_is_phi ? "equals" : "differs from") + " phi";
        if (rep.wang_e1_first)
            d += "; vs wang e1 first: " + morphisms_equal_detail(rep.pet_horizontal_first->betas, wang_morphisms(*rep.wang_e1_first));
        add("pet horizontal first: loop closes", true, d, true);
    }, true);
    if (rep.wang && rep.pet) {
        auto al = wang_morphisms(*rep.wang);
        add("alpha_i equals beta_i", al.size() == rep.pet->betas.size() && al == rep.pet->betas,
            morphisms_equal_detail(al, rep.pet->betas));
    }
    timed("uniqueness", [&] {
        rep.uniqueness = check_uniqueness_hypotheses(opt.phi, 2);
        auto& u = rep.uniqueness;
        add("phi is expansive", u.expansive);
        add("phi is primitive", u.primitive);
        add("seeds(phi) inside L(2,2)", u.seeds_in_language,
            std::to_string(u.seeds_outside) + " of " + std::to_string(u.seeds) + " seeds outside", true);
        add("8 periodic points", u.periodic.size() == 8 && u.periodic_points == 8,
            std::to_string(u.periodic.size()) + " (seed,k) pairs, " + std::to_string(u.periodic_points) + " distinct seeds");
    });
    timed("languages", [&] {
        if (!pu) pu = build_partition_u();
        rep.languages = cross_check_languages(opt.phi, opt.tiles, *pu, opt.max_shape, opt.radius, opt.jobs);
        for (auto& r : rep.languages) {
            // required up to (2,2) and on squares up to (3,3); other shapes are reported
            bool required = (r.shape.w <= 2 && r.shape.h <= 2) || (r.shape.w == r.shape.h && r.shape.w <= 3);
            add("language " + std::to_string(r.shape.w) + "x" + std::to_string(r.shape.h), r.equal(),
                std::to_string(r.n_phi) + "/" + std::to_string(r.n_wang) + "/" + std::to_string(r.n_pet) +
                    " (phi/wang r=" + std::to_string(r.radius) + "/pet)",
                !required);
        }
    });
    return rep;
}

}  // namespace aperiodic
