#include "cli.hpp"

#include "aperiodic/json_io.hpp"
#include "aperiodic/selfsim.hpp"
#include "aperiodic/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace aperiodic::cli {

namespace {

using io::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};


json builtin(const std::string& name) {
    if (name == "U") return io::to_json(WangTileSet::from_strings(data::u_tile_strings()));
    if (name == "phi") return io::to_json(data::phi());
    if (name == "PU") {
        auto pu = build_partition_u();
        json j = io::to_json(pu.partition);
        j["action"] = io::to_json(pu.action);
        return j;
    }
    throw InputError("unknown builtin '" + name + "' (known: U, phi, PU)");
}

json load(const std::string& path) {
    if (path.rfind("builtin:", 0) == 0) return builtin(path.substr(8));
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

Shape parse_shape(const std::string& s) {
    auto p = s.find_first_of("x,");
    if (p == std::string::npos) throw InputError("shape must look like WxH: " + s);
    try {
        int w = std::stoi(s.substr(0, p)), h = std::stoi(s.substr(p + 1));
        if (w < 0 || h < 0) throw InputError("negative shape " + s);
        return {w, h};
    } catch (const std::logic_error&) {
        throw InputError("shape must look like WxH: " + s);
    }
}

Vec2i parse_vec(const std::string& s) {
    Shape sh = [&] {
        auto p = s.find(',');
        if (p == std::string::npos) throw InputError("offset must look like i,j: " + s);
        return Shape{std::stoi(s.substr(0, p)), std::stoi(s.substr(p + 1))};
    }();
    return {sh.w, sh.h};
}

Point parse_point(const std::string& s) {
    auto p = s.find(',');
    if (p == std::string::npos) throw InputError("point must look like x,y: " + s);
    return {QPhi::parse(s.substr(0, p)), QPhi::parse(s.substr(p + 1))};
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string t;
    while (std::getline(ss, t, ','))
        if (!t.empty()) v.push_back(std::stoi(t));
    return v;
}

Side parse_side(const std::string& s) {
    if (s == "right") return Side::Right;
    if (s == "left") return Side::Left;
    throw InputError("side must be left or right");
}

void check_axis(int axis) {
    if (axis != 1 && axis != 2) throw InputError("axis must be 1 or 2");
}

struct Partitioned {
    TorusPartition partition;
    Z2Action action;
};

Partitioned partition_with_action(const json& j) {
    if (!j.contains("action")) throw InputError("partition needs an \"action\" entry");
    return {io::partition_from_json(j), io::action_from_json(j.at("action"))};
}

class Output {
public:
    Output(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}
    void write(const std::string& s) const {
        if (path_.empty()) {
            out_ << s;
            return;
        }
        std::ofstream f(path_);
        if (!f) throw InputError("cannot write " + path_);
        f << s;
    }
    void write(const json& j) const { write(j.dump(2) + "\n"); }

private:
    std::ostream& out_;
    std::string path_;
};

json report_json(const VerificationReport& r) {
    json checks = json::array();
    for (auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"informational", c.informational}, {"detail", c.detail}});
    json j = {{"ok", r.ok()}, {"first_failure", r.first_failure}, {"checks", checks}};
    auto loop_json = [](const std::vector<Morphism2d>& ms, bool phi) {
        json a = json::array();
        for (auto& m : ms) a.push_back(io::to_json(m));
        return json{{"morphisms", a}, {"composite_equals_phi", phi}};
    };
    if (r.wang) {
        json w = loop_json(wang_morphisms(*r.wang), r.wang->composite_is_phi);
        json steps = json::array();
        for (auto& s : r.wang->steps)
            steps.push_back({{"axis", s.axis}, {"radius", s.radius}, {"markers", s.markers}, {"chosen", s.chosen},
                             {"tiles", io::to_json(s.result.tiles)["tiles"]}});
        w["steps"] = steps;
        if (r.wang->certificate) w["certificate"] = io::to_json(*r.wang->certificate);
        j["wang"] = w;
    }
    if (r.wang_e1_first) j["wang_e1_first"] = loop_json(wang_morphisms(*r.wang_e1_first), r.wang_e1_first->composite_is_phi);
    if (r.pet) {
        json p = loop_json(r.pet->betas, r.pet->composite_is_phi);
        json acts = json::array();
        for (auto& a : r.pet->actions) acts.push_back(io::to_json(a));
        p["actions"] = acts;
        j["pet"] = p;
    }
    if (r.pet_horizontal_first)
        j["pet_horizontal_first"] = loop_json(r.pet_horizontal_first->betas, r.pet_horizontal_first->composite_is_phi);
    json per = json::array();
    for (auto& ps : r.uniqueness.periodic) per.push_back({{"seed", io::to_json(ps.seed)}, {"k", ps.k}});
    j["uniqueness"] = {{"expansive", r.uniqueness.expansive},
                       {"primitive", r.uniqueness.primitive},
                       {"seeds", r.uniqueness.seeds},
                       {"seeds_outside_language", r.uniqueness.seeds_outside},
                       {"periodic_seeds", per},
                       {"periodic_points", r.uniqueness.periodic_points}};
    json langs = json::array();
    for (auto& l : r.languages)
        langs.push_back({{"shape", {l.shape.w, l.shape.h}},
                         {"phi", l.n_phi},
                         {"wang", l.n_wang},
                         {"wang_radius", l.radius},
                         {"pet", l.n_pet},
                         {"equal", l.equal()}});
    j["languages"] = langs;
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wang tiles, 2-dimensional morphisms and polygon exchanges for the 19-tile set U", "aperiodic-kit"};
    app.require_subcommand(1);
    int jobs = 0;
    app.add_option("--jobs", jobs, "worker threads (default: APERIODIC_KIT_JOBS or all cores)");

    std::string input, input2, out_path, shape_s = "2x2", side_s = "right", markers_s, seed_s, offset_s = "0,0",
                bound_s, target, backend_s = "dlx", max_shape_s = "2x2";
    int axis = 2, radius = 2;
    unsigned palette_seed = 0;
    bool timing = false;

    auto* markers = app.add_subcommand("markers", "marker sets of a tile set");
    markers->add_option("tiles", input, "tile-set JSON or builtin:U")->required();
    markers->add_option("--axis", axis)->check(CLI::IsMember({1, 2}));
    markers->add_option("--radius", radius)->check(CLI::NonNegativeNumber);

    auto* desub = app.add_subcommand("desub", "desubstitute a tile set from a marker set");
    desub->add_option("tiles", input)->required();
    desub->add_option("--axis", axis)->check(CLI::IsMember({1, 2}));
    desub->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
    desub->add_option("--side", side_s)->check(CLI::IsMember({"left", "right"}));
    desub->add_option("--markers", markers_s, "comma-separated tile indices (default: first marker set found)");
    desub->add_option("--out", out_path);

    auto* equiv = app.add_subcommand("equiv", "equivalence certificate between two tile sets");
    equiv->add_option("first", input)->required();
    equiv->add_option("second", input2)->required();

    auto* solve_c = app.add_subcommand("solve", "tile a rectangle");
    solve_c->add_option("tiles", input)->required();
    solve_c->add_option("--shape", shape_s);
    solve_c->add_option("--backend", backend_s)->check(CLI::IsMember({"dlx", "backtracking"}));
    solve_c->add_option("--out", out_path);

    auto* lang = app.add_subcommand("lang", "patterns of a shape: morphism language, surrounding language or coding");
    lang->add_option("input", input, "morphism, tile set or partition-with-action JSON")->required();
    lang->add_option("--shape", shape_s);
    lang->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
    lang->add_option("--out", out_path);

    auto* induce = app.add_subcommand("induce", "induced partition and natural substitution on a window");
    induce->add_option("partition", input)->required();
    induce->add_option("--axis", axis)->check(CLI::IsMember({1, 2}));
    induce->add_option("--bound", bound_s, "window bound, e.g. -1+1*phi")->required();
    induce->add_option("--out", out_path);

    auto* config = app.add_subcommand("config", "coding of an orbit patch");
    config->add_option("partition", input)->required();
    config->add_option("--seed-point", seed_s, "x,y")->required();
    config->add_option("--shape", shape_s);
    config->add_option("--offset", offset_s);
    config->add_option("--out", out_path);

    auto* render = app.add_subcommand("render", "SVG drawing of a tile set, tiling, partition or coded orbit");
    render->add_option("artifact", input)->required();
    render->add_option("--target", target)->check(CLI::IsMember({"tiles", "tiling", "partition", "coded-orbit"}));
    render->add_option("--seed-point", seed_s);
    render->add_option("--shape", shape_s);
    render->add_option("--palette-seed", palette_seed);
    render->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify-all", "run every self-similarity check");
    verify->add_option("--tiles", input, "tile set to check (default builtin:U)");
    verify->add_option("--max-shape", max_shape_s);
    verify->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
    verify->add_option("--out", out_path, "report JSON");
    verify->add_flag("--timing", timing, "include stage timings in the report");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    Output o(out, out_path);
    try {
        if (*markers) {
            check_axis(axis);
            auto T = io::tiles_from_json(load(input));
            auto rep = find_markers(T, axis, radius, jobs);
            o.write(io::to_json(rep));
            if (rep.marker_subsets.empty()) {
                err << "no marker set at radius " << radius << "; try increasing the radius\n";
                return 2;
            }
            return 0;
        }
        if (*desub) {
            check_axis(axis);
            auto T = io::tiles_from_json(load(input));
            std::vector<int> M;
            if (!markers_s.empty()) {
                M = parse_ints(markers_s);
            } else {
                auto rep = find_markers(T, axis, radius, jobs);
                if (rep.marker_subsets.empty()) {
                    err << "no marker set at radius " << radius << "; try increasing the radius\n";
                    return 2;
                }
                M = rep.marker_subsets.front();
            }
            o.write(io::to_json(find_substitution(T, M, axis, radius, parse_side(side_s), jobs)));
            return 0;
        }
        if (*equiv) {
            auto T = io::tiles_from_json(load(input)), S = io::tiles_from_json(load(input2));
            auto c = is_equivalent(T, S);
            if (!c) {
                out << "null\n";
                err << "tile sets are not equivalent\n";
                return 2;
            }
            o.write(io::to_json(*c));
            return 0;
        }
        if (*solve_c) {
            auto T = io::tiles_from_json(load(input));
            Shape s = parse_shape(shape_s);
            auto w = solve_rectangle(T, s, backend_s == "dlx" ? SolverBackend::DancingLinks : SolverBackend::Backtracking);
            if (!w) {
                out << "null\n";
                err << "no tiling of shape " << s.w << "x" << s.h << "\n";
                return 2;
            }
            json j = io::to_json(T);
            j["shape"] = {s.w, s.h};
            j["tiling"] = io::to_json(*w);
            o.write(j);
            return 0;
        }
        if (*lang) {
            json j = load(input);
            Shape s = parse_shape(shape_s);
            Language2d L;
            if (j.contains("rule")) L = language(io::morphism_from_json(j), s);
            else if (j.contains("tiles")) L = surrounding_language(io::tiles_from_json(j), s, radius, jobs);
            else if (j.contains("atoms")) {
                auto pa = partition_with_action(j);
                L = enumerate_language(pa.partition, pa.action, s);
            } else throw InputError("input is neither a morphism, a tile set nor a partition");
            json r = io::to_json(L);
            r = json{{"shape", {s.w, s.h}}, {"size", r["size"]}, {"words", r["words"]}};
            o.write(r);
            return L.empty() ? 2 : 0;
        }
        if (*induce) {
            check_axis(axis);
            auto pa = partition_with_action(load(input));
            Window w{axis, QPhi::parse(bound_s)};
            auto ip = induced_partition(pa.partition, pa.action, w);
            auto act = induce_action(pa.action, w);
            json p = io::to_json(ip.partition);
            p["action"] = io::to_json(act);
            o.write(json{{"partition", p}, {"morphism", io::to_json(ip.morphism)}});
            return 0;
        }
        if (*config) {
            auto pa = partition_with_action(load(input));
            Shape s = parse_shape(shape_s);
            Word2d w = config_patch(pa.partition, pa.action, parse_point(seed_s), s, parse_vec(offset_s));
            o.write(json{{"shape", {s.w, s.h}}, {"word", io::to_json(w)}});
            return 0;
        }
        if (*render) {
            json j = load(input);
            std::string t = target;
            if (t.empty()) {
                if (j.contains("tiling")) t = "tiling";
                else if (j.contains("tiles")) t = "tiles";
                else if (j.contains("atoms")) t = seed_s.empty() ? "partition" : "coded-orbit";
                else throw InputError("cannot tell what to render");
            }
            std::string svg;
            if (t == "tiles") svg = svg::render_tiles(io::tiles_from_json(j), palette_seed);
            else if (t == "tiling") {
                if (!j.contains("tiling")) throw InputError("artifact has no \"tiling\"");
                auto T = io::tiles_from_json(j);
                Word2d w = io::word_from_json(j.at("tiling"));
                check_indices(T, w);
                svg = svg::render_tiling(T, w, palette_seed);
            } else if (t == "partition") svg = svg::render_partition(io::partition_from_json(j), palette_seed);
            else {
                if (seed_s.empty()) throw InputError("coded-orbit needs --seed-point");
                auto pa = partition_with_action(j);
                svg = svg::render_coded_orbit(pa.partition, pa.action, parse_point(seed_s), parse_shape(shape_s), palette_seed);
            }
            o.write(svg);
            return 0;
        }
        if (*verify) {
            VerifyOptions opt;
            if (!input.empty()) opt.tiles = io::tiles_from_json(load(input));
            opt.max_shape = parse_shape(max_shape_s);
            opt.radius = radius;
            opt.jobs = jobs;
            auto rep = verify_all(opt);
            json j = report_json(rep);
            if (timing) {
                json t = json::object();
                for (auto& [k, v] : rep.timing) t[k] = v;
                j["timing"] = t;
            }
            if (!out_path.empty()) o.write(j);
            out << rep.summary(timing);
            if (!rep.ok()) {
                err << "verification failed at: " << rep.first_failure << "\n";
                return 2;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace aperiodic::cli
