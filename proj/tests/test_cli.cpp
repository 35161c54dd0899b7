#include "cli.hpp"

#include "aperiodic/json_io.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace aperiodic;
using io::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "aperiodic-kit");
    std::ostringstream out, err;
    int c = cli::run(args, out, err);
    return {c, out.str(), err.str()};
}

std::string data_file(const std::string& name) { return std::string(APERIODIC_DATA_DIR) + "/" + name; }

std::string tmp_path(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "aperiodic_kit_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string write_tmp(const std::string& name, const std::string& content) {
    std::string p = tmp_path(name);
    std::ofstream(p) << content;
    return p;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

// shoelace area of every <polygon> in the document
double polygon_area_sum(const std::string& svg) {
    std::regex poly("<polygon points=\"([^\"]*)\"");
    double total = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly); it != std::sregex_iterator(); ++it) {
        std::vector<std::pair<double, double>> pts;
        std::stringstream ss((*it)[1].str());
        std::string tok;
        while (ss >> tok) {
            auto c = tok.find(',');
            pts.push_back({std::stod(tok.substr(0, c)), std::stod(tok.substr(c + 1))});
        }
        double a = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto [x0, y0] = pts[i];
            auto [x1, y1] = pts[(i + 1) % pts.size()];
            a += x0 * y1 - x1 * y0;
        }
        total += std::abs(a) / 2;
    }
    return total;
}

}  // namespace

TEST(Cli, DataFilesMatchBuiltins) {
    auto T = io::tiles_from_json(json::parse(slurp(data_file("u_tiles.json"))));
    EXPECT_EQ(T, testing_support::U());
    auto m = io::morphism_from_json(json::parse(slurp(data_file("phi.json"))));
    EXPECT_EQ(m, testing_support::Phi());
    EXPECT_EQ(io::to_json(m).dump(), json::parse(slurp(data_file("phi.json"))).dump());
}

TEST(Cli, Markers) {
    auto r = run({"markers", data_file("u_tiles.json"), "--axis", "2", "--radius", "2"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["markers"], json::parse("[[0,1,2,3,4,5,6,7]]"));
    // at radius 0 every domino is admissible and no class avoids itself
    auto z = run({"markers", "builtin:U", "--axis", "2", "--radius", "0"});
    auto rep = find_markers(testing_support::U(), 2, 0);
    EXPECT_EQ(z.code, rep.marker_subsets.empty() ? 2 : 0);
    if (z.code == 2) EXPECT_NE(z.err.find("try increasing the radius"), std::string::npos);
    auto missing = run({"markers", "/nonexistent/tiles.json"});
    EXPECT_EQ(missing.code, 1);
    EXPECT_EQ(run({"markers", "builtin:U", "--axis", "3"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, MalformedInput) {
    auto bad = write_tmp("bad.json", "{\"tiles\": [[\"A\", \"B\"]]}");
    EXPECT_EQ(run({"markers", bad}).code, 1);
    auto junk = write_tmp("junk.json", "not json");
    EXPECT_EQ(run({"solve", junk}).code, 1);
}

TEST(Cli, DesubAndEquiv) {
    std::string v = tmp_path("v.json");
    auto r = run({"desub", "builtin:U", "--axis", "2", "--radius", "2", "--markers", "0,1,2,3,4,5,6,7", "--out", v});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(slurp(v));
    EXPECT_EQ(j["tiles"].size(), 21u);
    EXPECT_EQ(j["morphism"]["domain"], 21);
    std::string w = tmp_path("w.json");
    auto r2 = run({"desub", v, "--axis", "1", "--radius", "1", "--out", w});
    ASSERT_EQ(r2.code, 0) << r2.err;
    EXPECT_EQ(json::parse(slurp(w))["tiles"].size(), 19u);
    auto e = run({"equiv", "builtin:U", w});
    ASSERT_EQ(e.code, 0) << e.err;
    auto c = json::parse(e.out);
    EXPECT_EQ(c["vert"]["A"], "IJ");
    EXPECT_EQ(c["horiz"]["P"], "KO");
    EXPECT_EQ(run({"equiv", "builtin:U", v}).code, 2);
}

TEST(Cli, SolveAndLanguages) {
    auto s = run({"solve", "builtin:U", "--shape", "7x7"});
    ASSERT_EQ(s.code, 0) << s.err;
    auto j = json::parse(s.out);
    Word2d w = io::word_from_json(j["tiling"]);
    EXPECT_EQ(w.shape(), (Shape{7, 7}));
    EXPECT_TRUE(is_valid_pattern(testing_support::U(), w));
    auto b = run({"solve", "builtin:U", "--shape", "7x7", "--backend", "backtracking"});
    EXPECT_EQ(json::parse(b.out)["tiling"], j["tiling"]);
    for (auto in : {"builtin:phi", "builtin:U", "builtin:PU"}) {
        auto l = run({"lang", in, "--shape", "2x2"});
        ASSERT_EQ(l.code, 0) << in << l.err;
        EXPECT_EQ(json::parse(l.out)["size"], 50) << in;
    }
    EXPECT_EQ(json::parse(run({"lang", data_file("phi.json"), "--shape", "2x1"}).out)["size"], 31);
    EXPECT_EQ(run({"solve", "builtin:U", "--shape", "seven"}).code, 1);
}

TEST(Cli, InduceAndConfig) {
    std::string p1 = tmp_path("p1.json");
    auto r = run({"induce", "builtin:PU", "--axis", "2", "--bound", "-1+1*phi", "--out", p1});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(slurp(p1));
    EXPECT_EQ(j["partition"]["atoms"].size(), 21u);
    EXPECT_EQ(j["morphism"]["domain"], 21);
    std::string p1p = write_tmp("p1p.json", j["partition"].dump());
    auto r2 = run({"induce", p1p, "--axis", "1", "--bound", "-1+1*phi"});
    ASSERT_EQ(r2.code, 0) << r2.err;
    EXPECT_EQ(json::parse(r2.out)["partition"]["atoms"].size(), 19u);
    auto c = run({"config", "builtin:PU", "--seed-point", "1357/10000,2938/10000", "--shape", "6x8"});
    ASSERT_EQ(c.code, 0) << c.err;
    Word2d w = io::word_from_json(json::parse(c.out)["word"]);
    EXPECT_EQ(w, config_patch(testing_support::PU().partition, testing_support::PU().action,
                              {testing_support::rat(1357, 10000), testing_support::rat(2938, 10000)}, {6, 8}));
    EXPECT_EQ(run({"config", "builtin:PU", "--seed-point", "1/2,1/2"}).code, 1);
}

TEST(Cli, RenderTiles) {
    auto r = run({"render", "builtin:U"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
    EXPECT_EQ(count(r.out, "<polygon"), 19u * 4u);
    EXPECT_EQ(count(r.out, "<text"), 19u * 4u + 19u);
    EXPECT_NE(r.out.find("</svg>"), std::string::npos);
}

TEST(Cli, RenderPartition) {
    auto r = run({"render", "builtin:PU", "--target", "partition"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count(r.out, "<text"), 19u);
    EXPECT_GE(count(r.out, "<polygon"), 19u);
    EXPECT_NEAR(polygon_area_sum(r.out), 500.0 * 500.0, 5.0);
    auto o = run({"render", "builtin:PU", "--seed-point", "1357/10000,2938/10000", "--shape", "6x8"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(count(o.out, "<circle"), 48u);
}

TEST(Cli, RenderEmptyTiling) {
    auto empty = write_tmp("empty_tiling.json", "{\"tiles\": [\"FOJO\"], \"tiling\": []}");
    auto r = run({"render", empty});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
    EXPECT_NE(r.out.find("</svg>"), std::string::npos);
    EXPECT_EQ(count(r.out, "<polygon"), 0u);
    auto broken = write_tmp("broken_tiling.json", "{\"tiles\": [\"FOJO\"], \"tiling\": [[3]]}");
    EXPECT_EQ(run({"render", broken}).code, 1);
}

TEST(Cli, Deterministic) {
    for (std::vector<std::string> a : {std::vector<std::string>{"render", "builtin:PU", "--palette-seed", "7"},
                                       std::vector<std::string>{"render", "builtin:U"},
                                       std::vector<std::string>{"lang", "builtin:PU", "--shape", "2x2"},
                                       std::vector<std::string>{"solve", "builtin:U", "--shape", "5x5"}}) {
        EXPECT_EQ(run(a).out, run(a).out);
    }
    EXPECT_NE(run({"render", "builtin:U", "--palette-seed", "3"}).out, run({"render", "builtin:U"}).out);
}

TEST(Cli, VerifyAll) {
    std::string rep = tmp_path("report.json");
    auto r = run({"verify-all", "--out", rep});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    auto j = json::parse(slurp(rep));
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_TRUE(j["wang"]["composite_equals_phi"].get<bool>());
    EXPECT_TRUE(j["pet"]["composite_equals_phi"].get<bool>());
    EXPECT_FALSE(j.contains("timing"));
    EXPECT_NE(r.out.find("ok   wang: composite equals phi"), std::string::npos);
    EXPECT_NE(r.out.find("ok   pet: composite equals phi"), std::string::npos);
    auto big = run({"verify-all", "--max-shape", "3x3", "--out", rep, "--timing"});
    EXPECT_EQ(big.code, 0) << big.out << big.err;
    auto jb = json::parse(slurp(rep));
    EXPECT_EQ(jb["languages"].size(), 9u);
    EXPECT_TRUE(jb.contains("timing"));
}

TEST(Cli, VerifyAllCorruptedTile) {
    auto tiles = json::parse(slurp(data_file("u_tiles.json")));
    tiles["tiles"][5][1] = "Z";
    auto path = write_tmp("corrupt.json", tiles.dump());
    auto r = run({"verify-all", "--tiles", path});
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.err.find("verification failed at: wang"), std::string::npos) << r.err;
}
