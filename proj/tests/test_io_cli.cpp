#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "elastica/gallery.hpp"
#include "elastica/io.hpp"

using namespace elastica;
namespace fsys = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    fsys::path out = fsys::temp_directory_path() / "elastica_cli_out.txt";
    std::string cmd =
        env + " " + std::string(ELASTICA_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

fsys::path scratch_dir() {
    fsys::path d = fsys::temp_directory_path() / "elastica_cli_scratch";
    fsys::create_directories(d);
    return d;
}

fsys::path write_circle_json(double radius, int n) {
    json j;
    j["points"] = json::array();
    for (int i = 0; i < n; ++i) {
        double a = 2.0 * kPi * i / n;
        j["points"].push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    j["closed"] = true;
    fsys::path p = scratch_dir() / "circle.json";
    save_json(j, p);
    return p;
}

}  // namespace

TEST_CASE("io: curve JSON round trip, open curves rejected") {
    Curve c = Curve::circle({0.5, -0.25}, 1.25, 128);
    json j = curve_to_json(c);
    Curve back = curve_from_json(j);
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(back.point(i).x == c.point(i).x);
        CHECK(back.point(i).y == c.point(i).y);
    }
    CHECK(back.is_resampled() == c.is_resampled());
    CHECK(back.total_length() == c.total_length());

    j["closed"] = false;
    CHECK_THROWS_AS(curve_from_json(j), ValidationError);
}

TEST_CASE("io: system and family round trips") {
    CurveSystem s = CurveSystem::from_parts(
        {Curve::circle({0, 0}, 1.0, 64), Curve::circle({0, 0}, 2.0, 64)}, {1, 2});
    CurveSystem s2 = system_from_json(system_to_json(s));
    CHECK(s2.size() == 2);
    CHECK(s2.multiplicity(1) == 2);

    LevelFamily f;
    f.thresholds = {0.0, 1.0};
    f.systems = {s, s};
    f.range = {0.0, 2.0};
    LevelFamily f2 = family_from_json(family_to_json(f));
    CHECK(f2.thresholds == f.thresholds);
    CHECK(f2.range == f.range);
    CHECK(f2.systems[0].curve(0).point(7).x == s.curve(0).point(7).x);
}

TEST_CASE("io: grid JSON and PGM round trips") {
    GridFunction g(16, 24, 0.25, {-1.0, 2.0});
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 24; ++j) g.at(i, j) = (i * 24.0 + j) / (16.0 * 24.0);
    GridFunction g2 = grid_from_json(grid_to_json(g));
    CHECK(g2.spacing() == g.spacing());
    CHECK(g2.origin().x == g.origin().x);
    CHECK(g2.value(7, 11) == g.value(7, 11));

    fsys::path p16 = scratch_dir() / "round16.pgm";
    write_pgm(g, p16, 65535, true);
    GridFunction r16 = read_pgm(p16, g.spacing(), g.origin());
    double worst = 0.0;
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 24; ++j)
            worst = std::max(worst, std::abs(r16.value(i, j) - g.value(i, j)));
    CHECK(worst <= 0.5 / 65535.0 + 1e-12);

    fsys::path p2 = scratch_dir() / "round2.pgm";
    write_pgm(g, p2, 255, false);  // ascii P2
    GridFunction r2 = read_pgm(p2, g.spacing());
    CHECK(std::abs(r2.value(7, 11) - g.value(7, 11)) <= 0.5 / 255.0 + 1e-12);
}

TEST_CASE("io: pgm rejects bad headers") {
    fsys::path bad = scratch_dir() / "bad.pgm";
    save_text("P7\n4 4\n255\n", bad);
    CHECK_THROWS_AS(read_pgm(bad), ValidationError);
}

TEST_CASE("cli: energy-curve prints 4pi for the unit circle") {
    fsys::path p = write_circle_json(1.0, 1000);
    RunResult r = run_cli("energy-curve " + p.string() + " --p 2");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(std::stod(r.output) - 4.0 * kPi) < 1e-2);
}

TEST_CASE("cli: validation and computational exit codes") {
    CHECK(run_cli("energy-curve /nonexistent.json").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);

    fsys::path p = write_circle_json(1.0, 1000);
    RunResult sing = run_cli("offset " + p.string() + " --delta -1.0");
    CHECK(sing.exit_code == 3);  // OffsetSingularity

    // degenerate curve JSON
    json j;
    j["points"] = {{0.0, 0.0}, {0.0, 0.0}, {1.0, 1.0}};
    j["closed"] = true;
    fsys::path bad = scratch_dir() / "degenerate.json";
    save_json(j, bad);
    CHECK(run_cli("energy-curve " + bad.string()).exit_code == 3);
}

TEST_CASE("cli: offset subcommand agreement") {
    fsys::path p = write_circle_json(2.0, 2048);
    RunResult r = run_cli("offset " + p.string() + " --delta 0.5 --samples 2048");
    CHECK(r.exit_code == 0);
    double predicted = 0.0, measured = 0.0;
    std::istringstream is(r.output);
    std::string tag;
    is >> tag >> predicted >> tag >> measured;
    CHECK(std::abs(predicted - 2.0 * kPi * 2.5 * 1.16) < 1e-2);
    CHECK(std::abs(predicted - measured) / predicted < 0.01);
}

TEST_CASE("cli: savare report and determinism") {
    RunResult a = run_cli("savare --n 3");
    RunResult b = run_cli("savare --n 3");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("energy 1 < 1.5") != std::string::npos);
}

TEST_CASE("cli: energy-image identical across thread counts") {
    // small smooth bump grid
    GridFunction g(96, 96, 6.0 / 95.0, {-3, -3});
    for (int i = 0; i < 96; ++i)
        for (int j = 0; j < 96; ++j) {
            Vec2 p = g.point_at(i, j);
            double r = std::hypot(p.x, p.y);
            g.at(i, j) = std::exp(-r * r);
        }
    fsys::path p = scratch_dir() / "bump.json";
    save_json(grid_to_json(g), p);
    RunResult t1 = run_cli("energy-image " + p.string() + " --levels 32 --threads 1");
    RunResult t4 = run_cli("energy-image " + p.string() + " --levels 32 --threads 4");
    CHECK(t1.exit_code == 0);
    CHECK(t1.output == t4.output);
}

TEST_CASE("cli: gallery fixtures drive check-family and compare") {
    fsys::path dir = scratch_dir() / "fixtures";
    RunResult g = run_cli("gallery fig5", "ELASTICA_FIXTURES=" + dir.string());
    REQUIRE(g.exit_code == 0);
    CHECK(g.output.find("condition_iii fail") != std::string::npos);

    std::string fam1 = (dir / "fig5_gamma1_gamma2.json").string();
    std::string fam3 = (dir / "fig5_gamma3_gamma2.json").string();
    std::string fam4 = (dir / "fig5_gamma4_gamma2.json").string();
    std::string img = (dir / "figEF.pgm").string();

    RunResult bad = run_cli("check-family " + fam1 + " " + img + " --dist-tol 0.006");
    CHECK(bad.exit_code == 0);
    CHECK(bad.output.find("not_member") != std::string::npos);
    CHECK(bad.output.find("condition_iii fail") != std::string::npos);
    CHECK(bad.output.find("condition_i pass") != std::string::npos);

    RunResult g4 = run_cli("check-family " + fam4 + " " + img + " --dist-tol 0.006");
    CHECK(g4.exit_code == 0);
    CHECK(g4.output.find("condition_ii fail") != std::string::npos);

    RunResult good = run_cli("check-family " + fam3 + " " + img + " --dist-tol 0.006");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("member") == 0);

    RunResult cmp =
        run_cli("compare " + fam1 + " " + fam3 + " " + img + " --dist-tol 0.006");
    CHECK(cmp.exit_code == 0);
    CHECK(cmp.output.find("best 1") != std::string::npos);
}
