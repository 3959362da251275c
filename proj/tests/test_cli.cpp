#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "vortexab/cli.hpp"
#include "vortexab/errors.hpp"

using namespace vortexab;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

// Scratch directory for artifact tests; recreated fresh per use.
fs::path scratch(const std::string& leaf) {
    const fs::path p = fs::temp_directory_path() / "vortexab_test_cli" / leaf;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split_lines(const std::string& body) {
    std::vector<std::string> out;
    std::istringstream in(body);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<double> split_row(const std::string& line) {
    std::vector<double> out;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) out.push_back(std::strtod(cell.c_str(), nullptr));
    return out;
}

cli::RunConfig dimless(double alpha, double beta, double delta) {
    cli::RunConfig c;
    c.alpha = alpha;
    c.beta = beta;
    c.delta = delta;
    return c;
}

} // namespace

TEST_CASE("config text parses into a validated run description") {
    const auto cfg = cli::parse_config("# density plot setup\n"
                                       "alpha = 0.5\n"
                                       "beta = 5\n"
                                       "delta = 8   # capillary side\n"
                                       "resolution=128\n"
                                       "\n"
                                       "label = demo\n");
    CHECK(cfg.dimensionless());
    CHECK(*cfg.alpha == 0.5);
    CHECK(*cfg.beta == 5.0);
    CHECK(*cfg.delta == 8.0);
    CHECK(cfg.resolution == 128);
    CHECK(cfg.label == "demo");
    CHECK(cfg.half_width == 5.0);
    CHECK_FALSE(cfg.circulation.has_value());

    SUBCASE("minimal water text derives the thin-layer classification") {
        const auto water = cli::parse_config("wavelength = 2\ncirculation = 15.14\n");
        CHECK_FALSE(water.dimensionless());
        const auto rr = cli::resolve(water);
        CHECK(rr.physical);
        CHECK(rr.groups.delta == doctest::Approx(1.405).epsilon(5e-3));
        CHECK(rr.groups.beta == doctest::Approx(kPi).epsilon(1e-12));
    }

    SUBCASE("syntax errors carry the line number") {
        const struct {
            const char* text;
            const char* needle;
        } cases[] = {
            {"alpha = 0.5\nbeta = 5\nwibble = 1\n", "line 3"},
            {"alpha = zero\n", "line 1"},
            {"alpha = 1\nalpha = 2\n", "line 2"},
            {"alpha\n", "line 1"},
            {"alpha =\n", "line 1"},
            {"resolution = 3.5\n", "line 1"},
        };
        for (const auto& c : cases) {
            CAPTURE(c.text);
            try {
                cli::parse_config(c.text);
                FAIL("expected ParseError");
            } catch (const ParseError& e) {
                CHECK(std::string(e.what()).find(c.needle) != std::string::npos);
                CHECK(e.category() == "E_CONFIG_PARSE");
            }
        }
    }

    SUBCASE("structural violations are constraint errors") {
        CHECK_THROWS_AS(cli::parse_config("wavelength = 2\ncirculation = 1\nalpha = 1\n"),
                        ConstraintError);
        CHECK_THROWS_AS(cli::parse_config("wavelength = 2\n"), ConstraintError);
        CHECK_THROWS_AS(cli::parse_config("wavelength = 2\ncirculation = 1\ndepth = -0.5\n"),
                        ConstraintError);
        CHECK_THROWS_AS(cli::parse_config("alpha = 1\nbeta = 5\n"), ConstraintError);
        CHECK_THROWS_AS(cli::parse_config("alpha = 1\nbeta = 5\ndelta = 8\ndepth = 0.2\n"),
                        ConstraintError);
        CHECK_THROWS_AS(
            cli::parse_config("wavelength = 2\nwavenumber = 3\ncirculation = 1\n"),
            ConstraintError);
        CHECK_THROWS_AS(
            cli::parse_config("alpha = 1\nbeta = 5\ndelta = 8\nresolution = 0\n"),
            ConstraintError);
        CHECK_THROWS_AS(
            cli::parse_config("alpha = 1\nbeta = 5\ndelta = 8\nn_core = -2\n"),
            ConstraintError);
    }
}

TEST_CASE("figure presets reproduce the published parameter sets") {
    const auto fig7d = cli::figure_preset("fig7d");
    REQUIRE(fig7d.size() == 1);
    CHECK(*fig7d[0].delta == -8.0);
    CHECK(*fig7d[0].beta == 5.0);
    CHECK(*fig7d[0].alpha == 2.0);
    CHECK(fig7d[0].half_width == 5.0);
    CHECK(fig7d[0].label == "fig7d");

    const auto fig5 = cli::figure_preset("fig5");
    REQUIRE(fig5.size() == 4);
    const double expected_alpha[4] = {0.5, 1.0, 1.5, 2.0};
    const char* expected_label[4] = {"fig5a", "fig5b", "fig5c", "fig5d"};
    for (int i = 0; i < 4; ++i) {
        CHECK(*fig5[i].alpha == expected_alpha[i]);
        CHECK(*fig5[i].delta == 8.0);
        CHECK(*fig5[i].beta == 5.0);
        CHECK(fig5[i].label == expected_label[i]);
    }

    const auto fig6b = cli::figure_preset("fig6b");
    REQUIRE(fig6b.size() == 1);
    CHECK(*fig6b[0].beta == 10.0);
    CHECK(*fig6b[0].delta == 8.0);
    CHECK(*fig6b[0].alpha == 1.0);

    const auto fig9 = cli::figure_preset("fig9");
    const auto fig10 = cli::figure_preset("fig10");
    REQUIRE(fig9.size() == 4);
    REQUIRE(fig10.size() == 4);
    const double polar_alpha[4] = {0.25, 0.5, 1.0, 1.25};
    for (int i = 0; i < 4; ++i) {
        CHECK(*fig9[i].alpha == polar_alpha[i]);
        CHECK(*fig9[i].delta == 8.0);
        CHECK(*fig10[i].alpha == polar_alpha[i]);
        CHECK(*fig10[i].delta == -8.0);
        CHECK(*fig9[i].beta == 5.0);
        CHECK(*fig10[i].beta == 5.0);
    }

    const auto fig11a = cli::figure_preset("fig11a");
    REQUIRE(fig11a.size() == 1);
    CHECK(fig11a[0].dimensionless());
    CHECK(*fig11a[0].beta == doctest::Approx(kPi));
    CHECK(*fig11a[0].alpha == 1.0);
    CHECK(*fig11a[0].delta > 100.0);  // stands in for the depth-independent limit
    CHECK(fig11a[0].half_width == 10.0);

    const auto fig11b = cli::figure_preset("fig11b");
    REQUIRE(fig11b.size() == 1);
    CHECK_FALSE(fig11b[0].dimensionless());
    CHECK(*fig11b[0].wavelength == 2.0);
    CHECK(fig11b[0].layer.h == 0.1);
    CHECK(fig11b[0].half_width == 10.0);
    CHECK(*fig11b[0].circulation == doctest::Approx(15.141318021136589).epsilon(1e-12));
    const auto rr = cli::resolve(fig11b[0]);
    CHECK(rr.groups.alpha == doctest::Approx(0.41267831261415627).epsilon(1e-10));
    CHECK(rr.groups.delta == doctest::Approx(1.4052888612064665).epsilon(1e-10));
    CHECK(rr.groups.c_phi == doctest::Approx(12.957920818129159).epsilon(1e-10));
    CHECK(rr.groups.c_g == doctest::Approx(18.345182625690022).epsilon(1e-10));

    const auto table1 = cli::figure_preset("table1");
    REQUIRE(table1.size() == 4);
    const double lambdas[4] = {0.1, 0.5, 1.0, 2.0};
    for (int i = 0; i < 4; ++i) {
        CHECK(*table1[i].wavelength == lambdas[i]);
        CHECK(*table1[i].alpha == 0.0);
    }

    CHECK_THROWS_AS(cli::figure_preset("fig12"), UnknownPreset);
    CHECK_THROWS_AS(cli::figure_preset("fig5e"), UnknownPreset);
    CHECK_THROWS_AS(cli::figure_preset(""), UnknownPreset);
}

TEST_CASE("resolve derives the dimensionless groups") {
    const auto rr = cli::resolve(dimless(1.0, 5.0, 8.0));
    CHECK_FALSE(rr.physical);
    CHECK(rr.groups.c_phi == doctest::Approx(std::sqrt(9.0 / 8.0)).epsilon(1e-14));
    CHECK(rr.groups.c_g ==
          doctest::Approx((10.0 / 8.0) / std::sqrt(9.0 / 8.0)).epsilon(1e-14));
    CHECK(rr.groups.mach ==
          doctest::Approx(rr.groups.c_g / (5.0 * rr.groups.c_phi)).epsilon(1e-14));
    CHECK(rr.truncation.n_core == 30);
    CHECK(rr.truncation.n_ab == 90);

    auto with_override = dimless(1.0, 5.0, 8.0);
    with_override.n_core = 12;
    CHECK(cli::resolve(with_override).truncation.n_core == 12);

    CHECK_THROWS_AS(cli::resolve(dimless(1.0, 5.0, -0.5)), NonPropagating);
}

TEST_CASE("field run writes deterministic well-formed artifacts") {
    auto cfg = dimless(0.5, 5.0, 8.0);
    cfg.resolution = 32;
    cfg.label = "panel";
    const fs::path dir_a = scratch("a");
    const fs::path dir_b = scratch("b");

    cfg.out_dir = dir_a.string();
    REQUIRE(cli::run("field", {cfg}) == 0);
    cfg.out_dir = dir_b.string();
    REQUIRE(cli::run("field", {cfg}) == 0);

    const std::string pgm = slurp(dir_a / "panel_field.pgm");
    const std::string csv = slurp(dir_a / "panel_field.csv");

    SUBCASE("PGM is a complete 8-bit P5 raster") {
        const std::string header = "P5\n32 32\n255\n";
        REQUIRE(pgm.size() == header.size() + 32u * 32u);
        CHECK(pgm.compare(0, header.size(), header) == 0);
        // the ring of cells straddling r' = 1 is painted black
        int zeros = 0;
        for (std::size_t i = header.size(); i < pgm.size(); ++i)
            if (static_cast<unsigned char>(pgm[i]) == 0) ++zeros;
        CHECK(zeros >= 8);
    }

    SUBCASE("CSV carries one unquantized sample per cell") {
        const auto lines = split_lines(csv);
        REQUIRE(lines.size() == 1u + 32u * 32u);
        CHECK(lines[0] == "x_over_a,y_over_a,eta");
        // first data row is the top-left cell center
        const auto row = split_row(lines[1]);
        REQUIRE(row.size() == 3);
        const double scale = 5.0 / 32.0;
        CHECK(row[0] == doctest::Approx((1 - 32) * scale).epsilon(1e-15));
        CHECK(row[1] == doctest::Approx((31) * scale).epsilon(1e-15));
        CHECK(std::isfinite(row[2]));
    }

    SUBCASE("identical configurations give byte-identical outputs") {
        CHECK(slurp(dir_b / "panel_field.pgm") == pgm);
        CHECK(slurp(dir_b / "panel_field.csv") == csv);
    }

    SUBCASE("the manifest's echoed block reproduces the run byte-identically") {
        const std::string manifest = slurp(dir_a / "panel_manifest.txt");
        auto replay = cli::parse_config(manifest);
        const fs::path dir_c = scratch("c");
        replay.out_dir = dir_c.string();
        REQUIRE(cli::run("field", {replay}) == 0);
        CHECK(slurp(dir_c / "panel_field.pgm") == pgm);
        CHECK(slurp(dir_c / "panel_field.csv") == csv);
    }
}

TEST_CASE("curve subcommands write the documented columns") {
    SUBCASE("farfield with no circulation is numerically dark") {
        auto cfg = dimless(0.0, 5.0, 8.0);
        cfg.samples = 64;
        cfg.label = "quiet";
        const fs::path dir = scratch("far0");
        cfg.out_dir = dir.string();
        REQUIRE(cli::run("farfield", {cfg}) == 0);
        const auto lines = split_lines(slurp(dir / "quiet_farfield.csv"));
        REQUIRE(lines.size() == 65);
        CHECK(lines[0] == "theta_rad,f_abs,f_arg_rad");
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto row = split_row(lines[i]);
            REQUIRE(row.size() == 3);
            CHECK(row[1] < 1e-8);
        }
    }

    SUBCASE("coefficient table exposes the forward/backward asymmetry") {
        auto cfg = dimless(0.5, 5.0, 8.0);
        cfg.label = "spec";
        const fs::path dir = scratch("coef");
        cfg.out_dir = dir.string();
        REQUIRE(cli::run("coefficients", {cfg}) == 0);
        const auto lines = split_lines(slurp(dir / "spec_coefficients.csv"));
        REQUIRE(lines.size() == 1u + 61u);  // n in [-30, 30]
        CHECK(lines[0] ==
              "n,a_abs,b_abs,c_abs,d_abs,e_abs,"
              "a_log10,b_log10,c_log10,d_log10,e_log10,condition_number");
        double a_abs[61];
        for (int i = 0; i < 61; ++i) {
            const auto row = split_row(lines[1 + i]);
            REQUIRE(row.size() == 12);
            CHECK(row[0] == doctest::Approx(i - 30.0));
            a_abs[i] = row[1];
            // log10 column is consistent with the raw magnitude
            if (row[1] > 0.0)
                CHECK(row[6] == doctest::Approx(std::log10(row[1])).epsilon(1e-12));
        }
        double worst = 0.0;
        for (int n = 1; n <= 5; ++n) {
            const double plus = a_abs[30 + n], minus = a_abs[30 - n];
            worst = std::max(worst, std::abs(plus - minus) / plus);
        }
        CHECK(worst > 0.1);
    }

    SUBCASE("dispersion emits both models and rejects dimensionless runs") {
        const auto fig11b = cli::figure_preset("fig11b");
        auto cfg = fig11b[0];
        const fs::path dir = scratch("disp");
        cfg.out_dir = dir.string();
        REQUIRE(cli::run("dispersion", {cfg}) == 0);
        const auto lines = split_lines(slurp(dir / "fig11b_dispersion.csv"));
        REQUIRE(lines.size() == 2);
        CHECK(lines[0] ==
              "k_per_cm,nu_full_rad_per_s,nu_cubic_rad_per_s,c_phi_cm_per_s,"
              "c_g_cm_per_s,delta");
        const auto row = split_row(lines[1]);
        REQUIRE(row.size() == 6);
        CHECK(row[0] == doctest::Approx(kPi).epsilon(1e-12));
        CHECK(row[2] == doctest::Approx(40.708508848032807).epsilon(1e-12));
        CHECK(row[5] == doctest::Approx(1.4052888612064665).epsilon(1e-12));

        CHECK_THROWS_AS(cli::run("dispersion", {dimless(1.0, 5.0, 8.0)}), ConstraintError);
    }

    SUBCASE("validate writes only the manifest") {
        auto cfg = dimless(1.0, 5.0, 8.0);
        cfg.label = "check";
        const fs::path dir = scratch("val");
        cfg.out_dir = dir.string();
        REQUIRE(cli::run("validate", {cfg}) == 0);
        int files = 0;
        for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
        CHECK(files == 1);
        CHECK(fs::exists(dir / "check_manifest.txt"));
    }

    SUBCASE("unknown subcommand and empty config list are usage errors") {
        CHECK_THROWS_AS(cli::run("render", {dimless(1.0, 5.0, 8.0)}), ConstraintError);
        CHECK_THROWS_AS(cli::run("field", {}), ConstraintError);
    }
}

TEST_CASE("sweep fans out one artifact set per parameter tuple") {
    auto configs = cli::figure_preset("fig9");
    const fs::path dir = scratch("sweep");
    for (auto& c : configs) {
        c.out_dir = dir.string();
        c.resolution = 24;
        c.samples = 16;
    }
    REQUIRE(cli::run("sweep", configs) == 0);
    for (const char* label : {"fig9a", "fig9b", "fig9c", "fig9d"}) {
        CHECK(fs::exists(dir / (std::string(label) + "_coefficients.csv")));
        CHECK(fs::exists(dir / (std::string(label) + "_field.pgm")));
        CHECK(fs::exists(dir / (std::string(label) + "_field.csv")));
        CHECK(fs::exists(dir / (std::string(label) + "_farfield.csv")));
        CHECK(fs::exists(dir / (std::string(label) + "_manifest.txt")));
    }
}

TEST_CASE("argv front end maps errors to exit codes") {
    const fs::path dir = scratch("argv");
    std::string out_arg = dir.string();
    {
        std::vector<std::string> args = {"vortexab",  "field", "--preset", "fig5a",
                                         "--out",     out_arg, "--resolution", "16"};
        std::vector<char*> argv;
        for (auto& a : args) argv.push_back(a.data());
        CHECK(cli::run_main(static_cast<int>(argv.size()), argv.data()) == 0);
        CHECK(fs::exists(dir / "fig5a_field.pgm"));
    }
    {
        std::vector<std::string> args = {"vortexab", "field"};
        std::vector<char*> argv;
        for (auto& a : args) argv.push_back(a.data());
        CHECK(cli::run_main(static_cast<int>(argv.size()), argv.data()) != 0);
    }
    {
        std::vector<std::string> args = {"vortexab", "field", "--preset", "doesnotexist"};
        std::vector<char*> argv;
        for (auto& a : args) argv.push_back(a.data());
        CHECK(cli::run_main(static_cast<int>(argv.size()), argv.data()) != 0);
    }
}
