#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rabi/config.hpp"
#include "rabi/output.hpp"
#include "rabi/presets.hpp"

#include "support.hpp"

using namespace rabi;
using Catch::Approx;

TEST_CASE("config round trip with preset and override", "[cli]") {
    RunConfig cfg = parse_config("model=effective\npreset=IIa\nkappa=0.01\nt_max=4\n");
    CHECK(cfg.model == ModelKind::effective);
    REQUIRE(cfg.preset.has_value());
    CHECK(*cfg.preset == "IIa");
    REQUIRE(cfg.kappa.has_value());
    CHECK(*cfg.kappa == 0.01);
    CHECK(cfg.t_max == 4.0);
    PhysicalParams p = resolve_physical(cfg);
    CHECK(p.Omega1 == Approx(find_preset("IIa").phys.Omega1));
    CHECK(p.kappa == 0.01);
}

TEST_CASE("full-model config matches the comparison scenario", "[cli]") {
    RunConfig cfg = parse_config("model=full\npreset=Ia\nn_max=8\nt_max=2\n");
    CHECK(cfg.model == ModelKind::full);
    REQUIRE(cfg.n_max.has_value());
    CHECK(*cfg.n_max == 8);
    CHECK(cfg.t_max == 2.0);
}

TEST_CASE("empty and malformed configs fail closed", "[cli]") {
    try {
        parse_config("");
        FAIL("expected a parse error");
    } catch (const ConfigParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("missing required keys") != std::string::npos);
        CHECK(msg.find("model") != std::string::npos);
    }

    REQUIRE_THROWS_AS(parse_config("model=effective\npreset=Ia\nfrobnicate=1\n"),
                      ConfigParseError);
    REQUIRE_THROWS_AS(parse_config("model=warp\npreset=Ia\n"), ConfigParseError);
    REQUIRE_THROWS_AS(parse_config("model=effective\npreset=Ia\nkappa=fast\n"),
                      ConfigParseError);
    REQUIRE_THROWS_AS(parse_config("model=effective\npreset=Ia\nkappa=0.1\nkappa=0.2\n"),
                      ConfigParseError);
    REQUIRE_THROWS_AS(parse_config("model=effective\npreset=Ia\nn_max=1\n"),
                      ConfigParseError);

    try {
        parse_config("model=effective\npreset=Ia\n\nbogus line\n");
        FAIL("expected a parse error");
    } catch (const ConfigParseError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("comments and observable lists parse", "[cli]") {
    RunConfig cfg = parse_config(
        "# scenario\nmodel=effective\npreset=IIIa  # deep strong\n"
        "observables=survival,n,logneg\nsvg=true\nout=run.csv\n");
    REQUIRE(cfg.observables.size() == 3);
    CHECK(cfg.observables[2] == "logneg");
    CHECK(cfg.svg);
    CHECK(cfg.out == "run.csv");
    REQUIRE_THROWS_AS(
        parse_config("model=effective\npreset=Ia\nobservables=n,entropy\n"),
        ConfigParseError);
}

TEST_CASE("csv emission round-trips at 12 significant digits", "[cli]") {
    Table t;
    t.columns = {"t_us", "n", "sz"};
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 40; ++i)
        t.rows.push_back({u(test::rng()), u(test::rng()) * 1e-7, u(test::rng()) * 1e5});
    std::stringstream ss;
    write_csv(ss, t);
    Table back = read_csv(ss);
    REQUIRE(back.columns == t.columns);
    REQUIRE(back.rows.size() == t.rows.size());
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (size_t j = 0; j < 3; ++j) {
            // parsing the emitted text and re-emitting reproduces it bit-for-bit
            CHECK(format_sig(back.rows[i][j]) == format_sig(t.rows[i][j]));
            CHECK(std::abs(back.rows[i][j] - t.rows[i][j]) <=
                  1e-11 * std::abs(t.rows[i][j]));
        }
}

TEST_CASE("svg plot writer emits a well-formed file", "[cli]") {
    Table t;
    t.columns = {"t_us", "n"};
    for (int i = 0; i <= 50; ++i)
        t.rows.push_back({i * 0.1, std::sin(i * 0.2) * std::sin(i * 0.2) * 4.0});
    const auto path = std::filesystem::temp_directory_path() / "rabisim_test_plot.svg";
    write_svg_plot(path.string(), t, 1);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string svg = ss.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("t_us") != std::string::npos);
    std::filesystem::remove(path);
}
