#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "infobridge/errors.hpp"
#include "infobridge/run_config.hpp"

using namespace infobridge;

TEST_CASE("full config parses") {
    const auto cfg = parse_config_text(R"(
# comment
law { kind = "exponential", rate = 2.0 }
grid { t_max = 3.0, dt = 0.02 }
contract {
  maturity = 1.5
  kappa = 0.4
  recovery = [0:1.0, 1.5:0.6]
  discount_rate = 0.01
}
mc { n_paths = 5000, bin_width = 0.02 }
seed = 42
out_dir = "results"
)");
    CHECK(cfg.law.kind() == DefaultLaw::Kind::Exponential);
    CHECK(cfg.law.survival(1.0) == doctest::Approx(std::exp(-2.0)));
    CHECK(cfg.grid_t_max == 3.0);
    CHECK(cfg.grid_dt == 0.02);
    CHECK(cfg.contract.maturity == 1.5);
    CHECK(cfg.contract.kappa == 0.4);
    CHECK(cfg.contract.recovery(0.75) == doctest::Approx(0.8));
    CHECK(cfg.contract.discount_rate == 0.01);
    CHECK(cfg.mc_n_paths == 5000);
    CHECK(cfg.mc_bin_width == 0.02);
    CHECK(cfg.seed == 42);
    CHECK(cfg.out_dir == "results");
}

TEST_CASE("defaults apply when blocks are omitted") {
    const auto cfg = parse_config_text("law { kind = \"exponential\", rate = 1.0 }\n");
    CHECK(cfg.grid_dt == 0.01);
    CHECK(cfg.mc_n_paths == 100000);
    CHECK(cfg.seed == 0);
}

TEST_CASE("all law kinds parse") {
    CHECK(parse_config_text(R"(law { kind = "uniform", a = 0.5, b = 1.5 })").law.kind() ==
          DefaultLaw::Kind::UniformInterval);
    CHECK(parse_config_text(R"(law { kind = "weibull", shape = 2.0, scale = 1.0 })")
              .law.kind() == DefaultLaw::Kind::Weibull);
    const auto atoms =
        parse_config_text(R"(law { kind = "atoms", points = [1.0:0.5, 2.0:0.5] })").law;
    CHECK(atoms.kind() == DefaultLaw::Kind::DiscreteAtoms);
    CHECK(atoms.atoms().size() == 2);
    const auto pw = parse_config_text(
        R"(law { kind = "piecewise", knots = [0.5:0.0, 1.0:0.25, 1.0:0.55, 3.0:1.0] })").law;
    CHECK(pw.kind() == DefaultLaw::Kind::PiecewiseEmpirical);
}

TEST_CASE("errors carry line numbers") {
    try {
        parse_config_text("law { kind = \"exponential\", rate = 1.0 }\n"
                          "grid { t_max = 2.0, dx = 0.01 }\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("unknown key 'dx'") != std::string::npos);
    }

    try {
        parse_config_text("law { kind = \"exponential\", rate = 1.0 }\n\n\nbogus = 1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_config_text("law { kind = \"lognormal\", mu = 0.0 }"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("weird { a = 1 }"), ConfigError);
    CHECK_THROWS_AS(
        parse_config_text("law { kind = \"exponential\", rate = 1.0 }\ngrid { dt = 0.0 }"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text("law { kind = \"exponential\", rate = 1.0 }\ngrid { dt = -0.5 }"),
        ConfigError);
    CHECK_THROWS_AS(parse_config_text("law { kind = \"exponential\", rate = -2 }"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("seed = -5"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("seed = 1.5"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("law { kind = \"exponential\", rate = 1.0, rate = 2.0 }"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text("law { kind = \"exponential\" rate = 1..0 }"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text("out_dir = \"unterminated"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("law { kind = \"exponential\", rate = 1.0"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("mc { n_paths = [1, 2:3] }"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("mc { n_paths = 0 }"), ConfigError);
    CHECK_THROWS_AS(parse_config_file("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("scalar recovery shorthand") {
    const auto cfg = parse_config_text(
        "law { kind = \"exponential\", rate = 1.0 }\ncontract { maturity = 1.0, recovery = 0.8 }");
    CHECK(cfg.contract.recovery(0.3) == doctest::Approx(0.8));
}
