#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nuosc/app/commands.hpp"
#include "nuosc/app/config.hpp"
#include "nuosc/app/format.hpp"
#include "nuosc/app/golden.hpp"
#include "nuosc/errors.hpp"

using namespace nuosc;
using namespace nuosc::app;

namespace {

std::vector<std::string> lines_of(std::string const& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(line);
    }
    return out;
}

std::filesystem::path scratch(std::string const& name)
{
    auto const dir = std::filesystem::temp_directory_path() / "nuosc_unit";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("format_sig6")
{
    CHECK(format_sig6(6.905723) == "6.90572");
    CHECK(format_sig6(102.6749) == "102.675");
    CHECK(format_sig6(0.3956224) == "0.395622");
    CHECK(format_sig6(-9.433384) == "-9.43338");
    CHECK(format_sig6(-3.872649e31) == "-3.87265e+31");
    CHECK(format_sig6(-2.148681e-25) == "-2.14868e-25");
    CHECK(format_sig6(0.0) == "0");
    CHECK(format_sig6(-0.0) == "0");
    CHECK(format_sig6(99999.94) == "99999.9");
    CHECK(format_sig6(99999.96) == "1.00000e+05");
    CHECK(format_sig6(100000.0) == "1.00000e+05");
    CHECK(format_sig6(0.001) == "0.00100000");
    CHECK(format_sig6(0.000999) == "9.99000e-04");
    CHECK(format_sig6(5.0) == "5.00000");
    // exact binary ties round to the even digit
    CHECK(format_sig6(100000.5) == "1.00000e+05");
    CHECK(format_sig6(100001.5) == "1.00002e+05");
}

TEST_CASE("format_coord")
{
    CHECK(format_coord(0.0) == "0");
    CHECK(format_coord(5.0) == "5");
    CHECK(format_coord(0.05) == "0.05");
    CHECK(format_coord(-1.0) == "-1");
}

TEST_CASE("printed precision and matching")
{
    CHECK(printed_precision("6.90572") == 6);
    CHECK(printed_precision("-2.14868e-25") == 6);
    CHECK(printed_precision("1.612040") == 6);
    CHECK(printed_precision("22.050") == 4);
    CHECK(printed_precision("-5.74390") == 5);
    CHECK(matches_printed(6.905723, "6.90572"));
    CHECK_FALSE(matches_printed(6.905753, "6.90572"));
    CHECK(matches_printed(1.6120401, "1.612040"));
    CHECK(matches_printed(-1.089712e33, "-1.08971e33"));
    CHECK_FALSE(matches_printed(1.089712e33, "-1.08971e33"));
}

TEST_CASE("golden tables have the expected shape")
{
    CHECK(golden_energies().size() == 192);
    CHECK(golden_observables().size() == 240);
    for (auto const& row : golden_observables()) {
        CHECK(!quantity_name(row.quantity).empty());
    }
}

TEST_CASE("tolerances by key")
{
    Tolerances t;
    t.set("hft_rel", 1e-4);
    CHECK(t.hft_rel == 1e-4);
    CHECK(t.as_map().size() == 11);
    CHECK(t.as_map().at("hft_rel") == 1e-4);
    CHECK_THROWS_AS(t.set("bogus", 1.0), ConfigError);
    CHECK_THROWS_AS(t.set("nu_rel", -1.0), ConfigError);
}

TEST_CASE("list parsing and config validation")
{
    CHECK(parse_int_list("0, 1,2", "--n") == std::vector<int>{0, 1, 2});
    CHECK(parse_real_list("0,2.5", "--g") == std::vector<double>{0.0, 2.5});
    CHECK_THROWS_AS(parse_int_list("0,x", "--n"), ConfigError);
    CHECK_THROWS_AS(parse_real_list("", "--g"), ConfigError);
    CHECK(parse_units("dimensionless") == UnitsMode::dimensionless);
    CHECK_THROWS_AS(parse_units("si"), ConfigError);

    RunConfig cfg;
    CHECK_NOTHROW(validate(cfg));
    cfg.lattice.n = {-1};
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg.lattice.n = {};
    CHECK_THROWS_AS(validate(cfg), ConfigError);
}

TEST_CASE("JSON config files")
{
    auto const path = scratch("cfg.json");
    {
        std::ofstream(path) << R"({"n": [1], "m": [0], "g": [1.0], "omega_l": [5], "z": 2,
                                   "tolerances": {"hft_rel": 1e-5}})";
    }
    RunConfig cfg;
    apply_config_file(cfg, path.string());
    CHECK(cfg.lattice.n == std::vector<int>{1});
    CHECK(cfg.lattice.omega_L == std::vector<double>{5.0});
    CHECK(cfg.constants.z == 2.0);
    CHECK(cfg.tolerances.hft_rel == 1e-5);

    {
        std::ofstream(path) << R"({"colour": 1})";
    }
    CHECK_THROWS_AS(apply_config_file(cfg, path.string()), ConfigError);
    {
        std::ofstream(path) << "{not json";
    }
    CHECK_THROWS_AS(apply_config_file(cfg, path.string()), ConfigError);
    CHECK_THROWS_AS(apply_config_file(cfg, "/nonexistent/cfg.json"), IOError);
}

TEST_CASE("spectrum output")
{
    RunConfig cfg;
    std::ostringstream out;
    write_spectrum(cfg, out);
    auto const rows = lines_of(out.str());
    REQUIRE(rows.size() == 193);
    CHECK(rows[0] == "molecule,g,m,omega_L,n,E");
    CHECK(rows[1] == "CO,0,0,0,0,6.90572");
    CHECK(out.str().find('\r') == std::string::npos);
    for (auto const& r : rows) {
        CHECK(std::count(r.begin(), r.end(), ',') == 5);
    }

    std::ostringstream again;
    write_spectrum(cfg, again);
    CHECK(again.str() == out.str());

    cfg.lattice = Lattice{{0}, {0}, {0.0}, {0.0}};
    std::ostringstream single;
    write_spectrum(cfg, single);
    CHECK(lines_of(single.str()).size() == 1 + 4);
}

TEST_CASE("observables output")
{
    RunConfig cfg;
    cfg.lattice = Lattice{{0, 3}, {1}, {1.0}, {0.0, 10.0}};
    std::ostringstream out;
    write_observables(cfg, out);
    std::string const text = out.str();
    CHECK(lines_of(text)[0] == "molecule,g,m,omega_L,n,r2,p2,T,V,chi,mu_B");
    CHECK(text.find("CO,1,1,0,0,0.395622,-2.14868e-25,-9.43338,28.3002,-3.87265e+31,0\n") != std::string::npos);
    CHECK(text.find("HCl,1,1,10,3,0.822756,") != std::string::npos);
}

TEST_CASE("figures")
{
    CHECK(figure_omegas().size() == 241);
    CHECK(figure_omegas().back() == 12.0);
    CHECK(figure_series().size() == 5);
    auto const dir = scratch("figs");
    std::filesystem::remove_all(dir);
    auto const written = write_figures(RunConfig{}, dir);
    CHECK(written.size() == 5);
    for (auto const& p : written) {
        CHECK(std::filesystem::exists(p));
    }
}

TEST_CASE("verify on a small lattice")
{
    RunConfig cfg;
    cfg.lattice = Lattice{{0, 1}, {1}, {1.0}, {5.0}};
    VerifyReport const rep = run_verify(cfg);
    std::ostringstream out;
    print_report(rep, out);
    CHECK(out.str().find("passed") != std::string::npos);
    for (auto const& c : rep.checks) {
        if (c.name != "golden_energies") {
            CHECK_MESSAGE(c.passed, c.name, " ", c.detail);
        }
    }
}
