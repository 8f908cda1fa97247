#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <vector>
#include <sstream>
#include <string>

namespace {

struct Run
{
    int status = -1;
    std::string output; ///< stdout and stderr interleaved
};

Run run(std::string const& args)
{
    std::string const cmd = std::string("\"") + NUOSC_CLI_PATH + "\" " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.output.append(buf.data(), got);
    }
    int const raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::filesystem::path scratch(std::string const& name)
{
    auto const dir = std::filesystem::temp_directory_path() / "nuosc_cli";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(std::filesystem::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int count_lines(std::string const& s)
{
    return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_CASE("spectrum on the default lattice")
{
    Run const r = run("spectrum");
    CHECK(r.status == 0);
    CHECK(count_lines(r.output) == 193);
    CHECK(r.output.rfind("molecule,g,m,omega_L,n,E\nCO,0,0,0,0,6.90572\n", 0) == 0);
}

TEST_CASE("single-point lattice")
{
    auto const mol = scratch("co.csv");
    std::ofstream(mol) << "name,omega_1e13_s,mass_amu\nCO,6.471,6.8606719\n";
    Run const r = run("spectrum --molecules " + mol.string() + " --n 0 --m 0 --g 0 --omega-l 0");
    CHECK(r.status == 0);
    CHECK(r.output == "molecule,g,m,omega_L,n,E\nCO,0,0,0,0,6.90572\n");
}

TEST_CASE("--out writes files and repeated runs are byte-identical")
{
    auto const a = scratch("run_a");
    auto const b = scratch("run_b");
    std::filesystem::remove_all(a);
    std::filesystem::remove_all(b);
    for (auto const& dir : {a, b}) {
        CHECK(run("spectrum --out " + dir.string()).status == 0);
        CHECK(run("observables --out " + dir.string()).status == 0);
        CHECK(run("figures --out " + dir.string()).status == 0);
    }
    for (auto const& name : {"spectrum.csv", "observables.csv", "figure1_r2.csv", "figure5_chi.csv"}) {
        std::string const first = slurp(a / name);
        CHECK(!first.empty());
        CHECK(first == slurp(b / name));
        CHECK(first.find('\r') == std::string::npos);
    }
}

TEST_CASE("config file and flag precedence")
{
    auto const cfg = scratch("cfg.json");
    std::ofstream(cfg) << R"({"n": [2], "m": [1], "g": [1], "omega_l": [10]})";
    Run const from_file = run("spectrum --config " + cfg.string());
    CHECK(from_file.status == 0);
    CHECK(count_lines(from_file.output) == 5);
    CHECK(from_file.output.find("HCl,1,1,10,2,") != std::string::npos);
    Run const overridden = run("spectrum --config " + cfg.string() + " --n 0,1");
    CHECK(count_lines(overridden.output) == 9);
}

TEST_CASE("usage and configuration errors exit 2")
{
    Run const missing = run("spectrum --molecules /nonexistent/molecules.csv");
    CHECK(missing.status == 2);
    CHECK(missing.output.find("/nonexistent/molecules.csv") != std::string::npos);

    Run const missing_verify = run("verify --molecules /nonexistent/molecules.csv");
    CHECK(missing_verify.status == 2);
    CHECK(missing_verify.output.find("/nonexistent/molecules.csv") != std::string::npos);

    auto const bad = scratch("bad.csv");
    std::ofstream(bad) << "name,omega_1e13_s,mass_amu\nCO,six,6.86\n";
    Run const parse = run("spectrum --molecules " + bad.string());
    CHECK(parse.status == 2);
    CHECK(parse.output.find(bad.string() + ":2:4:") != std::string::npos);

    CHECK(run("spectrum --units furlongs").status == 2);
    CHECK(run("spectrum --n -1").status == 2);
    CHECK(run("spectrum --tol nope=1").status == 2);
    CHECK(run("frobnicate").status == 2);
}

TEST_CASE("verify flags a perturbed mass")
{
    auto const mol = scratch("perturbed.csv");
    std::ofstream(mol) << "name,omega_1e13_s,mass_amu\n"
                          "CO,6.471,6.929278619\n"
                          "HCl,8.814,0.9801045\n"
                          "I2,0.642,63.45223502\n"
                          "H2,12.960,0.50391\n";
    Run const r = run("verify --molecules " + mol.string() + " --n 0,1 --m 1 --g 1 --omega-l 5");
    CHECK(r.status == 1);
    CHECK(r.output.find("[FAIL] golden_energies") != std::string::npos);
    CHECK(r.output.find("[FAIL] golden_observables") != std::string::npos);
}

TEST_CASE("pristine verify fails only on the CO n=3 table typo")
{
    auto const out = scratch("verify_out");
    std::filesystem::remove_all(out);
    Run const r = run("verify --out " + out.string());
    CHECK(r.status == 1);
    CHECK(r.output.find("[FAIL] golden_energies") != std::string::npos);
    CHECK(r.output.find("191/192") != std::string::npos);
    CHECK(r.output.find("1 failed") != std::string::npos);
    CHECK(std::filesystem::exists(out / "verify_report.txt"));
}

namespace {

// (molecule, n) -> values in sweep order
std::map<std::pair<std::string, int>, std::vector<double>> read_figure(std::filesystem::path const& p)
{
    std::map<std::pair<std::string, int>, std::vector<double>> out;
    std::istringstream in(slurp(p));
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream f(line);
        std::string name, n, w, v;
        std::getline(f, name, ',');
        std::getline(f, n, ',');
        std::getline(f, w, ',');
        std::getline(f, v, ',');
        out[{name, std::stoi(n)}].push_back(std::stod(v));
    }
    return out;
}

} // namespace

TEST_CASE("figure series behave as described")
{
    auto const dir = scratch("figures");
    std::filesystem::remove_all(dir);
    REQUIRE(run("figures --out " + dir.string()).status == 0);

    auto const r2 = read_figure(dir / "figure1_r2.csv");
    CHECK(r2.size() == 16);
    for (auto const& [key, v] : r2) {
        CHECK(v.size() == 241);
        for (std::size_t i = 1; i < v.size(); ++i) {
            CHECK(v[i] < v[i - 1]);
        }
    }
    auto const chi = read_figure(dir / "figure5_chi.csv");
    auto const V = read_figure(dir / "figure4_V.csv");
    for (std::string const mol : {"CO", "HCl", "I2", "H2"}) {
        double const chi_gap0 = std::abs(chi.at({mol, 3}).front() - chi.at({mol, 0}).front());
        double const chi_gap12 = std::abs(chi.at({mol, 3}).back() - chi.at({mol, 0}).back());
        CHECK(chi_gap12 < 0.5 * chi_gap0);
        double const v_gap0 = V.at({mol, 3}).front() - V.at({mol, 0}).front();
        double const v_gap12 = V.at({mol, 3}).back() - V.at({mol, 0}).back();
        CHECK(v_gap12 > v_gap0);
    }
}
