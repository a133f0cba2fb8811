#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run(const std::string& args) {
    std::string cmd = std::string("\"") + QHA_BIN + "\" " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Fresh output directory per test case, removed on destruction.
struct TmpDir {
    fs::path path;
    explicit TmpDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("qha_cli_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TmpDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

bool is_hex16(const std::string& s) {
    if (s.size() != 18 || s.rfind("0x", 0) != 0) return false;
    for (size_t i = 2; i < s.size(); ++i)
        if (!std::isxdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

TEST_CASE("verify: green run with a well-formed report") {
    TmpDir dir("verify");
    CHECK(run("verify --n 8,16 --seed 1 --out " + dir.str()) == 0);

    json j = json::parse(slurp(dir.path / "verify.json"));
    CHECK(j.at("schema") == 1);
    CHECK(j.at("command") == "verify");
    CHECK(j.at("pass") == true);
    CHECK(is_hex16(j.at("config_hash").get<std::string>()));
    CHECK(j.at("n_list") == json::array({8, 16}));

    const auto& suites = j.at("suites");
    REQUIRE(suites.size() == 10);
    bool saw_symplectic = false, saw_tauber = false;
    for (const auto& s : suites) {
        CHECK(s.at("pass") == true);
        CHECK(s.at("residual").get<double>() <= s.at("tol").get<double>());
        if (s.at("name") == "symplectic_fourier") saw_symplectic = true;
        if (s.at("name") == "tauberian_transfer") saw_tauber = true;
    }
    CHECK(saw_symplectic);
    CHECK(saw_tauber);
}

TEST_CASE("verify: identical runs produce byte-identical reports") {
    TmpDir d1("det1"), d2("det2");
    CHECK(run("verify --n 8 --seed 7 --out " + d1.str()) == 0);
    CHECK(run("verify --n 8 --seed 7 --out " + d2.str()) == 0);
    CHECK(slurp(d1.path / "verify.json") == slurp(d2.path / "verify.json"));
}

TEST_CASE("verify: the seed is part of the config fingerprint") {
    TmpDir d1("seed1"), d2("seed2");
    CHECK(run("verify --n 8 --seed 1 --out " + d1.str()) == 0);
    CHECK(run("verify --n 8 --seed 2 --out " + d2.str()) == 0);
    json a = json::parse(slurp(d1.path / "verify.json"));
    json b = json::parse(slurp(d2.path / "verify.json"));
    CHECK(a.at("config_hash") != b.at("config_hash"));
}

TEST_CASE("verify: csv format emits the commented header") {
    TmpDir dir("vcsv");
    CHECK(run("verify --n 8 --format csv --out " + dir.str()) == 0);
    std::string csv = slurp(dir.path / "verify.csv");
    CHECK(csv.rfind("# schema 1\n", 0) == 0);
    CHECK(csv.find("suite,residual,tol,pass\n") != std::string::npos);
    CHECK(csv.find("symplectic_fourier,") != std::string::npos);
}

TEST_CASE("verify: an impossible tolerance turns the run red") {
    TmpDir dir("red");
    fs::path cfg = dir.path / "cfg.json";
    std::ofstream(cfg) << R"({"schema": 1, "tolerances": {"symplectic_fourier": 0.0}})";
    CHECK(run("verify --n 8 --config " + cfg.string() + " --out " + dir.str()) == 1);

    json j = json::parse(slurp(dir.path / "verify.json"));
    CHECK(j.at("pass") == false);
    for (const auto& s : j.at("suites"))
        if (s.at("name") == "symplectic_fourier") {
            CHECK(s.at("pass") == false);
            CHECK(s.at("tol") == 0.0);
        }
}

TEST_CASE("usage and config errors exit with code 2") {
    TmpDir dir("errs");

    SUBCASE("odd or undersized grids") {
        CHECK(run("verify --n 7 --out " + dir.str()) == 2);
        CHECK(run("verify --n 6 --out " + dir.str()) == 2);
        CHECK(run("verify --n 8,nonsense --out " + dir.str()) == 2);
    }

    SUBCASE("unknown format") {
        CHECK(run("verify --n 8 --format xml --out " + dir.str()) == 2);
    }

    SUBCASE("bad seed") {
        CHECK(run("verify --n 8 --seed 12x4 --out " + dir.str()) == 2);
    }

    SUBCASE("unknown flag / missing subcommand / unknown subcommand") {
        CHECK(run("verify --bogus 3") == 2);
        CHECK(run("") == 2);
        CHECK(run("frobnicate") == 2);
    }

    SUBCASE("config file problems") {
        fs::path missing_schema = dir.path / "m.json";
        std::ofstream(missing_schema) << R"({"ns": [8]})";
        CHECK(run("verify --config " + missing_schema.string() + " --out " + dir.str()) == 2);

        fs::path malformed = dir.path / "bad.json";
        std::ofstream(malformed) << "{ not json";
        CHECK(run("verify --config " + malformed.string() + " --out " + dir.str()) == 2);

        CHECK(run("verify --config " + (dir.path / "absent.json").string()) == 2);

        fs::path negtol = dir.path / "neg.json";
        std::ofstream(negtol) << R"({"schema": 1, "tolerances": {"weyl_calculus": -1.0}})";
        CHECK(run("verify --config " + negtol.string() + " --out " + dir.str()) == 2);

        fs::path badmask = dir.path / "mask.json";
        std::ofstream(badmask) << R"({"schema": 1, "masks": ["no_such_mask"], "ns": [8]})";
        CHECK(run("tauber --config " + badmask.string() + " --out " + dir.str()) == 2);
    }
}

TEST_CASE("tauber: per-pair artifacts and summary") {
    TmpDir dir("tauber");
    CHECK(run("tauber --n 8,16 --seed 601 --out " + dir.str()) == 0);

    CHECK(fs::exists(dir.path / "tauber_chirp_gaussian.json"));
    std::string csv = slurp(dir.path / "tauber_chirp_gaussian.csv");
    CHECK(csv.rfind("# schema 1\n", 0) == 0);
    CHECK(csv.find("# command tauber\n") != std::string::npos);

    json pair = json::parse(slurp(dir.path / "tauber_chirp_gaussian.json"));
    CHECK(pair.at("mask") == "chirp");
    CHECK(pair.at("window") == "gaussian");
    CHECK(pair.at("wiener_ok") == true);
    CHECK(pair.at("verdicts").at("i") == true);
    CHECK(pair.at("verdicts").at("ii") == true);
    CHECK(pair.at("verdicts").at("iii") == true);
    CHECK(pair.at("cells").size() == 2);

    json summary = json::parse(slurp(dir.path / "tauber.json"));
    REQUIRE(summary.at("reports").size() == 1);
    CHECK(summary.at("reports")[0].at("residual").get<double>() <= 1e-8);
    CHECK(summary.at("reports")[0].at("residual").get<double>() >= 0.0);
}

TEST_CASE("quantize: defaults at n = 16") {
    TmpDir dir("quant");
    CHECK(run("quantize --n 16 --out " + dir.str()) == 0);

    json j = json::parse(slurp(dir.path / "quantize.json"));
    REQUIRE(j.at("quantizers").size() == 2);
    for (const auto& q : j.at("quantizers")) {
        REQUIRE(q.at("cells").size() == 1);
        const auto& cell = q.at("cells")[0];
        CHECK(cell.at("n") == 16);
        CHECK(cell.at("husimi_decays") == true);
        if (q.at("quantizer") == "born_jordan") {
            CHECK(cell.at("quad_dev").get<double>() >= 0.0);
            CHECK(cell.at("quad_dev").get<double>() <= 1e-3);
            CHECK(cell.at("continuum_norm") == -1.0);
        } else {
            CHECK(q.at("quantizer") == "tau(0.3)");
            CHECK(cell.at("quad_dev") == -1.0);
            CHECK(cell.at("continuum_norm").get<double>() > 2.0);
        }
        CHECK(cell.at("mask_compact").size() == 2);
    }
}

TEST_CASE("iso: sigma bounds in both formats") {
    TmpDir dir("iso");
    CHECK(run("iso --n 16 --format csv --out " + dir.str()) == 0);

    json j = json::parse(slurp(dir.path / "iso.json"));
    REQUIRE(j.at("rows").size() == 1);
    const auto& row = j.at("rows")[0];
    CHECK(row.at("mask") == "indicator_disk_complement(1)");
    CHECK(row.at("window") == "gaussian");
    CHECK(row.at("sigma_min").get<double>() > 0.0);
    CHECK(row.at("sigma_max").get<double>() >= row.at("sigma_min").get<double>());
    CHECK(row.at("invertible") == true);

    std::string csv = slurp(dir.path / "iso.csv");
    CHECK(csv.find("mask,window,n,sigma_min,sigma_max,invertible\n") != std::string::npos);
    CHECK(csv.find("indicator_disk_complement(1),gaussian,16,") != std::string::npos);
}

TEST_CASE("fg: profiles computed up to the table guard, skipped past it") {
    TmpDir dir("fg");
    CHECK(run("fg --n 16,64 --out " + dir.str()) == 0);

    json j = json::parse(slurp(dir.path / "fg.json"));
    REQUIRE(j.at("profiles").size() == 2);
    const auto& p16 = j.at("profiles")[0];
    CHECK(p16.at("n") == 16);
    CHECK(p16.at("radii").size() == 10);
    CHECK(p16.at("values").size() == 10);
    CHECK_FALSE(p16.contains("skipped"));
    const auto& p64 = j.at("profiles")[1];
    CHECK(p64.at("n") == 64);
    CHECK(p64.at("skipped") == true);
    CHECK_FALSE(p64.contains("values"));
}

TEST_CASE("berezin: two-path deviations at machine precision") {
    TmpDir dir("ber");
    CHECK(run("berezin --n 8 --format csv --out " + dir.str()) == 0);

    CHECK(fs::exists(dir.path / "berezin_gaussian_env_gaussian_n8.csv"));
    json j = json::parse(slurp(dir.path / "berezin.json"));
    REQUIRE(j.at("rows").size() == 1);
    CHECK(j.at("rows")[0].at("dev_two_path").get<double>() <= 1e-10);
    CHECK(j.at("rows")[0].at("dev_spectrogram").get<double>() <= 1e-10);
}
