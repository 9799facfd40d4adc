#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "resilife/cli_app.hpp"
#include "resilife/parse.hpp"

using namespace resilife;

namespace {

int run_cli(std::initializer_list<const char*> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::vector<const char*> argv{"resilife"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/resilife_test_" + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("spec string parsing") {
    CHECK(parse_distribution("exp(2)").label() == "exp(2)");
    CHECK(parse_distribution("hyperexp(0.25:1,0.75:2)").hazard(0.0) == doctest::Approx(1.75));
    CHECK(parse_distribution("weibull(2, 1)").sf(1.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(parse_distribution("loglogistic(2,1)").sf(1.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS((void)parse_distribution("gamma(1,1)"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_distribution("exp(fast)"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_distribution("hyperexp(0.5:1,0.6:2)"), std::invalid_argument);

    CHECK(parse_mixing("degenerate(1.5)").quantile(0.5) == 1.5);
    CHECK(parse_mixing("atoms(0:0.25,1:0.75)").cdf(0.0) == doctest::Approx(0.25));
    CHECK(parse_mixing("cont(exp(1))").has_density());
    CHECK(parse_mixing("os(exp(1),4,5)").label() == "os(exp(1),4,5)");
    CHECK(parse_mixing("ce61_h1").pdf(0.0) == doctest::Approx(4.0 / M_PI));
    CHECK(parse_mixing("ce61_h2").pdf(0.0) == doctest::Approx(2.0 / M_PI));
    CHECK_THROWS_AS((void)parse_mixing("uniform(0,1)"), std::invalid_argument);
}

TEST_CASE("tabulated file loading") {
    TempFile good("tab_good.csv", "x,sf\n0,1\n1,0.5\n2,0.25\n");
    auto d = load_tabulated(good.path);
    CHECK(d.sf(1.0) == doctest::Approx(0.5));
    CHECK(d.sf(2.0) == doctest::Approx(0.25));
    CHECK(parse_distribution("tabulated(" + good.path + ")").sf(1.0) == doctest::Approx(0.5));

    TempFile bad_header("tab_bad1.csv", "time,surv\n0,1\n1,0.5\n");
    CHECK_THROWS_AS((void)load_tabulated(bad_header.path), std::invalid_argument);
    TempFile bad_first("tab_bad2.csv", "x,sf\n0,0.9\n1,0.5\n");
    CHECK_THROWS_AS((void)load_tabulated(bad_first.path), std::invalid_argument);
    CHECK_THROWS_AS((void)load_tabulated("/tmp/definitely_missing_resilife.csv"),
                    std::invalid_argument);
}

TEST_CASE("list subcommand") {
    std::string out;
    CHECK(run_cli({"list"}, &out) == cli::kExitPass);
    CHECK(out.find("CE5.1") != std::string::npos);
    CHECK(out.find("T6.6") != std::string::npos);
    std::size_t lines = 0;
    for (char c : out)
        if (c == '\n') ++lines;
    CHECK(lines >= 20);
}

TEST_CASE("run subcommand exit codes") {
    std::string out, err;
    CHECK(run_cli({"run", "nosuch"}, &out, &err) == cli::kExitUsage);
    CHECK(err.find("nosuch") != std::string::npos);
    CHECK(run_cli({"run", "T4.3i"}, &out) == cli::kExitPass);
    CHECK(out.find("overall: pass") != std::string::npos);
    CHECK(run_cli({"run", "T5.2", "--tol", "1e-7"}, &out) == cli::kExitPass);
    CHECK(run_cli({"run", "CE4.2", "--seed", "99"}, &out) == cli::kExitPass);
}

TEST_CASE("json report emission and round trip") {
    const std::string path = "/tmp/resilife_test_report.json";
    std::string out;
    CHECK(run_cli({"run", "CE4.2", "--format", "json", "--out", path.c_str()}, &out) ==
          cli::kExitPass);
    std::ifstream f(path);
    REQUIRE(f.good());
    nlohmann::json j = nlohmann::json::parse(f);
    CHECK(j["id"] == "CE4.2");
    CHECK(j["overall"] == "pass");
    auto rep = report_from_json(j);
    CHECK(to_json(rep) == j);
    std::remove(path.c_str());
}

TEST_CASE("grid subcommand emits matched columns for the memoryless baseline") {
    const std::string path = "/tmp/resilife_test_grid.csv";
    std::string out;
    CHECK(run_cli({"grid", "--baseline", "exp(1)", "--mixing", "cont(exp(1))", "--quantities",
                   "sf,mrl", "--grid-min", "0.001", "--grid-max", "5", "--grid-points", "101",
                   "--out", path.c_str()},
                  &out) == cli::kExitPass);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "x,sf_x,sf_xstar,mrl_x,mrl_xstar");
    std::size_t rows = 0;
    std::string line;
    double worst = 0.0;
    while (std::getline(f, line)) {
        ++rows;
        std::istringstream ss(line);
        std::string tok;
        std::vector<double> vals;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
        REQUIRE(vals.size() == 5);
        worst = std::fmax(worst, std::fabs(vals[1] - vals[2]));
    }
    CHECK(rows == 101);
    CHECK(worst <= 1e-8);
    std::remove(path.c_str());
}

TEST_CASE("config-driven runs") {
    TempFile cfg("cfg_good.json", R"json({
        "baseline": "hyperexp(0.25:1,0.75:2)",
        "mixing": "cont(exp(1))",
        "mixing2": "atoms(0:0.25,1:0.75)",
        "checks": ["aging:DFR:mixture", "order:ST:baseline:mixture",
                   "dependence:PLRD", "dependence:SI"],
        "tol": 1e-7
    })json");
    std::string out;
    CHECK(run_cli({"run", cfg.path.c_str(), "--format", "json"}, &out) == cli::kExitPass);
    auto j = nlohmann::json::parse(out);
    CHECK(j["conclusions"].size() == 4);

    TempFile cfg_fail("cfg_fail.json", R"json({
        "baseline": "weibull(2,1)",
        "mixing": "degenerate(1)",
        "checks": ["order:ST:baseline:mixture"],
        "grid": {"min": 0.001, "max": 3.0, "points": 100}
    })json");
    CHECK(run_cli({"run", cfg_fail.path.c_str()}, &out) == cli::kExitFail);

    TempFile cfg_bad("cfg_bad.json", "{ not json ");
    std::string err;
    CHECK(run_cli({"run", cfg_bad.path.c_str()}, &out, &err) == cli::kExitUsage);
    TempFile cfg_bad2("cfg_bad2.json", R"json({"baseline": "exp(1)", "checks": []})json");
    CHECK(run_cli({"run", cfg_bad2.path.c_str()}, &out, &err) == cli::kExitUsage);
    TempFile cfg_bad3("cfg_bad3.json",
                      R"json({"baseline": "exp(1)", "checks": ["order:ST:mixture:baseline"]})json");
    CHECK(run_cli({"run", cfg_bad3.path.c_str()}, &out, &err) == cli::kExitUsage);
}

TEST_CASE("seed resolution order: flag beats environment") {
    std::string with_env, with_flag;
    setenv("RESILIFE_SEED", "1234", 1);
    CHECK(run_cli({"run", "CE4.2", "--format", "json"}, &with_env) == cli::kExitPass);
    CHECK(run_cli({"run", "CE4.2", "--format", "json", "--seed", "777"}, &with_flag) ==
          cli::kExitPass);
    unsetenv("RESILIFE_SEED");
    std::string no_env;
    CHECK(run_cli({"run", "CE4.2", "--format", "json", "--seed", "1234"}, &no_env) ==
          cli::kExitPass);
    const auto je = nlohmann::json::parse(with_env);
    const auto jf = nlohmann::json::parse(with_flag);
    const auto jn = nlohmann::json::parse(no_env);
    CHECK(je["seed"] == jn["seed"]);
    CHECK(je["seed"] != jf["seed"]);
}

TEST_CASE("comparative configs for two ages or two baselines") {
    // two age laws, one baseline
    TempFile two_ages("cfg_two_ages.json", R"json({
        "baseline": "hyperexp(0.25:1,0.75:2)",
        "mixing": "cont(exp(2))",
        "mixing2": "cont(exp(1))",
        "checks": ["order:HR:mixture:mixture2"]
    })json");
    std::string out;
    CHECK(run_cli({"run", two_ages.path.c_str()}, &out) == cli::kExitPass);
    // two baselines, one common age law
    TempFile two_bases("cfg_two_bases.json", R"json({
        "baseline": "exp(1)",
        "baseline2": "hyperexp(0.25:0.5,0.75:1)",
        "mixing": "cont(exp(1))",
        "checks": ["order:HR:baseline:baseline2", "order:HR:mixture:mixture2"]
    })json");
    CHECK(run_cli({"run", two_bases.path.c_str()}, &out) == cli::kExitPass);
}
