#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

fs::path scratch_root() {
    static const fs::path root = [] {
        auto path = fs::temp_directory_path() / ("eosa_cli_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
        return path;
    }();
    return root;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CommandResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto capture = scratch_root() / ("capture_" + std::to_string(counter++) + ".txt");
    const std::string command =
        std::string(EOSA_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(command.c_str());
    CommandResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = read_file(capture);
    return result;
}

int count_lines(const std::string& text) {
    return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

} // namespace

TEST_CASE("optimize prints the fitness and writes the convergence CSV") {
    const auto out = scratch_root() / "optimize_run.csv";
    const std::string args = "optimize --function F34 --dim 5 --epochs 20 --psize 10 --seed 3 "
                             "--out " + out.string();
    auto result = run_cli(args);
    REQUIRE(result.exit_code == 0);
    CHECK(std::stod(result.output) >= 0.0);  // sphere fitness on stdout

    auto csv = read_file(out);
    CHECK(csv.rfind("epoch,gbest_fitness\n", 0) == 0);
    CHECK(count_lines(csv) == 21);

    // identical invocation reproduces the file byte for byte
    const auto out2 = scratch_root() / "optimize_run2.csv";
    auto again = run_cli("optimize --function F34 --dim 5 --epochs 20 --psize 10 --seed 3 --out " +
                         out2.string());
    REQUIRE(again.exit_code == 0);
    CHECK(read_file(out2) == csv);
    CHECK(again.output == result.output);
}

TEST_CASE("unknown function id exits 2 and names the id") {
    auto result = run_cli("optimize --function F999");
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("F999") != std::string::npos);
}

TEST_CASE("baseline algorithms run through the same subcommand") {
    const auto out = scratch_root() / "optimize_de.csv";
    auto result = run_cli("optimize --function F34 --dim 4 --algo de --epochs 15 --psize 8 "
                          "--seed 1 --out " + out.string());
    REQUIRE(result.exit_code == 0);
    CHECK(count_lines(read_file(out)) == 16);
}

TEST_CASE("experiment with flags only produces a one-run archive") {
    const auto dir = scratch_root() / "exp_flags";
    auto result = run_cli("experiment --algorithms eosa --functions F34 --runs 1 --epochs 6 "
                          "--psize 8 --seed 9 --output-dir " + dir.string());
    REQUIRE(result.exit_code == 0);
    CHECK(fs::exists(dir / "runs" / "eosa_F34_run0.csv"));
    CHECK(fs::exists(dir / "runs" / "eosa_F34_run0_census.csv"));
    CHECK(fs::exists(dir / "summary.csv"));
    CHECK(fs::exists(dir / "manifest.txt"));
    CHECK(fs::exists(dir / "convergence.csv"));
    CHECK(fs::exists(dir / "timing.csv"));
    CHECK(count_lines(read_file(dir / "summary.csv")) == 2);
}

TEST_CASE("experiment config file works and flags override it") {
    const auto ini = scratch_root() / "exp.ini";
    {
        std::ofstream out(ini);
        out << "[experiment]\n"
               "runs = 1\n"
               "epochs = 5\n"
               "population_size = 8\n"
               "master_seed = 4\n"
               "checkpoints = 1,5\n"
               "algorithms = eosa,de\n"
               "functions = F34\n"
               "\n"
               "[de]\n"
               "scale = 0.6\n";
    }
    const auto dir = scratch_root() / "exp_config";
    auto result =
        run_cli("experiment --config " + ini.string() + " --runs 2 --output-dir " + dir.string());
    REQUIRE(result.exit_code == 0);
    CHECK(fs::exists(dir / "runs" / "eosa_F34_run1.csv"));  // --runs 2 took effect
    CHECK(fs::exists(dir / "runs" / "de_F34_run1.csv"));
}

TEST_CASE("config parse errors carry the line number") {
    const auto ini = scratch_root() / "bad.ini";
    {
        std::ofstream out(ini);
        out << "[experiment]\nruns = 2\nbogus = 1\n";
    }
    auto result = run_cli("experiment --config " + ini.string());
    CHECK(result.exit_code == 2);
    CHECK(result.output.find(":3:") != std::string::npos);
    CHECK(result.output.find("bogus") != std::string::npos);
}

TEST_CASE("simulate writes one census row per epoch and honours overrides") {
    const auto out = scratch_root() / "census.csv";
    auto result = run_cli("simulate --psize 30 --epochs 12 --seed 3 --rate xi=0 --out " +
                          out.string());
    REQUIRE(result.exit_code == 0);

    auto csv = read_file(out);
    CHECK(csv.rfind("epoch,S,I,H,R,V,D,Q\n", 0) == 0);
    CHECK(count_lines(csv) == 13);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        CHECK(line.substr(line.rfind(',') + 1) == "0");  // Q column silent with xi = 0
    }

    const auto out2 = scratch_root() / "census2.csv";
    auto again = run_cli("simulate --psize 30 --epochs 12 --seed 3 --rate xi=0 --out " +
                         out2.string());
    REQUIRE(again.exit_code == 0);
    CHECK(read_file(out2) == csv);

    auto bad = run_cli("simulate --rate bogus=1 --out " + (scratch_root() / "x.csv").string());
    CHECK(bad.exit_code == 2);
}

TEST_CASE("stats ranks the bundled reference table with eosa first") {
    const auto dir = scratch_root() / "stats_fixture";
    auto result = run_cli("stats --input " + std::string(EOSA_REFERENCE_TABLE) +
                          " --metric mean --output-dir " + dir.string());
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("df=7") != std::string::npos);

    auto friedman = read_file(dir / "friedman.csv");
    std::istringstream lines(friedman);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "algorithm,mean_rank");
    CHECK(first.rfind("eosa,", 0) == 0);
    CHECK(count_lines(friedman) == 9);  // header + 8 algorithms

    auto wilcoxon = read_file(dir / "wilcoxon.csv");
    CHECK(count_lines(wilcoxon) == 8);  // header + 7 pairs against eosa
    std::istringstream wlines(wilcoxon);
    std::getline(wlines, header);
    std::string row;
    while (std::getline(wlines, row)) {
        const auto z_field = row.find(",eosa,-");
        CHECK(z_field != std::string::npos);  // every z negative against the reference
    }
}

TEST_CASE("stats on two algorithms gives df 1 and a single pair") {
    const auto csv = scratch_root() / "two.csv";
    {
        std::ofstream out(csv);
        out << "algorithm,function,mean\n";
        for (int f = 1; f <= 6; ++f) {
            out << "alpha,F" << f << "," << f << ".0\n";
            out << "beta,F" << f << "," << f + 1 << ".5\n";
        }
    }
    const auto dir = scratch_root() / "stats_two";
    auto result =
        run_cli("stats --input " + csv.string() + " --output-dir " + dir.string());
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("df=1") != std::string::npos);
    CHECK(count_lines(read_file(dir / "wilcoxon.csv")) == 2);  // header + one pair
}

TEST_CASE("malformed summary CSV exits 2 with the row number") {
    const auto csv = scratch_root() / "bad.csv";
    {
        std::ofstream out(csv);
        out << "algorithm,function,mean\nalpha,F1,1.0\nbeta,F1\n";
    }
    auto result = run_cli("stats --input " + csv.string());
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("row 3") != std::string::npos);
}

TEST_CASE("environment variable sets the default output directory") {
    const auto dir = scratch_root() / "env_out";
    ::setenv("EOSA_OUTPUT_DIR", dir.string().c_str(), 1);
    auto result = run_cli("optimize --function F34 --dim 3 --epochs 5 --psize 6 --seed 2");
    ::unsetenv("EOSA_OUTPUT_DIR");
    REQUIRE(result.exit_code == 0);
    CHECK(fs::exists(dir / "eosa_F34.csv"));
}
