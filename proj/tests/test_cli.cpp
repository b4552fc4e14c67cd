#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kjnn/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct CliOutcome {
    int code = -1;
    std::string out;
    std::string err;
};

// Runs the CLI entry point in-process with stdout/stderr redirected into
// temporary files so the tests can assert on both streams and exit codes.
CliOutcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "kjnn");
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());

    std::cout.flush();
    std::cerr.flush();
    std::fflush(stdout);
    std::fflush(stderr);

    std::FILE* out_file = std::tmpfile();
    std::FILE* err_file = std::tmpfile();
    REQUIRE(out_file != nullptr);
    REQUIRE(err_file != nullptr);
    const int saved_out = ::dup(STDOUT_FILENO);
    const int saved_err = ::dup(STDERR_FILENO);
    ::dup2(::fileno(out_file), STDOUT_FILENO);
    ::dup2(::fileno(err_file), STDERR_FILENO);

    CliOutcome outcome;
    outcome.code = kjnn::cli_run(static_cast<int>(argv.size()), argv.data());

    std::cout.flush();
    std::cerr.flush();
    std::fflush(stdout);
    std::fflush(stderr);
    ::dup2(saved_out, STDOUT_FILENO);
    ::dup2(saved_err, STDERR_FILENO);
    ::close(saved_out);
    ::close(saved_err);

    auto slurp = [](std::FILE* file) {
        std::string text;
        std::fseek(file, 0, SEEK_SET);
        char buffer[4096];
        for (std::size_t n = 0; (n = std::fread(buffer, 1, sizeof buffer, file)) > 0;) {
            text.append(buffer, n);
        }
        std::fclose(file);
        return text;
    };
    outcome.out = slurp(out_file);
    outcome.err = slurp(err_file);
    return outcome;
}

// Scratch path helper; removes the file both on entry and on destruction.
class TempFile {
  public:
    explicit TempFile(const char* name) : path_(fs::temp_directory_path() / name) {
        fs::remove(path_);
    }
    ~TempFile() { fs::remove(path_); }
    const fs::path& path() const { return path_; }
    std::string str() const { return path_.string(); }

  private:
    fs::path path_;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t count_lines(const std::string& text) {
    std::size_t count = 0;
    for (char c : text) count += c == '\n' ? 1 : 0;
    return count;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("run writes a csv sweep and repeats byte-for-byte") {
    TempFile first("kjnn_cli_sweep_a.csv");
    TempFile second("kjnn_cli_sweep_b.csv");
    const std::vector<std::string> args = {"run",      "--topology", "sym-knn", "--k",
                                           "5",        "--n",        "100:300:100",
                                           "--trials", "2",          "--seed",  "7"};

    auto with_out = [&](const std::string& out) {
        std::vector<std::string> full = args;
        full.insert(full.end(), {"--out", out});
        return invoke(full);
    };

    const CliOutcome a = with_out(first.str());
    CHECK(a.code == 0);
    CHECK(a.out == "wrote " + first.str() + " (3 rows)\n");
    const std::string csv = read_file(first.path());
    CHECK(count_lines(csv) == 4);
    CHECK(csv.rfind("topology,k,j,n,trials,seed,connectivity_probability,mean_degree,"
                    "min_degree,max_degree,radius\n", 0) == 0);
    CHECK(csv.find("sym-knn,5,,100,2,7,") != std::string::npos);

    const CliOutcome b = with_out(second.str());
    CHECK(b.code == 0);
    CHECK(read_file(second.path()) == csv);
}

TEST_CASE("run emits json when asked") {
    TempFile out("kjnn_cli_sweep.json");
    const CliOutcome result =
        invoke({"run", "--topology", "kj-nn", "--k", "5", "--j", "3", "--n", "120", "--trials",
                "2", "--seed", "7", "--format", "json", "--out", out.str()});
    CHECK(result.code == 0);
    const nlohmann::json rows = nlohmann::json::parse(read_file(out.path()));
    REQUIRE(rows.is_array());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["topology"] == "kj-nn");
    CHECK(rows[0]["k"] == 5);
    CHECK(rows[0]["j"] == 3);
    CHECK(rows[0]["n"] == 120);
    CHECK(rows[0]["radius"].is_null());
    CHECK(rows[0]["degree_histogram"].is_object());
}

TEST_CASE("run records the radius for geometric topologies") {
    TempFile fixed("kjnn_cli_rgg_fixed.csv");
    const CliOutcome with_r = invoke({"run", "--topology", "rgg", "--n", "80", "--trials", "2",
                                      "--seed", "7", "--r", "0.3", "--out", fixed.str()});
    CHECK(with_r.code == 0);
    CHECK(read_file(fixed.path()).find(",0.300000\n") != std::string::npos);

    TempFile formula("kjnn_cli_comp_formula.csv");
    const CliOutcome with_sigma =
        invoke({"run", "--topology", "kj-nn-rgg", "--k", "5", "--j", "3", "--n", "1000",
                "--trials", "1", "--seed", "7", "--out", formula.str()});
    CHECK(with_sigma.code == 0);
    CHECK(read_file(formula.path()).find(",0.072089\n") != std::string::npos);
}

TEST_CASE("run writes a degree histogram for single-point sweeps") {
    TempFile out("kjnn_cli_hist_run.csv");
    TempFile hist("kjnn_cli_hist.csv");
    const CliOutcome ok =
        invoke({"run", "--topology", "sym-knn", "--k", "3", "--n", "60", "--trials", "2",
                "--seed", "9", "--out", out.str(), "--hist-out", hist.str()});
    CHECK(ok.code == 0);
    const std::string histogram = read_file(hist.path());
    CHECK(histogram.rfind("degree,proportion\n", 0) == 0);
    CHECK(count_lines(histogram) >= 2);

    TempFile hist2("kjnn_cli_hist2.csv");
    const CliOutcome multi =
        invoke({"run", "--topology", "sym-knn", "--k", "3", "--n", "60:80:20", "--trials", "2",
                "--seed", "9", "--out", out.str(), "--hist-out", hist2.str()});
    CHECK(multi.code == 2);
    CHECK_FALSE(fs::exists(hist2.path()));
}

TEST_CASE("argument errors exit with status 2") {
    TempFile out("kjnn_cli_err.csv");

    const CliOutcome r_on_knn = invoke({"run", "--topology", "sym-knn", "--n", "50", "--r",
                                        "0.3", "--out", out.str()});
    CHECK(r_on_knn.code == 2);
    CHECK(r_on_knn.err.find("--r only applies") != std::string::npos);

    CHECK(invoke({"run", "--topology", "rgg", "--n", "50", "--r", "0.3", "--sigma", "3",
                  "--out", out.str()})
              .code == 2);
    CHECK(invoke({"run", "--topology", "mesh", "--n", "50", "--out", out.str()}).code == 2);
    CHECK(invoke({"run", "--topology", "sym-knn", "--n", "abc", "--out", out.str()}).code == 2);
    CHECK(invoke({"run", "--topology", "sym-knn", "--n", "300:100:50", "--out", out.str()})
              .code == 2);
    CHECK(invoke({"run", "--topology", "sym-knn", "--n", "100:200:0", "--out", out.str()})
              .code == 2);
    CHECK(invoke({"run", "--topology", "sym-knn", "--n", "50"}).code == 2);  // --out missing
    CHECK(invoke({"run", "--topology", "kj-nn", "--k", "3", "--j", "5", "--n", "50", "--out",
                  out.str()})
              .code == 2);
    CHECK(invoke({}).code == 2);                  // a subcommand is required
    CHECK(invoke({"orbit"}).code == 2);           // unknown subcommand
    CHECK_FALSE(fs::exists(out.path()));
}

TEST_CASE("help exits cleanly") {
    const CliOutcome help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("run") != std::string::npos);
    CHECK(help.out.find("draw") != std::string::npos);
    CHECK(invoke({"run", "--help"}).code == 0);
}

TEST_CASE("radius prints the critical-radius table") {
    const CliOutcome single = invoke({"radius", "--k", "5", "--sigma", "3", "--n", "1000"});
    CHECK(single.code == 0);
    CHECK(single.out == "n,xi,r\n1000,-7.975431,0.072089\n");

    const CliOutcome k1 = invoke({"radius", "--k", "1", "--n", "100"});
    CHECK(k1.code == 0);
    CHECK(k1.out == "n,xi,r\n100,7.175697,0.205817\n");

    const CliOutcome sweep = invoke({"radius", "--k", "5", "--n", "100:400:100"});
    CHECK(sweep.code == 0);
    CHECK(count_lines(sweep.out) == 5);

    CHECK(invoke({"radius", "--k", "5", "--n", "3"}).code == 2);  // formula undefined
}

TEST_CASE("gain compares two result files") {
    TempFile base("kjnn_cli_gain_base.csv");
    TempFile reduced("kjnn_cli_gain_reduced.csv");
    CHECK(invoke({"run", "--topology", "sym-knn", "--k", "5", "--n", "100:200:100", "--trials",
                  "3", "--seed", "11", "--out", base.str()})
              .code == 0);
    CHECK(invoke({"run", "--topology", "kj-nn", "--k", "5", "--j", "3", "--n", "100:200:100",
                  "--trials", "3", "--seed", "11", "--out", reduced.str()})
              .code == 0);

    const CliOutcome gain = invoke({"gain", base.str(), reduced.str()});
    CHECK(gain.code == 0);
    CHECK(gain.out.rfind("n,gain\n100,", 0) == 0);
    CHECK(count_lines(gain.out) == 4);
    CHECK(gain.out.find("\nmean,") != std::string::npos);

    TempFile shorter("kjnn_cli_gain_short.csv");
    CHECK(invoke({"run", "--topology", "kj-nn", "--k", "5", "--j", "3", "--n", "100",
                  "--trials", "3", "--seed", "11", "--out", shorter.str()})
              .code == 0);
    CHECK(invoke({"gain", base.str(), shorter.str()}).code == 2);
    CHECK(invoke({"gain", base.str(), "/nonexistent/kjnn.csv"}).code == 1);
}

TEST_CASE("draw renders an svg snapshot") {
    TempFile svg("kjnn_cli_draw.svg");
    const CliOutcome knn = invoke({"draw", "--topology", "sym-knn", "--k", "4", "--n", "30",
                                   "--seed", "5", "--out", svg.str()});
    CHECK(knn.code == 0);
    const std::string document = read_file(svg.path());
    CHECK(count_occurrences(document, "<circle") == 30);
    CHECK(document.find("</svg>") != std::string::npos);

    TempFile comp("kjnn_cli_draw_comp.svg");
    CHECK(invoke({"draw", "--topology", "kj-nn-rgg", "--k", "5", "--j", "3", "--n", "40",
                  "--seed", "5", "--r", "0.3", "--out", comp.str()})
              .code == 0);
    CHECK(count_occurrences(read_file(comp.path()), "<circle") == 40);

    CHECK(invoke({"draw", "--topology", "sym-knn", "--n", "0", "--out", svg.str()}).code == 2);
    CHECK(invoke({"draw", "--topology", "kj-nn", "--k", "5", "--j", "3", "--n", "30", "--r",
                  "0.2", "--out", svg.str()})
              .code == 2);
}
