#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "gowers/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "gowers");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = gowers::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("gowers-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string write(const std::string& name, const std::string& body) const {
        const auto p = path_ / name;
        std::ofstream(p) << body;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("mu") {
    CHECK(run({"mu", "--n", "2", "--k", "1"}).out == "E=8 |A|=2 mu=1/2 (0.5)\n");
    CHECK(run({"mu", "--n", "4", "--k", "0"}).out == "E=1 |A|=1 mu=1/16 (0.0625)\n");
    CHECK(run({"mu", "--n", "4", "--k", "2"}).out == "E=168 |A|=6 mu=7/24 (0.2916666666666667)\n");
    CHECK(run({"mu", "--n", "4", "--k", "5"}).code == 2);
    CHECK(run({"mu", "--n", "4"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("energy") {
    TempDir dir;
    const auto set = dir.write("s31.txt", "n=3\n001\n010\n100\n");
    const auto r = run({"energy", "--set", set});
    CHECK(r.code == 0);
    CHECK(r.out == "E=21 |A|=3\n");

    const auto bad = dir.write("bad.txt", "n=3\n001\n0101\n");
    const auto b = run({"energy", "--set", bad});
    CHECK(b.code == 2);
    CHECK(b.err.find("line 3") != std::string::npos);

    CHECK(run({"energy", "--set", dir.file("missing.txt")}).code == 2);
}

TEST_CASE("transform") {
    TempDir dir;
    const auto fn = dir.write("ind.txt", "n=2\n01 1\n10 1\n");
    const auto r = run({"transform", "--fn", fn});
    CHECK(r.code == 0);
    CHECK(r.out.find("n=2\n00 0.5\n11 -0.5\n") != std::string::npos);

    const auto spec = dir.write("spec.txt", "n=2\n00 0.5\n11 -0.5\n");
    const auto inv = run({"transform", "--fn", spec, "--inverse"});
    CHECK(inv.code == 0);
    CHECK(inv.out.find("n=2\n01 1\n10 1\n") != std::string::npos);

    const auto bad = dir.write("bad.txt", "n=2\n01 1\n01 2\n");
    const auto b = run({"transform", "--fn", bad});
    CHECK(b.code == 2);
    CHECK(b.err.find("line 3") != std::string::npos);
}

TEST_CASE("compress") {
    TempDir dir;
    const auto fn = dir.write("f.txt", "n=2\n01 1\n");
    const auto csv = dir.file("trace.csv");
    const auto r = run({"compress", "--fn", fn, "--trace", csv});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# converged=true sweeps=2", 0) == 0);
    CHECK(r.out.find("01 0.70710678118654757\n10 0.70710678118654757\n") != std::string::npos);
    CHECK(slurp(csv).rfind("sweep,pair_i,pair_j,max_change,u2_fourth,l2\n1,1,2,", 0) == 0);

    const auto big = dir.write("g.txt", "n=5\n00011 1\n00101 0.3\n11000 0.7\n");
    CHECK(run({"compress", "--fn", big, "--max-sweeps", "1"}).code == 1);

    const auto one = dir.write("one.txt", "n=1\n1 1\n");
    CHECK(run({"compress", "--fn", one}).code == 2);
}

TEST_CASE("optimize") {
    TempDir dir;
    const auto out = dir.file("best.txt");
    const auto r = run({"optimize", "--n", "4", "--k", "2", "--starts", "8", "--seed", "3", "--out", out});
    CHECK(r.code == 0);
    CHECK(r.out.find("within bound") != std::string::npos);
    CHECK(slurp(out).rfind("n=4\n", 0) == 0);

    const auto set = dir.write("s.txt", "n=3\n001\n");
    const auto s = run({"optimize", "--set", set, "--starts", "2"});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("best_ratio=0.125 ", 0) == 0);

    CHECK(run({"optimize", "--starts", "2"}).code == 2);
    CHECK(run({"optimize", "--set", set, "--n", "3", "--k", "1"}).code == 2);
}

TEST_CASE("verify") {
    TempDir dir;
    const auto a = run({"verify", "--n-max", "4", "--trials", "2", "--seed", "7"});
    CHECK(a.code == 0);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["pass"] == true);
    CHECK(j["cells"].size() == 15);
    CHECK(a.err.find("n=4 k=2 mu=7/24") != std::string::npos);

    const auto path = dir.file("report.json");
    const auto b = run({"verify", "--n-max", "4", "--trials", "2", "--seed", "7", "--out", path});
    CHECK(b.code == 0);
    CHECK(b.out.empty());
    CHECK(slurp(path) == a.out);

    CHECK(run({"verify", "--n-max", "15"}).code == 2);
}

TEST_CASE("lemma-test, duality-test and signed-search") {
    TempDir dir;
    const auto l = run({"lemma-test", "--n", "3", "--k", "1", "--trials", "5"});
    CHECK(l.code == 0);
    CHECK(nlohmann::json::parse(l.out)["pass"] == true);

    const auto set = dir.write("s.txt", "n=3\n001\n010\n100\n");
    const auto d = run({"duality-test", "--n", "3", "--set", set, "--trials", "5"});
    CHECK(d.code == 0);
    CHECK(nlohmann::json::parse(d.out)["pass"] == true);
    CHECK(run({"duality-test", "--n", "4", "--set", set}).code == 2);

    const auto s = run({"signed-search", "--n", "3", "--k", "1", "--trials", "5"});
    CHECK(s.code == 0);
    CHECK(nlohmann::json::parse(s.out)["steps_checked"] == 15);
}
