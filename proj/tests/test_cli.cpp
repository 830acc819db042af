#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "forbid/cli.hpp"
#include "forbid/layout_io.hpp"
#include "forbid/overlap_scan.hpp"
#include "support.hpp"

using namespace forbid;
using namespace forbid::testing;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("forbid_test_" + name)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& file) const { return (path / file).string(); }
};

int run(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

Layout crowded(std::uint64_t seed, std::size_t n) {
    SplitMix64 rng(seed);
    return random_layout(n, rng, 0.9);
}

}  // namespace

TEST_CASE("remove keeps an overlap-free layout") {
    TempDir dir("remove_free");
    const Layout l = layout_of({box("a", 0, 0), box("b", 3, 0), box("c", 0, 3)});
    write_file(dir / "in.json", serialize_layout(l));
    CHECK(run({"remove", "--in", dir / "in.json", "--out", dir / "out.json"}) == kExitOk);
    CHECK(load_layout(dir / "out.json") == l);
}

TEST_CASE("remove with every algorithm yields overlap-free output and valid metrics") {
    TempDir dir("remove_algos");
    const Layout l = crowded(1, 40);
    REQUIRE(has_overlap(l));
    write_file(dir / "in.json", serialize_layout(l));
    for (const std::string algo : {"forbid", "forbid-prime", "scaling"}) {
        const std::string out = dir / (algo + ".json");
        CHECK(run({"remove", "--in", dir / "in.json", "--out", out, "--algorithm", algo, "--report",
                   dir / (algo + ".report.json")}) == kExitOk);
        CHECK(brute_force_overlaps(load_layout(out)).empty());
        const auto report = nlohmann::json::parse(read_file(dir / (algo + ".report.json")));
        CHECK(report["final_overlaps"] == 0);
        CHECK(report["metrics"].is_object());
        CHECK(run({"metrics", "--initial", dir / "in.json", "--final", out, "--out", dir / "m.json"}) == kExitOk);
    }
}

TEST_CASE("remove is byte-for-byte reproducible") {
    TempDir dir("remove_repro");
    write_file(dir / "in.json", serialize_layout(crowded(2, 50)));
    for (int i = 0; i < 2; ++i) {
        const std::string s = std::to_string(i);
        CHECK(run({"remove", "--in", dir / "in.json", "--out", dir / ("o" + s), "--trace", dir / ("t" + s),
                   "--report", dir / ("r" + s), "--seed", "9", "--k", "1.5"}) == kExitOk);
    }
    CHECK(read_file(dir / "o0") == read_file(dir / "o1"));
    CHECK(read_file(dir / "t0") == read_file(dir / "t1"));
    CHECK(read_file(dir / "r0") == read_file(dir / "r1"));
    CHECK(read_file(dir / "t0").rfind("pass,iteration,stress,overlaps,scale,total_movement\n", 0) == 0);
}

TEST_CASE("metrics of identical layouts are optimal") {
    TempDir dir("metrics_same");
    write_file(dir / "a.json", serialize_layout(crowded(3, 30)));
    std::string out;
    CHECK(run({"metrics", "--initial", dir / "a.json", "--final", dir / "a.json"}, &out) == kExitOk);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["oo_nni"] == 0.0);
    CHECK(j["sp_ch_a"] == 1.0);
    CHECK(j["gs_bb_iar"] == 1.0);
    CHECK(j["nm_dm_imse"] == 0.0);
    CHECK(j["el_rsdd"] == 0.0);
}

TEST_CASE("render writes an SVG") {
    TempDir dir("render");
    write_file(dir / "a.json", serialize_layout(crowded(4, 20)));
    CHECK(run({"render", "--in", dir / "a.json", "--out", dir / "a.svg"}) == kExitOk);
    CHECK(read_file(dir / "a.svg").find("<svg") != std::string::npos);
}

TEST_CASE("bench tabulates every file and algorithm") {
    TempDir dir("bench");
    fs::create_directories(dir.path / "layouts");
    for (int i = 0; i < 3; ++i)
        write_file((dir.path / "layouts" / ("g" + std::to_string(i) + ".json")).string(),
                   serialize_layout(crowded(10 + i, 25)));
    CHECK(run({"bench", "--dir", (dir.path / "layouts").string(), "--out", dir / "bench.csv", "--algorithms",
               "forbid,scaling"}) == kExitOk);
    const std::string csv = read_file(dir / "bench.csv");
    std::size_t lines = 0;
    for (const char c : csv) lines += c == '\n';
    CHECK(lines == 7);
    CHECK(csv.rfind("graph,N,E,O,algorithm,oo_nni,sp_ch_a,gs_bb_iar,nm_dm_imse,el_rsdd,time_ms,final_scale\n", 0) ==
          0);
}

TEST_CASE("exit codes") {
    TempDir dir("exit_codes");
    CHECK(run({}) == kExitUsage);
    CHECK(run({"remove", "--in", dir / "x.json"}) == kExitUsage);
    CHECK(run({"remove", "--in", dir / "x.json", "--out", dir / "y.json", "--algorithm", "prism"}) == kExitUsage);
    std::string err;
    CHECK(run({"remove", "--in", dir / "missing.json", "--out", dir / "y.json"}, nullptr, &err) == kExitInput);
    CHECK(err.find("missing.json") != std::string::npos);
    write_file(dir / "dup.json",
               R"({"nodes":[{"id":"a","x":0,"y":0,"w":1,"h":1},{"id":"a","x":0,"y":0,"w":1,"h":1}]})");
    CHECK(run({"remove", "--in", dir / "dup.json", "--out", dir / "y.json"}, nullptr, &err) == kExitInput);
    CHECK(err.find("duplicate id") != std::string::npos);
    CHECK(run({"--help"}) == kExitOk);
}
