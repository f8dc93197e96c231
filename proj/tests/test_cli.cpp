#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TENSORDEG_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class Workdir {
 public:
  Workdir() {
    path_ = fs::temp_directory_path() / ("tensordeg_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~Workdir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

const char* kHyperbola = R"({"kind":"quadratic","n":2,"m":1,"matrices":[[["1","0"],["0","-1"]]]})";
const char* kSingular = R"({"kind":"tensor","dims":[2,2,1],"slices":[[["1","2"],["2","4"]]]})";
const char* kRegular = R"({"kind":"tensor","dims":[2,2,1],"slices":[[["1","2"],["3","4"]]]})";

}  // namespace

TEST_CASE("reduce quadratic to tensor", "[cli][reduce]") {
  Workdir w;
  const auto in = w.file("q.json", kHyperbola);
  const auto wit = w.file("u.json", R"({"x":["1","1"]})");
  const auto r = run("reduce --in " + in + " --stage tensor --out " + w.path("t.json") + " --witness " + wit +
                     " --witness-out " + w.path("tw.json"));
  REQUIRE(r.status == 0);
  const auto t = read_json(w.path("t.json"));
  CHECK(t["kind"] == "tensor");
  CHECK(t["dims"] == json({2, 2, 3}));
  const auto report = json::parse(r.out);
  CHECK(report["command"] == "reduce");
  CHECK(report["trace"].size() == 3);
  CHECK(run("verify --in " + w.path("t.json") + " --witness " + w.path("tw.json")).status == 0);
}

TEST_CASE("reduce edge cases", "[cli][reduce]") {
  Workdir w;
  const auto tensor = w.file("t.json", kSingular);
  const auto r = run("reduce --in " + tensor + " --stage tensor --out " + w.path("copy.json"));
  REQUIRE(r.status == 0);
  CHECK(read_json(w.path("copy.json")) == json::parse(kSingular));

  const auto in = w.file("q.json", kHyperbola);
  const auto bad = w.file("bad.json", R"({"x":["1","2"]})");
  const auto f = run("reduce --in " + in + " --stage tensor --witness " + bad);
  CHECK(f.status == 1);
  CHECK(json::parse(f.out)["witness_failure_stage"] == "quadratic");

  CHECK(run("reduce --in " + tensor + " --stage bilinear").status == 2);
  CHECK(run("reduce --in " + w.file("junk.json", "{not json")).status == 2);
}

TEST_CASE("verify exit codes", "[cli][verify]") {
  Workdir w;
  const auto q = w.file("q.json", kHyperbola);
  CHECK(run("verify --in " + q + " --witness " + w.file("a.json", R"({"x":["1","1"]})")).status == 0);
  CHECK(run("verify --in " + q + " --witness " + w.file("b.json", R"({"x":["1","0"]})")).status == 1);
  CHECK(run("verify --in " + q + " --witness " + w.file("c.json", R"({"x":["1"]})")).status == 2);
  CHECK(run("verify --in " + q + " --witness " + w.file("d.json", R"({"x":[1,1]})")).status == 2);

  const auto t = w.file("t.json", R"({"kind":"tensor","dims":[2,2,2],"slices":[[["0","0"],["0","0"]],[["1","0"],["0","-1"]]]})");
  CHECK(run("verify --in " + t + " --witness " + w.file("e.json", R"({"x":["1","1"],"y":["1","1"],"z":["1","0"]})")).status == 0);
  CHECK(run("verify --in " + t + " --witness " + w.file("f.json", R"({"x":["0","0"],"y":["1","1"],"z":["1","0"]})")).status == 1);
}

TEST_CASE("decide exit codes", "[cli][decide]") {
  Workdir w;
  const auto s = run("decide --in " + w.file("s.json", kSingular));
  REQUIRE(s.status == 0);
  const auto report = json::parse(s.out);
  CHECK(report["verdict"]["outcome"] == "feasible_certified");
  CHECK(report["verdict"]["certificate"]["type"] == "witness");
  CHECK(run("decide --in " + w.file("r.json", kRegular)).status == 1);

  // A 4x4x4 tensor is outside every exact path; a tiny search budget gives up.
  json big = {{"kind", "tensor"}, {"dims", {4, 4, 4}}, {"slices", json::array()}};
  for (int k = 0; k < 4; ++k) {
    json slice = json::array();
    for (int i = 0; i < 4; ++i) {
      json row = json::array();
      for (int j = 0; j < 4; ++j) row.push_back(std::to_string((i * 7 + j * 3 + k * 5) % 11 - 5 + (i == j ? 9 : 0)));
      slice.push_back(row);
    }
    big["slices"].push_back(slice);
  }
  const auto u = run("decide --in " + w.file("big.json", big.dump()) + " --restarts 2 --seed 1");
  CHECK(u.status == 3);
  CHECK(json::parse(u.out)["verdict"]["outcome"] == "unknown");

  CHECK(run("decide --in " + w.file("q.json", kHyperbola)).status == 0);
  CHECK(run("decide --in " + w.path("missing.json")).status == 2);
  CHECK(run("decide --in " + w.file("s2.json", kSingular) + " --restarts 0").status == 2);
}

TEST_CASE("hyperdet command", "[cli][hyperdet]") {
  Workdir w;
  const auto r = run("hyperdet --in " + w.file("r.json", kRegular) + " --degree");
  REQUIRE(r.status == 0);
  const auto report = json::parse(r.out);
  CHECK(report["result"]["value"] == "-2");
  CHECK(report["degree"] == 2);
  const auto flat = w.file("f.json", R"({"kind":"tensor","dims":[1,2,2],"slices":[[["1","0"]],[["0","1"]]]})");
  CHECK(json::parse(run("hyperdet --in " + flat).out)["result"]["value"] == "1");
  const auto cube = w.file("c.json", R"({"kind":"tensor","dims":[2,2,2],"slices":[[["1","0"],["0","1"]],[["0","1"],["1","0"]]]})");
  CHECK(run("hyperdet --in " + cube).status == 2);
}

TEST_CASE("gen, complete and demo", "[cli][gen]") {
  Workdir w;
  const auto g = run("gen --degenerate --format 3,2,2 --seed 7 --out " + w.path("t.json") + " --witness " + w.path("w.json"));
  REQUIRE(g.status == 0);
  CHECK(run("verify --in " + w.path("t.json") + " --witness " + w.path("w.json")).status == 0);
  CHECK(json::parse(run("hyperdet --in " + w.path("t.json")).out)["result"]["value"] == "0");
  CHECK(run("gen --random --format 3,2,2").status == 2);  // seed is mandatory

  const auto zero = w.file("z.json", R"({"kind":"tensor","dims":[2,2,2],"slices":[[["0","0"],["0","0"]],[["0","0"],["0","0"]]]})");
  const auto sz = run("complete --in " + zero + " --sz --trials 20 --seed 1");
  REQUIRE(sz.status == 0);
  CHECK(json::parse(sz.out)["sz"]["verdict"] == "all_zero");
  CHECK(run("complete --in " + zero + " --sz --trials 20").status == 2);
  const auto hit = run("complete --in " + zero + " --hit coordinate_ramp");
  CHECK(json::parse(hit.out)["point"].is_null());

  const auto d = run("demo direct_sum --seed 3");
  REQUIRE(d.status == 0);
  const auto demo = json::parse(d.out)["demo"];
  CHECK(demo["tag"] == "direct_sum");
  for (const auto& [name, holds] : demo["checks"].items()) CHECK(holds == true);
  CHECK(run("demo pairwise --n 4 --indices 0 2 3").status == 0);
  CHECK(run("demo vandermonde --n 3 --indices 0 1 0").status == 1);
  CHECK(run("demo pairwise --n 2").status == 2);
  CHECK(run("demo direct_sum").status == 2);
}

TEST_CASE("reports are byte-identical across runs", "[cli][determinism]") {
  Workdir w;
  const auto q = w.file("q.json", kHyperbola);
  for (const std::string args : {"gen --random --format 3,2,2 --seed 11", "gen --degenerate --format 2,3,2 --seed 5",
                                 "demo direct_sum --seed 9", "demo vandermonde --n 5"}) {
    const auto a = run(args), b = run(args);
    REQUIRE(a.status == 0);
    REQUIRE(a.out == b.out);
  }
  const auto t = w.path("t.json");
  REQUIRE(run("gen --random --format 2,2,2 --seed 3 --out " + t).status == 0);
  for (const std::string args : {"decide --in " + t + " --seed 4", "complete --in " + t + " --pit --seed 2",
                                 "complete --in " + t + " --sz --trials 5 --seed 2", "reduce --in " + q + " --stage tensor"}) {
    const auto a = run(args), b = run(args);
    REQUIRE(a.out == b.out);
    REQUIRE_FALSE(a.out.empty());
  }
}
