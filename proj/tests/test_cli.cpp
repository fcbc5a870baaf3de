#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"
#include "ultra/json_io.hpp"
#include "ultra/ugh.hpp"

using namespace ultra;
using namespace ultra::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("ultra_cli_" + std::to_string(counter_++) + "_" +
                                                std::to_string(reinterpret_cast<std::uintptr_t>(this)))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
  }
  std::string write(const std::string& name, const UltrametricSpace& s) const {
    return write(name, json_io::dump(json_io::to_json(s)));
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("validate reports the violated axiom with exit 1") {
  Scratch tmp;
  const auto bad = tmp.write("bad.json", R"({"points":["a","b","c"],"dist":[["0","1","3"],["1","0","2"],["3","2","0"]]})");
  const auto r = run({"validate", bad});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("TriangleViolation(a, c, b)") != std::string::npos);
}

TEST_CASE("ugh examples") {
  Scratch tmp;
  const auto a = tmp.write("a.json", isosceles());
  const auto half = tmp.write("half.json", two_point_space(q("1/2")));
  const auto tq = tmp.write("tq.json", two_point_space(q("3/4")));

  auto same = run({"ugh", a, a});
  CHECK(same.code == 0);
  CHECK(json_io::parse(same.out, "out")["value"] == "0");

  auto r = run({"ugh", half, tq, "--oracle", "--certificate", tmp.path("cert.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "{\n  \"scale_witness\": \"3/4\",\n  \"value\": \"3/4\"\n}\n");
  const auto cert = json_io::parse(slurp(tmp.path("cert.json")), "cert");
  CHECK(cert["achieved"] == "3/4");
  CHECK(json_io::space_from_json(cert["z"]).size() == 4);
}

TEST_CASE("usage errors exit 2") {
  Scratch tmp;
  const auto a = tmp.write("a.json", isosceles());
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"quotient", a}).code == 2);
  CHECK(run({"quotient", a, "--t", "abc"}).code == 2);
  CHECK(run({"net", a, "--eps", "1/0"}).code == 2);
  CHECK(run({"ugh", a}).code == 2);
  CHECK(run({"ugh", a, a, a, "--oracle"}).code == 2);
  CHECK(run({"gen", "random", "--n", "3", "--k", "0,,1", "--seed", "1"}).code == 2);
  CHECK(run({"gen"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("domain errors exit 1") {
  Scratch tmp;
  const auto a = tmp.write("a.json", isosceles());
  const auto big = tmp.write("big.json", random_space(5, SpectrumConstraint(parse_all({"0", "1"})), 3));
  CHECK(run({"validate", tmp.path("missing.json")}).code == 1);
  CHECK(run({"validate", tmp.write("junk.json", "{not json")}).code == 1);
  CHECK(run({"net", a, "--eps", "0"}).code == 1);
  CHECK(run({"hausdorff", a, "--a", "a,z", "--b", "b"}).code == 1);
  CHECK(run({"amalgam", a, a, "--s", "1"}).code == 1);
  CHECK(run({"ugh", big, a, "--oracle"}).code == 1);
  CHECK(run({"gen", "two-point", "--c", "0"}).code == 1);
}

TEST_CASE("every verb produces output accepted by validate") {
  Scratch tmp;
  const auto a = tmp.write("a.json", isosceles());
  const auto pair = tmp.write("pair.json", make_space({"u", "v"}, {"2"}));
  const auto spec = tmp.write("glue.json", R"({"x1": {"points": ["a", "x"], "dist": [["0", "1"], ["1", "0"]]},
      "x2": {"points": ["a", "y"], "dist": [["0", "2"], ["2", "0"]]}, "identify": [["a", "a"]]})");
  const auto metric = tmp.write("metric.json", R"({"points":["a","b","c"],"dist":[[0,1,2],[1,0,1],[2,1,0]]})");

  const std::vector<std::vector<std::string>> producers{
      {"validate", a},
      {"glue", spec},
      {"amalgam", a, pair, "--s", "2"},
      {"cluster", "--input", metric},
      {"gen", "two-point", "--c", "1/2"},
      {"gen", "crowd", "--space", pair, "--base", "u", "--c", "1/4", "--n", "3"},
      {"gen", "cauchy", "--depth", "4"},
      {"gen", "random", "--n", "6", "--k", "0,1/4,1/2,1", "--seed", "42"},
  };
  for (const auto& args : producers) {
    CAPTURE(args[0]);
    const auto r = run(args);
    REQUIRE(r.code == 0);
    const auto v = run({"validate", tmp.write("emitted.json", r.out)});
    CHECK(v.code == 0);
    CHECK(v.out == r.out);
    CHECK(run(args).out == r.out);
  }

  const auto q = run({"quotient", a, "--t", "1"});
  REQUIRE(q.code == 0);
  const auto quotient = json_io::parse(q.out, "q")["quotient"];
  CHECK(run({"validate", tmp.write("q.json", json_io::dump(quotient))}).code == 0);

  const auto d = run({"validate", a, "--emit-dendrogram"});
  REQUIRE(d.code == 0);
  const auto from_tree = run({"validate", tmp.write("tree.json", d.out)});
  CHECK(from_tree.code == 0);
}

TEST_CASE("label lists inline, as JSON and from files") {
  Scratch tmp;
  const auto a = tmp.write("a.json", isosceles());
  const auto labels = tmp.write("labels.json", R"(["b"])");
  const std::string expected = "{\n  \"value\": \"2\"\n}\n";
  CHECK(run({"hausdorff", a, "--a", "a,c", "--b", "b"}).out == expected);
  CHECK(run({"hausdorff", a, "--a", R"(["a","c"])", "--b", "@" + labels}).out == expected);
}

TEST_CASE("-o writes the result to a file") {
  Scratch tmp;
  const auto r = run({"gen", "two-point", "--c", "1/2", "-o", tmp.path("x.json")});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(json_io::space_from_json(json_io::parse(slurp(tmp.path("x.json")), "x")).distance(0, 1) == q("1/2"));
}

TEST_CASE("pairwise matrix is independent of --jobs") {
  Scratch tmp;
  std::vector<std::string> files;
  const SpectrumConstraint k(parse_all({"0", "1/4", "1/2", "1"}));
  for (int i = 0; i < 6; ++i) files.push_back(tmp.write("s" + std::to_string(i) + ".json", random_space(5, k, i)));
  std::vector<std::string> serial{"ugh"};
  serial.insert(serial.end(), files.begin(), files.end());
  std::vector<std::string> parallel = serial;
  parallel.insert(parallel.end(), {"--jobs", "4"});
  const auto one = run(serial);
  const auto four = run(parallel);
  REQUIRE(one.code == 0);
  CHECK(one.out == four.out);
  const auto m = json_io::parse(one.out, "m")["ugh"];
  CHECK(m[1][2] == ugh_distance(random_space(5, k, 1), random_space(5, k, 2)).value.str());
}

TEST_CASE("in-uk reports membership and the offending pair") {
  Scratch tmp;
  const auto half = tmp.write("half.json", two_point_space(q("1/2")));
  const auto r = run({"in-uk", half, "--k", "0,1/4"});
  CHECK(r.code == 0);
  const auto j = json_io::parse(r.out, "r");
  CHECK(j["member"] == false);
  CHECK(j["witness"]["value"] == "1/2");
  CHECK(json_io::parse(run({"in-uk", half, "--k", "[\"0\",\"1/2\"]"}).out, "r")["member"] == true);
}

TEST_SUITE_END();
