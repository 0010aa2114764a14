#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sjtheta/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sjtheta::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / "sjtheta_cli_test";
  fs::create_directories(d);
  return d;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

}  // namespace

TEST_CASE("eval") {
  const std::string f = write("i.json", R"({"omega": [[[0, 1]]], "z": [[0]]})");
  const Run r = run({"eval", f, "--tol", "1e-12"});
  REQUIRE(r.code == 0);
  const json j = r.doc();
  CHECK(j["value"][0].get<double>() == doctest::Approx(1.086434811213).epsilon(1e-12));
  CHECK(std::abs(j["value"][1].get<double>()) < 1e-15);
  CHECK(j["tail_bound"].get<double>() <= 1e-12);
  CHECK(j["terms"].get<int>() > 0);
  CHECK(j["reduction_steps"] == 0);

  const Run d = run({"eval", f, "--tol", "1e-12", "--direct"});
  REQUIRE(d.code == 0);
  CHECK(d.doc()["value"] == j["value"]);

  const std::string half = write("half.json", R"({"omega": [[[0, 0.5]]], "z": [[0]]})");
  const json h = run({"eval", half}).doc();
  CHECK(h["reduction_steps"] == 1);
  CHECK(h["steps"][0] == "inversion");
}

TEST_CASE("eval input errors") {
  CHECK(run({"eval", write("bad.json", "{\"omega\": [[")}).code == 2);
  CHECK(run({"eval", write("neg.json", R"({"omega": [[[0, -1]]], "z": [[0]]})")}).code == 2);
  CHECK(run({"eval", write("asym.json",
                           R"({"omega": [[[0, 1], 1], [0, [0, 1]]], "z": [[0, 0]]})")})
            .code == 2);
  CHECK(run({"eval", write("shape.json", R"({"omega": [[[0, 1]]], "z": [[0, 0]]})")}).code == 2);
  CHECK(run({"eval", (scratch() / "missing.json").string()}).code == 2);
  CHECK(run({"eval", write("i2.json", R"({"omega": [[[0, 1]]], "z": [[0]]})"), "--tol", "0"}).code ==
        2);
}

TEST_CASE("reduce") {
  const json a = run({"reduce", write("r1.json", R"({"omega": [[[5, 1]]], "z": [[0]]})")}).doc();
  REQUIRE(a["steps"].size() == 1);
  CHECK(a["steps"][0]["kind"] == "translation");
  CHECK(a["multiplier"] == json::array({1.0, 0.0}));
  CHECK(a["converged"] == true);

  const json b = run({"reduce", write("r2.json", R"({"omega": [[[0, 0.5]]], "z": [[0]]})")}).doc();
  REQUIRE(b["steps"].size() == 1);
  CHECK(b["steps"][0]["kind"] == "inversion");

  const json c = run({"reduce", write("r3.json", R"({"omega": [[[0.2, 1.1]]], "z": [[[0.1, 0.2]]]})")}).doc();
  CHECK(c["steps"].empty());
}

TEST_CASE("verify") {
  const Run t = run({"verify", "--suite", "theorem", "--seed", "7", "--count", "50"});
  CHECK(t.code == 0);
  const json j = t.doc();
  CHECK(j["counts"]["cases"] == 50);
  CHECK(j["counts"]["failed"] == 0);
  CHECK(j["counts"]["errors"] == 0);
  CHECK(j["results"].size() == 50);
  CHECK(j["inputs_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK_FALSE(j.contains("replay"));

  const Run z = run({"verify", "--suite", "cocycle", "--count", "0"});
  CHECK(z.code == 0);
  CHECK(z.doc()["counts"]["cases"] == 0);

  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--suite", "lemma", "--g", "2", "--m", "2"}).code == 2);
  CHECK(run({"verify", "--suite", "action", "--g", "0"}).code == 2);
}

TEST_CASE("every suite passes at its defaults") {
  for (const char* s : {"action", "cocycle", "theorem", "poisson"}) {
    const Run r = run({"verify", "--suite", s, "--count", "10", "--g", "2"});
    CHECK_MESSAGE(r.code == 0, s, ": ", r.err);
  }
  for (const char* s : {"hecke", "lemma"}) {
    const Run r = run({"verify", "--suite", s, "--count", "10"});
    CHECK_MESSAGE(r.code == 0, s, ": ", r.err);
  }
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args = {"verify", "--suite", "action", "--g", "2", "--count", "20",
                                         "--seed", "3"};
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  const Run c = run({"verify", "--suite", "action", "--g", "2", "--count", "20", "--seed", "4"});
  CHECK(a.out != c.out);
}

TEST_CASE("failures replay to the same failures") {
  // a Poisson tolerance below rounding makes some cases fail
  const std::string failures = (scratch() / "failures.json").string();
  const Run r = run({"verify", "--suite", "poisson", "--count", "20", "--tol", "1e-17",
                     "--failures", failures});
  REQUIRE(r.code == 4);
  const json j = r.doc();
  REQUIRE(j.contains("replay"));
  const auto failed = j["counts"]["failed"].get<int>();
  CHECK(failed > 0);

  const Run again = run({"verify", "--replay", failures});
  CHECK(again.code == 4);
  const json k = again.doc();
  CHECK(k["counts"]["cases"] == failed);
  CHECK(k["counts"]["failed"] == failed);
  std::vector<json> before, after;
  for (const auto& x : j["results"])
    if (x["status"] == "fail") before.push_back(x);
  for (const auto& x : k["results"]) after.push_back(x);
  CHECK(before == after);

  // the full report is accepted too
  const std::string report = write("report.json", r.out);
  CHECK(run({"verify", "--replay", report}).doc()["results"] == k["results"]);

  CHECK(run({"verify", "--replay", write("junk.json", "{\"x\": 1}")}).code == 2);
  CHECK(run({"verify", "--suite", "poisson", "--replay", failures}).code == 2);
}

TEST_CASE("hecke") {
  const Run r = run({"hecke", "--gamma", "1", "0", "4", "1", "--tau", "0", "1", "--tol", "1e-8"});
  CHECK(r.code == 0);
  CHECK(r.doc()["ok"] == true);
  CHECK(run({"hecke", "--gamma", "1", "0", "2", "1", "--tau", "0", "1"}).code == 2);
  CHECK(run({"hecke", "--gamma", "1", "0", "4", "1", "--tau", "0", "-1"}).code == 2);
  CHECK(run({"hecke", "--gamma", "1", "0", "4", "--tau", "0", "1"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Run h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
}
