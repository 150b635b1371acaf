#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tcrit/cli.hpp"
#include "tcrit/report.hpp"

using namespace tcrit;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(TCRIT_DATA_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("validate exit codes", "[cli]") {
  auto ok = run({"validate", data("octahedron.json")});
  CHECK(ok.code == kExitPass);
  CHECK(contains(ok.out, "verdict: OK"));

  auto mixed = run({"validate", data("mixed.json")});
  CHECK(mixed.code == kExitUsage);
  CHECK(contains(mixed.err, "NonPure"));

  auto bowtie = run({"validate", data("bowtie.json")});
  CHECK(bowtie.code == kExitFail);
  CHECK(contains(bowtie.out, "disconnected link at (0)"));

  CHECK(run({"validate", data("missing.json")}).code == kExitIo);
  CHECK(run({"validate", "@octahedron"}).code == kExitPass);
  CHECK(run({"validate", "@nonsense"}).code == kExitUsage);
}

TEST_CASE("check exit codes", "[cli]") {
  auto zuk = run({"check", data("octahedron.json"), "--criterion", "zuk"});
  CHECK(zuk.code == kExitPass);
  CHECK(contains(zuk.out, "margin=1  PASS"));
  CHECK(run({"check", "@octahedron", "--criterion", "thm1"}).code == kExitPass);
  CHECK(run({"check", "@octahedron", "--criterion", "bs", "--eps", "0.6"}).code == kExitFail);
  CHECK(run({"check", "@octahedron", "--criterion", "general", "--k", "1", "--l", "2", "--eps", "0.5"}).code == kExitPass);
  CHECK(run({"check", data("simplex4.json"), "--criterion", "general", "--k", "1", "--l", "3"}).code ==
        kExitNotApplicable);
  CHECK(run({"check", data("bowtie.json"), "--criterion", "zuk"}).code == kExitNotApplicable);
  CHECK(run({"check", data("triangle.json"), "--criterion", "thm2", "--cos-table", data("cos_point4.json")}).code ==
        kExitPass);
  CHECK(run({"check", "@octahedron", "--criterion", "nope"}).code == kExitUsage);
  CHECK(run({"check", data("simplex4.json"), "--criterion", "zuk"}).code == kExitUsage);
}

TEST_CASE("general agrees with thm1 on 2-complexes", "[cli]") {
  for (const char* src : {"@octahedron", "@triangle", "@heawood-cone", "@lyons"}) {
    INFO(src);
    auto a = run({"check", src, "--criterion", "thm1"});
    auto b = run({"check", src, "--criterion", "general", "--k", "1", "--l", "2"});
    CHECK(a.code == b.code);
  }
}

TEST_CASE("polygon command", "[cli]") {
  auto six = run({"polygon", "--m", "6", "--s", "5", "--t", "5"});
  CHECK(six.code == kExitPass);
  CHECK(contains(six.out, "lambda: 0.354502776"));
  CHECK(contains(six.out, "lambda_bar (n=2, k=1): -0.145497224"));
  auto two = run({"polygon", "--m", "2", "--s", "9", "--t", "3"});
  CHECK(contains(two.out, "lambda: 1\n"));
  auto five = run({"polygon", "--m", "5", "--s", "2"});
  CHECK(five.code == kExitUsage);
  CHECK(contains(five.err, "BadGonality"));
}

TEST_CASE("scan command", "[cli]") {
  auto h = run({"scan", "--labels", "3,3,3", "--qmax", "10"});
  CHECK(h.code == kExitPass);
  CHECK(contains(h.out, "minimal q (thm1): 2"));
  CHECK(contains(h.out, "minimal q (zuk): 2"));

  auto s = run({"scan", "--labels", "2,8,8", "--qmax", "20"});
  CHECK(contains(s.out, "minimal q (thm1): 8"));
  CHECK(contains(s.out, "minimal q (zuk): 12"));

  auto l = run({"scan", "--labels", "2,3,6", "--qmax", "10"});
  CHECK(contains(l.out, "\n5  FAIL  PASS  "));

  CHECK(run({"scan", "--labels", "2,5,6", "--qmax", "10"}).code == kExitUsage);
  CHECK(run({"scan", "--labels", "2,3", "--qmax", "10"}).code == kExitUsage);
}

TEST_CASE("lyons command", "[cli]") {
  auto r = run({"lyons"});
  CHECK(r.code == kExitPass);
  CHECK(contains(r.out, "zuk: lambda_bar_2 + lambda_bar_3 = -0.0181752"));
  CHECK(contains(r.out, "thm1: sum margin = 0.481824779, product margin = 0.20454251"));
  CHECK(contains(r.out, "verdict: PASS"));

  auto j = nlohmann::json::parse(run({"lyons", "--format", "json"}).out);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["zuk"]["verdict"] == "FAIL");
  CHECK(j["thm1"]["verdict"] == "PASS");
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"polygon", "--m", "3"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("machine-readable reports round-trip byte for byte", "[cli][property]") {
  const std::vector<std::vector<std::string>> cases{
      {"check", "@octahedron", "--criterion", "zuk", "--format", "json"},
      {"check", "@lyons", "--criterion", "thm1", "--format", "json"},
      {"check", "@lyons", "--criterion", "general", "--format", "json"},
      {"check", "@heawood-cone", "--criterion", "bs", "--eps", "0.01", "--format", "json"},
      {"check", data("simplex4.json"), "--criterion", "general", "--k", "1", "--l", "3", "--extension", "--format", "json"},
      {"check", "@octahedron", "--criterion", "thm2", "--restarts", "5", "--format", "json"},
  };
  for (const auto& args : cases) {
    auto r = run(args);
    const auto parsed = report_from_json(nlohmann::json::parse(r.out));
    CHECK(to_json(parsed).dump(2) + "\n" == r.out);
  }
}

TEST_CASE("identical inputs give identical bytes", "[cli][property]") {
  const std::vector<std::vector<std::string>> cases{
      {"check", "@octahedron", "--criterion", "thm2", "--restarts", "10", "--seed", "42", "--format", "json"},
      {"check", data("torus7.json"), "--criterion", "general", "--format", "json"},
      {"scan", "--labels", "2,4,6", "--qmax", "15", "--format", "json"},
      {"lyons"},
  };
  for (const auto& args : cases) {
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
