#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "dblcat/io.hpp"

using dblcat::Json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;

  Json json() const { return dblcat::parse_json(out, "stdout"); }
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = dblcat::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Result pipe(const std::vector<std::string>& first, const std::vector<std::string>& second) {
  const Result a = run(first);
  REQUIRE(a.code == 0);
  return run(second, a.out);
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"homology", "--ring", "r"}).code == 2);
  CHECK(run({"fixture", "nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("domain errors exit with 1") {
  const Result bad = run({"validate"}, "{\"objects\": [");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("malformed JSON") != std::string::npos);
  CHECK(run({"homology"}, "{\"foo\": 1}").code == 1);
  CHECK(run({"validate", "/nonexistent/file.json"}).code == 1);
}

TEST_CASE("fixtures and validation") {
  const Result spine = run({"fixture", "spine", "--n", "2"});
  REQUIRE(spine.code == 0);
  CHECK(spine.json()["A0"]["objects"].size() == 5);
  const Result ok = run({"validate"}, spine.out);
  CHECK(ok.code == 0);
  CHECK(ok.json()["valid"] == true);
  CHECK(ok.json()["kind"] == "double category");
  for (const std::string kind : {"interchange", "left-unit", "right-unit", "source", "target"}) {
    CAPTURE(kind);
    const Result r = pipe({"fixture", "corrupted", "--kind", kind}, {"validate"});
    CHECK(r.code == 1);
    CHECK(r.json()["valid"] == false);
    CHECK_FALSE(r.json()["violations"].empty());
  }
}

TEST_CASE("nerve and homology pipelines") {
  const Result h = pipe({"csd2", "--shape", "simplex", "--k", "2"}, {"homology", "--max-dim", "2"});
  REQUIRE(h.code == 0);
  const Json b = h.json()["betti"];
  CHECK(b[0] == 1);
  CHECK(b[1] == 0);
  CHECK(b[2].is_null());
  const Result n = pipe({"fixture", "chain", "--n", "2"}, {"nerve", "--max-dim", "2"});
  REQUIRE(n.code == 0);
  CHECK(n.json()["levels"][2].size() == 10);
  const Result z = pipe({"fixture", "shape", "--shape", "boundary", "--k", "2", "--max-dim", "2"},
                        {"homology", "--ring", "z"});
  REQUIRE(z.code == 0);
  CHECK(z.json()["betti"][1] == 1);
}

TEST_CASE("subdivision, Ex and diagonal commands") {
  const Result s = pipe({"fixture", "shape", "--shape", "simplex", "--k", "1", "--max-dim", "1"}, {"sd"});
  REQUIRE(s.code == 0);
  CHECK(s.json()["nondegenerate"] == Json::array({3, 2}));
  const Result e = run({"ex", "--shape", "simplex", "--k", "0", "--max-dim", "2"});
  REQUIRE(e.code == 0);
  CHECK(e.json()["levels"][2].size() == 1);
  const Result d = pipe({"fixture", "box", "--n", "1", "--m", "1"}, {"dnerve", "--max-dim", "1"});
  REQUIRE(d.code == 0);
  const Result g = pipe({"fixture", "box", "--n", "1", "--m", "1"}, {"diag", "--max-dim", "2"});
  REQUIRE(g.code == 0);
  CHECK(g.json()["trunc"] == 2);
}

TEST_CASE("pushout commands") {
  const Result spec = run({"fixture", "counterexample"});
  REQUIRE(spec.code == 0);
  const Result po = run({"pushout-dbl"}, spec.out);
  REQUIRE(po.code == 0);
  CHECK(po.json()["A0"]["objects"].size() == 3);
  const Result v = run({"verify-nerve", "--max-dim", "3"}, spec.out);
  REQUIRE(v.code == 0);
  CHECK(v.json()["all_isomorphic"] == true);
  CHECK(v.json()["levels"].size() == 4);
}

TEST_CASE("Grothendieck and witness commands") {
  const Result g = pipe({"fixture", "completeness-diagram"}, {"groth"});
  REQUIRE(g.code == 0);
  CHECK(g.json()["A0"]["objects"].size() == 10);
  const Result w = pipe({"fixture", "counterexample-leg"}, {"witness", "--max-dim", "2"});
  REQUIRE(w.code == 0);
  CHECK(w.json()["passes"] == true);
  const Result f = pipe({"fixture", "csd2-inclusion", "--shape", "boundary", "--k", "2"}, {"witness", "--max-dim", "2"});
  REQUIRE(f.code == 0);
  CHECK(f.json()["passes"] == false);
  CHECK(f.json()["first_failure"] == 1);
}

TEST_CASE("export re-emits canonically and as DOT") {
  const Result c = run({"fixture", "chain", "--n", "1"});
  const Result again = run({"export"}, c.out);
  CHECK(again.out == c.out);
  const Result dot = run({"export", "--format", "dot"}, c.out);
  CHECK(dot.out.find("digraph") != std::string::npos);
}

TEST_CASE("output is byte identical across runs") {
  const std::vector<std::vector<std::string>> commands = {
      {"fixture", "spine", "--n", "3"},
      {"fixture", "completeness-diagram"},
      {"fixture", "counterexample"},
      {"csd2", "--shape", "boundary", "--k", "3"},
      {"sd", "--shape", "horn", "--k", "2", "--t", "1"},
      {"ex", "--shape", "boundary", "--k", "2"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd[0]);
    const Result a = run(cmd), b = run(cmd);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("time") == std::string::npos);
  }
  const std::vector<std::vector<std::string>> consumers = {{"pushout-dbl"}, {"verify-nerve", "--max-dim", "2"},
                                                           {"pushout-dbl", "--format", "dot"}};
  const Result spec = run({"fixture", "counterexample"});
  for (const auto& cmd : consumers) {
    CAPTURE(cmd[0]);
    const Result a = run(cmd, spec.out), b = run(cmd, spec.out);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("spine fixture as JSON") {
  const Result r = run({"fixture", "spine", "--n", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const Result v = run({"validate"}, r.out);
  CHECK(v.json()["kind"] == "double category");
  CHECK(v.json()["valid"] == true);
  CHECK(r.json()["A0"]["objects"].size() == 5);
}
