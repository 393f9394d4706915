#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrspan/constructions.hpp"
#include "ehrspan/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string stdout_text;
};

std::string binary_path() {
  const char* env = std::getenv("EHRSPAN_CLI");
  REQUIRE_MESSAGE(env != nullptr, "EHRSPAN_CLI must point at the ehrspan binary");
  return env;
}

// Run the tool through the shell, capturing stdout; stderr is dropped so
// --human output cannot leak into the captured stream.
CliResult run_cli(const std::string& args) {
  std::string cmd = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return CliResult{code, std::move(out)};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/ehrspan_cli_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

std::string reeve2_file() {
  return write_temp("reeve2.json",
                    ehrspan::polytope_to_json(ehrspan::reeve_simplex(2)).dump());
}

json parse_envelope(const CliResult& r) {
  json j = json::parse(r.stdout_text);
  REQUIRE(j.contains("tool_version"));
  REQUIRE(j.contains("command"));
  REQUIRE(j.contains("input_digest"));
  REQUIRE(j.contains("elapsed_ms"));
  REQUIRE(j.contains("results"));
  return j;
}

}  // namespace

TEST_CASE("hstar emits a report envelope") {
  CliResult r = run_cli("hstar " + reeve2_file());
  CHECK(r.exit_code == 0);
  json j = parse_envelope(r);
  CHECK(j["command"] == "hstar");
  CHECK(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK(j["results"]["hstar"] == json::array({1, 0, 1, 0}));
  CHECK(j["results"]["degree"] == 2);
  CHECK(j["results"]["normalized_volume"] == 2);
}

TEST_CASE("reports are deterministic modulo elapsed_ms") {
  std::string file = reeve2_file();
  json a = json::parse(run_cli("spanning " + file).stdout_text);
  json b = json::parse(run_cli("spanning " + file).stdout_text);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
  CHECK(a["results"]["index"] == 2);
  CHECK(a["results"]["spanning"] == false);
  CHECK(a["results"]["snf_diagonal"] == json::array({1, 1, 1, 2}));
}

TEST_CASE("gen emits a bare polytope consumable by every analyzer") {
  CliResult gen = run_cli("gen --family reeve_simplex --params 2");
  CHECK(gen.exit_code == 0);
  json p = json::parse(gen.stdout_text);
  CHECK(p.contains("dim"));
  CHECK(p.contains("vertices"));
  CHECK(!p.contains("results"));  // bare payload, not an envelope

  std::string file = write_temp("gen_roundtrip.json", gen.stdout_text);
  for (const char* sub : {"hstar", "spanning", "coarsen", "idp", "check"}) {
    CliResult r = run_cli(std::string(sub) + " " + file);
    CHECK(r.exit_code == 0);
    CHECK(json::accept(r.stdout_text));
  }
}

TEST_CASE("gen applies the dilation flag") {
  CliResult r = run_cli("gen --family cube --params 2 --dilate 3");
  json p = json::parse(r.stdout_text);
  // [0,3]^2 corners
  CHECK(p["vertices"].size() == 4);
  CHECK(p["vertices"][3] == json::array({3, 3}));
}

TEST_CASE("stdin is accepted via dash") {
  std::string file = reeve2_file();
  CliResult r = run_cli("hstar - < " + file);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.stdout_text)["results"]["hstar"] == json::array({1, 0, 1, 0}));
}

TEST_CASE("coarsen pipes back into hstar") {
  std::string file = reeve2_file();
  CliResult c = run_cli("coarsen " + file);
  CHECK(c.exit_code == 0);
  std::string coarse = write_temp("coarse.json", c.stdout_text);
  json j = json::parse(run_cli("hstar " + coarse).stdout_text);
  CHECK(j["results"]["hstar"] == json::array({1, 0, 0, 0}));
}

TEST_CASE("idp reports the undecomposable point without failing the run") {
  CliResult r = run_cli("idp " + reeve2_file());
  CHECK(r.exit_code == 0);  // a non-IDP polytope is a finding, not an error
  json j = parse_envelope(r);
  CHECK(j["results"]["is_idp"] == false);
  CHECK(j["results"]["counterexample"]["k"] == 2);
  CHECK(j["results"]["counterexample"]["point"] == json::array({1, 1, 1}));

  CliResult deeper = run_cli("idp " + reeve2_file() + " --kmax 4");
  CHECK(json::parse(deeper.stdout_text)["results"]["counterexample"]["k"] == 2);
}

TEST_CASE("check flags the window violation with exit 1") {
  using namespace ehrspan;
  std::string file = write_temp(
      "join.json", polytope_to_json(join(segment(3), reeve_simplex(2))).dump());

  CliResult r = run_cli("check " + file + " --family strong");
  CHECK(r.exit_code == 1);
  json j = parse_envelope(r);
  REQUIRE(j["results"].is_array());
  const json& rep = j["results"][0];
  CHECK(rep["family"] == "strong");
  CHECK(rep["pass"] == false);
  // the join is not spanning, which is exactly why the bound can fail
  CHECK(rep["spanning"] == false);
  REQUIRE(rep["violations"].size() == 1);
  CHECK(rep["violations"][0]["params"]["i"] == 1);
  CHECK(rep["violations"][0]["params"]["j"] == 1);
  CHECK(rep["violations"][0]["lhs"] == 2);
  CHECK(rep["violations"][0]["rhs"] == 1);

  // stanley alone passes on the same polytope
  CHECK(run_cli("check " + file + " --family stanley").exit_code == 0);
}

TEST_CASE("check passes the unit square on all families") {
  std::string file =
      write_temp("square.json", ehrspan::polytope_to_json(ehrspan::cube(2)).dump());
  CliResult r = run_cli("check " + file + " --family all");
  CHECK(r.exit_code == 0);
  json j = parse_envelope(r);
  for (const json& rep : j["results"]) CHECK(rep["pass"] == true);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("hstar /nonexistent/path.json").exit_code == 2);
  CHECK(run_cli("frobnicate foo.json").exit_code == 2);
  CHECK(run_cli("hstar " + reeve2_file() + " --no-such-flag").exit_code == 2);
  CHECK(run_cli("check " + reeve2_file() + " --family bogus").exit_code == 2);
  CHECK(run_cli("gen --family cube").exit_code == 2);  // missing --params
  CHECK(run_cli("").exit_code == 2);                   // subcommand required

  std::string bad = write_temp("bad.json", "{ this is not json");
  CHECK(run_cli("hstar " + bad).exit_code == 2);
}

TEST_CASE("corpus streams deterministic NDJSON") {
  CliResult a = run_cli("corpus --seed 5 --count 4");
  CHECK(a.exit_code == 0);
  CliResult b = run_cli("corpus --seed 5 --count 4");
  CHECK(a.stdout_text == b.stdout_text);

  int lines = 0;
  std::size_t pos = 0;
  while (pos < a.stdout_text.size()) {
    std::size_t nl = a.stdout_text.find('\n', pos);
    if (nl == std::string::npos) break;
    json inst = json::parse(a.stdout_text.substr(pos, nl - pos));
    CHECK(inst.contains("dim"));
    CHECK(inst.contains("vertices"));
    ++lines;
    pos = nl + 1;
  }
  CHECK(lines == 4);
}

TEST_CASE("corpus-check passes and parallel runs match sequential") {
  CliResult seq = run_cli("corpus-check --seed 7 --count 30 --dim-max 3");
  CHECK(seq.exit_code == 0);
  json js = json::parse(seq.stdout_text);
  CHECK(js["results"]["pass"] == true);
  CHECK(js["results"]["count"] == 30);
  CHECK(js["results"]["violations"] == json::array());
  CHECK(js["results"]["members_with_violations"] == 0);

  // same run with a worker pool: identical report, ordering included
  std::string cmd = "EHRSPAN_THREADS=4 " + binary_path() +
                    " corpus-check --seed 7 --count 30 --dim-max 3 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  json jp = json::parse(out);
  js.erase("elapsed_ms");
  jp.erase("elapsed_ms");
  CHECK(js == jp);
}

TEST_CASE("upp analyzes a point set end to end") {
  json points = {
      {"weights", {1, 1, 1, 2}},
      {"points",
       {{"3", "1/4", "1", "3/2"},
        {"3", "1/4", "1", "-3/2"},
        {"8", "1/9", "1", "8/3"},
        {"8", "1/9", "1", "-8/3"}}}};
  std::string file = write_temp("curve4.json", points.dump());

  CliResult r = run_cli("upp " + file);
  CHECK(r.exit_code == 0);  // non-uniformity is a finding, not a violation
  json j = parse_envelope(r);
  CHECK(j["results"]["uniform"] == false);
  CHECK(j["results"]["witness"]["degree"] == 1);
  CHECK(j["results"]["set_size"] == 4);
  CHECK(j["results"]["min_formula"]["equivalent"] == true);
}

TEST_CASE("hilb evaluates single degrees") {
  json points = {{"weights", {1, 1, 1, 2}},
                 {"points", {{"1", "1", "1", "1"}, {"1", "1", "1", "-1"}}}};
  std::string file = write_temp("pair.json", points.dump());

  json one = json::parse(run_cli("hilb " + file + " --deg 1").stdout_text);
  CHECK(one["results"]["value"] == 1);
  json two = json::parse(run_cli("hilb " + file + " --deg 2").stdout_text);
  CHECK(two["results"]["value"] == 2);
  CHECK(two["results"]["set_size"] == 2);
}

TEST_CASE("human flag keeps stdout machine-readable") {
  std::string cmd = binary_path() + " hstar " + reeve2_file() + " --human";
  std::string out_path = "/tmp/ehrspan_cli_test_human_out";
  std::string err_path = "/tmp/ehrspan_cli_test_human_err";
  int status = std::system(
      (cmd + " >" + out_path + " 2>" + err_path).c_str());
  CHECK(WEXITSTATUS(status) == 0);

  std::ifstream out_f(out_path);
  std::string out((std::istreambuf_iterator<char>(out_f)),
                  std::istreambuf_iterator<char>());
  CHECK(json::accept(out));  // stdout: exactly the JSON report

  std::ifstream err_f(err_path);
  std::string err((std::istreambuf_iterator<char>(err_f)),
                  std::istreambuf_iterator<char>());
  CHECK(!err.empty());  // the prose lands on stderr
}
