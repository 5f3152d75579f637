#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hecke/commands.hpp"

using namespace hecke;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hecke-dessin");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hecke_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("list rows") {
  const auto all = cmd_list();
  const auto named = std::count_if(all.begin(), all.end(), [](const ListRow& r) { return !r.is_template; });
  CHECK(named == 19);
  CHECK(all.size() == 21);
  const auto tri = cmd_list({true, std::nullopt});
  CHECK(std::count_if(tri.begin(), tri.end(), [](const ListRow& r) { return !r.is_template; }) == 10);
  CHECK(std::count_if(tri.begin(), tri.end(), [](const ListRow& r) { return r.is_template; }) == 1);
  const auto h5 = cmd_list({false, 5});
  REQUIRE(h5.size() == 3);
  CHECK(h5[0].name == "icosahedron");
  CHECK(h5[1].name == "snub-cube");
  CHECK(h5[2].name == "snub-dodecahedron");

  const Run r = run({"list", "--json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).size() == 21);
  CHECK(run({"list"}).out.find("truncated-icosidodecahedron") != std::string::npos);
}

TEST_CASE("analyze reports") {
  const auto oct = cmd_analyze("octahedron");
  CHECK(oct.index == 24);
  CHECK(oct.genus == 0);
  REQUIRE(oct.congruence);
  REQUIRE(oct.congruence->classification);
  CHECK(oct.congruence->classification->family == Family::HeckePrincipal);
  CHECK(oct.congruence->classification->m == 3);
  CHECK(oct.congruence->classification->equal == true);

  const auto tt = cmd_analyze("truncated-tetrahedron");
  CHECK(tt.index == 36);
  CHECK(tt.congruence->verdict == Verdict::Congruence);
  CHECK(cmd_analyze("prism:3").congruence->verdict == Verdict::Noncongruence);
  CHECK(cmd_analyze("prism:8").congruence->verdict == Verdict::Congruence);
  CHECK(cmd_analyze("antiprism:3").index == 24);
}

TEST_CASE("JSON report round trip") {
  for (const char* in : {"octahedron", "gamma0-8", "truncated-cube", "prism:5", "snub-cube"}) {
    CAPTURE(in);
    const auto r = cmd_analyze(in);
    CHECK(report_from_json(report_to_json(r)) == r);
    CHECK(report_from_json(json::parse(report_to_json(r).dump())) == r);
  }
  const Run r = run({"analyze", "tetrahedron", "--json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("index") == 12);
  CHECK(report_to_json(report_from_json(j)) == j);
}

TEST_CASE("analysis is deterministic") {
  auto strip = [](AnalysisReport r) {
    r.timing_us = 0;
    return r;
  };
  CHECK(strip(cmd_analyze("truncated-octahedron")) == strip(cmd_analyze("truncated-octahedron")));
}

TEST_CASE("flip") {
  const auto f = cmd_flip("gamma0-8", 2);
  CHECK(f.index == 12);
  REQUIRE(f.congruence->classification);
  CHECK(f.congruence->classification->family == Family::Gamma1);
  CHECK(f.congruence->classification->m == 5);
  const auto back = cmd_flip("gamma0-8-flipped", 2);
  CHECK(back.congruence->classification->family == Family::Gamma0);
  CHECK(back.congruence->classification->m == 8);
  // another triangle: report produced, value not pinned
  CHECK(cmd_flip("gamma0-8", 0).index == 12);

  const Run r = run({"flip", "gamma0-8", "--cycle", "3", "--json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("index") == 12);
  auto untimed = [](const Run& x) {
    json j = json::parse(x.out);
    j.erase("timing_us");
    return j;
  };
  CHECK(untimed(run({"flip", "gamma0-8", "--dart", "8", "--json"})) ==
        untimed(run({"flip", "gamma0-8", "--cycle", "3", "--json"})));
  CHECK(run({"flip", "gamma0-8", "--cycle", "9"}).code == 1);
  CHECK(run({"flip", "gamma0-8"}).code == 1);
}

TEST_CASE("verify") {
  for (const auto& v : cmd_verify("truncated-tetrahedron")) CHECK(v.member);
  CHECK(cmd_verify("truncated-tetrahedron").size() == 7);
  const auto tet = get_solid("tetrahedron").dessin();
  const HeckeIndex h(3);
  const Mat2 I = Mat2::identity(h);
  const Mat2 T(AlgebraicInt(h, 1), AlgebraicInt(h, 1), AlgebraicInt(h, 0), AlgebraicInt(h, 1));
  const auto vs = cmd_verify(tet, {I, T});
  CHECK(vs[0].member);
  CHECK_FALSE(vs[1].member);
  CHECK(vs[1].word.has_value());

  // a matrix outside H_4 is reported per matrix, not fatally
  const auto path = scratch("mats.json");
  std::ofstream(path) << R"js({"matrices": [[[1, 1], [0, 1]], [[-7, "-3λ"], ["6λ", 5]]]})js";
  const Run r = run({"verify", "octahedron", path.string(), "--json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j[0].at("member") == false);
  CHECK(j[0].at("word").is_null());
  CHECK(j[1].at("member") == true);
  CHECK(run({"verify", "octahedron"}).out.find("7/7") != std::string::npos);
}

TEST_CASE("inputs from files and exports") {
  const auto path = scratch("dessin.json");
  std::ofstream(path) << R"js({"n": 3, "sigma0": [[1,2],[3,4],[5,6]], "sigma1": [[1,3,5],[2,6,4]]})js";
  const auto r = cmd_analyze(path.string());
  CHECK(r.index == 6);

  const auto dot = scratch("cg.dot"), ddot = scratch("d.dot");
  std::filesystem::remove(dot);
  std::filesystem::remove(ddot);
  CHECK(run({"analyze", "cube", "--dot", dot.string(), "--dessin-dot", ddot.string()}).code == 0);
  CHECK(std::filesystem::exists(dot));
  CHECK(std::filesystem::exists(ddot));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"analyze", "no-such-solid"}).code == 1);
  CHECK(run({"analyze", "prism:2"}).code == 1);
  CHECK(run({"analyze", "cube", "--base", "99"}).code == 1);
  CHECK(run({"analyze", "truncated-cube", "--max-closure", "5"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << "{ not json";
  CHECK(run({"analyze", bad.string()}).code == 1);
}
