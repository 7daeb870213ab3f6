#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nsg/cli.hpp"
#include "oracles.hpp"

using namespace nsg;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome nsg_run(std::vector<std::string> args) {
  args.insert(args.begin(), "nsg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json json_of(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  return Json::parse(nsg_run(std::move(args)).out);
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("nsg_cli_test_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("info") {
  const auto j = json_of({"info", "3,5,7"});
  CHECK(j["status"] == "ok");
  CHECK(j["tool_version"] == NSG_VERSION);
  CHECK_FALSE(j.contains("elapsed_ms"));
  const auto& p = j["payload"];
  CHECK(p["min_gens"] == Json::parse("[3,5,7]"));
  CHECK(p["frobenius"] == 4);
  CHECK(p["genus"] == 3);
  CHECK(p["type"] == 2);
  CHECK(p["pf"] == Json::parse("[2,4]"));

  const auto table = nsg_run({"info", "3,5,7"});
  CHECK(table.code == 0);
  CHECK(table.out.find("frobenius: 4") != std::string::npos);
  CHECK(table.out.find("version: " NSG_VERSION) != std::string::npos);
  CHECK(json_of({"--timing", "info", "3,5,7"}).contains("elapsed_ms"));
}

TEST_CASE("exit codes") {
  auto r = nsg_run({"info", "2,4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("GcdNotOne") != std::string::npos);
  const auto j = json_of({"info", "2,4"});
  CHECK(j["status"] == "error");
  CHECK(j["error"]["code"] == "GcdNotOne");

  CHECK(nsg_run({"info", "3,x"}).code == 2);
  CHECK(nsg_run({"frobnicate"}).code == 2);
  CHECK(nsg_run({"info", "3,5", "--bogus"}).code == 2);
  CHECK(nsg_run({"--json", "--csv", "info", "3,5"}).code == 2);
  CHECK(nsg_run({"apery", "3,5,7", "--n", "4"}).code == 3);
  CHECK(nsg_run({"d3", "rij", "3", "5", "8"}).code == 3);
  CHECK(nsg_run({"tree", "count", "--genus", "41"}).code == 4);
  CHECK(nsg_run({"--budget-ms", "1", "tree", "count", "--genus", "34"}).code == 4);

  CHECK(cli::exit_code_for(ErrorCode::ParseError) == 2);
  CHECK(cli::exit_code_for(ErrorCode::NotASemigroup) == 3);
  CHECK(cli::exit_code_for(ErrorCode::BudgetExceeded) == 4);
  CHECK(cli::exit_code_for(ErrorCode::InternalInconsistency) == 1);
}

TEST_CASE("tree count as CSV") {
  const auto r = nsg_run({"--csv", "tree", "count", "--genus", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "genus,count\n0,1\n1,1\n2,2\n3,4\n");
  const auto arf = nsg_run({"--csv", "tree", "count", "--genus", "3", "--variety", "arf"});
  CHECK(arf.out == "genus,count\n0,1\n1,1\n2,2\n3,3\n");
  CHECK(nsg_run({"--csv", "tree", "count", "--genus", "3", "--isa", "scalar"}).out == r.out);
}

TEST_CASE("output does not depend on the worker count") {
  const std::vector<std::vector<std::string>> cmds = {
      {"tree", "count", "--genus", "16"},
      {"tree", "list", "--genus", "6"},
      {"tree", "count", "--genus", "14", "--variety", "saturated"},
  };
  for (const auto& c : cmds) {
    for (const char* fmt : {"--json", "--csv"}) {
      auto a = c, b = c;
      a.insert(a.begin(), {fmt, "--jobs", "1"});
      b.insert(b.begin(), {fmt, "--jobs", "6"});
      const auto ra = nsg_run(a), rb = nsg_run(b);
      CHECK(ra.code == 0);
      CHECK(ra.out == rb.out);
      CHECK(ra.out == nsg_run(a).out);
    }
  }
}

TEST_CASE("JSON payloads survive a round trip") {
  const std::vector<std::vector<std::string>> cmds = {
      {"info", "3,5,7"},
      {"gaps", "4,6,7,9"},
      {"apery", "3,5,7"},
      {"pm", "solve", "4", "11", "1"},
      {"pm", "interval", "(3/2..3)"},
      {"pm", "bezout", "11/4", "11/3"},
      {"pm", "recognize", "3,7,11"},
      {"quot", "3,5,7", "2"},
      {"quot", "doubles", "2,3", "--fmax", "9"},
      {"quot", "decompose", "4,6,7,9"},
      {"closure", "arf", "3,5"},
      {"closure", "sat", "2,7"},
      {"pres", "minimal", "3,5,7"},
      {"pres", "betti", "3,5,7"},
      {"pres", "glue", "2,3", "2,3", "4", "9"},
      {"d3", "sym", "4,5,6"},
      {"d3", "psym", "3", "5", "7"},
      {"d3", "rij", "5", "7", "9"},
      {"d3", "c", "3,5,7"},
      {"d3", "pm", "3", "5", "2"},
      {"d3", "fermat", "2", "3", "5", "3"},
      {"fact", "lengths", "3,5,7", "12"},
      {"fact", "catenary", "3,5,7"},
      {"fact", "tame", "2,3"},
      {"fact", "omega", "2,3"},
      {"fact", "elasticity", "3,5,7"},
      {"fact", "delta", "3,5,7", "--bound", "50"},
      {"fact", "probe", "2,3", "--invariant", "catenary", "--window", "40"},
  };
  for (const auto& c : cmds) {
    auto args = c;
    args.insert(args.begin(), "--json");
    const auto r = nsg_run(args);
    INFO(c.front());
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["status"] == "ok");
    CHECK(Json::parse(j.dump()) == j);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(nsg_run(c).code == 0);
    auto csv = c;
    csv.insert(csv.begin(), "--csv");
    CHECK(nsg_run(csv).code == 0);
  }
  for (int g = 0; g <= 8; ++g) {
    for (const auto& o : oracle::all_of_genus(g)) {
      const auto s = NumericalSemigroup::from_generators(o.gens());
      CHECK(semigroup_from_json(Json::parse(to_json(s).dump())) == s);
    }
  }
}

TEST_CASE("every command path is reachable") {
  const auto paths = cli::command_paths();
  CHECK(std::find(paths.begin(), paths.end(), "tree count") != paths.end());
  CHECK(std::find(paths.begin(), paths.end(), "corpus") != paths.end());
  CHECK(paths.size() >= 30);
}

TEST_CASE("corpus runs") {
  std::string all;
  for (int g = 1; g <= 8; ++g) {
    for (const auto& o : oracle::all_of_genus(g)) {
      const auto gs = o.gens();
      for (std::size_t i = 0; i < gs.size(); ++i) all += (i ? "," : "") + std::to_string(gs[i]);
      all += "\n";
    }
  }
  const auto file = write_temp("wilf", "# every semigroup of genus 1..8\n" + all);
  for (const char* suite : {"wilf", "fgh", "herzog-dim3", "catenary-betti"}) {
    const auto j = json_of({"corpus", file.string(), "--suite", suite});
    INFO(suite);
    CHECK(j["status"] == "ok");
    CHECK(j["payload"]["failed"] == 0);
  }

  const auto barucci = write_temp("barucci", "19,23,29,31,37\n");
  const auto b = json_of({"corpus", barucci.string(), "--suite", "presentation-card"});
  CHECK(b["status"] == "ok");
  CHECK(b["payload"]["rows"][0]["detail"]["cardinality"] == 13);
  CHECK(b["payload"]["rows"][0]["detail"]["exceeds_bound"] == true);

  const auto empty = write_temp("empty", "");
  const auto e = json_of({"corpus", empty.string(), "--suite", "wilf"});
  CHECK(e["status"] == "ok");
  CHECK(e["payload"]["checks"] == 0);

  CHECK(nsg_run({"corpus", "/nonexistent/nsg/corpus.txt", "--suite", "wilf"}).code == 2);
  const auto missing = json_of({"corpus", "/nonexistent/nsg/corpus.txt", "--suite", "wilf"});
  CHECK(missing["error"]["code"] == "FileNotFound");

  const auto bad = write_temp("bad", "3,5,7\n\n4,x\n");
  const auto p = json_of({"corpus", bad.string(), "--suite", "wilf"});
  CHECK(p["error"]["code"] == "ParseError");
  CHECK(p["error"]["witness"] == Json::parse("[3]"));

  const auto unknown = nsg_run({"corpus", file.string(), "--suite", "nosuch"});
  CHECK(unknown.code == 2);

  std::filesystem::remove(file);
  std::filesystem::remove(barucci);
  std::filesystem::remove(empty);
  std::filesystem::remove(bad);
}
