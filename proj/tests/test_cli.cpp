#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "upq/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = upq::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool no_floats(const nlohmann::json& j) {
  if (j.is_number_float()) return false;
  if (j.is_structured())
    for (const auto& x : j) if (!no_floats(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("walls example") {
  auto r = call({"walls", "--n1", "2", "--n2", "1", "--d1", "4", "--d2", "1", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["outputs"]["walls"].size() == 1);
  CHECK(j["outputs"]["walls"][0]["alpha"] == "5/2");
  CHECK(j["outputs"]["walls"][0]["witnesses"].size() == 2);
}

TEST_CASE("classify example") {
  auto r = call({"classify", "--p", "2", "--q", "3", "--a", "1", "--b", "1", "--g", "2", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "classify");
  CHECK(j["outputs"]["stable_smooth_dim"] == 26);
  CHECK(j["outputs"]["full_space_connected"] == "yes");
  CHECK(j["citations"].contains("coprime-connected-smooth"));
}

TEST_CASE("census example, human table") {
  auto r = call({"census", "--p", "1", "--q", "1", "--g", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("outputs.region.count") != std::string::npos);
  auto j = nlohmann::json::parse(call({"census", "--p", "1", "--q", "1", "--g", "2", "--json"}).out);
  CHECK(j["outputs"]["region"]["points"].size() == 5);
}

TEST_CASE("every subcommand: deterministic, float-free JSON") {
  const std::vector<std::vector<std::string>> cmds = {
      {"triple", "--n1", "3", "--n2", "2", "--d1", "5", "--d2", "2", "--alpha", "2/3", "--witness",
       "1,1,1,1", "--witness", "2,0,9,0"},
      {"triple", "--n1", "2", "--n2", "1", "--d1", "4", "--d2", "1", "--split", "2,0,5,0"},
      {"triple", "--n1", "1", "--n2", "1", "--d1", "0", "--d2", "1"},
      {"walls", "--n1", "1", "--n2", "1", "--d1", "1", "--d2", "0", "--interval", "1", "5", "--closed",
       "--alpha", "3", "--m", "2"},
      {"chambers", "--n1", "1", "--n2", "1", "--d1", "1", "--d2", "0", "--cutoff", "5"},
      {"higgs", "--p", "2", "--q", "3", "--a", "1", "--b", "1"},
      {"rigidity", "--p", "1", "--q", "2", "--a", "2", "--b", "1"},
      {"morse", "--ranks", "1,1,1", "--degrees", "0,1,2"},
      {"census", "--p", "2", "--q", "4", "--a", "5", "--b", "9"},
      {"classify", "--p", "1", "--q", "2", "--a", "2", "--b", "1"},
  };
  for (auto args : cmds) {
    args.push_back("--json");
    auto a = call(args), b = call(args);
    INFO(args[0], ": ", a.err);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(no_floats(j));
    for (const char* key : {"command", "inputs", "outputs", "citations", "warnings"})
      CHECK(j.contains(key));
  }
}

TEST_CASE("warnings channel") {
  auto j = nlohmann::json::parse(
      call({"rigidity", "--p", "1", "--q", "2", "--a", "2", "--b", "1", "--json"}).out);
  REQUIRE(j["warnings"].size() == 1);
  CHECK(j["warnings"][0].get<std::string>().find("rigidity") != std::string::npos);
  auto m = nlohmann::json::parse(call({"morse", "--ranks", "1,1,1", "--degrees", "0,1,2", "--json"}).out);
  CHECK(m["outputs"]["morse_index"]["complex_dim"] == -1);
  CHECK(m["warnings"].size() == 2);
}

TEST_CASE("exit codes") {
  auto bad = call({"triple", "--n1", "x", "--n2", "1", "--d1", "0", "--d2", "0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("--n1") != std::string::npos);
  CHECK(call({"walls", "--n1", "1", "--n2", "1", "--d1", "0", "--d2", "0", "--alpha", "1/x"}).code == 2);
  auto alpha = call({"walls", "--n1", "1", "--n2", "1", "--d1", "0", "--d2", "0", "--alpha", "1/x"});
  CHECK(alpha.err.find("--alpha") != std::string::npos);
  CHECK(call({"triple", "--n1", "1", "--n2", "1", "--d1", "0", "--d2", "0", "--split", "1,2"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"classify", "--p", "1", "--q", "1", "--a", "0"}).code == 2);

  auto dom = call({"higgs", "--p", "0", "--q", "1", "--a", "0", "--b", "0"});
  CHECK(dom.code == 1);
  CHECK(dom.err.find("positive") != std::string::npos);
  CHECK(call({"classify", "--p", "1", "--q", "1", "--a", "0", "--b", "0", "--g", "1"}).code == 1);
  CHECK(call({"census", "--p", "1", "--q", "1", "--a", "3", "--b", "0"}).code == 1);
  CHECK(call({"triple", "--n1", "2", "--n2", "1", "--d1", "4", "--d2", "1", "--split", "3,0,0,0"}).code == 1);
  CHECK(call({"walls", "--n1", "1", "--n2", "1", "--d1", "0", "--d2", "0", "--interval", "3", "1"}).code == 1);
}

TEST_CASE("help") {
  auto r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("classify") != std::string::npos);
}
