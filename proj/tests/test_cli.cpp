#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracle.hpp"

using pnw::testing::word;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "pnw");
  std::ostringstream out;
  std::ostringstream err;
  const int code = pnw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}
}  // namespace

TEST_CASE("gen") {
  const auto lex = run({"gen", "-n", "3", "--order", "lex"});
  CHECK(lex.code == 0);
  CHECK(lex.out == "000\n100\n101\n110\n111\n");

  CHECK(run({"gen", "-n", "5", "--count-only"}).out == "14\n");
  CHECK(run({"gen", "-n", "0"}).out == "\n");

  const auto gray = lines(run({"gen", "-n", "8", "--order", "gray"}).out);
  REQUIRE(gray.size() == 70);
  for (std::size_t i = 1; i < gray.size(); ++i) {
    CHECK(pnw::hamming(word(gray[i - 1].c_str()), word(gray[i].c_str())) <= 3);
  }

  const auto json = nlohmann::json::parse(run({"gen", "-n", "3", "--format", "json"}).out);
  CHECK(json["n"] == 3);
  CHECK(json["count"] == 5);
  CHECK(json["words"][2] == "101");
  CHECK(run({"gen", "-n", "3", "--format", "csv"}).out == "word\n000\n100\n101\n110\n111\n");
  CHECK(nlohmann::json::parse(run({"gen", "-n", "4", "--count-only", "--format", "json"}).out)["count"] == 8);
}

TEST_CASE("gen refuses lengths over the cap") {
  const auto refused = run({"gen", "-n", "41"});
  CHECK(refused.code == 2);
  CHECK(refused.out.empty());
  CHECK(refused.err.find("cap") != std::string::npos);
  CHECK(run({"gen", "-n", "12", "--cap", "10"}).code == 2);
  CHECK(run({"gen", "--order", "sideways", "-n", "3"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("critset, table, hist") {
  CHECK(run({"critset", "-n", "32", "-s", "7", "-t", "22", "--count-only"}).out == "4\n");
  CHECK(run({"critset", "-n", "32", "-s", "1", "-t", "1", "--count-only"}).out == "284663\n");
  CHECK(run({"critset", "-n", "5", "-s", "0", "-t", "1"}).code == 2);
  CHECK(run({"critset", "-n", "5", "-s", "2", "-t", "1"}).out == "11010\n11011\n");

  CHECK(run({"table", "-n", "3", "--s-max", "2", "--t-max", "2", "--format", "csv"}).out ==
        "s\\t,0,1,2\n1,0,1,1\n2,0,1,0\n");
  const auto table = nlohmann::json::parse(run({"table", "-n", "6", "--format", "json", "-j", "3"}).out);
  CHECK(table["cells"].size() == 7 * 7);

  const auto hist = run({"hist", "-n", "3", "--format", "csv"});
  CHECK(lines(hist.out) == std::vector<std::string>{"length,count,percent", "2,1,20.000000",
                                                    "3,4,80.000000"});
}

TEST_CASE("check") {
  const auto phi = run({"check", "1101001001011000"});
  CHECK(phi.code == 0);
  const auto doc = nlohmann::json::parse(phi.out);
  CHECK(doc["is_prefix_normal"] == true);
  CHECK(doc["phi"] == 16);
  CHECK(doc["r"] == 13);
  CHECK(doc["critical_prefix"] == nlohmann::json{{"s", 2}, {"t", 1}});

  const auto bad = run({"check", "11001101"});
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["is_prefix_normal"] == false);
  CHECK_FALSE(nlohmann::json::parse(bad.out).contains("phi"));

  const auto density = nlohmann::json::parse(run({"check", "110100101001"}).out);
  CHECK(density["delta"] == "5/11");
  CHECK(density["iota"] == 11);
  CHECK(density["kappa"] == 5);

  CHECK(nlohmann::json::parse(run({"check", "000"}).out)["r"].is_null());
  CHECK(run({"check", "10x1"}).code == 2);
  CHECK(run({"check", ""}).code == 2);
}

TEST_CASE("extend") {
  CHECK(run({"extend", "101", "--steps", "1"}).out == "10101\n");
  CHECK(run({"extend", "101", "--steps", "3"}).out == "101010101\n");

  const auto alt = nlohmann::json::parse(run({"extend", "101", "--detect"}).out);
  CHECK(alt["period"] == "10");
  CHECK(alt["iota"] == 2);
  CHECK(alt["kappa"] == 1);

  const auto one = nlohmann::json::parse(run({"extend", "1", "--detect"}).out);
  CHECK(one["period"] == "1");
  CHECK(one["preperiod"] == "");

  CHECK(run({"extend", "110", "--detect"}).code == 2);
  CHECK(run({"extend", "1011"}).code == 2);
  const auto capped = run({"extend", "110100101001", "--detect", "--scan-cap", "15"});
  CHECK(capped.code == 3);
  CHECK(nlohmann::json::parse(capped.out)["certified"] == false);
}

TEST_CASE("oracle") {
  const auto twelve = run({"oracle", "-n", "12"});
  CHECK(twelve.code == 0);
  CHECK(lines(twelve.out).back() == "PASS");
  CHECK(run({"oracle", "-n", "1"}).code == 0);
  CHECK(run({"oracle", "-n", "25"}).code == 2);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"gen", "-n", "9", "--order", "gray"},
        std::vector<std::string>{"table", "-n", "10", "-j", "4"},
        std::vector<std::string>{"extend", "1101001", "--detect"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
