#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "polya/cli.hpp"
#include "test_support.hpp"

using namespace polya;
using namespace polya::cli;
using polya::testing::q;

namespace {

RunResult invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  return run(args, in);
}

const std::string kExampleDoc = R"({"n":2, "matrix":[["4","-1"],["-1","1"]]})";
const std::string kX1X2Doc = R"({"n":2, "matrix":[["0","1/2"],["1/2","0"]]})";
const std::string kSquareDoc = R"({"n":2, "matrix":[["1","-1"],["-1","1"]]})";

}  // namespace

TEST_CASE("parse_input accepts the documented schema") {
  const InputDocument d = parse_input(kExampleDoc);
  CHECK(d.n == 2);
  CHECK(d.matrix[0][1] == -1);
  CHECK_FALSE(d.label);

  const InputDocument l = parse_input(R"({"n":1, "matrix":[["6/4"]], "label":"one"})");
  CHECK(l.matrix[0][0] == q(3, 2));
  CHECK(*l.label == "one");
}

TEST_CASE("parse_input rejects bad documents") {
  try {
    parse_input(R"({"n":2, "matrix":[["4","-1"],["0","1"]]})");
    FAIL("expected asymmetry error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(1,2)/(2,1)") != std::string::npos);
  }
  try {
    parse_input(R"({"n":2, "matrix":[["1/0","0"],["0","1"]]})");
    FAIL("expected malformed rational");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("malformed rational") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_input(R"({"n":2, "matrix":[["1","0","0"],["0","1","0"]]})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"n":2, "matrix":[["1","0"]]})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"n":2, "matrix":[[1,0],[0,1]]})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"n":0, "matrix":[]})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"matrix":[["1"]]})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"n":1, "matrix":[["1"]], "extra":1})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"n":1, "matrix":[["1"]], "label":3})"), InputError);
  CHECK_THROWS_AS(parse_input("[1,2]"), InputError);
  CHECK_THROWS_AS(parse_input("{not json"), InputError);
}

TEST_CASE("property: serialize then parse is the identity") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 5;
    InputDocument d;
    d.n = n;
    d.matrix = testing::random_symmetric(rng, n).rows();
    if (trial % 2) d.label = "form #" + std::to_string(trial) + " \"quoted\"";
    const std::string text = serialize_input(d);
    CHECK(parse_input(text) == d);
    CHECK(serialize_input(parse_input(text)) == text);
  }
}

TEST_CASE("bounds command") {
  const RunResult r = invoke({"bounds", kExampleDoc});
  CHECK(r.exit_code == kSuccess);
  CHECK(r.out.find("bound_new        : 3 (raw 3)") != std::string::npos);
  CHECK(r.out.find("bound_corollary  : 8") != std::string::npos);
  CHECK(r.out.find("bound_klp        : 8") != std::string::npos);
  CHECK(r.out.find("3/7") != std::string::npos);

  const RunResult j = invoke({"bounds", "--format", "json"}, kExampleDoc);
  REQUIRE(j.exit_code == kSuccess);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["command"] == "bounds");
  CHECK(doc["result"]["bound_new"] == 3);
  CHECK(doc["result"]["bound_corollary"] == 8);
  CHECK(doc["result"]["bound_klp"] == 8);
  CHECK(doc["result"]["min_f"] == "3/7");
  CHECK(doc["result"]["argmin"] == nlohmann::json::array({"2/7", "5/7"}));
  CHECK(doc["result"]["ratio_floor"] == 4);
  CHECK(doc["input"]["matrix"][0][1] == "-1");
}

TEST_CASE("bounds command from --input file") {
  const RunResult r =
      invoke({"bounds", "--input", std::string(POLYA_TEST_DATA_DIR) + "/fkappa_half_two.json"});
  CHECK(r.exit_code == kSuccess);
  CHECK(r.out.find("f_kappa, kappa = 1/2, lambda = 2") != std::string::npos);
  CHECK(invoke({"bounds", "--input", "/nonexistent/file.json"}).exit_code == kInputError);
}

TEST_CASE("bounds on forms that are not positive exits 2 with a witness") {
  const RunResult r = invoke({"bounds", kSquareDoc});
  CHECK(r.exit_code == kNotPositive);
  CHECK(r.err.find("(1/2, 1/2)") != std::string::npos);

  const RunResult z = invoke({"bounds", "--format", "json", kX1X2Doc});
  CHECK(z.exit_code == kNotPositive);
  const auto doc = nlohmann::json::parse(z.out);
  CHECK(doc["result"]["positive_on_simplex"] == false);
  CHECK(doc["result"]["witness"] == nlohmann::json::array({"0", "1"}));
}

TEST_CASE("exponent command") {
  const RunResult r = invoke({"exponent", "--format", "json", kExampleDoc});
  CHECK(r.exit_code == kSuccess);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["result"]["outcome"] == "found");
  CHECK(doc["result"]["exponent"] == 3);
  CHECK(doc["result"]["cap"] == 50);

  const RunResult inf = invoke({"exponent", "--format", "json", kX1X2Doc});
  CHECK(inf.exit_code == kSuccess);
  doc = nlohmann::json::parse(inf.out);
  CHECK(doc["result"]["outcome"] == "certified_infinite");

  const RunResult capped = invoke({"exponent", "--cap", "2", kExampleDoc});
  CHECK(capped.exit_code == kCapExceeded);
  CHECK(capped.out.find("cap exceeded") != std::string::npos);
}

TEST_CASE("identity command") {
  const RunResult r = invoke({"identity", kExampleDoc});
  CHECK(r.exit_code == kSuccess);
  CHECK(r.out.find("m = 6 : holds") != std::string::npos);
  CHECK(r.out.find("m = 7") == std::string::npos);

  const RunResult j = invoke({"identity", "--max-m", "3", "--format", "json", kExampleDoc});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["result"]["checks"].size() == 4);
  CHECK(doc["result"]["all_hold"] == true);
}

TEST_CASE("fkappa command") {
  const RunResult r = invoke({"fkappa", "--kappa", "0", "--lambda", "100", "--format", "json"});
  CHECK(r.exit_code == kSuccess);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& row = doc["result"]["rows"][0];
  CHECK(row["bound_new"] == 50);
  CHECK(row["bound_klp"] == 10000);
  CHECK(row["ratio"] == "1/200");
  CHECK(row["predicted_ratio"] == "1/200");
  CHECK(row["sup_matches"] == true);
  CHECK(row["min_matches"] == true);

  const RunResult two = invoke({"fkappa", "--kappa", "1/2", "--lambda", "2", "--lambda", "10"});
  CHECK(two.exit_code == kSuccess);
  CHECK(two.out.find("lambda = 10") != std::string::npos);

  CHECK(invoke({"fkappa", "--kappa", "1", "--lambda", "2"}).exit_code == kInputError);
  CHECK(invoke({"fkappa", "--kappa", "0.5", "--lambda", "2"}).exit_code == kInputError);
  CHECK(invoke({"fkappa", "--kappa", "0", "--lambda", "1"}).exit_code == kInputError);
  CHECK(invoke({"fkappa", "--kappa", "0"}).exit_code == kInputError);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).exit_code == kInputError);
  CHECK(invoke({"frobnicate"}).exit_code == kInputError);
  CHECK(invoke({"bounds", "--format", "xml", kExampleDoc}).exit_code == kInputError);
  CHECK(invoke({"bounds", R"({"n":2, "matrix":[["4","-1"],["0","1"]]})"}).exit_code == kInputError);
  CHECK(invoke({"bounds"}, "").exit_code == kInputError);
  CHECK(invoke({"--help"}).exit_code == kSuccess);

  // 17 variables exceeds the face-enumeration limit.
  nlohmann::json big;
  big["n"] = 17;
  big["matrix"] = nlohmann::json::array();
  for (int i = 0; i < 17; ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < 17; ++j) row.push_back(i == j ? "1" : "0");
    big["matrix"].push_back(row);
  }
  const RunResult r = invoke({"bounds"}, big.dump());
  CHECK(r.exit_code == kInputError);
  CHECK(r.err.find("16") != std::string::npos);
}

TEST_CASE("output is deterministic and rationals are canonical") {
  const std::string doc = R"({"n":3, "matrix":[["6/4","-2/4","1"],["-1/2","2","0"],["1","0","9/3"]]})";
  for (const char* cmd : {"bounds", "exponent", "identity"}) {
    const RunResult a = invoke({cmd, "--format", "json", doc});
    const RunResult b = invoke({cmd, "--format", "json", doc});
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
  }
  const auto out = nlohmann::json::parse(invoke({"bounds", "--format", "json", doc}).out);
  CHECK(out["input"]["matrix"][0][0] == "3/2");
  CHECK(out["input"]["matrix"][2][2] == "3");
  // Every rational string parses back to itself.
  for (const auto& v : out["result"]["argmin"]) {
    const std::string s = v.get<std::string>();
    CHECK(to_string(parse_rational(s)) == s);
  }
}
