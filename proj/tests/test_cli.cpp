#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cubal/cli.hpp"
#include "cubal/io.hpp"

using namespace cubal;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return std::string(CUBAL_TEST_DATA) + "/" + name; }

struct Outcome {
  int status = 0;
  std::string out;
  std::string err;
  Json json() const { return parse_json(out); }
};

Outcome invoke(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  args.insert(args.begin(), "cubal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  try {
    const auto config = cli::parse_args(static_cast<int>(argv.size()), argv.data(), env);
    o.status = cli::run(config, out, err);
  } catch (const cli::HelpRequested& h) {
    out << h.what();
    o.status = cli::kOk;
  } catch (const cli::UsageError& e) {
    err << e.what();
    o.status = cli::kUsageError;
  }
  o.out = out.str();
  o.err = err.str();
  return o;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "cubal_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("enum") {
  const auto counted = invoke({"enum", "--m", "2", "--count-only"});
  REQUIRE(counted.status == cli::kOk);
  CHECK(counted.json()["total"] == 8);
  CHECK_FALSE(counted.json().contains("operations"));

  const auto listed = invoke({"enum", "--m", "2"});
  const auto j = listed.json();
  CHECK(j["command"] == "enum");
  CHECK(j["operations"].size() == 8);
  CHECK(j["operations"][3].dump() == "[[1,2],[1,2]]");

  CHECK(invoke({"enum", "--m", "3", "--count-only", "--jobs", "4"}).json()["total"] == 113);

  const auto census_path = scratch("census2.json");
  const auto with_census = invoke({"enum", "--m", "2", "--count-only", "--census", census_path.string()});
  CHECK(with_census.json()["orbit_count"] == 5);
  CHECK(parse_census_json(parse_json(read_file(census_path))).orbit_count() == 5);
}

TEST_CASE("enumeration budget") {
  CHECK(invoke({"enum", "--m", "9"}).status == cli::kUsageError);
  CHECK(invoke({"enum", "--m", "6", "--count-only"}).status == cli::kUsageError);
  CHECK(invoke({"enum", "--m", "0"}).status == cli::kUsageError);
  CHECK(invoke({"enum", "--m", "2", "--jobs", "0"}).status == cli::kUsageError);

  const char* six[] = {"cubal", "enum", "--m", "6", "--count-only", "--allow-m6"};
  CHECK(cli::parse_args(6, six).max_m == 6);
  const char* env6[] = {"cubal", "enum", "--m", "6"};
  CHECK(cli::parse_args(4, env6, "6").max_m == 6);
  CHECK_THROWS_AS(cli::parse_args(4, env6, "5"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_args(4, env6, "six"), cli::UsageError);
  const char* seven[] = {"cubal", "enum", "--m", "7"};
  CHECK_THROWS_AS(cli::parse_args(4, seven, "9"), cli::UsageError);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).status == cli::kUsageError);
  CHECK(invoke({"frobnicate"}).status == cli::kUsageError);
  CHECK(invoke({"char"}).status == cli::kUsageError);
  CHECK(invoke({"char", "--op", data("missing.txt")}).status == cli::kUsageError);
  CHECK(invoke({"mul", "--op", data("two_iv.json"), data("e111.json")}).status == cli::kUsageError);
  CHECK(invoke({"zerodiv", "--op", data("two_iv.json"), "--side", "up", data("e111.json")}).status ==
        cli::kUsageError);
  CHECK(invoke({"verify"}).status == cli::kUsageError);
  CHECK(invoke({"verify", "--m", "4", "--all"}).status == cli::kUsageError);

  const auto help = invoke({"--help"});
  CHECK(help.status == cli::kOk);
  CHECK(help.out.find("enum") != std::string::npos);
}

TEST_CASE("malformed input files exit with a usage error") {
  const auto bad = invoke({"char", "--op", data("not_associative.txt")});
  CHECK(bad.status == cli::kUsageError);
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(invoke({"phi", data("bad_shape.json")}).status == cli::kUsageError);
  CHECK(invoke({"mul", "--op", data("two_iii.txt"), data("e111.json"), data("e222_3.json")}).status ==
        cli::kUsageError);
}

TEST_CASE("orbits") {
  const auto j = invoke({"orbits", "--m", "2"}).json();
  CHECK(j["result"]["total"] == 8);
  CHECK(j["result"]["orbit_count"] == 5);
  CHECK(j["result"]["symmetric"].size() == 2);
  CHECK(invoke({"orbits", "--m", "5"}).status == cli::kUsageError);
}

TEST_CASE("mul and plenary") {
  const auto out = scratch("product.json");
  const auto r = invoke({"mul", "--op", data("two_iv.json"), data("e112.json"), data("e211.json"), "-o", out.string()});
  REQUIRE(r.status == cli::kOk);
  const auto expected = to_json(CubicMatrix::basis(2, 0, 0, 0));
  CHECK(r.json()["result"] == expected);
  CHECK(to_json(load_cubic_matrix(out)) == expected);

  const auto inputs = r.json()["inputs"];
  REQUIRE(inputs.size() == 3);
  CHECK(inputs[0]["role"] == "operation");
  CHECK(inputs[1]["digest"].get<std::string>().starts_with("fnv1a64:"));

  const auto p = invoke({"plenary", "--op", data("cyclic3.txt"), "--n", "1", data("e222_3.json")});
  CHECK(p.json()["result"] == to_json(CubicMatrix::basis(3, 1, 2, 1)));
  const auto p0 = invoke({"plenary", "--op", data("cyclic3.txt"), "--n", "0", data("e222_3.json")});
  CHECK(p0.json()["result"] == to_json(CubicMatrix::basis(3, 1, 1, 1)));
}

TEST_CASE("char") {
  const auto none = invoke({"char", "--op", data("two_iii.txt")});
  REQUIRE(none.status == cli::kOk);
  CHECK(none.json()["result"]["count"] == 0);
  CHECK(none.json()["result"]["characters"].empty());
  CHECK(none.json()["result"]["baric"] == false);

  const auto unit = invoke({"char", "--op", data("one.txt")}).json();
  CHECK(unit["result"]["count"] == 1);
  CHECK(unit["result"]["characters"][0]["coefficients"].dump() == R"([[["1"]]])");
}

TEST_CASE("phi") {
  const auto j = invoke({"phi", data("mixed.json")}).json();
  CHECK(j["result"]["entries"].dump() == R"([["1/2","2"],["5/3","1"]])");
  CHECK(j["in_kernel"] == false);
}

TEST_CASE("zerodiv") {
  const auto singular = invoke({"zerodiv", "--op", data("two_iv.json"), data("e111.json")});
  REQUIRE(singular.status == cli::kOk);
  auto r = singular.json()["result"];
  CHECK(r["zero_divisor"] == true);
  CHECK(r["det"] == "0");
  CHECK(r["consistent"] == true);
  CHECK(r["symmetry"] == to_string(Symmetry::Right));

  r = invoke({"zerodiv", "--op", data("two_iv.json"), data("diag.json")}).json()["result"];
  CHECK(r["zero_divisor"] == false);
  CHECK(r["det"] == "1");
  CHECK(r["witness"].is_null());

  r = invoke({"zerodiv", "--op", data("two_iv.json"), "--side", "right", data("diag.json")}).json()["result"];
  CHECK(r["zero_divisor"] == true);
  CHECK(r["side"] == "right");

  r = invoke({"zerodiv", "--op", data("two_iii.txt"), data("diag.json")}).json()["result"];
  CHECK(r["zero_divisor"] == true);
  CHECK(r["consistent"] == true);
}

TEST_CASE("subalg") {
  const auto res = invoke({"subalg", "--op", data("cyclic3.txt"), "--list-invariant-sets"});
  REQUIRE(res.status == cli::kOk);
  const auto r = res.json()["result"];
  CHECK(r["nonempty_invariant_subsets"] == 2);
  CHECK(r["subalgebras_lower_bound"] == 18);
  CHECK(r["invariant_subsets"].dump() == "[[],[1],[1,2,3]]");
  CHECK(r["ideal"]["dimension"] == 27);
  const auto seq = r["power_sequences"][1];
  CHECK(seq["cycle_invariant"] == false);
  CHECK(seq["escape"].dump() == "[2,3,1]");

  const auto all = invoke({"subalg", "--op", data("all_invariant.txt")}).json()["result"];
  CHECK(all["nonempty_invariant_subsets"] == 7);
  CHECK(all["all_spans_closed"] == true);
}

TEST_CASE("verify") {
  const auto census = invoke({"verify", "--m", "2", "--all"});
  REQUIRE(census.status == cli::kOk);
  CHECK(census.json()["operations_checked"] == 8);
  CHECK(census.json()["passed"] == true);

  const auto single = invoke({"verify", "--op", data("three_i.txt")}).json();
  CHECK(single["operations"][0]["witnesses"]["orbit_size"] == 6);

  const auto unchecked = invoke({"verify", "--op", data("not_associative.txt"), "--unchecked"});
  CHECK(unchecked.status == cli::kVerificationFailed);
  CHECK(unchecked.json()["operations"][0]["associative"] == false);
  CHECK(unchecked.err.find("not associative") != std::string::npos);
}

TEST_CASE("classify") {
  const auto one = invoke({"classify", "--op", data("three_i.txt")}).json()["result"];
  CHECK(one["orbit_size"] == 6);
  CHECK(one["symmetric"] == false);
  CHECK(one["power_sequences"].size() == 3);

  const auto three = invoke({"classify", "--m", "3"}).json()["result"];
  CHECK(three["orbit_count"] == 24);
  CHECK(three["symmetric_operations"] == 2);
  CHECK(three["eventually_periodic_occurs"] == false);

  const auto four = invoke({"classify", "--m", "4"}).json()["result"];
  CHECK(four["eventually_periodic_occurs"] == true);
  CHECK_FALSE(four["eventually_periodic_examples"].empty());
  CHECK(invoke({"classify", "--m", "5"}).status == cli::kUsageError);
}

TEST_CASE("reports do not depend on the thread count") {
  const auto one = invoke({"enum", "--m", "3"}).out;
  CHECK(invoke({"enum", "--m", "3", "--jobs", "3"}).out == one);
  const auto census = invoke({"orbits", "--m", "3"}).out;
  CHECK(invoke({"orbits", "--m", "3", "--jobs", "5"}).out == census);
}

TEST_CASE("pretty output") {
  const auto r = invoke({"enum", "--m", "2", "--count-only", "--pretty"});
  CHECK(r.out.find("total: 8") != std::string::npos);
  const auto t = invoke({"enum", "--m", "1", "--timing"});
  CHECK(t.err.find("elapsed") != std::string::npos);
}
