#include <doctest.h>

#include <json.hpp>

#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "unitcycle/cli.hpp"

using namespace unitcycle;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "unitcycle");
  std::ostringstream out, err;
  const int code = cli::main(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kZ60 =
    "1/16 x1^60 + 1/16 x1^30 x2^15 + 1/16 x1^20 x2^20 + 1/16 x1^12 x2^24 + 1/8 x1^12 x4^12 + "
    "1/16 x1^10 x2^25 + 1/16 x1^6 x2^27 + 1/8 x1^6 x2^3 x4^12 + 1/16 x1^4 x2^28 + "
    "1/8 x1^4 x2^4 x4^12 + 1/16 x1^2 x2^29 + 1/8 x1^2 x2^5 x4^12\n";

}  // namespace

TEST_CASE("parse_n") {
  CHECK(cli::parse_n("360") == 360);
  CHECK(cli::parse_n("2^3*3^2*5") == 360);
  CHECK(cli::parse_n("7") == 7);
  CHECK(cli::parse_n("2^10") == 1024);
  CHECK_THROWS_AS(cli::parse_n("0"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_n(""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_n("-4"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_n("4^2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_n("2^0"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_n("2^3*"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_n("2^70"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_n("12a"), std::invalid_argument);
}

TEST_CASE("index prints the Z(U_60) example") {
  const auto r = run({"index", "--n", "60", "--method", "blocks", "--format", "plain"});
  CHECK(r.code == 0);
  CHECK(r.out == kZ60);
  CHECK(run({"index", "--n", "2^2*3*5"}).out == kZ60);
}

TEST_CASE("index with every path reports agreement on stderr") {
  const auto r = run({"index", "--n", "12"});
  CHECK(r.code == 0);
  CHECK(r.out == "1/4 x1^12 + 1/4 x1^6 x2^3 + 1/4 x1^4 x2^4 + 1/4 x1^2 x2^5\n");
  CHECK(r.err == "formula = blocks = oracle\n");
}

TEST_CASE("index latex and json") {
  CHECK(run({"index", "--n", "3", "--format", "latex"}).out == "\\frac{1}{2}\\left(x_{1}^{3}+x_{1}x_{2}\\right)\n");
  const auto r = run({"index", "--n", "360", "--format", "json"});
  CHECK(r.code == 0);
  const auto back = parse_json(r.out);
  CHECK(back == cycle_index_formula(360));
  CHECK(r.out == render(back, Format::json) + "\n");
}

TEST_CASE("output is byte-deterministic") {
  const auto a = run({"index", "--n", "720", "--method", "formula"});
  const auto b = run({"index", "--n", "720", "--method", "blocks"});
  CHECK(a.out == b.out);
  CHECK(a.out == run({"index", "--n", "720"}).out);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--n", "360"});
  CHECK(r.code == 0);
  CHECK(r.out == "formula = blocks = oracle\n");
  const auto j = nlohmann::json::parse(run({"verify", "--n", "64", "--format", "json"}).out);
  CHECK(j["agree"] == true);
}

TEST_CASE("ctype") {
  const auto r = run({"ctype", "--n", "12", "--a", "11"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1^2 x2^5 (oracle: agree)\n");
  CHECK(run({"ctype", "--n", "12", "--a=-1"}).out == "x1^2 x2^5 (oracle: agree)\n");
  const auto j = nlohmann::json::parse(run({"ctype", "--n", "5", "--a", "2", "--format", "json"}).out);
  CHECK(j["ctype"] == nlohmann::json::parse(R"({"1":1,"4":1})"));
  CHECK(j["agree"] == true);
}

TEST_CASE("orbits") {
  CHECK(run({"orbits", "--n", "4"}).out == "d=1: 0\nd=2: 2\nd=4: 1 3\n");
  const auto j = nlohmann::json::parse(run({"orbits", "--n", "12", "--format", "json"}).out);
  CHECK(j["orbits"]["4"] == nlohmann::json::parse("[3,9]"));
  CHECK(run({"orbits", "--n", "4", "--format", "latex"}).out ==
        "\\Omega_{4}^{1}=\\{0\\}\n\\Omega_{4}^{2}=\\{2\\}\n\\Omega_{4}^{4}=\\{1,3\\}\n");
}

TEST_CASE("count commands") {
  CHECK(run({"count-subsets", "--n", "12"}).out == "1248\n");
  CHECK(run({"count-subsets", "--n", "12", "--k", "6"}).out == "270\n");
  CHECK(run({"count-subsets", "--n", "4", "--k", "0"}).out == "1\n");
  const auto j = nlohmann::json::parse(run({"count-subsets", "--n", "4", "--format", "json"}).out);
  CHECK(j["total"] == "12");
  CHECK(j["by_k"] == nlohmann::json::parse(R"(["1","3","4","3","1"])"));
  CHECK(run({"count-orbits", "--n", "12"}).out == "6\n");
  CHECK(run({"count-orbits", "--n", "1"}).out == "1\n");
}

TEST_CASE("large n defaults to the formula path") {
  const auto r = run({"index", "--n", "1000003"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(run({"index", "--n", "1000003", "--method", "oracle"}).code == cli::kExitInvalid);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run({"index", "--n", "0"}).code == 2);
  CHECK(run({"ctype", "--n", "12", "--a", "4"}).code == 2);
  CHECK(run({"ctype", "--n", "12"}).code == 2);
  CHECK(run({"count-subsets", "--n", "5", "--k", "6"}).code == 2);
  CHECK(run({"count-subsets", "--n", "5", "--k", "-1"}).code == 2);
  CHECK(run({"index", "--n", "5", "--method", "fast"}).code == 2);
  CHECK(run({"index", "--n", "5", "--format", "xml"}).code == 2);
  CHECK(run({"index", "--n", "5", "--a", "2"}).code == 2);
  CHECK(run({"frobnicate", "--n", "5"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"index"}).code == 2);
}

TEST_CASE("run() validates requests directly") {
  std::ostringstream out, err;
  cli::CliRequest req;
  req.command = cli::Command::index;
  req.n = 0;
  CHECK(cli::run(req, out, err) == 2);
  req.n = 10;
  req.k = 3;
  CHECK(cli::run(req, out, err) == 2);
  req.k.reset();
  req.command = cli::Command::ctype;
  CHECK(cli::run(req, out, err) == 2);
  req.a = 3;
  CHECK(cli::run(req, out, err) == 0);
}

TEST_CASE("exit codes under random invalid input") {
  std::mt19937 rng(99);
  const std::vector<std::string> bad_n{"0", "-3", "x", "2^", "^3", "6^2", "1e3", "18446744073709551616", "", "3**5"};
  const std::vector<std::string> commands{"index", "orbits", "count-subsets", "count-orbits", "verify"};
  for (int i = 0; i < 100; ++i) {
    const auto& cmd = commands[rng() % commands.size()];
    const auto& n = bad_n[rng() % bad_n.size()];
    REQUIRE(run({cmd, "--n", n}).code == 2);
  }
  for (int i = 0; i < 100; ++i) {
    const u64 n = 2 + rng() % 200;
    const i64 a = static_cast<i64>(rng() % n);
    const auto r = run({"ctype", "--n", std::to_string(n), "--a", std::to_string(a)});
    const bool unit = std::gcd(static_cast<u64>(a), n) == 1;
    REQUIRE(r.code == (unit ? 0 : 2));
  }
}
