#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "cli_runner.hpp"

namespace {

const std::string kCli = LNDEXP_CLI_PATH;
const std::string kGoldenDir = LNDEXP_GOLDEN_DIR;

std::string golden(const std::string& name) {
  return cli_runner::read_file(kGoldenDir + "/" + name);
}

cli_runner::RunResult run(const std::vector<std::string>& args,
                          const std::string& stdin_text = "") {
  return cli_runner::run(kCli, args, stdin_text);
}

const std::vector<std::string> kNagataDerivation = {
    "--vars", "X,Y,Z", "--derivation", "-2*Y*(X*Z+Y^2); Z*(X*Z+Y^2); 0"};

std::vector<std::string> with(std::vector<std::string> base,
                              const std::vector<std::string>& extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

}  // namespace

TEST_CASE("exp golden outputs") {
  auto r = run(with({"exp"}, kNagataDerivation));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("exp_nagata.txt"));
  CHECK(r.err.empty());

  r = run(with({"exp"}, with(kNagataDerivation, {"--output", "json"})));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("exp_nagata.json"));

  r = run({"exp", "--vars", "X,Y", "--derivation", "Y; 0"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "X + Y\nY\n");

  r = run({"exp", "--vars", "X", "--derivation", "0"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "X\n");
}

TEST_CASE("exp reads components from a file and from stdin") {
  auto r = run({"exp", "--vars", "X,Y,Z", "--file", "-"},
               "-2*Y*(X*Z+Y^2)\nZ*(X*Z+Y^2)\n0\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("exp_nagata.txt"));
}

TEST_CASE("exp failure modes") {
  auto r = run({"exp", "--vars", "X", "--derivation", "X +"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("error:") == 0);

  r = run({"exp", "--vars", "X,Y", "--derivation", "X; 0"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("nilpotency not detected for generator X") != std::string::npos);
}

TEST_CASE("minpoly golden outputs") {
  auto r = run(with({"minpoly"}, with(kNagataDerivation, {"--oracle"})));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("minpoly_nagata.txt"));

  r = run(with({"minpoly"}, with(kNagataDerivation, {"--oracle", "--output", "json"})));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("minpoly_nagata.json"));

  r = run({"minpoly", "--vars", "X", "--map", "2*X"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("minpoly_doubling.txt"));

  r = run({"minpoly", "--vars", "X,Y", "--derivation", "0; 0"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "minpoly: T - 1\nd: 1\ncertified_by: theorem\n");
}

TEST_CASE("minpoly rejects maps with no dependence within the bound") {
  auto r = run({"minpoly", "--vars", "X", "--map", "X^2", "--max-degree", "6"});
  CHECK(r.exit_code == 4);
  CHECK(r.err.find("not locally finite") != std::string::npos);
}

TEST_CASE("invert golden outputs") {
  auto r = run({"invert", "--vars", "X,Y", "--derivation", "Y; 0"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "X - Y\nY\n");

  r = run({"invert", "--vars", "X,Y,Z", "--derivation", "0; 0; 0"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "X\nY\nZ\n");

  r = run(with({"invert"}, kNagataDerivation));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("invert_nagata.txt"));
}

TEST_CASE("log golden outputs") {
  auto r = run({"log", "--vars", "X,Y,Z", "--map",
                "X - 2*Y*(X*Z+Y^2) - Z*(X*Z+Y^2)^2; Y + Z*(X*Z+Y^2); Z"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("log_nagata.txt"));

  r = run({"log", "--vars", "X,Y,Z", "--map", "X; Y; Z"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0\n0\n0\nd: 1\n");

  r = run({"log", "--vars", "X,Y,Z", "--map", "X + Y; Y + Z; Z"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("log_triangular.txt"));

  r = run({"log", "--vars", "X", "--map", "2*X"});
  CHECK(r.exit_code == 4);
}

TEST_CASE("verify golden outputs") {
  auto r = run(with({"verify"}, kNagataDerivation));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("verify_nagata.txt"));

  r = run({"verify", "--vars", "X,Y,Z", "--derivation", "0; 0; 0"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("verify_zero.txt"));

  r = run({"verify", "--vars", "X,Y", "--derivation", "X; 0"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("nilpotency not detected") != std::string::npos);
}

TEST_CASE("beta outputs") {
  auto r = run({"beta", "--d", "3", "--i", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0\n");

  r = run({"beta", "--d", "1", "--i", "4"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-1\n");

  r = run({"beta", "--d", "3", "--i", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-6\n");

  r = run({"beta", "--table", "4", "6"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("beta_table.txt"));

  r = run({"beta", "--d", "3", "--i", "2", "--output", "json"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"d\":3,\"i\":2,\"result\":\"0\"}\n");
}

TEST_CASE("usage errors exit with the parse-error code") {
  auto r = run({"frobnicate"});
  CHECK(r.exit_code == 1);

  r = run({"exp", "--vars", "X,Y"});  // missing --derivation
  CHECK(r.exit_code == 1);

  r = run({"minpoly", "--vars", "X", "--derivation", "0", "--map", "X"});
  CHECK(r.exit_code == 1);

  r = run({"exp", "--vars", "X,,Y", "--derivation", "0; 0"});
  CHECK(r.exit_code == 1);
}
