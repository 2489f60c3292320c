#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "equiloc/cli.hpp"
#include "equiloc/parse.hpp"

using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = equiloc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& body) {
  const std::string path = std::string(EQUILOC_TEST_DIR) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("thom and grassmannian") {
  auto r = call({"thom", "--k", "1", "--codim", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "c1\n");
  r = call({"thom", "--k", "2", "--codim", "0", "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["polynomial"] == "c1^2 + c2");
  CHECK(j["terms"].size() == 2);
  r = call({"grass-integrate", "--n", "4", "--k", "2", "--class", "c1^2*c2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = call({"grass-integrate", "--n", "4", "--k", "2", "--class", "c2^2"});
  CHECK(r.out == "1\n");
}

TEST_CASE("residue job") {
  auto path = write_file("job.json", R"({"numerator": "1", "denominators": ["z1", "z2 - z1"], "order": ["z1", "z2"]})");
  auto r = call({"residue", "--job", path});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = call({"--format", "json", "residue", "--job", path});
  CHECK(json::parse(r.out)["residue"] == "1");
}

TEST_CASE("error paths") {
  auto r = call({"residue", "--job", "missing.json"});
  CHECK(r.code == 2);
  auto e = json::parse(r.err);
  CHECK(e.contains("error"));
  CHECK(e.contains("message"));
  CHECK(call({"thom", "--k", "x", "--codim", "0"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({}).code == 2);
  r = call({"grass-integrate", "--n", "4", "--k", "2", "--class", "c1^("});
  CHECK(r.code == 2);
  r = call({"grass-integrate", "--n", "4", "--k", "2", "--class", "c1"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.err)["error"] == "DegreeMismatch");
  r = call({"thom", "--k", "5", "--codim", "0"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.err)["error"] == "MissingQ");
  auto bad = write_file("bad.json", "{not json");
  CHECK(call({"residue", "--job", bad}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("determinism") {
  auto a = call({"--seed", "7", "flag-check", "--n", "4", "--d", "2", "--trials", "5"});
  auto b = call({"--seed", "7", "flag-check", "--n", "4", "--d", "2", "--trials", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("all agree") != std::string::npos);
  auto c = call({"flag-check", "--n", "4", "--d", "2", "--trials", "5", "--seed", "7"});
  CHECK(c.out == a.out);
}

TEST_CASE("hyperbolicity subcommands") {
  auto r = call({"theta", "--n", "2"});
  CHECK(r.out == "12\n");
  r = call({"gg", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(equiloc::parse_polynomial(r.out.substr(0, r.out.size() - 1)) == equiloc::parse_polynomial("(1 - delta)*(d - 3)"));
  r = call({"gg", "--n", "1", "--delta", "0", "--d", "5"});
  CHECK(r.out == "2\n");
  r = call({"euler", "--n", "1", "--d", "4"});
  CHECK(equiloc::parse_polynomial(r.out.substr(0, r.out.size() - 1)) == equiloc::parse_polynomial("4*m - 2"));
}

TEST_CASE("jets") {
  auto path = write_file("jet.json", R"({"v": [[1, 2], ["1/2", 0]]})");
  auto r = call({"--format", "json", "rho", "--n", "2", "--k", "2", "--jet", path});
  REQUIRE(r.code == 0);
  auto m = json::parse(r.out)["matrix"];
  CHECK(m[0] == json({"1", "2", "0", "0", "0"}));
  CHECK(m[1] == json({"1/2", "0", "1", "4", "4"}));
  r = call({"minors", "--n", "2", "--k", "2", "--jet", path});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 3) == "-1\n");
  CHECK(call({"minors", "--n", "3", "--k", "2", "--jet", path}).code == 1);
  r = call({"--format", "json", "rho", "--n", "2", "--k", "4"});
  CHECK(json::parse(r.out)["matrix"][0].size() == 14);
}
