#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "probgroup/io.hpp"
#include "test_util.hpp"

using namespace probgroup;
using nlohmann::json;
using testutil::dataPath;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("probgroup-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("scalar entries accept numbers, expressions, and re-im pairs") {
  CHECK(parseScalarEntry(json(2.5)) == Complex(2.5, 0));
  CHECK(parseScalarEntry(json(-3)) == Complex(-3, 0));
  CHECK(std::abs(parseScalarEntry(json("1/3")) - Complex(1.0 / 3.0, 0)) == 0);
  CHECK(std::abs(parseScalarEntry(json("zeta(4,1)")) - Complex(0, 1)) < 1e-15);
  CHECK(parseScalarEntry(json::array({1.0, -2.0})) == Complex(1, -2));

  CHECK_THROWS_AS(parseScalarEntry(json(true)), InputError);
  CHECK_THROWS_AS(parseScalarEntry(json(nullptr)), InputError);
  CHECK_THROWS_AS(parseScalarEntry(json::array({1.0, 2.0, 3.0})), InputError);
  CHECK_THROWS_AS(parseScalarEntry(json::array({"a", "b"})), InputError);
  CHECK_THROWS_AS(parseScalarEntry(json("not an expression")), InputError);
}

TEST_CASE("file loading failure modes") {
  TempDir tmp;
  CHECK_THROWS_AS(loadJsonFile(tmp.file("missing.json")), InputError);

  {
    std::ofstream out(tmp.file("broken.json"));
    out << "{ this is not json";
  }
  CHECK_THROWS_AS(loadJsonFile(tmp.file("broken.json")), InputError);

  {
    std::ofstream out(tmp.file("array.json"));
    out << "[1, 2, 3]";
  }
  CHECK_THROWS_AS(loadJsonFile(tmp.file("array.json")), InputError);
}

TEST_CASE("kind detection") {
  CHECK(detectKind(json{{"kind", "fusion"}}) == "fusion");
  CHECK_THROWS_AS(detectKind(json{{"rank", 2}}), InputError);
  CHECK_THROWS_AS(detectKind(json{{"kind", 7}}), InputError);
}

TEST_CASE("based rings round-trip through their file form") {
  for (const char* name : {"z4.fusion.json", "ising.fusion.json",
                           "s3rep.fusion.json"}) {
    CAPTURE(name);
    FusionRing R = testutil::loadRing(name);
    FusionRing R2 = parseFusionRing(toJson(R));
    CHECK(R2.rank == R.rank);
    CHECK(R2.labels == R.labels);
    CHECK(R2.unit == R.unit);
    CHECK(R2.dual == R.dual);
    for (int i = 0; i < R.rank; ++i)
      for (int j = 0; j < R.rank; ++j)
        for (int k = 0; k < R.rank; ++k)
          CHECK(R2.N(i, j, k) == R.N(i, j, k));
  }
}

TEST_CASE("modular data round-trips complex entries as re-im pairs") {
  ModularData M;
  M.rank = 2;
  M.labels = {"u", "v"};
  M.dual = {0, 1};
  M.S.resize(2, 2);
  M.S << Complex(0.5, 0), Complex(0.25, 0.75), Complex(0.25, 0.75),
      Complex(-0.5, 0);

  json j = toJson(M);
  // real entries stay plain numbers; complex entries become [re, im]
  CHECK(j["S"][0][0].is_number());
  CHECK(j["S"][0][1].is_array());

  ModularData M2 = parseModularData(j);
  CHECK(M2.rank == 2);
  CHECK(M2.labels == M.labels);
  CHECK(M2.dual == M.dual);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) CHECK(M2.S(i, k) == M.S(i, k));
}

TEST_CASE("sparse and dense tensors parse identically") {
  json dense = loadJsonFile(dataPath("z3.fusion.json"));
  FusionRing R = parseFusionRing(dense);

  json sparse;
  sparse["kind"] = "fusion";
  sparse["rank"] = 3;
  sparse["labels"] = dense["labels"];
  sparse["unit"] = 0;
  sparse["dual"] = dense["dual"];
  json rows = json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (R.N(i, j, k) != 0)
          rows.push_back(json::array({i, j, k, R.N(i, j, k)}));
  sparse["N_sparse"] = rows;

  FusionRing R2 = parseFusionRing(sparse);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(R2.N(i, j, k) == R.N(i, j, k));
}

TEST_CASE("fusion parsing failure modes") {
  json good = loadJsonFile(dataPath("z2.fusion.json"));

  SUBCASE("fractional multiplicity") {
    json bad = good;
    bad["N"][1][1][0] = 0.5;
    CHECK_THROWS_AS(parseFusionRing(bad), InputError);
  }
  SUBCASE("missing dual") {
    json bad = good;
    bad.erase("dual");
    CHECK_THROWS_AS(parseFusionRing(bad), InputError);
  }
  SUBCASE("wrong label count") {
    json bad = good;
    bad["labels"] = json::array({"only-one"});
    CHECK_THROWS_AS(parseFusionRing(bad), InputError);
  }
  SUBCASE("ragged dense tensor") {
    json bad = good;
    bad["N"][1] = json::array({json::array({0, 1})});
    CHECK_THROWS_AS(parseFusionRing(bad), InputError);
  }
}

TEST_CASE("probability tensors must be real and match declared weights") {
  json good = loadJsonFile(dataPath("s3class.probgroup.json"));
  ProbabilityGroup P = parseProbabilityGroup(good);

  // fraction strings evaluate to exact binary doubles
  CHECK(P.p(1, 1, 0) == 1.0 / 3.0);
  CHECK(P.p(1, 1, 2) == 2.0 / 3.0);
  CHECK(P.h(1) == 3.0);

  SUBCASE("a declared weight that disagrees with the tensor") {
    json bad = good;
    bad["weights"][1] = 4;
    CHECK_THROWS_AS(parseProbabilityGroup(bad), InputError);
  }
  SUBCASE("a complex probability entry") {
    json bad = good;
    bad["p"][0][0][0] = json::array({0.5, 0.5});
    CHECK_THROWS_AS(parseProbabilityGroup(bad), InputError);
  }
}

TEST_CASE("group tables parse from flat row-major form") {
  FiniteGroup G = parseGroup(loadJsonFile(dataPath("z4.group.json")));
  CHECK(G.order == 4);
  CHECK(G.mul(1, 1) == 2);
  CHECK(G.mul(3, 1) == 0);

  json bad;
  bad["kind"] = "group";
  bad["order"] = 2;
  bad["table"] = json::array({0, 1, 1});  // wrong length
  CHECK_THROWS_AS(parseGroup(bad), InputError);
}

TEST_CASE("center pairs resolve file references relative to their directory") {
  TempDir tmp;

  FusionRing R = testutil::loadRing("z2.fusion.json");
  writeJsonFile(tmp.file("base.fusion.json"), toJson(R));

  ModularData M;
  M.rank = 4;
  M.labels = {"a", "b", "c", "d"};
  M.dual = {0, 1, 2, 3};
  M.S.resize(4, 4);
  M.S << 0.5, 0.5, 0.5, 0.5,  //
      0.5, 0.5, -0.5, -0.5,   //
      0.5, -0.5, 0.5, -0.5,   //
      0.5, -0.5, -0.5, 0.5;
  writeJsonFile(tmp.file("center.modular.json"), toJson(M));

  Eigen::MatrixXi branching(4, 2);
  branching << 1, 0, 0, 1, 1, 0, 0, 1;
  std::vector<int> iota = {0, 1};

  json cp = centerPairJson("base.fusion.json", "center.modular.json",
                           branching, iota);
  writeJsonFile(tmp.file("pair.centerpair.json"), cp);

  json loaded = loadJsonFile(tmp.file("pair.centerpair.json"));
  CHECK(detectKind(loaded) == "centerpair");
  CenterPair parsed = parseCenterPair(loaded, tmp.path.string());
  CHECK(parsed.base.rank == 2);
  CHECK(parsed.center.rank == 4);
  CHECK((parsed.branching - branching).cwiseAbs().sum() == 0);
  CHECK(parsed.iota == iota);

  SUBCASE("a reference of the wrong kind is rejected") {
    json bad = cp;
    bad["base"] = "center.modular.json";
    CHECK_THROWS_AS(parseCenterPair(bad, tmp.path.string()), InputError);
  }
  SUBCASE("a dangling reference is rejected") {
    json bad = cp;
    bad["center"] = "nowhere.modular.json";
    CHECK_THROWS_AS(parseCenterPair(bad, tmp.path.string()), InputError);
  }
}

TEST_CASE("written files end with a newline and reload identically") {
  TempDir tmp;
  FusionRing R = testutil::loadRing("fib.fusion.json");
  writeJsonFile(tmp.file("out.json"), toJson(R));

  std::ifstream in(tmp.file("out.json"), std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  REQUIRE_FALSE(text.empty());
  CHECK(text.back() == '\n');

  FusionRing R2 = parseFusionRing(loadJsonFile(tmp.file("out.json")));
  CHECK(R2.rank == R.rank);
  CHECK(R2.dual == R.dual);
}
