#include "catch_amalgamated.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>

#include "krstrata/strata.hpp"
#include "krstrata/wire.hpp"

using namespace krs;

#ifndef KRSTRATA_CLI
#error "KRSTRATA_CLI must name the CLI binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + KRSTRATA_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

} // namespace

TEST_CASE("JSON records round-trip", "[wire]") {
  for (int g = 1; g <= 3; ++g)
    for (const auto& x : enumerate_adm(g)) {
      const auto j = to_json(x);
      CHECK(element_from_json(Json::parse(j.dump())) == x);
      CHECK(to_json(element_from_json(j)).dump() == j.dump());
      std::vector<std::string> keys;
      for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
      CHECK(keys == record_fields());
    }
  auto j = to_json(AdmissibleElement(tau(2)));
  j["length"] = 7;
  CHECK_THROWS_AS(element_from_json(j), InvalidValue);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"g": 1})")), InvalidValue);
}

TEST_CASE("CSV rows round-trip and agree with JSON", "[wire]") {
  CHECK(csv_header() == "g,x0,w,u,sigma,length,prank,fixed,cycles,kernels,possibly_maximal");
  const auto t = AdmissibleElement(tau(1));
  CHECK(to_csv_row(t) == "1,0;1,2;1,1,1,0,0,,(1),alpha_p;alpha_p,true");
  for (int g = 1; g <= 3; ++g)
    for (const auto& x : enumerate_adm(g)) {
      const auto row = to_csv_row(x);
      CHECK(element_from_csv_row(row) == x);
      // every JSON field is recoverable from the row
      const auto j = to_json(x);
      const auto cols = detail::split(row, ',');
      CHECK(detail::parse_ints(cols[1], ';') == j["x0"].get<std::vector<int>>());
      CHECK(detail::parse_ints(cols[4], ';') == j["sigma"].get<std::vector<int>>());
      CHECK(std::stoi(cols[5]) == j["length"].get<int>());
      CHECK(detail::parse_ints(cols[7], ';') == j["fixed"].get<std::vector<int>>());
      CHECK(detail::split(cols[9], ';') == j["kernels"].get<std::vector<std::string>>());
      CHECK((cols[10] == "true") == j["possibly_maximal"].get<bool>());
    }
  CHECK_THROWS_AS(element_from_csv_row("1,0;1,2;1"), InvalidValue);
  CHECK_THROWS_AS(element_from_csv_row("1,0;1,2;1,1,1,5,0,,(1),alpha_p;alpha_p,true"), InvalidValue);
}

TEST_CASE("DOT and JSON diagrams", "[wire]") {
  const auto h = covers(enumerate_adm(1));
  const auto dot = to_dot(h);
  CHECK(dot.rfind("digraph hasse {\n", 0) == 0);
  CHECK(dot.find("\"g1_x00.1_w2.1\" [label=\"g1_x00.1_w2.1\\nlength 0\"];") != std::string::npos);
  CHECK(dot.find("\"g1_x00.1_w2.1\" -> \"g1_x01.0_w1.2\";") != std::string::npos);
  const auto j = to_json(h);
  CHECK(j["nodes"].size() == 3);
  CHECK(j["edges"].size() == 2);
  CHECK(j["nodes"][0]["id"] == "g1_x00.1_w1.2");
  CHECK(j["nodes"][0]["length"] == 1);
}

TEST_CASE("cli enumerate", "[cli]") {
  const auto r1 = run("enumerate --g 1");
  CHECK(r1.code == 0);
  CHECK(Json::parse(r1.out).size() == 3);

  const auto r2 = run("enumerate --g 2 --prank 2");
  CHECK(r2.code == 0);
  const auto j2 = Json::parse(r2.out);
  CHECK(j2.size() == 4);
  for (const auto& rec : j2) CHECK(rec["length"] == 3);

  const auto csv = run("enumerate --g 2 --prank 2 --format csv");
  CHECK(csv.code == 0);
  const auto rows = lines(csv.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == csv_header());
  for (std::size_t i = 0; i < 4; ++i) CHECK(to_json(element_from_csv_row(rows[i + 1])) == j2[i]);

  const auto fixed = run("enumerate --g 2 --fixed 2");
  CHECK(fixed.code == 0);
  for (const auto& rec : Json::parse(fixed.out)) CHECK(rec["fixed"] == Json::array({2}));

  CHECK(run("enumerate --g 0").code == 2);
  CHECK(run("enumerate --g 2 --prank 3").code == 2);
  CHECK(run("enumerate --g 2 --format xml").code == 2);
  CHECK(run("enumerate").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("enumerate --g 6").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("cli element", "[cli]") {
  const auto t = run("element --g 1 --x0 0,1 --w 2,1");
  CHECK(t.code == 0);
  const auto jt = Json::parse(t.out);
  CHECK(jt["admissible"] == true);
  CHECK(jt["record"]["prank"] == 0);
  CHECK(jt["record"]["length"] == 0);
  CHECK(jt["record"] == to_json(AdmissibleElement(tau(1))));

  const auto bad = run("element --g 1 --x0 1,0 --w 2,1");
  CHECK(bad.code == 0);
  const auto jb = Json::parse(bad.out);
  CHECK(jb["admissible"] == false);
  CHECK(jb["violation"]["kind"] == "coordinate");
  CHECK(jb["violation"]["message"] == "x0(1) must be 0 since w⁻¹(1) > 1");

  const auto size = run("element --g 1 --x0 1,1 --w 1,2");
  CHECK(size.code == 0);
  const auto js = Json::parse(size.out);
  CHECK(js["admissible"] == false);
  CHECK(js["violation"]["kind"] == "size");

  CHECK(run("element --g 1 --x0 1,0,0 --w 2,1").code == 2);
  CHECK(run("element --g 1 --x0 a,0 --w 2,1").code == 2);
  CHECK(run("element --g 2 --x0 0,0,1,1 --w 2,1,3,4").code == 2); // not symplectic
}

TEST_CASE("cli verify", "[cli]") {
  const auto all = run("verify --g 2 --check all");
  CHECK(all.code == 0);
  CHECK(all.out.rfind("check ", 0) == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  const auto r = run("verify --g 3 --check dim,counts --format json");
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["g"] == 3);
  CHECK(j["checks"].size() == 12); // dim, dim/codim and counts for d = 0..3
  for (const auto& c : j["checks"]) {
    CHECK(c["pass"] == true);
    CHECK(c.contains("counterexamples"));
  }
  CHECK(run("verify --g 9").code == 2);
  CHECK(run("verify --g 2 --check nope").code == 2);
  CHECK(run("verify --g 6 --check dim --budget 6").code == 0);
  CHECK(run("verify --g 6 --check dim", "STRATA_BUDGET=6").code == 0);
  CHECK(run("verify --g 6 --check dim", "STRATA_BUDGET=5").code == 2);
  CHECK(run("verify --g 2 --budget 0").code == 2);
}

TEST_CASE("cli hasse", "[cli]") {
  const auto h1 = run("hasse --g 1 --format json");
  CHECK(h1.code == 0);
  const auto j1 = Json::parse(h1.out);
  CHECK(j1["nodes"].size() == 3);
  CHECK(j1["edges"].size() == 2);

  const auto h2 = run("hasse --g 2 --prank 2 --format json");
  const auto j2 = Json::parse(h2.out);
  CHECK(j2["nodes"].size() == 4);
  CHECK(j2["edges"].empty());

  const auto dot = run("hasse --g 2");
  CHECK(dot.code == 0);
  CHECK(dot.out == to_dot(covers(enumerate_adm(2))));
  CHECK(run("hasse --g 2 --format csv").code == 2);
}

TEST_CASE("cli closure", "[cli]") {
  const auto c = run("closure --g 2 --prank 1 --compare");
  CHECK(c.code == 0);
  const auto j = Json::parse(c.out);
  CHECK(j["equal"] == true);
  CHECK(j["computed"].size() == 8);
  CHECK(j["predicted_only"].empty());
  CHECK(j["computed_only"].empty());

  const auto t = run("closure --g 1 --prank 0");
  CHECK(t.code == 0);
  const auto jt = Json::parse(t.out);
  REQUIRE(jt.size() == 1);
  CHECK(jt[0] == to_json(AdmissibleElement(tau(1))));

  CHECK(run("closure --g 3 --prank 2 --compare").code == 0);
  const auto csv = run("closure --g 2 --prank 1 --format csv");
  CHECK(lines(csv.out).size() == 9);
  CHECK(run("closure --g 2").code == 2);
  CHECK(run("closure --g 2 --prank 5").code == 2);
}
