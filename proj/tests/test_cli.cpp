#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include <polypell/gonal.hpp>
#include <polypell/pell.hpp>

namespace {

using nlohmann::json;
using polypell::Int;

struct run_result {
  int exit_code;
  std::string output;
};

run_result run_cli(const std::string& args) {
  const char* bin = std::getenv("POLYPELL_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "POLYPELL_BIN must point at the polypell binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("pell: text output and exit codes") {
  const auto ok = run_cli("pell 61");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "x = 1766319049"));
  CHECK(contains(ok.output, "y = 226153980"));

  const auto pow = run_cli("pell 2 --power 5");
  CHECK(pow.exit_code == 0);
  CHECK(contains(pow.output, "3363"));
  CHECK(contains(pow.output, "2378"));

  const auto square = run_cli("pell 9");
  CHECK(square.exit_code == 2);
  CHECK(contains(square.output, "perfect square"));

  CHECK(run_cli("pell 1").exit_code == 2);
  CHECK(run_cli("pell notanumber").exit_code == 2);
  CHECK(run_cli("pell").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("pell: json envelope round-trips against the library") {
  const auto res = run_cli("pell 13 --json --negative");
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.output);
  CHECK(doc["command"] == "pell");
  CHECK(doc["inputs"]["m"] == "13");
  CHECK(doc.contains("bounds"));
  CHECK(doc["complete_up_to_bound"] == true);

  const Int x(doc["results"]["fundamental"]["x"].get<std::string>());
  const Int y(doc["results"]["fundamental"]["y"].get<std::string>());
  CHECK(x * x - 13 * y * y == 1);
  const auto g = polypell::fundamental_solution(13);
  CHECK(x == g.x);
  CHECK(y == g.y);

  CHECK(doc["results"]["negative"]["exists"] == true);
  CHECK(doc["results"]["negative"]["x"] == "18");
}

TEST_CASE("gonal: pairs, certified negative, and exit codes") {
  const auto one = run_cli("gonal --ell 5 --m 2 --count 1");
  CHECK(one.exit_code == 0);
  CHECK(contains(one.output, "r = 7, s = 5"));
  CHECK(contains(one.output, "70 = 2 * 35"));

  const auto tri = run_cli("gonal --ell 3 --m 2 --count 2");
  CHECK(tri.exit_code == 0);
  CHECK(contains(tri.output, "6 = 2 * 3"));
  CHECK(contains(tri.output, "210 = 2 * 105"));

  const auto negative = run_cli("gonal --ell 6 --m 2");
  CHECK(negative.exit_code == 1);
  CHECK(contains(negative.output, "certified"));

  const auto check_ok = run_cli("gonal --ell 5 --m 2 --check-only");
  CHECK(check_ok.exit_code == 0);
  CHECK(contains(check_ok.output, "g_m(q) = 4"));
  CHECK(contains(check_ok.output, "n = 2"));

  const auto check_neg = run_cli("gonal --ell 6 --m 2 --check-only");
  CHECK(check_neg.exit_code == 1);
  CHECK(contains(check_neg.output, "not satisfiable"));

  const auto search = run_cli("gonal --ell 5 --m 2 --count 1 --mode search --bound 100 --jobs 2");
  CHECK(search.exit_code == 0);
  CHECK(contains(search.output, "r = 7, s = 5"));

  CHECK(run_cli("gonal --ell 4 --m 2").exit_code == 2);
  CHECK(run_cli("gonal --ell 5 --m 4").exit_code == 2);
}

TEST_CASE("gonal: json envelope re-validates and reports truncation") {
  const auto res = run_cli("gonal --ell 5 --m 2 --count 2 --json");
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.output);
  CHECK(doc["command"] == "gonal");
  CHECK(doc["results"]["q"] == "6");
  REQUIRE(doc["results"]["pairs"].size() == 2);
  for (const auto& pj : doc["results"]["pairs"]) {
    const Int r(pj["r"].get<std::string>());
    const Int s(pj["s"].get<std::string>());
    const Int big(pj["big"].get<std::string>());
    const Int small(pj["small"].get<std::string>());
    CHECK(polypell::polygonal_number(5, r) == big);
    CHECK(polypell::polygonal_number(5, s) == small);
    CHECK(big == 2 * small);
  }
  // More pairs exist within the default power bound, so a count-limited list
  // is not complete up to the bound.
  CHECK(doc["complete_up_to_bound"] == false);

  const auto negative = run_cli("gonal --ell 6 --m 2 --json");
  CHECK(negative.exit_code == 1);
  const json neg_doc = json::parse(negative.output);
  CHECK(neg_doc["results"]["certified_no_theorem_solutions"] == true);
  CHECK(neg_doc["results"]["pairs"].empty());
  CHECK(neg_doc["results"]["group_order"] == 2);
}

TEST_CASE("ratio: pairs and validation exit codes") {
  const auto two = run_cli("ratio 3 1 --count 2");
  CHECK(two.exit_code == 0);
  CHECK(contains(two.output, "3 * 1 = 1 * 3"));
  CHECK(contains(two.output, "3 * 15 = 1 * 45"));

  const auto one = run_cli("ratio 2 1 --count 1");
  CHECK(one.exit_code == 0);
  CHECK(contains(one.output, "2 * 3 = 1 * 6"));

  CHECK(run_cli("ratio 1 2").exit_code == 2);
  CHECK(run_cli("ratio 4 1").exit_code == 2);
  CHECK(run_cli("ratio 6 3").exit_code == 2);
}

TEST_CASE("simul: triples, curve report, exit codes") {
  const auto plain = run_cli("simul --ell 5 --m 6 --n 3 --bound 10000");
  CHECK(plain.exit_code == 0);
  CHECK(contains(plain.output, "P = 210, P' = 35, P'' = 70"));

  const auto curve = run_cli("simul --ell 5 --m 6 --n 3 --curve --bound 10000");
  CHECK(curve.exit_code == 0);
  CHECK(contains(curve.output, "A = 90, B = 54"));
  CHECK(contains(curve.output, "(0, 0)"));
  CHECK(contains(curve.output, "(108, 324)"));
  CHECK(contains(curve.output, "(90828, 27351756)"));

  const auto hept = run_cli("simul --ell 7 --m 12 --n 2 --bound 10000");
  CHECK(hept.exit_code == 0);
  CHECK(contains(hept.output, "P = 12852, P' = 1071, P'' = 6426"));

  CHECK(run_cli("simul --ell 5 --m 3 --n 3").exit_code == 2);
  CHECK(run_cli("simul --ell 4 --m 6 --n 3").exit_code == 2);
}

TEST_CASE("simul: json envelope re-validates") {
  const auto res = run_cli("simul --ell 5 --m 6 --n 3 --curve --bound 10000 --json");
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.output);
  CHECK(doc["results"]["curve"]["A"] == "90");
  CHECK(doc["results"]["curve"]["B"] == "54");
  CHECK(doc["results"]["points"].size() == 3);
  REQUIRE(doc["results"]["triples"].size() == 1);
  const auto& t = doc["results"]["triples"][0];
  const Int r(t["r"].get<std::string>());
  const Int P(t["P"].get<std::string>());
  CHECK(polypell::polygonal_number(5, r) == P);
  CHECK(t["P1"] == "35");
  CHECK(t["P2"] == "70");
  CHECK(doc["complete_up_to_bound"] == true);
  CHECK(doc["bounds"]["v_bound"] == "10000");
}

TEST_CASE("output is byte-identical across runs") {
  const auto a = run_cli("gonal --ell 5 --m 2 --count 2 --json");
  const auto b = run_cli("gonal --ell 5 --m 2 --count 2 --json");
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.output == b.output);

  const auto c = run_cli("simul --ell 3 --m 6 --n 2 --bound 5000");
  const auto d = run_cli("simul --ell 3 --m 6 --n 2 --bound 5000");
  CHECK(c.output == d.output);
}
