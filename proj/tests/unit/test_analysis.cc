#include "doctest.h"

#include "sclosure/analysis.h"
#include "sclosure/report.h"

using namespace sclosure;

TEST_CASE("analysis of PSL(2,19) at 3")
{
  auto G = corpus_load("PSL2_19");
  auto rep = analyze(G, 3);
  REQUIRE(rep.sylow);
  CHECK(rep.sylow->order == 9);
  CHECK(rep.sylow->abelian);
  REQUIRE(rep.all_closed);
  REQUIRE(rep.all_closed->size() == 3);
  CHECK((*rep.all_closed)[1].order == 3);
  CHECK(rep.normalizer_S_order == BigInt(18));
  REQUIRE(rep.fusion_S);
  CHECK(rep.fusion_S->controls);
  CHECK(rep.verdict_agrees == true);
  CHECK(rep.refused.empty());
  // script_O(Z3) is trivial, script_O(S) is G
  CHECK(rep.closed[1].script_O->order == 1);
  CHECK(rep.closed[2].script_O->order == 3420);
}

TEST_CASE("analysis surfaces refusals per section")
{
  Caps caps = default_caps();
  caps.max_subgroup_enum = 4;
  auto rep = analyze(corpus_load("PSL2_19"), 3, {}, caps);
  CHECK(rep.refused.count("all_strongly_closed") == 1);
  CHECK_FALSE(rep.all_closed);
  // falls back to the minimal ones plus S
  CHECK(rep.closed.size() == 2);
}

TEST_CASE("lie crosscheck inside analysis")
{
  auto rep = analyze(corpus_load("SL2_19"), 3);
  REQUIRE(rep.lie);
  CHECK(rep.lie->agree == true);
  CHECK(rep.lie->predicted.exponent == 9);
}

TEST_CASE("crosscheck without a realization is predictor only")
{
  auto r = crosscheck(LieSpec::parse("E8(2)"), 3);
  CHECK_FALSE(r.agree);
  CHECK_FALSE(r.brute);
  CHECK(r.predicted.order == BigInt(1594323));

  Caps tiny = default_caps();
  tiny.max_degree = 10;
  auto r2 = crosscheck(LieSpec::parse("A1(19)"), 3, tiny);
  CHECK_FALSE(r2.agree);
  CHECK(r2.note.find("refused") != std::string::npos);
}

TEST_CASE("JSON round trip is stable")
{
  auto rep = analyze(corpus_load("U3_3"), 3);
  Json j = to_json(rep);
  std::string once = j.dump();
  std::string twice = Json::parse(once).dump();
  CHECK(once == twice);
  // a second run differs at most in the timing
  auto again = to_json(analyze(corpus_load("U3_3"), 3));
  CHECK(without_timing(j).dump() == without_timing(again).dump());
  CHECK_FALSE(without_timing(j).contains("timing_ms"));
  CHECK(j["sylow"]["order"] == 27);
  CHECK(j["group"]["name"] == "U3_3");
}

TEST_CASE("big numbers are strings only when they must be")
{
  CHECK(big_json(BigInt(12)).is_number());
  BigInt huge = BigInt(1) << 80;
  CHECK(big_json(huge).is_string());
  CHECK(big_json(huge).get<std::string>() == huge.str());
}
