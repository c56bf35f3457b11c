#include <doctest.h>

#include <sstream>
#include <string>

#include "rooksa/ballots.hpp"
#include "rooksa/fixtures.hpp"
#include "rooksa/report_render.hpp"

using namespace rooksa;

TEST_CASE("csv ballot parsing") {
  std::istringstream in("vote,count\n[3,-,-,2,1],75\n[1,2,3,4,5],1\n[3,-,-,2,1],5\n");
  Dataset d = parse_ballots_csv(in);
  CHECK(d.n == 5);
  CHECK(d.total() == 81);
  PartialRanking vote = PartialRanking::parse("[3,-,-,2,1]");
  CHECK(d.counts.at(vote) == 80); // duplicate rows accumulate
  CHECK(vote.image(1) == 3);
  CHECK(vote.image(4) == 2);
  CHECK(vote.image(5) == 1);
}

TEST_CASE("csv parse errors carry line numbers") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_ballots_csv(in);
  };
  CHECK_THROWS_AS(parse("vote,count\n[1,1,-,-,-],1\n"), BallotParseError);
  try {
    parse("vote,count\n[1,2,-,-,-],1\n[1,1,-,-,-],1\n");
    CHECK(false);
  } catch (const BallotParseError& e) {
    CHECK(e.line_number == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("vote,count\n[6,-,-,-,-],1\n"), BallotParseError);
  CHECK_THROWS_AS(parse("vote,count\n[1,2,-,-,-],-4\n"), BallotParseError);
  CHECK_THROWS_AS(parse("vote,count\n[1,2,-,-,-],x\n"), BallotParseError);
  CHECK_THROWS_AS(parse("count,vote\n"), BallotParseError);
  CHECK_THROWS_AS(parse("vote,count\n[1,2],1\n[1,2,3],1\n"), BallotParseError);
  CHECK_THROWS_AS(parse(""), BallotParseError);
}

TEST_CASE("json ballot parsing") {
  std::istringstream in(
      R"({"n": 5, "ballots": [{"vote": "[3,-,-,2,1]", "count": 75},
                              {"vote": "[1,2,3,4,5]", "count": 1}]})");
  Dataset d = parse_ballots(in);
  CHECK(d.n == 5);
  CHECK(d.total() == 76);

  std::istringstream bad(R"({"ballots": [{"vote": "[1,2]", "count": -1}]})");
  CHECK_THROWS_AS(parse_ballots_json(bad), BallotParseError);
}

TEST_CASE("csv round trip") {
  Dataset d = *fixture_dataset("apa-rank3");
  std::string rendered = render_ballots_csv(d);
  std::istringstream in(rendered);
  Dataset back = parse_ballots_csv(in);
  CHECK(back.n == d.n);
  CHECK(back.counts == d.counts);
}

TEST_CASE("fixtures are present and sized as documented") {
  CHECK(fixtures().size() == 2);
  Dataset apa = *fixture_dataset("apa-rank3");
  CHECK(apa.n == 5);
  CHECK(apa.counts.size() == 60);
  CHECK(apa.total() == 2108);
  Dataset small = *fixture_dataset("example-4-7");
  CHECK(small.n == 2);
  CHECK(small.total() == 23);
  CHECK_FALSE(fixture_dataset("missing").has_value());
}

TEST_CASE("config validation") {
  Dataset d = *fixture_dataset("example-4-7");
  RunConfig config;
  config.max_order = 3; // data holds ranks up to 2
  CHECK_THROWS_AS(run_analysis(config, d), ConfigError);
  config.max_order = 2;
  config.ranks = std::vector<int>{0, 7};
  CHECK_THROWS_AS(run_analysis(config, d), ConfigError);
  config.ranks.reset();
  config.energy_subset = {IntegerPartition({4})};
  CHECK_THROWS_AS(run_analysis(config, d), ConfigError);
  config.energy_subset.clear();
  CHECK_NOTHROW(run_analysis(config, d));
}

TEST_CASE("report output is byte deterministic") {
  Dataset d = *fixture_dataset("apa-rank3");
  RunConfig config;
  config.format = ReportFormat::text;
  std::string first = run(config, d);
  std::string second = run(config, d);
  CHECK(first == second);
  CHECK(first.find("309") != std::string::npos);
  CHECK(first.find("-38.33") != std::string::npos);

  config.format = ReportFormat::csv;
  std::string csv = run(config, d);
  CHECK(csv == run(config, d));
  CHECK(csv.rfind("table,rank,domain,range,row,col,num,den,value\n", 0) == 0);
  CHECK(csv.find("first,3,1 4 5,1 2 3,1,1,-115,3,-38.33") != std::string::npos);

  config.format = ReportFormat::json;
  std::string json = run(config, d);
  CHECK(json == run(config, d));
  CHECK(json.find("\"decimal\": \"-38.33\"") != std::string::npos);
}

TEST_CASE("the natural-product run renders the worked triple") {
  Dataset d = *fixture_dataset("example-4-7");
  RunConfig config;
  config.association = Basis::semigroup;
  config.ip = InnerProduct::natural;
  std::string text = run(config, d);
  CHECK(text.find("value=9") != std::string::npos);
  CHECK(text.find("<f,E^l>_s=4") != std::string::npos);
  CHECK(text.find("<f^l,E^l>_s=32") != std::string::npos);
}

TEST_CASE("empty dataset renders an all-zero report") {
  std::istringstream in("vote,count\n");
  Dataset d = parse_ballots_csv(in, 3);
  CHECK(d.total() == 0);
  RunConfig config;
  config.max_order = 2;
  std::string text = run(config, d);
  CHECK(text.find("ballots: 0") != std::string::npos);
}

TEST_CASE("rank filter restricts rendered sections") {
  Dataset d = *fixture_dataset("apa-rank3");
  RunConfig config;
  config.ranks = std::vector<int>{3};
  std::string text = run(config, d);
  CHECK(text.find("== rank 3 ==") != std::string::npos);
  CHECK(text.find("== rank 2 ==") == std::string::npos);
}
