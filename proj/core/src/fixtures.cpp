#include "rooksa/fixtures.hpp"

namespace rooksa {

namespace {

struct Row {
  const char* vote;
  long long count;
};

// 1980 APA election, ballots ranking exactly three of the five candidates.
constexpr Row kApaRank3[] = {
    {"[1,2,3,-,-]", 27}, {"[3,1,-,-,2]", 38}, {"[1,-,-,2,3]", 44},
    {"[-,3,1,-,2]", 16}, {"[1,3,2,-,-]", 79}, {"[2,3,-,-,1]", 35},
    {"[1,-,-,3,2]", 35}, {"[-,2,3,-,1]", 14}, {"[2,1,3,-,-]", 31},
    {"[3,2,-,-,1]", 41}, {"[2,-,-,1,3]", 46}, {"[-,3,2,-,1]", 15},
    {"[3,1,2,-,-]", 32}, {"[1,-,2,3,-]", 30}, {"[2,-,-,3,1]", 62},
    {"[-,1,-,2,3]", 55}, {"[2,3,1,-,-]", 83}, {"[1,-,3,2,-]", 21},
    {"[3,-,-,1,2]", 90}, {"[-,1,-,3,2]", 45}, {"[3,2,1,-,-]", 57},
    {"[2,-,1,3,-]", 39}, {"[3,-,-,2,1]", 75}, {"[-,2,-,1,3]", 54},
    {"[1,2,-,3,-]", 19}, {"[3,-,1,2,-]", 15}, {"[-,1,2,3,-]", 9},
    {"[-,3,-,1,2]", 62}, {"[1,3,-,2,-]", 22}, {"[2,-,3,1,-]", 15},
    {"[-,1,3,2,-]", 17}, {"[-,2,-,3,1]", 50}, {"[2,1,-,3,-]", 31},
    {"[3,-,2,1,-]", 13}, {"[-,3,1,2,-]", 26}, {"[-,3,-,2,1]", 59},
    {"[3,1,-,2,-]", 45}, {"[1,-,3,-,2]", 41}, {"[-,2,1,3,-]", 17},
    {"[-,-,1,2,3]", 15}, {"[2,3,-,1,-]", 28}, {"[1,-,2,-,3]", 49},
    {"[-,2,3,1,-]", 21}, {"[-,-,1,3,2]", 19}, {"[3,2,-,1,-]", 51},
    {"[2,-,1,-,3]", 74}, {"[-,3,2,1,-]", 18}, {"[-,-,2,1,3]", 16},
    {"[1,2,-,-,3]", 26}, {"[3,-,1,-,2]", 47}, {"[-,1,2,-,3]", 8},
    {"[-,-,3,1,2]", 46}, {"[1,3,-,-,2]", 31}, {"[2,-,3,-,1]", 37},
    {"[-,1,3,-,2]", 15}, {"[-,-,2,3,1]", 17}, {"[2,1,-,-,3]", 17},
    {"[3,-,2,-,1]", 32}, {"[-,2,1,-,3]", 16}, {"[-,-,3,2,1]", 20},
};

// A small R_2 element with counts 1, 2, 4, 7, 6, 3 on the identity, the
// swap, 1->1, 1->2, 2->1 and the null ranking.
constexpr Row kExample47[] = {
    {"[1,2]", 1}, {"[2,1]", 2}, {"[1,-]", 4},
    {"[2,-]", 7}, {"[-,1]", 6}, {"[-,-]", 3},
};

template <std::size_t N>
Dataset build(int n, const Row (&rows)[N]) {
  Dataset d;
  d.n = n;
  for (const Row& row : rows) {
    d.add(PartialRanking::parse(row.vote), row.count);
  }
  return d;
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"apa-rank3",
                 "1980 APA election: five candidates, the 60 ballot types that "
                 "rank exactly three candidates (2108 votes)",
                 build(5, kApaRank3)});
  out.push_back({"example-4-7",
                 "R_2 micro-example: counts 1,2,4,7,6,3 over six of the seven "
                 "partial rankings of two candidates",
                 build(2, kExample47)});
  return out;
}

} // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build_fixtures();
  return all;
}

std::optional<Dataset> fixture_dataset(const std::string& name) {
  for (const Fixture& f : fixtures()) {
    if (f.name == name) {
      return f.dataset;
    }
  }
  return std::nullopt;
}

} // namespace rooksa
