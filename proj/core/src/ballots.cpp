#include "rooksa/ballots.hpp"

#include <istream>
#include <sstream>

#include <json.hpp>

namespace rooksa {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long long parse_count(const std::string& text, int line) {
  std::string t = strip(text);
  if (t.empty()) {
    throw BallotParseError("missing count", line);
  }
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(t, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != t.size()) {
    throw BallotParseError("bad count '" + t + "'", line);
  }
  if (value < 0) {
    throw BallotParseError("negative count " + t, line);
  }
  return value;
}

void add_vote(Dataset& d, const std::string& vote_text, long long count,
              std::optional<int>& expected_n, int line) {
  PartialRanking vote;
  try {
    vote = PartialRanking::parse(vote_text);
  } catch (const std::invalid_argument& e) {
    throw BallotParseError(e.what(), line);
  }
  if (!expected_n) {
    expected_n = vote.n();
    d.n = vote.n();
  }
  if (vote.n() != *expected_n) {
    throw BallotParseError("vote " + vote_text + " has ambient size " +
                               std::to_string(vote.n()) + ", expected " +
                               std::to_string(*expected_n),
                           line);
  }
  d.counts[vote] += count;
}

} // namespace

Dataset parse_ballots_csv(std::istream& in, std::optional<int> expected_n) {
  Dataset d;
  d.n = expected_n.value_or(0);
  std::string line_text;
  int line = 0;
  bool header_seen = false;
  while (std::getline(in, line_text)) {
    ++line;
    std::string t = strip(line_text);
    if (t.empty()) {
      continue;
    }
    if (!header_seen) {
      if (t != "vote,count") {
        throw BallotParseError("expected header 'vote,count', got '" + t + "'",
                               line);
      }
      header_seen = true;
      continue;
    }
    // the vote field is a bracket list and contains commas itself
    std::size_t open = t.find('[');
    std::size_t close = t.find(']');
    if (open != 0 || close == std::string::npos) {
      throw BallotParseError("expected a '[...]' vote, got '" + t + "'", line);
    }
    std::string vote_text = t.substr(0, close + 1);
    std::string rest = strip(t.substr(close + 1));
    if (rest.empty() || rest.front() != ',') {
      throw BallotParseError("expected ',count' after the vote", line);
    }
    add_vote(d, vote_text, parse_count(rest.substr(1), line), expected_n, line);
  }
  if (!header_seen) {
    throw BallotParseError("empty input: missing 'vote,count' header");
  }
  if (!expected_n) {
    throw BallotParseError("no ballots and no ambient size given");
  }
  d.n = *expected_n;
  return d;
}

Dataset parse_ballots_json(std::istream& in, std::optional<int> expected_n) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw BallotParseError(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("ballots") || !doc["ballots"].is_array()) {
    throw BallotParseError("expected {\"n\": ..., \"ballots\": [...]}");
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer()) {
      throw BallotParseError("field 'n' must be an integer");
    }
    int n = doc["n"].get<int>();
    if (expected_n && *expected_n != n) {
      throw BallotParseError("file has n = " + std::to_string(n) +
                             ", expected " + std::to_string(*expected_n));
    }
    expected_n = n;
  }
  Dataset d;
  d.n = expected_n.value_or(0);
  int row = 0;
  for (const auto& entry : doc["ballots"]) {
    ++row;
    if (!entry.is_object() || !entry.contains("vote") || !entry.contains("count") ||
        !entry["vote"].is_string() || !entry["count"].is_number_integer()) {
      throw BallotParseError("ballot " + std::to_string(row) +
                             ": expected {\"vote\": \"[...]\", \"count\": int}");
    }
    long long count = entry["count"].get<long long>();
    if (count < 0) {
      throw BallotParseError("ballot " + std::to_string(row) + ": negative count");
    }
    add_vote(d, entry["vote"].get<std::string>(), count, expected_n, row);
  }
  if (!expected_n) {
    throw BallotParseError("no ballots and no ambient size given");
  }
  d.n = *expected_n;
  return d;
}

Dataset parse_ballots(std::istream& in, std::optional<int> expected_n) {
  int c = in.peek();
  while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
    in.get();
    c = in.peek();
  }
  if (c == '{') {
    return parse_ballots_json(in, expected_n);
  }
  return parse_ballots_csv(in, expected_n);
}

std::string render_ballots_csv(const Dataset& d) {
  std::ostringstream out;
  out << "vote,count\n";
  for (const auto& [vote, count] : d.counts) {
    out << vote.to_string() << ',' << count << '\n';
  }
  return out.str();
}

} // namespace rooksa
