#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "rooksa/spectral.hpp"

namespace rooksa {

/// Input problem, with the 1-based line (CSV) or a JSON pointer-ish hint.
struct BallotParseError : std::runtime_error {
  explicit BallotParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_number(line) {}
  int line_number = 0;
};

/// CSV ballot file: header "vote,count", then one "[3,-,-,2,1],75" row per
/// line. Votes repeat freely; repeated lines accumulate. When
/// expected_n is set, every vote must have that ambient size; otherwise the
/// size of the first vote is used.
Dataset parse_ballots_csv(std::istream& in, std::optional<int> expected_n = {});

/// JSON equivalent: {"n": 5, "ballots": [{"vote": "[...]", "count": 75}, ...]}.
Dataset parse_ballots_json(std::istream& in, std::optional<int> expected_n = {});

/// Dispatches on the leading non-space byte ('{' means JSON).
Dataset parse_ballots(std::istream& in, std::optional<int> expected_n = {});

/// Canonical CSV form (LF line endings, canonical element order);
/// parse_ballots_csv(render_ballots_csv(d)) == d.
std::string render_ballots_csv(const Dataset& d);

} // namespace rooksa
