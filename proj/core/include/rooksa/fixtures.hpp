#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rooksa/spectral.hpp"

namespace rooksa {

/// A dataset shipped with the library so analyses are reproducible without
/// external files.
struct Fixture {
  std::string name;
  std::string description;
  Dataset dataset;
};

/// Available fixtures: "apa-rank3" (the 1980 APA election ballots ranking
/// exactly three of five candidates) and "example-4-7" (a seven-element
/// R_2 micro-example).
const std::vector<Fixture>& fixtures();

std::optional<Dataset> fixture_dataset(const std::string& name);

} // namespace rooksa
