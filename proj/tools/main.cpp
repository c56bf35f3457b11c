#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rooksa/ballots.hpp"
#include "rooksa/fixtures.hpp"
#include "rooksa/report_render.hpp"

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitConfigError = 3;

std::vector<rooksa::IntegerPartition> parse_energy_subset(const std::string& text) {
  std::vector<rooksa::IntegerPartition> out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ';')) {
    if (field.find_first_not_of(" \t") == std::string::npos) {
      continue;
    }
    out.push_back(rooksa::IntegerPartition::parse(field));
  }
  return out;
}

rooksa::Dataset load_dataset(const std::string& input, std::optional<int> n) {
  if (auto fixture = rooksa::fixture_dataset(input)) {
    if (n && *n != fixture->n) {
      throw rooksa::ConfigError("fixture '" + input + "' has n = " +
                                std::to_string(fixture->n));
    }
    return *fixture;
  }
  std::ifstream file(input);
  if (!file) {
    throw rooksa::BallotParseError("cannot open '" + input + "'");
  }
  return rooksa::parse_ballots(file, n);
}

int run_analyze(const std::string& input, std::optional<int> n,
                const std::string& association, const std::string& ip,
                int order, const std::string& format,
                const std::optional<std::string>& ranks,
                const std::string& energy, const std::string& out_path) {
  rooksa::RunConfig config;
  if (association == "groupoid") {
    config.association = rooksa::Basis::groupoid;
  } else if (association == "semigroup") {
    config.association = rooksa::Basis::semigroup;
  } else {
    throw rooksa::ConfigError("unknown association '" + association + "'");
  }
  if (ip == "groupoid") {
    config.ip = rooksa::InnerProduct::groupoid;
  } else if (ip == "natural") {
    config.ip = rooksa::InnerProduct::natural;
  } else {
    throw rooksa::ConfigError("unknown inner product '" + ip + "'");
  }
  if (format == "text") {
    config.format = rooksa::ReportFormat::text;
  } else if (format == "csv") {
    config.format = rooksa::ReportFormat::csv;
  } else if (format == "json") {
    config.format = rooksa::ReportFormat::json;
  } else {
    throw rooksa::ConfigError("unknown format '" + format + "'");
  }
  config.max_order = order;
  if (ranks) {
    std::vector<int> parsed;
    std::stringstream ss(*ranks);
    std::string field;
    while (std::getline(ss, field, ',')) {
      try {
        parsed.push_back(std::stoi(field));
      } catch (const std::exception&) {
        throw rooksa::ConfigError("bad rank '" + field + "'");
      }
    }
    config.ranks = std::move(parsed);
  }
  if (!energy.empty()) {
    try {
      config.energy_subset = parse_energy_subset(energy);
    } catch (const std::invalid_argument& e) {
      throw rooksa::ConfigError(e.what());
    }
  }

  rooksa::Dataset dataset = load_dataset(input, n);
  std::string rendered = rooksa::run(config, dataset);
  if (out_path.empty() || out_path == "-") {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw rooksa::ConfigError("cannot write '" + out_path + "'");
    }
    out << rendered;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral analysis of partially ranked data on the rook monoid"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Analyze a ballot file or fixture");
  std::string input;
  std::optional<int> n;
  std::string association = "groupoid";
  std::string ip = "groupoid";
  int order = 2;
  std::string format = "text";
  std::optional<std::string> ranks;
  std::string energy;
  std::string out_path;
  analyze->add_option("--input,--dataset", input,
                      "Ballot CSV/JSON file, or a fixture name")
      ->required();
  analyze->add_option("--n", n, "Ambient size (candidates); inferred if omitted");
  analyze->add_option("--association", association, "groupoid|semigroup")
      ->capture_default_str();
  analyze->add_option("--ip", ip, "groupoid|natural")->capture_default_str();
  analyze->add_option("--order", order, "Max interpretable order")
      ->capture_default_str();
  analyze->add_option("--format", format, "text|csv|json")->capture_default_str();
  analyze->add_option("--ranks", ranks, "Comma-separated ranks to report");
  analyze->add_option("--energy", energy,
                      "Retained-energy subset, e.g. \"3;2,1\"");
  analyze->add_option("--out", out_path, "Output path (default stdout)");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Fixture utilities");
  auto* fixtures_list = fixtures_cmd->add_subcommand("list", "List fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfigError;
  }

  try {
    if (analyze->parsed()) {
      return run_analyze(input, n, association, ip, order, format, ranks, energy,
                         out_path);
    }
    if (fixtures_cmd->parsed()) {
      (void)fixtures_list; // bare `fixtures` behaves like `fixtures list`
      for (const rooksa::Fixture& f : rooksa::fixtures()) {
        std::cout << f.name << "  (n=" << f.dataset.n
                  << ", ballots=" << f.dataset.total() << ")  " << f.description
                  << '\n';
      }
      return 0;
    }
  } catch (const rooksa::BallotParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const rooksa::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
