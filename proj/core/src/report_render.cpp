#include "rooksa/report_render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace rooksa {

namespace {

std::string join(const std::vector<int>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += std::to_string(values[i]);
  }
  return out;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

bool rank_included(const RunConfig& config, int rank) {
  if (!config.ranks) {
    return true;
  }
  return std::find(config.ranks->begin(), config.ranks->end(), rank) !=
         config.ranks->end();
}

// --- text ---------------------------------------------------------------

/// Pads columns to their widest cell; first column left-aligned, the rest
/// right-aligned.
std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) {
      widths.resize(row.size(), 0);
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        out << "  ";
      }
      const std::string& cell = row[c];
      std::size_t pad = widths[c] - cell.size();
      if (c == 0) {
        out << cell << std::string(pad, ' ');
      } else {
        out << std::string(pad, ' ') << cell;
      }
    }
    out << '\n';
  }
  return out.str();
}

void text_natural_companions(std::ostringstream& out, const std::string& label,
                             const StatEntry& e) {
  if (!e.natural_f_vs_projected_e) {
    return;
  }
  out << label << ": value=" << e.value.to_decimal(2)
      << "  <f,E^l>_s=" << e.natural_f_vs_projected_e->to_decimal(2)
      << "  <f^l,E^l>_s=" << e.natural_proj_f_vs_projected_e->to_decimal(2)
      << "  <f^l,E_G>_s=" << e.natural_proj_f_vs_groupoid_e->to_decimal(2)
      << '\n';
}

std::string render_text(const SpectralReport& report, const RunConfig& config) {
  std::ostringstream out;
  out << "rook monoid spectral analysis\n";
  out << "n: " << report.n << '\n';
  out << "association: "
      << (report.association == Basis::groupoid ? "groupoid" : "semigroup")
      << '\n';
  out << "inner product: "
      << (report.ip == InnerProduct::groupoid ? "groupoid" : "natural") << '\n';
  out << "max order: " << report.max_order << '\n';
  out << "ballots: " << report.total_ballots << '\n';

  for (const RankReport& rr : report.ranks) {
    if (!rank_included(config, rr.rank)) {
      continue;
    }
    out << "\n== rank " << rr.rank << " ==\n";

    std::vector<std::vector<int>> domains;
    std::vector<std::vector<int>> ranges;
    for (const auto& [d, r] : rr.zeroth_keys) {
      if (domains.empty() || domains.back() != d) {
        domains.push_back(d);
      }
      if (std::find(ranges.begin(), ranges.end(), r) == ranges.end()) {
        ranges.push_back(r);
      }
    }
    out << "\nzeroth order (domain x range)\n";
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> header{"domain\\range"};
    for (const auto& r : ranges) {
      header.push_back(join(r));
    }
    table.push_back(header);
    std::size_t index = 0;
    for (const auto& d : domains) {
      std::vector<std::string> row{join(d)};
      for (std::size_t j = 0; j < ranges.size(); ++j) {
        row.push_back(rr.zeroth_values[index].value.to_decimal(2));
        ++index;
      }
      table.push_back(std::move(row));
    }
    out << format_table(table);
    if (report.ip == InnerProduct::natural) {
      out << "natural inner product companions (zeroth order)\n";
      index = 0;
      for (const auto& [d, r] : rr.zeroth_keys) {
        const StatEntry& e = rr.zeroth_values[index++];
        if (!e.value.is_zero() || (e.natural_f_vs_projected_e &&
                                   !e.natural_f_vs_projected_e->is_zero())) {
          text_natural_companions(out, "D={" + join(d) + "} R={" + join(r) + "}",
                                  e);
        }
      }
    }

    for (const BlockReport& block : rr.blocks) {
      if (block.first_order.empty() && !block.second_unordered) {
        continue;
      }
      out << "\nblock D={" << join(block.domain) << "} R={" << join(block.range)
          << "}  (count " << block.zeroth.to_decimal(2) << ")\n";
      if (!block.first_order.empty()) {
        out << "first order (candidate x position)\n";
        std::vector<std::vector<std::string>> ft;
        std::vector<std::string> fh{"cand\\pos"};
        for (int j = 1; j <= report.n; ++j) {
          fh.push_back(std::to_string(j));
        }
        ft.push_back(fh);
        for (int i = 1; i <= report.n; ++i) {
          std::vector<std::string> row{std::to_string(i)};
          for (int j = 1; j <= report.n; ++j) {
            row.push_back(block.first_order[static_cast<std::size_t>(i - 1)]
                                           [static_cast<std::size_t>(j - 1)]
                                               .value.to_decimal(2));
          }
          ft.push_back(std::move(row));
        }
        out << format_table(ft);
        if (report.ip == InnerProduct::natural) {
          out << "natural inner product companions (first order)\n";
          for (int i : block.domain) {
            for (int j : block.range) {
              text_natural_companions(
                  out, std::to_string(i) + "->" + std::to_string(j),
                  block.first_order[static_cast<std::size_t>(i - 1)]
                                   [static_cast<std::size_t>(j - 1)]);
            }
          }
        }
      }
      for (const auto& [name, maybe_table] :
           {std::make_pair("second order unordered", &block.second_unordered),
            std::make_pair("second order ordered", &block.second_ordered)}) {
        if (!maybe_table->has_value()) {
          continue;
        }
        const SecondOrderTable& st = maybe_table->value();
        out << name << " (candidates x positions)\n";
        std::vector<std::vector<std::string>> tt;
        std::vector<std::string> th{"cells"};
        for (const auto& c : st.col_cells) {
          th.push_back(join(c));
        }
        tt.push_back(th);
        for (std::size_t r = 0; r < st.row_cells.size(); ++r) {
          std::vector<std::string> row{join(st.row_cells[r])};
          for (std::size_t c = 0; c < st.col_cells.size(); ++c) {
            row.push_back(st.values[r][c].value.to_decimal(2));
          }
          tt.push_back(std::move(row));
        }
        out << format_table(tt);
        if (report.ip == InnerProduct::natural) {
          out << "natural inner product companions (" << name << ")\n";
          for (std::size_t r = 0; r < st.row_cells.size(); ++r) {
            for (std::size_t c = 0; c < st.col_cells.size(); ++c) {
              text_natural_companions(out,
                                      "{" + join(st.row_cells[r]) + "}->{" +
                                          join(st.col_cells[c]) + "}",
                                      st.values[r][c]);
            }
          }
        }
      }
    }
  }

  out << "\n== energy ==\n";
  std::vector<std::vector<std::string>> et;
  et.push_back({"rank", "lambda", "norm^2", "norm", "dim", "norm/dim"});
  for (const IsotypicEnergy& e : report.energy.per_isotypic) {
    if (!rank_included(config, e.rank)) {
      continue;
    }
    et.push_back({std::to_string(e.rank), e.lambda.to_string(),
                  e.norm_squared.to_string(), fixed6(e.norm()),
                  std::to_string(e.isotypic_dimension),
                  fixed6(e.normalized_norm())});
  }
  out << format_table(et);
  out << "total norm^2: " << report.energy.total_norm_squared.to_string()
      << '\n';
  for (const auto& [rank, norm2] : report.energy.per_rank_norm_squared) {
    if (rank_included(config, rank)) {
      out << "rank " << rank << " norm^2: " << norm2.to_string() << '\n';
    }
  }
  if (report.energy.retained) {
    const RetainedEnergy& re = *report.energy.retained;
    out << "retained subset:";
    for (const IntegerPartition& lambda : re.subset) {
      out << ' ' << lambda.to_string();
    }
    out << '\n';
    out << "retained norm^2: " << re.numerator_norm_squared.to_string() << " of "
        << re.denominator_norm_squared.to_string() << '\n';
    out << "retained fraction: " << fixed6(re.fraction()) << '\n';
  }
  return out.str();
}

// --- csv ----------------------------------------------------------------

void csv_row(std::ostringstream& out, const std::string& table, int rank,
             const std::string& domain, const std::string& range,
             const std::string& row, const std::string& col,
             const Rational& value) {
  out << table << ',' << rank << ',' << domain << ',' << range << ',' << row
      << ',' << col << ',' << value.num() << ',' << value.den() << ','
      << value.to_decimal(2) << '\n';
}

void csv_stat(std::ostringstream& out, const std::string& table, int rank,
              const std::string& domain, const std::string& range,
              const std::string& row, const std::string& col,
              const StatEntry& e) {
  csv_row(out, table, rank, domain, range, row, col, e.value);
  if (e.natural_f_vs_projected_e) {
    csv_row(out, table + "_nat_f_projE", rank, domain, range, row, col,
            *e.natural_f_vs_projected_e);
    csv_row(out, table + "_nat_projf_projE", rank, domain, range, row, col,
            *e.natural_proj_f_vs_projected_e);
    csv_row(out, table + "_nat_projf_EG", rank, domain, range, row, col,
            *e.natural_proj_f_vs_groupoid_e);
  }
}

std::string render_csv(const SpectralReport& report, const RunConfig& config) {
  std::ostringstream out;
  out << "table,rank,domain,range,row,col,num,den,value\n";
  for (const RankReport& rr : report.ranks) {
    if (!rank_included(config, rr.rank)) {
      continue;
    }
    std::size_t index = 0;
    for (const auto& [d, r] : rr.zeroth_keys) {
      csv_stat(out, "zeroth", rr.rank, join(d, " "), join(r, " "), "", "",
               rr.zeroth_values[index++]);
    }
    for (const BlockReport& block : rr.blocks) {
      std::string d = join(block.domain, " ");
      std::string r = join(block.range, " ");
      for (std::size_t i = 0; i < block.first_order.size(); ++i) {
        for (std::size_t j = 0; j < block.first_order[i].size(); ++j) {
          csv_stat(out, "first", rr.rank, d, r, std::to_string(i + 1),
                   std::to_string(j + 1), block.first_order[i][j]);
        }
      }
      for (const auto& [name, maybe_table] :
           {std::make_pair("second_unordered", &block.second_unordered),
            std::make_pair("second_ordered", &block.second_ordered)}) {
        if (!maybe_table->has_value()) {
          continue;
        }
        const SecondOrderTable& st = maybe_table->value();
        for (std::size_t i = 0; i < st.row_cells.size(); ++i) {
          for (std::size_t j = 0; j < st.col_cells.size(); ++j) {
            csv_stat(out, name, rr.rank, d, r, join(st.row_cells[i], " "),
                     join(st.col_cells[j], " "), st.values[i][j]);
          }
        }
      }
    }
  }
  for (const IsotypicEnergy& e : report.energy.per_isotypic) {
    if (!rank_included(config, e.rank)) {
      continue;
    }
    std::vector<int> parts = e.lambda.parts();
    csv_row(out, "energy_norm2", e.rank, "", "", join(parts, " "),
            std::to_string(e.isotypic_dimension), e.norm_squared);
  }
  if (report.energy.retained) {
    const RetainedEnergy& re = *report.energy.retained;
    csv_row(out, "energy_retained_num", 0, "", "", "", "",
            re.numerator_norm_squared);
    csv_row(out, "energy_retained_den", 0, "", "", "", "",
            re.denominator_norm_squared);
  }
  return out.str();
}

// --- json ---------------------------------------------------------------

nlohmann::json json_value(const Rational& v) {
  return {{"num", v.num()}, {"den", v.den()}, {"decimal", v.to_decimal(2)}};
}

nlohmann::json json_stat(const StatEntry& e) {
  nlohmann::json j = {{"value", json_value(e.value)}};
  if (e.natural_f_vs_projected_e) {
    j["natural"] = {
        {"f_vs_projected_e", json_value(*e.natural_f_vs_projected_e)},
        {"proj_f_vs_projected_e", json_value(*e.natural_proj_f_vs_projected_e)},
        {"proj_f_vs_groupoid_e", json_value(*e.natural_proj_f_vs_groupoid_e)},
    };
  }
  return j;
}

nlohmann::json json_second_order(const SecondOrderTable& st) {
  nlohmann::json cells = nlohmann::json::array();
  for (std::size_t i = 0; i < st.row_cells.size(); ++i) {
    for (std::size_t j = 0; j < st.col_cells.size(); ++j) {
      nlohmann::json entry = json_stat(st.values[i][j]);
      entry["candidates"] = st.row_cells[i];
      entry["positions"] = st.col_cells[j];
      cells.push_back(std::move(entry));
    }
  }
  return cells;
}

std::string render_json(const SpectralReport& report, const RunConfig& config) {
  nlohmann::json doc;
  doc["n"] = report.n;
  doc["association"] =
      report.association == Basis::groupoid ? "groupoid" : "semigroup";
  doc["inner_product"] =
      report.ip == InnerProduct::groupoid ? "groupoid" : "natural";
  doc["max_order"] = report.max_order;
  doc["ballots"] = report.total_ballots;
  doc["ranks"] = nlohmann::json::array();
  for (const RankReport& rr : report.ranks) {
    if (!rank_included(config, rr.rank)) {
      continue;
    }
    nlohmann::json jr;
    jr["rank"] = rr.rank;
    jr["zeroth_order"] = nlohmann::json::array();
    std::size_t index = 0;
    for (const auto& [d, r] : rr.zeroth_keys) {
      nlohmann::json entry = json_stat(rr.zeroth_values[index++]);
      entry["domain"] = d;
      entry["range"] = r;
      jr["zeroth_order"].push_back(std::move(entry));
    }
    jr["blocks"] = nlohmann::json::array();
    for (const BlockReport& block : rr.blocks) {
      nlohmann::json jb;
      jb["domain"] = block.domain;
      jb["range"] = block.range;
      jb["count"] = json_value(block.zeroth);
      if (!block.first_order.empty()) {
        jb["first_order"] = nlohmann::json::array();
        for (int i : block.domain) {
          for (int j : block.range) {
            nlohmann::json entry =
                json_stat(block.first_order[static_cast<std::size_t>(i - 1)]
                                           [static_cast<std::size_t>(j - 1)]);
            entry["candidate"] = i;
            entry["position"] = j;
            jb["first_order"].push_back(std::move(entry));
          }
        }
      }
      if (block.second_unordered) {
        jb["second_order_unordered"] = json_second_order(*block.second_unordered);
      }
      if (block.second_ordered) {
        jb["second_order_ordered"] = json_second_order(*block.second_ordered);
      }
      jr["blocks"].push_back(std::move(jb));
    }
    doc["ranks"].push_back(std::move(jr));
  }
  doc["energy"] = nlohmann::json::object();
  doc["energy"]["per_isotypic"] = nlohmann::json::array();
  for (const IsotypicEnergy& e : report.energy.per_isotypic) {
    if (!rank_included(config, e.rank)) {
      continue;
    }
    nlohmann::json je;
    je["rank"] = e.rank;
    je["lambda"] = e.lambda.parts();
    je["norm_squared"] = json_value(e.norm_squared);
    je["norm"] = fixed6(e.norm());
    je["isotypic_dimension"] = e.isotypic_dimension;
    je["normalized_norm"] = fixed6(e.normalized_norm());
    doc["energy"]["per_isotypic"].push_back(std::move(je));
  }
  doc["energy"]["total_norm_squared"] = json_value(report.energy.total_norm_squared);
  doc["energy"]["per_rank_norm_squared"] = nlohmann::json::array();
  for (const auto& [rank, norm2] : report.energy.per_rank_norm_squared) {
    if (!rank_included(config, rank)) {
      continue;
    }
    doc["energy"]["per_rank_norm_squared"].push_back(
        {{"rank", rank}, {"norm_squared", json_value(norm2)}});
  }
  if (report.energy.retained) {
    const RetainedEnergy& re = *report.energy.retained;
    nlohmann::json jr;
    jr["subset"] = nlohmann::json::array();
    for (const IntegerPartition& lambda : re.subset) {
      jr["subset"].push_back(lambda.parts());
    }
    jr["numerator_norm_squared"] = json_value(re.numerator_norm_squared);
    jr["denominator_norm_squared"] = json_value(re.denominator_norm_squared);
    jr["fraction"] = fixed6(re.fraction());
    doc["energy"]["retained"] = std::move(jr);
  }
  return doc.dump(2) + "\n";
}

} // namespace

SpectralReport run_analysis(const RunConfig& config, const Dataset& dataset) {
  if (config.max_order < 0) {
    throw ConfigError("order must be nonnegative");
  }
  int max_rank = dataset.counts.empty() ? dataset.n : dataset.max_rank_present();
  if (config.max_order > max_rank) {
    throw ConfigError("order " + std::to_string(config.max_order) +
                      " exceeds the maximum rank present (" +
                      std::to_string(max_rank) + ")");
  }
  if (config.ranks) {
    for (int rank : *config.ranks) {
      if (rank < 0 || rank > dataset.n) {
        throw ConfigError("rank filter " + std::to_string(rank) +
                          " outside 0.." + std::to_string(dataset.n));
      }
    }
  }
  for (const IntegerPartition& lambda : config.energy_subset) {
    if (lambda.weight() > dataset.n) {
      throw ConfigError("energy subset label " + lambda.to_string() +
                        " has weight above n");
    }
  }

  SpectralReport report;
  switch (config.ip) {
    case InnerProduct::natural:
      report = analyze_natural_ip(dataset, config.association, config.max_order);
      break;
    case InnerProduct::groupoid:
      report = config.association == Basis::groupoid
                   ? analyze_groupoid(dataset, config.max_order)
                   : analyze_semigroup(dataset, config.max_order);
      break;
  }
  if (!config.energy_subset.empty()) {
    report.energy.retained =
        report.energy.retained_fraction(config.energy_subset);
  }
  return report;
}

std::string render_report(const SpectralReport& report, const RunConfig& config) {
  switch (config.format) {
    case ReportFormat::text:
      return render_text(report, config);
    case ReportFormat::csv:
      return render_csv(report, config);
    case ReportFormat::json:
      return render_json(report, config);
  }
  throw ConfigError("unknown report format");
}

std::string run(const RunConfig& config, const Dataset& dataset) {
  return render_report(run_analysis(config, dataset), config);
}

} // namespace rooksa
