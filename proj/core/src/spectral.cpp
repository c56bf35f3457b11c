#include "rooksa/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rooksa/rook_monoid.hpp"

namespace rooksa {

long long Dataset::total() const {
  long long sum = 0;
  for (const auto& [s, c] : counts) {
    sum += c;
  }
  return sum;
}

int Dataset::max_rank_present() const {
  int best = 0;
  for (const auto& [s, c] : counts) {
    if (c != 0) {
      best = std::max(best, s.rank());
    }
  }
  return best;
}

void Dataset::add(const PartialRanking& s, long long count) {
  if (s.n() != n) {
    throw std::invalid_argument("Dataset: wrong ambient size");
  }
  if (count < 0) {
    throw std::invalid_argument("Dataset: negative count");
  }
  counts[s] += count;
}

AlgebraElement Dataset::as_element(Basis association) const {
  AlgebraElement out(n, association);
  for (const auto& [s, c] : counts) {
    if (c != 0) {
      out.add(s, Rational(c));
    }
  }
  return out;
}

double IsotypicEnergy::norm() const {
  return std::sqrt(norm_squared.to_double());
}

double IsotypicEnergy::normalized_norm() const {
  return norm() / static_cast<double>(isotypic_dimension);
}

double RetainedEnergy::fraction() const {
  if (denominator_norm_squared.is_zero()) {
    return 0.0;
  }
  return std::sqrt((numerator_norm_squared / denominator_norm_squared).to_double());
}

bool RetainedEnergy::exceeds(const Rational& threshold) const {
  if (denominator_norm_squared.is_zero()) {
    return false;
  }
  return numerator_norm_squared > threshold * threshold * denominator_norm_squared;
}

const IsotypicEnergy& EnergyLedger::entry(const IntegerPartition& lambda) const {
  for (const IsotypicEnergy& e : per_isotypic) {
    if (e.lambda == lambda) {
      return e;
    }
  }
  throw std::invalid_argument("EnergyLedger: unknown isotypic label " +
                              lambda.to_string());
}

RetainedEnergy EnergyLedger::retained_fraction(
    const std::vector<IntegerPartition>& subset) const {
  RetainedEnergy out;
  for (const IntegerPartition& lambda : subset) {
    if (std::find(out.subset.begin(), out.subset.end(), lambda) ==
        out.subset.end()) {
      out.subset.push_back(lambda);
    }
  }
  std::vector<int> ranks_touched;
  for (const IntegerPartition& lambda : out.subset) {
    out.numerator_norm_squared += entry(lambda).norm_squared;
    ranks_touched.push_back(lambda.weight());
  }
  std::sort(ranks_touched.begin(), ranks_touched.end());
  ranks_touched.erase(std::unique(ranks_touched.begin(), ranks_touched.end()),
                      ranks_touched.end());
  for (int k : ranks_touched) {
    out.denominator_norm_squared += per_rank_norm_squared.at(k);
  }
  return out;
}

GroupAlgebraElement restrict_and_relabel(const Dataset& f,
                                         const std::vector<int>& domain,
                                         const std::vector<int>& range) {
  std::vector<int> d = domain;
  std::vector<int> r = range;
  std::sort(d.begin(), d.end());
  std::sort(r.begin(), r.end());
  if (d.size() != r.size()) {
    throw std::invalid_argument("restrict_and_relabel: |domain| != |range|");
  }
  GroupAlgebraElement out(static_cast<int>(d.size()));
  for (const auto& [s, c] : f.counts) {
    if (c != 0 && s.dom() == d && s.ran() == r) {
      out.add(perm_type(s), Rational(c));
    }
  }
  return out;
}

namespace {

/// Shared state of one analysis run: the embedded element, its groupoid
/// form, and the isotypic projections (groupoid basis) for every label.
struct Pipeline {
  int n = 0;
  Basis association = Basis::groupoid;
  InnerProduct ip = InnerProduct::groupoid;
  AlgebraElement embedded;
  AlgebraElement groupoid_form;
  std::map<IntegerPartition, AlgebraElement> projections;
  std::map<IntegerPartition, CharacterTable> tables;
};

Pipeline make_pipeline(const Dataset& f, Basis association, InnerProduct ip) {
  Pipeline p;
  p.n = f.n;
  p.association = association;
  p.ip = ip;
  p.embedded = f.as_element(association);
  p.groupoid_form = to_groupoid_basis(p.embedded);
  for (int k = 0; k <= f.n; ++k) {
    CharacterTable table(k);
    for (const IntegerPartition& lambda : partitions(k)) {
      p.projections.emplace(
          lambda, isotypic_project_rook(p.groupoid_form, lambda, table));
      p.tables.emplace(lambda, table);
    }
  }
  return p;
}

/// <projection, E_G> under the groupoid inner product: both sides are in
/// the groupoid basis, and E has 0/1 coefficients, so this is a filtered
/// coefficient sum.
Rational groupoid_pairing(const AlgebraElement& projection,
                          const InterpretableFunction& e) {
  Rational total;
  for (const auto& [s, c] : projection.coefficients()) {
    if (e.matches(s)) {
      total += c;
    }
  }
  return total;
}

StatEntry make_stat(const Pipeline& p, const InterpretableFunction& e) {
  IntegerPartition lambda = e.paired_partition();
  const AlgebraElement& projection = p.projections.at(lambda);
  Rational groupoid_value = groupoid_pairing(projection, e);
  StatEntry entry;
  entry.value = groupoid_value;
  if (p.ip == InnerProduct::natural) {
    AlgebraElement e_semigroup = e.as_element(Basis::semigroup);
    Rational natural_value = inner_product_natural(projection, e_semigroup);
    if (natural_value != groupoid_value) {
      throw std::logic_error(
          "analysis: <f^lambda, E_S>_s disagrees with the groupoid pairing");
    }
    AlgebraElement projected_e =
        isotypic_project_rook(e_semigroup, lambda, p.tables.at(lambda));
    entry.natural_f_vs_projected_e =
        inner_product_natural(p.embedded, projected_e);
    entry.natural_proj_f_vs_projected_e =
        inner_product_natural(projection, projected_e);
    entry.natural_proj_f_vs_groupoid_e =
        inner_product_natural(projection, e.as_element(Basis::groupoid));
  }
  return entry;
}

std::vector<std::vector<int>> ordered_pairs(const std::vector<int>& set) {
  std::vector<std::vector<int>> out;
  for (int a : set) {
    for (int b : set) {
      if (a != b) {
        out.push_back({a, b});
      }
    }
  }
  return out;
}

SecondOrderTable second_order_table(const Pipeline& p, CellFlavor flavor,
                                    const std::vector<int>& domain,
                                    const std::vector<int>& range) {
  SecondOrderTable table;
  if (flavor == CellFlavor::unordered) {
    for (const auto& cell : k_subsets(static_cast<int>(domain.size()), 2)) {
      std::vector<int> from;
      for (int i : cell) {
        from.push_back(domain[static_cast<std::size_t>(i - 1)]);
      }
      table.row_cells.push_back(from);
    }
    for (const auto& cell : k_subsets(static_cast<int>(range.size()), 2)) {
      std::vector<int> to;
      for (int j : cell) {
        to.push_back(range[static_cast<std::size_t>(j - 1)]);
      }
      table.col_cells.push_back(to);
    }
  } else {
    table.row_cells = ordered_pairs(domain);
    table.col_cells = ordered_pairs(range);
  }
  for (const auto& from : table.row_cells) {
    std::vector<StatEntry> row;
    for (const auto& to : table.col_cells) {
      row.push_back(make_stat(
          p, interpretable(p.n, 2, flavor, domain, range, from, to)));
    }
    table.values.push_back(std::move(row));
  }
  return table;
}

EnergyLedger energy_from_pipeline(const Pipeline& p) {
  EnergyLedger ledger;
  for (int k = p.n; k >= 0; --k) {
    Rational rank_total;
    for (const IntegerPartition& lambda : partitions(k)) {
      const AlgebraElement& projection = p.projections.at(lambda);
      IsotypicEnergy e;
      e.rank = k;
      e.lambda = lambda;
      e.norm_squared = inner_product_groupoid(projection, projection);
      long long block_dim =
          static_cast<long long>(binomial(p.n, k)) *
          p.tables.at(lambda).dimension(lambda);
      e.isotypic_dimension = block_dim * block_dim;
      rank_total += e.norm_squared;
      ledger.per_isotypic.push_back(std::move(e));
    }
    ledger.per_rank_norm_squared.emplace(k, rank_total);
    ledger.total_norm_squared += rank_total;
  }
  Rational direct = inner_product_groupoid(p.groupoid_form, p.groupoid_form);
  if (direct != ledger.total_norm_squared) {
    throw std::logic_error("analysis: Parseval identity failed");
  }
  return ledger;
}

SpectralReport analyze_impl(const Dataset& f, Basis association,
                            InnerProduct ip, int max_order) {
  if (max_order < 0) {
    throw std::invalid_argument("analysis: negative max order");
  }
  Pipeline p = make_pipeline(f, association, ip);
  SpectralReport report;
  report.n = f.n;
  report.association = association;
  report.ip = ip;
  report.max_order = max_order;
  report.total_ballots = f.total();
  report.energy = energy_from_pipeline(p);

  for (int k = f.n; k >= 0; --k) {
    RankReport rr;
    rr.rank = k;
    std::vector<std::vector<int>> subsets = k_subsets(f.n, k);
    for (const auto& domain : subsets) {
      for (const auto& range : subsets) {
        StatEntry zeroth = make_stat(
            p, interpretable(f.n, 0, CellFlavor::unordered, domain, range, {}, {}));
        bool populated = !zeroth.value.is_zero();
        rr.zeroth_keys.emplace_back(domain, range);
        rr.zeroth_values.push_back(zeroth);
        if (!populated) {
          continue;
        }
        BlockReport block;
        block.domain = domain;
        block.range = range;
        block.zeroth = zeroth.value;
        if (k >= 2 && max_order >= 1) {
          block.first_order.assign(
              static_cast<std::size_t>(f.n),
              std::vector<StatEntry>(static_cast<std::size_t>(f.n)));
          for (int i : domain) {
            for (int j : range) {
              block.first_order[static_cast<std::size_t>(i - 1)]
                               [static_cast<std::size_t>(j - 1)] =
                  make_stat(p, interpretable(f.n, 1, CellFlavor::ordered,
                                             domain, range, {i}, {j}));
            }
          }
        }
        if (k >= 2 && max_order >= 2) {
          block.second_unordered =
              second_order_table(p, CellFlavor::unordered, domain, range);
          block.second_ordered =
              second_order_table(p, CellFlavor::ordered, domain, range);
        }
        rr.blocks.push_back(std::move(block));
      }
    }
    report.ranks.push_back(std::move(rr));
  }
  return report;
}

bool entries_equal(const StatEntry& a, const StatEntry& b) {
  return a.value == b.value;
}

bool tables_equal(const std::optional<SecondOrderTable>& a,
                  const std::optional<SecondOrderTable>& b) {
  if (a.has_value() != b.has_value()) {
    return false;
  }
  if (!a) {
    return true;
  }
  if (a->row_cells != b->row_cells || a->col_cells != b->col_cells) {
    return false;
  }
  for (std::size_t i = 0; i < a->values.size(); ++i) {
    for (std::size_t j = 0; j < a->values[i].size(); ++j) {
      if (!entries_equal(a->values[i][j], b->values[i][j])) {
        return false;
      }
    }
  }
  return true;
}

/// Field-for-field equality of the statistics of two reports (association
/// tags aside).
bool statistics_equal(const SpectralReport& a, const SpectralReport& b) {
  if (a.n != b.n || a.ranks.size() != b.ranks.size()) {
    return false;
  }
  for (std::size_t r = 0; r < a.ranks.size(); ++r) {
    const RankReport& x = a.ranks[r];
    const RankReport& y = b.ranks[r];
    if (x.rank != y.rank || x.zeroth_keys != y.zeroth_keys ||
        x.blocks.size() != y.blocks.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x.zeroth_values.size(); ++i) {
      if (!entries_equal(x.zeroth_values[i], y.zeroth_values[i])) {
        return false;
      }
    }
    for (std::size_t i = 0; i < x.blocks.size(); ++i) {
      const BlockReport& bx = x.blocks[i];
      const BlockReport& by = y.blocks[i];
      if (bx.domain != by.domain || bx.range != by.range ||
          bx.zeroth != by.zeroth ||
          bx.first_order.size() != by.first_order.size()) {
        return false;
      }
      for (std::size_t row = 0; row < bx.first_order.size(); ++row) {
        for (std::size_t col = 0; col < bx.first_order[row].size(); ++col) {
          if (!entries_equal(bx.first_order[row][col],
                             by.first_order[row][col])) {
            return false;
          }
        }
      }
      if (!tables_equal(bx.second_unordered, by.second_unordered) ||
          !tables_equal(bx.second_ordered, by.second_ordered)) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < a.energy.per_isotypic.size(); ++i) {
    if (a.energy.per_isotypic[i].lambda != b.energy.per_isotypic[i].lambda ||
        a.energy.per_isotypic[i].norm_squared !=
            b.energy.per_isotypic[i].norm_squared) {
      return false;
    }
  }
  return true;
}

Dataset zeta_transform(const Dataset& f) {
  Dataset g;
  g.n = f.n;
  for (const auto& [t, c] : f.counts) {
    if (c == 0) {
      continue;
    }
    for (const PartialRanking& s : sub_rankings(t)) {
      g.counts[s] += c;
    }
  }
  return g;
}

} // namespace

SpectralReport analyze_groupoid(const Dataset& f, int max_order) {
  return analyze_impl(f, Basis::groupoid, InnerProduct::groupoid, max_order);
}

SpectralReport analyze_semigroup(const Dataset& f, int max_order) {
  SpectralReport direct =
      analyze_impl(f, Basis::semigroup, InnerProduct::groupoid, max_order);
  SpectralReport via_zeta = analyze_impl(zeta_transform(f), Basis::groupoid,
                                         InnerProduct::groupoid, max_order);
  if (!statistics_equal(direct, via_zeta)) {
    throw std::logic_error(
        "analyze_semigroup: direct route disagrees with the zeta transform route");
  }
  return direct;
}

SpectralReport analyze_natural_ip(const Dataset& f, Basis association,
                                  int max_order) {
  return analyze_impl(f, association, InnerProduct::natural, max_order);
}

EnergyLedger energy_report(const Dataset& f, Basis association,
                           const std::vector<IntegerPartition>& retained) {
  Pipeline p = make_pipeline(f, association, InnerProduct::groupoid);
  EnergyLedger ledger = energy_from_pipeline(p);
  if (!retained.empty()) {
    ledger.retained = ledger.retained_fraction(retained);
  }
  return ledger;
}

} // namespace rooksa
