#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rooksa/group_algebra.hpp"
#include "rooksa/interpretable.hpp"
#include "rooksa/partial_ranking.hpp"
#include "rooksa/partition.hpp"
#include "rooksa/rational.hpp"
#include "rooksa/rook_algebra.hpp"

namespace rooksa {

/// A multiset of ballots: nonnegative counts over partial rankings of a
/// common ambient size.
struct Dataset {
  int n = 0;
  std::map<PartialRanking, long long> counts;

  long long total() const;
  int max_rank_present() const;
  void add(const PartialRanking& s, long long count);
  AlgebraElement as_element(Basis association) const;
};

/// Which inner product statistics are taken under.
enum class InnerProduct { groupoid, natural };

/// One statistic. Under the natural inner product the value is
/// <f^lambda, E_S>_s (it provably equals the groupoid-paired number, which
/// is asserted); the companions are the genuinely different quantities
/// <f, E_S^lambda>_s, <f^lambda, E_S^lambda>_s and <f^lambda, E_G>_s.
struct StatEntry {
  Rational value;
  std::optional<Rational> natural_f_vs_projected_e;
  std::optional<Rational> natural_proj_f_vs_projected_e;
  std::optional<Rational> natural_proj_f_vs_groupoid_e;
};

/// Second-order table of one block: rows are cells of the domain, columns
/// cells of the range (2-subsets for the unordered flavor, ordered pairs
/// otherwise).
struct SecondOrderTable {
  std::vector<std::vector<int>> row_cells;
  std::vector<std::vector<int>> col_cells;
  std::vector<std::vector<StatEntry>> values;
};

/// First- and second-order tables for one populated (domain, range) block.
/// The first-order table is a full n x n candidate-by-position grid; rows
/// and columns outside the block are identically zero.
struct BlockReport {
  std::vector<int> domain;
  std::vector<int> range;
  Rational zeroth;
  std::vector<std::vector<StatEntry>> first_order;
  std::optional<SecondOrderTable> second_unordered;
  std::optional<SecondOrderTable> second_ordered;
};

struct RankReport {
  int rank = 0;
  /// Zeroth-order statistics for every (domain, range) pair, in
  /// lexicographic order; zero blocks are kept.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> zeroth_keys;
  std::vector<StatEntry> zeroth_values;
  /// Higher-order tables for the blocks whose zeroth-order statistic is
  /// nonzero, in lexicographic block order.
  std::vector<BlockReport> blocks;
};

struct IsotypicEnergy {
  int rank = 0;
  IntegerPartition lambda;
  Rational norm_squared;
  long long isotypic_dimension = 0; // (C(n,k) d_lambda)^2
  double norm() const;
  double normalized_norm() const; // norm / isotypic_dimension
};

struct RetainedEnergy {
  std::vector<IntegerPartition> subset;
  Rational numerator_norm_squared;   // sum over the subset
  Rational denominator_norm_squared; // sum over all ranks the subset touches
  double fraction() const;           // sqrt of the ratio, 0 when empty
  /// Exact comparison fraction > threshold, done on squares.
  bool exceeds(const Rational& threshold) const;
};

struct EnergyLedger {
  std::vector<IsotypicEnergy> per_isotypic; // rank descending, reverse-lex lambda
  std::map<int, Rational> per_rank_norm_squared;
  Rational total_norm_squared;
  std::optional<RetainedEnergy> retained;

  const IsotypicEnergy& entry(const IntegerPartition& lambda) const;
  RetainedEnergy retained_fraction(const std::vector<IntegerPartition>& subset) const;
};

struct SpectralReport {
  int n = 0;
  Basis association = Basis::groupoid;
  InnerProduct ip = InnerProduct::groupoid;
  int max_order = 2;
  long long total_ballots = 0;
  std::vector<RankReport> ranks; // rank descending
  EnergyLedger energy;
};

/// f^{D,R} of the restrict-and-relabel step: the ballots with the given
/// domain and range, keyed by permutation type in S_k.
GroupAlgebraElement restrict_and_relabel(const Dataset& f,
                                         const std::vector<int>& domain,
                                         const std::vector<int>& range);

/// Rook monoid spectral analysis under the groupoid basis association:
/// embed the counts on the groupoid basis, project onto every isotypic,
/// and pair the projections with the interpretable functions.
SpectralReport analyze_groupoid(const Dataset& f, int max_order = 2);

/// The semigroup basis association: runs the direct route (embed on the
/// semigroup basis and project) and the equivalent zeta-transform route,
/// asserts they agree field for field, and returns the result.
SpectralReport analyze_semigroup(const Dataset& f, int max_order = 2);

/// Same projections, statistics taken under the natural inner product as
/// <f^lambda, E_S>_s. Asserts the equality with the groupoid-paired
/// statistics and fills the natural-product companion values on every
/// entry.
SpectralReport analyze_natural_ip(const Dataset& f, Basis association,
                                  int max_order = 2);

/// Norm accounting only: per-isotypic squared norms under the groupoid
/// inner product, raw and dimension-normalized, per-rank totals, and the
/// retained-energy fraction of a chosen subset of labels.
EnergyLedger energy_report(const Dataset& f, Basis association,
                           const std::vector<IntegerPartition>& retained = {});

} // namespace rooksa
