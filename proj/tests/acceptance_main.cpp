// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Golden values are pinned in this file.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "rooksa/fixtures.hpp"
#include "rooksa/group_algebra.hpp"
#include "rooksa/inverse_semigroup.hpp"
#include "rooksa/interpretable.hpp"
#include "rooksa/rook_algebra.hpp"
#include "rooksa/rook_monoid.hpp"
#include "rooksa/spectral.hpp"
#include "rep_fixtures.hpp"
#include "rook_table_fixtures.hpp"

using namespace rooksa;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
  if (!condition) {
    throw Failure(what);
  }
}

void require_close(const Rational& actual, double expected, double tolerance,
                   const std::string& what) {
  double diff = std::abs(actual.to_double() - expected);
  if (diff > tolerance) {
    std::ostringstream msg;
    msg << what << ": got " << actual.to_double() << ", want " << expected
        << " within " << tolerance;
    throw Failure(msg.str());
  }
}

Dataset apa() { return *fixture_dataset("apa-rank3"); }

const BlockReport& block_of(const SpectralReport& report, int rank,
                            const std::vector<int>& domain,
                            const std::vector<int>& range) {
  for (const RankReport& rr : report.ranks) {
    if (rr.rank != rank) {
      continue;
    }
    for (const BlockReport& block : rr.blocks) {
      if (block.domain == domain && block.range == range) {
        return block;
      }
    }
  }
  throw Failure("block not found in report");
}

// ---- criterion 1: zeroth order (rank-3 block counts) ---------------------

void criterion_zeroth_order() {
  SpectralReport report = analyze_groupoid(apa(), 0);
  const std::map<std::vector<int>, long long> expected = {
      {{1, 2, 3}, 309}, {{1, 2, 4}, 196}, {{1, 2, 5}, 188}, {{1, 3, 4}, 133},
      {{1, 3, 5}, 280}, {{1, 4, 5}, 352}, {{2, 3, 4}, 108}, {{2, 3, 5}, 84},
      {{2, 4, 5}, 325}, {{3, 4, 5}, 133}};
  for (const RankReport& rr : report.ranks) {
    if (rr.rank != 3) {
      continue;
    }
    for (std::size_t i = 0; i < rr.zeroth_keys.size(); ++i) {
      const auto& [domain, range] = rr.zeroth_keys[i];
      Rational want = range == std::vector<int>{1, 2, 3}
                          ? Rational(expected.at(domain))
                          : Rational(0);
      require(rr.zeroth_values[i].value == want,
              "zeroth-order mismatch at block");
    }
    return;
  }
  throw Failure("rank-3 section missing");
}

// ---- criterion 2: the ten first-order 5x5 blocks --------------------------

void criterion_first_order() {
  // per domain: the 3x3 table over the in-domain candidates (ascending) and
  // positions 1..3; everything else in the 5x5 block must be zero
  const std::map<std::vector<int>, std::vector<std::vector<double>>> golden = {
      {{1, 2, 3}, {{3, 11, -14}, {-40, -19, 59}, {37, 8, -45}}},
      {{1, 2, 4}, {{-24.33, -6.33, 30.67}, {10.67, 4.67, -15.33}, {13.67, 1.67, -15.33}}},
      {{1, 2, 5}, {{-5.67, -10.67, 16.33}, {-7.67, 4.33, 3.33}, {13.33, 6.33, -19.67}}},
      {{1, 3, 4}, {{6.67, 9.67, -16.33}, {9.67, -1.33, -8.33}, {-16.33, -8.33, 24.67}}},
      {{1, 3, 5}, {{-3.33, 17.67, -14.33}, {27.67, -12.33, -15.33}, {-24.33, -5.33, 29.67}}},
      {{1, 4, 5}, {{-38.33, -9.33, 47.67}, {18.67, 1.67, -20.33}, {19.67, 7.67, -27.33}}},
      {{2, 3, 4}, {{-10, 2, 8}, {7, -9, 2}, {3, 7, -10}}},
      {{2, 3, 5}, {{-5, 2, 3}, {4, -5, 1}, {1, 3, -4}}},
      {{2, 4, 5}, {{-8.33, -4.33, 12.67}, {7.67, 5.67, -13.33}, {0.67, -1.33, 0.67}}},
      {{3, 4, 5}, {{-10.33, -11.33, 21.67}, {17.67, -9.33, -8.33}, {-7.33, 20.67, -13.33}}}};

  SpectralReport report = analyze_groupoid(apa(), 1);
  std::vector<int> range{1, 2, 3};
  for (const auto& [domain, table] : golden) {
    const BlockReport& block = block_of(report, 3, domain, range);
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) {
        const Rational& value =
            block.first_order[static_cast<std::size_t>(i - 1)]
                             [static_cast<std::size_t>(j - 1)]
                .value;
        auto it = std::find(domain.begin(), domain.end(), i);
        if (it == domain.end() || j > 3) {
          require(value == Rational(0), "expected structural zero");
        } else {
          std::size_t row = static_cast<std::size_t>(it - domain.begin());
          require_close(value, table[row][static_cast<std::size_t>(j - 1)],
                        0.005, "first-order entry");
        }
      }
    }
  }
}

// ---- criterion 3: second-order unordered block D={1,4,5} ------------------

void criterion_second_order() {
  SpectralReport report = analyze_groupoid(apa(), 2);
  const BlockReport& block = block_of(report, 3, {1, 4, 5}, {1, 2, 3});
  require(block.second_unordered.has_value(), "second-order table missing");
  const SecondOrderTable& table = *block.second_unordered;
  const double golden[3][3] = {{-27.33, 7.67, 19.67},
                               {-20.33, 1.67, 18.67},
                               {47.67, -9.33, -38.33}};
  require(table.row_cells ==
              std::vector<std::vector<int>>{{1, 4}, {1, 5}, {4, 5}},
          "unexpected row cells");
  require(table.col_cells ==
              std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}},
          "unexpected column cells");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      require_close(table.values[i][j].value, golden[i][j], 0.005,
                    "second-order entry");
    }
  }
}

// ---- criterion 4: retained energy fraction --------------------------------

void criterion_energy_fraction() {
  EnergyLedger ledger =
      energy_report(apa(), Basis::groupoid,
                    {IntegerPartition({3}), IntegerPartition({2, 1})});
  require(ledger.retained.has_value(), "retained energy missing");
  // exact rational comparison: ||f^(3) + f^(2,1)|| > 0.996 ||f_3||
  require(ledger.retained->exceeds(Rational(996, 1000)),
          "energy fraction does not exceed 0.996");
  require(!ledger.retained->exceeds(Rational(999, 1000)),
          "energy fraction suspiciously close to one");
}

// ---- criterion 5: the R_2 micro-example ------------------------------------

void criterion_micro_example() {
  Dataset d = *fixture_dataset("example-4-7");
  AlgebraElement f = d.as_element(Basis::semigroup);
  AlgebraElement g = to_groupoid_basis(f);
  auto pr = [](const char* text) { return PartialRanking::parse(text); };
  require(g.at(pr("[1,-]")) == Rational(5), "zeta coefficient 1->1");
  require(g.at(pr("[2,-]")) == Rational(9), "zeta coefficient 1->2");
  require(g.at(pr("[-,1]")) == Rational(8), "zeta coefficient 2->1");
  require(g.at(pr("[-,2]")) == Rational(1), "zeta coefficient 2->2");
  require(g.at(pr("[-,-]")) == Rational(23), "zeta coefficient at the null map");

  AlgebraElement f1 = isotypic_project_rook(f, IntegerPartition({1}));
  require(f1.at(pr("[1,-]")) == Rational(5) && f1.at(pr("[2,-]")) == Rational(9) &&
              f1.at(pr("[-,1]")) == Rational(8) && f1.at(pr("[-,2]")) == Rational(1) &&
              f1.coefficients().size() == 4,
          "groupoid form of the projection");
  AlgebraElement f1s = to_semigroup_basis(f1);
  require(f1s.at(pr("[-,-]")) == Rational(-23) && f1s.at(pr("[2,-]")) == Rational(9),
          "semigroup form of the projection");

  AlgebraElement e_s = AlgebraElement::unit(2, Basis::semigroup, pr("[2,-]"));
  AlgebraElement e_g = AlgebraElement::unit(2, Basis::groupoid, pr("[2,-]"));
  AlgebraElement e_s1 = isotypic_project_rook(e_s, IntegerPartition({1}));
  require(inner_product_groupoid(f1, e_g) == Rational(9), "<f^1, E_G> = 9");
  require(inner_product_natural(f, e_s1) == Rational(4), "<f, E_S^1>_s = 4");
  require(inner_product_natural(f1, e_s1) == Rational(32), "<f^1, E_S^1>_s = 32");
}

// ---- criterion 6: the averaged symmetric group tables ----------------------

void criterion_diaconis() {
  SymmetricGroupAnalysis analysis = diaconis_partial_analysis(apa().counts, 5);
  const double first_golden[5][3] = {{2, 76, 114},
                                     {-78, -28, 52},
                                     {2, -103, -116},
                                     {38, -7, -48},
                                     {35, 63, -1}};
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 3; ++j) {
      require_close(analysis.first_order[static_cast<std::size_t>(i - 1)]
                                        [static_cast<std::size_t>(j - 1)],
                    first_golden[i - 1][j - 1], 1.0,
                    "averaged first-order entry");
    }
  }
  const std::vector<std::pair<std::vector<int>, std::vector<double>>>
      second_golden = {
          {{1, 2}, {-50, 6, 12}},  {{1, 3}, {150, -3, -41}},
          {{1, 4}, {-71, -8, 11}}, {{1, 5}, {-28, 5, 16}},
          {{2, 3}, {-2, 24, 28}},  {{2, 4}, {57, -5, -7}},
          {{2, 5}, {-5, -24, -34}}, {{3, 4}, {-84, -12, -4}},
          {{3, 5}, {-63, -8, 17}}, {{4, 5}, {97, 26, 0}}};
  const std::vector<std::vector<int>> position_pairs = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& [candidates, row] : second_golden) {
    for (std::size_t c = 0; c < position_pairs.size(); ++c) {
      require_close(
          analysis.second_unordered.at({candidates, position_pairs[c]}), row[c],
          1.0, "averaged second-order entry");
    }
  }
}

// ---- criterion 7: property suite -------------------------------------------

void criterion_properties() {
  std::mt19937 rng(2024);

  // Mobius roundtrip on random elements, n <= 5
  for (int n = 1; n <= 5; ++n) {
    AlgebraElement f(n, Basis::semigroup);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    for (const PartialRanking& s : enumerate_rook_monoid(n)) {
      if (keep(rng) < 0.3) {
        f.add(s, Rational(coeff(rng)));
      }
    }
    require(to_semigroup_basis(to_groupoid_basis(f)) == f, "Mobius roundtrip");
  }

  // resolution of identity and pairwise annihilation: n <= 3 exhaustive
  // support, n = 5 randomized over 100 datasets
  for (int n = 1; n <= 3; ++n) {
    AlgebraElement f(n, Basis::groupoid);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (const PartialRanking& s : enumerate_rook_monoid(n)) {
      f.add(s, Rational(coeff(rng)));
    }
    AlgebraElement sum(n, Basis::groupoid);
    std::vector<AlgebraElement> projections;
    Rational norms;
    for (int k = 0; k <= n; ++k) {
      for (const IntegerPartition& lambda : partitions(k)) {
        AlgebraElement p = isotypic_project_rook(f, lambda);
        require(isotypic_project_rook(p, lambda) == p, "projection idempotence");
        for (const AlgebraElement& q : projections) {
          require(inner_product_groupoid(p, q) == Rational(0),
                  "projection orthogonality");
        }
        norms += inner_product_groupoid(p, p);
        sum += p;
        projections.push_back(std::move(p));
      }
    }
    require(sum == f, "resolution of identity");
    require(norms == inner_product_groupoid(f, f), "Parseval");
  }
  {
    std::uniform_int_distribution<int> count(0, 9);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    std::vector<PartialRanking> all5 = enumerate_rook_monoid(5);
    CharacterTable tables[6] = {CharacterTable(0), CharacterTable(1),
                                CharacterTable(2), CharacterTable(3),
                                CharacterTable(4), CharacterTable(5)};
    for (int trial = 0; trial < 100; ++trial) {
      AlgebraElement f(5, Basis::groupoid);
      for (const PartialRanking& s : all5) {
        if (keep(rng) < 0.05) {
          f.add(s, Rational(count(rng)));
        }
      }
      AlgebraElement sum(5, Basis::groupoid);
      Rational norms;
      for (int k = 0; k <= 5; ++k) {
        for (const IntegerPartition& lambda : partitions(k)) {
          AlgebraElement p = isotypic_project_rook(f, lambda, tables[k]);
          norms += inner_product_groupoid(p, p);
          sum += p;
        }
      }
      require(sum == f, "resolution of identity, n = 5");
      require(norms == inner_product_groupoid(f, f), "Parseval, n = 5");
    }
  }

  // Theorem-level equivalence of the rook analysis with per-block symmetric
  // group analysis, exhaustive for n <= 3
  for (int n = 1; n <= 3; ++n) {
    Dataset d;
    d.n = n;
    std::uniform_int_distribution<int> count(0, 9);
    for (const PartialRanking& s : enumerate_rook_monoid(n)) {
      d.add(s, count(rng));
    }
    SpectralReport report = analyze_groupoid(d);
    for (int k = 0; k <= n; ++k) {
      for (const auto& dom : k_subsets(n, k)) {
        for (const auto& ran : k_subsets(n, k)) {
          SymmetricGroupAnalysis ga =
              analyze_group(restrict_and_relabel(d, dom, ran));
          Rational block_total;
          for (const auto& [s, c] : ga.f.coefficients()) {
            block_total += c;
          }
          bool found = false;
          for (const RankReport& rr : report.ranks) {
            if (rr.rank != k) {
              continue;
            }
            for (std::size_t i = 0; i < rr.zeroth_keys.size(); ++i) {
              if (rr.zeroth_keys[i].first == dom &&
                  rr.zeroth_keys[i].second == ran) {
                require(rr.zeroth_values[i].value == block_total,
                        "per-block zeroth equivalence");
                found = true;
              }
            }
          }
          require(found, "zeroth entry present");
          if (k < 2 || block_total.is_zero()) {
            continue;
          }
          const BlockReport& block = block_of(report, k, dom, ran);
          for (std::size_t a = 0; a < dom.size(); ++a) {
            for (std::size_t b = 0; b < ran.size(); ++b) {
              require(
                  block.first_order[static_cast<std::size_t>(dom[a] - 1)]
                                   [static_cast<std::size_t>(ran[b] - 1)]
                          .value == ga.first_order[a][b],
                  "per-block first-order equivalence");
            }
          }
        }
      }
    }
  }

  // the semigroup association equals the zeta-transformed groupoid analysis
  // (analyze_semigroup raises internally if the two routes disagree)
  for (int n = 1; n <= 3; ++n) {
    Dataset d;
    d.n = n;
    std::uniform_int_distribution<int> count(0, 9);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    for (const PartialRanking& s : enumerate_rook_monoid(n)) {
      if (keep(rng) < 0.5) {
        d.add(s, count(rng));
      }
    }
    analyze_semigroup(d);
  }

  // zero row and column sums of every first-order matrix
  {
    Dataset d = apa();
    SpectralReport report = analyze_groupoid(d);
    for (const RankReport& rr : report.ranks) {
      for (const BlockReport& block : rr.blocks) {
        for (std::size_t i = 0; i < block.first_order.size(); ++i) {
          Rational row_sum;
          Rational col_sum;
          for (std::size_t j = 0; j < block.first_order.size(); ++j) {
            row_sum += block.first_order[i][j].value;
            col_sum += block.first_order[j][i].value;
          }
          require(row_sum == Rational(0) && col_sum == Rational(0),
                  "first-order zero sums");
        }
      }
    }
  }
}

// ---- criterion 8: the generic layer on R_1, R_2, R_3 -----------------------

void criterion_generic_layer() {
  for (int n = 1; n <= 3; ++n) {
    testrook::RookTable t = testrook::make_rook_table(n);
    std::vector<DClassInfo> classes = d_classes(t.S);
    require(static_cast<int>(classes.size()) == n + 1, "n+1 D-classes");
    for (int k = 0; k <= n; ++k) {
      const DClassInfo& cls = classes[static_cast<std::size_t>(k)];
      require(cls.idempotents.size() == binomial(n, k), "r_k = C(n,k)");
      require(cls.max_subgroup.size() == factorial(k), "|G_k| = k!");
    }
    // the natural order is the extension order with mu = (-1)^(rank diff)
    for (int a = 0; a < t.S.size(); ++a) {
      for (int b = 0; b < t.S.size(); ++b) {
        bool extends = leq(t.elements[static_cast<std::size_t>(a)],
                           t.elements[static_cast<std::size_t>(b)]);
        require(t.S.leq(a, b) == extends, "natural order is extension");
        if (extends) {
          int diff = t.elements[static_cast<std::size_t>(b)].rank() -
                     t.elements[static_cast<std::size_t>(a)].rank();
          require(t.S.mobius(a, b) == (diff % 2 == 0 ? 1 : -1),
                  "Mobius alternates in rank");
        }
      }
    }
    // phi is multiplicative on all composable pairs
    for (const DClassInfo& cls : classes) {
      for (int s : cls.elements) {
        for (int u : cls.elements) {
          PhiImage ps = steinberg_phi(t.S, cls, s);
          PhiImage pu = steinberg_phi(t.S, cls, u);
          std::optional<int> product = groupoid_product_rule(t.S, s, u);
          if (ps.col != pu.row) {
            require(!product.has_value(), "rule zero iff phi blocks mismatch");
            continue;
          }
          require(product.has_value(), "rule defined when phi blocks align");
          PhiImage pp = steinberg_phi(t.S, cls, *product);
          require(pp.group_element ==
                          t.S.product(ps.group_element, pu.group_element) &&
                      pp.row == ps.row && pp.col == pu.col,
                  "phi multiplicativity");
        }
      }
    }
    // extended irreps are homomorphisms on groupoid pairs, with the fixture
    // representations of S_0..S_3
    for (const DClassInfo& cls : classes) {
      int k =
          t.elements[static_cast<std::size_t>(cls.base_idempotent)].rank();
      for (const IntegerPartition& lambda : partitions(k)) {
        MatrixIrrep rho = testrook::class_irrep(t, cls, lambda);
        for (int s : cls.elements) {
          RationalMatrix ms = evaluate_extended_irrep(t.S, cls, rho, s);
          for (int u : cls.elements) {
            RationalMatrix mu = evaluate_extended_irrep(t.S, cls, rho, u);
            std::optional<int> product = groupoid_product_rule(t.S, s, u);
            RationalMatrix expected =
                product ? evaluate_extended_irrep(t.S, cls, rho, *product)
                        : RationalMatrix(ms.rows(), ms.cols());
            require(ms * mu == expected, "extended irrep homomorphism");
          }
        }
      }
    }
    // Fourier basis elements are fixed by their own isotypic projection and
    // annihilated by every other one
    for (const DClassInfo& cls : classes) {
      int k =
          t.elements[static_cast<std::size_t>(cls.base_idempotent)].rank();
      for (const IntegerPartition& lambda : partitions(k)) {
        MatrixIrrep rho = testrook::class_irrep(t, cls, lambda);
        for (int b : cls.idempotents) {
          for (int a : cls.idempotents) {
            for (int i = 0; i < rho.dim; ++i) {
              for (int j = 0; j < rho.dim; ++j) {
                std::map<int, Rational> coefficients =
                    testrook::fourier_coefficients(t, cls, lambda, i, j);
                std::map<int, Rational> element =
                    fourier_basis_element(t.S, cls, b, a, coefficients);
                AlgebraElement v(n, Basis::groupoid);
                for (const auto& [idx, value] : element) {
                  v.add(t.elements[static_cast<std::size_t>(idx)], value);
                }
                for (int k2 = 0; k2 <= n; ++k2) {
                  for (const IntegerPartition& other : partitions(k2)) {
                    AlgebraElement projected = isotypic_project_rook(v, other);
                    if (other == lambda) {
                      require(projected == v, "Fourier element is fixed");
                    } else {
                      require(projected == AlgebraElement(n, Basis::groupoid),
                              "Fourier element is annihilated");
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
}

struct Criterion {
  int number;
  const char* description;
  double time_limit_seconds;
  std::function<void()> check;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "zeroth-order rank-3 block counts, exact", 1.0,
       criterion_zeroth_order},
      {2, "first-order tables for all ten rank-3 blocks, +-0.005", 5.0,
       criterion_first_order},
      {3, "second-order unordered table for D={1,4,5}, +-0.005", 5.0,
       criterion_second_order},
      {4, "retained energy fraction exceeds 0.996, exact rationals", 5.0,
       criterion_energy_fraction},
      {5, "R_2 micro-example: zeta coefficients, projection, 9/4/32 triple",
       5.0, criterion_micro_example},
      {6, "averaged symmetric-group tables on S_5, +-1", 10.0,
       criterion_diaconis},
      {7, "property suite: roundtrips, projections, equivalences, zero sums",
       60.0, criterion_properties},
      {8, "generic inverse-semigroup layer recovers R_1..R_3 structure", 30.0,
       criterion_generic_layer},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.check();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (error.empty() && elapsed > criterion.time_limit_seconds) {
      std::ostringstream msg;
      msg << "exceeded time limit (" << elapsed << "s > "
          << criterion.time_limit_seconds << "s)";
      error = msg.str();
    }
    if (error.empty()) {
      std::printf("[PASS] criterion %d: %s (%.2fs)\n", criterion.number,
                  criterion.description, elapsed);
    } else {
      std::printf("[FAIL] criterion %d: %s (%.2fs): %s\n", criterion.number,
                  criterion.description, elapsed, error.c_str());
      ++failures;
    }
  }
  return failures;
}
