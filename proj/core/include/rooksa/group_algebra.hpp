#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rooksa/characters.hpp"
#include "rooksa/partial_ranking.hpp"
#include "rooksa/partition.hpp"
#include "rooksa/rational.hpp"

namespace rooksa {

/// An element of the group algebra of S_k: a rational coefficient vector
/// over permutations. Zero coefficients are never stored.
class GroupAlgebraElement {
public:
  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(int k) : k_(k) {}

  int k() const { return k_; }
  const std::map<Permutation, Rational>& coefficients() const { return coeff_; }
  Rational at(const Permutation& s) const;
  void add(const Permutation& s, const Rational& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(const Rational& c);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a -= b;
  }
  friend bool operator==(const GroupAlgebraElement&,
                         const GroupAlgebraElement&) = default;

private:
  int k_ = 0;
  std::map<Permutation, Rational> coeff_;
};

/// Natural inner product: the permutation basis is orthonormal.
Rational group_inner_product(const GroupAlgebraElement& f,
                             const GroupAlgebraElement& g);

/// Central-idempotent projection of f onto the isotypic component for
/// lambda: (d_lambda / k!) sum_u chi_lambda(u) (u . f).
GroupAlgebraElement isotypic_project_group(const GroupAlgebraElement& f,
                                           const IntegerPartition& lambda);
GroupAlgebraElement isotypic_project_group(const GroupAlgebraElement& f,
                                           const IntegerPartition& lambda,
                                           const CharacterTable& table);

/// Whether an interpretable cell constrains an unordered set of positions
/// or an ordered tuple of them.
enum class CellFlavor { unordered, ordered };

/// The isotypic label paired with order-m statistics on S_k: (k-m, m)
/// sorted for the unordered flavor, (k-m, 1^m) for the ordered flavor
/// (zero parts dropped). Order 0 and 1 pair with (k) and (k-1,1).
IntegerPartition interpretable_pairing(int k, int order, CellFlavor flavor);

/// delta_{cells}: the 0/1 indicator of sigma(from[t]) = to[t] (ordered) or
/// {sigma(from)} = {to} (unordered), as an element of the group algebra.
GroupAlgebraElement group_delta(int k, int order, CellFlavor flavor,
                                const std::vector<int>& from,
                                const std::vector<int>& to);

/// <f^lambda, delta_cells> with lambda from interpretable_pairing. Throws
/// when k < order or a cell index is out of range.
Rational interpretable_statistic(const GroupAlgebraElement& f, int order,
                                 CellFlavor flavor, const std::vector<int>& from,
                                 const std::vector<int>& to);

Rational first_order_statistic(const GroupAlgebraElement& f, int i, int j);
Rational second_order_unordered_statistic(const GroupAlgebraElement& f, int i1,
                                          int i2, int j1, int j2);
Rational second_order_ordered_statistic(const GroupAlgebraElement& f, int i1,
                                        int i2, int j1, int j2);

/// Full spectral analysis of an element of the group algebra of S_k:
/// isotypic projections, their squared norms, and the interpretable
/// statistic tables up to max_order.
struct SymmetricGroupAnalysis {
  int k = 0;
  GroupAlgebraElement f;
  std::map<IntegerPartition, GroupAlgebraElement> projections;
  std::map<IntegerPartition, Rational> norm_squared;
  /// first_order[i-1][j-1] = <f^(k-1,1), delta_{i->j}>; empty when k < 2.
  std::vector<std::vector<Rational>> first_order;
  /// keyed by ({i1,i2}, {j1,j2}) ascending pairs; empty when k < 2.
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rational>
      second_unordered;
  /// keyed by ordered ((i1,i2), (j1,j2)); empty when k < 2.
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rational>
      second_ordered;
};

SymmetricGroupAnalysis analyze_group(const GroupAlgebraElement& f,
                                     int max_order = 2);

/// Averaging method for partially ranked data: every counted ranking must
/// have range {1..k} for a single k <= n. Builds
/// F = sum_sigma f(sigma)/E(sigma) sum_{t >= sigma} t in the group algebra
/// of S_n, where E(sigma) = (n-k)! counts the full rankings extending
/// sigma, then analyzes F.
SymmetricGroupAnalysis diaconis_partial_analysis(
    const std::map<PartialRanking, long long>& counts, int n,
    int max_order = 2);

} // namespace rooksa
