#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rooksa/partial_ranking.hpp"
#include "rooksa/partition.hpp"

namespace rooksa {

IntegerPartition cycle_type(const Permutation& s);

/// Irreducible symmetric group character chi_lambda(mu), by the
/// Murnaghan-Nakayama rim-hook recursion. Throws when the weights differ.
std::int64_t sym_character(const IntegerPartition& lambda,
                           const IntegerPartition& mu);

/// chi_lambda(1^k), the dimension of the irreducible for lambda.
std::int64_t irrep_dimension(const IntegerPartition& lambda);

/// Number of permutations of cycle type mu in S_weight(mu).
std::int64_t conjugacy_class_size(const IntegerPartition& mu);

/// Full character table of S_k, built once; lookups are read-only.
class CharacterTable {
public:
  explicit CharacterTable(int k);

  int k() const { return k_; }
  const std::vector<IntegerPartition>& labels() const { return labels_; }
  std::int64_t value(const IntegerPartition& lambda,
                     const IntegerPartition& mu) const;
  std::int64_t dimension(const IntegerPartition& lambda) const;

private:
  int k_;
  std::vector<IntegerPartition> labels_;
  std::map<IntegerPartition, std::map<IntegerPartition, std::int64_t>> values_;
};

} // namespace rooksa
