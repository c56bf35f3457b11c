#pragma once

#include <cstddef>
#include <vector>

#include "rooksa/partial_ranking.hpp"

namespace rooksa {

/// All size-k subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// S_k in lexicographic one-line order (identity first).
std::vector<Permutation> symmetric_group(int k);

/// The k! elements of R_n with the given domain and range, ordered by
/// permutation type. Throws when |dom| != |ran|.
std::vector<PartialRanking> enumerate_block(int n, const std::vector<int>& dom,
                                            const std::vector<int>& ran);

/// All of R_n in canonical order: by rank, then lexicographically by
/// (domain, range, permutation type). Reports and golden files depend on
/// this order.
std::vector<PartialRanking> enumerate_rook_monoid(int n);

/// sum over k of C(n,k)^2 k!.
std::size_t rook_monoid_size(int n);

/// Multiplication table of R_n over canonical enumeration indices;
/// table[i][j] is the index of element_i . element_j.
std::vector<std::vector<int>> rook_multiplication_table(int n);

std::size_t binomial(int n, int k);
std::size_t factorial(int k);

} // namespace rooksa
