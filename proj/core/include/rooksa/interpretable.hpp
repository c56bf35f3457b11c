#pragma once

#include <vector>

#include "rooksa/group_algebra.hpp"
#include "rooksa/partial_ranking.hpp"
#include "rooksa/partition.hpp"
#include "rooksa/rook_algebra.hpp"

namespace rooksa {

/// A 0/1-valued function on R_n: value one exactly on the partial rankings
/// with the given domain and range whose images satisfy the cell condition
/// (empty for order 0; sigma(i) = j for order 1; a set or tuple condition
/// for higher orders).
struct InterpretableFunction {
  int n = 0;
  int order = 0;
  CellFlavor flavor = CellFlavor::unordered;
  std::vector<int> domain;    // ascending
  std::vector<int> range;     // ascending
  std::vector<int> cell_from; // inside domain; ascending for unordered cells
  std::vector<int> cell_to;   // inside range; parallel to cell_from when ordered

  int rank() const { return static_cast<int>(domain.size()); }
  bool matches(const PartialRanking& s) const;

  /// The function embedded in the algebra of R_n under either association.
  AlgebraElement as_element(Basis association) const;

  /// The isotypic label this function is paired with: (k) for order 0,
  /// (k-1,1) for order 1, (k-2,2) / (k-2,1,1) for order 2, and so on.
  IntegerPartition paired_partition() const;
};

/// Validates and builds an interpretable function. Throws when the cell is
/// not inside (domain, range), the sizes disagree, or order > k.
InterpretableFunction interpretable(int n, int order, CellFlavor flavor,
                                    std::vector<int> domain,
                                    std::vector<int> range,
                                    std::vector<int> cell_from,
                                    std::vector<int> cell_to);

} // namespace rooksa
