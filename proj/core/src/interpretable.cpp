#include "rooksa/interpretable.hpp"

#include <algorithm>
#include <stdexcept>

#include "rooksa/rook_monoid.hpp"

namespace rooksa {

bool InterpretableFunction::matches(const PartialRanking& s) const {
  if (s.n() != n || s.rank() != rank() || s.dom() != domain ||
      s.ran() != range) {
    return false;
  }
  if (flavor == CellFlavor::ordered) {
    for (std::size_t t = 0; t < cell_from.size(); ++t) {
      if (s.image(cell_from[t]) != cell_to[t]) {
        return false;
      }
    }
    return true;
  }
  std::vector<int> images;
  images.reserve(cell_from.size());
  for (int i : cell_from) {
    images.push_back(s.image(i));
  }
  std::sort(images.begin(), images.end());
  return images == cell_to;
}

AlgebraElement InterpretableFunction::as_element(Basis association) const {
  AlgebraElement out(n, association);
  for (const PartialRanking& s : enumerate_block(n, domain, range)) {
    if (matches(s)) {
      out.add(s, Rational(1));
    }
  }
  return out;
}

IntegerPartition InterpretableFunction::paired_partition() const {
  return interpretable_pairing(rank(), order, flavor);
}

InterpretableFunction interpretable(int n, int order, CellFlavor flavor,
                                    std::vector<int> domain,
                                    std::vector<int> range,
                                    std::vector<int> cell_from,
                                    std::vector<int> cell_to) {
  if (domain.size() != range.size()) {
    throw std::invalid_argument("interpretable: |domain| != |range|");
  }
  std::sort(domain.begin(), domain.end());
  std::sort(range.begin(), range.end());
  int k = static_cast<int>(domain.size());
  if (order < 0 || order > k) {
    throw std::invalid_argument("interpretable: order out of range for k");
  }
  if (static_cast<int>(cell_from.size()) != order ||
      static_cast<int>(cell_to.size()) != order) {
    throw std::invalid_argument("interpretable: cell size disagrees with order");
  }
  auto subset_of = [](const std::vector<int>& cell, const std::vector<int>& set) {
    return std::all_of(cell.begin(), cell.end(), [&](int v) {
      return std::binary_search(set.begin(), set.end(), v);
    });
  };
  auto distinct = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!subset_of(cell_from, domain) || !subset_of(cell_to, range) ||
      !distinct(cell_from) || !distinct(cell_to)) {
    throw std::invalid_argument("interpretable: cell is not inside (D, R)");
  }
  if (flavor == CellFlavor::unordered) {
    std::sort(cell_from.begin(), cell_from.end());
    std::sort(cell_to.begin(), cell_to.end());
  }
  InterpretableFunction f;
  f.n = n;
  f.order = order;
  f.flavor = flavor;
  f.domain = std::move(domain);
  f.range = std::move(range);
  f.cell_from = std::move(cell_from);
  f.cell_to = std::move(cell_to);
  auto in_ambient = [n](int v) { return v >= 1 && v <= n; };
  if (!std::all_of(f.domain.begin(), f.domain.end(), in_ambient) ||
      !std::all_of(f.range.begin(), f.range.end(), in_ambient) ||
      !distinct(f.domain) || !distinct(f.range)) {
    throw std::invalid_argument("interpretable: domain/range not inside {1..n}");
  }
  return f;
}

} // namespace rooksa
