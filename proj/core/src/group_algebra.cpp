#include "rooksa/group_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "rooksa/rook_monoid.hpp"

namespace rooksa {

Rational GroupAlgebraElement::at(const Permutation& s) const {
  auto it = coeff_.find(s);
  return it == coeff_.end() ? Rational{} : it->second;
}

void GroupAlgebraElement::add(const Permutation& s, const Rational& c) {
  if (s.k() != k_) {
    throw std::invalid_argument("GroupAlgebraElement: wrong symmetric group");
  }
  auto [it, inserted] = coeff_.emplace(s, c);
  if (!inserted) {
    it->second += c;
  }
  if (it->second.is_zero()) {
    coeff_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  for (const auto& [s, c] : o.coeff_) {
    add(s, c);
  }
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  for (const auto& [s, c] : o.coeff_) {
    add(s, -c);
  }
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeff_.clear();
    return *this;
  }
  for (auto& [s, v] : coeff_) {
    v *= c;
  }
  return *this;
}

Rational group_inner_product(const GroupAlgebraElement& f,
                             const GroupAlgebraElement& g) {
  if (f.k() != g.k()) {
    throw std::invalid_argument("group_inner_product: mismatched groups");
  }
  Rational total;
  for (const auto& [s, c] : f.coefficients()) {
    Rational other = g.at(s);
    if (!other.is_zero()) {
      total += c * other;
    }
  }
  return total;
}

GroupAlgebraElement isotypic_project_group(const GroupAlgebraElement& f,
                                           const IntegerPartition& lambda) {
  CharacterTable table(f.k());
  return isotypic_project_group(f, lambda, table);
}

GroupAlgebraElement isotypic_project_group(const GroupAlgebraElement& f,
                                           const IntegerPartition& lambda,
                                           const CharacterTable& table) {
  int k = f.k();
  if (lambda.weight() != k) {
    throw std::invalid_argument("isotypic_project_group: weight mismatch");
  }
  Rational scale(table.dimension(lambda),
                 static_cast<std::int64_t>(factorial(k)));
  GroupAlgebraElement out(k);
  for (const Permutation& u : symmetric_group(k)) {
    std::int64_t chi = table.value(lambda, cycle_type(u));
    if (chi == 0) {
      continue;
    }
    Permutation u_inv = inverse(u);
    for (const auto& [s, c] : f.coefficients()) {
      // coefficient of x picks up chi(u) f(u x), i.e. lands at u^-1 s
      out.add(compose(u_inv, s), scale * Rational(chi) * c);
    }
  }
  return out;
}

IntegerPartition interpretable_pairing(int k, int order, CellFlavor flavor) {
  if (order < 0 || order > k) {
    throw std::invalid_argument("interpretable_pairing: order out of range");
  }
  if (flavor == CellFlavor::unordered || order <= 1) {
    return IntegerPartition::of({k - order, order});
  }
  std::vector<int> parts(static_cast<std::size_t>(order), 1);
  parts.insert(parts.begin(), k - order);
  return IntegerPartition::of(std::move(parts));
}

namespace {

void check_cells(int k, int order, const std::vector<int>& from,
                 const std::vector<int>& to) {
  if (order > k) {
    throw std::invalid_argument("interpretable cells: k too small for order");
  }
  if (static_cast<int>(from.size()) != order ||
      static_cast<int>(to.size()) != order) {
    throw std::invalid_argument("interpretable cells: wrong cell size");
  }
  auto in_range = [k](int v) { return v >= 1 && v <= k; };
  if (!std::all_of(from.begin(), from.end(), in_range) ||
      !std::all_of(to.begin(), to.end(), in_range)) {
    throw std::invalid_argument("interpretable cells: index out of range");
  }
  auto distinct = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!distinct(from) || !distinct(to)) {
    throw std::invalid_argument("interpretable cells: repeated index");
  }
}

bool cell_matches(const Permutation& s, CellFlavor flavor,
                  const std::vector<int>& from, const std::vector<int>& to) {
  if (flavor == CellFlavor::ordered) {
    for (std::size_t t = 0; t < from.size(); ++t) {
      if (s.image(from[t]) != to[t]) {
        return false;
      }
    }
    return true;
  }
  std::vector<int> images;
  images.reserve(from.size());
  for (int i : from) {
    images.push_back(s.image(i));
  }
  std::sort(images.begin(), images.end());
  std::vector<int> want = to;
  std::sort(want.begin(), want.end());
  return images == want;
}

} // namespace

GroupAlgebraElement group_delta(int k, int order, CellFlavor flavor,
                                const std::vector<int>& from,
                                const std::vector<int>& to) {
  check_cells(k, order, from, to);
  GroupAlgebraElement out(k);
  for (const Permutation& s : symmetric_group(k)) {
    if (cell_matches(s, flavor, from, to)) {
      out.add(s, Rational(1));
    }
  }
  return out;
}

Rational interpretable_statistic(const GroupAlgebraElement& f, int order,
                                 CellFlavor flavor, const std::vector<int>& from,
                                 const std::vector<int>& to) {
  check_cells(f.k(), order, from, to);
  IntegerPartition lambda = interpretable_pairing(f.k(), order, flavor);
  GroupAlgebraElement projection = isotypic_project_group(f, lambda);
  return group_inner_product(projection,
                             group_delta(f.k(), order, flavor, from, to));
}

Rational first_order_statistic(const GroupAlgebraElement& f, int i, int j) {
  return interpretable_statistic(f, 1, CellFlavor::ordered, {i}, {j});
}

Rational second_order_unordered_statistic(const GroupAlgebraElement& f, int i1,
                                          int i2, int j1, int j2) {
  return interpretable_statistic(f, 2, CellFlavor::unordered, {i1, i2},
                                 {j1, j2});
}

Rational second_order_ordered_statistic(const GroupAlgebraElement& f, int i1,
                                        int i2, int j1, int j2) {
  return interpretable_statistic(f, 2, CellFlavor::ordered, {i1, i2}, {j1, j2});
}

SymmetricGroupAnalysis analyze_group(const GroupAlgebraElement& f,
                                     int max_order) {
  SymmetricGroupAnalysis out;
  out.k = f.k();
  out.f = f;
  CharacterTable table(f.k());
  for (const IntegerPartition& lambda : partitions(f.k())) {
    GroupAlgebraElement projection = isotypic_project_group(f, lambda, table);
    out.norm_squared.emplace(lambda,
                             group_inner_product(projection, projection));
    out.projections.emplace(lambda, std::move(projection));
  }
  int k = f.k();
  if (k >= 2 && max_order >= 1) {
    const GroupAlgebraElement& first =
        out.projections.at(interpretable_pairing(k, 1, CellFlavor::ordered));
    out.first_order.assign(static_cast<std::size_t>(k),
                           std::vector<Rational>(static_cast<std::size_t>(k)));
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        out.first_order[i - 1][j - 1] = group_inner_product(
            first, group_delta(k, 1, CellFlavor::ordered, {i}, {j}));
      }
    }
  }
  if (k >= 2 && max_order >= 2) {
    const GroupAlgebraElement& unordered =
        out.projections.at(interpretable_pairing(k, 2, CellFlavor::unordered));
    const GroupAlgebraElement& ordered =
        out.projections.at(interpretable_pairing(k, 2, CellFlavor::ordered));
    std::vector<std::vector<int>> pairs = k_subsets(k, 2);
    for (const auto& is : pairs) {
      for (const auto& js : pairs) {
        out.second_unordered.emplace(
            std::make_pair(is, js),
            group_inner_product(
                unordered, group_delta(k, 2, CellFlavor::unordered, is, js)));
      }
    }
    for (const auto& is : pairs) {
      for (const auto& js : pairs) {
        for (const auto& iord :
             {is, std::vector<int>{is[1], is[0]}}) {
          for (const auto& jord :
               {js, std::vector<int>{js[1], js[0]}}) {
            out.second_ordered.emplace(
                std::make_pair(iord, jord),
                group_inner_product(
                    ordered, group_delta(k, 2, CellFlavor::ordered, iord, jord)));
          }
        }
      }
    }
  }
  return out;
}

SymmetricGroupAnalysis diaconis_partial_analysis(
    const std::map<PartialRanking, long long>& counts, int n, int max_order) {
  GroupAlgebraElement averaged(n);
  int data_rank = -1;
  for (const auto& [sigma, count] : counts) {
    if (sigma.n() != n) {
      throw std::invalid_argument("diaconis_partial_analysis: wrong ambient size");
    }
    int k = sigma.rank();
    std::vector<int> expected(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      expected[static_cast<std::size_t>(i)] = i + 1;
    }
    if (sigma.ran() != expected) {
      throw std::invalid_argument(
          "diaconis_partial_analysis: ranking " + sigma.to_string() +
          " does not have range {1..k}");
    }
    if (data_rank == -1) {
      data_rank = k;
    } else if (k != data_rank) {
      throw std::invalid_argument(
          "diaconis_partial_analysis: mixed ranks in input");
    }
    if (count == 0) {
      continue;
    }
    // spread the count uniformly over the E(sigma) = (n-k)! extensions
    std::vector<int> missing_domain;
    for (int i = 1; i <= n; ++i) {
      if (!sigma.defined(i)) {
        missing_domain.push_back(i);
      }
    }
    Rational share(count, static_cast<std::int64_t>(
                              factorial(static_cast<int>(missing_domain.size()))));
    std::vector<int> free_positions;
    for (int j = k + 1; j <= n; ++j) {
      free_positions.push_back(j);
    }
    std::sort(free_positions.begin(), free_positions.end());
    do {
      std::vector<int> images(static_cast<std::size_t>(n), 0);
      for (int i = 1; i <= n; ++i) {
        if (sigma.defined(i)) {
          images[static_cast<std::size_t>(i - 1)] = sigma.image(i);
        }
      }
      for (std::size_t t = 0; t < missing_domain.size(); ++t) {
        images[static_cast<std::size_t>(missing_domain[t] - 1)] =
            free_positions[t];
      }
      averaged.add(Permutation::from_one_line(images), share);
    } while (std::next_permutation(free_positions.begin(), free_positions.end()));
  }
  return analyze_group(averaged, max_order);
}

} // namespace rooksa
