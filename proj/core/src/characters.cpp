#include "rooksa/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rooksa {

IntegerPartition cycle_type(const Permutation& s) {
  int k = s.k();
  std::vector<bool> visited(static_cast<std::size_t>(k) + 1, false);
  std::vector<int> lengths;
  for (int start = 1; start <= k; ++start) {
    if (visited[static_cast<std::size_t>(start)]) {
      continue;
    }
    int length = 0;
    int x = start;
    do {
      visited[static_cast<std::size_t>(x)] = true;
      x = s.image(x);
      ++length;
    } while (x != start);
    lengths.push_back(length);
  }
  return IntegerPartition::of(std::move(lengths));
}

namespace {

// Beta-set form of a partition: strictly decreasing first-column hook
// lengths. Removing a rim hook of size r subtracts r from one beta number;
// the move is legal when the target value is fresh, and its sign is
// (-1)^(number of beta numbers jumped over).
std::vector<int> beta_set(const IntegerPartition& lambda) {
  const std::vector<int>& parts = lambda.parts();
  int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.begin(), parts.end());
  for (int i = 0; i < len; ++i) {
    beta[static_cast<std::size_t>(i)] += len - 1 - i;
  }
  return beta;
}

IntegerPartition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) {
      parts.push_back(part);
    }
  }
  return IntegerPartition(std::move(parts));
}

std::int64_t mn_recurse(const IntegerPartition& lambda,
                        const std::vector<int>& mu, std::size_t mu_index) {
  if (mu_index == mu.size()) {
    return 1;
  }
  int r = mu[mu_index];
  std::vector<int> beta = beta_set(lambda);
  std::int64_t total = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    int target = beta[j] - r;
    if (target < 0 ||
        std::find(beta.begin(), beta.end(), target) != beta.end()) {
      continue;
    }
    int crossings = static_cast<int>(
        std::count_if(beta.begin(), beta.end(),
                      [&](int b) { return target < b && b < beta[j]; }));
    std::vector<int> next = beta;
    next[j] = target;
    std::int64_t sub = mn_recurse(partition_from_beta(std::move(next)), mu,
                                  mu_index + 1);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  return total;
}

} // namespace

std::int64_t sym_character(const IntegerPartition& lambda,
                           const IntegerPartition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw std::invalid_argument("sym_character: weight mismatch");
  }
  return mn_recurse(lambda, mu.parts(), 0);
}

std::int64_t irrep_dimension(const IntegerPartition& lambda) {
  std::vector<int> ones(static_cast<std::size_t>(lambda.weight()), 1);
  return sym_character(lambda, IntegerPartition(std::move(ones)));
}

std::int64_t conjugacy_class_size(const IntegerPartition& mu) {
  // k! / (prod_i i^{m_i} m_i!) where m_i counts parts of size i
  std::int64_t numerator = 1;
  for (int i = 2; i <= mu.weight(); ++i) {
    numerator *= i;
  }
  std::map<int, int> multiplicity;
  for (int part : mu.parts()) {
    ++multiplicity[part];
  }
  std::int64_t z = 1;
  for (auto [part, count] : multiplicity) {
    for (int c = 1; c <= count; ++c) {
      z *= part * c;
    }
  }
  return numerator / z;
}

CharacterTable::CharacterTable(int k) : k_(k), labels_(partitions(k)) {
  for (const IntegerPartition& lambda : labels_) {
    auto& row = values_[lambda];
    for (const IntegerPartition& mu : labels_) {
      row.emplace(mu, sym_character(lambda, mu));
    }
  }
}

std::int64_t CharacterTable::value(const IntegerPartition& lambda,
                                   const IntegerPartition& mu) const {
  return values_.at(lambda).at(mu);
}

std::int64_t CharacterTable::dimension(const IntegerPartition& lambda) const {
  std::vector<int> ones(static_cast<std::size_t>(k_), 1);
  return value(lambda, IntegerPartition(std::move(ones)));
}

} // namespace rooksa
