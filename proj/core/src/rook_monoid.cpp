#include "rooksa/rook_monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rooksa {

std::vector<std::vector<int>> k_subsets(int n, int k) {
  if (k < 0 || k > n) {
    return {};
  }
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    out.push_back(current);
    // advance to the next subset in lex order
    int i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - (k - 1 - i)) {
      --i;
    }
    if (i < 0) {
      break;
    }
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      current[static_cast<std::size_t>(j)] =
          current[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::vector<Permutation> symmetric_group(int k) {
  std::vector<int> line(static_cast<std::size_t>(k));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<PartialRanking> enumerate_block(int n, const std::vector<int>& dom,
                                            const std::vector<int>& ran) {
  if (dom.size() != ran.size()) {
    throw std::invalid_argument("enumerate_block: |dom| != |ran|");
  }
  std::vector<int> d = dom;
  std::vector<int> r = ran;
  std::sort(d.begin(), d.end());
  std::sort(r.begin(), r.end());
  int k = static_cast<int>(d.size());
  std::vector<PartialRanking> out;
  for (const Permutation& type : symmetric_group(k)) {
    std::vector<std::pair<int, int>> maps;
    maps.reserve(d.size());
    for (int i = 1; i <= k; ++i) {
      maps.emplace_back(d[static_cast<std::size_t>(i - 1)],
                        r[static_cast<std::size_t>(type.image(i) - 1)]);
    }
    out.push_back(PartialRanking::from_pairs(n, maps));
  }
  return out;
}

std::vector<PartialRanking> enumerate_rook_monoid(int n) {
  std::vector<PartialRanking> out;
  out.reserve(rook_monoid_size(n));
  for (int k = 0; k <= n; ++k) {
    for (const auto& dom : k_subsets(n, k)) {
      for (const auto& ran : k_subsets(n, k)) {
        for (const auto& s : enumerate_block(n, dom, ran)) {
          out.push_back(s);
        }
      }
    }
  }
  return out;
}

std::size_t rook_monoid_size(int n) {
  std::size_t total = 0;
  for (int k = 0; k <= n; ++k) {
    total += binomial(n, k) * binomial(n, k) * factorial(k);
  }
  return total;
}

std::vector<std::vector<int>> rook_multiplication_table(int n) {
  std::vector<PartialRanking> elements = enumerate_rook_monoid(n);
  std::map<PartialRanking, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i], static_cast<int>(i));
  }
  std::size_t m = elements.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i][j] = index.at(compose(elements[i], elements[j]));
    }
  }
  return table;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  std::size_t result = 1;
  for (int i = 0; i < k; ++i) {
    result = result * static_cast<std::size_t>(n - i) /
             static_cast<std::size_t>(i + 1);
  }
  return result;
}

std::size_t factorial(int k) {
  std::size_t result = 1;
  for (int i = 2; i <= k; ++i) {
    result *= static_cast<std::size_t>(i);
  }
  return result;
}

} // namespace rooksa
