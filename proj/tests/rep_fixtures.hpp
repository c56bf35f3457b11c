#pragma once

// Explicit rational matrix representations of S_k for k <= 4, built from
// the permutation action. They serve as an oracle for the character
// recursion and as irrep inputs for the generic inverse semigroup layer.

#include <stdexcept>
#include <vector>

#include "rooksa/matrix.hpp"
#include "rooksa/partial_ranking.hpp"
#include "rooksa/partition.hpp"

namespace testrep {

inline int sign_of(const rooksa::Permutation& s) {
  int k = s.k();
  int inversions = 0;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      if (s.image(i) > s.image(j)) {
        ++inversions;
      }
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

/// The (k-1)-dimensional standard representation in the basis
/// v_i = e_i - e_{i+1}.
inline rooksa::RationalMatrix standard_rep(const rooksa::Permutation& s) {
  int k = s.k();
  rooksa::RationalMatrix m(k - 1, k - 1);
  for (int i = 1; i <= k - 1; ++i) {
    int a = s.image(i);
    int b = s.image(i + 1);
    // column i holds e_a - e_b expressed in the v basis
    if (a < b) {
      for (int j = a; j <= b - 1; ++j) {
        m.at(j - 1, i - 1) = rooksa::Rational(1);
      }
    } else {
      for (int j = b; j <= a - 1; ++j) {
        m.at(j - 1, i - 1) = rooksa::Rational(-1);
      }
    }
  }
  return m;
}

inline rooksa::RationalMatrix scale(const rooksa::RationalMatrix& m, int c) {
  rooksa::RationalMatrix out = m;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out.at(i, j) = m.at(i, j) * rooksa::Rational(c);
    }
  }
  return out;
}

/// The two-dimensional irreducible of S_4: the action on the three pair
/// partitions of {1,2,3,4}, pushed through the standard representation of
/// S_3.
inline rooksa::RationalMatrix two_dim_s4(const rooksa::Permutation& s) {
  auto pairing_index = [](int a, int b) {
    // partner of 1 determines the pairing: 2 -> 0, 3 -> 1, 4 -> 2
    return a == 1 ? b - 2 : a - 2;
  };
  std::vector<int> images(3);
  const int pairings[3][2][2] = {
      {{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}};
  for (int p = 0; p < 3; ++p) {
    int a = s.image(pairings[p][0][0]);
    int b = s.image(pairings[p][0][1]);
    int partner_of_one = 0;
    if (a == 1) {
      partner_of_one = b;
    } else if (b == 1) {
      partner_of_one = a;
    } else {
      int c = s.image(pairings[p][1][0]);
      int d = s.image(pairings[p][1][1]);
      partner_of_one = (c == 1) ? d : c;
    }
    images[p] = pairing_index(1, partner_of_one) + 1;
  }
  return standard_rep(rooksa::Permutation::from_one_line(images));
}

/// Matrix of the irreducible labeled by lambda at s, for k <= 4.
inline rooksa::RationalMatrix irrep_matrix(const rooksa::IntegerPartition& lambda,
                                           const rooksa::Permutation& s) {
  int k = s.k();
  if (lambda.weight() != k || k > 4) {
    throw std::invalid_argument("irrep_matrix: unsupported label");
  }
  auto one_by_one = [](int v) {
    rooksa::RationalMatrix m(1, 1);
    m.at(0, 0) = rooksa::Rational(v);
    return m;
  };
  const std::vector<int>& parts = lambda.parts();
  if (parts.empty() || parts == std::vector<int>{k}) {
    return one_by_one(1); // trivial
  }
  if (parts == std::vector<int>(static_cast<std::size_t>(k), 1)) {
    return one_by_one(sign_of(s));
  }
  if (parts == std::vector<int>{k - 1, 1}) {
    return standard_rep(s);
  }
  if (parts == std::vector<int>{2, 1, 1}) { // k = 4
    return scale(standard_rep(s), sign_of(s));
  }
  if (parts == std::vector<int>{2, 2}) { // k = 4
    return two_dim_s4(s);
  }
  throw std::invalid_argument("irrep_matrix: unsupported label " +
                              lambda.to_string());
}

inline rooksa::Rational trace(const rooksa::RationalMatrix& m) {
  rooksa::Rational t;
  for (int i = 0; i < m.rows(); ++i) {
    t += m.at(i, i);
  }
  return t;
}

} // namespace testrep
