#include "rooksa/inverse_semigroup.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace rooksa {

FiniteInverseSemigroup FiniteInverseSemigroup::validate(
    const std::vector<std::vector<int>>& table) {
  int m = static_cast<int>(table.size());
  if (m == 0) {
    throw SemigroupError("validate: empty table");
  }
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != m) {
      throw SemigroupError("validate: table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= m) {
        throw SemigroupError("validate: entry out of range");
      }
    }
  }

  FiniteInverseSemigroup S;
  S.m_ = m;
  S.table_.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (const auto& row : table) {
    S.table_.insert(S.table_.end(), row.begin(), row.end());
  }

  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int ab = S.product(a, b);
      for (int c = 0; c < m; ++c) {
        if (S.product(ab, c) != S.product(a, S.product(b, c))) {
          throw SemigroupError("validate: product is not associative");
        }
      }
    }
  }

  S.inv_.assign(static_cast<std::size_t>(m), -1);
  for (int x = 0; x < m; ++x) {
    int found = -1;
    int count = 0;
    for (int y = 0; y < m; ++y) {
      if (S.product(S.product(x, y), x) == x &&
          S.product(S.product(y, x), y) == y) {
        found = y;
        ++count;
      }
    }
    if (count != 1) {
      throw SemigroupError("validate: element " + std::to_string(x) + " has " +
                           std::to_string(count) + " inverses");
    }
    S.inv_[static_cast<std::size_t>(x)] = found;
  }

  for (int x = 0; x < m; ++x) {
    if (S.is_idempotent(x)) {
      S.idempotents_.push_back(x);
    }
  }

  S.leq_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (int s = 0; s < m; ++s) {
    for (int e : S.idempotents_) {
      int t = S.product(e, s);
      S.leq_[static_cast<std::size_t>(t) * static_cast<std::size_t>(m) +
             static_cast<std::size_t>(s)] = 1;
    }
  }

  // Mobius values by recursion over intervals, smallest intervals first.
  std::vector<std::vector<int>> below(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    for (int s = 0; s < m; ++s) {
      if (S.leq(t, s)) {
        below[static_cast<std::size_t>(s)].push_back(t);
      }
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < m; ++s) {
    for (int t : below[static_cast<std::size_t>(s)]) {
      pairs.emplace_back(t, s);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    auto interval = [&](const std::pair<int, int>& p) {
      int count = 0;
      for (int u : below[static_cast<std::size_t>(p.second)]) {
        if (S.leq(p.first, u)) {
          ++count;
        }
      }
      return count;
    };
    return interval(a) < interval(b);
  });
  for (const auto& [t, s] : pairs) {
    if (t == s) {
      S.mobius_.emplace(std::make_pair(t, s), 1);
      continue;
    }
    std::int64_t total = 0;
    for (int u : below[static_cast<std::size_t>(s)]) {
      if (u != s && S.leq(t, u)) {
        total += S.mobius_.at(std::make_pair(t, u));
      }
    }
    S.mobius_.emplace(std::make_pair(t, s), -total);
  }

  return S;
}

std::int64_t FiniteInverseSemigroup::mobius(int t, int s) const {
  auto it = mobius_.find(std::make_pair(t, s));
  if (it == mobius_.end()) {
    throw SemigroupError("mobius: elements are not comparable");
  }
  return it->second;
}

int DClassInfo::idempotent_position(int a) const {
  auto it = std::find(idempotents.begin(), idempotents.end(), a);
  if (it == idempotents.end()) {
    throw SemigroupError("idempotent_position: not an idempotent of the class");
  }
  return static_cast<int>(it - idempotents.begin());
}

std::vector<DClassInfo> d_classes(const FiniteInverseSemigroup& S) {
  int m = S.size();

  // idempotents e, f are isomorphic when some s has s^-1 s = e, s s^-1 = f
  auto isomorphic = [&](int e, int f) {
    for (int s = 0; s < m; ++s) {
      if (S.product(S.inverse(s), s) == e && S.product(s, S.inverse(s)) == f) {
        return true;
      }
    }
    return false;
  };

  std::vector<DClassInfo> classes;
  std::vector<int> idempotent_class(static_cast<std::size_t>(m), -1);
  for (int e : S.idempotents()) {
    int found = -1;
    for (const DClassInfo& cls : classes) {
      if (isomorphic(cls.base_idempotent, e)) {
        found = cls.index;
        break;
      }
    }
    if (found == -1) {
      DClassInfo cls;
      cls.index = static_cast<int>(classes.size());
      cls.base_idempotent = e;
      classes.push_back(cls);
      found = cls.index;
    }
    classes[static_cast<std::size_t>(found)].idempotents.push_back(e);
    idempotent_class[static_cast<std::size_t>(e)] = found;
  }

  for (int s = 0; s < m; ++s) {
    int e = S.product(S.inverse(s), s);
    classes[static_cast<std::size_t>(idempotent_class[static_cast<std::size_t>(e)])]
        .elements.push_back(s);
  }

  for (DClassInfo& cls : classes) {
    int e = cls.base_idempotent;
    for (int s : cls.elements) {
      if (S.product(S.inverse(s), s) == e && S.product(s, S.inverse(s)) == e) {
        cls.max_subgroup.push_back(s);
      }
    }
    for (int a : cls.idempotents) {
      if (a == e) {
        cls.connectors[a] = e;
        continue;
      }
      for (int p : cls.elements) {
        if (S.product(S.inverse(p), p) == e && S.product(p, S.inverse(p)) == a) {
          cls.connectors[a] = p;
          break;
        }
      }
    }
  }

  // order classes by their smallest element
  std::sort(classes.begin(), classes.end(),
            [](const DClassInfo& a, const DClassInfo& b) {
              return a.elements.front() < b.elements.front();
            });
  for (std::size_t i = 0; i < classes.size(); ++i) {
    classes[i].index = static_cast<int>(i);
  }
  return classes;
}

std::optional<int> groupoid_product_rule(const FiniteInverseSemigroup& S, int s,
                                         int t) {
  if (S.product(S.inverse(s), s) != S.product(t, S.inverse(t))) {
    return std::nullopt;
  }
  return S.product(s, t);
}

PhiImage steinberg_phi(const FiniteInverseSemigroup& S, const DClassInfo& cls,
                       int s) {
  if (std::find(cls.elements.begin(), cls.elements.end(), s) ==
      cls.elements.end()) {
    throw SemigroupError("steinberg_phi: element is not in the class");
  }
  int e = S.product(S.inverse(s), s);
  int f = S.product(s, S.inverse(s));
  int p_f = cls.connectors.at(f);
  int p_e = cls.connectors.at(e);
  PhiImage image;
  image.group_element = S.product(S.product(S.inverse(p_f), s), p_e);
  image.row = f;
  image.col = e;
  return image;
}

int steinberg_phi_inverse(const FiniteInverseSemigroup& S, const DClassInfo& cls,
                          int g, int f, int e) {
  int p_f = cls.connectors.at(f);
  int p_e = cls.connectors.at(e);
  return S.product(S.product(p_f, g), S.inverse(p_e));
}

void MatrixIrrep::validate(const FiniteInverseSemigroup& S) const {
  for (int g : group) {
    auto it = images.find(g);
    if (it == images.end() || it->second.rows() != dim ||
        it->second.cols() != dim) {
      throw SemigroupError("MatrixIrrep: missing or misshaped image");
    }
  }
  for (int g : group) {
    for (int h : group) {
      int gh = S.product(g, h);
      if (images.find(gh) == images.end()) {
        throw SemigroupError("MatrixIrrep: group is not closed");
      }
      if (!(images.at(g) * images.at(h) == images.at(gh))) {
        throw SemigroupError("MatrixIrrep: map is not multiplicative");
      }
    }
  }
  bool identity_ok = false;
  for (int g : group) {
    if (S.is_idempotent(g)) {
      identity_ok = images.at(g) == RationalMatrix::identity(dim);
    }
  }
  if (!identity_ok) {
    throw SemigroupError("MatrixIrrep: identity does not map to I");
  }
}

RationalMatrix evaluate_extended_irrep(const FiniteInverseSemigroup& S,
                                       const DClassInfo& cls,
                                       const MatrixIrrep& rho, int s) {
  rho.validate(S);
  int r = static_cast<int>(cls.idempotents.size());
  RationalMatrix out(r * rho.dim, r * rho.dim);
  if (std::find(cls.elements.begin(), cls.elements.end(), s) ==
      cls.elements.end()) {
    return out;
  }
  PhiImage phi = steinberg_phi(S, cls, s);
  const RationalMatrix& block = rho.images.at(phi.group_element);
  int row0 = cls.idempotent_position(phi.row) * rho.dim;
  int col0 = cls.idempotent_position(phi.col) * rho.dim;
  for (int i = 0; i < rho.dim; ++i) {
    for (int j = 0; j < rho.dim; ++j) {
      out.at(row0 + i, col0 + j) = block.at(i, j);
    }
  }
  return out;
}

std::map<int, Rational> fourier_basis_element(
    const FiniteInverseSemigroup& S, const DClassInfo& cls, int b, int a,
    const std::map<int, Rational>& group_coefficients) {
  for (int idem : {b, a}) {
    if (!S.is_idempotent(idem) ||
        std::find(cls.idempotents.begin(), cls.idempotents.end(), idem) ==
            cls.idempotents.end()) {
      throw SemigroupError("fourier_basis_element: not an idempotent of the class");
    }
  }
  int p_b = cls.connectors.at(b);
  int p_a_inv = S.inverse(cls.connectors.at(a));
  std::map<int, Rational> out;
  for (const auto& [x, c] : group_coefficients) {
    if (c.is_zero()) {
      continue;
    }
    std::optional<int> left = groupoid_product_rule(S, p_b, x);
    if (!left) {
      continue;
    }
    std::optional<int> full = groupoid_product_rule(S, *left, p_a_inv);
    if (!full) {
      continue;
    }
    auto [it, inserted] = out.emplace(*full, c);
    if (!inserted) {
      it->second += c;
    }
    if (it->second.is_zero()) {
      out.erase(it);
    }
  }
  return out;
}

std::vector<std::vector<int>> parse_multiplication_table(std::istream& in) {
  int m = 0;
  if (!(in >> m) || m <= 0) {
    throw SemigroupError("parse_multiplication_table: bad element count");
  }
  std::vector<std::vector<int>> table(
      static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!(in >> table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) {
        throw SemigroupError("parse_multiplication_table: truncated table");
      }
    }
  }
  return table;
}

std::string format_multiplication_table(
    const std::vector<std::vector<int>>& table) {
  std::ostringstream out;
  out << table.size() << '\n';
  for (const auto& row : table) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) {
        out << ' ';
      }
      out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

} // namespace rooksa
