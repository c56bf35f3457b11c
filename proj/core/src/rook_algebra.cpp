#include "rooksa/rook_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace rooksa {

AlgebraElement AlgebraElement::unit(int n, Basis basis, const PartialRanking& s,
                                    const Rational& c) {
  AlgebraElement out(n, basis);
  out.add(s, c);
  return out;
}

Rational AlgebraElement::at(const PartialRanking& s) const {
  auto it = coeff_.find(s);
  return it == coeff_.end() ? Rational{} : it->second;
}

void AlgebraElement::add(const PartialRanking& s, const Rational& c) {
  if (s.n() != n_) {
    throw std::invalid_argument("AlgebraElement: wrong ambient size");
  }
  auto [it, inserted] = coeff_.emplace(s, c);
  if (!inserted) {
    it->second += c;
  }
  if (it->second.is_zero()) {
    coeff_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.n_ != n_ || o.basis_ != basis_) {
    throw std::invalid_argument("AlgebraElement: mixed size or basis in sum");
  }
  for (const auto& [s, c] : o.coeff_) {
    add(s, c);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.n_ != n_ || o.basis_ != basis_) {
    throw std::invalid_argument("AlgebraElement: mixed size or basis in sum");
  }
  for (const auto& [s, c] : o.coeff_) {
    add(s, -c);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeff_.clear();
    return *this;
  }
  for (auto& [s, v] : coeff_) {
    v *= c;
  }
  return *this;
}

AlgebraElement to_groupoid_basis(const AlgebraElement& f) {
  if (f.basis() == Basis::groupoid) {
    return f;
  }
  AlgebraElement out(f.n(), Basis::groupoid);
  for (const auto& [t, c] : f.coefficients()) {
    for (const PartialRanking& s : sub_rankings(t)) {
      out.add(s, c);
    }
  }
  return out;
}

AlgebraElement to_semigroup_basis(const AlgebraElement& f) {
  if (f.basis() == Basis::semigroup) {
    return f;
  }
  AlgebraElement out(f.n(), Basis::semigroup);
  for (const auto& [t, c] : f.coefficients()) {
    for (const PartialRanking& s : sub_rankings(t)) {
      out.add(s, mobius(s, t) > 0 ? c : -c);
    }
  }
  return out;
}

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) {
  if (f.n() != g.n()) {
    throw std::invalid_argument("convolve: mismatched ambient sizes");
  }
  if (f.basis() != Basis::semigroup || g.basis() != Basis::semigroup) {
    throw std::invalid_argument("convolve: inputs must be in the semigroup basis");
  }
  AlgebraElement out(f.n(), Basis::semigroup);
  for (const auto& [s, cs] : f.coefficients()) {
    for (const auto& [t, ct] : g.coefficients()) {
      out.add(compose(s, t), cs * ct);
    }
  }
  return out;
}

AlgebraElement multiply_groupoid(const AlgebraElement& f,
                                 const AlgebraElement& g) {
  if (f.n() != g.n()) {
    throw std::invalid_argument("multiply_groupoid: mismatched ambient sizes");
  }
  if (f.basis() != Basis::groupoid || g.basis() != Basis::groupoid) {
    throw std::invalid_argument(
        "multiply_groupoid: inputs must be in the groupoid basis");
  }
  AlgebraElement out(f.n(), Basis::groupoid);
  for (const auto& [s, cs] : f.coefficients()) {
    std::vector<int> needed = s.dom();
    for (const auto& [t, ct] : g.coefficients()) {
      if (t.ran() == needed) {
        out.add(compose(s, t), cs * ct);
      }
    }
  }
  return out;
}

Rational inner_product_groupoid(const AlgebraElement& f,
                                const AlgebraElement& g) {
  if (f.n() != g.n()) {
    throw std::invalid_argument("inner_product_groupoid: mismatched sizes");
  }
  AlgebraElement a = to_groupoid_basis(f);
  AlgebraElement b = to_groupoid_basis(g);
  Rational total;
  for (const auto& [s, c] : a.coefficients()) {
    Rational other = b.at(s);
    if (!other.is_zero()) {
      total += c * other;
    }
  }
  return total;
}

Rational inner_product_natural(const AlgebraElement& f,
                               const AlgebraElement& g) {
  if (f.n() != g.n()) {
    throw std::invalid_argument("inner_product_natural: mismatched sizes");
  }
  AlgebraElement a = to_semigroup_basis(f);
  AlgebraElement b = to_semigroup_basis(g);
  Rational total;
  for (const auto& [s, c] : a.coefficients()) {
    Rational other = b.at(s);
    if (!other.is_zero()) {
      total += c * other;
    }
  }
  return total;
}

AlgebraElement isotypic_project_rook(const AlgebraElement& f,
                                     const IntegerPartition& lambda) {
  CharacterTable table(lambda.weight());
  return isotypic_project_rook(f, lambda, table);
}

AlgebraElement isotypic_project_rook(const AlgebraElement& f,
                                     const IntegerPartition& lambda,
                                     const CharacterTable& table) {
  int k = lambda.weight();
  if (k > f.n()) {
    throw std::invalid_argument("isotypic_project_rook: weight exceeds n");
  }
  AlgebraElement g = to_groupoid_basis(f);

  // gather the rank-k groupoid coefficients blockwise
  std::map<std::pair<std::vector<int>, std::vector<int>>, GroupAlgebraElement>
      blocks;
  for (const auto& [s, c] : g.coefficients()) {
    if (s.rank() != k) {
      continue;
    }
    auto key = std::make_pair(s.dom(), s.ran());
    auto [it, inserted] = blocks.emplace(key, GroupAlgebraElement(k));
    it->second.add(perm_type(s), c);
  }

  AlgebraElement out(f.n(), Basis::groupoid);
  for (const auto& [key, block] : blocks) {
    const auto& [dom, ran] = key;
    GroupAlgebraElement projected = isotypic_project_group(block, lambda, table);
    for (const auto& [type, c] : projected.coefficients()) {
      std::vector<std::pair<int, int>> maps;
      maps.reserve(dom.size());
      for (int i = 1; i <= k; ++i) {
        maps.emplace_back(dom[static_cast<std::size_t>(i - 1)],
                          ran[static_cast<std::size_t>(type.image(i) - 1)]);
      }
      out.add(PartialRanking::from_pairs(f.n(), maps), c);
    }
  }
  return out;
}

} // namespace rooksa
