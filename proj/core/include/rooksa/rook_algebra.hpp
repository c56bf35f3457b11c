#pragma once

#include <map>

#include "rooksa/group_algebra.hpp"
#include "rooksa/partial_ranking.hpp"
#include "rooksa/partition.hpp"
#include "rooksa/rational.hpp"

namespace rooksa {

/// Which basis of the rook monoid algebra a coefficient vector is written
/// in. The groupoid basis is the Mobius transform of the semigroup basis
/// and multiplies blockwise.
enum class Basis { semigroup, groupoid };

/// An element of the algebra of R_n: a rational coefficient vector over
/// partial rankings, tagged with the basis its coefficients refer to. The
/// tag is carried through every operation; zero coefficients are dropped.
class AlgebraElement {
public:
  AlgebraElement() = default;
  AlgebraElement(int n, Basis basis) : n_(n), basis_(basis) {}

  static AlgebraElement unit(int n, Basis basis, const PartialRanking& s,
                             const Rational& c = Rational(1));

  int n() const { return n_; }
  Basis basis() const { return basis_; }
  const std::map<PartialRanking, Rational>& coefficients() const {
    return coeff_;
  }
  Rational at(const PartialRanking& s) const;
  void add(const PartialRanking& s, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& o); // same n and basis
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
  int n_ = 0;
  Basis basis_ = Basis::semigroup;
  std::map<PartialRanking, Rational> coeff_;
};

/// Re-express the same algebra element in the other basis. Converting to
/// the groupoid basis is the zeta transform c(s) = sum_{t >= s} f(t);
/// converting back applies Mobius inversion. A no-op when the element is
/// already in the requested basis.
AlgebraElement to_groupoid_basis(const AlgebraElement& f);
AlgebraElement to_semigroup_basis(const AlgebraElement& f);

/// Convolution: the bilinear extension of composition in R_n. Both inputs
/// must carry the semigroup tag.
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g);

/// Bilinear extension of the groupoid product rule: |s||t| = |st| when
/// dom(s) = ran(t) and 0 otherwise. Both inputs must carry the groupoid tag.
AlgebraElement multiply_groupoid(const AlgebraElement& f,
                                 const AlgebraElement& g);

/// Inner product with the groupoid basis orthonormal (isotypics are
/// mutually orthogonal under this one). Inputs are converted as needed.
Rational inner_product_groupoid(const AlgebraElement& f,
                                const AlgebraElement& g);

/// Natural inner product: the semigroup basis is orthonormal.
Rational inner_product_natural(const AlgebraElement& f,
                               const AlgebraElement& g);

/// Projection of f onto the isotypic component labeled by lambda (weight
/// k <= n). Works blockwise: each (dom, ran) block of the rank-k groupoid
/// coefficients is relabeled into S_k by permutation type, projected there,
/// and transported back. The result carries the groupoid tag.
AlgebraElement isotypic_project_rook(const AlgebraElement& f,
                                     const IntegerPartition& lambda);
AlgebraElement isotypic_project_rook(const AlgebraElement& f,
                                     const IntegerPartition& lambda,
                                     const CharacterTable& table);

} // namespace rooksa
