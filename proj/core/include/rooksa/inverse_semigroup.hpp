#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rooksa/matrix.hpp"
#include "rooksa/rational.hpp"

namespace rooksa {

struct SemigroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite inverse semigroup given abstractly by its multiplication table.
/// Construction through validate() checks associativity and that every
/// element has exactly one inverse, then precomputes the natural partial
/// order (t <= s iff t = es for an idempotent e) and its Mobius function.
/// Everything is immutable afterwards, so instances can be shared freely.
class FiniteInverseSemigroup {
public:
  static FiniteInverseSemigroup validate(const std::vector<std::vector<int>>& table);

  int size() const { return m_; }
  int product(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(m_) +
                  static_cast<std::size_t>(b)];
  }
  int inverse(int x) const { return inv_[static_cast<std::size_t>(x)]; }
  bool is_idempotent(int x) const { return product(x, x) == x; }
  const std::vector<int>& idempotents() const { return idempotents_; }

  bool leq(int t, int s) const {
    return leq_[static_cast<std::size_t>(t) * static_cast<std::size_t>(m_) +
                static_cast<std::size_t>(s)];
  }
  /// Mobius function of the natural order; throws when t <= s fails.
  std::int64_t mobius(int t, int s) const;

private:
  FiniteInverseSemigroup() = default;

  int m_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> idempotents_;
  std::vector<char> leq_;
  std::map<std::pair<int, int>, std::int64_t> mobius_;
};

/// One D-class: its elements, idempotents, a fixed base idempotent e, the
/// maximal subgroup at e, and for every idempotent a a connector p_a with
/// p_a^-1 p_a = e and p_a p_a^-1 = a (p_e = e). Connectors are the first
/// valid elements in enumeration order, which for rook monoid tables built
/// in canonical order are exactly the order-preserving bijections.
struct DClassInfo {
  int index = 0;
  std::vector<int> elements;
  std::vector<int> idempotents;
  int base_idempotent = 0;
  std::vector<int> max_subgroup;
  std::map<int, int> connectors;

  int idempotent_position(int a) const; // row/column index in the block algebra
};

/// Partition of S into D-classes (s ~ t iff s^-1 s and t^-1 t are
/// isomorphic idempotents), ordered by smallest element index.
std::vector<DClassInfo> d_classes(const FiniteInverseSemigroup& S);

/// |s||t| = |st| when s^-1 s = t t^-1, and the symbolic zero otherwise.
std::optional<int> groupoid_product_rule(const FiniteInverseSemigroup& S, int s,
                                         int t);

struct PhiImage {
  int group_element; // p_f^-1 s p_e, an element of the maximal subgroup
  int row;           // f = s s^-1
  int col;           // e = s^-1 s
};

/// Steinberg's isomorphism C D_k -> M_{r_k}(C G_k) on groupoid basis
/// elements: |s| -> (p_f^-1 s p_e) E_{f,e}. Throws when s is outside the
/// class.
PhiImage steinberg_phi(const FiniteInverseSemigroup& S, const DClassInfo& cls,
                       int s);

/// Inverse direction: (g, f, e) -> p_f g p_e^-1.
int steinberg_phi_inverse(const FiniteInverseSemigroup& S, const DClassInfo& cls,
                          int g, int f, int e);

/// A matrix representation of the maximal subgroup of one D-class, supplied
/// from outside (never synthesized here). Matrices are exact rationals.
struct MatrixIrrep {
  std::vector<int> group; // element indices, closed under the product
  int dim = 0;
  std::map<int, RationalMatrix> images;

  /// Checks multiplicativity and that the group identity maps to I.
  void validate(const FiniteInverseSemigroup& S) const;
};

/// Evaluates the extension of rho to the groupoid basis element |s|: the
/// block matrix E_{f,e} (x) rho(p_f^-1 s p_e) of size r_k d, with rows and
/// columns indexed by the class idempotents in enumeration order; the zero
/// matrix when s lies outside the class.
RationalMatrix evaluate_extended_irrep(const FiniteInverseSemigroup& S,
                                       const DClassInfo& cls,
                                       const MatrixIrrep& rho, int s);

/// |p_b| (sum_x c(x)|x|) |p_a^-1| computed with the groupoid product rule:
/// the groupoid-basis coefficient vector of a Fourier basis element when c
/// is one for the group algebra of G_k. Throws when b or a is not an
/// idempotent of the class.
std::map<int, Rational> fourier_basis_element(
    const FiniteInverseSemigroup& S, const DClassInfo& cls, int b, int a,
    const std::map<int, Rational>& group_coefficients);

/// Plain-text multiplication table: first line m, then m lines of m
/// whitespace-separated 0-based indices.
std::vector<std::vector<int>> parse_multiplication_table(std::istream& in);
std::string format_multiplication_table(const std::vector<std::vector<int>>& table);

} // namespace rooksa
