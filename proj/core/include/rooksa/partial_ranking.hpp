#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rooksa {

/// An injective partial function on {1..n} -- a partial ranking, and the
/// element type of the rook monoid R_n. Position i of the image list holds
/// sigma(i), or 0 when i is outside the domain. Values are immutable after
/// construction and compare extensionally.
class PartialRanking {
public:
  PartialRanking() = default; // the unique element of R_0

  static PartialRanking null_map(int n);
  static PartialRanking identity(int n);

  /// images is 1-based on values, 0 marks "undefined"; throws
  /// std::invalid_argument on out-of-range entries or repeated images.
  static PartialRanking from_images(int n, std::vector<int> images);
  static PartialRanking from_pairs(int n,
                                   const std::vector<std::pair<int, int>>& maps);

  int n() const { return n_; }
  int rank() const;
  bool defined(int i) const;
  int image(int i) const; // 0 when undefined

  std::vector<int> dom() const; // ascending
  std::vector<int> ran() const; // ascending

  bool is_idempotent() const; // restriction of the identity
  bool is_total() const { return rank() == n_; }

  friend auto operator<=>(const PartialRanking&, const PartialRanking&) = default;

  /// Bracket list form, e.g. "[3,-,-,2,1]"; "[]" for the element of R_0.
  std::string to_string() const;
  static PartialRanking parse(const std::string& text);

private:
  int n_ = 0;
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const PartialRanking& s);

/// Right-to-left composition, (s.t)(x) = s(t(x)); throws on mismatched n.
PartialRanking compose(const PartialRanking& s, const PartialRanking& t);

/// The unique y with sys = s and ysy = y: everything in ran(s) is sent back
/// where it came from.
PartialRanking inverse(const PartialRanking& s);

/// Natural partial order: t <= s iff s extends t as a partial function.
bool leq(const PartialRanking& t, const PartialRanking& s);

/// Everything below s in the extension order: all 2^rank(s) restrictions
/// of s, the null map and s itself included.
std::vector<PartialRanking> sub_rankings(const PartialRanking& s);

/// Mobius value of the natural order, (-1)^(rk(s)-rk(t)); requires t <= s.
int mobius(const PartialRanking& t, const PartialRanking& s);

/// The unique order-preserving bijection p_A from {1..k} onto A, as an
/// element of R_n. Throws when |A| != k or A is not a subset of {1..n}.
PartialRanking order_preserving_bijection(int n, int k,
                                          const std::vector<int>& targets);

/// A total bijection on {1..k}: the permutation type carrier for rank-k
/// partial rankings and the key type of the group algebra layer.
class Permutation {
public:
  Permutation() = default; // the element of S_0
  explicit Permutation(PartialRanking p);

  static Permutation identity(int k);
  static Permutation from_one_line(std::vector<int> images);

  int k() const { return p_.n(); }
  int image(int i) const { return p_.image(i); }
  const PartialRanking& ranking() const { return p_; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const { return p_.to_string(); }

private:
  PartialRanking p_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& s);

Permutation compose(const Permutation& s, const Permutation& t);
Permutation inverse(const Permutation& s);

/// The order pattern of s between its domain and range: perm(s) sends i to j
/// when s maps the i-th smallest domain element to the j-th smallest range
/// element. Equals p_ran(s)^-1 . s . p_dom(s) read inside S_rank(s).
Permutation perm_type(const PartialRanking& s);

} // namespace rooksa
