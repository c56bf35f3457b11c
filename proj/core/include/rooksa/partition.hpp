#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace rooksa {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition (weight 0) labels the rank-0 isotypic.
class IntegerPartition {
public:
  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> parts); // validates ordering

  /// Sorts descending and drops zero parts.
  static IntegerPartition of(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }

  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;

  std::string to_string() const; // "(2,1)", "()" for the empty partition
  static IntegerPartition parse(const std::string& text);

private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const IntegerPartition& p);

/// All partitions of k in reverse-lexicographic order: (k) first, (1^k) last.
std::vector<IntegerPartition> partitions(int k);

} // namespace rooksa
