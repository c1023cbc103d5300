#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genusforge {

/// Multiset of positive integers, stored as a non-increasing sequence.
/// Indexes the monomial p_I = p_{i1} ... p_{ir}; the empty partition is the constant 1.
class Partition {
 public:
  Partition() = default;
  /// Parts in any order; zero parts are rejected.
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

  /// "3", "5,5", "1,1,2,2" (any order). Throws std::invalid_argument.
  static Partition parse(std::string_view text);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  unsigned weight() const { return weight_; }

  /// (value, count) pairs in decreasing value order.
  std::vector<std::pair<unsigned, unsigned>> multiplicities() const;
  /// prod over distinct parts of mu(i)!
  unsigned long long multiplicity_factorial() const;

  Partition merged(const Partition& other) const;

  /// Comma-separated parts in stored order, e.g. "2,2,1,1"; "" for the empty partition.
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned weight_ = 0;
};

/// Weight ascending, then reverse-lexicographic within a weight:
/// (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of k in reverse-lexicographic order, starting from (k).
std::vector<Partition> partitions_of(unsigned k);

}  // namespace genusforge
