#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace slelab::algebra {

/// Non-increasing list of positive integers, indexing the PBW monomial
/// L_{-p1} L_{-p2} ... L_{-pk} |h> with p1 >= p2 >= ... >= pk.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int level() const { return level_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int front() const { return parts_.front(); }

  /// Drops the largest part.
  Partition tail() const;
  /// Puts k in front; requires k >= front().
  Partition prepend(int k) const;

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int level_ = 0;
};

/// Canonical basis order: lower level first; within a level the
/// lexicographically larger partition first, so (4) < (3,1) < (2,2) < (2,1,1).
struct BasisOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.level() != b.level()) {
      return a.level() < b.level();
    }
    return b < a;
  }
};

/// All partitions of `level` in BasisOrder. partitions_of(0) = {()}.
std::vector<Partition> partitions_of(int level);

}  // namespace slelab::algebra
