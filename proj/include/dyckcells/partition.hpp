#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace dyckcells {

// Integer partition: weakly decreasing positive parts. Comparison sorts by
// weight, then by descending lexicographic part sequence, so partitions of n
// list as (n), (n-1,1), ..., (1^n); every serialized listing uses this order.
class Partition {
 public:
  Partition() = default;
  // Trailing zeros are trimmed; parts must be weakly decreasing and >= 0.
  explicit Partition(std::vector<int> parts);

  int weight() const;
  int num_parts() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  // "221"; commas when a part exceeds 9 ("10,2,1"); "-" for the empty one
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  std::strong_ordering operator<=>(const Partition& o) const;

 private:
  std::vector<int> parts_;
};

// All partitions of n in canonical listing order.
std::vector<Partition> partitions_of(int n);

// Accepts "221" (digits) or "2,2,1" (comma separated).
Partition parse_partition(std::string_view text);

// Shared parser for the digit-string / comma-list encodings.
std::vector<int> parse_int_list(std::string_view text);

// Composition: ordered positive parts.
using Composition = std::vector<int>;

Partition sort_to_partition(const Composition& alpha);
std::string composition_str(const Composition& alpha);

}  // namespace dyckcells
