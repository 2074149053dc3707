#include "dyckcells/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "dyckcells/error.hpp"

namespace dyckcells {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      fail(errc::out_of_range, "partition part must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      fail(errc::not_weakly_increasing, "partition parts must weakly decrease");
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> t(static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
  return Partition(std::move(t));
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  bool digits = parts_[0] <= 9;
  std::ostringstream out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0 && !digits) out << ',';
    out << parts_[i];
  }
  return out.str();
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  int wa = weight(), wb = o.weight();
  if (wa != wb) return wa <=> wb;
  // descending lex: the lexicographically larger part sequence comes first
  return std::lexicographical_compare_three_way(
      o.parts_.begin(), o.parts_.end(), parts_.begin(), parts_.end());
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) fail(errc::out_of_range, "partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> acc;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(Partition(acc));
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      acc.push_back(p);
      rec(rest - p, p);
      acc.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  if (text.empty()) fail(errc::parse_error, "empty integer list");
  std::vector<int> vals;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        fail(errc::parse_error,
             "expected digits 1-9 or a comma separated list, got '" +
                 std::string(text) + "'");
      vals.push_back(ch - '0');
    }
  } else {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t next = text.find(',', pos);
      std::string_view item = text.substr(
          pos, next == std::string_view::npos ? text.size() - pos : next - pos);
      int v = 0;
      auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || p != item.data() + item.size())
        fail(errc::parse_error, "bad integer '" + std::string(item) + "'");
      vals.push_back(v);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  }
  return vals;
}

Partition parse_partition(std::string_view text) {
  return Partition(parse_int_list(text));
}

Partition sort_to_partition(const Composition& alpha) {
  std::vector<int> v(alpha);
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Partition(std::move(v));
}

std::string composition_str(const Composition& alpha) {
  if (alpha.empty()) return "-";
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (i > 0) out << ',';
    out << alpha[i];
  }
  out << ')';
  return out.str();
}

}  // namespace dyckcells
