#include "dyckcells/hessenberg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dyckcells/error.hpp"

namespace dyckcells {

HessenbergFunction::HessenbergFunction(std::vector<int> values)
    : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n == 0) fail(errc::out_of_range, "empty Hessenberg function");
  for (int i = 1; i <= n; ++i) {
    int v = values_[static_cast<size_t>(i - 1)];
    if (v < 1 || v > n)
      fail(errc::out_of_range, "h(" + std::to_string(i) + ") = " +
                                   std::to_string(v) + " is outside [1," +
                                   std::to_string(n) + "]");
  }
  for (int i = 1; i < n; ++i)
    if (values_[static_cast<size_t>(i)] < values_[static_cast<size_t>(i - 1)])
      fail(errc::not_weakly_increasing,
           "h(" + std::to_string(i + 1) + ") < h(" + std::to_string(i) + ")");
  for (int i = 1; i <= n; ++i)
    if (values_[static_cast<size_t>(i - 1)] < i)
      fail(errc::below_diagonal, "h(" + std::to_string(i) + ") = " +
                                     std::to_string(values_[static_cast<size_t>(i - 1)]) +
                                     " < " + std::to_string(i));
}

HessenbergFunction HessenbergFunction::parse(std::string_view text) {
  return HessenbergFunction(parse_int_list(text));
}

std::string HessenbergFunction::str() const {
  std::ostringstream out;
  bool digits = n() <= 9;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i > 0 && !digits) out << ',';
    out << values_[i];
  }
  return out.str();
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : n(vertex_count), edges(std::move(edge_list)) {
  if (n < 0) fail(errc::out_of_range, "negative vertex count");
  for (auto& [i, j] : edges) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n || i == j)
      fail(errc::out_of_range, "edge (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Graph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

bool Graph::interval_closed() const {
  for (auto [i, j] : edges)
    for (int a = i; a < j; ++a)
      for (int b = a + 1; b <= j; ++b)
        if (!has_edge(a, b)) return false;
  return true;
}

Graph to_graph(const HessenbergFunction& h) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= h.n(); ++i)
    for (int j = i + 1; j <= h(i); ++j) edges.emplace_back(i, j);
  return Graph(h.n(), std::move(edges));
}

HessenbergFunction from_graph(const Graph& g) {
  if (!g.interval_closed())
    fail(errc::not_interval_closed, "graph is not a Dyck graph");
  std::vector<int> values(static_cast<size_t>(g.n));
  for (int i = 1; i <= g.n; ++i) values[static_cast<size_t>(i - 1)] = i;
  for (auto [i, j] : g.edges) {
    auto& v = values[static_cast<size_t>(i - 1)];
    v = std::max(v, j);
  }
  HessenbergFunction h{std::move(values)};
  if (to_graph(h) != g)
    fail(errc::not_interval_closed, "graph is not generated by any h");
  return h;
}

Partition to_partition(const HessenbergFunction& h) {
  // Complement of h in the n x n square, read so that mu_k counts the
  // vertices below k not adjacent to it (h=23555 gives 221, not its
  // conjugate 32).
  std::vector<int> parts;
  for (int i = 1; i <= h.n(); ++i) parts.push_back(h.n() - h(i));
  return Partition(std::move(parts)).conjugate();
}

Permutation to_permutation(const HessenbergFunction& h) {
  const int n = h.n();
  std::vector<int> unused;
  for (int v = 1; v <= n; ++v) unused.push_back(v);
  Permutation w;
  for (int i = 1; i <= n; ++i) {
    int c = h(i) - i;  // Lehmer code entry; c < #unused always holds here
    w.push_back(unused[static_cast<size_t>(c)]);
    unused.erase(unused.begin() + c);
  }
  return w;
}

std::string to_dyck_word(const HessenbergFunction& h) {
  std::string word;
  int prev = 0;
  for (int i = 1; i <= h.n(); ++i) {
    word += 'N';
    word.append(static_cast<size_t>(h(i) - prev), 'E');
    prev = h(i);
  }
  return word;
}

HessenbergFunction from_dyck_word(std::string_view word) {
  if (word.empty() || word.size() % 2 != 0)
    fail(errc::malformed_word, "word length must be a positive even number");
  for (char c : word)
    if (c != 'N' && c != 'E')
      fail(errc::malformed_word, std::string("bad letter '") + c + "'");
  const int n = static_cast<int>(word.size()) / 2;
  if (word[0] != 'N') fail(errc::malformed_word, "word must start with N");

  std::vector<int> values;
  int ups = 0, rights = 0;
  for (char c : word) {
    if (c == 'N') {
      if (ups > 0) values.push_back(rights);  // h(ups) read off before next N
      ++ups;
      if (ups > n) fail(errc::malformed_word, "more than n N's");
    } else {
      ++rights;
      if (rights > n) fail(errc::malformed_word, "more than n E's");
    }
  }
  values.push_back(rights);
  if (ups != n || rights != n) fail(errc::malformed_word, "unbalanced word");
  for (int i = 1; i <= n; ++i)
    if (values[static_cast<size_t>(i - 1)] < i)
      fail(errc::malformed_word, "path crosses the diagonal at step " +
                                     std::to_string(i));
  return HessenbergFunction(std::move(values));
}

std::vector<HessenbergFunction> enumerate_hessenberg(int n) {
  if (n < 1) fail(errc::out_of_range, "n must be >= 1");
  if (n > 12) fail(errc::too_large, "enumeration supported for n <= 12");
  std::vector<HessenbergFunction> out;
  std::vector<int> values;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.emplace_back(HessenbergFunction(values));
      return;
    }
    int lo = std::max(i, i > 1 ? values[static_cast<size_t>(i - 2)] : 1);
    for (int v = lo; v <= n; ++v) {
      values.push_back(v);
      rec(i + 1);
      values.pop_back();
    }
  };
  rec(1);
  return out;
}

std::string permutation_str(const Permutation& w) {
  std::ostringstream out;
  bool digits = w.size() <= 9;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !digits) out << ',';
    out << w[i];
  }
  return out.str();
}

}  // namespace dyckcells
