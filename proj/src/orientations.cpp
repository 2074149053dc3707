#include "dyckcells/orientations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dyckcells/error.hpp"

namespace dyckcells {

namespace {

// arcs as adjacency lists: out[a-1] lists b with arc a -> b
std::vector<std::vector<int>> arc_lists(const Graph& g, const std::vector<bool>& up) {
  std::vector<std::vector<int>> out(static_cast<size_t>(g.n));
  for (size_t k = 0; k < g.edges.size(); ++k) {
    auto [i, j] = g.edges[k];
    if (up[k])
      out[static_cast<size_t>(i - 1)].push_back(j);
    else
      out[static_cast<size_t>(j - 1)].push_back(i);
  }
  return out;
}

bool acyclic(const Graph& g, const std::vector<bool>& up) {
  auto out = arc_lists(g, up);
  std::vector<int> indeg(static_cast<size_t>(g.n), 0);
  for (const auto& lst : out)
    for (int b : lst) ++indeg[static_cast<size_t>(b - 1)];
  std::vector<int> queue;
  for (int v = 1; v <= g.n; ++v)
    if (indeg[static_cast<size_t>(v - 1)] == 0) queue.push_back(v);
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (int b : out[static_cast<size_t>(v - 1)])
      if (--indeg[static_cast<size_t>(b - 1)] == 0) queue.push_back(b);
  }
  return removed == g.n;
}

}  // namespace

Orientation::Orientation(Graph g, std::vector<bool> up)
    : graph_(std::move(g)), up_(std::move(up)) {
  if (up_.size() != graph_.edges.size())
    fail(errc::out_of_range, "one direction bit per edge required");
  if (!acyclic(graph_, up_))
    fail(errc::out_of_range, "orientation has a directed cycle");
}

std::string Orientation::bits() const {
  std::string s(up_.size(), '0');
  for (size_t k = 0; k < up_.size(); ++k)
    if (up_[k]) s[k] = '1';
  return s;
}

int Orientation::asc_arcs() const {
  return static_cast<int>(std::count(up_.begin(), up_.end(), true));
}

int Orientation::desc_arcs() const {
  return static_cast<int>(up_.size()) - asc_arcs();
}

std::vector<Orientation> enumerate_acyclic(const Graph& g) {
  const size_t m = g.edges.size();
  if (m > 20) fail(errc::too_large, "enumeration supported for |E| <= 20");
  std::vector<Orientation> out;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<bool> up(m);
    for (size_t k = 0; k < m; ++k)
      up[k] = (mask >> (m - 1 - k)) & 1ul;
    if (acyclic(g, up)) out.emplace_back(Orientation(g, up));
  }
  return out;
}

Poset poset(const Orientation& o) {
  const int n = o.graph().n;
  Poset p;
  p.n = n;
  p.less.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (size_t k = 0; k < o.graph().edges.size(); ++k) {
    auto [i, j] = o.graph().edges[k];
    if (o.up(static_cast<int>(k)))
      p.less[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = true;
    else
      p.less[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = true;
  }
  // Warshall closure
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      if (p.less[static_cast<size_t>(a)][static_cast<size_t>(m)])
        for (int b = 0; b < n; ++b)
          if (p.less[static_cast<size_t>(m)][static_cast<size_t>(b)])
            p.less[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  return p;
}

std::vector<Permutation> linear_extensions(const Orientation& o) {
  const int n = o.graph().n;
  if (n > 8) fail(errc::too_large, "linear extensions supported for n <= 8");
  auto out = arc_lists(o.graph(), o.directions());
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (const auto& lst : out)
    for (int b : lst) ++indeg[static_cast<size_t>(b - 1)];

  std::vector<Permutation> result;
  Permutation word;
  std::vector<bool> placed(static_cast<size_t>(n), false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(word.size()) == n) {
      result.push_back(word);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (placed[static_cast<size_t>(v - 1)] || indeg[static_cast<size_t>(v - 1)] != 0)
        continue;
      placed[static_cast<size_t>(v - 1)] = true;
      for (int b : out[static_cast<size_t>(v - 1)]) --indeg[static_cast<size_t>(b - 1)];
      word.push_back(v);
      rec();
      word.pop_back();
      for (int b : out[static_cast<size_t>(v - 1)]) ++indeg[static_cast<size_t>(b - 1)];
      placed[static_cast<size_t>(v - 1)] = false;
    }
  };
  rec();
  return result;  // ascending choice order yields lexicographic order
}

Permutation min_linear_extension(const Orientation& o) {
  const int n = o.graph().n;
  auto out = arc_lists(o.graph(), o.directions());
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (const auto& lst : out)
    for (int b : lst) ++indeg[static_cast<size_t>(b - 1)];
  std::vector<bool> placed(static_cast<size_t>(n), false);
  Permutation word;
  for (int step = 0; step < n; ++step) {
    int v = 1;
    while (placed[static_cast<size_t>(v - 1)] || indeg[static_cast<size_t>(v - 1)] != 0) ++v;
    placed[static_cast<size_t>(v - 1)] = true;
    for (int b : out[static_cast<size_t>(v - 1)]) --indeg[static_cast<size_t>(b - 1)];
    word.push_back(v);
  }
  return word;
}

Orientation orientation_from_permutation(const Graph& g, const Permutation& sigma) {
  if (static_cast<int>(sigma.size()) != g.n)
    fail(errc::out_of_range, "permutation length does not match vertex count");
  std::vector<int> pos(static_cast<size_t>(g.n) + 1, 0);
  std::vector<bool> seen(static_cast<size_t>(g.n) + 1, false);
  for (size_t k = 0; k < sigma.size(); ++k) {
    int v = sigma[k];
    if (v < 1 || v > g.n || seen[static_cast<size_t>(v)])
      fail(errc::out_of_range, "not a permutation of 1..n");
    seen[static_cast<size_t>(v)] = true;
    pos[static_cast<size_t>(v)] = static_cast<int>(k);
  }
  std::vector<bool> up(g.edges.size());
  for (size_t k = 0; k < g.edges.size(); ++k) {
    auto [i, j] = g.edges[k];
    up[k] = pos[static_cast<size_t>(i)] < pos[static_cast<size_t>(j)];
  }
  return Orientation(g, std::move(up));
}

}  // namespace dyckcells
