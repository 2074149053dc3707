#include "dyckcells/tymoczko.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dyckcells/error.hpp"

namespace dyckcells {

Filling::Filling(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.num_parts())
    fail(errc::shape_weight_mismatch, "row count does not match shape");
  const int n = shape_.weight();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int r = 0; r < shape_.num_parts(); ++r) {
    if (static_cast<int>(rows_[static_cast<size_t>(r)].size()) != shape_[r])
      fail(errc::shape_weight_mismatch,
           "row " + std::to_string(r + 1) + " does not match shape");
    for (int v : rows_[static_cast<size_t>(r)]) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v)])
        fail(errc::out_of_range, "entries must be a bijection with 1.." +
                                     std::to_string(n));
      seen[static_cast<size_t>(v)] = true;
    }
  }
}

std::vector<int> Filling::reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::string Filling::str() const {
  std::ostringstream out;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out << '/';
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0) out << ' ';
      out << rows_[r][c];
    }
  }
  return out.str();
}

bool admissible(const Filling& f, const HessenbergFunction& h) {
  if (f.shape().weight() != h.n()) return false;
  for (const auto& row : f.rows())
    for (size_t c = 0; c + 1 < row.size(); ++c)
      if (row[c] > h(row[c + 1])) return false;
  return true;
}

std::vector<Filling> enumerate_fillings(const HessenbergFunction& h,
                                        const Partition& mu) {
  const int n = h.n();
  if (mu.weight() != n)
    fail(errc::shape_weight_mismatch, "|mu| = " + std::to_string(mu.weight()) +
                                          " but n = " + std::to_string(n));
  if (n > 7) fail(errc::too_large, "filling enumeration supported for n <= 7");

  std::vector<std::vector<int>> rows(static_cast<size_t>(mu.num_parts()));
  for (int r = 0; r < mu.num_parts(); ++r)
    rows[static_cast<size_t>(r)].assign(static_cast<size_t>(mu[r]), 0);
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  std::vector<Filling> out;

  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == mu.num_parts()) {
      out.emplace_back(Filling(mu, rows));
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == mu[r]) {
      nr = r + 1;
      nc = 0;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      if (c > 0 && rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)] > h(v))
        continue;  // row adjacency: left entry must be <= h(right entry)
      used[static_cast<size_t>(v)] = true;
      rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      rec(nr, nc);
      used[static_cast<size_t>(v)] = false;
    }
  };
  rec(0, 0);
  return out;  // ascending value choice in reading order = lex reading words
}

namespace {

// Inversions of a single-row word over distinct values (partial words from
// the generation tree use this too): pairs (a,b), a<b, b strictly left of a,
// counted only if a is last in the row or b <= h(successor of a).
int row_word_inversions(const std::vector<int>& word, const HessenbergFunction& h) {
  int count = 0;
  const size_t len = word.size();
  for (size_t pa = 0; pa < len; ++pa)
    for (size_t pb = 0; pb < pa; ++pb) {
      int a = word[pa], b = word[pb];
      if (a >= b) continue;
      if (pa + 1 < len && b > h(word[pa + 1])) continue;
      ++count;
    }
  return count;
}

}  // namespace

int h_inversions(const Filling& f, const HessenbergFunction& h) {
  if (f.shape().weight() != h.n())
    fail(errc::shape_weight_mismatch, "filling weight does not match n");
  const int n = h.n();
  // position of each value
  std::vector<std::pair<int, int>> where(static_cast<size_t>(n) + 1);
  for (int r = 0; r < f.shape().num_parts(); ++r)
    for (int c = 0; c < f.shape()[r]; ++c)
      where[static_cast<size_t>(f.entry(r, c))] = {r, c};

  int count = 0;
  for (int a = 1; a <= n; ++a) {
    auto [ra, ca] = where[static_cast<size_t>(a)];
    bool has_right = ca + 1 < f.shape()[ra];
    int right = has_right ? f.entry(ra, ca + 1) : 0;
    for (int b = a + 1; b <= n; ++b) {
      auto [rb, cb] = where[static_cast<size_t>(b)];
      bool above = cb == ca && rb > ra;
      bool left = cb < ca;
      if (!above && !left) continue;
      if (has_right && b > h(right)) continue;
      ++count;
    }
  }
  return count;
}

Poly poincare_polynomial(const HessenbergFunction& h, const Partition& mu) {
  Poly acc;
  for (const Filling& f : enumerate_fillings(h, mu))
    acc += Poly::monomial(h_inversions(f, h));
  return acc;
}

Poly poincare_product(const HessenbergFunction& h) {
  Poly prod = 1;
  for (int i = 1; i <= h.n(); ++i) prod *= t_integer(h(i) - i + 1);
  return prod;
}

GenerationTree generation_tree(const HessenbergFunction& h) {
  const int n = h.n();
  if (n > 7) fail(errc::too_large, "generation tree supported for n <= 7");
  GenerationTree tree;
  tree.nodes.push_back({{1}, 0, -1, {}});
  tree.levels.push_back({0});
  for (int k = 2; k <= n; ++k) {
    std::vector<int> level;
    for (int id : tree.levels.back()) {
      const std::vector<int> word = tree.nodes[static_cast<size_t>(id)].word;
      // slots right to left: the end first, then before each connected i
      std::vector<std::vector<int>> children_words;
      {
        std::vector<int> w(word);
        w.push_back(k);
        children_words.push_back(std::move(w));
      }
      for (int p = static_cast<int>(word.size()) - 1; p >= 0; --p) {
        if (k > h(word[static_cast<size_t>(p)])) continue;
        std::vector<int> w(word);
        w.insert(w.begin() + p, k);
        children_words.push_back(std::move(w));
      }
      for (auto& w : children_words) {
        int inv = row_word_inversions(w, h);
        int child = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({std::move(w), inv, id, {}});
        tree.nodes[static_cast<size_t>(id)].children.push_back(child);
        level.push_back(child);
      }
    }
    tree.levels.push_back(std::move(level));
  }
  return tree;
}

}  // namespace dyckcells
