#include "dyckcells/chromatic.hpp"

#include <functional>
#include <string>

#include "dyckcells/error.hpp"

namespace dyckcells {

int ascents(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.n)
    fail(errc::out_of_range, "coloring has " + std::to_string(c.size()) +
                                 " entries for " + std::to_string(g.n) +
                                 " vertices");
  for (auto [i, j] : g.edges)
    if (c[static_cast<size_t>(i - 1)] == c[static_cast<size_t>(j - 1)])
      fail(errc::improper_coloring, "edge (" + std::to_string(i) + "," +
                                        std::to_string(j) +
                                        ") has both endpoints colored " +
                                        std::to_string(c[static_cast<size_t>(i - 1)]));
  int asc = 0;
  for (auto [i, j] : g.edges)
    if (c[static_cast<size_t>(i - 1)] < c[static_cast<size_t>(j - 1)]) ++asc;
  return asc;
}

QSymF chromatic_qsym(const Graph& g) {
  if (g.n > 8)
    fail(errc::too_large, "chromatic expansion supported for n <= 8");
  const int n = g.n;
  QSymF x(n);

  // earlier neighbors of each vertex, for propriety pruning
  std::vector<std::vector<int>> before(static_cast<size_t>(n));
  for (auto [i, j] : g.edges) before[static_cast<size_t>(j - 1)].push_back(i);

  Coloring c(static_cast<size_t>(n), 0);
  for (int r = 1; r <= n; ++r) {
    std::vector<int> used(static_cast<size_t>(r), 0);
    int distinct = 0;
    std::function<void(int)> rec = [&](int v) {
      if (v == n) {
        if (distinct == r) {
          Composition ev(used.begin(), used.end());
          x.add_coeff(ev, Poly::monomial(ascents(g, c)));
        }
        return;
      }
      for (int col = 1; col <= r; ++col) {
        bool ok = true;
        for (int u : before[static_cast<size_t>(v)])
          if (c[static_cast<size_t>(u - 1)] == col) {
            ok = false;
            break;
          }
        if (!ok) continue;
        int gain = used[static_cast<size_t>(col - 1)] == 0 ? 1 : 0;
        // every color must still be reachable by the remaining vertices
        if (r - (distinct + gain) > n - v - 1) continue;
        ++used[static_cast<size_t>(col - 1)];
        distinct += gain;
        c[static_cast<size_t>(v)] = col;
        rec(v + 1);
        --used[static_cast<size_t>(col - 1)];
        distinct -= gain;
      }
      c[static_cast<size_t>(v)] = 0;
    };
    rec(0);
  }
  return x;
}

std::map<Partition, Poly> e_expansion(const Graph& g) {
  SymF in_e = convert(qsym_to_sym(chromatic_qsym(g)), Basis::e);
  return in_e.terms();
}

Poly e_coefficient_sum(const Graph& g) {
  Poly acc;
  for (const auto& [la, c] : e_expansion(g)) acc += c;
  return acc;
}

Poly e_coefficient_sum_via_hall(const Graph& g) {
  SymF x = qsym_to_sym(chromatic_qsym(g));
  SymF hn = SymF::term(g.n, Basis::h, Partition({g.n}), 1);
  return hall_scalar(omega(x), hn);
}

}  // namespace dyckcells
