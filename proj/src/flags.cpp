#include "dyckcells/flags.hpp"

#include <algorithm>
#include <string>

#include "dyckcells/error.hpp"

namespace dyckcells {

namespace {

bool small_prime(int p) {
  return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
}

void check_modulus(int p) {
  if (!small_prime(p))
    fail(errc::out_of_range,
         "modulus " + std::to_string(p) + " is not a prime <= 13");
}

// reduce v by the echelon rows (each with leading 1 at its pivot column)
void reduce(FqVec& v, const std::vector<FqVec>& rows,
            const std::vector<int>& pivots, int p) {
  for (size_t r = 0; r < rows.size(); ++r) {
    int c = pivots[r];
    int f = v[static_cast<size_t>(c)];
    if (f == 0) continue;
    for (size_t j = 0; j < v.size(); ++j)
      v[j] = ((v[j] - f * rows[r][j]) % p + p) % p;
  }
}

bool is_zero(const FqVec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

struct FlagBuilder {
  int n, p;
  std::vector<std::vector<FqVec>> steps;  // steps[k-1] = RREF basis of V_k
  std::vector<FqVec> rows;                // current RREF rows
  std::vector<int> pivots;                // pivot column per row
  std::vector<bool> is_pivot;             // per column

  void run(const std::function<void(const FqFlag&)>& visit) {
    is_pivot.assign(static_cast<size_t>(n), false);
    extend(visit);
  }

  void extend(const std::function<void(const FqFlag&)>& visit) {
    const int k = static_cast<int>(rows.size());
    if (k == n) {
      visit(FqFlag(p, steps));
      return;
    }
    // Cosets of V_k have unique representatives supported on the non-pivot
    // columns; lines in the quotient are those vectors with leading entry 1.
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    const int f = static_cast<int>(free_cols.size());
    for (int lead = 0; lead < f; ++lead) {
      // entries at free columns after `lead` range over F_p
      std::vector<int> tail(static_cast<size_t>(f - lead - 1), 0);
      for (;;) {
        FqVec v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(free_cols[static_cast<size_t>(lead)])] = 1;
        for (int j = 0; j < f - lead - 1; ++j)
          v[static_cast<size_t>(free_cols[static_cast<size_t>(lead + 1 + j)])] =
              tail[static_cast<size_t>(j)];
        insert(v, visit);
        // next tail vector
        int j = 0;
        while (j < f - lead - 1) {
          if (++tail[static_cast<size_t>(j)] < p) break;
          tail[static_cast<size_t>(j)] = 0;
          ++j;
        }
        if (j == f - lead - 1) break;
      }
    }
  }

  void insert(const FqVec& v, const std::function<void(const FqFlag&)>& visit) {
    // v has leading 1 at a non-pivot column and zeros at all pivot columns,
    // so clearing its column in the old rows re-establishes RREF
    int lead = 0;
    while (v[static_cast<size_t>(lead)] == 0) ++lead;

    std::vector<FqVec> saved_rows = rows;
    std::vector<int> saved_pivots = pivots;
    for (size_t r = 0; r < rows.size(); ++r) {
      int fct = rows[r][static_cast<size_t>(lead)];
      if (fct == 0) continue;
      for (size_t j = 0; j < rows[r].size(); ++j)
        rows[r][j] = ((rows[r][j] - fct * v[j]) % p + p) % p;
    }
    // insert keeping pivot columns increasing
    size_t at = 0;
    while (at < pivots.size() && pivots[at] < lead) ++at;
    rows.insert(rows.begin() + static_cast<long>(at), v);
    pivots.insert(pivots.begin() + static_cast<long>(at), lead);
    is_pivot[static_cast<size_t>(lead)] = true;
    steps.push_back(rows);

    extend(visit);

    steps.pop_back();
    is_pivot[static_cast<size_t>(lead)] = false;
    rows = std::move(saved_rows);
    pivots = std::move(saved_pivots);
  }
};

bool power_exceeds(int base, int exp, long long limit) {
  long long r = 1;
  while (exp-- > 0) {
    r *= base;
    if (r > limit) return true;
  }
  return false;
}

void check_size(int n, int p) {
  check_modulus(p);
  if (n < 1) fail(errc::out_of_range, "n must be >= 1");
  if (power_exceeds(p, n, 100000))
    fail(errc::too_large, "flag enumeration requires p^n <= 100000");
}

}  // namespace

FqMatrix::FqMatrix(int n, int p) : n_(n), p_(p) {
  check_modulus(p);
  if (n < 1) fail(errc::out_of_range, "n must be >= 1");
  entries_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
}

FqVec FqMatrix::apply(const FqVec& v) const {
  FqVec w(static_cast<size_t>(n_), 0);
  for (int r = 0; r < n_; ++r) {
    int acc = 0;
    for (int c = 0; c < n_; ++c) acc += at(r, c) * v[static_cast<size_t>(c)];
    w[static_cast<size_t>(r)] = acc % p_;
  }
  return w;
}

FqMatrix nilpotent_matrix(const Partition& mu, int n, int p) {
  if (mu.weight() != n)
    fail(errc::weight_mismatch, "|mu| = " + std::to_string(mu.weight()) +
                                    " but n = " + std::to_string(n));
  FqMatrix m(n, p);
  int start = 0;
  for (int i = 0; i < mu.num_parts(); ++i) {
    for (int j = 1; j < mu[i]; ++j) m.set(start + j - 1, start + j, 1);
    start += mu[i];
  }
  return m;
}

void for_each_flag(int n, int p, const std::function<void(const FqFlag&)>& visit) {
  check_size(n, p);
  FlagBuilder b;
  b.n = n;
  b.p = p;
  b.run(visit);
}

std::vector<FqFlag> enumerate_flags(int n, int p) {
  std::vector<FqFlag> out;
  for_each_flag(n, p, [&](const FqFlag& f) { out.push_back(f); });
  return out;
}

Int count_points(const HessenbergFunction& h, const Partition& mu, int p) {
  const int n = h.n();
  if (mu.weight() != n)
    fail(errc::weight_mismatch, "|mu| = " + std::to_string(mu.weight()) +
                                    " but n = " + std::to_string(n));
  FqMatrix nmat = nilpotent_matrix(mu, n, p);
  Int count = 0;
  for_each_flag(n, p, [&](const FqFlag& flag) {
    for (int i = 1; i <= n; ++i) {
      if (h(i) == n) continue;  // V_n is everything
      const auto& target = flag.basis(h(i));
      std::vector<int> pivots;
      for (const FqVec& row : target) {
        int c = 0;
        while (row[static_cast<size_t>(c)] == 0) ++c;
        pivots.push_back(c);
      }
      for (const FqVec& v : flag.basis(i)) {
        FqVec w = nmat.apply(v);
        reduce(w, target, pivots, p);
        if (!is_zero(w)) return;
      }
    }
    ++count;
  });
  return count;
}

}  // namespace dyckcells
