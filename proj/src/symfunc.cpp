#include "dyckcells/symfunc.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "dyckcells/error.hpp"

namespace dyckcells {

char basis_char(Basis b) {
  switch (b) {
    case Basis::m: return 'm';
    case Basis::e: return 'e';
    case Basis::h: return 'h';
    case Basis::s: return 's';
  }
  return '?';
}

std::optional<Basis> basis_from_char(char c) {
  switch (c) {
    case 'm': return Basis::m;
    case 'e': return Basis::e;
    case 'h': return Basis::h;
    case 's': return Basis::s;
    default: return std::nullopt;
  }
}

SymF::SymF(int degree, Basis basis) : degree_(degree), basis_(basis) {
  if (degree < 0) fail(errc::out_of_range, "negative degree");
}

SymF SymF::term(int degree, Basis basis, const Partition& la, Poly c) {
  SymF f(degree, basis);
  f.set_coeff(la, std::move(c));
  return f;
}

Poly SymF::coeff(const Partition& la) const {
  auto it = terms_.find(la);
  return it == terms_.end() ? Poly() : it->second;
}

void SymF::set_coeff(const Partition& la, Poly c) {
  if (la.weight() != degree_)
    fail(errc::degree_mismatch, "partition " + la.str() + " has weight " +
                                    std::to_string(la.weight()) +
                                    ", expected " + std::to_string(degree_));
  if (c.is_zero())
    terms_.erase(la);
  else
    terms_[la] = std::move(c);
}

void SymF::add_coeff(const Partition& la, const Poly& c) {
  set_coeff(la, coeff(la) + c);
}

SymF& SymF::operator+=(const SymF& o) {
  if (o.degree_ != degree_)
    fail(errc::degree_mismatch, "adding symmetric functions of degrees " +
                                    std::to_string(degree_) + " and " +
                                    std::to_string(o.degree_));
  if (o.basis_ != basis_)
    fail(errc::degree_mismatch, "adding symmetric functions in different bases");
  for (const auto& [la, c] : o.terms_) add_coeff(la, c);
  return *this;
}

SymF operator*(const SymF& a, const Poly& c) {
  SymF r(a.degree_, a.basis_);
  if (!c.is_zero())
    for (const auto& [la, v] : a.terms_) r.terms_[la] = v * c;
  return r;
}

std::string SymF::str(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [la, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string cs = c.str(var);
    size_t nonzero = static_cast<size_t>(
        std::count_if(c.coeffs().begin(), c.coeffs().end(),
                      [](const Int& x) { return x != 0; }));
    if (cs != "1") {
      if (nonzero == 1)
        out << cs << '*';
      else
        out << '(' << cs << ")*";
    }
    out << basis_char(basis_) << '_' << la.str();
  }
  return out.str();
}

QSymF::QSymF(int degree) : degree_(degree) {
  if (degree < 0) fail(errc::out_of_range, "negative degree");
}

Poly QSymF::coeff(const Composition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Poly() : it->second;
}

void QSymF::add_coeff(const Composition& alpha, const Poly& c) {
  int w = std::accumulate(alpha.begin(), alpha.end(), 0);
  if (w != degree_)
    fail(errc::degree_mismatch, "composition " + composition_str(alpha) +
                                    " has weight " + std::to_string(w) +
                                    ", expected " + std::to_string(degree_));
  for (int p : alpha)
    if (p <= 0) fail(errc::out_of_range, "composition parts must be positive");
  Poly v = coeff(alpha) + c;
  if (v.is_zero())
    terms_.erase(alpha);
  else
    terms_[alpha] = std::move(v);
}

// ---------------------------------------------------------------------------
// Semistandard tableaux.
//
// Shapes use the French convention: rows[0] is the bottom row of length
// la_1, entries increase weakly along rows and strictly up each column. The
// reading word concatenates rows from the top row down to the bottom one,
// each left to right.

namespace {

void ssyt_visit(const Partition& la, const std::vector<int>& content,
                const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  const int rows_count = la.num_parts();
  std::vector<std::vector<int>> rows(static_cast<size_t>(rows_count));
  for (int r = 0; r < rows_count; ++r)
    rows[static_cast<size_t>(r)].assign(static_cast<size_t>(la[r]), 0);
  std::vector<int> remaining(content);
  const int max_value = static_cast<int>(content.size());

  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows_count) {
      emit(rows);
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == la[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    for (int v = lo; v <= max_value; ++v) {
      if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
      --remaining[static_cast<size_t>(v - 1)];
      rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      rec(nr, nc);
      ++remaining[static_cast<size_t>(v - 1)];
    }
  };
  if (rows_count == 0) {
    emit(rows);
    return;
  }
  rec(0, 0);
}

std::vector<int> reading_word(const std::vector<std::vector<int>>& rows) {
  std::vector<int> w;
  for (size_t r = rows.size(); r-- > 0;)
    w.insert(w.end(), rows[r].begin(), rows[r].end());
  return w;
}

}  // namespace

Int kostka_number(const Partition& la, const Partition& mu) {
  if (la.weight() != mu.weight())
    fail(errc::weight_mismatch, la.str() + " and " + mu.str());
  Int count = 0;
  ssyt_visit(la, mu.parts(), [&](const auto&) { ++count; });
  return count;
}

int cocharge(const std::vector<int>& word) {
  // content must be a partition
  int max_value = 0;
  for (int v : word) {
    if (v < 1) fail(errc::out_of_range, "word letters must be positive");
    max_value = std::max(max_value, v);
  }
  std::vector<int> count(static_cast<size_t>(max_value), 0);
  for (int v : word) ++count[static_cast<size_t>(v - 1)];
  for (int v = 1; v < max_value; ++v)
    if (count[static_cast<size_t>(v - 1)] < count[static_cast<size_t>(v)])
      fail(errc::out_of_range, "word content is not a partition");

  const int len = static_cast<int>(word.size());
  std::vector<bool> alive(word.size(), true);
  int placed = 0, total = 0;
  while (placed < len) {
    // standard subword: rightmost 1, then for each next value the rightmost
    // occurrence to the left of the current one, wrapping to the right end
    std::vector<int> pos_of_value;
    int cur = -1;
    for (int p = len - 1; p >= 0; --p)
      if (alive[static_cast<size_t>(p)] && word[static_cast<size_t>(p)] == 1) {
        cur = p;
        break;
      }
    pos_of_value.push_back(cur);
    for (int v = 2;; ++v) {
      int cand = -1;
      for (int p = cur - 1; p >= 0; --p)
        if (alive[static_cast<size_t>(p)] && word[static_cast<size_t>(p)] == v) {
          cand = p;
          break;
        }
      if (cand < 0)
        for (int p = len - 1; p > cur; --p)
          if (alive[static_cast<size_t>(p)] && word[static_cast<size_t>(p)] == v) {
            cand = p;
            break;
          }
      if (cand < 0) break;
      pos_of_value.push_back(cand);
      cur = cand;
    }
    int index = 0;
    for (size_t v = 1; v < pos_of_value.size(); ++v) {
      if (pos_of_value[v] < pos_of_value[v - 1]) ++index;
      total += index;
    }
    for (int p : pos_of_value) alive[static_cast<size_t>(p)] = false;
    placed += static_cast<int>(pos_of_value.size());
  }
  return total;
}

Poly kostka_foulkes_modified(const Partition& la, const Partition& mu) {
  if (la.weight() != mu.weight())
    fail(errc::weight_mismatch, la.str() + " and " + mu.str());
  Poly acc;
  ssyt_visit(la, mu.parts(), [&](const std::vector<std::vector<int>>& rows) {
    acc += Poly::monomial(cocharge(reading_word(rows)));
  });
  return acc;
}

SymF modified_hall_littlewood(const Partition& mu) {
  if (mu.weight() > 10)
    fail(errc::too_large, "modified Hall-Littlewood supported for |mu| <= 10");
  SymF f(mu.weight(), Basis::s);
  for (const Partition& la : partitions_of(mu.weight()))
    f.add_coeff(la, kostka_foulkes_modified(la, mu));
  return f;
}

// ---------------------------------------------------------------------------
// Transition matrices between the classical bases, per degree.
//
// Everything is routed through the monomial basis: e_la and h_la are expanded
// by iterated multiplication in monomial coordinates, s_la by tableau
// counting. The reverse matrices are exact integer inverses (the forward
// matrices are unimodular).

namespace {

constexpr int kMaxTransitionDegree = 12;

int basis_slot(Basis b) {
  switch (b) {
    case Basis::e: return 0;
    case Basis::h: return 1;
    case Basis::s: return 2;
    case Basis::m: return -1;
  }
  return -1;
}

using MonoMap = std::map<Partition, Int>;

// f * e_k in monomial coordinates: the coefficient of the sorted exponent
// vector beta collects f(sort(beta - 1_S)) over k-subsets S of beta's
// nonzero slots.
MonoMap multiply_elementary(const MonoMap& f, int k, int weight, int nvars) {
  MonoMap out;
  for (const Partition& beta : partitions_of(weight + k)) {
    if (beta.num_parts() > nvars) continue;
    const int len = beta.num_parts();
    if (k > len) continue;
    Int total = 0;
    std::vector<int> pick;
    std::function<void(int)> choose = [&](int from) {
      if (static_cast<int>(pick.size()) == k) {
        std::vector<int> rest(beta.parts());
        for (int p : pick) --rest[static_cast<size_t>(p)];
        std::sort(rest.begin(), rest.end(), std::greater<int>());
        auto it = f.find(Partition(std::move(rest)));
        if (it != f.end()) total += it->second;
        return;
      }
      for (int p = from; p < len; ++p) {
        pick.push_back(p);
        choose(p + 1);
        pick.pop_back();
      }
    };
    choose(0);
    if (total != 0) out[beta] = std::move(total);
  }
  return out;
}

// f * h_k: same scheme with multisets, i.e. all 0 <= gamma <= beta with
// |gamma| = k.
MonoMap multiply_homogeneous(const MonoMap& f, int k, int weight, int nvars) {
  MonoMap out;
  for (const Partition& beta : partitions_of(weight + k)) {
    if (beta.num_parts() > nvars) continue;
    const int len = beta.num_parts();
    Int total = 0;
    std::vector<int> gamma(static_cast<size_t>(len), 0);
    std::function<void(int, int)> choose = [&](int slot, int rest) {
      if (slot == len) {
        if (rest != 0) return;
        std::vector<int> diff(beta.parts());
        for (int i = 0; i < len; ++i) diff[static_cast<size_t>(i)] -= gamma[static_cast<size_t>(i)];
        std::sort(diff.begin(), diff.end(), std::greater<int>());
        auto it = f.find(Partition(std::move(diff)));
        if (it != f.end()) total += it->second;
        return;
      }
      int cap = std::min(rest, beta[slot]);
      for (int g = 0; g <= cap; ++g) {
        gamma[static_cast<size_t>(slot)] = g;
        choose(slot + 1, rest - g);
      }
      gamma[static_cast<size_t>(slot)] = 0;
    };
    choose(0, k);
    if (total != 0) out[beta] = std::move(total);
  }
  return out;
}

using Matrix = std::vector<std::vector<Int>>;

Matrix invert_unimodular(const Matrix& m) {
  using Rat = mpq_class;
  const size_t k = m.size();
  std::vector<std::vector<Rat>> a(k, std::vector<Rat>(2 * k, 0));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) a[i][j] = Rat(m[i][j]);
    a[i][k + i] = 1;
  }
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    while (piv < k && a[piv][col] == 0) ++piv;
    if (piv == k) fail(errc::out_of_range, "transition matrix is singular");
    std::swap(a[piv], a[col]);
    Rat d = a[col][col];
    for (size_t j = 0; j < 2 * k; ++j) a[col][j] /= d;
    for (size_t i = 0; i < k; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat factor = a[i][col];
      for (size_t j = 0; j < 2 * k; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  Matrix inv(k, std::vector<Int>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Rat v = a[i][k + j];
      v.canonicalize();
      if (v.get_den() != 1)
        fail(errc::out_of_range, "transition inverse is not integral");
      inv[i][j] = v.get_num();
    }
  return inv;
}

struct TransitionTables {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  std::array<Matrix, 3> to_m;    // e, h, s expanded over m
  std::array<Matrix, 3> from_m;  // m expanded over e, h, s
};

TransitionTables build_tables(int degree) {
  TransitionTables t;
  t.parts = partitions_of(degree);
  const size_t k = t.parts.size();
  for (size_t i = 0; i < k; ++i) t.index[t.parts[i]] = static_cast<int>(i);

  for (int b = 0; b < 3; ++b) t.to_m[static_cast<size_t>(b)].assign(k, std::vector<Int>(k, 0));

  for (size_t i = 0; i < k; ++i) {
    const Partition& la = t.parts[i];
    MonoMap fe{{Partition(), 1}}, fh{{Partition(), 1}};
    int w = 0;
    for (int part : la.parts()) {
      fe = multiply_elementary(fe, part, w, degree);
      fh = multiply_homogeneous(fh, part, w, degree);
      w += part;
    }
    for (const auto& [mu, c] : fe) t.to_m[0][i][static_cast<size_t>(t.index.at(mu))] = c;
    for (const auto& [mu, c] : fh) t.to_m[1][i][static_cast<size_t>(t.index.at(mu))] = c;
    for (size_t j = 0; j < k; ++j)
      t.to_m[2][i][j] = kostka_number(la, t.parts[j]);
  }
  for (int b = 0; b < 3; ++b)
    t.from_m[static_cast<size_t>(b)] = invert_unimodular(t.to_m[static_cast<size_t>(b)]);
  return t;
}

const TransitionTables& transition_tables(int degree) {
  if (degree < 0) fail(errc::out_of_range, "negative degree");
  if (degree > kMaxTransitionDegree)
    fail(errc::too_large, "basis conversion supported for degree <= " +
                              std::to_string(kMaxTransitionDegree));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<TransitionTables>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it == cache.end())
    it = cache.emplace(degree, std::make_unique<TransitionTables>(build_tables(degree)))
             .first;
  return *it->second;
}

std::vector<Poly> apply_matrix(const Matrix& m, const std::vector<Poly>& v) {
  const size_t k = v.size();
  std::vector<Poly> out(k);
  for (size_t i = 0; i < k; ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < k; ++j) {
      if (m[i][j] == 0) continue;
      out[j] += v[i] * Poly(m[i][j]);
    }
  }
  return out;
}

}  // namespace

SymF convert(const SymF& f, Basis target) {
  if (f.basis() == target) return f;
  const TransitionTables& t = transition_tables(f.degree());
  std::vector<Poly> v(t.parts.size());
  for (const auto& [la, c] : f.terms()) v[static_cast<size_t>(t.index.at(la))] = c;
  if (f.basis() != Basis::m)
    v = apply_matrix(t.to_m[static_cast<size_t>(basis_slot(f.basis()))], v);
  if (target != Basis::m)
    v = apply_matrix(t.from_m[static_cast<size_t>(basis_slot(target))], v);
  SymF out(f.degree(), target);
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.set_coeff(t.parts[i], std::move(v[i]));
  return out;
}

SymF omega(const SymF& f) {
  switch (f.basis()) {
    case Basis::e:
    case Basis::h: {
      SymF out(f.degree(), f.basis() == Basis::e ? Basis::h : Basis::e);
      for (const auto& [la, c] : f.terms()) out.set_coeff(la, c);
      return out;
    }
    case Basis::s: {
      SymF out(f.degree(), Basis::s);
      for (const auto& [la, c] : f.terms()) out.set_coeff(la.conjugate(), c);
      return out;
    }
    case Basis::m:
      return convert(omega(convert(f, Basis::e)), Basis::m);
  }
  fail(errc::out_of_range, "unknown basis");
}

Poly hall_scalar(const SymF& f, const SymF& g) {
  if (f.degree() != g.degree())
    fail(errc::degree_mismatch, "scalar product of degrees " +
                                    std::to_string(f.degree()) + " and " +
                                    std::to_string(g.degree()));
  SymF fh = convert(f, Basis::h);
  SymF gm = convert(g, Basis::m);
  Poly acc;
  for (const auto& [la, c] : fh.terms()) acc += c * gm.coeff(la);
  return acc;
}

Poly hall_scalar_schur(const SymF& f, const SymF& g) {
  if (f.degree() != g.degree())
    fail(errc::degree_mismatch, "scalar product of degrees " +
                                    std::to_string(f.degree()) + " and " +
                                    std::to_string(g.degree()));
  SymF fs = convert(f, Basis::s);
  SymF gs = convert(g, Basis::s);
  Poly acc;
  for (const auto& [la, c] : fs.terms()) acc += c * gs.coeff(la);
  return acc;
}

std::optional<SymmetryWitness> asymmetry_witness(const QSymF& f) {
  std::map<Partition, Composition> seen;  // class -> first composition looked at
  for (const auto& [alpha, c] : f.terms()) {
    (void)c;
    Partition la = sort_to_partition(alpha);
    if (seen.count(la)) continue;
    // enumerate every rearrangement of the class, compare to the first
    std::vector<int> asc(la.parts());
    std::sort(asc.begin(), asc.end());
    Composition first(asc);
    Poly ref = f.coeff(first);
    seen[la] = first;
    std::vector<int> cur(asc);
    while (std::next_permutation(cur.begin(), cur.end())) {
      Poly v = f.coeff(cur);
      if (v != ref)
        return SymmetryWitness{first, cur, std::move(ref), std::move(v)};
    }
  }
  return std::nullopt;
}

bool is_symmetric(const QSymF& f) { return !asymmetry_witness(f).has_value(); }

SymF qsym_to_sym(const QSymF& f) {
  if (auto w = asymmetry_witness(f))
    fail(errc::not_symmetric,
         "coefficient of M_" + composition_str(w->a) + " is " +
             w->coeff_a.str() + " but coefficient of M_" +
             composition_str(w->b) + " is " + w->coeff_b.str());
  SymF out(f.degree(), Basis::m);
  for (const auto& [alpha, c] : f.terms()) {
    Partition la = sort_to_partition(alpha);
    if (out.coeff(la).is_zero()) out.set_coeff(la, c);
  }
  return out;
}

}  // namespace dyckcells
