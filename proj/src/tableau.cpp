#include "grascat/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "grascat/error.hpp"
#include "grascat/linalg.hpp"

namespace grascat {

namespace {

void require_same_shape(const Tableau& s, const Tableau& t) {
  require(s.k == t.k && s.n == t.n, ErrorCode::DimensionMismatch,
          "tableaux have different (k, n): (" + std::to_string(s.k) + "," + std::to_string(s.n) + ") vs (" +
              std::to_string(t.k) + "," + std::to_string(t.n) + ")");
}

// Removes one copy of each value in `part` from `whole`; both sorted.
bool remove_multiset(std::vector<int>& whole, const std::vector<int>& part) {
  std::vector<int> rest;
  rest.reserve(whole.size());
  std::size_t j = 0;
  for (int v : whole) {
    if (j < part.size() && part[j] == v) {
      ++j;
    } else {
      rest.push_back(v);
    }
  }
  if (j != part.size()) return false;
  whole = std::move(rest);
  return true;
}

bool try_remove_trivial(std::vector<std::vector<int>>& rows, int n, int j) {
  std::vector<std::vector<int>> next = rows;
  for (std::size_t r = 0; r < next.size(); ++r) {
    auto it = std::find(next[r].begin(), next[r].end(), j + static_cast<int>(r));
    if (it == next[r].end()) return false;
    next[r].erase(it);
  }
  if (!is_semistandard(static_cast<int>(rows.size()), n, next)) return false;
  rows = std::move(next);
  return true;
}

}  // namespace

std::vector<int> Tableau::column(int c) const {
  std::vector<int> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[c]);
  return out;
}

bool is_semistandard(int k, int n, const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != k) return false;
  if (rows.empty()) return true;
  const std::size_t width = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) return false;
    for (std::size_t c = 0; c < width; ++c) {
      int v = rows[r][c];
      if (v < 1 || v > n) return false;
      if (c > 0 && rows[r][c - 1] > v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

Tableau make_tableau(int k, int n, std::vector<std::vector<int>> rows) {
  require(k >= 1 && n >= k, ErrorCode::InvalidTableau,
          "need 1 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  require(is_semistandard(k, n, rows), ErrorCode::InvalidTableau, "rows do not form a semistandard tableau");
  return Tableau{k, n, std::move(rows)};
}

Tableau empty_tableau(int k, int n) { return make_tableau(k, n, std::vector<std::vector<int>>(k)); }

Tableau column_tableau(const KSubset& s) {
  std::vector<std::vector<int>> rows;
  for (int v : s.elems) rows.push_back({v});
  return make_tableau(s.k(), s.n, std::move(rows));
}

Tableau tableau_from_columns(int k, int n, const std::vector<std::vector<int>>& columns) {
  std::vector<std::vector<int>> rows(k);
  for (const auto& col : columns) {
    require(static_cast<int>(col.size()) == k, ErrorCode::InvalidTableau, "column height differs from k");
    for (int r = 0; r < k; ++r) rows[r].push_back(col[r]);
  }
  return make_tableau(k, n, std::move(rows));
}

Tableau trivial_column(int k, int n, int j) {
  require(j >= 1 && j + k - 1 <= n, ErrorCode::OutOfRange, "trivial column start out of range");
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < k; ++r) rows.push_back({j + r});
  return Tableau{k, n, std::move(rows)};
}

std::string to_string(const Tableau& t) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r > 0) out << ',';
    out << '[';
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c > 0) out << ',';
      out << t.rows[r][c];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

Tableau tableau_union(const Tableau& s, const Tableau& t) {
  require_same_shape(s, t);
  std::vector<std::vector<int>> rows(s.k);
  for (int r = 0; r < s.k; ++r) {
    std::merge(s.rows[r].begin(), s.rows[r].end(), t.rows[r].begin(), t.rows[r].end(), std::back_inserter(rows[r]));
  }
  require(is_semistandard(s.k, s.n, rows), ErrorCode::NotSemistandard, "union is not semistandard");
  return Tableau{s.k, s.n, std::move(rows)};
}

bool is_factor(const Tableau& s, const Tableau& t) {
  if (s.k != t.k || s.n != t.n) return false;
  for (int r = 0; r < s.k; ++r) {
    if (!std::includes(t.rows[r].begin(), t.rows[r].end(), s.rows[r].begin(), s.rows[r].end())) return false;
  }
  return true;
}

Tableau tableau_quotient(const Tableau& t, const Tableau& s) {
  require_same_shape(s, t);
  std::vector<std::vector<int>> rows = t.rows;
  for (int r = 0; r < t.k; ++r) {
    require(remove_multiset(rows[r], s.rows[r]), ErrorCode::NotAFactor,
            to_string(s) + " is not a factor of " + to_string(t));
  }
  require(is_semistandard(t.k, t.n, rows), ErrorCode::NotSemistandard,
          "quotient of " + to_string(t) + " by " + to_string(s) + " is not semistandard");
  return Tableau{t.k, t.n, std::move(rows)};
}

Tableau reduce(const Tableau& t) {
  std::vector<std::vector<int>> rows = t.rows;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int j = 1; j + t.k - 1 <= t.n; ++j) {
      if (try_remove_trivial(rows, t.n, j)) {
        progress = true;
        break;
      }
    }
  }
  return Tableau{t.k, t.n, std::move(rows)};
}

int trivial_factor_size(const Tableau& t) { return t.columns() - reduce(t).columns(); }

bool equivalent(const Tableau& s, const Tableau& t) {
  require_same_shape(s, t);
  return reduce(s) == reduce(t);
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::LT: return "LT";
    case Dominance::GT: return "GT";
    case Dominance::EQ: return "EQ";
    case Dominance::Incomparable: return "Incomparable";
    case Dominance::DifferentContent: return "DifferentContent";
  }
  return "?";
}

std::vector<long long> content(const Tableau& t) {
  std::vector<long long> out(t.n + 1, 0);
  for (const auto& row : t.rows) {
    for (int v : row) ++out[v];
  }
  return out;
}

Dominance dominance_compare(const Tableau& s, const Tableau& t) {
  require_same_shape(s, t);
  if (content(s) != content(t)) return Dominance::DifferentContent;
  if (s == t) return Dominance::EQ;
  bool s_ge = true;
  bool t_ge = true;
  for (int i = 1; i <= s.n; ++i) {
    long long ps = 0;
    long long pt = 0;
    for (int r = 0; r < s.k; ++r) {
      ps += std::upper_bound(s.rows[r].begin(), s.rows[r].end(), i) - s.rows[r].begin();
      pt += std::upper_bound(t.rows[r].begin(), t.rows[r].end(), i) - t.rows[r].begin();
      if (ps < pt) s_ge = false;
      if (pt < ps) t_ge = false;
    }
  }
  if (s_ge && !t_ge) return Dominance::GT;
  if (t_ge && !s_ge) return Dominance::LT;
  if (s_ge && t_ge) return Dominance::EQ;
  return Dominance::Incomparable;
}

ContentGrid& ContentGrid::operator+=(const ContentGrid& o) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
  return *this;
}

ContentGrid& ContentGrid::operator-=(const ContentGrid& o) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] -= o.counts[i];
  return *this;
}

ContentGrid zero_grid(int k, int n) {
  return ContentGrid{k, n, std::vector<long long>(static_cast<std::size_t>(k) * n, 0)};
}

ContentGrid content_grid(const Tableau& t) {
  ContentGrid g = zero_grid(t.k, t.n);
  for (int r = 0; r < t.k; ++r) {
    for (int v : t.rows[r]) ++g.at(r, v);
  }
  return g;
}

Tableau tableau_from_grid(const ContentGrid& g) {
  std::vector<std::vector<int>> rows(g.k);
  for (int r = 0; r < g.k; ++r) {
    for (int v = 1; v <= g.n; ++v) {
      long long c = g.at(r, v);
      require(c >= 0, ErrorCode::NotSemistandard, "negative content in row " + std::to_string(r + 1));
      rows[r].insert(rows[r].end(), static_cast<std::size_t>(c), v);
    }
  }
  require(is_semistandard(g.k, g.n, rows), ErrorCode::NotSemistandard, "content grid is not a semistandard tableau");
  return Tableau{g.k, g.n, std::move(rows)};
}

int DominantMonomial::degree() const {
  int d = 0;
  for (const auto& [key, mult] : factors) d += mult;
  return d;
}

bool is_valid_factor(int i, int s, int k, int ell) {
  if (i < 1 || i > k - 1) return false;
  if (((i - s) % 2 + 2) % 2 != 0) return false;
  int a = (i - s) / 2;
  return a >= 1 && a + k <= k + ell + 1;
}

void validate(const DominantMonomial& m) {
  require(m.k >= 2 && m.ell >= 0, ErrorCode::OutOfRange, "monomial needs k >= 2 and ell >= 0");
  for (const auto& [key, mult] : m.factors) {
    require(mult > 0, ErrorCode::OutOfRange, "multiplicities must be positive");
    require(is_valid_factor(key.first, key.second, m.k, m.ell), ErrorCode::OutOfRange,
            "Y_{" + std::to_string(key.first) + "," + std::to_string(key.second) + "} is outside the admissible range");
  }
}

std::string to_string(const DominantMonomial& m) {
  if (m.factors.empty()) return "1";
  std::string out;
  for (const auto& [key, mult] : m.factors) {
    out += "Y_{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

KSubset fundamental_subset(int i, int s, int k, int n) {
  require(i >= 1 && i <= k - 1, ErrorCode::OutOfRange, "fundamental index i must lie in [1, k-1]");
  require(((i - s) % 2 + 2) % 2 == 0, ErrorCode::OutOfRange, "i and s must have the same parity");
  const int a = (i - s) / 2;
  const int skip = k - (i + s) / 2;
  require(a >= 1 && a + k <= n, ErrorCode::OutOfRange,
          "fundamental column for (" + std::to_string(i) + "," + std::to_string(s) + ") leaves [1, n]");
  std::vector<int> elems;
  for (int v = a; v <= a + k; ++v) {
    if (v != skip) elems.push_back(v);
  }
  return make_ksubset(n, std::move(elems));
}

Tableau monomial_to_tableau(const DominantMonomial& m) {
  validate(m);
  const int n = m.n();
  std::vector<std::vector<int>> rows(m.k);
  for (const auto& [key, mult] : m.factors) {
    KSubset col = fundamental_subset(key.first, key.second, m.k, n);
    for (int r = 0; r < m.k; ++r) rows[r].insert(rows[r].end(), static_cast<std::size_t>(mult), col.elems[r]);
  }
  for (auto& row : rows) std::sort(row.begin(), row.end());
  require(is_semistandard(m.k, n, rows), ErrorCode::NotSemistandard, "union of fundamental columns failed");
  return reduce(Tableau{m.k, n, std::move(rows)});
}

DominantMonomial tableau_to_monomial(const Tableau& t) {
  const int k = t.k;
  const int n = t.n;
  require(k >= 2 && n >= k + 1, ErrorCode::NoDecomposition, "need 2 <= k < n");
  const int ell = n - k - 1;
  struct Generator {
    bool trivial;
    int i;
    int s;
    ContentGrid grid;
  };
  std::vector<Generator> gens;
  for (int i = 1; i <= k - 1; ++i) {
    for (int a = 1; a + k <= n; ++a) {
      int s = i - 2 * a;
      gens.push_back({false, i, s, content_grid(column_tableau(fundamental_subset(i, s, k, n)))});
    }
  }
  for (int j = 1; j + k - 1 <= n; ++j) gens.push_back({true, j, 0, content_grid(trivial_column(k, n, j))});

  const int rows = k * n;
  const int cols = static_cast<int>(gens.size());
  Matrix<Rational> a(rows, std::vector<Rational>(cols));
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) a[r][c] = Rational(static_cast<long>(gens[c].grid.counts[r]));
  }
  ContentGrid target = content_grid(t);
  std::vector<Rational> b(rows);
  for (int r = 0; r < rows; ++r) b[r] = Rational(static_cast<long>(target.counts[r]));

  LinearSolution sol = solve_rational(a, b);
  require(sol.status != LinearSolution::Status::NotUnique, ErrorCode::NoDecomposition,
          "fundamental and trivial contents are linearly dependent");
  require(sol.status == LinearSolution::Status::Unique, ErrorCode::NoDecomposition,
          "content of " + to_string(t) + " is not in the span of fundamental columns");
  DominantMonomial m{k, ell, {}};
  for (int c = 0; c < cols; ++c) {
    require(sol.x[c].get_den() == 1, ErrorCode::NoDecomposition, "non-integral decomposition of " + to_string(t));
    if (gens[c].trivial) continue;
    long mult = sol.x[c].get_num().get_si();
    require(mult >= 0, ErrorCode::NoDecomposition, "negative fundamental multiplicity for " + to_string(t));
    if (mult > 0) m.factors[{gens[c].i, gens[c].s}] = static_cast<int>(mult);
  }
  return m;
}

Tableau bender_knuth(const Tableau& t, int i) {
  require(i >= 1 && i <= t.n - 1, ErrorCode::OutOfRange, "Bender-Knuth index must lie in [1, n-1]");
  Tableau out = t;
  const int width = t.columns();
  for (int r = 0; r < t.k; ++r) {
    std::vector<int> free_cols;
    int free_i = 0;
    for (int c = 0; c < width; ++c) {
      int v = t.rows[r][c];
      if (v == i) {
        bool paired = r + 1 < t.k && t.rows[r + 1][c] == i + 1;
        if (!paired) {
          free_cols.push_back(c);
          ++free_i;
        }
      } else if (v == i + 1) {
        bool paired = r > 0 && t.rows[r - 1][c] == i;
        if (!paired) free_cols.push_back(c);
      }
    }
    const int free_next = static_cast<int>(free_cols.size()) - free_i;
    for (std::size_t p = 0; p < free_cols.size(); ++p) {
      out.rows[r][free_cols[p]] = static_cast<int>(p) < free_next ? i : i + 1;
    }
  }
  require(is_semistandard(out.k, out.n, out.rows), ErrorCode::NotSemistandard, "Bender-Knuth produced an invalid tableau");
  return out;
}

Tableau promote(const Tableau& t) {
  Tableau out = t;
  for (int i = t.n - 1; i >= 1; --i) out = bender_knuth(out, i);
  return out;
}

}  // namespace grascat
