#pragma once

// Shared helpers for the test programs: seeded random generators and
// brute-force reference implementations used as independent oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grascat/cluster.hpp"
#include "grascat/ksubset.hpp"
#include "grascat/tableau.hpp"

namespace grascat::testing {

inline std::vector<int> random_subset(std::mt19937_64& rng, int k, int n) {
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v + 1;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

// Union of `cols` random one-column tableaux: always semistandard.
inline Tableau random_tableau(std::mt19937_64& rng, int k, int n, int cols) {
  Tableau t = empty_tableau(k, n);
  for (int c = 0; c < cols; ++c) t = tableau_union(t, column_tableau(make_ksubset(n, random_subset(rng, k, n))));
  return t;
}

// Row-by-row multiset merge, written without the library.
inline std::vector<std::vector<int>> merge_rows(const std::vector<std::vector<int>>& a,
                                                const std::vector<std::vector<int>>& b, int k) {
  std::vector<std::vector<int>> out(k);
  for (int r = 0; r < k; ++r) {
    if (r < static_cast<int>(a.size())) out[r].insert(out[r].end(), a[r].begin(), a[r].end());
    if (r < static_cast<int>(b.size())) out[r].insert(out[r].end(), b[r].begin(), b[r].end());
    std::sort(out[r].begin(), out[r].end());
  }
  return out;
}

inline bool rows_semistandard(const std::vector<std::vector<int>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!std::is_sorted(rows[r].begin(), rows[r].end())) return false;
    if (rows[r].size() != rows[0].size()) return false;
    if (r > 0) {
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (rows[r - 1][c] >= rows[r][c]) return false;
      }
    }
  }
  return true;
}

// Depth-first search over every order of removing trivial columns
// [j, j+k-1] while the remainder stays semistandard. Returns every terminal
// remainder reached with the largest number of removals.
inline std::set<std::vector<std::vector<int>>> brute_force_reductions(const Tableau& t) {
  const int k = t.k;
  std::map<std::vector<std::vector<int>>, int> best_depth;
  std::set<std::vector<std::vector<int>>> terminal;
  int best = -1;
  std::function<void(const std::vector<std::vector<int>>&, int)> dfs = [&](const std::vector<std::vector<int>>& rows,
                                                                             int depth) {
    auto it = best_depth.find(rows);
    if (it != best_depth.end() && it->second >= depth) return;
    best_depth[rows] = depth;
    bool extended = false;
    for (int j = 1; j + k - 1 <= t.n; ++j) {
      std::vector<std::vector<int>> next = rows;
      bool ok = true;
      for (int r = 0; r < k && ok; ++r) {
        auto pos = std::find(next[r].begin(), next[r].end(), j + r);
        if (pos == next[r].end()) {
          ok = false;
        } else {
          next[r].erase(pos);
        }
      }
      if (!ok || !rows_semistandard(next)) continue;
      extended = true;
      dfs(next, depth + 1);
    }
    if (!extended) {
      if (depth > best) {
        best = depth;
        terminal.clear();
      }
      if (depth == best) terminal.insert(rows);
    }
  };
  dfs(t.rows, 0);
  return terminal;
}

// Arrow-list mutation: (i) add i -> j for every i -> r -> j unless both
// ends are frozen, (ii) reverse arrows at r, (iii) cancel 2-cycles.
inline std::multiset<std::pair<int, int>> mutate_arrow_list(const std::multiset<std::pair<int, int>>& arrows,
                                                            int r, int n_mut) {
  std::vector<std::pair<int, int>> list;
  std::vector<int> ins;
  std::vector<int> outs;
  for (const auto& [a, b] : arrows) {
    if (b == r) ins.push_back(a);
    if (a == r) outs.push_back(b);
  }
  for (int a : ins) {
    for (int b : outs) {
      if (a >= n_mut && b >= n_mut) continue;
      list.emplace_back(a, b);
    }
  }
  for (const auto& [a, b] : arrows) {
    if (a == r || b == r) {
      list.emplace_back(b, a);
    } else {
      list.emplace_back(a, b);
    }
  }
  std::multiset<std::pair<int, int>> result(list.begin(), list.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = result.begin(); it != result.end(); ++it) {
      auto back = result.find({it->second, it->first});
      if (back != result.end()) {
        result.erase(back);
        result.erase(it);
        changed = true;
        break;
      }
    }
  }
  return result;
}

inline std::multiset<std::pair<int, int>> arrow_multiset(const Quiver& q) {
  auto a = q.arrows();
  return {a.begin(), a.end()};
}

// Random quiver without loops or 2-cycles; frozen-frozen arrows omitted.
inline Quiver random_quiver(std::mt19937_64& rng, int m, int n_mut, int max_mult) {
  std::vector<std::pair<int, int>> arrows;
  std::uniform_int_distribution<int> mult(-max_mult, max_mult);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (i >= n_mut && j >= n_mut) continue;
      int c = mult(rng);
      for (int x = 0; x < std::abs(c); ++x) arrows.emplace_back(c > 0 ? i : j, c > 0 ? j : i);
    }
  }
  return make_quiver(m, n_mut, arrows);
}

// Every cyclic run decomposition check by direct enumeration.
inline std::vector<KSubset> all_subsets(int k, int n) {
  std::vector<KSubset> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> e;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) e.push_back(v + 1);
    }
    out.push_back(make_ksubset(n, e));
  }
  return out;
}

inline int seed_vertex(const Seed& s, const std::string& subset_label) {
  for (int v = 0; v < static_cast<int>(s.labels.size()); ++v) {
    if (s.labels[v].columns() == 1 && label(make_ksubset(s.n(), s.labels[v].column(0))) == subset_label) return v;
  }
  return -1;
}

}  // namespace grascat::testing
