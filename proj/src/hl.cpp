#include "grascat/hl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "grascat/error.hpp"
#include "grascat/gvec.hpp"
#include "grascat/qpa.hpp"

namespace grascat {

int height(HeightVariant variant, int i) {
  if (variant == HeightVariant::Linear) return i - 2;
  return i % 2 == 0 ? 0 : -1;
}

bool is_hl_vertex(int k, int i, int m) {
  if (i < 1 || i > k - 1 || m >= 0) return false;
  const bool m_even = m % 2 == 0;
  return (i % 2 == 1) == m_even;
}

namespace {

int index_of(const Quiver& q, std::pair<int, int> c) {
  auto it = std::find(q.coords.begin(), q.coords.end(), c);
  if (it == q.coords.end()) return -1;
  return static_cast<int>(it - q.coords.begin());
}

// Lays out mutable vertices first; coords[v] is the display coordinate.
Quiver assemble(const std::vector<std::pair<int, int>>& mut, const std::vector<std::pair<int, int>>& frozen,
                const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& arrows) {
  Quiver q;
  q.coords = mut;
  q.coords.insert(q.coords.end(), frozen.begin(), frozen.end());
  std::vector<std::pair<int, int>> idx_arrows;
  for (const auto& [from, to] : arrows) idx_arrows.emplace_back(index_of(q, from), index_of(q, to));
  Quiver built = make_quiver(static_cast<int>(q.coords.size()), static_cast<int>(mut.size()), idx_arrows);
  built.coords = q.coords;
  return built;
}

}  // namespace

Quiver gamma_quiver(int k, int s) {
  require(k >= 2 && s < 0, ErrorCode::BadParameters, "gamma_quiver needs k >= 2 and s < 0");
  std::vector<std::pair<int, int>> mut, frozen;
  auto present = [&](int i, int m) { return is_hl_vertex(k, i, m) && m >= s; };
  for (int i = 1; i <= k - 1; ++i) {
    int lowest = 0;
    for (int m = -1; m >= s; --m) {
      if (present(i, m)) lowest = m;
    }
    for (int m = -1; m >= s; --m) {
      if (!present(i, m)) continue;
      (m == lowest ? frozen : mut).emplace_back(i, m);
    }
  }
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> arrows;
  for (int i = 1; i <= k - 1; ++i) {
    for (int m = -1; m >= s; --m) {
      if (!present(i, m)) continue;
      if (present(i, m - 2)) arrows.push_back({{i, m}, {i, m - 2}});
      for (int j : {i - 1, i + 1}) {
        if (present(j, m + 1)) arrows.push_back({{i, m}, {j, m + 1}});
      }
    }
  }
  return assemble(mut, frozen, arrows);
}

Quiver q_ell_quiver(int k, int ell) {
  require(k >= 2 && ell >= 0, ErrorCode::BadParameters, "q_ell_quiver needs k >= 2 and l >= 0");
  // Row r (1-based) of column i sits at a = -2r for odd i and -2r + 1 for even i.
  auto level = [](int i, int r) { return i % 2 == 1 ? -2 * r : -2 * r + 1; };
  std::vector<std::pair<int, int>> mut, frozen;
  for (int i = 1; i <= k - 1; ++i) {
    for (int r = 1; r <= ell + 1; ++r) (r <= ell ? mut : frozen).emplace_back(i, level(i, r));
  }
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> arrows;
  for (int i = 1; i <= k - 1; ++i) {
    for (int r = 1; r <= ell + 1; ++r) {
      const std::pair<int, int> src{i, level(i, r)};
      if (r <= ell) arrows.push_back({src, {i, level(i, r + 1)}});
      if (r <= ell && i + 1 <= k - 1) arrows.push_back({src, {i + 1, level(i + 1, r)}});
      if (r >= 2 && i - 1 >= 1) arrows.push_back({src, {i - 1, level(i - 1, r - 1)}});
    }
  }
  return assemble(mut, frozen, arrows);
}

std::pair<int, int> grassmannian_to_hl(int row, int col) {
  return {col, col % 2 == 1 ? -2 * row : -2 * row + 1};
}

std::vector<std::pair<int, int>> hl_mutation_sequence(int k, int ell) {
  require(k >= 2 && ell >= 0, ErrorCode::BadParameters, "hl_mutation_sequence needs k >= 2 and l >= 0");
  std::vector<std::pair<int, int>> seq;
  for (int lowest = 3; lowest <= k - 1; lowest += 2) {
    for (int col = k - 1; col >= lowest; --col) {
      for (int r = 1; r <= ell; ++r) seq.push_back(grassmannian_to_hl(r, col));
    }
  }
  return seq;
}

Quiver mutate_along(Quiver q, const std::vector<std::pair<int, int>>& coords) {
  for (const auto& c : coords) {
    const int v = index_of(q, c);
    require(v >= 0, ErrorCode::OutOfRange,
            "no vertex at (" + std::to_string(c.first) + "," + std::to_string(c.second) + ")");
    q = mutate_quiver(q, v);
  }
  return q;
}

std::optional<std::vector<int>> quiver_isomorphism(const Quiver& a, const Quiver& b) {
  if (a.m != b.m || a.n_mut != b.n_mut) return std::nullopt;
  const int m = a.m;
  // Joint colour refinement over both quivers.
  std::vector<int> ca(m), cb(m);
  {
    std::map<std::vector<int>, int> ids;
    auto seed_colour = [&](const Quiver& q, int v) {
      std::vector<int> row = q.b[v];
      std::sort(row.begin(), row.end());
      row.push_back(q.is_mutable(v) ? 1 : 0);
      return ids.emplace(row, static_cast<int>(ids.size())).first->second;
    };
    for (int v = 0; v < m; ++v) ca[v] = seed_colour(a, v);
    for (int v = 0; v < m; ++v) cb[v] = seed_colour(b, v);
  }
  for (int round = 0; round < m; ++round) {
    std::map<std::vector<int>, int> ids;
    auto refine = [&](const Quiver& q, const std::vector<int>& col, int v) {
      std::vector<std::pair<int, int>> nb;
      for (int w = 0; w < m; ++w) {
        if (q.b[v][w] != 0) nb.emplace_back(q.b[v][w], col[w]);
      }
      std::sort(nb.begin(), nb.end());
      std::vector<int> key{col[v]};
      for (auto [x, y] : nb) {
        key.push_back(x);
        key.push_back(y);
      }
      return ids.emplace(key, static_cast<int>(ids.size())).first->second;
    };
    std::vector<int> na(m), nb2(m);
    for (int v = 0; v < m; ++v) na[v] = refine(a, ca, v);
    for (int v = 0; v < m; ++v) nb2[v] = refine(b, cb, v);
    const bool stable = std::set<int>(na.begin(), na.end()).size() == std::set<int>(ca.begin(), ca.end()).size();
    ca = std::move(na);
    cb = std::move(nb2);
    if (stable) break;
  }
  {
    std::vector<int> sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> p(m, -1);
  std::vector<bool> used(m, false);
  std::vector<int> order(m);
  for (int v = 0; v < m; ++v) order[v] = v;
  std::function<bool(int)> extend = [&](int pos) {
    if (pos == m) return true;
    const int u = order[pos];
    for (int w = 0; w < m; ++w) {
      if (used[w] || cb[w] != ca[u]) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        const int u2 = order[q];
        ok = a.b[u][u2] == b.b[w][p[u2]];
      }
      if (!ok) continue;
      p[u] = w;
      used[w] = true;
      if (extend(pos + 1)) return true;
      used[w] = false;
      p[u] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return p;
}

KSubset kr_subset(int i, int m, int k, int ell) {
  require(is_hl_vertex(k, i, m) && m >= -2 * ell - 2, ErrorCode::OutOfRange,
          "(" + std::to_string(i) + "," + std::to_string(m) + ") is not a vertex of the truncation");
  const int n = k + ell + 1;
  const int a = (i - height(HeightVariant::Bipartite, i)) / 2;
  const int c = (i - m - 1) / 2;
  std::vector<int> elems = cyclic_interval(a, a + k - i - 1, n);
  const std::vector<int> second = cyclic_interval(c + k - i + 1, c + k, n);
  elems.insert(elems.end(), second.begin(), second.end());
  return make_ksubset(n, elems);
}

std::string kr_subset_notation(int i, int m, int k, int ell) {
  kr_subset(i, m, k, ell);
  const int n = k + ell + 1;
  const int a = (i - height(HeightVariant::Bipartite, i)) / 2;
  const int c = (i - m - 1) / 2;
  auto interval = [n](int lo, int hi) {
    const int x = wrap(lo, n), y = wrap(hi, n);
    return x == y ? "[" + std::to_string(x) + "]" : "[" + std::to_string(x) + "," + std::to_string(y) + "]";
  };
  return interval(a, a + k - i - 1) + "\u222a" + interval(c + k - i + 1, c + k);
}

bool kernel_admissible(int i, int m, int v, int k, int ell) {
  if (!is_hl_vertex(k, i, m) || m < -2 * ell - 2 || v < 1) return false;
  const int sign = i % 2 == 1 ? 1 : -1;
  return 2 * v <= m + 2 * ell + sign;
}

KSubset kernel_subset(int i, int m, int v, int k, int ell) {
  require(kernel_admissible(i, m, v, k, ell), ErrorCode::OutOfRange, "inadmissible (i, m, v)");
  const int n = k + ell + 1;
  const int a = (i - m + 1) / 2;
  const int c = (i - m + 2 * v - 1) / 2;
  std::vector<int> elems = cyclic_interval(a, a + k - i - 1, n);
  const std::vector<int> second = cyclic_interval(c + k - i + 1, c + k, n);
  elems.insert(elems.end(), second.begin(), second.end());
  return make_ksubset(n, elems);
}

KSubset tau_kernel_subset(int i, int m, int v, int k, int n) {
  const int ell = n - k - 1;
  require(kernel_admissible(i, m, v, k, ell), ErrorCode::OutOfRange, "inadmissible (i, m, v)");
  const int lo = (1 - i - m) / 2;
  const int hi = (i - m - 1) / 2;
  std::vector<int> elems = cyclic_interval((i - m + 2 * v + 1) / 2, (i - m + 2 * v - 1) / 2 + k - i, n);
  std::vector<int> first;
  if (lo >= 1) {
    first = cyclic_interval(lo, hi, n);
  } else {
    first = cyclic_interval(1, hi, n);
    const std::vector<int> last = cyclic_interval(n + lo, n, n);
    first.insert(first.end(), last.begin(), last.end());
  }
  elems.insert(elems.end(), first.begin(), first.end());
  return make_ksubset(n, elems);
}

Seed gamma_seed(int k, int ell) {
  const int n = k + ell + 1;
  const Quiver g = gamma_quiver(k, -2 * ell - 2);
  Seed s;
  s.name = "gamma" + std::to_string(k) + "_" + std::to_string(ell);
  const int n_mut = g.n_mut;
  s.quiver.m = n_mut + n;
  s.quiver.n_mut = n_mut;
  s.quiver.b.assign(s.quiver.m, std::vector<int>(s.quiver.m, 0));
  for (int u = 0; u < n_mut; ++u) {
    for (int v = 0; v < n_mut; ++v) s.quiver.b[u][v] = g.b[u][v];
  }
  for (int u = 0; u < n_mut; ++u) {
    s.quiver.coords.push_back(g.coords[u]);
    s.labels.push_back(column_tableau(kr_subset(g.coords[u].first, g.coords[u].second, k, ell)));
  }
  for (int j = 1; j <= n; ++j) {
    s.quiver.coords.emplace_back(0, j);
    s.labels.push_back(column_tableau(make_ksubset(n, cyclic_interval(j, j + k - 1, n))));
  }
  return s;
}

Verdict kr_compatible(int v1, int m1, int i, int v2, int m2, int j, int k, int ell, const SamplingOptions& opt) {
  const int n = k + ell + 1;
  const KSubset s1 = kernel_subset(i, m1, v1, k, ell);
  const KSubset s2 = kernel_subset(j, m2, v2, k, ell);
  const Seed seed = grassmannian_initial_seed(k, n);
  std::vector<std::string> names;
  for (const auto& t : seed.labels) names.push_back(label(make_ksubset(n, t.column(0))));
  const Algebra alg = build_algebra(triangle_potential_opposite(seed.quiver, names));
  const GVector g1 = g_vector(column_tableau(s1), seed);
  const GVector g2 = g_vector(column_tableau(s2), seed);
  return are_compatible(g1, g2, seed, alg, opt);
}

}  // namespace grascat
