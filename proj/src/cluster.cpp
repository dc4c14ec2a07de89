#include "grascat/cluster.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "grascat/error.hpp"
#include "grascat/gvec.hpp"

namespace grascat {

namespace {

Tableau power_union(const Tableau& acc, const Tableau& t, int times) {
  Tableau out = acc;
  for (int c = 0; c < times; ++c) out = tableau_union(out, t);
  return out;
}

// Finds w with content(in) - content(out) = sum_j w_j * content([j, j+k-1]).
bool balance_weights(const std::vector<long long>& diff, int k, int n, std::vector<long long>& w) {
  const int count = n - k + 1;
  w.assign(count + 1, 0);
  for (int v = 1; v <= n; ++v) {
    long long covered = 0;
    for (int j = std::max(1, v - k + 1); j <= std::min(v - 1, count); ++j) covered += w[j];
    if (v <= count) {
      w[v] = diff[v] - covered;
    } else if (covered != diff[v]) {
      return false;
    }
  }
  return true;
}

std::vector<Tableau> trivial_columns(int k, int n) {
  std::vector<Tableau> out;
  for (int j = 1; j + k - 1 <= n; ++j) out.push_back(trivial_column(k, n, j));
  return out;
}

// Divides `top` by `t`, padding `top` with trivial columns when `t` is not
// a factor of it as stored.
Tableau divide_up_to_trivials(const Tableau& top, const Tableau& t) {
  if (is_factor(t, top)) {
    try {
      return tableau_quotient(top, t);
    } catch (const Error&) {
    }
  }
  const std::vector<Tableau> trivials = trivial_columns(top.k, top.n);
  std::vector<Tableau> frontier{top};
  std::set<Tableau> seen{top};
  for (int extra = 1; extra <= top.k + 2; ++extra) {
    std::vector<Tableau> next;
    for (const Tableau& base : frontier) {
      for (const Tableau& triv : trivials) {
        Tableau padded = tableau_union(base, triv);
        if (!seen.insert(padded).second) continue;
        if (is_factor(t, padded)) {
          try {
            return tableau_quotient(padded, t);
          } catch (const Error&) {
          }
        }
        next.push_back(std::move(padded));
      }
    }
    frontier = std::move(next);
  }
  fail(ErrorCode::NotAFactor, to_string(t) + " does not divide " + to_string(top) + " up to trivial columns");
}

}  // namespace

std::vector<std::pair<int, int>> Quiver::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int c = 0; c < b[i][j]; ++c) out.emplace_back(i, j);
    }
  }
  return out;
}

Quiver make_quiver(int m, int n_mut, const std::vector<std::pair<int, int>>& arrows) {
  require(m >= 0 && n_mut >= 0 && n_mut <= m, ErrorCode::BadParameters, "invalid vertex counts");
  Quiver q;
  q.m = m;
  q.n_mut = n_mut;
  q.b.assign(m, std::vector<int>(m, 0));
  for (const auto& [from, to] : arrows) {
    require(from >= 0 && from < m && to >= 0 && to < m, ErrorCode::BadParameters, "arrow endpoint out of range");
    require(from != to, ErrorCode::BadParameters, "loops are not allowed");
    ++q.b[from][to];
    --q.b[to][from];
  }
  return q;
}

Quiver mutable_part(const Quiver& q) {
  Quiver out;
  out.m = q.n_mut;
  out.n_mut = q.n_mut;
  out.b.assign(q.n_mut, std::vector<int>(q.n_mut, 0));
  for (int i = 0; i < q.n_mut; ++i) {
    for (int j = 0; j < q.n_mut; ++j) out.b[i][j] = q.b[i][j];
  }
  if (!q.coords.empty()) out.coords.assign(q.coords.begin(), q.coords.begin() + q.n_mut);
  return out;
}

Quiver mutate_quiver(const Quiver& q, int r) {
  require(q.is_mutable(r), ErrorCode::FrozenVertex, "vertex " + std::to_string(r) + " is not mutable");
  Quiver out = q;
  for (int i = 0; i < q.m; ++i) {
    for (int j = 0; j < q.m; ++j) {
      if (i == r || j == r) {
        out.b[i][j] = -q.b[i][j];
      } else if (q.is_mutable(i) || q.is_mutable(j)) {
        int through = q.arrows_between(i, r) * q.arrows_between(r, j);
        int back = q.arrows_between(j, r) * q.arrows_between(r, i);
        out.b[i][j] = q.b[i][j] + through - back;
      }
    }
  }
  return out;
}

Seed grassmannian_initial_seed(int k, int n) {
  require(k >= 2 && n - k >= 2, ErrorCode::BadParameters,
          "Grassmannian seed needs 2 <= k <= n-2, got (" + std::to_string(k) + "," + std::to_string(n) + ")");
  const int rows = n - k;
  std::vector<std::pair<int, int>> order;
  for (int b = 1; b <= k - 1; ++b) {
    for (int a = 1; a <= rows - 1; ++a) order.emplace_back(a, b);
  }
  const int n_mut = static_cast<int>(order.size());
  order.emplace_back(0, 0);
  for (int a = 1; a <= rows; ++a) order.emplace_back(a, k);
  for (int b = 1; b <= k - 1; ++b) order.emplace_back(rows, b);

  auto index = [&](int a, int b) {
    auto it = std::find(order.begin(), order.end(), std::make_pair(a, b));
    return static_cast<int>(it - order.begin());
  };
  std::vector<std::pair<int, int>> arrows;
  arrows.emplace_back(index(0, 0), index(1, 1));
  for (int a = 2; a <= rows; ++a) {
    for (int b = 1; b <= k; ++b) arrows.emplace_back(index(a - 1, b), index(a, b));
  }
  for (int a = 1; a <= rows; ++a) {
    for (int b = 2; b <= k; ++b) arrows.emplace_back(index(a, b - 1), index(a, b));
  }
  for (int a = 1; a <= rows - 1; ++a) {
    for (int b = 1; b <= k - 1; ++b) arrows.emplace_back(index(a + 1, b + 1), index(a, b));
  }

  Seed seed;
  seed.name = "gr" + std::to_string(k) + "_" + std::to_string(n);
  seed.quiver = make_quiver(static_cast<int>(order.size()), n_mut, arrows);
  seed.quiver.coords = order;
  for (const auto& [a, b] : order) {
    std::vector<int> elems;
    if (a == 0) {
      for (int v = 1; v <= k; ++v) elems.push_back(v);
    } else {
      for (int v = 1; v <= k - b; ++v) elems.push_back(v);
      for (int v = a + k - b + 1; v <= a + k; ++v) elems.push_back(v);
    }
    seed.labels.push_back(column_tableau(make_ksubset(n, elems)));
  }
  return seed;
}

Seed mutate_seed(const Seed& s, int r) {
  const Quiver& q = s.quiver;
  require(q.is_mutable(r), ErrorCode::FrozenVertex, "vertex " + std::to_string(r) + " is not mutable");
  const int k = s.k();
  const int n = s.n();
  Tableau in_union = empty_tableau(k, n);
  Tableau out_union = empty_tableau(k, n);
  for (int i = 0; i < q.m; ++i) {
    if (q.b[i][r] > 0) in_union = power_union(in_union, reduce(s.labels[i]), q.b[i][r]);
    if (q.b[r][i] > 0) out_union = power_union(out_union, reduce(s.labels[i]), q.b[r][i]);
  }
  std::vector<long long> diff = content(in_union);
  std::vector<long long> other = content(out_union);
  for (int v = 1; v <= n; ++v) diff[v] -= other[v];
  std::vector<long long> w;
  require(balance_weights(diff, k, n, w), ErrorCode::IncomparableExchange,
          "exchange monomials at vertex " + std::to_string(r) + " have different weights");
  for (int j = 1; j + k - 1 <= n; ++j) {
    if (w[j] < 0) in_union = power_union(in_union, trivial_column(k, n, j), static_cast<int>(-w[j]));
    if (w[j] > 0) out_union = power_union(out_union, trivial_column(k, n, j), static_cast<int>(w[j]));
  }
  Dominance cmp = dominance_compare(in_union, out_union);
  require(cmp == Dominance::GT || cmp == Dominance::LT || cmp == Dominance::EQ, ErrorCode::IncomparableExchange,
          "exchange tableaux " + to_string(in_union) + " and " + to_string(out_union) + " are " + to_string(cmp));
  const Tableau& top = cmp == Dominance::LT ? out_union : in_union;

  Seed out = s;
  out.labels[r] = reduce(divide_up_to_trivials(top, reduce(s.labels[r])));
  out.quiver = mutate_quiver(q, r);
  return out;
}

ExploreResult explore(const Seed& s, int max_depth, int max_seeds) {
  require(max_depth >= 0 && max_seeds >= 1, ErrorCode::BadParameters, "exploration budgets must be positive");
  using Key = std::vector<Tableau>;
  auto key_of = [](const Seed& seed) {
    Key key;
    for (int v = 0; v < seed.quiver.n_mut; ++v) key.push_back(reduce(seed.labels[v]));
    std::sort(key.begin(), key.end());
    return key;
  };
  const GVectorSolver solver(s);
  ExploreResult result;
  std::set<Key> seen_clusters{key_of(s)};
  std::set<Tableau> seen_labels;
  auto record = [&](const Seed& seed) {
    for (int v = 0; v < seed.quiver.n_mut; ++v) {
      Tableau t = reduce(seed.labels[v]);
      if (seen_labels.insert(t).second) result.variables.emplace_back(t, solver.solve(t));
    }
  };
  record(s);
  std::deque<std::pair<Seed, int>> queue{{s, 0}};
  result.seeds_visited = 1;
  while (!queue.empty()) {
    auto [seed, depth] = queue.front();
    queue.pop_front();
    if (depth >= max_depth) continue;
    for (int r = 0; r < seed.quiver.n_mut; ++r) {
      Seed next = mutate_seed(seed, r);
      if (!seen_clusters.insert(key_of(next)).second) continue;
      if (result.seeds_visited >= max_seeds) {
        result.budget_exceeded = true;
        return result;
      }
      ++result.seeds_visited;
      record(next);
      queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return result;
}

}  // namespace grascat
