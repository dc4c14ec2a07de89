#pragma once

// Quivers with a mutable/frozen split, seeds labelled by tableaux, seed
// mutation and bounded exploration of the exchange graph.

#include <string>
#include <utility>
#include <vector>

#include "grascat/tableau.hpp"

namespace grascat {

// Vertices 0..n_mut-1 are mutable, the rest frozen. Arrows are stored as the
// skew-symmetric exchange matrix b[i][j] = #(i -> j) - #(j -> i), so 2-cycles
// are cancelled by construction.
struct Quiver {
  int m = 0;
  int n_mut = 0;
  std::vector<std::vector<int>> b;
  std::vector<std::pair<int, int>> coords;  // optional display coordinates

  bool is_mutable(int v) const { return v >= 0 && v < n_mut; }
  int arrows_between(int from, int to) const { return b[from][to] > 0 ? b[from][to] : 0; }
  // Expanded arrow multiset, sorted.
  std::vector<std::pair<int, int>> arrows() const;
  bool operator==(const Quiver& o) const { return m == o.m && n_mut == o.n_mut && b == o.b; }
};

// Throws BadParameters on loops or out-of-range endpoints.
Quiver make_quiver(int m, int n_mut, const std::vector<std::pair<int, int>>& arrows);

// Restriction to the mutable vertices.
Quiver mutable_part(const Quiver& q);

// Add i -> j for every path i -> r -> j, reverse the arrows at r, cancel
// 2-cycles. Arrows between two frozen vertices are left untouched.
// Throws FrozenVertex.
Quiver mutate_quiver(const Quiver& q, int r);

struct Seed {
  std::string name;
  Quiver quiver;
  std::vector<Tableau> labels;

  int k() const { return labels.empty() ? 0 : labels.front().k; }
  int n() const { return labels.empty() ? 0 : labels.front().n; }
};

// Initial seed of C[Gr(k, n)] built from oriented triangles. Vertex order:
// mutable (a, b) column by column (b = 1..k-1, a = 1..n-k-1), then frozen
// (0,0), the column b = k from top to bottom, and the bottom row a = n-k.
// Throws BadParameters unless 2 <= k <= n-2.
Seed grassmannian_initial_seed(int k, int n);

// Replaces the label at r by T_r^{-1} max(union of in-neighbours, union of
// out-neighbours), computed on equivalence classes, and mutates the quiver.
// Throws FrozenVertex, IncomparableExchange, NotAFactor.
Seed mutate_seed(const Seed& s, int r);

// Integer vector indexed by the vertices of the seed it refers to.
struct GVector {
  std::string seed_name;
  std::vector<long long> coords;
  bool operator==(const GVector&) const = default;
};

struct ExploreResult {
  std::vector<std::pair<Tableau, GVector>> variables;  // reduced mutable labels
  int seeds_visited = 0;
  bool budget_exceeded = false;
};

// Breadth-first closure under mutation from s, deduplicating clusters by
// their multiset of reduced mutable labels. Collects every distinct mutable
// label with its g-vector relative to s. Throws BadParameters on negative
// budgets.
ExploreResult explore(const Seed& s, int max_depth, int max_seeds);

}  // namespace grascat
