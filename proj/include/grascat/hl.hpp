#pragma once

// Hernandez-Leclerc quivers of type A_{k-1}, the initial quiver Q_l of the
// monoidal category C_l, the column sweep relating them, and the k-subsets
// attached to Kirillov-Reshetikhin modules and generic kernels.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grascat/cluster.hpp"
#include "grascat/einv.hpp"
#include "grascat/ksubset.hpp"

namespace grascat {

enum class HeightVariant { Linear, Bipartite };

// Linear: i - 2. Bipartite: 0 for even i, -1 for odd i.
int height(HeightVariant variant, int i);

// (i, m) with 1 <= i <= k-1, m < 0, and m even exactly when i is odd.
bool is_hl_vertex(int k, int i, int m);

// Truncation of the semi-infinite quiver to levels m >= s. Arrows
// (i, m+2) -> (i, m) and (i, m-1) -> (j, m) for |i - j| = 1; the lowest
// vertex of each column is frozen. Coordinates are (i, m).
// Throws BadParameters unless k >= 2 and s < 0.
Quiver gamma_quiver(int k, int s);

// The quiver with (k-1)(l+1) vertices (i, a), rows a = -2, -4, ... for odd i
// and a = -1, -3, ... for even i; the bottom row is frozen and arrows between
// frozen vertices are omitted. Throws BadParameters unless k >= 2, l >= 0.
Quiver q_ell_quiver(int k, int ell);

// Mutable vertex (i, a) of q_ell_quiver for the Grassmannian vertex (row,
// column) = (a', b): i = b and a = -2a' (b odd) or -2a' + 1 (b even).
std::pair<int, int> grassmannian_to_hl(int row, int col);

// Column sweep: columns k-1 down to 3, then k-1 down to 5, and so on; each
// column top to bottom over its mutable vertices. Entries are (i, a).
std::vector<std::pair<int, int>> hl_mutation_sequence(int k, int ell);

// Mutates at the vertices with the given coordinates, in order.
// Throws OutOfRange when a coordinate is absent.
Quiver mutate_along(Quiver q, const std::vector<std::pair<int, int>>& coords);

// A bijection p with a.b[u][v] == b.b[p[u]][p[v]] that keeps mutable
// vertices mutable, if one exists.
std::optional<std::vector<int>> quiver_isomorphism(const Quiver& a, const Quiver& b);

// J_{i,m} for a vertex of the truncation at level -2l-2; n = k + l + 1.
// Throws OutOfRange.
KSubset kr_subset(int i, int m, int k, int ell);

// J_{i,m} written through its two defining intervals with endpoints reduced
// into [1, n], e.g. "[2]∪[7,1]". Throws OutOfRange.
std::string kr_subset_notation(int i, int m, int k, int ell);

// v >= 1, 2v <= m + 2l + (-1)^(i+1) and (i, m) a vertex at level -2l-2.
bool kernel_admissible(int i, int m, int v, int k, int ell);

// I^{(v)}_{i,m}. Throws OutOfRange unless admissible.
KSubset kernel_subset(int i, int m, int v, int k, int ell);

// k-subset of tau M^{(i)}_{v,m}, by the two case formulas split on the sign
// of (1 - i - m)/2. Throws OutOfRange unless admissible with l = n - k - 1.
KSubset tau_kernel_subset(int i, int m, int v, int k, int n);

// Seed for Gr(k, k+l+1) whose mutable labels are J_{i,m} over the non-frozen
// vertices of the truncation at -2l-2, with the mutable quiver of that
// truncation, and the n cyclic intervals as frozen labels (no frozen arrows).
Seed gamma_seed(int k, int ell);

// Compatibility of the cluster variables attached to two generic kernels:
// are_compatible on the g-vectors of I^{(v1)}_{i,m1} and I^{(v2)}_{j,m2}
// relative to the initial Grassmannian seed of Gr(k, k+l+1).
Verdict kr_compatible(int v1, int m1, int i, int v2, int m2, int j, int k, int ell, const SamplingOptions& opt);

}  // namespace grascat
