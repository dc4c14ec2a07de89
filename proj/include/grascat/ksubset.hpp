#pragma once

#include <string>
#include <vector>

namespace grascat {

// A sorted k-element subset of the cyclically ordered set [n]. It labels the
// rank-one module L_I and the Pluecker coordinate P_I.
struct KSubset {
  int n = 0;
  std::vector<int> elems;

  int k() const { return static_cast<int>(elems.size()); }
  bool contains(int v) const;
  bool operator==(const KSubset&) const = default;
  auto operator<=>(const KSubset&) const = default;
};

// Sorts the entries and checks that they are distinct and lie
// in [1, n]. Throws OutOfRange otherwise.
KSubset make_ksubset(int n, std::vector<int> elems);

// Parses a compact label such as "1245" (single digits) or "1,2,10".
KSubset parse_ksubset(int n, const std::string& text);

// Compact label: digits concatenated when n <= 9, comma separated otherwise.
std::string label(const KSubset& s);

// Reduces v into [1, n].
inline int wrap(int v, int n) { return ((v - 1) % n + n) % n + 1; }

// The set {a, a+1, ..., b} read cyclically modulo n (empty when b < a).
std::vector<int> cyclic_interval(int a, int b, int n);

// Maximal cyclic runs of the subset, each normalized to start at the element
// whose predecessor (mod n) is missing. Runs are ordered by starting element.
struct CyclicRun {
  int start = 0;
  int length = 0;
};
std::vector<CyclicRun> cyclic_runs(const KSubset& s);

}  // namespace grascat
