#pragma once

// Rectangular semistandard Young tableaux with k rows and entries in [n],
// and the dictionary between tableaux and dominant monomials in Y_{i,s}.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grascat/ksubset.hpp"

namespace grascat {

struct Tableau {
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> rows;  // k rows of equal length

  int columns() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
  bool is_empty() const { return columns() == 0; }
  std::vector<int> column(int c) const;
  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau&) const = default;
};

// True if rows have equal length, are weakly increasing, columns strictly
// increase and all entries lie in [1, n].
bool is_semistandard(int k, int n, const std::vector<std::vector<int>>& rows);

// Validating constructor; rows are taken as given (not re-sorted).
// Throws InvalidTableau on any violated invariant.
Tableau make_tableau(int k, int n, std::vector<std::vector<int>> rows);

Tableau empty_tableau(int k, int n);

// One-column tableau whose entries are the subset.
Tableau column_tableau(const KSubset& s);

// Tableau built from columns given left to right.
Tableau tableau_from_columns(int k, int n, const std::vector<std::vector<int>>& columns);

// Trivial column [j, j+k-1].
Tableau trivial_column(int k, int n, int j);

std::string to_string(const Tableau& t);

// Row-wise multiset union. Throws DimensionMismatch.
Tableau tableau_union(const Tableau& s, const Tableau& t);

// Row-wise multiset difference t / s. Throws DimensionMismatch, NotAFactor,
// NotSemistandard.
Tableau tableau_quotient(const Tableau& t, const Tableau& s);

// True if every row of s is a sub-multiset of the same row of t.
bool is_factor(const Tableau& s, const Tableau& t);

// Removes a maximal trivial factor.
Tableau reduce(const Tableau& t);

// Number of trivial columns removed by reduce.
int trivial_factor_size(const Tableau& t);

bool equivalent(const Tableau& s, const Tableau& t);

enum class Dominance { LT, GT, EQ, Incomparable, DifferentContent };
std::string to_string(Dominance d);

// Compares s against t: GT means s dominates t.
Dominance dominance_compare(const Tableau& s, const Tableau& t);

// Per-row value counts: counts[r * n + (v - 1)].
struct ContentGrid {
  int k = 0;
  int n = 0;
  std::vector<long long> counts;

  long long at(int row, int value) const { return counts[static_cast<std::size_t>(row) * n + value - 1]; }
  long long& at(int row, int value) { return counts[static_cast<std::size_t>(row) * n + value - 1]; }
  ContentGrid& operator+=(const ContentGrid& o);
  ContentGrid& operator-=(const ContentGrid& o);
  bool operator==(const ContentGrid&) const = default;
};

ContentGrid zero_grid(int k, int n);
ContentGrid content_grid(const Tableau& t);

// Rebuilds the tableau with the given row contents. Throws NotSemistandard
// (negative counts, unequal row lengths or column violations).
Tableau tableau_from_grid(const ContentGrid& g);

// Total number of boxes filled with each value, indexed 1..n (index 0 unused).
std::vector<long long> content(const Tableau& t);

// Dominant monomial prod Y_{i,s}^{u_{i,s}} for the height function
// xi(i) = i - 2, with n = k + ell + 1.
struct DominantMonomial {
  int k = 0;
  int ell = 0;
  std::map<std::pair<int, int>, int> factors;  // (i, s) -> multiplicity > 0

  int n() const { return k + ell + 1; }
  int degree() const;
  bool operator==(const DominantMonomial&) const = default;
};

// Checks i in [1, k-1], parity of s, and that the fundamental column fits in [n].
bool is_valid_factor(int i, int s, int k, int ell);
void validate(const DominantMonomial& m);

std::string to_string(const DominantMonomial& m);

// [(i-s)/2, k+(i-s)/2] minus {k-(i+s)/2}. Throws OutOfRange.
KSubset fundamental_subset(int i, int s, int k, int n);

// Union of fundamental columns, reduced. Throws OutOfRange.
Tableau monomial_to_tableau(const DominantMonomial& m);

// Solves the content equation over fundamental and trivial columns.
// Throws NoDecomposition when no admissible solution exists.
DominantMonomial tableau_to_monomial(const Tableau& t);

// Bender-Knuth involution exchanging free i and i+1 in every row.
Tableau bender_knuth(const Tableau& t, int i);

// pr = BK_1 o ... o BK_{n-1}; BK_{n-1} acts first.
Tableau promote(const Tableau& t);

}  // namespace grascat
