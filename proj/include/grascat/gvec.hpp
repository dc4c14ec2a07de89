#pragma once

// g-vectors of tableaux relative to a seed, and the cone presentations read
// off from their signs.

#include <vector>

#include "grascat/cluster.hpp"
#include "grascat/ksubset.hpp"
#include "grascat/linalg.hpp"
#include "grascat/tableau.hpp"

namespace grascat {

// Solves c(reduce(T)) = sum_j g_j c(S_j) against a fixed seed. Construction
// checks that the label contents are linearly independent (BadParameters
// otherwise).
class GVectorSolver {
 public:
  explicit GVectorSolver(const Seed& seed);

  // Throws NoIntegerSolution, NonUniqueSolution, DimensionMismatch.
  GVector solve(const Tableau& t) const;

  const Seed& seed() const { return seed_; }

 private:
  Seed seed_;
  Matrix<Rational> basis_;  // rows: grid cells, columns: seed vertices
};

GVector g_vector(const Tableau& t, const Seed& s);

// Evaluates the signed union of the seed labels; returns the reduced result.
// Throws NotSemistandard when the signed content is not a tableau.
Tableau reconstruct(const GVector& g, const Seed& s);

struct ConePresentation {
  std::vector<KSubset> sub;   // from negative coordinates, with multiplicity
  std::vector<KSubset> quot;  // from positive coordinates, with multiplicity
};

// Requires one-column labels (BadParameters otherwise). With
// `mutable_only`, frozen coordinates are skipped.
ConePresentation cone_presentation(const GVector& g, const Seed& s, bool mutable_only = false);

}  // namespace grascat
