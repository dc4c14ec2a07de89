#pragma once

// Finite-dimensional Jacobian algebras of quivers with potential, presented
// by Hom-space bases between indecomposable projectives and composition
// constants.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "grascat/cluster.hpp"
#include "grascat/linalg.hpp"

namespace grascat {

struct QPArrow {
  std::string id;
  int from = 0;
  int to = 0;
};

struct PotentialTerm {
  int sign = 1;
  std::vector<int> cycle;  // arrow indices in traversal order
};

struct QuiverWithPotential {
  std::vector<std::string> vertices;
  std::vector<QPArrow> arrows;
  std::vector<PotentialTerm> potential;

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& id) const;
};

// Checks that every potential term is a closed path. Throws BadParameters.
void validate(const QuiverWithPotential& qp);

// A path is a sequence of arrows in traversal order; the empty path at a
// vertex is the idempotent there.
struct Path {
  int source = 0;
  std::vector<int> arrows;
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

int path_target(const QuiverWithPotential& qp, const Path& p);
std::string path_label(const QuiverWithPotential& qp, const Path& p);

// Linear combination of parallel paths.
struct Relation {
  int arrow = -1;  // arrow whose cyclic derivative this is
  int source = 0;
  int target = 0;
  std::vector<std::pair<Rational, Path>> terms;
};

// One relation per arrow: the cyclic derivative of the potential with
// respect to that arrow (possibly empty).
std::vector<Relation> potential_relations(const QuiverWithPotential& qp);

// Hom(P_i, P_j) has a basis hom_basis(i, j); composing x in Hom(P_i, P_j)
// with y in Hom(P_j, P_l) gives y o x in Hom(P_i, P_l).
class Algebra {
 public:
  using Tensor = std::vector<std::vector<std::vector<Rational>>>;  // [x][y] -> coefficients

  Algebra() = default;

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  int vertex_index(const std::string& name) const;

  int hom_dim(int i, int j) const { return static_cast<int>(basis_[i][j].size()); }
  const std::vector<std::string>& hom_basis(int i, int j) const { return basis_[i][j]; }
  int degree(int i, int j, int x) const { return degrees_[i][j][x]; }

  // Coefficients of y o x for basis elements x of Hom(P_i, P_j) and y of
  // Hom(P_j, P_l).
  const std::vector<Rational>& compose(int i, int j, int l, int x, int y) const;

  // Index of the identity of P_i in hom_basis(i, i).
  int identity(int i) const { return identity_[i]; }

  // Table mode: hand-entered bases and composition constants. Missing
  // triples compose to zero. Throws BadParameters on shape errors.
  static Algebra from_table(std::vector<std::string> vertices,
                            std::vector<std::vector<std::vector<std::string>>> basis,
                            std::vector<std::vector<std::vector<int>>> degrees, std::vector<int> identity,
                            std::map<std::tuple<int, int, int>, Tensor> comp);

  friend Algebra build_algebra(const QuiverWithPotential& qp, int cap);

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<std::vector<std::string>>> basis_;
  std::vector<std::vector<std::vector<int>>> degrees_;
  std::vector<int> identity_;
  std::map<std::tuple<int, int, int>, Tensor> comp_;
  std::vector<Rational> zero_;
};

// Quotient of the path algebra by the ideal of cyclic derivatives, computed
// degree by degree with Hom(P_i, P_j) spanned by the paths from j to i.
// Throws BadParameters on inhomogeneous relations and NotFiniteDimensional
// when degree `cap` is still nonzero.
Algebra build_algebra(const QuiverWithPotential& qp, int cap = 64);

// Associativity and unit laws on all basis triples.
bool check_associativity(const Algebra& a);
bool check_identity_laws(const Algebra& a);

// Path algebra of the opposite of the mutable part of a seed quiver, with
// the potential given by its oriented 3-cycles. Triangles are signed so
// that every arrow lying in two triangles sees opposite signs; `names`
// labels the vertices.
QuiverWithPotential triangle_potential_opposite(const Quiver& q, const std::vector<std::string>& names);

}  // namespace grascat
