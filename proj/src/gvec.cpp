#include "grascat/gvec.hpp"

#include "grascat/error.hpp"

namespace grascat {

GVectorSolver::GVectorSolver(const Seed& seed) : seed_(seed) {
  const int k = seed.k();
  const int n = seed.n();
  const int cells = k * n;
  const int m = static_cast<int>(seed.labels.size());
  basis_.assign(cells, std::vector<Rational>(m));
  for (int j = 0; j < m; ++j) {
    const Tableau& t = seed.labels[j];
    require(t.k == k && t.n == n, ErrorCode::DimensionMismatch, "seed labels have different (k, n)");
    ContentGrid g = content_grid(t);
    for (int c = 0; c < cells; ++c) basis_[c][j] = Rational(static_cast<long>(g.counts[c]));
  }
  require(rank(basis_, m) == m, ErrorCode::BadParameters,
          "label contents of seed " + seed.name + " are linearly dependent");
}

GVector GVectorSolver::solve(const Tableau& t) const {
  require(t.k == seed_.k() && t.n == seed_.n(), ErrorCode::DimensionMismatch, "tableau and seed have different (k, n)");
  ContentGrid g = content_grid(reduce(t));
  std::vector<Rational> rhs(g.counts.size());
  for (std::size_t c = 0; c < rhs.size(); ++c) rhs[c] = Rational(static_cast<long>(g.counts[c]));
  LinearSolution sol = solve_rational(basis_, rhs);
  require(sol.status != LinearSolution::Status::NotUnique, ErrorCode::NonUniqueSolution,
          "g-vector of " + to_string(t) + " is not unique");
  require(sol.status == LinearSolution::Status::Unique, ErrorCode::NoIntegerSolution,
          "content of " + to_string(t) + " is outside the span of the seed labels");
  GVector out{seed_.name, {}};
  for (const Rational& x : sol.x) {
    require(x.get_den() == 1, ErrorCode::NoIntegerSolution, "g-vector of " + to_string(t) + " is not integral");
    out.coords.push_back(x.get_num().get_si());
  }
  return out;
}

GVector g_vector(const Tableau& t, const Seed& s) { return GVectorSolver(s).solve(t); }

Tableau reconstruct(const GVector& g, const Seed& s) {
  require(g.coords.size() == s.labels.size(), ErrorCode::DimensionMismatch, "g-vector length differs from seed size");
  ContentGrid total = zero_grid(s.k(), s.n());
  for (std::size_t j = 0; j < g.coords.size(); ++j) {
    ContentGrid c = content_grid(s.labels[j]);
    for (auto& x : c.counts) x *= g.coords[j];
    total += c;
  }
  return reduce(tableau_from_grid(total));
}

ConePresentation cone_presentation(const GVector& g, const Seed& s, bool mutable_only) {
  require(g.coords.size() == s.labels.size(), ErrorCode::DimensionMismatch, "g-vector length differs from seed size");
  ConePresentation cp;
  for (std::size_t j = 0; j < g.coords.size(); ++j) {
    if (mutable_only && !s.quiver.is_mutable(static_cast<int>(j))) continue;
    long long x = g.coords[j];
    if (x == 0) continue;
    const Tableau& t = s.labels[j];
    require(t.columns() == 1, ErrorCode::BadParameters, "cone presentations need one-column seed labels");
    KSubset subset = make_ksubset(t.n, t.column(0));
    auto& side = x < 0 ? cp.sub : cp.quot;
    for (long long c = 0; c < (x < 0 ? -x : x); ++c) side.push_back(subset);
  }
  return cp;
}

}  // namespace grascat
