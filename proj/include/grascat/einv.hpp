#pragma once

// E-invariants of two-term projective complexes over an Algebra, their
// generic values estimated by exact-arithmetic sampling, and the predicates
// built on them.

#include <cstdint>
#include <string>
#include <vector>

#include "grascat/cluster.hpp"
#include "grascat/qpa.hpp"

namespace grascat {

enum class FieldKind { Rational, Prime };
std::string to_string(FieldKind f);
FieldKind field_from_string(const std::string& s);  // "rational" or "prime"

// f: P^{neg} -> P^{pos}. map[t][s] holds the coefficients of the component
// P_{neg[s]} -> P_{pos[t]} in hom_basis(neg[s], pos[t]).
struct TwoTermComplex {
  const Algebra* algebra = nullptr;
  std::vector<int> neg;
  std::vector<int> pos;
  std::vector<std::vector<std::vector<Rational>>> map;
};

// Zero map between the given summands.
TwoTermComplex zero_complex(const Algebra& a, std::vector<int> neg, std::vector<int> pos);

// Builds a complex from a scalar matrix (rows: pos, columns: neg) where each
// nonzero entry multiplies the unique basis element of the Hom space.
// Throws BadParameters when that Hom space is not one-dimensional.
TwoTermComplex complex_from_matrix(const Algebra& a, const std::vector<std::string>& neg,
                                   const std::vector<std::string>& pos, const std::vector<std::vector<long>>& matrix);

// E(f, g) = dim Hom(F_{-1}, G_0) - rank{(u, v) -> g u + v f}.
// Throws AlgebraMismatch.
int e_pair(const TwoTermComplex& f, const TwoTermComplex& g, FieldKind field = FieldKind::Rational);

// E(f, g) + E(g, f).
int ee_symmetrized(const TwoTermComplex& f, const TwoTermComplex& g, FieldKind field = FieldKind::Rational);

// Summands of a g-vector over the algebra: mutable coordinates are matched
// to algebra vertices by label, frozen coordinates are dropped.
struct ComplexShape {
  std::vector<int> neg;
  std::vector<int> pos;
};
ComplexShape shape_of(const GVector& g, const Seed& s, const Algebra& a);

struct SamplingOptions {
  int samples = 20;
  FieldKind field = FieldKind::Rational;
  std::uint64_t master_seed = 0;
  int workers = 1;
};

// Reads GRASCAT_SEED (default 0).
std::uint64_t master_seed_from_env();

// Random map of the given shape, drawn from the stream (master, index).
TwoTermComplex random_complex(const Algebra& a, const ComplexShape& shape, FieldKind field, std::uint64_t master,
                              std::uint64_t index);

struct EValueReport {
  int value = 0;
  bool certified = false;  // value 0 attained by an explicit sample
  int samples = 0;
  int witness = -1;        // sample index attaining the minimum
  std::string field;
};

// Minimum of E(f, f) over sampled maps f.
EValueReport generic_e(const Algebra& a, const ComplexShape& shape, const SamplingOptions& opt);
EValueReport generic_e(const GVector& g, const Seed& s, const Algebra& a, const SamplingOptions& opt);

// Minimum of E(f, h) + E(h, f) over sampled pairs. The shapes are put in a
// canonical order first, so the result is symmetric in g and h.
EValueReport generic_e_pair(const Algebra& a, const ComplexShape& g, const ComplexShape& h, const SamplingOptions& opt);
EValueReport generic_e_pair(const GVector& g, const GVector& h, const Seed& s, const Algebra& a,
                            const SamplingOptions& opt);

// Conjecture-level predicates; `conjectural` stays true except where the
// answer follows from a certified zero alone.
struct Verdict {
  bool value = false;
  bool conjectural = true;
  EValueReport report;
};
Verdict is_real_g(const GVector& g, const Seed& s, const Algebra& a, const SamplingOptions& opt);
Verdict are_compatible(const GVector& g, const GVector& h, const Seed& s, const Algebra& a, const SamplingOptions& opt);
Verdict is_exchange_pair(const GVector& g, const GVector& h, const Seed& s, const Algebra& a,
                         const SamplingOptions& opt);

}  // namespace grascat
