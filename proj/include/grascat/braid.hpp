#pragma once

// Braid group action by quasi-automorphisms on consecutively generic
// n-tuples of vectors in a k-dimensional space, in exact arithmetic.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "grascat/error.hpp"
#include "grascat/linalg.hpp"

namespace grascat {

template <class F>
struct VectorTuple {
  int k = 0;
  int n = 0;
  std::vector<std::vector<F>> vectors;  // n vectors of length k
  bool operator==(const VectorTuple&) const = default;
};

inline int braid_period(int k, int n) { return std::gcd(k, n); }

// Throws DimensionMismatch on malformed tuples.
template <class F>
void check_shape(const VectorTuple<F>& t) {
  require(t.k >= 1 && t.n >= t.k && static_cast<int>(t.vectors.size()) == t.n, ErrorCode::DimensionMismatch,
          "tuple must hold n >= k vectors");
  for (const auto& v : t.vectors) {
    require(static_cast<int>(v.size()) == t.k, ErrorCode::DimensionMismatch, "vector length differs from k");
  }
}

// det(v_{idx[0]}, ..., v_{idx[k-1]}), 1-based indices read cyclically.
template <class F>
F minor(const VectorTuple<F>& t, const std::vector<int>& idx) {
  Matrix<F> m(t.k, std::vector<F>(t.k));
  for (int c = 0; c < t.k; ++c) {
    const auto& v = t.vectors[((idx[c] - 1) % t.n + t.n) % t.n];
    for (int r = 0; r < t.k; ++r) m[r][c] = v[r];
  }
  return determinant(std::move(m));
}

template <class F>
F consecutive_minor(const VectorTuple<F>& t, int first) {
  std::vector<int> idx(t.k);
  for (int c = 0; c < t.k; ++c) idx[c] = first + c;
  return minor(t, idx);
}

template <class F>
bool is_consecutively_generic(const VectorTuple<F>& t) {
  check_shape(t);
  for (int i = 1; i <= t.n; ++i) {
    if (is_zero(consecutive_minor(t, i))) return false;
  }
  return true;
}

// (v_2, ..., v_n, (-1)^(k-1) v_1).
template <class F>
VectorTuple<F> twisted_shift(const VectorTuple<F>& t) {
  check_shape(t);
  VectorTuple<F> out{t.k, t.n, {}};
  out.vectors.assign(t.vectors.begin() + 1, t.vectors.end());
  std::vector<F> first = t.vectors.front();
  if ((t.k - 1) % 2 == 1) {
    for (auto& x : first) x = -x;
  }
  out.vectors.push_back(std::move(first));
  return out;
}

template <class F>
VectorTuple<F> twisted_shift(const VectorTuple<F>& t, int times) {
  VectorTuple<F> out = t;
  for (int r = 0; r < times; ++r) out = twisted_shift(out);
  return out;
}

// sigma_i for 1 <= i <= d-1, applied to every window of length d.
// Throws BadParameters, NotGeneric, DegenerateDenominator.
template <class F>
VectorTuple<F> sigma(int i, const VectorTuple<F>& t) {
  check_shape(t);
  const int d = braid_period(t.k, t.n);
  require(d >= 2 && i >= 1 && i <= d - 1, ErrorCode::BadParameters,
          "sigma_" + std::to_string(i) + " needs 1 <= i <= d-1 with d = " + std::to_string(d));
  require(is_consecutively_generic(t), ErrorCode::NotGeneric, "tuple is not consecutively generic");
  VectorTuple<F> out = t;
  for (int base = 0; base < t.n; base += d) {
    const int p = base + i;  // 1-based position of v_i in this window
    std::vector<int> num_idx{p};
    for (int c = 2; c <= t.k; ++c) num_idx.push_back(p + c);
    const F num = minor(t, num_idx);
    const F den = consecutive_minor(t, p + 1);
    require(!is_zero(den), ErrorCode::DegenerateDenominator, "vanishing window denominator");
    const F ratio = num / den;
    const auto& vi = t.vectors[p - 1];
    const auto& vnext = t.vectors[p % t.n];
    std::vector<F> w(t.k);
    for (int r = 0; r < t.k; ++r) w[r] = ratio * vnext[r] - vi[r];
    out.vectors[p - 1] = vnext;
    out.vectors[p % t.n] = std::move(w);
  }
  return out;
}

// All k x k minors in lexicographic order of the column sets.
template <class F>
std::vector<F> plucker_vector(const VectorTuple<F>& t) {
  check_shape(t);
  std::vector<F> out;
  std::vector<int> idx(t.k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    out.push_back(minor(t, idx));
    int pos = t.k - 1;
    while (pos >= 0 && idx[pos] == t.n - (t.k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < t.k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

// True when the two vectors span the same line (both nonzero).
template <class F>
bool proportional(const std::vector<F>& a, const std::vector<F>& b) {
  if (a.size() != b.size()) return false;
  std::size_t pivot = 0;
  while (pivot < a.size() && is_zero(a[pivot])) ++pivot;
  if (pivot == a.size() || is_zero(b[pivot])) return false;
  const F scale = b[pivot] / a[pivot];
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (!(a[q] * scale == b[q])) return false;
  }
  return true;
}

struct RelationVerdict {
  std::string relation;  // "periodicity", "commutation" or "braid"
  int i = 0;
  int j = 0;
  bool exact = false;       // equal as tuples
  bool projective = false;  // equal as points of the Grassmannian
};

struct BraidReport {
  int k = 0;
  int n = 0;
  int d = 0;
  bool generic_preserved = true;
  std::vector<RelationVerdict> verdicts;
};

template <class F>
BraidReport braid_property_check(const VectorTuple<F>& t) {
  require(is_consecutively_generic(t), ErrorCode::NotGeneric, "tuple is not consecutively generic");
  BraidReport rep;
  rep.k = t.k;
  rep.n = t.n;
  rep.d = braid_period(t.k, t.n);
  const int d = rep.d;
  auto compare = [&](const std::string& name, int i, int j, const VectorTuple<F>& x, const VectorTuple<F>& y) {
    RelationVerdict v{name, i, j, x == y, false};
    v.projective = v.exact || proportional(plucker_vector(x), plucker_vector(y));
    rep.verdicts.push_back(v);
  };
  if (!is_consecutively_generic(twisted_shift(t))) rep.generic_preserved = false;
  if (d < 2) return rep;
  const VectorTuple<F> shifted = twisted_shift(t, d);
  for (int i = 1; i <= d - 1; ++i) {
    const VectorTuple<F> s = sigma(i, t);
    if (!is_consecutively_generic(s)) rep.generic_preserved = false;
    compare("periodicity", i, i, sigma(i, shifted), twisted_shift(s, d));
  }
  for (int i = 1; i <= d - 1; ++i) {
    for (int j = i + 2; j <= d - 1; ++j) compare("commutation", i, j, sigma(i, sigma(j, t)), sigma(j, sigma(i, t)));
  }
  for (int i = 1; i + 1 <= d - 1; ++i) {
    compare("braid", i, i + 1, sigma(i, sigma(i + 1, sigma(i, t))), sigma(i + 1, sigma(i, sigma(i + 1, t))));
  }
  return rep;
}

// Tuple with entries drawn uniformly from [-10, 10] (rational) or F_p, from
// the stream (master, index). Redraws until consecutively generic.
VectorTuple<Rational> random_rational_tuple(int k, int n, std::uint64_t master, std::uint64_t index);
VectorTuple<Fp> random_prime_tuple(int k, int n, std::uint64_t master, std::uint64_t index);

}  // namespace grascat
