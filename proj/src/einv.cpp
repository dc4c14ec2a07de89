#include "grascat/einv.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>
#include <thread>
#include <tuple>

#include "grascat/error.hpp"
#include "grascat/ksubset.hpp"

namespace grascat {

std::string to_string(FieldKind f) { return f == FieldKind::Rational ? "rational" : "prime 2147483647"; }

FieldKind field_from_string(const std::string& s) {
  if (s == "rational" || s == "Q") return FieldKind::Rational;
  if (s == "prime" || s == "p" || s == "2147483647") return FieldKind::Prime;
  fail(ErrorCode::BadParameters, "unknown field '" + s + "'");
}

TwoTermComplex zero_complex(const Algebra& a, std::vector<int> neg, std::vector<int> pos) {
  TwoTermComplex c;
  c.algebra = &a;
  c.neg = std::move(neg);
  c.pos = std::move(pos);
  c.map.resize(c.pos.size());
  for (std::size_t t = 0; t < c.pos.size(); ++t) {
    c.map[t].resize(c.neg.size());
    for (std::size_t s = 0; s < c.neg.size(); ++s) {
      c.map[t][s].assign(a.hom_dim(c.neg[s], c.pos[t]), Rational(0));
    }
  }
  return c;
}

TwoTermComplex complex_from_matrix(const Algebra& a, const std::vector<std::string>& neg,
                                   const std::vector<std::string>& pos, const std::vector<std::vector<long>>& matrix) {
  std::vector<int> ni, pi;
  for (const auto& v : neg) ni.push_back(a.vertex_index(v));
  for (const auto& v : pos) pi.push_back(a.vertex_index(v));
  require(matrix.size() == pi.size(), ErrorCode::BadParameters, "matrix needs one row per target summand");
  TwoTermComplex c = zero_complex(a, ni, pi);
  for (std::size_t t = 0; t < pi.size(); ++t) {
    require(matrix[t].size() == ni.size(), ErrorCode::BadParameters, "matrix needs one column per source summand");
    for (std::size_t s = 0; s < ni.size(); ++s) {
      if (matrix[t][s] == 0) continue;
      require(a.hom_dim(ni[s], pi[t]) == 1, ErrorCode::BadParameters,
              "Hom(P_" + neg[s] + ", P_" + pos[t] + ") is not one-dimensional");
      c.map[t][s][0] = Rational(matrix[t][s]);
    }
  }
  return c;
}

namespace {

template <class F>
F lift(const Rational& q) {
  if constexpr (std::is_same_v<F, Fp>) {
    return Fp::from_rational(q);
  } else {
    return q;
  }
}

template <class F>
int e_pair_in(const TwoTermComplex& f, const TwoTermComplex& g) {
  const Algebra& a = *f.algebra;
  // Coordinates of Hom(F_{-1}, G_0): blocks (s, t') in order.
  std::vector<std::vector<int>> offset(f.neg.size(), std::vector<int>(g.pos.size()));
  int dim = 0;
  for (std::size_t s = 0; s < f.neg.size(); ++s) {
    for (std::size_t tp = 0; tp < g.pos.size(); ++tp) {
      offset[s][tp] = dim;
      dim += a.hom_dim(f.neg[s], g.pos[tp]);
    }
  }
  if (dim == 0) return 0;
  Matrix<F> rows;
  // u ranges over Hom(F_{-1}, G_{-1}); its image is g o u.
  for (std::size_t s = 0; s < f.neg.size(); ++s) {
    for (std::size_t sp = 0; sp < g.neg.size(); ++sp) {
      const int i = f.neg[s], j = g.neg[sp];
      for (int x = 0; x < a.hom_dim(i, j); ++x) {
        std::vector<F> row(dim, F(0));
        for (std::size_t tp = 0; tp < g.pos.size(); ++tp) {
          const int l = g.pos[tp];
          const auto& coeffs = g.map[tp][sp];
          for (std::size_t y = 0; y < coeffs.size(); ++y) {
            if (is_zero(coeffs[y])) continue;
            const F cy = lift<F>(coeffs[y]);
            const auto& prod = a.compose(i, j, l, x, static_cast<int>(y));
            for (std::size_t w = 0; w < prod.size(); ++w) {
              if (!is_zero(prod[w])) row[offset[s][tp] + w] += cy * lift<F>(prod[w]);
            }
          }
        }
        rows.push_back(std::move(row));
      }
    }
  }
  // v ranges over Hom(F_0, G_0); its image is v o f.
  for (std::size_t t = 0; t < f.pos.size(); ++t) {
    for (std::size_t tp = 0; tp < g.pos.size(); ++tp) {
      const int j = f.pos[t], l = g.pos[tp];
      for (int z = 0; z < a.hom_dim(j, l); ++z) {
        std::vector<F> row(dim, F(0));
        for (std::size_t s = 0; s < f.neg.size(); ++s) {
          const int i = f.neg[s];
          const auto& coeffs = f.map[t][s];
          for (std::size_t x = 0; x < coeffs.size(); ++x) {
            if (is_zero(coeffs[x])) continue;
            const F cx = lift<F>(coeffs[x]);
            const auto& prod = a.compose(i, j, l, static_cast<int>(x), z);
            for (std::size_t w = 0; w < prod.size(); ++w) {
              if (!is_zero(prod[w])) row[offset[s][tp] + w] += cx * lift<F>(prod[w]);
            }
          }
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return dim - rank(std::move(rows), dim);
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

void check_shared(const TwoTermComplex& f, const TwoTermComplex& g) {
  require(f.algebra != nullptr && f.algebra == g.algebra, ErrorCode::AlgebraMismatch,
          "complexes live over different algebras");
}

// Runs `eval` on sample indices 0..samples-1 and keeps the minimum. Indices
// are processed in blocks of `workers`; the scan stops after the first block
// that attains 0, so the value and witness do not depend on the worker count.
template <class Eval>
EValueReport minimize(int samples, int workers, FieldKind field, Eval eval) {
  require(samples >= 1, ErrorCode::BadParameters, "need at least one sample");
  workers = std::max(1, workers);
  EValueReport rep;
  rep.samples = samples;
  rep.field = to_string(field);
  rep.value = std::numeric_limits<int>::max();
  for (int start = 0; start < samples; start += workers) {
    const int stop = std::min(samples, start + workers);
    std::vector<int> values(stop - start);
    if (workers == 1) {
      values[0] = eval(static_cast<std::uint64_t>(start));
    } else {
      std::vector<std::thread> pool;
      for (int idx = start; idx < stop; ++idx) {
        pool.emplace_back([&, idx] { values[idx - start] = eval(static_cast<std::uint64_t>(idx)); });
      }
      for (auto& th : pool) th.join();
    }
    for (int idx = start; idx < stop; ++idx) {
      if (values[idx - start] < rep.value) {
        rep.value = values[idx - start];
        rep.witness = idx;
      }
    }
    if (rep.value == 0) break;
  }
  rep.certified = rep.value == 0;
  return rep;
}

}  // namespace

int e_pair(const TwoTermComplex& f, const TwoTermComplex& g, FieldKind field) {
  check_shared(f, g);
  return field == FieldKind::Rational ? e_pair_in<Rational>(f, g) : e_pair_in<Fp>(f, g);
}

int ee_symmetrized(const TwoTermComplex& f, const TwoTermComplex& g, FieldKind field) {
  return e_pair(f, g, field) + e_pair(g, f, field);
}

ComplexShape shape_of(const GVector& g, const Seed& s, const Algebra& a) {
  const Quiver& q = s.quiver;
  require(static_cast<int>(g.coords.size()) == q.m, ErrorCode::DimensionMismatch,
          "g-vector length differs from the seed size");
  ComplexShape shape;
  for (int v = 0; v < q.n_mut; ++v) {
    const long long c = g.coords[v];
    if (c == 0) continue;
    const Tableau& t = s.labels[v];
    require(t.columns() == 1, ErrorCode::BadParameters, "seed label " + to_string(t) + " is not a single column");
    const int idx = a.vertex_index(label(make_ksubset(t.n, t.column(0))));
    auto& side = c > 0 ? shape.pos : shape.neg;
    for (long long r = 0; r < (c > 0 ? c : -c); ++r) side.push_back(idx);
  }
  return shape;
}

std::uint64_t master_seed_from_env() {
  const char* env = std::getenv("GRASCAT_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  require(end != nullptr && *end == '\0', ErrorCode::BadParameters, "GRASCAT_SEED must be an unsigned integer");
  return v;
}

TwoTermComplex random_complex(const Algebra& a, const ComplexShape& shape, FieldKind field, std::uint64_t master,
                              std::uint64_t index) {
  std::mt19937_64 rng(splitmix(master ^ splitmix(index)));
  std::uniform_int_distribution<long> small(-10, 10);
  std::uniform_int_distribution<long> big(0, static_cast<long>(Fp::kModulus) - 1);
  TwoTermComplex c = zero_complex(a, shape.neg, shape.pos);
  for (auto& row : c.map) {
    for (auto& block : row) {
      for (auto& x : block) x = Rational(field == FieldKind::Rational ? small(rng) : big(rng));
    }
  }
  return c;
}

EValueReport generic_e(const Algebra& a, const ComplexShape& shape, const SamplingOptions& opt) {
  return minimize(opt.samples, opt.workers, opt.field, [&](std::uint64_t idx) {
    TwoTermComplex f = random_complex(a, shape, opt.field, opt.master_seed, idx);
    return e_pair(f, f, opt.field);
  });
}

EValueReport generic_e(const GVector& g, const Seed& s, const Algebra& a, const SamplingOptions& opt) {
  return generic_e(a, shape_of(g, s, a), opt);
}

EValueReport generic_e_pair(const Algebra& a, const ComplexShape& g, const ComplexShape& h,
                            const SamplingOptions& opt) {
  if (std::tie(h.neg, h.pos) < std::tie(g.neg, g.pos)) return generic_e_pair(a, h, g, opt);
  return minimize(opt.samples, opt.workers, opt.field, [&](std::uint64_t idx) {
    TwoTermComplex f1 = random_complex(a, g, opt.field, opt.master_seed, 2 * idx);
    TwoTermComplex f2 = random_complex(a, h, opt.field, opt.master_seed, 2 * idx + 1);
    return ee_symmetrized(f1, f2, opt.field);
  });
}

EValueReport generic_e_pair(const GVector& g, const GVector& h, const Seed& s, const Algebra& a,
                            const SamplingOptions& opt) {
  return generic_e_pair(a, shape_of(g, s, a), shape_of(h, s, a), opt);
}

Verdict is_real_g(const GVector& g, const Seed& s, const Algebra& a, const SamplingOptions& opt) {
  Verdict v;
  v.report = generic_e(g, s, a, opt);
  v.value = v.report.value == 0;
  return v;
}

Verdict are_compatible(const GVector& g, const GVector& h, const Seed& s, const Algebra& a,
                       const SamplingOptions& opt) {
  Verdict v;
  v.report = generic_e_pair(g, h, s, a, opt);
  v.value = v.report.value == 0;
  return v;
}

Verdict is_exchange_pair(const GVector& g, const GVector& h, const Seed& s, const Algebra& a,
                         const SamplingOptions& opt) {
  Verdict v;
  v.report = generic_e_pair(g, h, s, a, opt);
  v.value = v.report.value == 1;
  return v;
}

}  // namespace grascat
