#include <random>

#include "doctest.h"
#include "grascat/einv.hpp"
#include "grascat/error.hpp"
#include "grascat/gvec.hpp"
#include "grascat/io.hpp"

using namespace grascat;

namespace {

const Algebra& gr39() {
  static const Algebra a = build_algebra(qp_from_json(load_fixture("qp_gr39")));
  return a;
}

const Seed& seed39() {
  static const Seed s = grassmannian_initial_seed(3, 9);
  return s;
}

GVector g1() { return g_vector(make_tableau(3, 9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), seed39()); }

const std::vector<std::string> kNeg{"125", "126", "134"};
const std::vector<std::string> kPos{"128", "156", "167"};

int hom_total(const Algebra& a, const std::vector<int>& from, const std::vector<int>& to) {
  int t = 0;
  for (int x : from) {
    for (int y : to) t += a.hom_dim(x, y);
  }
  return t;
}

GVector random_small_g(std::mt19937_64& rng, int m, int n_mut) {
  GVector g{"gr3_9", std::vector<long long>(m, 0)};
  const int support = 1 + static_cast<int>(rng() % 3);
  for (int s = 0; s < support; ++s) g.coords[rng() % n_mut] = static_cast<long long>(rng() % 2) * 2 - 1;
  return g;
}

}  // namespace

TEST_CASE("field names") {
  CHECK(field_from_string("rational") == FieldKind::Rational);
  CHECK(field_from_string("prime") == FieldKind::Prime);
  CHECK(to_string(FieldKind::Prime) == "prime 2147483647");
  CHECK_THROWS_AS(field_from_string("real"), Error);
}

TEST_CASE("complexes without a negative term have vanishing E") {
  const Algebra& a = gr39();
  TwoTermComplex p = zero_complex(a, {}, {a.vertex_index("125"), a.vertex_index("128")});
  TwoTermComplex q = zero_complex(a, {a.vertex_index("134")}, {a.vertex_index("156")});
  CHECK(e_pair(p, p) == 0);
  CHECK(e_pair(p, q) == 0);
}

TEST_CASE("the two printed witnesses") {
  const Algebra& a = gr39();
  TwoTermComplex b1 = complex_from_matrix(a, kNeg, kPos, {{0, 1, 0}, {0, 1, 1}, {1, 0, 0}});
  TwoTermComplex b2 = complex_from_matrix(a, kNeg, kPos, {{0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  for (FieldKind f : {FieldKind::Rational, FieldKind::Prime}) {
    CHECK(e_pair(b1, b2, f) == 0);
    CHECK(e_pair(b2, b1, f) == 0);
    CHECK(ee_symmetrized(b1, b2, f) == 0);
    CHECK(e_pair(b1, b1, f) == 2);
    CHECK(e_pair(b2, b2, f) == 2);
  }
  CHECK_THROWS_AS(complex_from_matrix(a, kNeg, kPos, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}), Error);
}

TEST_CASE("complexes over different algebras are rejected") {
  const Algebra& a = gr39();
  Algebra other = build_algebra(qp_from_json(load_fixture("qp_gr48")));
  TwoTermComplex x = zero_complex(a, {0}, {1});
  TwoTermComplex y = zero_complex(other, {0}, {1});
  try {
    e_pair(x, y);
    FAIL("expected AlgebraMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlgebraMismatch);
  }
}

TEST_CASE("generic value of the non-real vector") {
  GVector g = g1();
  ComplexShape shape = shape_of(g, seed39(), gr39());
  CHECK(shape.neg.size() == 3);
  CHECK(shape.pos.size() == 3);
  for (FieldKind f : {FieldKind::Rational, FieldKind::Prime}) {
    SamplingOptions opt;
    opt.field = f;
    EValueReport r = generic_e(g, seed39(), gr39(), opt);
    CHECK(r.value == 1);
    CHECK_FALSE(r.certified);
    CHECK(r.samples == 20);
    Verdict real = is_real_g(g, seed39(), gr39(), opt);
    CHECK_FALSE(real.value);
    CHECK(real.conjectural);
    EValueReport pair = generic_e_pair(g, g, seed39(), gr39(), opt);
    CHECK(pair.value == 0);
    CHECK(pair.certified);
  }
}

TEST_CASE("multiples of the non-real vector stay non-rigid") {
  for (long long t : {2LL, 3LL}) {
    GVector g = g1();
    for (auto& c : g.coords) c *= t;
    SamplingOptions opt;
    opt.field = FieldKind::Prime;
    opt.samples = 5;
    EValueReport r = generic_e(g, seed39(), gr39(), opt);
    CHECK(r.value >= 1);
  }
}

TEST_CASE("seed variables are rigid and compatible") {
  SamplingOptions opt;
  for (int v = 0; v < 10; ++v) {
    GVector e{"gr3_9", std::vector<long long>(19, 0)};
    e.coords[v] = 1;
    EValueReport r = generic_e(e, seed39(), gr39(), opt);
    CHECK(r.value == 0);
    CHECK(r.certified);
    CHECK(r.witness == 0);
    CHECK(are_compatible(e, e, seed39(), gr39(), opt).value);
  }
}

TEST_CASE("the exchange pair of Gr(2,4) over its generated algebra") {
  Seed s = grassmannian_initial_seed(2, 4);
  std::vector<std::string> names;
  for (const auto& t : s.labels) names.push_back(label(make_ksubset(4, t.column(0))));
  Algebra a = build_algebra(triangle_potential_opposite(s.quiver, names));
  REQUIRE(a.vertex_count() == 1);
  GVector g13 = g_vector(column_tableau(make_ksubset(4, {1, 3})), s);
  GVector g24 = g_vector(column_tableau(make_ksubset(4, {2, 4})), s);
  CHECK(g24.coords[0] == -1);
  SamplingOptions opt;
  Verdict v = is_exchange_pair(g13, g24, s, a, opt);
  CHECK(v.value);
  CHECK(v.report.value == 1);
  CHECK_FALSE(are_compatible(g13, g24, s, a, opt).value);
  CHECK(is_real_g(g24, s, a, opt).value);

  // By hand: f = (P -> 0), h = (0 -> P) and the identity P -> P.
  TwoTermComplex f = zero_complex(a, {0}, {});
  TwoTermComplex h = zero_complex(a, {}, {0});
  TwoTermComplex id = complex_from_matrix(a, {"13"}, {"13"}, {{1}});
  CHECK(e_pair(f, h) == 1);
  CHECK(e_pair(h, f) == 0);
  CHECK(e_pair(id, id) == 0);
}

TEST_CASE("E-invariant bounds and symmetrisation on random complexes") {
  const Algebra& a = gr39();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    ComplexShape s1{{static_cast<int>(rng() % 10)}, {static_cast<int>(rng() % 10), static_cast<int>(rng() % 10)}};
    ComplexShape s2{{static_cast<int>(rng() % 10), static_cast<int>(rng() % 10)}, {static_cast<int>(rng() % 10)}};
    TwoTermComplex f = random_complex(a, s1, FieldKind::Rational, 9, trial);
    TwoTermComplex g = random_complex(a, s2, FieldKind::Rational, 9, 1000 + trial);
    const int efg = e_pair(f, g);
    CHECK(efg >= 0);
    CHECK(efg <= hom_total(a, f.neg, g.pos));
    CHECK(ee_symmetrized(f, g) == ee_symmetrized(g, f));
    CHECK(ee_symmetrized(f, f) == 2 * e_pair(f, f));
    CHECK(e_pair(f, g, FieldKind::Rational) == e_pair(f, g, FieldKind::Prime));
  }
}

TEST_CASE("generic values on random small g-vectors") {
  std::mt19937_64 rng(19);
  SamplingOptions opt;
  opt.samples = 8;
  opt.field = FieldKind::Prime;
  for (int trial = 0; trial < 40; ++trial) {
    GVector g = random_small_g(rng, 19, 10);
    GVector h = random_small_g(rng, 19, 10);
    EValueReport eg = generic_e(g, seed39(), gr39(), opt);
    EValueReport gg = generic_e_pair(g, g, seed39(), gr39(), opt);
    CHECK(gg.value <= 2 * eg.value);
    CHECK(generic_e_pair(g, h, seed39(), gr39(), opt).value == generic_e_pair(h, g, seed39(), gr39(), opt).value);
  }
}

TEST_CASE("sampling is independent of the worker count and monotone in the budget") {
  GVector g = g1();
  for (FieldKind f : {FieldKind::Rational, FieldKind::Prime}) {
    SamplingOptions one;
    one.field = f;
    one.master_seed = 77;
    one.samples = 12;
    SamplingOptions many = one;
    many.workers = 4;
    EValueReport a = generic_e(g, seed39(), gr39(), one);
    EValueReport b = generic_e(g, seed39(), gr39(), many);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    EValueReport pa = generic_e_pair(g, g, seed39(), gr39(), one);
    EValueReport pb = generic_e_pair(g, g, seed39(), gr39(), many);
    CHECK(pa.value == pb.value);
    CHECK(pa.witness == pb.witness);
    int last = 1 << 30;
    for (int samples : {1, 2, 4, 8}) {
      SamplingOptions o = one;
      o.samples = samples;
      const int v = generic_e(g, seed39(), gr39(), o).value;
      CHECK(v <= last);
      last = v;
    }
  }
}

TEST_CASE("the master seed is read from the environment") {
  setenv("GRASCAT_SEED", "1234", 1);
  CHECK(master_seed_from_env() == 1234);
  setenv("GRASCAT_SEED", "x", 1);
  CHECK_THROWS_AS(master_seed_from_env(), Error);
  unsetenv("GRASCAT_SEED");
  CHECK(master_seed_from_env() == 0);
}
