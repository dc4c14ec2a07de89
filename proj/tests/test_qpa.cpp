#include "doctest.h"
#include "grascat/error.hpp"
#include "grascat/hl.hpp"
#include "grascat/io.hpp"
#include "grascat/qpa.hpp"

using namespace grascat;

namespace {

// Dimensions copied by hand from the two printed Hom tables: entry
// [row][col] is dim Hom(P_row, P_col).
const std::vector<std::string> kOrder39{"125", "126", "134", "128", "156", "167"};
const int kTable39[6][6] = {{1, 1, 0, 1, 1, 1}, {0, 1, 0, 1, 1, 1}, {0, 0, 1, 0, 1, 1},
                            {0, 0, 0, 1, 0, 0}, {1, 1, 0, 0, 1, 1}, {0, 1, 0, 0, 0, 1}};
const std::vector<std::string> kOrder48{"1236", "1245", "1267", "1456"};
const int kTable48[4][4] = {{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};

const Algebra& gr39() {
  static const Algebra a = build_algebra(qp_from_json(load_fixture("qp_gr39")));
  return a;
}

const Algebra& gr48() {
  static const Algebra a = build_algebra(qp_from_json(load_fixture("qp_gr48")));
  return a;
}

int total_dim(const Algebra& a) {
  int t = 0;
  for (int i = 0; i < a.vertex_count(); ++i) {
    for (int j = 0; j < a.vertex_count(); ++j) t += a.hom_dim(i, j);
  }
  return t;
}

QuiverWithPotential qp_of(std::vector<std::string> vertices, std::vector<std::tuple<std::string, int, int>> arrows,
                          std::vector<PotentialTerm> potential) {
  QuiverWithPotential qp;
  qp.vertices = std::move(vertices);
  for (auto& [id, from, to] : arrows) qp.arrows.push_back({id, from, to});
  qp.potential = std::move(potential);
  return qp;
}

}  // namespace

TEST_CASE("Hom dimensions for the 3-subset fixture match the printed table") {
  const Algebra& a = gr39();
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      CHECK_MESSAGE(a.hom_dim(a.vertex_index(kOrder39[r]), a.vertex_index(kOrder39[c])) == kTable39[r][c],
                    kOrder39[r] << " -> " << kOrder39[c]);
    }
  }
  CHECK(a.hom_dim(a.vertex_index("125"), a.vertex_index("128")) == 1);
  CHECK(a.hom_dim(a.vertex_index("134"), a.vertex_index("128")) == 0);
}

TEST_CASE("Hom dimensions for the 4-subset fixture match the printed table") {
  const Algebra& a = gr48();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(a.hom_dim(a.vertex_index(kOrder48[r]), a.vertex_index(kOrder48[c])) == kTable48[r][c]);
    }
  }
}

TEST_CASE("endomorphism rings of the tabulated projectives are one-dimensional") {
  const std::vector<std::pair<const Algebra*, std::vector<std::string>>> cases{
      {&gr39(), {"125", "126", "134", "128", "156", "167"}}, {&gr48(), {"1236", "1245", "1267", "1456"}}};
  for (const auto& [a, names] : cases) {
    for (const auto& name : names) {
      const int i = a->vertex_index(name);
      CHECK(a->hom_dim(i, i) == 1);
    }
    for (int i = 0; i < a->vertex_count(); ++i) {
      CHECK(a->hom_dim(i, i) >= 1);
      CHECK(a->degree(i, i, a->identity(i)) == 0);
    }
  }
  // The cycle through 1256 survives in the Jacobian algebra.
  CHECK(gr48().hom_dim(gr48().vertex_index("1256"), gr48().vertex_index("1256")) == 2);
}

TEST_CASE("composition is associative, unital and graded") {
  for (const Algebra* a : {&gr39(), &gr48()}) {
    CHECK(check_associativity(*a));
    CHECK(check_identity_laws(*a));
    const int nv = a->vertex_count();
    for (int i = 0; i < nv; ++i) {
      for (int j = 0; j < nv; ++j) {
        for (int l = 0; l < nv; ++l) {
          for (int x = 0; x < a->hom_dim(i, j); ++x) {
            for (int y = 0; y < a->hom_dim(j, l); ++y) {
              const auto& c = a->compose(i, j, l, x, y);
              for (int z = 0; z < static_cast<int>(c.size()); ++z) {
                if (!is_zero(c[z])) CHECK(a->degree(i, l, z) == a->degree(i, j, x) + a->degree(j, l, y));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("cyclic derivatives") {
  QuiverWithPotential qp = qp_from_json(load_fixture("qp_gr39"));
  auto rels = potential_relations(qp);
  REQUIRE(rels.size() == qp.arrows.size());
  const Relation& inner = rels[qp.arrow_index("alpha2")];
  REQUIRE(inner.terms.size() == 2);
  CHECK(inner.terms[0].first + inner.terms[1].first == 0);
  std::vector<std::string> paths{path_label(qp, inner.terms[0].second), path_label(qp, inner.terms[1].second)};
  std::sort(paths.begin(), paths.end());
  CHECK(paths == std::vector<std::string>{"beta1 gamma1", "gamma2 delta2"});
  const Relation& boundary = rels[qp.arrow_index("alpha1")];
  REQUIRE(boundary.terms.size() == 1);
  CHECK(path_label(qp, boundary.terms[0].second) == "gamma1 delta1");

  QuiverWithPotential loose = qp_of({"a", "b", "c", "d"}, {{"x", 0, 1}, {"y", 1, 2}, {"z", 2, 0}, {"w", 2, 3}},
                                    {PotentialTerm{1, {0, 1, 2}}});
  auto lr = potential_relations(loose);
  CHECK(lr[3].terms.empty());
  CHECK(lr[0].terms.size() == 1);
}

TEST_CASE("quivers without arrows give semisimple algebras") {
  Algebra a = build_algebra(qp_of({"p", "q", "r"}, {}, {}));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(a.hom_dim(i, j) == (i == j ? 1 : 0));
  }
}

TEST_CASE("an oriented cycle without potential is rejected at the cap") {
  QuiverWithPotential qp = qp_of({"a", "b", "c"}, {{"x", 0, 1}, {"y", 1, 2}, {"z", 2, 0}}, {});
  try {
    build_algebra(qp, 8);
    FAIL("expected NotFiniteDimensional");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFiniteDimensional);
  }
  QuiverWithPotential bad = qp_of({"a", "b"}, {{"x", 0, 1}, {"y", 0, 1}}, {PotentialTerm{1, {0, 1}}});
  CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("Hom convention: paths run from the target projective to the source") {
  QuiverWithPotential qp = qp_of({"x", "y"}, {{"a", 0, 1}}, {});
  Algebra a = build_algebra(qp);
  CHECK(a.hom_dim(1, 0) == 1);
  CHECK(a.hom_dim(0, 1) == 0);

  using T = Algebra::Tensor;
  std::map<std::tuple<int, int, int>, T> comp;
  comp[{0, 0, 0}] = T{{{Rational(1)}}};
  comp[{1, 1, 1}] = T{{{Rational(1)}}};
  comp[{1, 0, 0}] = T{{{Rational(1)}}};
  comp[{1, 1, 0}] = T{{{Rational(1)}}};
  Algebra table = Algebra::from_table({"x", "y"}, {{{"e_x"}, {}}, {{"a"}, {"e_y"}}}, {{{0}, {}}, {{1}, {0}}}, {0, 0},
                                      comp);
  CHECK(check_associativity(table));
  CHECK(check_identity_laws(table));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      REQUIRE(table.hom_dim(i, j) == a.hom_dim(i, j));
      for (int l = 0; l < 2; ++l) {
        for (int x = 0; x < a.hom_dim(i, j); ++x) {
          for (int y = 0; y < a.hom_dim(j, l); ++y) CHECK(table.compose(i, j, l, x, y) == a.compose(i, j, l, x, y));
        }
      }
    }
  }
  CHECK_THROWS_AS(Algebra::from_table({"x"}, {}, {}, {}, {}), Error);
}

TEST_CASE("generated triangle potentials reproduce the shipped fixtures") {
  Seed s = grassmannian_initial_seed(3, 9);
  std::vector<std::string> names;
  for (const auto& t : s.labels) names.push_back(label(make_ksubset(9, t.column(0))));
  Algebra generated = build_algebra(triangle_potential_opposite(s.quiver, names));
  const Algebra& fixture = gr39();
  REQUIRE(generated.vertex_count() == fixture.vertex_count());
  for (int i = 0; i < generated.vertex_count(); ++i) {
    for (int j = 0; j < generated.vertex_count(); ++j) {
      CHECK(generated.hom_dim(i, j) == fixture.hom_dim(fixture.vertex_index(generated.vertices()[i]),
                                                        fixture.vertex_index(generated.vertices()[j])));
    }
  }
}

TEST_CASE("the truncated Hernandez-Leclerc fixture") {
  Json j = load_fixture("qp_hl_gamma");
  QuiverWithPotential qp = qp_from_json(j);
  CHECK(qp.vertices.size() == 10);
  CHECK(qp.arrows.size() == 17);
  CHECK(qp.potential.size() == 8);
  Algebra a = build_algebra(qp);
  CHECK(total_dim(a) == 55);
  CHECK(check_associativity(a));

  Seed g = gamma_seed(j["k"].get<int>(), j["ell"].get<int>());
  std::vector<std::string> names;
  for (const auto& t : g.labels) names.push_back(label(make_ksubset(g.n(), t.column(0))));
  Algebra regenerated = build_algebra(triangle_potential_opposite(g.quiver, names));
  REQUIRE(regenerated.vertex_count() == a.vertex_count());
  for (int x = 0; x < a.vertex_count(); ++x) {
    for (int y = 0; y < a.vertex_count(); ++y) {
      CHECK(a.hom_dim(x, y) == regenerated.hom_dim(regenerated.vertex_index(a.vertices()[x]),
                                                    regenerated.vertex_index(a.vertices()[y])));
    }
  }
}

TEST_CASE("JSON round trip of a quiver with potential") {
  QuiverWithPotential qp = qp_from_json(load_fixture("qp_gr48"));
  QuiverWithPotential back = qp_from_json(to_json(qp));
  CHECK(back.vertices == qp.vertices);
  REQUIRE(back.arrows.size() == qp.arrows.size());
  for (std::size_t x = 0; x < qp.arrows.size(); ++x) {
    CHECK(back.arrows[x].id == qp.arrows[x].id);
    CHECK(back.arrows[x].from == qp.arrows[x].from);
    CHECK(back.arrows[x].to == qp.arrows[x].to);
  }
  REQUIRE(back.potential.size() == qp.potential.size());
  for (std::size_t x = 0; x < qp.potential.size(); ++x) {
    CHECK(back.potential[x].sign == qp.potential[x].sign);
    CHECK(back.potential[x].cycle == qp.potential[x].cycle);
  }
}
