#include <random>
#include <set>

#include "doctest.h"
#include "grascat/cluster.hpp"
#include "grascat/error.hpp"
#include "grascat/io.hpp"
#include "support.hpp"

using namespace grascat;
namespace gt = grascat::testing;

namespace {

std::vector<std::string> label_list(const Seed& s, int from, int to) {
  std::vector<std::string> out;
  for (int v = from; v < to; ++v) out.push_back(label(make_ksubset(s.n(), s.labels[v].column(0))));
  return out;
}

}  // namespace

TEST_CASE("linear A3 quiver mutated at its middle vertex") {
  Quiver q = make_quiver(3, 3, {{0, 1}, {1, 2}});
  Quiver m = mutate_quiver(q, 1);
  CHECK(m.arrows() == std::vector<std::pair<int, int>>{{0, 2}, {1, 0}, {2, 1}});
  CHECK(mutate_quiver(m, 1) == q);
}

TEST_CASE("quiver construction rejects loops") {
  CHECK_THROWS_AS(make_quiver(2, 2, {{0, 0}}), Error);
  CHECK_THROWS_AS(make_quiver(2, 2, {{0, 2}}), Error);
  Quiver q = make_quiver(2, 2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(q.arrows() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("Gr(2,4) initial seed and its single exchange") {
  Seed s = grassmannian_initial_seed(2, 4);
  REQUIRE(s.quiver.n_mut == 1);
  CHECK(label_list(s, 0, 1) == std::vector<std::string>{"13"});
  Quiver m = mutate_quiver(s.quiver, 0);
  int incident = 0;
  for (int v = 1; v < s.quiver.m; ++v) {
    if (s.quiver.b[0][v] != 0) {
      ++incident;
      CHECK(m.b[0][v] == -s.quiver.b[0][v]);
    }
  }
  CHECK(incident == 4);
  Seed t = mutate_seed(s, 0);
  CHECK(reduce(t.labels[0]) == column_tableau(make_ksubset(4, {2, 4})));
  Seed back = mutate_seed(t, 0);
  CHECK(back.quiver == s.quiver);
  CHECK(back.labels == s.labels);
  CHECK_THROWS_AS(mutate_seed(s, 1), Error);
}

TEST_CASE("initial seed label orders") {
  Seed s39 = grassmannian_initial_seed(3, 9);
  CHECK(label_list(s39, 0, 10) ==
        std::vector<std::string>{"124", "125", "126", "127", "128", "134", "145", "156", "167", "178"});
  CHECK(label_list(s39, 10, 19) ==
        std::vector<std::string>{"123", "234", "345", "456", "567", "678", "789", "129", "189"});
  Seed s48 = grassmannian_initial_seed(4, 8);
  CHECK(label_list(s48, 0, 9) ==
        std::vector<std::string>{"1235", "1236", "1237", "1245", "1256", "1267", "1345", "1456", "1567"});
  CHECK(label_list(s48, 9, 17) ==
        std::vector<std::string>{"1234", "2345", "3456", "4567", "5678", "1238", "1278", "1678"});
  CHECK_THROWS_AS(grassmannian_initial_seed(1, 4), Error);
}

TEST_CASE("Gr(5,9) seed agrees with the drawn arrow fixture") {
  Json drawn_fixture = load_fixture("gr59_seed_arrows");
  Seed s = grassmannian_initial_seed(5, 9);
  auto index = [&](const Json& c) {
    auto p = std::make_pair(c[0].get<int>(), c[1].get<int>());
    auto it = std::find(s.quiver.coords.begin(), s.quiver.coords.end(), p);
    REQUIRE(it != s.quiver.coords.end());
    return static_cast<int>(it - s.quiver.coords.begin());
  };
  std::set<std::pair<int, int>> drawn;
  for (const auto& a : drawn_fixture["arrows"]) drawn.insert({index(a[0]), index(a[1])});
  for (const auto& [u, v] : drawn) CHECK(s.quiver.b[u][v] == 1);
  for (const auto& [u, v] : s.quiver.arrows()) {
    if (s.quiver.is_mutable(u) || s.quiver.is_mutable(v)) CHECK(drawn.count({u, v}) == 1);
  }
  for (const auto& l : drawn_fixture["labels"]) {
    CHECK(label(make_ksubset(9, s.labels[index(l[0])].column(0))) == l[1].get<std::string>());
  }
}

TEST_CASE("matrix mutation matches the arrow-level rule on random quivers") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 3 + trial % 6;
    const int n_mut = 1 + trial % m;
    Quiver q = gt::random_quiver(rng, m, n_mut, 2);
    const int r = static_cast<int>(rng() % n_mut);
    Quiver mq = mutate_quiver(q, r);
    CHECK(gt::arrow_multiset(mq) == gt::mutate_arrow_list(gt::arrow_multiset(q), r, n_mut));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        long long expect = (i == r || j == r) ? -q.b[i][j]
                                               : q.b[i][j] + (static_cast<long long>(std::abs(q.b[i][r])) * q.b[r][j] +
                                                              static_cast<long long>(q.b[i][r]) * std::abs(q.b[r][j])) /
                                                                 2;
        if (i >= n_mut && j >= n_mut) expect = q.b[i][j];
        CHECK(mq.b[i][j] == expect);
      }
    }
    CHECK(mutate_quiver(mq, r) == q);
  }
}

TEST_CASE("frozen vertices cannot be mutated") {
  Quiver q = make_quiver(3, 1, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(mutate_quiver(q, 2), Error);
  try {
    mutate_quiver(q, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FrozenVertex);
  }
}

TEST_CASE("seed mutation is an involution along random walks") {
  std::mt19937_64 rng(7);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 6}, {3, 6}, {3, 7}, {3, 9}, {4, 8}}) {
    Seed s = grassmannian_initial_seed(k, n);
    for (int step = 0; step < 25; ++step) {
      const int r = static_cast<int>(rng() % s.quiver.n_mut);
      Seed t = mutate_seed(s, r);
      Seed back = mutate_seed(t, r);
      CHECK(back.quiver == s.quiver);
      for (int v = 0; v < s.quiver.m; ++v) CHECK(reduce(back.labels[v]) == reduce(s.labels[v]));
      for (int v = s.quiver.n_mut; v < s.quiver.m; ++v) CHECK(t.labels[v] == s.labels[v]);
      s = t;
    }
  }
}

TEST_CASE("exchange monomials of different weight are reported") {
  Seed s;
  s.name = "custom";
  s.quiver = make_quiver(3, 1, {{1, 0}, {0, 2}});
  s.labels = {column_tableau(make_ksubset(4, {1, 3})), column_tableau(make_ksubset(4, {1, 2})),
              column_tableau(make_ksubset(4, {1, 3}))};
  try {
    mutate_seed(s, 0);
    FAIL("expected IncomparableExchange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncomparableExchange);
  }
}

TEST_CASE("a rank-four variable of Gr(3,9) is reached by mutation") {
  Seed s = grassmannian_initial_seed(3, 9);
  for (int r : {0, 4, 6, 7, 8, 0, 3, 9}) s = mutate_seed(s, r);
  CHECK(reduce(s.labels[9]) == make_tableau(3, 9, {{1, 1, 3, 3}, {2, 2, 6, 7}, {4, 5, 8, 9}}));
}

TEST_CASE("exploration budgets") {
  Seed s24 = grassmannian_initial_seed(2, 4);
  ExploreResult zero = explore(s24, 0, 10);
  REQUIRE(zero.variables.size() == 1);
  CHECK(zero.variables[0].first == column_tableau(make_ksubset(4, {1, 3})));
  ExploreResult one = explore(s24, 1, 10);
  REQUIRE(one.variables.size() == 2);
  CHECK(one.variables[1].first == column_tableau(make_ksubset(4, {2, 4})));
  CHECK_FALSE(one.budget_exceeded);
  CHECK_THROWS_AS(explore(s24, -1, 10), Error);

  ExploreResult gr36 = explore(grassmannian_initial_seed(3, 6), 100, 100000);
  CHECK_FALSE(gr36.budget_exceeded);
  CHECK(gr36.variables.size() == 16);
  CHECK(gr36.seeds_visited == 50);
  int rank_two = 0;
  for (const auto& [t, g] : gr36.variables) rank_two += t.columns() == 2;
  CHECK(rank_two == 2);

  ExploreResult capped = explore(grassmannian_initial_seed(3, 6), 100, 5);
  CHECK(capped.budget_exceeded);
  CHECK(capped.seeds_visited == 5);
}

TEST_CASE("exploration is reproducible") {
  Seed s = grassmannian_initial_seed(3, 7);
  ExploreResult a = explore(s, 3, 200);
  ExploreResult b = explore(s, 3, 200);
  REQUIRE(a.variables.size() == b.variables.size());
  for (std::size_t x = 0; x < a.variables.size(); ++x) {
    CHECK(a.variables[x].first == b.variables[x].first);
    CHECK(a.variables[x].second == b.variables[x].second);
  }
}

TEST_CASE("mutation commutes with promoting every label") {
  std::mt19937_64 rng(19);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 6}, {3, 6}, {3, 7}, {3, 9}, {4, 8}}) {
    Seed s = grassmannian_initial_seed(k, n);
    for (int step = 0; step < 15; ++step) {
      Seed p = s;
      for (auto& t : p.labels) t = reduce(promote(t));
      const int r = static_cast<int>(rng() % s.quiver.n_mut);
      Seed a = mutate_seed(s, r);
      Seed b = mutate_seed(p, r);
      CHECK(reduce(promote(a.labels[r])) == reduce(b.labels[r]));
      s = a;
    }
  }
}
