#include "grascat/braid.hpp"

#include <random>

namespace grascat {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

template <class F, class Draw>
VectorTuple<F> draw_tuple(int k, int n, std::uint64_t master, std::uint64_t index, Draw draw) {
  require(k >= 1 && n >= k, ErrorCode::BadParameters, "need 1 <= k <= n");
  std::mt19937_64 rng(mix(master ^ mix(index ^ 0x5bd1e995ULL)));
  while (true) {
    VectorTuple<F> t{k, n, std::vector<std::vector<F>>(n, std::vector<F>(k))};
    for (auto& v : t.vectors) {
      for (auto& x : v) x = draw(rng);
    }
    if (is_consecutively_generic(t)) return t;
  }
}

}  // namespace

VectorTuple<Rational> random_rational_tuple(int k, int n, std::uint64_t master, std::uint64_t index) {
  std::uniform_int_distribution<long> dist(-10, 10);
  return draw_tuple<Rational>(k, n, master, index, [&](std::mt19937_64& rng) { return Rational(dist(rng)); });
}

VectorTuple<Fp> random_prime_tuple(int k, int n, std::uint64_t master, std::uint64_t index) {
  std::uniform_int_distribution<long long> dist(0, static_cast<long long>(Fp::kModulus) - 1);
  return draw_tuple<Fp>(k, n, master, index, [&](std::mt19937_64& rng) { return Fp(dist(rng)); });
}

}  // namespace grascat
