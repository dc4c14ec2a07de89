#include "grascat/linalg.hpp"

namespace grascat {

Fp Fp::inverse() const {
  std::uint64_t base = v_;
  std::uint64_t exp = kModulus - 2;
  std::uint64_t acc = 1;
  while (exp > 0) {
    if (exp & 1U) acc = (acc * base) % kModulus;
    base = (base * base) % kModulus;
    exp >>= 1U;
  }
  return raw(acc);
}

Fp Fp::from_rational(const Rational& q) {
  mpz_class m(static_cast<unsigned long>(kModulus));
  mpz_class num = q.get_num() % m;
  mpz_class den = q.get_den() % m;
  if (num < 0) num += m;
  Fp n(static_cast<long long>(num.get_si()));
  Fp d(static_cast<long long>(den.get_si()));
  return n / d;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Fp& x) { return std::to_string(x.value()); }

LinearSolution solve_rational(const Matrix<Rational>& a, const std::vector<Rational>& b) {
  const int columns = a.empty() ? 0 : static_cast<int>(a.front().size());
  Matrix<Rational> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  std::vector<int> pivots = rref(aug, columns + 1);
  LinearSolution out;
  if (!pivots.empty() && pivots.back() == columns) {
    out.status = LinearSolution::Status::NoSolution;
    return out;
  }
  if (static_cast<int>(pivots.size()) < columns) {
    out.status = LinearSolution::Status::NotUnique;
    return out;
  }
  out.status = LinearSolution::Status::Unique;
  out.x.assign(columns, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) out.x[pivots[r]] = aug[r][columns];
  return out;
}

int rank_integer(const std::vector<std::vector<long long>>& a, int columns) {
  Matrix<Rational> m(a.size(), std::vector<Rational>(columns));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int j = 0; j < columns; ++j) m[i][j] = Rational(static_cast<long>(a[i][j]));
  }
  return rank(std::move(m), columns);
}

}  // namespace grascat
