#pragma once

// Exact linear algebra over the rationals (GMP) and over the prime field
// F_p with p = 2^31 - 1.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grascat {

using Rational = mpq_class;

class Fp {
 public:
  static constexpr std::uint64_t kModulus = 2147483647ULL;

  Fp() = default;
  Fp(long long value) {  // NOLINT(google-explicit-constructor)
    long long r = value % static_cast<long long>(kModulus);
    if (r < 0) r += static_cast<long long>(kModulus);
    v_ = static_cast<std::uint64_t>(r);
  }
  static Fp from_rational(const Rational& q);

  std::uint64_t value() const { return v_; }

  Fp operator+(Fp o) const { return raw((v_ + o.v_) % kModulus); }
  Fp operator-(Fp o) const { return raw((v_ + kModulus - o.v_) % kModulus); }
  Fp operator-() const { return raw((kModulus - v_) % kModulus); }
  Fp operator*(Fp o) const { return raw((v_ * o.v_) % kModulus); }
  Fp operator/(Fp o) const { return *this * o.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  bool operator==(const Fp& o) const = default;

  Fp inverse() const;

 private:
  static Fp raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint64_t v_ = 0;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Fp& x) { return x.value() == 0; }

std::string to_string(const Rational& q);
std::string to_string(const Fp& x);

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Reduced row echelon form computed in place. Returns the pivot columns in
// increasing order; rows beyond the rank are removed.
template <class F>
std::vector<int> rref(Matrix<F>& rows, int columns) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t pick = r;
    while (pick < rows.size() && is_zero(rows[pick][c])) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[r], rows[pick]);
    F lead = rows[r][c];
    if (!(lead == F(1))) {
      F inv = F(1) / lead;
      for (int j = c; j < columns; ++j) rows[r][j] *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      F factor = rows[i][c];
      for (int j = c; j < columns; ++j) {
        if (!is_zero(rows[r][j])) rows[i][j] -= factor * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Rank by forward elimination; the input is copied.
template <class F>
int rank(Matrix<F> rows, int columns) {
  int rk = 0;
  std::size_t r = 0;
  for (int c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t pick = r;
    while (pick < rows.size() && is_zero(rows[pick][c])) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[r], rows[pick]);
    F inv = F(1) / rows[r][c];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (is_zero(rows[i][c])) continue;
      F factor = rows[i][c] * inv;
      for (int j = c; j < columns; ++j) {
        if (!is_zero(rows[r][j])) rows[i][j] -= factor * rows[r][j];
      }
    }
    ++r;
    ++rk;
  }
  return rk;
}

template <class F>
F determinant(Matrix<F> a) {
  const std::size_t n = a.size();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pick = c;
    while (pick < n && is_zero(a[pick][c])) ++pick;
    if (pick == n) return F(0);
    if (pick != c) {
      std::swap(a[pick], a[c]);
      det = -det;
    }
    det *= a[c][c];
    F inv = F(1) / a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a[i][c])) continue;
      F factor = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= factor * a[c][j];
    }
  }
  return det;
}

// Outcome of solving A x = b exactly over the rationals.
struct LinearSolution {
  enum class Status { Unique, NoSolution, NotUnique };
  Status status = Status::NoSolution;
  std::vector<Rational> x;
};

// Solves A x = b where A has the given rows (each of length `columns`).
LinearSolution solve_rational(const Matrix<Rational>& a, const std::vector<Rational>& b);

// Rank over Q of an integer matrix.
int rank_integer(const std::vector<std::vector<long long>>& a, int columns);

}  // namespace grascat
