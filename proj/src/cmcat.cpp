#include "grascat/cmcat.hpp"

#include <algorithm>

#include "grascat/error.hpp"

namespace grascat {

namespace {

struct TwoRuns {
  CyclicRun first;
  CyclicRun second;
  int gap_after_first = 0;
  int gap_after_second = 0;
};

TwoRuns two_runs(const KSubset& s) {
  std::vector<CyclicRun> runs = cyclic_runs(s);
  require(runs.size() == 2, ErrorCode::NotTwoIntervals,
          label(s) + " has " + std::to_string(runs.size()) + " cyclic intervals, expected 2");
  TwoRuns out{runs[0], runs[1], 0, 0};
  out.gap_after_first = wrap(runs[1].start - (runs[0].start + runs[0].length), s.n) % s.n;
  out.gap_after_second = s.n - s.k() - out.gap_after_first;
  return out;
}

void add_run(std::vector<int>& out, int start, int length, int n) {
  for (int t = 0; t < length; ++t) out.push_back(wrap(start + t, n));
}

void add_heights(std::vector<int>& acc, const KSubset& s, int sign) {
  std::vector<int> h = rim_height(s);
  for (std::size_t j = 0; j < h.size(); ++j) acc[j] += sign * h[j];
}

}  // namespace

std::vector<int> rim_height(const KSubset& s) {
  std::vector<int> h(s.n + 1, 0);
  for (int i = 1; i <= s.n; ++i) h[i] = h[i - 1] + (s.contains(i) ? -1 : 1);
  return h;
}

KSubset subset_from_rim(const std::vector<int>& h) {
  const int n = static_cast<int>(h.size()) - 1;
  std::vector<int> elems;
  for (int i = 1; i <= n; ++i) {
    int step = h[i] - h[i - 1];
    require(step == 1 || step == -1, ErrorCode::OutOfRange, "rim steps must be +1 or -1");
    if (step == -1) elems.push_back(i);
  }
  return make_ksubset(n, std::move(elems));
}

KernelParams kernel_params(const KSubset& s) {
  TwoRuns runs = two_runs(s);
  KernelParams p;
  p.i = runs.second.length;
  p.v = runs.gap_after_first;
  p.m = p.i + 1 - 2 * runs.first.start;
  return p;
}

KSubset tau_two_interval(const KSubset& s) {
  const int n = s.n;
  const int k = s.k();
  const KernelParams p = kernel_params(s);
  const int i = p.i;
  const int m = p.m;
  const int v = p.v;
  std::vector<int> elems;
  const int head = (1 - i - m) / 2;
  if (head >= 1) {
    add_run(elems, head, (i - m - 1) / 2 - head + 1, n);
  } else {
    add_run(elems, 1, (i - m - 1) / 2, n);
    add_run(elems, n + head, 1 - head, n);
  }
  add_run(elems, (i - m + 2 * v + 1) / 2, k - i, n);
  return make_ksubset(n, std::move(elems));
}

KSubset tau_inverse_two_interval(const KSubset& s) {
  TwoRuns runs = two_runs(s);
  std::vector<int> elems;
  add_run(elems, runs.first.start - runs.gap_after_second, runs.first.length, s.n);
  add_run(elems, runs.second.start - runs.gap_after_first, runs.second.length, s.n);
  return make_ksubset(s.n, std::move(elems));
}

Profile make_profile(int k, int n, const std::vector<std::vector<int>>& factors) {
  Profile p{k, n, {}};
  for (const auto& f : factors) {
    require(static_cast<int>(f.size()) == k, ErrorCode::DimensionMismatch, "profile factor has wrong size");
    p.factors.push_back(make_ksubset(n, f));
  }
  return p;
}

std::string to_string(const Profile& p) {
  std::string out;
  for (std::size_t j = 0; j < p.factors.size(); ++j) {
    if (j > 0) out += '|';
    out += label(p.factors[j]);
  }
  return out;
}

bool profile_balance_check(const Profile& p, const ConePresentation& cp) {
  auto check = [&](const KSubset& s) {
    require(s.n == p.n && s.k() == p.k, ErrorCode::DimensionMismatch,
            "subset " + label(s) + " does not match the profile's (k, n)");
  };
  std::vector<int> total(p.n + 1, 0);
  for (const KSubset& f : p.factors) {
    check(f);
    add_heights(total, f, 1);
  }
  for (const KSubset& s : cp.sub) {
    check(s);
    add_heights(total, s, 1);
  }
  for (const KSubset& q : cp.quot) {
    check(q);
    add_heights(total, q, -1);
  }
  return std::all_of(total.begin(), total.end(), [&](int x) { return x == total.front(); });
}

Profile cyclic_shift_profile(const Profile& p, int a) {
  Profile out{p.k, p.n, {}};
  for (const KSubset& f : p.factors) {
    std::vector<int> elems;
    for (int v : f.elems) elems.push_back(wrap(v + a, p.n));
    out.factors.push_back(make_ksubset(p.n, std::move(elems)));
  }
  return out;
}

}  // namespace grascat
