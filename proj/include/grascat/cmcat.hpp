#pragma once

// Rank-one modules L_I of the Grassmannian cluster category: rims, the
// Auslander-Reiten translate on two-interval subsets, and profiles.

#include <vector>

#include "grascat/gvec.hpp"
#include "grascat/ksubset.hpp"

namespace grascat {

// h(0) = 0 and h(i) = h(i-1) - 1 if i is in I, else h(i-1) + 1.
std::vector<int> rim_height(const KSubset& s);

// Recovers I from its rim (descent positions).
KSubset subset_from_rim(const std::vector<int>& h);

// Parameters (i, m, v) with I = I^{(v)}_{i,m}: the run of length k-i
// starts at (i-m+1)/2 and is followed by a gap of v.
struct KernelParams {
  int i = 0;
  int m = 0;
  int v = 0;
};

// Reads (i, m, v) off the two cyclic runs of I, taking the run with the
// smaller start as the first interval. Throws NotTwoIntervals.
KernelParams kernel_params(const KSubset& s);

// tau(L_I) for a subset with exactly two cyclic runs. Throws NotTwoIntervals.
KSubset tau_two_interval(const KSubset& s);

// Inverse of tau_two_interval. Throws NotTwoIntervals.
KSubset tau_inverse_two_interval(const KSubset& s);

// Filtration factors listed top to bottom; the submodule is last.
struct Profile {
  int k = 0;
  int n = 0;
  std::vector<KSubset> factors;
};

Profile make_profile(int k, int n, const std::vector<std::vector<int>>& factors);
std::string to_string(const Profile& p);

// True iff sum_P h_F + sum_sub h_S - sum_quot h_Q is constant on {0..n}.
// Throws DimensionMismatch.
bool profile_balance_check(const Profile& p, const ConePresentation& cp);

// Adds a to every entry modulo n.
Profile cyclic_shift_profile(const Profile& p, int a);

}  // namespace grascat
