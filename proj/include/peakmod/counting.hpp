#pragma once

#include <span>

#include "peakmod/core.hpp"
#include "peakmod/numeric.hpp"
#include "peakmod/series.hpp"

namespace peakmod {

// Closed forms. Every division is checked to be exact; a NonIntegerResult
// error means a bug, never a legitimate input.

/// (1/(kn+1)) C((k+1)n, n): the number of k-Dyck paths of down-size n.
BigCount fuss_catalan(int k, int n);

/// Paths in P^k_n with (pk_0, ..., pk_{k-1}, dd) = r: (1/n) prod_i C(n, r_i).
/// Zero unless sum r_i = n - 1. Needs n >= 1 and r.size() == k + 1.
BigCount count_joint(int k, int n, std::span<const int> r);

/// Paths in P^k_n on which any single one of pk_0..pk_{k-1}, dd equals r:
/// (1/n) C(n, r) C(kn, n-1-r).
BigCount count_marginal(int k, int n, int r);

/// Paths in P^k_n with r non-rightmost peaks (r + 1 peaks in all):
/// (1/n) C(n, r+1) C(kn, r).
BigCount count_pk(int k, int n, int r);

/// N(n, r) = (1/n) C(n, r) C(n, r-1): Dyck paths of semilength n with r peaks.
BigCount narayana(int n, int r);

/// (k, ell*k + r)-ballot paths of down-size n with (pk*_0..pk*_{k-1}, dd) = s.
/// Zero unless sum s_i = n.
BigCount count_ballot_joint(int k, int ell, int r, int n, std::span<const int> s);

/// [x^n q^r] f read off the Lagrange form (1/n) [w^{n-1} q^r] (prod_i (q_i w + 1))^n,
/// by expanding the power. Independent of count_joint.
BigCount lagrange_coefficient(int k, int n, std::span<const int> r);

// Functional equations, solved by fixed-point iteration.

/// f = x prod_{i=0..k} (q_i f + 1). x marks down-size; q_i marks pk_i (i < k), q_k marks dd.
/// With markers off every q_i is specialized to 1 (the marker count stays k + 1).
TruncSeries solve_f(int k, int order, bool markers = true);

/// f = c_A(x)(f + 1) + x^{k+1} prod_i (q_i f + 1) for the spec's alphabet; x marks |P|.
TruncSeries solve_f_kac(const FamilySpec& spec, int order);

/// g_{k,m} = (prod_{i<=r} (q_i f + 1))^{ell+1} (prod_{r<i<k} (q_i f + 1))^{ell}, m = ell*k + r.
TruncSeries solve_g(int k, int m, int order);

/// x^m times the same product built on f_{k,A,c}; x marks |P|.
TruncSeries solve_g_kac(const FamilySpec& spec, int m, int order);

}  // namespace peakmod
