#pragma once

#include "curvecount/bigint.hpp"
#include "curvecount/geom.hpp"
#include "curvecount/linsys.hpp"
#include "curvecount/partition.hpp"

namespace curvecount {

// |P^i(k)|, with P_{-1} = 0 for empty linear systems
BigInt P_i(int i, const BigInt& q);

// Truncated sieve totals for quartics at M = 1, closed forms by weight of
// lambda (weights 0..7).
BigInt sigma_quartic_M1(const Partition& lambda, const BigInt& q);

// Cubic sieve at M = 0 for lambda = [1^n], n <= 8.
BigInt sigma_cubic_M0(int n, const BigInt& q);

// Independent oracle: literally sum |L_P| - s_{M,P} over all lambda-tuples by
// exact rank computation. degree 3 or 4, M 0 or 1. tuple_budget guards the
// enumeration size (number of lambda-sets).
BigInt sigma_oracle(const Partition& lambda, int p, int r, int degree, int M,
                    long long tuple_budget = 200000000);

}  // namespace curvecount
