#pragma once

#include <map>
#include <vector>

#include "curvecount/bigint.hpp"
#include "curvecount/gf.hpp"

namespace curvecount {

// Fiber statistics of a separable degree-2 cover X -> P^1 over F_q.
// Bi / Ci: closed points of P^1 of degree i whose fiber splits into two
// degree-i points / stays one degree-2i point. a1 = Frobenius trace of the
// source (0 when the source is P^1).
struct CoverStats {
    long long B1 = 0, C1 = 0, B2 = 0, C2 = 0, B3 = 0, C3 = 0;
    long long a1 = 0;
    bool operator<(const CoverStats& o) const {
        return std::tie(B1, C1, B2, C2, B3, C3, a1) <
               std::tie(o.B1, o.C1, o.B2, o.C2, o.B3, o.C3, o.a1);
    }
};

struct CoverRecord {
    CoverStats stats;
    Rational weight;
};

// All linear systems of separable degree-2 morphisms P^1 -> P^1 over F_q
// (equivalently nontrivial involutions of P^1), grouped by conjugacy class:
// each record's weight is the class size. Total weight is q^2 for odd q and
// q^2 - 1 in characteristic 2. Stats carry B_i, C_i for i <= 3.
std::vector<CoverRecord> rational_cover_census(int p, int r);

// All pairs (genus-1 curve C, linear system of separable degree-2 morphisms
// C -> P^1) over F_q, enumerated through hyperelliptic models and weighted so
// that sums over records equal sums over k-isomorphism classes weighted by
// 1/|Aut_k|. Stats carry B_i, C_i for i <= 2 and a1. The total weight is q.
std::vector<CoverRecord> genus1_cover_census(int p, int r);

// brute-force mass check at tiny q: number of model-orbits under the explicit
// substitution group, each weighted by 1/|physical stabilizer|
Rational genus1_mass_by_orbits(int p, int r);

}  // namespace curvecount
