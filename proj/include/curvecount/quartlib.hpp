#pragma once

#include "curvecount/bigint.hpp"
#include "curvecount/covers.hpp"
#include "curvecount/m1n.hpp"
#include "curvecount/partition.hpp"

namespace curvecount {

// Singularity package of an irreducible quartic with only delta=1
// singularities: counts of cusps / split nodes / non-split nodes per orbit
// degree i (i <= 3).
struct DeltaOneType {
    int c[4] = {0, 0, 0, 0};
    int n1[4] = {0, 0, 0, 0};
    int n2[4] = {0, 0, 0, 0};

    int points() const;          // number of singular orbits weighted by degree
    Partition mu() const;        // preimage pattern on the normalization
    Partition sing_pattern() const;
    BigInt v(int jmax) const;
    BigInt w(int jmax) const;
};

// Lemma-level count of irreducible quartics with three delta=1 singularities
// of the given type (per Table 6, with the even-characteristic three-cusp
// degeneration built in).
Rational quart3_count(const DeltaOneType& eps, const BigInt& q, int p);

// The count of (smooth cubic + transversal line) pairs of intersection
// pattern mu3 carrying a lambda-tuple of points, and the two-point variant.
Rational noncubic_with_line_transversal(const Partition& mu3, const Partition& lambda,
                                        const M1n& m1n);
Rational noncubic_with_line_two_points(const Partition& lambda, const M1n& m1n);

// Irreducible quartics with two delta=1 singularities carrying a kappa-tuple:
// both singularities rational (eq-quart2-k) / a conjugate pair (eq-quart2-k2).
// Split into the moduli part and the degree-2-cover correction for testing.
Rational quart2_rational_pair(const Partition& kappa, const M1n& m1n, int p);
Rational quart2_conjugate_pair(const Partition& kappa, const M1n& m1n, int p);
Rational quart2_first_part(bool conjugate, const Partition& kappa, const M1n& m1n);
Rational quart2_second_part(bool conjugate, const Partition& kappa, const BigInt& q, int p);

}  // namespace curvecount
