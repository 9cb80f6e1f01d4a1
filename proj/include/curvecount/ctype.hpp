#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvecount/bigint.hpp"
#include "curvecount/partition.hpp"

namespace curvecount {

// One Frobenius orbit of irreducible components.
// curve_deg: degree of each component curve (1 line, 2 conic, 3 cubic, 4 quartic)
// orbit: number of conjugate components in the orbit
// mult: multiplicity in the (possibly non-reduced) form
// genus: geometric genus of each component (0 or 1)
struct CompOrbit {
    int curve_deg = 1;
    int orbit = 1;
    int mult = 1;
    int genus = 0;
    bool operator<(const CompOrbit& o) const;
    bool operator==(const CompOrbit& o) const;
};

// One Frobenius orbit of singular points of the reduced curve.
// d: orbit size (degree of the field of definition of each point)
// pre: residue degrees over ext(d) of the normalization preimages of one point
// delta: delta invariant of each point of the orbit
struct SingOrbit {
    int d = 1;
    std::vector<int> pre;
    int delta = 1;
    bool operator<(const SingOrbit& o) const;
    bool operator==(const SingOrbit& o) const;
};

// The combinatorial record of a curve type that determines its point counts
// over every extension (together with a_1 if a genus-1 component is present).
struct CurveStructure {
    std::vector<CompOrbit> comps;
    std::vector<SingOrbit> sings;

    void canonicalize();
    std::string key() const;

    bool has_genus1() const;
    int total_degree() const;  // sum curve_deg * orbit * mult

    // |C(k_m)|; a1 is the Frobenius trace of the unique genus-1 component
    // (ignored if none). Counts support points for non-reduced curves.
    BigInt count_km(const BigInt& q, int m, long long a1 = 0) const;
    BigInt lambda_count(const BigInt& q, const Partition& lambda, long long a1 = 0) const;

    // number of rational singular points of the reduced structure
    int mu1_reduced() const;
    // sing pattern partition (d with multiplicity) of the reduced structure
    Partition mu_pattern() const;
};

// genus-1 trace power a_m from a_1 (integer Newton recurrence a_m = a1 a_{m-1} - q a_{m-2})
BigInt trace_power_g1(const BigInt& q, long long a1, int m);

}  // namespace curvecount
