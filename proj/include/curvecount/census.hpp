#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvecount/bigint.hpp"
#include "curvecount/ctype.hpp"
#include "curvecount/partition.hpp"

namespace curvecount {

struct CensusOptions {
    int workers = 2;
    int chunk_depth = 3;  // number of leading free coefficients per task split
    int max_lambda_weight = 0;  // accumulate smooth lambda sums up to this weight
    bool apply_pgl = false;     // classify g.f for a fixed g (invariance check)
    std::array<std::array<uint32_t, 3>, 3> pgl{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
};

struct CensusResult {
    long long q = 0;
    int degree = 0;
    // census type key -> (a1 of the genus-1 component, 0 otherwise) -> count
    std::map<std::string, std::map<long long, long long>> types;
    long long smooth = 0;
    std::map<std::string, BigInt> smooth_lambda;  // lambda.str() -> sum of |C(lambda)| over smooth curves
    // per smooth-cubic a1 tallies (degree 3 only), for m1n oracles
    std::map<long long, long long> smooth_a1;
    BigInt total_forms;

    BigInt singular_total() const;
};

// Full sweep census of P^14 (degree 4) or P^9 (degree 3) over F_{p^r}.
CensusResult sweep_census(int p, int r, int degree, const CensusOptions& opt = {});

// Census of reducible quartics with all components of degree <= 2 (the types
// of Tables 1-5 and 7), by configuration enumeration; feasible at q <= 5.
CensusResult reducible_conic_line_census(int p, int r);

// Census of irreducible quartics with exactly three delta=1 singularities
// (Table 6 types), by enumerating singular-at-S subspaces; feasible at q <= 5.
CensusResult table6_census(int p, int r);

// The structure a census key describes, reconstructed from the registry side:
// maps registry entries onto census keys (several entries may share a key).
std::string census_key_of(const CurveStructure& s);

}  // namespace curvecount
