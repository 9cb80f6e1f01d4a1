#pragma once

#include <optional>
#include <vector>

#include "curvecount/ctype.hpp"
#include "curvecount/form.hpp"
#include "curvecount/geom.hpp"

namespace curvecount {

// Internal singularity of an irreducible singular cubic component.
struct CubicSingData {
    ProjPoint point;            // rational, over the base field
    std::vector<int> pre;       // normalization preimage degrees: {1},{1,1},{2}
};

// One Frobenius orbit of components of a reduced configuration. Members are
// the conjugate forms over ext(orbit), ordered so F(members[i]) = members[i+1].
struct ConfigComponent {
    int curve_deg;
    int orbit;
    int mult;
    int genus = 0;                       // cubics: 0 singular, 1 smooth
    std::vector<TernaryForm> members;
    std::optional<CubicSingData> cubic_sing;
    long long a1 = 0;                    // smooth cubic trace
};

// Full structure (components, singular orbits with preimage degrees and
// delta) of the union of the given components. The configuration must be a
// reduced curve (multiplicities only annotate the structure; intersections
// are computed on the distinct members).
CurveStructure analyze_config(const Tower& tower, const std::vector<ConfigComponent>& comps,
                              long long* a1_out = nullptr);

// Parametrization of a smooth conic over its field: three degree-2 binary
// forms (X, Y, Z)(s, t) covering the conic bijectively.
std::array<BinaryForm, 3> parametrize_conic(const Tower& tower, const TernaryForm& conic,
                                            int ext_degree);

}  // namespace curvecount
