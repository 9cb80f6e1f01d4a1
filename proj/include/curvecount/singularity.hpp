#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvecount/form.hpp"
#include "curvecount/geom.hpp"

namespace curvecount {

// Local data of one Frobenius orbit of singular points.
// branch_degs are the residue degrees of the normalization preimages of one
// point of the orbit, relative to the field of definition of that point;
// e.g. a split node is {1,1}, a non-split node {2}, a cusp {1}.
struct SingularityRecord {
    int orbit_degree = 1;
    int delta = 0;               // per geometric point of the orbit
    int multiplicity = 0;        // of the curve at the point
    std::vector<int> branch_degs;

    int branches() const { return (int)branch_degs.size(); }
    // c / n1 / n2 / tc / tn1 / tn2 / m<mult>b<pattern> for higher delta
    std::string label() const;
    std::string str() const;
    bool operator<(const SingularityRecord& o) const;
    bool operator==(const SingularityRecord& o) const;
};

// fast per-field quadratic machinery
// roots of c0 s^2 + c1 st + c2 t^2 over F itself; empty if irreducible over F
std::vector<std::pair<uint32_t, uint32_t>> quadratic_roots_in_field(const GF& F, uint32_t c0,
                                                                    uint32_t c1, uint32_t c2);
uint32_t gf_sqrt(const GF& F, uint32_t a);  // char 2 only: the square root

// Classify the singularity of f (reduced at P) at the singular point P, which
// must lie over ext(d) of the tower with d = its orbit degree. Throws if f is
// not singular at P or the recursion exceeds the plane-curve bound.
SingularityRecord classify_singularity(const TernaryForm& f, const Tower& tower,
                                       const ProjPoint& P, int orbit_degree);

// All Frobenius orbits of singular points of f with orbit degree <= max_deg
// (reps over ext(d)). Always checks f itself as well as the partials.
std::vector<std::pair<ProjPoint, int>> singular_points(const TernaryForm& f, const Tower& tower,
                                                       int max_deg);

// |C(k_m)| by direct evaluation over ext(m)
uint64_t point_count_scan(const TernaryForm& f, const Tower& tower, int m);

}  // namespace curvecount
