#pragma once

#include <vector>

#include "curvecount/bigint.hpp"
#include "curvecount/partition.hpp"
#include "curvecount/polyq.hpp"

namespace curvecount {

// Equivariant point counts of the moduli of 1-pointed genus-1 curves over
// F_q for n <= 10, computed from the cubic sieve: pointed-cubic totals, the
// tangent-line recursion, the moment transform (odd moments vanish), and the
// zeta closure that turns trace moments into arbitrary cycle-type counts.
class M1n {
public:
    M1n(const BigInt& q, int p);

    const BigInt& q() const { return q_; }

    // sum over smooth cubics of |C([1^n])| / |PGL_3|, n <= 8
    Rational pointed_cubic_total(int n) const;
    // |M~_{1,n}^F| for 1 <= n <= 10
    Rational trivial(int n) const;
    // m_j = sum a_1^j / |Aut|, 0 <= j <= 9
    Rational moment(int j) const;
    // |M~_{1,|lambda|}^{F . sigma_lambda}| for 1 <= |lambda| <= 10
    Rational equivariant(const Partition& lambda) const;

    // |C(lambda)| as a polynomial in a_1 (genus 1, this q)
    PolyQ c_lambda_poly(const Partition& lambda) const;
    // sum over [(C,p)] of poly(a_1)/|Aut|; degree must be <= 9
    Rational pair_moments(const PolyQ& poly_in_a1) const;
    // the trace polynomial a_m(a_1)
    PolyQ trace_poly(int m) const;

private:
    BigInt q_;
    int p_;
    std::vector<Rational> totals_;   // index n = 0..8
    std::vector<Rational> trivial_;  // index n = 1..10
    std::vector<Rational> moments_;  // index j = 0..9
};

}  // namespace curvecount
