#pragma once

#include <map>

#include "curvecount/bigint.hpp"
#include "curvecount/census.hpp"
#include "curvecount/m1n.hpp"
#include "curvecount/partition.hpp"
#include "curvecount/polyq.hpp"

namespace curvecount {

// Everything needed to evaluate the quartic count at one q.
class QuarticPipeline {
public:
    QuarticPipeline(const BigInt& q, int p);

    const BigInt& q() const { return q_; }
    const M1n& m1n() const { return m1n_; }

    // total correction sum over |mu| >= 2: (mu_1 - 1) t_{lambda,mu} / |PGL_3|
    Rational t_correction(const Partition& lambda) const;
    // |Q~_n^{F sigma_lambda}|: the headline equivariant count
    Rational equivariant(const Partition& lambda) const;

private:
    BigInt q_;
    int p_;
    M1n m1n_;
};

// brute-force oracle: sum over smooth degree-d forms of |C(lambda)| / |PGL_3|
// from a census result
Rational census_equivariant(const CensusResult& census, const Partition& lambda);

// fit samples (q, value) with an exact polynomial and evaluate elsewhere
struct InterpolationReport {
    PolyQ fit;
    std::vector<std::pair<Rational, Rational>> residuals;  // held-out (q, value - fit(q))
};
InterpolationReport interpolate_samples(const std::vector<std::pair<Rational, Rational>>& fit_on,
                                        const std::vector<std::pair<Rational, Rational>>& held_out);

}  // namespace curvecount
