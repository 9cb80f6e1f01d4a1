#include "curvecount/assembly.hpp"

#include "curvecount/geom.hpp"
#include "curvecount/quartlib.hpp"
#include "curvecount/sigma.hpp"
#include "curvecount/tables.hpp"

namespace curvecount {

QuarticPipeline::QuarticPipeline(const BigInt& q, int p) : q_(q), p_(p), m1n_(q, p) {}

Rational QuarticPipeline::t_correction(const Partition& lambda) const {
    Rational total(0);
    // genus-0 registry families
    for (const TypeEntry& e : quartic_type_registry()) {
        if (!e.in_t_sum) continue;
        Rational weight = e.mu1(q_) - Rational(1);
        if (weight.is_zero()) continue;
        Rational count = e.count(q_, p_);
        if (count.is_zero()) continue;
        BigInt lc = e.structure.lambda_count(q_, lambda);
        total += weight * count * Rational(lc);
    }
    // smooth cubic with a line: transversal patterns, weights mu_1 - 1
    for (const char* ms : {"1^3", "1,2", "3"}) {
        Partition mu3 = Partition::parse(ms);
        long long w = mu3.mult(1) - 1;
        if (w == 0) continue;
        total += Rational(w) * noncubic_with_line_transversal(mu3, lambda, m1n_);
    }
    // smooth cubic with a tangent-and-crossing line: two rational singular points
    total += noncubic_with_line_two_points(lambda, m1n_);
    // irreducible quartics with two delta=1 singularities
    total += quart2_rational_pair(lambda, m1n_, p_);
    total -= quart2_conjugate_pair(lambda, m1n_, p_);
    return total;
}

Rational QuarticPipeline::equivariant(const Partition& lambda) const {
    Rational sieve = Rational(sigma_quartic_M1(lambda, q_)) / Rational(pgl_order(3, q_));
    return sieve + t_correction(lambda);
}

Rational census_equivariant(const CensusResult& census, const Partition& lambda) {
    auto it = census.smooth_lambda.find(lambda.str());
    if (it == census.smooth_lambda.end())
        throw std::invalid_argument("census_equivariant: lambda sums not collected for " +
                                    lambda.str());
    return Rational(it->second) / Rational(pgl_order(3, BigInt(census.q)));
}

InterpolationReport interpolate_samples(const std::vector<std::pair<Rational, Rational>>& fit_on,
                                        const std::vector<std::pair<Rational, Rational>>& held_out) {
    InterpolationReport rep;
    rep.fit = lagrange_interpolate(fit_on);
    for (const auto& [x, y] : held_out) rep.residuals.push_back({x, y - rep.fit.eval(x)});
    return rep;
}

}  // namespace curvecount
