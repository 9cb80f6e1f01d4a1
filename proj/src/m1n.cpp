#include "curvecount/m1n.hpp"

#include <stdexcept>

#include "curvecount/geom.hpp"
#include "curvecount/sigma.hpp"
#include "curvecount/tables.hpp"

namespace curvecount {

PolyQ M1n::trace_poly(int m) const {
    // a_0 = 2, a_1 = x, a_m = x a_{m-1} - q a_{m-2}
    PolyQ prev = PolyQ::constant(Rational(2));
    if (m == 0) return prev;
    PolyQ cur = PolyQ::x();
    for (int i = 1; i < m; ++i) {
        PolyQ next = PolyQ::x() * cur - prev * Rational(q_);
        prev = cur;
        cur = next;
    }
    return cur;
}

PolyQ M1n::c_lambda_poly(const Partition& lambda) const {
    std::map<int, PolyQ> counts;
    for (int i = 1; i <= lambda.max_part(); ++i)
        if (lambda.mult(i))
            for (int d = 1; d <= i; ++d)
                if (i % d == 0 && !counts.count(d))
                    counts[d] = PolyQ::constant(Rational(BigInt::pow(q_, (unsigned)d) + BigInt(1))) -
                                trace_poly(d);
    return tuple_count_poly(counts, lambda);
}

Rational M1n::pair_moments(const PolyQ& poly) const {
    if (poly.degree() > 9) throw std::invalid_argument("pair_moments: degree > 9");
    Rational total(0);
    for (int j = 0; j <= poly.degree(); ++j) total += poly.coeff(j) * moments_[(size_t)j];
    return total;
}

M1n::M1n(const BigInt& q, int p) : q_(q), p_(p) {
    Rational pgl3(pgl_order(3, q));
    totals_.resize(9);
    for (int n = 0; n <= 8; ++n) {
        Rational t(sigma_cubic_M0(n, q));
        for (const TypeEntry& e : cubic_type_registry()) {
            BigInt N = e.structure.count_km(q, 1);
            // |C([1^n])| = falling factorial
            BigInt ff(1);
            for (int j = 0; j < n; ++j) ff *= N - BigInt(j);
            t -= e.count(q, p) * Rational(ff) * pgl3;
        }
        totals_[(size_t)n] = t / pgl3;
    }

    trivial_.resize(11);
    trivial_[1] = Rational(q);
    for (int n = 1; n <= 8; ++n)
        trivial_[(size_t)n + 1] = totals_[(size_t)n] - Rational(n) * trivial_[(size_t)n];

    // moments: trivial[n] = sum_{j} c_{n,j} m_j where
    // prod_{j=1}^{n-1} (q + 1 - a1 - j) = sum c_{n,j} a1^j
    moments_.assign(10, Rational(0));
    for (int n = 1; n <= 9; ++n) {
        PolyQ poly = PolyQ::constant(Rational(1));
        for (int j = 1; j < n; ++j)
            poly = poly * (PolyQ::constant(Rational(q + BigInt(1) - BigInt(j))) - PolyQ::x());
        // m_{n-1} appears with coefficient (-1)^(n-1); lower moments known
        Rational rest(0);
        for (int j = 0; j < n - 1; ++j) rest += poly.coeff(j) * moments_[(size_t)j];
        Rational lead = poly.coeff(n - 1);
        moments_[(size_t)n - 1] = (trivial_[(size_t)n] - rest) / lead;
    }
    for (int j = 1; j <= 9; j += 2)
        if (!moments_[(size_t)j].is_zero())
            throw std::logic_error("M1n: odd moment m_" + std::to_string(j) + " did not vanish");
    // n = 10 via the vanishing of m_9
    {
        PolyQ poly = PolyQ::constant(Rational(1));
        for (int j = 1; j < 10; ++j)
            poly = poly * (PolyQ::constant(Rational(q + BigInt(1) - BigInt(j))) - PolyQ::x());
        trivial_[10] = pair_moments(poly);
    }
}

Rational M1n::pointed_cubic_total(int n) const {
    if (n < 0 || n > 8) throw std::invalid_argument("pointed_cubic_total: n out of range");
    return totals_[(size_t)n];
}

Rational M1n::trivial(int n) const {
    if (n < 1 || n > 10) throw std::invalid_argument("M1n::trivial: n out of range");
    return trivial_[(size_t)n];
}

Rational M1n::moment(int j) const {
    if (j < 0 || j > 9) throw std::invalid_argument("M1n::moment: j out of range");
    return moments_[(size_t)j];
}

Rational M1n::equivariant(const Partition& lambda) const {
    int n = lambda.weight();
    if (n < 1 || n > 10) throw std::invalid_argument("M1n::equivariant: weight out of range");
    PolyQ clam = c_lambda_poly(lambda);
    PolyQ ck = PolyQ::constant(Rational(q_ + BigInt(1))) - PolyQ::x();
    PolyQ quotient = clam.divide_exact(ck);
    return pair_moments(quotient);
}

}  // namespace curvecount
