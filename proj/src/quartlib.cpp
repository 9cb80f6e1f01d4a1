#include "curvecount/quartlib.hpp"

#include <stdexcept>

#include "curvecount/geom.hpp"
#include "curvecount/tables.hpp"

namespace curvecount {

int DeltaOneType::points() const {
    int n = 0;
    for (int i = 1; i <= 3; ++i) n += i * (c[i] + n1[i] + n2[i]);
    return n;
}

Partition DeltaOneType::mu() const {
    std::vector<int> parts;
    for (int i = 1; i <= 3; ++i) {
        for (int k = 0; k < c[i]; ++k) parts.push_back(i);
        for (int k = 0; k < n1[i]; ++k) { parts.push_back(i); parts.push_back(i); }
        for (int k = 0; k < n2[i]; ++k) parts.push_back(2 * i);
    }
    return Partition::from_parts(parts);
}

Partition DeltaOneType::sing_pattern() const {
    std::vector<int> parts;
    for (int i = 1; i <= 3; ++i)
        for (int k = 0; k < c[i] + n1[i] + n2[i]; ++k) parts.push_back(i);
    return Partition::from_parts(parts);
}

BigInt DeltaOneType::v(int jmax) const {
    BigInt v(1);
    for (int i = 1; i <= jmax; ++i) {
        v *= BigInt::pow(BigInt(i), (unsigned)c[i]) * factorial((unsigned)c[i]);
        v *= BigInt::pow(BigInt(i), (unsigned)n1[i]) * factorial((unsigned)n1[i]);
        v *= BigInt::pow(BigInt(i), (unsigned)n2[i]) * factorial((unsigned)n2[i]);
    }
    return v;
}

BigInt DeltaOneType::w(int jmax) const {
    BigInt w(1);
    for (int i = 1; i <= jmax; ++i) w *= BigInt::pow(BigInt(2), (unsigned)(n1[i] + n2[i]));
    return w;
}

namespace {

// number of closed points of P^1(F_q) of degree i
BigInt closed_p1(const BigInt& q, int i) {
    BigInt n(0);
    for (int d = 1; d <= i; ++d)
        if (i % d == 0) n += BigInt(moebius(i / d)) * (BigInt::pow(q, (unsigned)d) + BigInt(1));
    return n / BigInt(i);
}

BigInt falling(BigInt x, int k) {
    BigInt r(1);
    for (int i = 0; i < k; ++i) r *= x - BigInt(i);
    return r;
}

// phi_eps(cover) = prod_i binom(B_i, n1_i) binom(C_i, n2_i) binom(R_i, c_i),
// with R_i the closed ramified target points of degree i
Rational phi_eps(const DeltaOneType& eps, const CoverStats& st, const BigInt& q) {
    long long B[4] = {0, st.B1, st.B2, st.B3};
    long long Cc[4] = {0, st.C1, st.C2, st.C3};
    Rational total(1);
    for (int i = 1; i <= 3; ++i) {
        if (!eps.c[i] && !eps.n1[i] && !eps.n2[i]) continue;
        BigInt Ri = closed_p1(q, i) - BigInt(B[i]) - BigInt(Cc[i]);
        total *= Rational(falling(BigInt(B[i]), eps.n1[i]), factorial((unsigned)eps.n1[i]));
        total *= Rational(falling(BigInt(Cc[i]), eps.n2[i]), factorial((unsigned)eps.n2[i]));
        total *= Rational(falling(Ri, eps.c[i]), factorial((unsigned)eps.c[i]));
    }
    return total;
}

}  // namespace

Rational quart3_count(const DeltaOneType& eps, const BigInt& q, int p) {
    if (eps.points() != 3) throw std::invalid_argument("quart3_count: need three singular points");
    // even characteristic with three cusps: the linear system degenerates to
    // the inseparable one and no such quartics exist
    bool all_cusps = true;
    for (int i = 1; i <= 3; ++i)
        if (eps.n1[i] || eps.n2[i]) all_cusps = false;
    if (p == 2 && all_cusps) return Rational(0);

    Rational pgl2 = lemma_pgl2(q);
    Rational main = Rational(proj_lambda_count(1, q, eps.mu()), eps.v(3) * eps.w(3)) / pgl2;
    Rational corr(0);
    for (const CoverRecord& rec : rational_cover_census(p, [&] {
             // recover r from q = p^r
             BigInt pw(p);
             int r = 1;
             while (pw < q) { pw *= BigInt(p); ++r; }
             return r;
         }()))
        corr += rec.weight * phi_eps(eps, rec.stats, q);
    return main - corr / pgl2;
}

namespace {
// multinomial weight z_lambda / (z_kappa z_{lambda-kappa})
Rational split_weight(const Partition& lambda, const Partition& kappa) {
    Partition rest = lambda - kappa;
    return Rational(lambda.zee(), kappa.zee() * rest.zee());
}
}  // namespace

Rational noncubic_with_line_transversal(const Partition& mu3, const Partition& lambda,
                                        const M1n& m1n) {
    if (mu3.weight() != 3) throw std::invalid_argument("noncubic transversal: |mu| must be 3");
    if (lambda.weight() > 7) throw std::invalid_argument("noncubic transversal: |lambda| > 7");
    const BigInt& q = m1n.q();
    Rational total(0);
    for (const Partition& kappa : Partition::all_up_to_weight(lambda.weight())) {
        if (!kappa.leq(lambda)) continue;
        Rational m = m1n.equivariant(mu3 + kappa);
        total += split_weight(lambda, kappa) * m *
                 Rational(proj_lambda_count(1, q, lambda - kappa));
    }
    return total / Rational(mu3.zee());
}

Rational noncubic_with_line_two_points(const Partition& lambda, const M1n& m1n) {
    if (lambda.weight() > 8) throw std::invalid_argument("noncubic two-point: |lambda| > 8");
    const BigInt& q = m1n.q();
    Partition mu = Partition::parse("1^2");
    Rational total(0);
    for (const Partition& kappa : Partition::all_up_to_weight(lambda.weight())) {
        if (!kappa.leq(lambda)) continue;
        Rational m = m1n.equivariant(mu + kappa);
        total += split_weight(lambda, kappa) * m *
                 Rational(proj_lambda_count(1, q, lambda - kappa));
    }
    return total;
}

namespace {

// the Delta sets with their epsilon data (i <= 2)
struct DeltaCase {
    Partition mu;
    DeltaOneType eps;
};

std::vector<DeltaCase> delta_set(bool conjugate) {
    std::vector<DeltaCase> out;
    if (!conjugate) {
        for (const char* s : {"1^2", "1^3", "1,2", "1^4", "1^2,2", "2^2"}) {
            DeltaCase dc;
            dc.mu = Partition::parse(s);
            int mu1 = dc.mu.mult(1), mu2 = dc.mu.mult(2);
            dc.eps.n1[1] = mu1 + mu2 - 2;
            dc.eps.c[1] = 4 - mu1 - 2 * mu2;
            dc.eps.n2[1] = mu2;
            out.push_back(dc);
        }
    } else {
        for (const char* s : {"2", "2^2", "4"}) {
            DeltaCase dc;
            dc.mu = Partition::parse(s);
            int mu2 = dc.mu.mult(2), mu4 = dc.mu.mult(4);
            dc.eps.n1[2] = mu2 + mu4 - 1;
            dc.eps.c[2] = 2 - mu2 - 2 * mu4;
            dc.eps.n2[2] = mu4;
            out.push_back(dc);
        }
    }
    return out;
}

}  // namespace

Rational quart2_first_part(bool conjugate, const Partition& kappa, const M1n& m1n) {
    const BigInt& q = m1n.q();
    PolyQ total;
    auto deltas = delta_set(conjugate);
    if (!conjugate) {
        int k1 = kappa.mult(1);
        for (int i = 0; i <= 2; ++i) {
            if (i > k1) continue;
            // 2!/(2-i)! * binom(kappa_1, i)
            BigInt coef = falling(BigInt(2), i) * binomial(BigInt(k1), (unsigned)i);
            Partition kap = kappa;
            for (int t = 0; t < i; ++t) kap = kap - Partition::parse("1");
            for (const DeltaCase& dc : deltas) {
                PolyQ c = m1n.c_lambda_poly(dc.mu + kap);
                total = total + c * (Rational(coef) / Rational(dc.eps.v(2) * dc.eps.w(2)));
            }
        }
    } else {
        int k2 = kappa.mult(2);
        for (int i = 0; i <= 1; ++i) {
            if (i > k2) continue;
            BigInt coef = BigInt::pow(BigInt(2), (unsigned)i) *
                          BigInt::pow(BigInt(k2), (unsigned)i);
            Partition kap = kappa;
            for (int t = 0; t < i; ++t) kap = kap - Partition::parse("2");
            for (const DeltaCase& dc : deltas) {
                PolyQ c = m1n.c_lambda_poly(dc.mu + kap);
                total = total + c * (Rational(coef) / Rational(dc.eps.v(2) * dc.eps.w(2)));
            }
        }
    }
    PolyQ ck = PolyQ::constant(Rational(q + BigInt(1))) - PolyQ::x();
    return m1n.pair_moments(total.divide_exact(ck));
}

Rational quart2_second_part(bool conjugate, const Partition& kappa, const BigInt& q, int p) {
    int r = 1;
    {
        BigInt pw(p);
        while (pw < q) { pw *= BigInt(p); ++r; }
    }
    auto deltas = delta_set(conjugate);
    Rational total(0);
    for (const CoverRecord& rec : genus1_cover_census(p, r)) {
        for (const DeltaCase& dc : deltas) {
            Rational phi = phi_eps(dc.eps, rec.stats, q);
            if (phi.is_zero()) continue;
            // |X(kappa)| with X = {a lambda-set} plus C minus the mu-set
            BigInt xk = tuple_count_f(
                [&](int m) {
                    BigInt pts = BigInt::pow(q, (unsigned)m) + BigInt(1) -
                                 trace_power_g1(q, rec.stats.a1, m);
                    // remove the mu-set points
                    for (int i = 1; i <= dc.mu.max_part(); ++i)
                        if (dc.mu.mult(i) && m % i == 0)
                            pts -= BigInt((long long)i * dc.mu.mult(i));
                    // add the lambda-set (the two singular points)
                    if (!conjugate) pts += BigInt(2);
                    else if (m % 2 == 0) pts += BigInt(2);
                    return pts;
                },
                kappa);
            total += rec.weight * phi * Rational(xk);
        }
    }
    return total;
}

Rational quart2_rational_pair(const Partition& kappa, const M1n& m1n, int p) {
    return quart2_first_part(false, kappa, m1n) -
           quart2_second_part(false, kappa, m1n.q(), p);
}

Rational quart2_conjugate_pair(const Partition& kappa, const M1n& m1n, int p) {
    return quart2_first_part(true, kappa, m1n) -
           quart2_second_part(true, kappa, m1n.q(), p);
}

}  // namespace curvecount
