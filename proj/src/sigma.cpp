#include "curvecount/sigma.hpp"

#include <stdexcept>

namespace curvecount {

BigInt P_i(int i, const BigInt& q) {
    if (i < 0) return BigInt(0);
    return proj_count(i, q);
}

namespace {
BigInt p2_lambda(const Partition& lambda, const BigInt& q) {
    return proj_lambda_count(2, q, lambda);
}
}  // namespace

BigInt sigma_quartic_M1(const Partition& lambda, const BigInt& q) {
    int w = lambda.weight();
    if (w > 7) throw std::invalid_argument("sigma_quartic_M1: weight > 7");
    BigInt l1((long long)lambda.mult(1));
    BigInt n2 = q * q + q + BigInt(1);
    auto P = [&](int i) { return P_i(i, q); };
    BigInt q2 = q * q;

    if (w <= 3) {
        return p2_lambda(lambda, q) * (P(14 - w) - l1 * P(12 - w) - (n2 - l1) * P(11 - w));
    }
    if (w == 4) {
        BigInt a0 = a_coeff(lambda, Partition(), q);
        return a0 * (P(10) - (q + BigInt(1)) * P(8) - q2 * P(7)) +
               (p2_lambda(lambda, q) - a0) * (P(10) - l1 * P(8) - (n2 - l1) * P(7));
    }
    if (w == 5) {
        BigInt a0 = a_coeff(lambda, Partition(), q);
        BigInt a1 = a_coeff(lambda, Partition::parse("1"), q);
        return a0 * (P(9) - (q + BigInt(1)) * P(8) - q2 * P(6)) +
               a1 * (P(9) - (q + BigInt(1)) * P(7) - P(7) - (q2 - BigInt(1)) * P(6)) +
               (p2_lambda(lambda, q) - a0 - a1) * (P(9) - l1 * P(7) - (n2 - l1) * P(6));
    }
    if (w == 6) {
        BigInt a0 = a_coeff(lambda, Partition(), q);
        BigInt a1 = a_coeff(lambda, Partition::parse("1"), q);
        BigInt a11 = a_coeff(lambda, Partition::parse("1^2"), q);
        BigInt a2 = a_coeff(lambda, Partition::parse("2"), q);
        return a0 * (P(9) - (q + BigInt(1)) * P(8) - q2 * P(6)) +
               a1 * (P(8) - (q + BigInt(1)) * P(7) - P(6) - (q2 - BigInt(1)) * P(5)) +
               a11 * (P(8) - (q + BigInt(1)) * P(6) - BigInt(2) * P(6) - (q2 - BigInt(2)) * P(5)) +
               a2 * (P(8) - (q + BigInt(1)) * P(6) - q2 * P(5)) +
               (p2_lambda(lambda, q) - a0 - a1 - a11 - a2) *
                   (P(8) - l1 * P(6) - (n2 - l1) * P(5));
    }
    // w == 7
    BigInt a0 = a_coeff(lambda, Partition(), q);
    BigInt a1 = a_coeff(lambda, Partition::parse("1"), q);
    BigInt a11 = a_coeff(lambda, Partition::parse("1^2"), q);
    BigInt a2 = a_coeff(lambda, Partition::parse("2"), q);
    BigInt a111 = a_coeff(lambda, Partition::parse("1^3"), q);
    BigInt a12 = a_coeff(lambda, Partition::parse("1,2"), q);
    BigInt a3 = a_coeff(lambda, Partition::parse("3"), q);
    BigInt b111 = b_coeff(lambda, Partition::parse("1^3"), q);
    BigInt b12 = b_coeff(lambda, Partition::parse("1,2"), q);
    BigInt b3 = b_coeff(lambda, Partition::parse("3"), q);

    BigInt total = a0 * (P(9) - (q + BigInt(1)) * P(8) - q2 * P(6));
    total += a1 * (P(8) - (q + BigInt(1)) * P(7) - P(6) - (q2 - BigInt(1)) * P(5));
    total += a11 * (P(7) - (q + BigInt(1)) * P(6) - BigInt(2) * P(5) - (q2 - BigInt(2)) * P(4));
    total += a2 * (P(7) - (q + BigInt(1)) * P(6) - q2 * P(4));
    total += (b111 + b12 + b3) *
             (P(7) - (BigInt(2) * q + BigInt(1)) * P(5) - (q2 - q) * P(4));
    total += (a111 - BigInt(2) * b111) *
             (P(7) - (q + BigInt(1)) * P(5) - BigInt(3) * P(5) - (q2 - BigInt(3)) * P(4));
    total += (a12 - BigInt(2) * b12) *
             (P(7) - (q + BigInt(1)) * P(5) - P(5) - (q2 - BigInt(1)) * P(4));
    total += (a3 - BigInt(2) * b3) * (P(7) - (q + BigInt(1)) * P(5) - q2 * P(4));
    total += (p2_lambda(lambda, q) - a0 - a1 - a11 - a2 - a111 - a12 - a3 + b111 + b12 + b3) *
             (P(7) - l1 * P(5) - (n2 - l1) * P(4));
    return total;
}

BigInt sigma_cubic_M0(int n, const BigInt& q) {
    if (n < 0 || n > 8) throw std::invalid_argument("sigma_cubic_M0: n out of range");
    auto ones = [&](int k) { return Partition::parse(k == 0 ? "e" : "1^" + std::to_string(k)); };
    auto P = [&](int i) { return P_i(i, q); };
    BigInt pts = p2_lambda(ones(n), q);
    if (n <= 4) return pts * P(9 - n);
    BigInt a0 = a_coeff(ones(n), Partition(), q);
    if (n == 5) return a0 * P(5) + (pts - a0) * P(4);
    BigInt a1 = a_coeff(ones(n), Partition::parse("1"), q);
    if (n == 6) return a0 * P(5) + a1 * P(4) + (pts - a0 - a1) * P(3);
    BigInt a11 = a_coeff(ones(n), Partition::parse("1^2"), q);
    if (n == 7) return a0 * P(5) + a1 * P(4) + a11 * P(3) + (pts - a0 - a1 - a11) * P(2);
    BigInt a111 = a_coeff(ones(n), Partition::parse("1^3"), q);
    BigInt n2 = q * q + q + BigInt(1);
    BigInt c = factorial(8) * (n2 * (n2 - BigInt(1)) / BigInt(2)) * binomial(q, 4) * binomial(q, 4);
    BigInt d = factorial(8) * q * q * (q * q * q - BigInt(1)) * binomial(q + BigInt(1), 8);
    return a0 * P(5) + a1 * P(4) + a11 * P(3) + a111 * P(2) + c * P(2) + d * P(2) +
           (pts - a0 - a1 - a11 - a111 - c - d) * P(1);
}

BigInt sigma_oracle(const Partition& lambda, int p, int r, int degree, int M,
                    long long tuple_budget) {
    if (M != 0 && M != 1) throw std::invalid_argument("sigma_oracle: M must be 0 or 1");
    Tower tower(p, r);
    BigInt q((long long)tower.q());
    // resource guard: number of lambda-sets
    BigInt nsets = proj_lambda_count(2, q, lambda) / lambda.zee();
    if (nsets > BigInt(tuple_budget)) throw std::runtime_error("sigma_oracle: tuple budget exceeded");

    BigInt zee = lambda.zee();
    BigInt total(0);
    const auto& rational = closed_points(tower, 2, 1);
    for_each_lambda_set(tower, 2, lambda, [&](const LambdaSet& S) {
        LinSystem sys(tower, degree);
        sys.add_set(S);
        BigInt term = sys.point_count();
        if (M == 1) {
            for (const ProjPoint& s : rational) {
                LinSystem sub = sys;
                sub.add_singular_at(s, 1);
                term -= sub.point_count();
            }
        }
        total += term * zee;  // each set stands for z_lambda tuples
    });
    return total;
}

}  // namespace curvecount
