#include "doctest.h"

#include "curvecount/bigint.hpp"
#include "curvecount/gf.hpp"
#include "curvecount/partition.hpp"

using namespace curvecount;

TEST_CASE("bigint basics") {
    BigInt a("123456789123456789123456789");
    BigInt b("-987654321987654321");
    CHECK((a * b).str() == "-121932631356500531469135800347203169112635269");
    CHECK((a + b).str() == "123456788135802467135802468");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK((q * b + r) == a);
    CHECK(BigInt::gcd(BigInt(252), BigInt(105)).str() == "21");
    CHECK(BigInt::pow(BigInt(3), 20).str() == "3486784401");
    CHECK(BigInt(-7).str() == "-7");
    CHECK(binomial(BigInt(7), 2).str() == "21");
    CHECK(binomial(BigInt(2), 4).str() == "0");
    CHECK(factorial(8).str() == "40320");
}

TEST_CASE("rational arithmetic") {
    Rational a(BigInt(1), BigInt(6));
    Rational b(BigInt(1), BigInt(10));
    CHECK((a + b).str() == "4/15");
    CHECK((a - b).str() == "1/15");
    CHECK((a * b).str() == "1/60");
    CHECK((a / b).str() == "5/3");
    CHECK(Rational::parse("-3/9").str() == "-1/3");
    CHECK(Rational(BigInt(4), BigInt(-2)).str() == "-2");
}

TEST_CASE("field construction picks deterministic moduli") {
    const GF& f4 = field(2, 2);
    // x^2 + x + 1 is the unique irreducible monic quadratic over F_2
    CHECK(f4.modulus == std::vector<int>{1, 1, 1});
    const GF& f9 = field(3, 2);
    // lexicographically first (constant term up): x^2 + 1
    CHECK(f9.modulus == std::vector<int>{1, 0, 1});
    CHECK(field(2, 1).n == 2);
    CHECK(field(5, 3).n == 125);
    CHECK_THROWS(field(4, 1));
    CHECK_THROWS(field(2, 0));
}

TEST_CASE("field axioms on small fields, x^(n-1) = 1") {
    for (auto [p, r] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 8}, {2, 9},
                        {3, 1}, {3, 2}, {3, 4}, {3, 5}, {5, 2}, {5, 3}, {7, 2}, {13, 1}}) {
        const GF& F = field(p, r);
        if (F.n > 512) continue;
        for (uint32_t a = 1; a < F.n; ++a) {
            CHECK(F.pow(a, F.n - 1) == 1);
            CHECK(F.mul(a, F.inv(a)) == 1);
        }
        // spot-check associativity and distributivity
        for (uint32_t a = 0; a < std::min(F.n, 8u); ++a)
            for (uint32_t b = 0; b < std::min(F.n, 8u); ++b)
                for (uint32_t c = 0; c < std::min(F.n, 8u); ++c) {
                    CHECK(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
                    CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
    }
}

TEST_CASE("F_4 generator satisfies g*g = g+1") {
    const GF& F = field(2, 2);
    uint32_t g = 2;  // the class of x
    CHECK(F.mul(g, g) == F.add(g, 1));
}

TEST_CASE("2+2=1 in F_3") {
    const GF& F = field(3, 1);
    CHECK(F.add(2, 2) == 1);
}

TEST_CASE("frobenius fixes exactly the base field") {
    Tower t2(2, 1);
    const GF& F16 = t2.ext(4);
    int fixed = 0;
    for (uint32_t a = 0; a < F16.n; ++a)
        if (t2.frob_q(F16, a) == a) ++fixed;
    CHECK(fixed == 2);

    Tower t4(2, 2);  // base F_4
    const GF& F16b = t4.ext(2);
    fixed = 0;
    for (uint32_t a = 0; a < F16b.n; ++a)
        if (t4.frob_q(F16b, a) == a) ++fixed;
    CHECK(fixed == 4);

    // orbit size of any x in F_8 \ F_2 under x -> x^2 is 3
    const GF& F8 = field(2, 3);
    for (uint32_t a = 0; a < F8.n; ++a) {
        int d = F8.degree_over(a, 1);
        CHECK((d == 1 || d == 3));
        if (a > 1) CHECK(d == 3);
    }
}

TEST_CASE("frobenius is additive and multiplicative") {
    const GF& F = field(3, 4);
    for (uint32_t a = 0; a < 30; ++a)
        for (uint32_t b = 0; b < 30; ++b) {
            CHECK(F.frob_p(F.add(a, b)) == F.add(F.frob_p(a), F.frob_p(b)));
            CHECK(F.frob_p(F.mul(a, b)) == F.mul(F.frob_p(a), F.frob_p(b)));
        }
}

TEST_CASE("embeddings are ring maps compatible with frobenius and towers") {
    const GF& F2 = field(2, 1);
    const GF& F4 = field(2, 2);
    const GF& F16 = field(2, 4);
    const auto& e24 = embedding(F2, F4);
    const auto& e4_16 = embedding(F4, F16);
    const auto& e2_16 = embedding(F2, F16);
    for (uint32_t a = 0; a < 2; ++a) CHECK(e4_16[e24[a]] == e2_16[a]);

    const auto& e = embedding(F4, F16);
    for (uint32_t a = 0; a < F4.n; ++a) {
        for (uint32_t b = 0; b < F4.n; ++b) {
            CHECK(e[F4.add(a, b)] == F16.add(e[a], e[b]));
            CHECK(e[F4.mul(a, b)] == F16.mul(e[a], e[b]));
        }
        CHECK(e[F4.frob(a, 1)] == F16.frob(e[a], 1));
    }
    // minimal polynomial of the image of the F_4 generator is still x^2+x+1
    uint32_t im = e[2];
    CHECK(F16.add(F16.mul(im, im), F16.add(im, 1)) == 0);
}

TEST_CASE("partition basics, zee, arithmetic") {
    Partition lam = Partition::parse("1^2,2");
    CHECK(lam.weight() == 4);
    CHECK(lam.zee().str() == "4");
    CHECK(Partition::parse("3").zee().str() == "3");
    CHECK(Partition().zee().str() == "1");
    CHECK(Partition().weight() == 0);

    CHECK((Partition::parse("1^3") + Partition::parse("1,2")).str() == "1^4,2");
    CHECK((Partition::parse("1,2^2") - Partition::parse("2")).str() == "1,2");
    CHECK_THROWS(Partition::parse("1,2^2") - Partition::parse("2^3"));
    CHECK_THROWS(Partition::parse("1^-2"));

    // cycle type of (0 1)(2)(3 4 5)
    CHECK(Partition::cycle_type({1, 0, 2, 4, 5, 3}).str() == "1,2,3");

    CHECK(Partition::all_of_weight(7).size() == 15);
    CHECK(Partition::all_up_to_weight(7).size() == 45);
    CHECK(Partition::parse("1^3,2^2").str() == "1^3,2^2");
}

TEST_CASE("tuple_count on P^1 examples") {
    auto p1 = [](long long q) {
        return [q](int d) {
            long long v = 1;
            for (int i = 0; i < d; ++i) v *= q;
            return BigInt(v + 1);
        };
    };
    CHECK(tuple_count_f(p1(2), Partition::parse("1^3")).str() == "6");
    CHECK(tuple_count_f(p1(3), Partition::parse("2")).str() == "6");
    CHECK(tuple_count_f(p1(2), Partition::parse("1,2^2")).str() == "0");
    CHECK(tuple_count_f(p1(2), Partition()).str() == "1");
    // [1^n] falling factorial
    CHECK(tuple_count_f(p1(4), Partition::parse("1^3")).str() == "60");
}
