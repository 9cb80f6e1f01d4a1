#include "doctest.h"

#include <numeric>

#include "curvecount/linsys.hpp"
#include "curvecount/sigma.hpp"

using namespace curvecount;

namespace {
LambdaSet rational_set(const Tower& t, const std::vector<ProjPoint>& pts) {
    LambdaSet S;
    S.by_degree.resize(1);
    S.by_degree[0] = pts;
    return S;
}
}  // namespace

TEST_CASE("dim_L basic expected dimensions") {
    Tower t(2, 1);
    const GF& F = t.base();
    ProjPoint A{&F, 2, {1, 0, 0}}, B{&F, 2, {0, 1, 0}}, C{&F, 2, {0, 0, 1}}, D{&F, 2, {1, 1, 1}};

    // one rational point: dim 13
    CHECK(dim_L(t, 4, rational_set(t, {A}), {}) == 13);
    // one singular rational point, no pass-through: dim 11
    CHECK(dim_L(t, 4, LambdaSet{}, {{A, 1}}) == 11);
    // 4 collinear points plus a singularity on that line: dim 8
    ProjPoint p1{&F, 2, {1, 0, 0}}, p2{&F, 2, {1, 1, 0}};
    // line z=0 over F_2 has 3 rational points; take conj pair too? use q=3
    Tower t3(3, 1);
    const GF& F3 = t3.base();
    std::vector<ProjPoint> online;
    for (auto& P : enumerate_points(2, F3))
        if (P.c[2] == 0) online.push_back(P);  // the line z = 0
    REQUIRE(online.size() == 4);
    LambdaSet P4 = rational_set(t3, online);
    // S on the line, distinct from the four points? line z=0 has exactly 4
    // rational points at q=3, so S must be one of them; the paper's count
    // (q+1) P_8 includes those cases. dim should be 8.
    CHECK(dim_L(t3, 4, P4, {{online[0], 1}}) == 8);
    (void)B; (void)C; (void)D; (void)p1; (void)p2;
}

TEST_CASE("descent equals undescended dimension over the extension") {
    // Lemma lem-vectorspaces: dim_k L_{Q,T} = dim_kbar L'_{Q,T}; test by
    // computing the rank of the undescended system over ext(m) directly.
    for (int p : {2, 3}) {
        Tower t(p, 1);
        uint64_t seed = 12345;
        auto rnd = [&]() { seed = seed * 6364136223846793005ull + 1442695040888963407ull; return seed >> 33; };
        for (int trial = 0; trial < 1000; ++trial) {
            // random lambda-set with weight <= 5
            std::vector<Partition> lams = Partition::all_up_to_weight(4);
            const Partition& lam = lams[rnd() % lams.size()];
            LambdaSet S;
            S.by_degree.resize((size_t)std::max(lam.max_part(), 1));
            bool ok = true;
            for (int d = 1; d <= lam.max_part() && ok; ++d) {
                const auto& reps = closed_points(t, 2, d);
                for (int k = 0; k < lam.mult(d); ++k) {
                    const ProjPoint& cand = reps[rnd() % reps.size()];
                    bool dup = false;
                    for (auto& prev : S.by_degree[d - 1]) dup |= prev == cand;
                    if (dup) { ok = false; break; }
                    S.by_degree[d - 1].push_back(cand);
                }
            }
            if (!ok) continue;
            // optional singular rational point
            std::vector<std::pair<ProjPoint, int>> sing;
            if (rnd() % 2) {
                const auto& reps = closed_points(t, 2, 1);
                sing.push_back({reps[rnd() % reps.size()], 1});
            }
            int dim_desc = dim_L(t, 4, S, sing);

            // undescended: rank over a big common extension of raw rows
            int lcm = 1;
            for (int d = 1; d <= lam.max_part(); ++d)
                if (lam.mult(d)) lcm = std::lcm(lcm, d);
            Tower big(p, lcm);  // base = ext(lcm) of t; conditions live there
            LinSystem sys(big, 4);
            const GF& E = t.ext(lcm);
            for (int d = 1; d <= lam.max_part(); ++d) {
                if (S.by_degree[d - 1].empty()) continue;
                const auto& embd = embedding(t.ext(d), E);
                for (const ProjPoint& rep : S.by_degree[d - 1]) {
                    ProjPoint Q = rep;
                    for (int it = 0; it < d; ++it) {
                        ProjPoint QE{&E, 2, {embd[Q.c[0]], embd[Q.c[1]], embd[Q.c[2]]}};
                        sys.add_pass_through(QE, 1);
                        Q = frobenius_point(Q, t.r());
                    }
                }
            }
            const auto& emb1 = embedding(t.ext(1), E);
            for (auto& [sp, sd] : sing) {
                ProjPoint QE{&E, 2, {emb1[sp.c[0]], emb1[sp.c[1]], emb1[sp.c[2]]}};
                sys.add_singular_at(QE, 1);
                (void)sd;
            }
            CHECK(sys.proj_dim() == dim_desc);
        }
    }
}

TEST_CASE("lem-equaldim: extra point on a crowded line changes nothing") {
    for (int p : {2, 3}) {
        Tower t(p, 1);
        const GF& F = t.base();
        auto pts = enumerate_points(2, F);
        // line z = 0; q+1 points on it
        std::vector<ProjPoint> online, offline;
        for (auto& P : pts) (P.c[2] == 0 ? online : offline).push_back(P);
        // q+2t > 4 with t singular points on the line
        for (int t_sing = 0; t_sing <= 1; ++t_sing) {
            for (int q_pts = 0; q_pts <= (int)online.size() - 1 - t_sing; ++q_pts) {
                if (q_pts + 2 * t_sing <= 4) continue;
                LambdaSet S;
                S.by_degree.resize(1);
                for (int i = 0; i < q_pts; ++i) S.by_degree[0].push_back(online[i]);
                std::vector<std::pair<ProjPoint, int>> sing;
                if (t_sing) sing.push_back({online[(size_t)q_pts], 1});
                int d0 = dim_L(t, 4, S, sing);
                // add any further point of the line
                for (size_t extra = 0; extra < online.size(); ++extra) {
                    bool used = extra < (size_t)q_pts || (t_sing && extra == (size_t)q_pts);
                    if (used) continue;
                    LambdaSet S2 = S;
                    S2.by_degree[0].push_back(online[extra]);
                    CHECK(dim_L(t, 4, S2, sing) == d0);
                }
            }
        }
    }
}

TEST_CASE("a and b coefficient values") {
    CHECK(a_coeff(Partition::parse("1^4"), Partition(), BigInt(2)).str() == "0");
    CHECK(a_coeff(Partition::parse("1^4"), Partition(), BigInt(3)).str() == "312");
    CHECK(a_coeff(Partition::parse("1^2"), Partition::parse("2"), BigInt(5)).str() == "0");
}

TEST_CASE("classifier counts match a and b formulas") {
    for (int p : {2, 3}) {
        Tower t(p, 1);
        BigInt q((long long)p);
        int maxw = p == 2 ? 7 : 5;
        for (const auto& lam : Partition::all_up_to_weight(maxw)) {
            if (lam.weight() < 6) continue;  // classifier needs |lam-mu| >= 2; focus on used range
            for (const auto& mu : Partition::all_up_to_weight(3)) {
                if (!mu.leq(lam)) continue;
                Partition rest = lam - mu;
                if (rest.weight() <= mu.weight() + 1) continue;  // lem-Aa hypothesis
                long long hits = 0;
                for_each_lambda_set(t, 2, lam, [&](const LambdaSet& S) {
                    if (in_A(t, S, lam, mu)) ++hits;
                });
                CHECK(BigInt(hits) * lam.zee() == a_coeff(lam, mu, q));
            }
        }
        // b: lem-Bb hypothesis |mu| > 1 and |lam - [1] - mu| > 1, weight 7 tuples at q=2 only
        if (p == 2) {
            Partition lam = Partition::parse("1^7");
            Partition mu = Partition::parse("1^3");
            long long hits = 0;
            for_each_lambda_set(t, 2, lam, [&](const LambdaSet& S) {
                if (in_B(t, S, lam, mu)) ++hits;
            });
            CHECK(BigInt(hits) * lam.zee() == b_coeff(lam, mu, BigInt(2)));
        }
    }
}

TEST_CASE("sigma_quartic examples from the weight <= 3 formula") {
    // P_14 - 7 P_11 at q=2: 32767 - 7*4095
    CHECK(sigma_quartic_M1(Partition(), BigInt(2)).str() == "4102");
    // lambda = [1]: 7 (P13 - P11 - 6 P10)
    BigInt expected = BigInt(7) * (P_i(13, BigInt(2)) - P_i(11, BigInt(2)) - BigInt(6) * P_i(10, BigInt(2)));
    CHECK(sigma_quartic_M1(Partition::parse("1"), BigInt(2)) == expected);
}

TEST_CASE("sigma_cubic examples") {
    CHECK(sigma_cubic_M0(1, BigInt(2)).str() == "3577");
    // n=8, q=2: c = d = 0
    BigInt q(2);
    BigInt c = factorial(8) * binomial(q * q + q + BigInt(1), 2) * binomial(q, 4) * binomial(q, 4);
    CHECK(c.str() == "0");
}

TEST_CASE("sigma_quartic_M1 equals oracle at q=2 for small weights") {
    for (const auto& lam : Partition::all_up_to_weight(3)) {
        CHECK(sigma_quartic_M1(lam, BigInt(2)) == sigma_oracle(lam, 2, 1, 4, 1));
    }
}

TEST_CASE("sigma_cubic_M0 equals oracle at q=2 for small n") {
    for (int n = 0; n <= 4; ++n) {
        Partition lam = Partition::parse(n ? "1^" + std::to_string(n) : "e");
        CHECK(sigma_cubic_M0(n, BigInt(2)) == sigma_oracle(lam, 2, 1, 3, 0));
    }
}
