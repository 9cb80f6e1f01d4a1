#include "doctest.h"

#include <set>

#include "curvecount/geom.hpp"

using namespace curvecount;

TEST_CASE("projective point counts") {
    CHECK(enumerate_points(2, field(2, 1)).size() == 7);
    CHECK(enumerate_points(1, field(3, 2)).size() == 10);
    CHECK(enumerate_points(2, field(2, 2)).size() == 21);
    CHECK(proj_count(14, BigInt(2)).str() == "32767");
    CHECK(proj_count_u64(9, 3) == 29524);
}

TEST_CASE("points are normalized and unique") {
    const GF& F = field(3, 1);
    auto pts = enumerate_points(2, F);
    std::set<uint64_t> keys;
    for (auto& P : pts) {
        keys.insert(P.encode());
        int lead = 0;
        while (P.c[lead] == 0) ++lead;
        CHECK(P.c[lead] == 1);
    }
    CHECK(keys.size() == 13);
}

TEST_CASE("frobenius orbits and degrees") {
    Tower t(2, 1);
    const GF& F4 = t.ext(2);
    ProjPoint P{&F4, 2, {1, 0, 1}};
    CHECK(frobenius_point(P, 1) == P);
    CHECK(point_degree(P, 1) == 1);

    int deg1 = 0, deg2 = 0;
    for (const auto& Q : enumerate_points(2, F4)) {
        int d = point_degree(Q, 1);
        if (d == 1) ++deg1;
        else if (d == 2) ++deg2;
    }
    CHECK(deg1 == 7);
    CHECK(deg2 == 14);
    CHECK(closed_points(t, 2, 1).size() == 7);
    CHECK(closed_points(t, 2, 2).size() == 7);
    CHECK(closed_points(t, 2, 3).size() == (73 - 7) / 3);
}

TEST_CASE("closed point counts match moebius") {
    Tower t(3, 1);
    CHECK(closed_points(t, 2, 3).size() == (757 - 13) / 3);
    CHECK(closed_points(t, 1, 2).size() == (9 + 1 - (3 + 1)) / 2);
}

TEST_CASE("lambda tuple totals match the formula") {
    Tower t2(2, 1);
    long long count = 0;
    for_each_lambda_set(t2, 2, Partition::parse("1^2"), [&](const LambdaSet&) { ++count; });
    CHECK(count * Partition::parse("1^2").zee().to_i64() == 42);

    count = 0;
    for_each_lambda_set(t2, 2, Partition::parse("2"), [&](const LambdaSet&) { ++count; });
    CHECK(count == 7);

    // #lambda-sets * z_lambda = |X(lambda)|, exhaustive for weights <= 5
    struct Case { int p; int dim; };
    for (auto cs : {Case{2, 1}, Case{3, 1}, Case{2, 2}}) {
        Tower t(cs.p, 1);
        for (const auto& lam : Partition::all_up_to_weight(5)) {
            long long sets = 0;
            for_each_lambda_set(t, cs.dim, lam, [&](const LambdaSet&) { ++sets; });
            BigInt formula = proj_lambda_count(cs.dim, BigInt(cs.p), lam);
            CHECK(BigInt(sets) * lam.zee() == formula);
        }
    }
    count = 0;
    for_each_lambda_set(t2, 2, Partition(), [&](const LambdaSet&) { ++count; });
    CHECK(count == 1);
}

TEST_CASE("collinearity and the Fano plane") {
    const GF& F = field(2, 1);
    ProjPoint A{&F, 2, {1, 0, 0}}, B{&F, 2, {0, 1, 0}}, C{&F, 2, {1, 1, 0}}, D{&F, 2, {0, 0, 1}};
    CHECK(collinear(A, B, C));
    CHECK(!collinear(A, B, D));
    auto l = line_through(A, B);
    CHECK(on_line(C, l));
    CHECK(!on_line(D, l));

    auto pts = enumerate_points(2, F);
    std::set<std::array<uint32_t, 3>> lines;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            ProjPoint L{&F, 2, line_through(pts[i], pts[j])};
            lines.insert(normalize(L).c);
        }
    CHECK(lines.size() == 7);
    for (const auto& ln : lines) {
        int cnt = 0;
        for (const auto& P : pts)
            if (on_line(P, ln)) ++cnt;
        CHECK(cnt == 3);
    }
}

TEST_CASE("pgl orders") {
    CHECK(pgl_order(3, BigInt(2)).str() == "168");
    CHECK(pgl_order(2, BigInt(2)).str() == "6");
    CHECK(pgl_order(3, BigInt(3)).str() == "5616");
    CHECK(pgl_order(2, BigInt(5)).str() == "120");
}

TEST_CASE("pgl_order(3,q) counts projective frames") {
    for (int q : {2, 3}) {
        const GF& F = field(q, 1);
        auto pts = enumerate_points(2, F);
        long long frames = 0;
        for (auto& A : pts)
            for (auto& B : pts)
                for (auto& C : pts)
                    for (auto& D : pts) {
                        if (A == B || A == C || A == D || B == C || B == D || C == D) continue;
                        if (collinear(A, B, C) || collinear(A, B, D) || collinear(A, C, D) ||
                            collinear(B, C, D))
                            continue;
                        ++frames;
                    }
        CHECK(BigInt(frames) == pgl_order(3, BigInt(q)));
    }
}
