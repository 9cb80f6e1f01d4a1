#include "curvecount/geom.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace curvecount {

uint64_t ProjPoint::encode() const {
    uint64_t key = 0;
    for (int i = 0; i <= n; ++i) key = key * F->n + c[i];
    return key;
}

ProjPoint normalize(ProjPoint P) {
    const GF& F = *P.F;
    for (int i = 0; i <= P.n; ++i) {
        if (P.c[i] == 0) continue;
        uint32_t inv = F.inv(P.c[i]);
        for (int j = i; j <= P.n; ++j) P.c[j] = F.mul(P.c[j], inv);
        return P;
    }
    throw std::invalid_argument("ProjPoint: all coordinates zero");
}

ProjPoint frobenius_point(const ProjPoint& P, int base_r) {
    ProjPoint Q = P;
    for (int i = 0; i <= P.n; ++i) Q.c[i] = P.F->frob(P.c[i], base_r);
    return normalize(Q);
}

int point_degree(const ProjPoint& P, int base_r) {
    ProjPoint Q = frobenius_point(P, base_r);
    int m = 1;
    while (!(Q == P)) {
        Q = frobenius_point(Q, base_r);
        ++m;
        if (m > 64) throw std::logic_error("point_degree diverged");
    }
    return m;
}

std::vector<ProjPoint> enumerate_points(int n, const GF& F) {
    std::vector<ProjPoint> pts;
    pts.reserve((size_t)proj_count_u64(n, F.n));
    for (int lead = n; lead >= 0; --lead) {
        // coordinates: 0,...,0,1,free,...,free with the 1 at position n-? ;
        // enumerate ascending encode order: lead position from left
        int pos = n - lead;  // index of the leading 1
        std::vector<uint32_t> free_coords((size_t)lead, 0);
        bool done = false;
        while (!done) {
            ProjPoint P;
            P.F = &F;
            P.n = n;
            for (int i = 0; i < pos; ++i) P.c[i] = 0;
            P.c[pos] = 1;
            for (int i = 0; i < lead; ++i) P.c[pos + 1 + i] = free_coords[i];
            pts.push_back(P);
            int i = lead - 1;
            while (i >= 0 && ++free_coords[i] == F.n) free_coords[i--] = 0;
            done = i < 0;
            if (lead == 0) break;
        }
    }
    return pts;
}

BigInt proj_count(int n, const BigInt& q) {
    BigInt s(0), p(1);
    for (int i = 0; i <= n; ++i) { s += p; p = p * q; }
    return s;
}

uint64_t proj_count_u64(int n, uint64_t q) {
    uint64_t s = 0, p = 1;
    for (int i = 0; i <= n; ++i) { s += p; p *= q; }
    return s;
}

namespace {
std::map<std::tuple<const GF*, int, int>, std::vector<ProjPoint>> g_closed;
std::mutex g_closed_mutex;
}  // namespace

const std::vector<ProjPoint>& closed_points(const Tower& tower, int n, int d) {
    std::lock_guard<std::mutex> lock(g_closed_mutex);
    auto key = std::make_tuple(&tower.base(), n, d);
    auto it = g_closed.find(key);
    if (it != g_closed.end()) return it->second;

    const GF& Fd = tower.ext(d);
    int base_r = tower.r();
    std::vector<ProjPoint> reps;
    for (const ProjPoint& P : enumerate_points(n, Fd)) {
        // representative: minimal encode in its orbit, orbit size exactly d
        ProjPoint Q = frobenius_point(P, base_r);
        int m = 1;
        bool minimal = true;
        while (!(Q == P)) {
            if (Q.encode() < P.encode()) { minimal = false; break; }
            Q = frobenius_point(Q, base_r);
            ++m;
        }
        if (minimal && m == d) reps.push_back(P);
    }
    auto& slot = g_closed[key];
    slot = std::move(reps);
    return slot;
}

void for_each_lambda_set(const Tower& tower, int n, const Partition& lambda,
                         const std::function<void(const LambdaSet&)>& f) {
    int maxp = lambda.max_part();
    LambdaSet cur;
    cur.by_degree.resize((size_t)std::max(maxp, 0));

    // choose lambda.mult(i) ascending-index reps of degree i, for i = 1..maxp
    std::function<void(int)> choose_degree = [&](int i) {
        if (i > maxp) { f(cur); return; }
        int need = lambda.mult(i);
        const auto& reps = closed_points(tower, n, i);
        if ((int)reps.size() < need) return;  // no such set
        std::vector<int> idx(need);
        std::function<void(int, int)> choose = [&](int k, int start) {
            if (k == need) { choose_degree(i + 1); return; }
            for (int j = start; j <= (int)reps.size() - (need - k); ++j) {
                cur.by_degree[i - 1].push_back(reps[j]);
                choose(k + 1, j + 1);
                cur.by_degree[i - 1].pop_back();
            }
        };
        if (need == 0) choose_degree(i + 1);
        else choose(0, 0);
    };
    choose_degree(1);
}

bool collinear(const ProjPoint& A, const ProjPoint& B, const ProjPoint& C) {
    const GF& F = *A.F;
    // det of 3x3
    uint32_t det = 0;
    det = F.add(det, F.mul(A.c[0], F.sub(F.mul(B.c[1], C.c[2]), F.mul(B.c[2], C.c[1]))));
    det = F.sub(det, F.mul(A.c[1], F.sub(F.mul(B.c[0], C.c[2]), F.mul(B.c[2], C.c[0]))));
    det = F.add(det, F.mul(A.c[2], F.sub(F.mul(B.c[0], C.c[1]), F.mul(B.c[1], C.c[0]))));
    return det == 0;
}

std::array<uint32_t, 3> line_through(const ProjPoint& A, const ProjPoint& B) {
    if (A == B) throw std::invalid_argument("line_through: points coincide");
    const GF& F = *A.F;
    std::array<uint32_t, 3> l;
    l[0] = F.sub(F.mul(A.c[1], B.c[2]), F.mul(A.c[2], B.c[1]));
    l[1] = F.sub(F.mul(A.c[2], B.c[0]), F.mul(A.c[0], B.c[2]));
    l[2] = F.sub(F.mul(A.c[0], B.c[1]), F.mul(A.c[1], B.c[0]));
    return l;
}

bool on_line(const ProjPoint& P, const std::array<uint32_t, 3>& line) {
    const GF& F = *P.F;
    uint32_t s = 0;
    for (int i = 0; i < 3; ++i) s = F.add(s, F.mul(P.c[i], line[i]));
    return s == 0;
}

BigInt pgl_order(int n, const BigInt& q) {
    // prod_{i=0}^{n-1} (q^n - q^i) / (q - 1)
    BigInt qn = BigInt::pow(q, (unsigned)n);
    BigInt prod(1);
    for (int i = 0; i < n; ++i) prod = prod * (qn - BigInt::pow(q, (unsigned)i));
    return prod / (q - BigInt(1));
}

uint64_t pgl_order_u64(int n, uint64_t q) { return (uint64_t)pgl_order(n, BigInt((long long)q)).to_i64(); }

BigInt proj_lambda_count(int n, const BigInt& q, const Partition& lambda) {
    return tuple_count_f([&](int d) { return proj_count(n, BigInt::pow(q, (unsigned)d)); }, lambda);
}

}  // namespace curvecount
