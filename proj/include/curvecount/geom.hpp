#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "curvecount/bigint.hpp"
#include "curvecount/gf.hpp"
#include "curvecount/partition.hpp"

namespace curvecount {

// Point of P^1 or P^2 with coordinates in a single field, normalized so the
// first nonzero coordinate is 1.
struct ProjPoint {
    const GF* F = nullptr;
    int n = 2;  // ambient dimension (2 or 1)
    std::array<uint32_t, 3> c{0, 0, 0};

    bool operator==(const ProjPoint& o) const { return F == o.F && n == o.n && c == o.c; }
    bool operator<(const ProjPoint& o) const { return c < o.c; }
    uint64_t encode() const;  // dense integer key within its field/ambient
};

ProjPoint normalize(ProjPoint P);
// coordinatewise x -> x^q, q = |base|, renormalized
ProjPoint frobenius_point(const ProjPoint& P, int base_r);
// smallest m with F^m(P) = P over F_{p^base_r}
int point_degree(const ProjPoint& P, int base_r);

// all points of P^n(F), deterministic order
std::vector<ProjPoint> enumerate_points(int n, const GF& F);

// |P^n(F_q)| = (q^(n+1)-1)/(q-1)
BigInt proj_count(int n, const BigInt& q);
uint64_t proj_count_u64(int n, uint64_t q);

// Closed points of degree d of P^n over the base of `tower`, represented by
// the minimal-encoding point of each Frobenius orbit, coordinates in ext(d).
// Deterministic order. Cached.
const std::vector<ProjPoint>& closed_points(const Tower& tower, int n, int d);

// A lambda-set: for each part size i, a list of closed points of degree i
// (their representatives). Components within each degree are ordered
// ascending by encode(), so each set appears once.
struct LambdaSet {
    std::vector<std::vector<ProjPoint>> by_degree;  // index i-1: chosen degree-i reps
};

// Enumerate all lambda-sets of P^n over the tower base; calls f for each.
void for_each_lambda_set(const Tower& tower, int n, const Partition& lambda,
                         const std::function<void(const LambdaSet&)>& f);

// 3x3 / 2x2 exact rank tests
bool collinear(const ProjPoint& A, const ProjPoint& B, const ProjPoint& C);
// line through two distinct points of P^2 as dual coefficients (a:b:c)
std::array<uint32_t, 3> line_through(const ProjPoint& A, const ProjPoint& B);
bool on_line(const ProjPoint& P, const std::array<uint32_t, 3>& line);

BigInt pgl_order(int n, const BigInt& q);
uint64_t pgl_order_u64(int n, uint64_t q);

// |P^n(lambda)| by the Moebius tuple formula
BigInt proj_lambda_count(int n, const BigInt& q, const Partition& lambda);

}  // namespace curvecount
