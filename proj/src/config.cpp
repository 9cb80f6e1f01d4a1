#include "curvecount/config.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace curvecount {

namespace {

// inverse of an embedding table on its image
std::map<uint32_t, uint32_t> invert_embedding(const std::vector<uint32_t>& emb) {
    std::map<uint32_t, uint32_t> inv;
    for (uint32_t a = 0; a < emb.size(); ++a) inv[emb[a]] = a;
    return inv;
}

// express a point over ext(m) with true degree d (d | m) over ext(d)
ProjPoint reduce_point(const Tower& tower, const ProjPoint& P, int m, int d) {
    if (d == m) return P;
    const GF& Em = tower.ext(m);
    const GF& Ed = tower.ext(d);
    const auto& emb = embedding(Ed, Em);
    static std::map<std::pair<const GF*, const GF*>, std::map<uint32_t, uint32_t>> cache;
    auto key = std::make_pair(&Ed, &Em);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, invert_embedding(emb)).first;
    ProjPoint Q;
    Q.F = &Ed;
    Q.n = P.n;
    for (int i = 0; i <= P.n; ++i) {
        auto f = it->second.find(P.c[i]);
        if (f == it->second.end()) throw std::logic_error("reduce_point: coordinate not in subfield");
        Q.c[i] = f->second;
    }
    return Q;
}

struct RawContact {
    ProjPoint point;  // over ext(field_deg)
    int field_deg;
    int compA, memA;
    int compB, memB;
    int mult;
};

// degree of a point over the base, with frobenius in its current field
int degree_of(const Tower& tower, const ProjPoint& P) {
    ProjPoint Q = frobenius_point(P, tower.r());
    int d = 1;
    while (!(Q == P)) {
        Q = frobenius_point(Q, tower.r());
        ++d;
    }
    return d;
}

// canonical orbit key of a point over ext(m): reduce to its true degree and
// take the minimal encode over the orbit
std::pair<int, uint64_t> orbit_key(const Tower& tower, const ProjPoint& P, int m) {
    int d = degree_of(tower, P);
    ProjPoint R = reduce_point(tower, P, m, d);
    uint64_t best = R.encode();
    ProjPoint Q = frobenius_point(R, tower.r());
    while (!(Q == R)) {
        best = std::min(best, Q.encode());
        Q = frobenius_point(Q, tower.r());
    }
    return {d, best};
}

// intersection of two distinct forms (one of degree 1, or two conics), over
// ext(e); returns (point over ext(e'), multiplicity, e')
std::vector<std::tuple<ProjPoint, int, int>> intersect_pair(const Tower& tower,
                                                            const TernaryForm& A, int eA,
                                                            const TernaryForm& B, int eB) {
    int e = std::lcm(eA, eB);
    const GF& E = tower.ext(e);
    TernaryForm fA = (A.F == &E) ? A : A.map_into(E);
    TernaryForm fB = (B.F == &E) ? B : B.map_into(E);
    std::vector<std::tuple<ProjPoint, int, int>> out;
    if (fA.degree > fB.degree) std::swap(fA, fB);
    if (fA.degree == 1) {
        // two independent points of the line a x + b y + c z = 0
        uint32_t a = fA.coeffs[0], b = fA.coeffs[1], c = fA.coeffs[2];
        ProjPoint P0{&E, 2, {0, 0, 0}}, P1{&E, 2, {0, 0, 0}};
        if (a != 0) {
            P0.c = {b, E.neg(a), 0};
            P1.c = {c, 0, E.neg(a)};
        } else if (b != 0) {
            P0.c = {1, 0, 0};
            P1.c = {0, c, E.neg(b)};
        } else {
            P0.c = {1, 0, 0};
            P1.c = {0, 1, 0};
        }
        P0 = normalize(P0);
        P1 = normalize(P1);
        BinaryForm g = restrict_to_line(fB, P0, P1);
        if (g.is_zero()) throw std::logic_error("intersect_pair: common component");
        for (const BinRoot& root : binary_roots(g, tower, e)) {
            const GF& Er = tower.ext(e * root.ext_degree);
            const auto& em = embedding(E, Er);
            ProjPoint R;
            R.F = &Er;
            R.n = 2;
            for (int i = 0; i < 3; ++i)
                R.c[i] = Er.add(Er.mul(em[P0.c[i]], root.s), Er.mul(em[P1.c[i]], root.t));
            out.push_back({normalize(R), root.mult, e * root.ext_degree});
        }
        return out;
    }
    if (fA.degree == 2 && fB.degree == 2) {
        auto param = parametrize_conic(tower, fA, e);
        // substitute into fB: a binary quartic
        BinaryForm g;
        g.F = &E;
        g.degree = 4;
        g.c.assign(5, 0);
        const auto& Bm = MonomialBasis::get(2);
        for (size_t i = 0; i < fB.coeffs.size(); ++i) {
            if (!fB.coeffs[i]) continue;
            const auto& ex = Bm.exps[i];
            // product of param polys
            std::vector<uint32_t> poly{1};
            for (int v = 0; v < 3; ++v)
                for (int k = 0; k < ex[v]; ++k) {
                    std::vector<uint32_t> nx(poly.size() + 2, 0);
                    for (size_t d2 = 0; d2 < poly.size(); ++d2)
                        for (int j = 0; j <= 2; ++j)
                            nx[d2 + (size_t)j] =
                                E.add(nx[d2 + (size_t)j], E.mul(poly[d2], param[(size_t)v].c[(size_t)j]));
                    poly = std::move(nx);
                }
            for (size_t d2 = 0; d2 < poly.size(); ++d2)
                g.c[d2] = E.add(g.c[d2], E.mul(fB.coeffs[i], poly[d2]));
        }
        if (g.is_zero()) throw std::logic_error("intersect_pair: common conic");
        for (const BinRoot& root : binary_roots(g, tower, e)) {
            const GF& Er = tower.ext(e * root.ext_degree);
            const auto& em = embedding(E, Er);
            ProjPoint R;
            R.F = &Er;
            R.n = 2;
            for (int v = 0; v < 3; ++v) {
                // evaluate param[v] at (root.s, root.t)
                uint32_t s = root.s, t = root.t;
                uint32_t acc = 0;
                uint32_t s2 = Er.mul(s, s), st = Er.mul(s, t), t2 = Er.mul(t, t);
                acc = Er.add(acc, Er.mul(em[param[(size_t)v].c[0]], s2));
                acc = Er.add(acc, Er.mul(em[param[(size_t)v].c[1]], st));
                acc = Er.add(acc, Er.mul(em[param[(size_t)v].c[2]], t2));
                R.c[(size_t)v] = acc;
            }
            out.push_back({normalize(R), root.mult, e * root.ext_degree});
        }
        return out;
    }
    throw std::logic_error("intersect_pair: unsupported degrees");
}

}  // namespace

std::array<BinaryForm, 3> parametrize_conic(const Tower& tower, const TernaryForm& conic,
                                            int ext_degree) {
    const GF& E = tower.ext(ext_degree);
    TernaryForm C = (conic.F == &E) ? conic : conic.map_into(E);
    // find a point on the conic and two auxiliary points off it
    ProjPoint P0;
    bool found = false;
    for (const ProjPoint& P : enumerate_points(2, E))
        if (C.evaluate(P) == 0) { P0 = P; found = true; break; }
    if (!found) throw std::logic_error("parametrize_conic: no point on conic");
    // choose A, B with P0, A, B not collinear
    ProjPoint A, B;
    bool gotA = false, gotB = false;
    for (const ProjPoint& P : enumerate_points(2, E)) {
        if (P == P0) continue;
        if (!gotA) { A = P; gotA = true; continue; }
        if (!collinear(P0, A, P)) { B = P; gotB = true; break; }
    }
    if (!gotB) throw std::logic_error("parametrize_conic: no frame");
    // R(s,t) = C(D) P0 - B_pol(P0, D) D, D = sA + tB
    // B_pol(u,v) = C(u+v) - C(u) - C(v)
    auto eval = [&](const std::array<uint32_t, 3>& v) {
        ProjPoint P{&E, 2, {v[0], v[1], v[2]}};
        // evaluate without normalization
        const auto& Bm = MonomialBasis::get(2);
        uint32_t acc = 0;
        for (size_t i = 0; i < C.coeffs.size(); ++i) {
            if (!C.coeffs[i]) continue;
            uint32_t term = C.coeffs[i];
            for (int var = 0; var < 3; ++var)
                for (int k = 0; k < Bm.exps[i][var]; ++k) term = E.mul(term, v[(size_t)var]);
            acc = E.add(acc, term);
        }
        (void)P;
        return acc;
    };
    // C(D) = C(A) s^2 + B_pol(A,B) st + C(B) t^2
    uint32_t CA = eval({A.c[0], A.c[1], A.c[2]});
    uint32_t CB = eval({B.c[0], B.c[1], B.c[2]});
    uint32_t CAB = eval({E.add(A.c[0], B.c[0]), E.add(A.c[1], B.c[1]), E.add(A.c[2], B.c[2])});
    uint32_t polAB = E.sub(E.sub(CAB, CA), CB);
    // B_pol(P0, D) = B_pol(P0, A) s + B_pol(P0, B) t
    uint32_t CP0A = eval({E.add(P0.c[0], A.c[0]), E.add(P0.c[1], A.c[1]), E.add(P0.c[2], A.c[2])});
    uint32_t CP0B = eval({E.add(P0.c[0], B.c[0]), E.add(P0.c[1], B.c[1]), E.add(P0.c[2], B.c[2])});
    uint32_t polA = E.sub(CP0A, CA);  // C(P0) = 0
    uint32_t polB = E.sub(CP0B, CB);
    std::array<BinaryForm, 3> out;
    for (int v = 0; v < 3; ++v) {
        out[(size_t)v].F = &E;
        out[(size_t)v].degree = 2;
        out[(size_t)v].c.assign(3, 0);
        // s^2: CA * P0 - polA * A ; st: polAB * P0 - polA * B - polB * A ; t^2: CB * P0 - polB * B
        out[(size_t)v].c[0] = E.sub(E.mul(CA, P0.c[(size_t)v]), E.mul(polA, A.c[(size_t)v]));
        out[(size_t)v].c[1] = E.sub(E.mul(polAB, P0.c[(size_t)v]),
                                    E.add(E.mul(polA, B.c[(size_t)v]), E.mul(polB, A.c[(size_t)v])));
        out[(size_t)v].c[2] = E.sub(E.mul(CB, P0.c[(size_t)v]), E.mul(polB, B.c[(size_t)v]));
    }
    return out;
}

CurveStructure analyze_config(const Tower& tower, const std::vector<ConfigComponent>& comps,
                              long long* a1_out) {
    CurveStructure cs;
    long long a1 = 0;
    for (const auto& comp : comps) {
        cs.comps.push_back(CompOrbit{comp.curve_deg, comp.orbit, comp.mult, comp.genus});
        if (comp.genus == 1) a1 = comp.a1;
    }
    if (a1_out) *a1_out = a1;

    // raw contacts from representative pairs
    std::vector<RawContact> raw;
    for (size_t A = 0; A < comps.size(); ++A) {
        int a = comps[A].orbit;
        // self pairs: orbit representatives {0, j} for j = 1..floor(a/2)
        for (int j = 1; 2 * j <= a; ++j) {
            auto pts = intersect_pair(tower, comps[A].members[0], a, comps[A].members[(size_t)j], a);
            for (auto& [P, m, e] : pts)
                raw.push_back(RawContact{P, e, (int)A, 0, (int)A, j, m});
        }
        // cross pairs
        for (size_t B = A + 1; B < comps.size(); ++B) {
            int b = comps[B].orbit;
            int g = std::gcd(a, b);
            for (int j = 0; j < g; ++j) {
                auto pts = intersect_pair(tower, comps[A].members[0], a, comps[B].members[(size_t)j], b);
                for (auto& [P, m, e] : pts)
                    raw.push_back(RawContact{P, e, (int)A, 0, (int)B, j, m});
            }
        }
    }

    // expand raw contacts along Frobenius and group by canonical point orbit
    struct PointData {
        int d = 0;
        ProjPoint rep;  // canonical representative over ext(d)
        // unordered instance pair -> contact multiplicity at the representative
        std::map<std::array<int, 4>, int> contacts;
        std::set<std::pair<int, int>> branches;  // (comp, member) through the rep
        bool at_cubic_sing = false;
        int cubic_comp = -1;
    };
    std::map<std::pair<int, uint64_t>, PointData> points;

    for (const RawContact& rc : raw) {
        // orbit of (point, memA, memB)
        int a = comps[(size_t)rc.compA].orbit, b = comps[(size_t)rc.compB].orbit;
        ProjPoint P = rc.point;
        int iA = rc.memA, iB = rc.memB;
        int steps = 0;
        do {
            auto key = orbit_key(tower, P, rc.field_deg);
            auto& pd = points[key];
            if (pd.d == 0) {
                pd.d = key.first;
                ProjPoint R = reduce_point(tower, P, rc.field_deg, key.first);
                ProjPoint best = R, Q = frobenius_point(R, tower.r());
                while (!(Q == R)) {
                    if (Q.encode() < best.encode()) best = Q;
                    Q = frobenius_point(Q, tower.r());
                }
                pd.rep = best;
            }
            ProjPoint R = reduce_point(tower, P, rc.field_deg, key.first);
            if (R == pd.rep) {
                pd.branches.insert({rc.compA, iA});
                pd.branches.insert({rc.compB, iB});
                std::array<int, 4> pair{rc.compA, iA, rc.compB, iB};
                std::array<int, 4> swapped{rc.compB, iB, rc.compA, iA};
                pd.contacts[std::min(pair, swapped)] = rc.mult;
            }
            P = frobenius_point(P, tower.r());
            iA = (iA + 1) % a;
            iB = (iB + 1) % b;
            ++steps;
            if (steps > 64) throw std::logic_error("analyze_config: orbit expansion diverged");
        } while (!(P == rc.point && iA == rc.memA && iB == rc.memB));
    }

    // cubic singular points participate even with no other branch through them
    for (size_t A = 0; A < comps.size(); ++A) {
        if (!comps[A].cubic_sing) continue;
        const auto& csd = *comps[A].cubic_sing;
        auto key = orbit_key(tower, csd.point, 1);
        auto& pd = points[key];
        if (pd.d == 0) {
            pd.d = 1;
            pd.rep = csd.point;
        }
        pd.at_cubic_sing = true;
        pd.cubic_comp = (int)A;
    }

    for (auto& [key, pd] : points) {
        SingOrbit so;
        so.d = pd.d;
        long long delta = 0;
        for (auto& [pr, m] : pd.contacts) delta += m;
        std::set<std::pair<int, int>> visited;
        for (auto& [ci, mi] : pd.branches) {
            if (visited.count({ci, mi})) continue;
            // absolute orbit size of the branch (point, member); conjugate
            // branch instances through the representative belong to the same
            // orbit and are marked visited along the walk
            int orbit = comps[(size_t)ci].orbit;
            ProjPoint Q = pd.rep;
            int i = mi, f = 0;
            do {
                if (Q == pd.rep) visited.insert({ci, i});
                Q = frobenius_point(Q, tower.r());
                i = (i + 1) % orbit;
                ++f;
                if (f > 64) throw std::logic_error("analyze_config: branch orbit diverged");
            } while (!(Q == pd.rep && i == mi));
            // skip the cubic instance at its own singular point; its branches
            // come from the normalization data below
            if (pd.at_cubic_sing && ci == pd.cubic_comp) continue;
            so.pre.push_back(f);
        }
        if (pd.at_cubic_sing) {
            const auto& csd = *comps[(size_t)pd.cubic_comp].cubic_sing;
            for (int f : csd.pre) so.pre.push_back(f);
            delta += 1;  // the cubic singularity itself has delta 1
        }
        so.delta = (int)delta;
        std::sort(so.pre.begin(), so.pre.end());
        cs.sings.push_back(so);
    }
    cs.canonicalize();
    return cs;
}

}  // namespace curvecount
