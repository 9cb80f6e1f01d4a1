#include "curvecount/covers.hpp"

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "curvecount/geom.hpp"
#include "curvecount/partition.hpp"
#include "curvecount/singularity.hpp"

namespace curvecount {

namespace {

// normalize a P^1 point so the first nonzero coordinate is 1
std::pair<uint32_t, uint32_t> norm1(const GF& F, uint32_t s, uint32_t t) {
    if (s != 0) return {1, F.div(t, s)};
    return {0, 1};
}

// projective action of a 2x2 matrix on P^1 points (s:t), normalized
std::pair<uint32_t, uint32_t> moebius_apply(const GF& F, const std::array<uint32_t, 4>& M,
                                            uint32_t s, uint32_t t) {
    uint32_t ns = F.add(F.mul(M[0], s), F.mul(M[1], t));
    uint32_t nt = F.add(F.mul(M[2], s), F.mul(M[3], t));
    return norm1(F, ns, nt);
}

// number of closed points of P^1 of degree i over F_q
long long closed_count_p1(const BigInt& q, int i) {
    BigInt n(0);
    for (int d = 1; d <= i; ++d)
        if (i % d == 0) n += BigInt(moebius(i / d)) * (BigInt::pow(q, (unsigned)d) + BigInt(1));
    return (n / BigInt(i)).to_i64();
}

// B_i and ram_i (closed counts) for an involution given by matrix M over F_q,
// for i = 1..3, via scans of P^1(ext(i))
CoverStats involution_stats(const Tower& tower, const std::array<uint32_t, 4>& Mbase) {
    CoverStats st;
    BigInt q((long long)tower.q());
    long long B[4] = {0, 0, 0, 0}, ram[4] = {0, 0, 0, 0};
    for (int i = 1; i <= 3; ++i) {
        const GF& E = tower.ext(i);
        const auto& emb = embedding(tower.base(), E);
        std::array<uint32_t, 4> M{emb[Mbase[0]], emb[Mbase[1]], emb[Mbase[2]], emb[Mbase[3]]};
        long long nfree_split = 0, nram = 0;
        for (const ProjPoint& P : enumerate_points(1, E)) {
            uint32_t s = P.c[0], t = P.c[1];
            // degree of the point over the base
            auto [fs, ft] = norm1(E, tower.frob_q(E, s), tower.frob_q(E, t));
            int deg = 1;
            while (!(fs == s && ft == t)) {
                auto nx = norm1(E, tower.frob_q(E, fs), tower.frob_q(E, ft));
                fs = nx.first;
                ft = nx.second;
                ++deg;
            }
            if (deg != i) continue;
            auto [is_, it_] = moebius_apply(E, M, s, t);
            if (is_ == s && it_ == t) { ++nram; continue; }
            bool inert_half = false;
            if (i % 2 == 0) {
                uint32_t hs = s, ht = t;
                for (int k = 0; k < i / 2; ++k) {
                    uint32_t ns = tower.frob_q(E, hs), nt = tower.frob_q(E, ht);
                    hs = ns;
                    ht = nt;
                }
                auto nh = norm1(E, hs, ht);
                if (nh.first == is_ && nh.second == it_) inert_half = true;
            }
            if (!inert_half) ++nfree_split;
        }
        if (nfree_split % (2 * i) || nram % i)
            throw std::logic_error("involution_stats: orbit counting inconsistency");
        B[i] = nfree_split / (2 * i);
        ram[i] = nram / i;
    }
    st.B1 = B[1];
    st.B2 = B[2];
    st.B3 = B[3];
    st.C1 = closed_count_p1(q, 1) - ram[1] - B[1];
    st.C2 = closed_count_p1(q, 2) - ram[2] - B[2];
    st.C3 = closed_count_p1(q, 3) - ram[3] - B[3];
    st.a1 = 0;
    return st;
}

}  // namespace

namespace {
std::map<std::pair<int, int>, std::vector<CoverRecord>> g_rat_cache, g_g1_cache;
std::mutex g_cover_mutex;
}  // namespace

std::vector<CoverRecord> rational_cover_census(int p, int r) {
    {
        std::lock_guard<std::mutex> lock(g_cover_mutex);
        auto it = g_rat_cache.find({p, r});
        if (it != g_rat_cache.end()) return it->second;
    }
    Tower tower(p, r);
    const GF& F = tower.base();
    BigInt q((long long)tower.q());
    std::vector<CoverRecord> out;
    if (p == 2) {
        // single class: x -> x + 1
        std::array<uint32_t, 4> M{1, 1, 0, 1};
        out.push_back({involution_stats(tower, M), Rational(q * q - BigInt(1))});
    } else {
        // split class: x -> -x (two rational fixed points)
        std::array<uint32_t, 4> Ms{1, 0, 0, F.neg(1)};
        out.push_back({involution_stats(tower, Ms), Rational(q * (q + BigInt(1)) / BigInt(2))});
        // non-split class: x -> d/x with d a non-square
        uint32_t d = 0;
        {
            std::vector<bool> sq(F.n, false);
            for (uint32_t x = 1; x < F.n; ++x) sq[F.mul(x, x)] = true;
            for (uint32_t x = 1; x < F.n; ++x)
                if (!sq[x]) { d = x; break; }
        }
        std::array<uint32_t, 4> Mn{0, d, 1, 0};
        out.push_back({involution_stats(tower, Mn), Rational(q * (q - BigInt(1)) / BigInt(2))});
    }
    std::lock_guard<std::mutex> lock(g_cover_mutex);
    return g_rat_cache.emplace(std::make_pair(p, r), std::move(out)).first->second;
}

namespace {

// distinct-degree profile of a squarefree univariate poly over F_q:
// returns degrees of roots (number of geometric roots of each degree 1..4)
std::array<int, 5> root_degree_profile(const GF& F, std::vector<uint32_t> f) {
    std::array<int, 5> prof{0, 0, 0, 0, 0};
    auto deg = [&](const std::vector<uint32_t>& a) {
        int d = (int)a.size() - 1;
        while (d >= 0 && a[(size_t)d] == 0) --d;
        return d;
    };
    auto polmod = [&](std::vector<uint32_t> a, const std::vector<uint32_t>& b) {
        int db = deg(b);
        for (int i = deg(a); i >= db; --i) {
            uint32_t c = F.div(a[(size_t)i], b[(size_t)db]);
            if (c == 0) continue;
            for (int j = 0; j <= db; ++j)
                a[(size_t)(i - db + j)] = F.sub(a[(size_t)(i - db + j)], F.mul(c, b[(size_t)j]));
        }
        a.resize((size_t)std::max(db, 1));
        return a;
    };
    auto polgcd = [&](std::vector<uint32_t> a, std::vector<uint32_t> b) {
        while (deg(b) >= 0) {
            auto r = polmod(a, b);
            if (deg(r) >= deg(b)) r.resize((size_t)deg(b) > 0 ? (size_t)deg(b) : 1);
            a = b;
            b = r;
            if (deg(b) < 0) break;
        }
        return a;
    };
    auto xq_pow_mod = [&](const std::vector<uint32_t>& m, int e) {
        // x^(q^e) mod m by repeated q-power
        std::vector<uint32_t> acc{0, 1};
        acc = polmod(acc, m);
        for (int it = 0; it < e; ++it) {
            // acc = acc^q mod m via square-and-multiply on exponent q
            std::vector<uint32_t> res{1};
            std::vector<uint32_t> base = acc;
            uint64_t qq = F.n;
            while (qq) {
                if (qq & 1) {
                    // res *= base mod m
                    std::vector<uint32_t> prod(res.size() + base.size() - 1, 0);
                    for (size_t i2 = 0; i2 < res.size(); ++i2)
                        for (size_t j2 = 0; j2 < base.size(); ++j2)
                            prod[i2 + j2] = F.add(prod[i2 + j2], F.mul(res[i2], base[j2]));
                    res = polmod(prod, m);
                }
                qq >>= 1;
                if (qq) {
                    std::vector<uint32_t> prod(base.size() * 2 - 1, 0);
                    for (size_t i2 = 0; i2 < base.size(); ++i2)
                        for (size_t j2 = 0; j2 < base.size(); ++j2)
                            prod[i2 + j2] = F.add(prod[i2 + j2], F.mul(base[i2], base[j2]));
                    base = polmod(prod, m);
                }
            }
            acc = res;
        }
        return acc;
    };
    std::vector<uint32_t> rem = f;
    for (int dd = 1; dd <= 4 && deg(rem) > 0; ++dd) {
        auto xq = xq_pow_mod(rem, dd);
        // xq - x
        std::vector<uint32_t> diff = xq;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = F.sub(diff[1], 1);
        auto g = polgcd(rem, diff);
        int dg = deg(g);
        if (dg > 0) {
            prof[(size_t)dd] += dg / dd;
            // rem /= g
            std::vector<uint32_t> quot;
            {
                std::vector<uint32_t> a = rem;
                int dgg = deg(g);
                quot.assign((size_t)(deg(a) - dgg + 1), 0);
                for (int i = deg(a); i >= dgg; --i) {
                    uint32_t c = F.div(a[(size_t)i], g[(size_t)dgg]);
                    quot[(size_t)(i - dgg)] = c;
                    if (c == 0) continue;
                    for (int j = 0; j <= dgg; ++j)
                        a[(size_t)(i - dgg + j)] =
                            F.sub(a[(size_t)(i - dgg + j)], F.mul(c, g[(size_t)j]));
                }
            }
            rem = quot;
        }
    }
    return prof;
}

}  // namespace

std::vector<CoverRecord> genus1_cover_census(int p, int r) {
    {
        std::lock_guard<std::mutex> lock(g_cover_mutex);
        auto it = g_g1_cache.find({p, r});
        if (it != g_g1_cache.end()) return it->second;
    }
    Tower tower(p, r);
    const GF& F = tower.base();
    BigInt q((long long)tower.q());
    long long qq = (long long)tower.q();
    std::map<CoverStats, long long> agg;

    if (p != 2) {
        // y^2 = F(s,t), binary quartic, squarefree as a form
        std::vector<int> chi(F.n, 0);  // quadratic character, chi(0) = 0
        for (uint32_t x = 1; x < F.n; ++x) chi[F.mul(x, x)] = 1;
        for (uint32_t x = 1; x < F.n; ++x)
            if (!chi[x]) chi[x] = -1;

        std::vector<uint32_t> co(5);
        for (co[4] = 0; co[4] < F.n; ++co[4])          // a4 (coeff of x^4)
        for (co[3] = 0; co[3] < F.n; ++co[3])
        for (co[2] = 0; co[2] < F.n; ++co[2])
        for (co[1] = 0; co[1] < F.n; ++co[1])
        for (co[0] = 0; co[0] < F.n; ++co[0]) {
            // affine poly f(x) = co4 x^4 + ... + co0; as a form, the root at
            // infinity has multiplicity 4 - deg f
            int degf = 4;
            while (degf >= 0 && co[(size_t)degf] == 0) --degf;
            if (degf < 3) continue;  // multiple root at infinity (or zero form)
            // squarefree test: gcd(f, f') trivial
            {
                std::vector<uint32_t> f(co.begin(), co.begin() + degf + 1);
                std::vector<uint32_t> fp((size_t)degf, 0);
                for (int i = 1; i <= degf; ++i)
                    fp[(size_t)(i - 1)] = F.mul(f[(size_t)i], F.from_int(i));
                bool sqfree = true;
                // compute gcd degree
                auto deg_of = [&](const std::vector<uint32_t>& a) {
                    int d = (int)a.size() - 1;
                    while (d >= 0 && a[(size_t)d] == 0) --d;
                    return d;
                };
                std::vector<uint32_t> a = f, b = fp;
                while (deg_of(b) >= 0) {
                    // a mod b, in place
                    int db = deg_of(b);
                    for (int i = deg_of(a); i >= db; --i) {
                        uint32_t c = F.div(a[(size_t)i], b[(size_t)db]);
                        if (!c) continue;
                        for (int j = 0; j <= db; ++j)
                            a[(size_t)(i - db + j)] =
                                F.sub(a[(size_t)(i - db + j)], F.mul(c, b[(size_t)j]));
                    }
                    std::swap(a, b);
                }
                if (deg_of(a) != 0) sqfree = false;
                if (!sqfree) continue;
            }
            // fibers over rational points
            long long b1 = 0, c1 = 0, ram1 = 0;
            long long sumchi = 0;
            for (uint32_t t = 0; t < F.n; ++t) {
                uint32_t v = 0;
                for (int i = 4; i >= 0; --i) v = F.add(F.mul(v, t), co[(size_t)i]);
                int ch = chi[v];
                sumchi += ch;
                if (ch > 0) ++b1;
                else if (ch < 0) ++c1;
                else ++ram1;
            }
            // point at infinity: value = a4 (degf == 4) else ramified
            if (degf == 4) {
                int ch = chi[co[4]];
                sumchi += ch;
                if (ch > 0) ++b1;
                else if (ch < 0) ++c1;
                else ++ram1;  // impossible (degf == 4)
            } else {
                ++ram1;
            }
            long long a1 = -sumchi;
            // degree-2 ramification from the factor profile of f (infinity root rational)
            std::array<int, 5> prof{0, 0, 0, 0, 0};
            {
                std::vector<uint32_t> f(co.begin(), co.begin() + degf + 1);
                prof = root_degree_profile(F, f);
            }
            long long ram2 = prof[2];
            // |C(k_2)| = q^2 + 1 - (a1^2 - 2q)
            long long ck2 = qq * qq + 1 - (a1 * a1 - 2 * qq);
            long long s2geo = ck2 - (2 * (qq + 1) - ram1) - 2 * ram2;
            if (s2geo % 4) throw std::logic_error("genus1_cover_census: bad S2");
            long long B2 = s2geo / 4;
            long long C2 = (qq * qq - qq) / 2 - ram2 - B2;
            CoverStats st;
            st.B1 = b1; st.C1 = c1; st.B2 = B2; st.C2 = C2; st.a1 = a1;
            ++agg[st];
        }
        // weight 1/|GL_2|
        Rational w = Rational(BigInt(1)) / Rational((q * q - BigInt(1)) * (q * q - q));
        std::vector<CoverRecord> out;
        for (auto& [st, cnt] : agg) out.push_back({st, w * Rational(cnt)});
        std::lock_guard<std::mutex> lock(g_cover_mutex);
        return g_g1_cache.emplace(std::make_pair(p, r), std::move(out)).first->second;
    }

    // characteristic 2: y^2 + H(s,t) y = G(s,t), H nonzero degree-2 form,
    // G degree-4 form, smooth
    const GF& E2 = tower.ext(2);
    const auto& emb2 = embedding(F, E2);
    // absolute trace to F_2
    auto tr1 = [&](uint32_t a) {
        uint32_t s = 0, x = a;
        for (int i = 0; i < F.r; ++i) { s = F.add(s, x); x = F.mul(x, x); }
        return s;  // 0 or 1
    };
    auto tr2 = [&](uint32_t a) {
        uint32_t s = 0, x = a;
        for (int i = 0; i < E2.r; ++i) { s = E2.add(s, x); x = E2.mul(x, x); }
        return s;
    };

    std::vector<uint32_t> h(3), g(5);
    for (h[2] = 0; h[2] < F.n; ++h[2])
    for (h[1] = 0; h[1] < F.n; ++h[1])
    for (h[0] = 0; h[0] < F.n; ++h[0]) {
        if (!h[0] && !h[1] && !h[2]) continue;
        // roots of the binary form H (for ramification and smoothness)
        BinaryForm H;
        H.F = &F;
        H.degree = 2;
        H.c = {h[2], h[1], h[0]};  // s^2, s t, t^2 coefficients
        auto hroots = binary_roots(H, tower, 1);
        for (g[4] = 0; g[4] < F.n; ++g[4])
        for (g[3] = 0; g[3] < F.n; ++g[3])
        for (g[2] = 0; g[2] < F.n; ++g[2])
        for (g[1] = 0; g[1] < F.n; ++g[1])
        for (g[0] = 0; g[0] < F.n; ++g[0]) {
            // smoothness at each root of H
            bool smooth = true;
            for (const auto& root : hroots) {
                const GF& E = tower.ext(root.ext_degree);
                const auto& em = embedding(F, E);
                uint32_t s = root.s, t = root.t;
                // gradient data in the chart where the root is affine
                uint32_t hp, fp, fv;
                if (t != 0) {
                    uint32_t x0 = E.div(s, t);
                    hp = em[h[1]];
                    uint32_t x2 = E.mul(x0, x0), x3 = E.mul(x2, x0), x4 = E.mul(x2, x2);
                    fv = E.add(E.add(E.mul(em[g[4]], x4), E.mul(em[g[3]], x3)),
                               E.add(E.mul(em[g[2]], x2),
                                     E.add(E.mul(em[g[1]], x0), em[g[0]])));
                    // f' = 4 g4 x^3 + 3 g3 x^2 + 2 g2 x + g1 = g3 x^2 + g1 (char 2)
                    fp = E.add(E.mul(em[g[3]], x2), em[g[1]]);
                } else {
                    // infinity chart: h~(u) = h0 u^2 + h1 u + h2, f~(u) = g0 u^4 + ... + g4
                    hp = em[h[1]];
                    fv = em[g[4]];
                    fp = em[g[3]];  // f~' at 0 = coefficient of u (char 2): g3? f~ = g0u^4+g1u^3+g2u^2+g3u+g4: f~' = g3 + 2..u.. = g3
                }
                if (hp != 0) {
                    uint32_t y0 = E.div(fp, hp);
                    if (E.mul(y0, y0) == fv) { smooth = false; break; }
                } else {
                    if (fp == 0) { smooth = false; break; }
                }
            }
            if (!smooth) continue;
            // fibers over rational points of P^1
            long long b1 = 0, c1 = 0, ram1 = 0;
            long long npts = 0;
            for (const ProjPoint& P : enumerate_points(1, F)) {
                uint32_t s = P.c[0], t = P.c[1];
                uint32_t s2 = F.mul(s, s), t2 = F.mul(t, t), st = F.mul(s, t);
                uint32_t Hv = F.add(F.add(F.mul(h[2], s2), F.mul(h[1], st)), F.mul(h[0], t2));
                uint32_t s3 = F.mul(s2, s), s4 = F.mul(s2, s2), t3 = F.mul(t2, t), t4 = F.mul(t2, t2);
                uint32_t Gv = F.add(
                    F.add(F.add(F.mul(g[4], s4), F.mul(g[3], F.mul(s3, t))),
                          F.mul(g[2], F.mul(s2, t2))),
                    F.add(F.mul(g[1], F.mul(s, t3)), F.mul(g[0], t4)));
                if (Hv == 0) { ++ram1; ++npts; continue; }
                uint32_t a = F.div(Gv, F.mul(Hv, Hv));
                if (tr1(a) == 0) { ++b1; npts += 2; }
                else ++c1;
            }
            long long a1 = qq + 1 - npts;
            // degree-2 ramification: closed roots of H of degree 2
            long long ram2 = 0, ram1cl = 0;
            for (const auto& root : hroots)
                (root.ext_degree == 2 ? ram2 : ram1cl) += 1;
            (void)ram1cl;
            long long ck2 = qq * qq + 1 - (a1 * a1 - 2 * qq);
            long long s2geo = ck2 - (2 * (qq + 1) - ram1) - 2 * ram2;
            if (s2geo % 4) throw std::logic_error("genus1_cover_census: bad S2 (even)");
            long long B2 = s2geo / 4;
            long long C2 = (qq * qq - qq) / 2 - ram2 - B2;
            CoverStats st;
            st.B1 = b1; st.C1 = c1; st.B2 = B2; st.C2 = C2; st.a1 = a1;
            ++agg[st];
        }
        (void)emb2;
        (void)tr2;
    }
    Rational w = Rational(BigInt(1)) /
                 Rational((q * q - BigInt(1)) * (q * q - q) * q * q * q);
    std::vector<CoverRecord> out;
    for (auto& [st, cnt] : agg) out.push_back({st, w * Rational(cnt)});
    std::lock_guard<std::mutex> lock(g_cover_mutex);
    return g_g1_cache.emplace(std::make_pair(p, r), std::move(out)).first->second;
}

Rational genus1_mass_by_orbits(int p, int r) {
    // brute-force dedup of models into orbits under the substitution group;
    // feasible only at tiny q. Odd characteristic only (used as a unit check).
    if (p == 2) throw std::invalid_argument("genus1_mass_by_orbits: odd characteristic only");
    Tower tower(p, r);
    const GF& F = tower.base();
    long long qq = (long long)tower.q();

    auto sqfree_form = [&](const std::array<uint32_t, 5>& co) {
        int degf = 4;
        while (degf >= 0 && co[(size_t)degf] == 0) --degf;
        if (degf < 3) return false;
        std::vector<uint32_t> f(co.begin(), co.begin() + degf + 1), fp((size_t)degf, 0);
        for (int i = 1; i <= degf; ++i) fp[(size_t)(i - 1)] = F.mul(f[(size_t)i], F.from_int(i));
        auto deg_of = [&](const std::vector<uint32_t>& a) {
            int d = (int)a.size() - 1;
            while (d >= 0 && a[(size_t)d] == 0) --d;
            return d;
        };
        std::vector<uint32_t> a = f, b = fp;
        while (deg_of(b) >= 0) {
            int db = deg_of(b);
            for (int i = deg_of(a); i >= db; --i) {
                uint32_t c = F.div(a[(size_t)i], b[(size_t)db]);
                if (!c) continue;
                for (int j = 0; j <= db; ++j)
                    a[(size_t)(i - db + j)] = F.sub(a[(size_t)(i - db + j)], F.mul(c, b[(size_t)j]));
            }
            std::swap(a, b);
            if (deg_of(b) < 0) break;
        }
        return deg_of(a) == 0;
    };

    // all valid models as encoded keys
    std::set<uint64_t> models;
    std::array<uint32_t, 5> co;
    for (co[4] = 0; co[4] < F.n; ++co[4])
    for (co[3] = 0; co[3] < F.n; ++co[3])
    for (co[2] = 0; co[2] < F.n; ++co[2])
    for (co[1] = 0; co[1] < F.n; ++co[1])
    for (co[0] = 0; co[0] < F.n; ++co[0])
        if (sqfree_form(co)) {
            uint64_t key = 0;
            for (int i = 4; i >= 0; --i) key = key * F.n + co[(size_t)i];
            models.insert(key);
        }

    // physical substitutions: (M in PGL_2 representatives, e in k*/{+-1}) act by
    // F -> F(M(s,t)) / e^2 ... we enumerate (M in GL_2, e in k*) and de-dup orbits.
    auto transform = [&](const std::array<uint32_t, 5>& cf, const std::array<uint32_t, 4>& M,
                         uint32_t e) {
        // binary form coefficients: F(s,t) = sum cf[i] s^i t^(4-i)
        // substitute s -> M0 s + M1 t, t -> M2 s + M3 t, then divide by e^2
        std::array<uint32_t, 5> out{0, 0, 0, 0, 0};
        for (int i = 0; i <= 4; ++i) {
            if (!cf[(size_t)i]) continue;
            // (M0 s + M1 t)^i (M2 s + M3 t)^(4-i)
            std::array<uint32_t, 5> poly{0, 0, 0, 0, 0};
            poly[0] = 1;  // constant 1 as a degree-0 "form" in accumulating array (index = s-degree)
            int deg = 0;
            auto mul_lin = [&](uint32_t a, uint32_t b) {
                // multiply poly (degree deg) by (a s + b t)
                std::array<uint32_t, 5> nx{0, 0, 0, 0, 0};
                for (int d2 = 0; d2 <= deg; ++d2) {
                    nx[(size_t)(d2 + 1)] = F.add(nx[(size_t)(d2 + 1)], F.mul(poly[(size_t)d2], a));
                    nx[(size_t)d2] = F.add(nx[(size_t)d2], F.mul(poly[(size_t)d2], b));
                }
                poly = nx;
                ++deg;
            };
            for (int k2 = 0; k2 < i; ++k2) mul_lin(M[0], M[1]);
            for (int k2 = 0; k2 < 4 - i; ++k2) mul_lin(M[2], M[3]);
            for (int d2 = 0; d2 <= 4; ++d2)
                out[(size_t)d2] = F.add(out[(size_t)d2], F.mul(cf[(size_t)i], poly[(size_t)d2]));
        }
        uint32_t e2inv = F.inv(F.mul(e, e));
        for (auto& v : out) v = F.mul(v, e2inv);
        return out;
    };

    std::set<uint64_t> seen;
    Rational mass(0);
    for (uint64_t key0 : models) {
        if (seen.count(key0)) continue;
        std::array<uint32_t, 5> cf;
        uint64_t k2 = key0;
        for (int i = 4; i >= 0; --i) { cf[(size_t)i] = (uint32_t)(k2 % F.n); k2 /= F.n; }
        // orbit under all (M, e); count physical maps fixing the model
        std::set<uint64_t> orbit;
        long long stab_raw = 0, group_raw = 0;
        for (uint32_t m0 = 0; m0 < F.n; ++m0)
        for (uint32_t m1 = 0; m1 < F.n; ++m1)
        for (uint32_t m2 = 0; m2 < F.n; ++m2)
        for (uint32_t m3 = 0; m3 < F.n; ++m3) {
            uint32_t det = F.sub(F.mul(m0, m3), F.mul(m1, m2));
            if (det == 0) continue;
            for (uint32_t e = 1; e < F.n; ++e) {
                ++group_raw;
                auto tf = transform(cf, {m0, m1, m2, m3}, e);
                uint64_t tk = 0;
                for (int i = 4; i >= 0; --i) tk = tk * F.n + tf[(size_t)i];
                orbit.insert(tk);
                if (tk == key0) ++stab_raw;
            }
        }
        for (uint64_t k3 : orbit) seen.insert(k3);
        // physical stabilizer = raw stabilizer / (q - 1) scalar redundancy
        if (stab_raw % (qq - 1)) throw std::logic_error("genus1_mass_by_orbits: stabilizer not divisible");
        mass += Rational(BigInt(qq - 1), BigInt(stab_raw));
        (void)group_raw;
    }
    return mass;
}

}  // namespace curvecount
