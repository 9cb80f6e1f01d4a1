#include "curvecount/singularity.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace curvecount {

std::string SingularityRecord::label() const {
    auto pat = [&]() -> std::string {
        if (branch_degs.size() == 1 && branch_degs[0] == 1) return "c";
        if (branch_degs.size() == 2 && branch_degs[0] == 1 && branch_degs[1] == 1) return "n1";
        if (branch_degs.size() == 1 && branch_degs[0] == 2) return "n2";
        return "";
    }();
    if (delta == 1 && !pat.empty()) return pat;
    if (delta == 2 && !pat.empty()) return "t" + pat;
    std::string s = "d" + std::to_string(delta) + "m" + std::to_string(multiplicity) + "b";
    for (int d : branch_degs) s += std::to_string(d);
    return s;
}

std::string SingularityRecord::str() const {
    std::string s = label();
    if (orbit_degree > 1) s += "@" + std::to_string(orbit_degree);
    return s;
}

bool SingularityRecord::operator<(const SingularityRecord& o) const {
    return std::tie(orbit_degree, delta, multiplicity, branch_degs) <
           std::tie(o.orbit_degree, o.delta, o.multiplicity, o.branch_degs);
}
bool SingularityRecord::operator==(const SingularityRecord& o) const {
    return orbit_degree == o.orbit_degree && delta == o.delta &&
           multiplicity == o.multiplicity && branch_degs == o.branch_degs;
}

namespace {

struct SqrtTables {
    std::vector<uint32_t> sqrt;      // char 2: x -> sqrt(x); odd: x^2 -> x (min root), else UINT32_MAX
    std::vector<uint32_t> artin;     // char 2: a -> z with z^2+z=a, else UINT32_MAX
};

std::map<const GF*, SqrtTables> g_sqrt;
std::mutex g_sqrt_mutex;

const SqrtTables& sqrt_tables(const GF& F) {
    std::lock_guard<std::mutex> lock(g_sqrt_mutex);
    auto it = g_sqrt.find(&F);
    if (it != g_sqrt.end()) return it->second;
    SqrtTables t;
    if (F.p == 2) {
        t.sqrt.resize(F.n);
        for (uint32_t x = 0; x < F.n; ++x) t.sqrt[F.mul(x, x)] = x;
        t.artin.assign(F.n, UINT32_MAX);
        for (uint32_t z = 0; z < F.n; ++z) {
            uint32_t a = F.add(F.mul(z, z), z);
            if (t.artin[a] == UINT32_MAX || z < t.artin[a]) t.artin[a] = z;
        }
    } else {
        t.sqrt.assign(F.n, UINT32_MAX);
        for (uint32_t x = 0; x < F.n; ++x) {
            uint32_t sq = F.mul(x, x);
            if (t.sqrt[sq] == UINT32_MAX || x < t.sqrt[sq]) t.sqrt[sq] = x;
        }
    }
    return g_sqrt.emplace(&F, std::move(t)).first->second;
}

}  // namespace

uint32_t gf_sqrt(const GF& F, uint32_t a) {
    if (F.p != 2) throw std::logic_error("gf_sqrt: char 2 only");
    return sqrt_tables(F).sqrt[a];
}

std::vector<std::pair<uint32_t, uint32_t>> quadratic_roots_in_field(const GF& F, uint32_t c0,
                                                                    uint32_t c1, uint32_t c2) {
    std::vector<std::pair<uint32_t, uint32_t>> roots;
    if (c0 == 0) {
        roots.push_back({1, 0});
        // remaining linear: c1 s t + c2 t^2 = t (c1 s + c2 t)
        if (c1 != 0) roots.push_back({F.neg(F.div(c2, c1)), 1});
        else roots[0] = {1, 0};  // double root at infinity
        return roots;
    }
    const auto& T = sqrt_tables(F);
    if (F.p == 2) {
        if (c1 == 0) {
            // (sqrt(c0) s + sqrt(c2) t)^2: a single double root
            roots.push_back({T.sqrt[c2], T.sqrt[c0]});
            if (roots[0].second != 0)
                roots[0] = {F.div(roots[0].first, roots[0].second), 1};
            return roots;
        }
        // s^2 + (c1/c0) s t + (c2/c0) t^2; u = s/t: u^2 + b u + c, b != 0
        uint32_t b = F.div(c1, c0), c = F.div(c2, c0);
        // u = b z, z^2 + z = c / b^2
        uint32_t a = F.div(c, F.mul(b, b));
        uint32_t z = T.artin[a];
        if (z == UINT32_MAX) return {};
        roots.push_back({F.mul(b, z), 1});
        roots.push_back({F.add(F.mul(b, z), b), 1});
        return roots;
    }
    // odd characteristic: u^2 + b u + c with u = s/t
    uint32_t b = F.div(c1, c0), c = F.div(c2, c0);
    uint32_t disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), c));
    uint32_t sq = T.sqrt[disc];
    if (sq == UINT32_MAX) return {};
    uint32_t inv2 = F.inv(F.from_int(2));
    uint32_t r1 = F.mul(inv2, F.sub(sq, b));
    uint32_t r2 = F.mul(inv2, F.sub(F.neg(sq), b));
    roots.push_back({r1, 1});
    if (r2 != r1) roots.push_back({r2, 1});
    return roots;
}

namespace {

// local bivariate polynomial over a field, dense small grid
struct LocalPoly {
    const GF* F;
    int nx, ny;  // grid sizes
    std::vector<uint32_t> c;  // c[i*ny + j] = coeff of x^i y^j

    uint32_t get(int i, int j) const { return c[(size_t)i * ny + j]; }
    void add(int i, int j, uint32_t v) {
        auto& slot = c[(size_t)i * ny + j];
        slot = F->add(slot, v);
    }
};

int local_multiplicity(const LocalPoly& g) {
    int m = INT32_MAX;
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j)
            if (g.get(i, j)) m = std::min(m, i + j);
    return m == INT32_MAX ? -1 : m;
}

LocalPoly embed_local(const LocalPoly& g, const GF& to) {
    const auto& emb = embedding(*g.F, to);
    LocalPoly h{&to, g.nx, g.ny, {}};
    h.c.resize(g.c.size());
    for (size_t i = 0; i < g.c.size(); ++i) h.c[i] = emb[g.c[i]];
    return h;
}

// strict transform at direction y = w x: h(x, y) = g(x, x(w + y)) / x^m
LocalPoly blow_dir(const LocalPoly& g, uint32_t w, int m) {
    const GF& F = *g.F;
    LocalPoly h{&F, g.nx + g.ny, g.ny, {}};
    h.c.assign((size_t)h.nx * h.ny, 0);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) {
            uint32_t v = g.get(i, j);
            if (!v) continue;
            // x^i * x^j * (w + y)^j = x^(i+j) sum_k C(j,k) w^(j-k) y^k
            for (int k = 0; k <= j; ++k) {
                // binomial in the prime field
                long long bin = 1;
                for (int t = 0; t < k; ++t) bin = bin * (j - t) / (t + 1);
                uint32_t term = F.mul(v, F.from_int(bin));
                if (!term) continue;
                term = F.mul(term, F.pow(w, (uint64_t)(j - k)));
                h.add(i + j - m, k, term);
            }
        }
    return h;
}

// strict transform along the vertical direction: h(x, y) = g(y x, y) / y^m
LocalPoly blow_vertical(const LocalPoly& g, int m) {
    const GF& F = *g.F;
    LocalPoly h{&F, g.nx, g.nx + g.ny, {}};
    h.c.assign((size_t)h.nx * h.ny, 0);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) {
            uint32_t v = g.get(i, j);
            if (!v) continue;
            h.add(i, i + j - m, v);
        }
    return h;
}

struct LocalResult {
    int delta = 0;
    std::vector<int> branch_degs;  // relative to the field the analysis started in
};

// Recursive resolution at the origin. `rel_deg` is the degree of the current
// field over the field of the original singular point.
LocalResult resolve(const LocalPoly& g, const Tower& tower, int cur_ext, int rel_deg, int depth) {
    if (depth > 12) throw std::logic_error("resolve: depth bound exceeded");
    LocalResult out;
    int m = local_multiplicity(g);
    if (m < 0) throw std::logic_error("resolve: zero local polynomial (non-reduced?)");
    if (m == 0) throw std::logic_error("resolve: point not on curve");
    if (m == 1) {
        out.branch_degs.push_back(rel_deg);
        return out;
    }
    out.delta += rel_deg * m * (m - 1) / 2;

    // tangent cone: sum_{i+j=m} c_ij x^i y^j as binary form in directions (x:y);
    // root (x0:y0) corresponds to the direction line y0 x - x0 y ... we take
    // direction parameter w = y/x, plus the vertical direction x = 0.
    const GF& F = *g.F;
    std::vector<uint32_t> tc(m + 1);
    for (int i = 0; i <= m; ++i) tc[i] = g.get(m - i, i);  // coeff of x^(m-i) y^i

    // directions = roots of sum tc[i] x^(m-i) y^i, i.e. binary form with s=x,t=y
    // find roots over extensions of the current field
    struct Dir {
        bool vertical;
        uint32_t w;
        int mult;
        int ext;  // degree over current field
    };
    std::vector<Dir> dirs;
    int accounted = 0;
    {
        // vertical direction (x=0): corresponds to tc with x-degree 0 only
        // root (x:y)=(0:1): leading coeffs tc[m]? vertical root iff coeff of y^m
        // ... binary form B(x,y) = sum tc[i] x^(m-i) y^i; B(0,1) = tc[m].
        if (tc[m] == 0) {
            int mult = 0;
            int i = m;
            while (i >= 0 && tc[i] == 0) { ++mult; --i; }
            dirs.push_back({true, 0, mult, 1});
            accounted += mult;
        }
        // affine directions w with sum tc[i] w^i = 0 (setting x=1, y=w).
        // Quadratic tangent cones (the common case) go through the closed-form
        // solver; everything else scans small extensions.
        if (m == 2 && accounted == 0) {
            auto rts = quadratic_roots_in_field(F, tc[2], tc[1], tc[0]);
            if (!rts.empty()) {
                if (rts.size() == 2) {
                    dirs.push_back({false, F.div(rts[0].first, rts[0].second), 1, 1});
                    dirs.push_back({false, F.div(rts[1].first, rts[1].second), 1, 1});
                } else {
                    dirs.push_back({false, F.div(rts[0].first, rts[0].second), 2, 1});
                }
                accounted = 2;
            } else {
                // irreducible: conjugate pair of directions over the quadratic extension
                const GF& F2 = tower.ext(cur_ext * 2);
                const auto& emb = embedding(F, F2);
                auto rts2 = quadratic_roots_in_field(F2, emb[tc[2]], emb[tc[1]], emb[tc[0]]);
                if (rts2.size() != 2) throw std::logic_error("resolve: quadratic did not split");
                uint32_t w0 = F2.div(rts2[0].first, rts2[0].second);
                uint32_t w1 = F2.div(rts2[1].first, rts2[1].second);
                dirs.push_back({false, std::min(w0, w1), 1, 2});
                accounted = 2;
            }
        }
        for (int j = 1; j <= m - accounted && accounted < m; ++j) {
            const GF& Fj = tower.ext(cur_ext * j);
            const auto& emb = embedding(F, Fj);
            // evaluate over elements of degree exactly j
            for (uint32_t w = 0; w < Fj.n && accounted < m; ++w) {
                if (Fj.degree_over(w, tower.r() * cur_ext) != j) continue;
                // representative: minimal in its orbit
                {
                    uint32_t x = Fj.frob(w, tower.r() * cur_ext);
                    bool rep = true;
                    while (x != w) {
                        if (x < w) { rep = false; break; }
                        x = Fj.frob(x, tower.r() * cur_ext);
                    }
                    if (!rep) continue;
                }
                uint32_t acc = 0, pw = 1;
                for (int i = 0; i <= m; ++i) {
                    acc = Fj.add(acc, Fj.mul(emb[tc[i]], pw));
                    pw = Fj.mul(pw, w);
                }
                if (acc != 0) continue;
                // multiplicity by synthetic division over Fj
                std::vector<uint32_t> c(m + 1);
                for (int i = 0; i <= m; ++i) c[i] = emb[tc[i]];
                int mult = 0;
                while (c.size() > 1) {
                    // divide sum c[i] w^i by (w - root): Horner from top degree
                    std::vector<uint32_t> quot(c.size() - 1, 0);
                    uint32_t acc2 = 0;
                    for (size_t i = c.size(); i-- > 1;) {
                        acc2 = Fj.add(Fj.mul(acc2, w), c[i]);
                        quot[i - 1] = acc2;
                    }
                    uint32_t rem = Fj.add(Fj.mul(acc2, w), c[0]);
                    if (rem != 0) break;
                    ++mult;
                    c = std::move(quot);
                }
                dirs.push_back({false, w, mult, j});
                accounted += mult * j;
            }
        }
    }
    if (accounted != m) throw std::logic_error("resolve: tangent cone roots not accounted");

    for (const Dir& dir : dirs) {
        const GF& Fj = tower.ext(cur_ext * dir.ext);
        LocalPoly ge = dir.ext == 1 ? g : embed_local(g, Fj);
        LocalPoly h = dir.vertical ? blow_vertical(ge, m) : blow_dir(ge, dir.w, m);
        LocalResult sub = resolve(h, tower, cur_ext * dir.ext, rel_deg * dir.ext, depth + 1);
        out.delta += sub.delta;
        out.branch_degs.insert(out.branch_degs.end(), sub.branch_degs.begin(), sub.branch_degs.end());
    }
    std::sort(out.branch_degs.begin(), out.branch_degs.end());
    return out;
}

}  // namespace

SingularityRecord classify_singularity(const TernaryForm& f, const Tower& tower,
                                       const ProjPoint& P, int orbit_degree) {
    const GF& Fd = *P.F;
    // move P to (0:0:1): columns e_i, e_j, P with {i,j} avoiding a nonzero
    // coordinate of P
    int k = 2;
    while (P.c[k] == 0) --k;
    int i = (k == 0) ? 1 : 0;
    int j = (k == 2) ? 1 : 2;
    if (i == j) j = (j + 1) % 3;
    std::array<std::array<uint32_t, 3>, 3> M{};
    M[i][0] = 1;
    M[j][1] = 1;
    for (int v = 0; v < 3; ++v) M[v][2] = P.c[v];
    TernaryForm fe = (f.F == &Fd) ? f : f.map_into(Fd);
    TernaryForm g = fe.substitute(M);

    // local polynomial g(x, y, 1)
    const auto& B = MonomialBasis::get(g.degree);
    LocalPoly loc{&Fd, g.degree + 1, g.degree + 1, {}};
    loc.c.assign((size_t)loc.nx * loc.ny, 0);
    for (size_t t = 0; t < g.coeffs.size(); ++t)
        if (g.coeffs[t]) loc.add(B.exps[t][0], B.exps[t][1], g.coeffs[t]);

    LocalResult res = resolve(loc, tower, orbit_degree, 1, 0);
    SingularityRecord rec;
    rec.orbit_degree = orbit_degree;
    rec.delta = res.delta;
    rec.multiplicity = local_multiplicity(loc) >= 0 ? local_multiplicity(loc) : 0;
    rec.branch_degs = res.branch_degs;
    if (rec.delta <= 0) throw std::logic_error("classify_singularity: point is not singular");
    return rec;
}

std::vector<std::pair<ProjPoint, int>> singular_points(const TernaryForm& f, const Tower& tower,
                                                       int max_deg) {
    std::vector<std::pair<ProjPoint, int>> out;
    TernaryForm fx = f.dx(), fy = f.dy(), fz = f.dz();
    for (int d = 1; d <= max_deg; ++d) {
        const GF& Fd = tower.ext(d);
        const auto& emb = embedding(*f.F, Fd);
        for (const ProjPoint& P : closed_points(tower, 2, d)) {
            if (f.evaluate_ext(P, emb)) continue;
            if (!fx.is_zero() && fx.evaluate_ext(P, emb)) continue;
            if (!fy.is_zero() && fy.evaluate_ext(P, emb)) continue;
            if (!fz.is_zero() && fz.evaluate_ext(P, emb)) continue;
            out.push_back({P, d});
        }
    }
    return out;
}

uint64_t point_count_scan(const TernaryForm& f, const Tower& tower, int m) {
    const GF& Fm = tower.ext(m);
    const auto& emb = embedding(*f.F, Fm);
    uint64_t count = 0;
    for (const ProjPoint& P : enumerate_points(2, Fm))
        if (f.evaluate_ext(P, emb) == 0) ++count;
    return count;
}

}  // namespace curvecount
