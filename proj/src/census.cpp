#include "curvecount/census.hpp"

#include <atomic>
#include <cstring>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "curvecount/config.hpp"
#include "curvecount/form.hpp"
#include "curvecount/geom.hpp"
#include "curvecount/linsys.hpp"
#include "curvecount/singularity.hpp"
#include "curvecount/tables.hpp"

namespace curvecount {

BigInt CensusResult::singular_total() const {
    BigInt t(0);
    for (const auto& [key, by_a1] : types)
        for (const auto& [a1, count] : by_a1) t += BigInt(count);
    return t;
}

std::string census_key_of(const CurveStructure& s) { return s.key(); }

namespace {

// ---------------------------------------------------------------------------
// zeta closure for smooth curves from N_1..N_genus
// ---------------------------------------------------------------------------

std::vector<long long> zeta_extend_counts(long long q, const std::vector<long long>& counts,
                                          int genus, int m_max) {
    std::vector<long long> a((size_t)std::max(m_max, genus) + 1, 0);
    long long qp = 1;
    for (int m = 1; m <= genus; ++m) {
        qp *= q;
        a[(size_t)m] = qp + 1 - counts[(size_t)m - 1];
    }
    std::vector<long long> e((size_t)2 * genus + 1, 0);
    e[0] = 1;
    for (int k = 1; k <= genus; ++k) {
        long long s = 0;
        for (int i = 1; i <= k; ++i) s += (i % 2 ? 1 : -1) * e[(size_t)(k - i)] * a[(size_t)i];
        if (s % k) throw std::logic_error("zeta_extend: non-integral e_k");
        e[(size_t)k] = s / k;
    }
    long long qg = 1;
    for (int k = genus - 1; k >= 0; --k) {
        qg *= q;
        e[(size_t)(2 * genus - k)] = qg * e[(size_t)k];
    }
    for (int m = genus + 1; m <= m_max; ++m) {
        long long s = 0;
        for (int i = 1; i <= std::min(m, 2 * genus); ++i)
            s += (i % 2 ? 1 : -1) * e[(size_t)i] * a[(size_t)(m - i)];
        if (m <= 2 * genus) s += (m % 2 ? 1 : -1) * e[(size_t)m] * m;
        a[(size_t)m] = s;
    }
    std::vector<long long> out((size_t)m_max);
    qp = 1;
    for (int m = 1; m <= m_max; ++m) {
        qp *= q;
        out[(size_t)m - 1] = qp + 1 - a[(size_t)m];
    }
    return out;
}

// ---------------------------------------------------------------------------
// product tables: every degree-d form with a proper component, with tallies
// ---------------------------------------------------------------------------

struct ProductTables {
    std::vector<uint8_t> reducible;  // indexed by normalized form encode
    std::map<std::string, std::map<long long, long long>> tallies;
};

TernaryForm frobenius_form(const Tower& tower, const TernaryForm& f) {
    TernaryForm g = f;
    for (auto& c : g.coeffs) c = f.F->frob(c, tower.r());
    return g;
}

TernaryForm product_form(const Tower& tower, const std::vector<ConfigComponent>& comps) {
    int lcm = 1;
    for (const auto& c : comps) lcm = std::lcm(lcm, c.orbit);
    const GF& E = tower.ext(lcm);
    TernaryForm acc = TernaryForm::zero(E, 0);
    acc.coeffs = {1};
    for (const auto& c : comps)
        for (int m = 0; m < c.mult; ++m)
            for (const auto& member : c.members) {
                TernaryForm g = (member.F == &E) ? member : member.map_into(E);
                acc = acc * g;
            }
    const auto& emb = embedding(tower.base(), E);
    static std::map<std::pair<const GF*, const GF*>, std::vector<uint32_t>> inv_cache;
    static std::mutex inv_mutex;
    const std::vector<uint32_t>* inv;
    {
        std::lock_guard<std::mutex> lock(inv_mutex);
        auto key = std::make_pair(&tower.base(), &E);
        auto it = inv_cache.find(key);
        if (it == inv_cache.end()) {
            std::vector<uint32_t> v(E.n, UINT32_MAX);
            for (uint32_t a = 0; a < emb.size(); ++a) v[emb[a]] = a;
            it = inv_cache.emplace(key, std::move(v)).first;
        }
        inv = &it->second;
    }
    TernaryForm out = TernaryForm::zero(tower.base(), acc.degree);
    for (size_t i = 0; i < acc.coeffs.size(); ++i) {
        uint32_t v = (*inv)[acc.coeffs[i]];
        if (v == UINT32_MAX) throw std::logic_error("product_form: coefficient not rational");
        out.coeffs[i] = v;
    }
    return out.normalized();
}

void register_product(const Tower& tower, ProductTables& pt,
                      const std::vector<ConfigComponent>& comps) {
    if (!pt.reducible.empty()) {
        TernaryForm f = product_form(tower, comps);
        uint64_t key = f.encode();
        if (pt.reducible[key])
            throw std::logic_error("register_product: duplicate product " + f.str());
        pt.reducible[key] = 1;
    }
    long long a1 = 0;
    CurveStructure cs = analyze_config(tower, comps, &a1);
    pt.tallies[cs.key()][a1]++;
}

ConfigComponent line_orbit_component(const Tower& tower, const ProjPoint& dual, int orbit,
                                     int mult) {
    ConfigComponent cc;
    cc.curve_deg = 1;
    cc.orbit = orbit;
    cc.mult = mult;
    ProjPoint D = dual;
    for (int i = 0; i < orbit; ++i) {
        TernaryForm line = TernaryForm::zero(*D.F, 1);
        line.coeffs = {D.c[0], D.c[1], D.c[2]};
        cc.members.push_back(line);
        D = frobenius_point(D, tower.r());
    }
    return cc;
}

// smooth conics over ext(e), one representative per Frobenius orbit when
// e > 1 (skipping the ones already defined over the base)
std::vector<TernaryForm> smooth_conics(const Tower& tower, int e) {
    const GF& E = tower.ext(e);
    std::vector<uint32_t> inv;
    if (e > 1) {
        const auto& emb = embedding(tower.base(), E);
        inv.assign(E.n, UINT32_MAX);
        for (uint32_t a = 0; a < emb.size(); ++a) inv[emb[a]] = a;
    }
    std::vector<TernaryForm> out;
    for (int lead = 0; lead < 6; ++lead) {
        uint64_t tail = 1;
        for (int i = lead + 1; i < 6; ++i) tail *= E.n;
        for (uint64_t suffix = 0; suffix < tail; ++suffix) {
            TernaryForm f = TernaryForm::zero(E, 2);
            f.coeffs[(size_t)lead] = 1;
            uint64_t s = suffix;
            for (int i = 5; i > lead; --i) {
                f.coeffs[(size_t)i] = (uint32_t)(s % E.n);
                s /= E.n;
            }
            if (e > 1) {
                bool rational = true;
                for (uint32_t c : f.coeffs)
                    if (inv[c] == UINT32_MAX) { rational = false; break; }
                if (rational) continue;
                TernaryForm g = frobenius_form(tower, f).normalized();
                if (g.encode() < f.encode()) continue;
            }
            // a degenerate conic has a singular point rational over its field
            bool smooth = true;
            TernaryForm fx = f.dx(), fy = f.dy(), fz = f.dz();
            for (const ProjPoint& P : enumerate_points(2, E)) {
                if (f.evaluate(P)) continue;
                if (!fx.is_zero() && fx.evaluate(P)) continue;
                if (!fy.is_zero() && fy.evaluate(P)) continue;
                if (!fz.is_zero() && fz.evaluate(P)) continue;
                smooth = false;
                break;
            }
            if (smooth) out.push_back(f);
        }
    }
    return out;
}

// forward declaration (the quartic product table consumes the cubic data)
struct CubicData;
const CubicData& cubic_data(int p, int r);

ProductTables build_product_tables(int p, int r, int degree) {
    Tower tower(p, r);
    const GF& F = tower.base();
    ProductTables pt;
    int ncoef = degree == 4 ? 15 : 10;
    uint64_t total = 1;
    bool overflow = false;
    for (int i = 0; i < ncoef; ++i) {
        total *= F.n;
        if (total > (1ull << 28)) { overflow = true; break; }
    }
    if (!overflow) pt.reducible.assign(total, 0);

    const auto& L1 = closed_points(tower, 2, 1);
    const auto& P2 = closed_points(tower, 2, 2);
    const auto& P3 = closed_points(tower, 2, 3);
    size_t nl = L1.size(), np = P2.size();
    auto conic_component = [&](const TernaryForm& c, int mult) {
        ConfigComponent cc;
        cc.curve_deg = 2;
        cc.orbit = 1;
        cc.mult = mult;
        cc.members.push_back(c);
        return cc;
    };
    std::vector<TernaryForm> conics = smooth_conics(tower, 1);

    if (degree == 3) {
        // three lines (with multiplicity): atoms of degree 1 and a pair orbit
        for (size_t i = 0; i < nl; ++i)
            for (size_t j = i; j < nl; ++j)
                for (size_t k = j; k < nl; ++k) {
                    std::map<uint64_t, std::pair<ProjPoint, int>> mult;
                    for (size_t idx : {i, j, k}) {
                        auto& slot = mult[L1[idx].encode()];
                        slot.first = L1[idx];
                        slot.second++;
                    }
                    std::vector<ConfigComponent> comps;
                    for (auto& [kk, v] : mult)
                        comps.push_back(line_orbit_component(tower, v.first, 1, v.second));
                    register_product(tower, pt, comps);
                }
        for (size_t i = 0; i < nl; ++i)
            for (size_t k = 0; k < np; ++k)
                register_product(tower, pt,
                                 {line_orbit_component(tower, L1[i], 1, 1),
                                  line_orbit_component(tower, P2[k], 2, 1)});
        for (const ProjPoint& t : P3)
            register_product(tower, pt, {line_orbit_component(tower, t, 3, 1)});
        for (const TernaryForm& c : conics)
            for (size_t i = 0; i < nl; ++i)
                register_product(tower, pt,
                                 {conic_component(c, 1), line_orbit_component(tower, L1[i], 1, 1)});
        return pt;
    }

    const auto& P4 = closed_points(tower, 2, 4);
    std::vector<TernaryForm> conic_pairs = smooth_conics(tower, 2);

    // --- four lines from atoms of degree 1 and 2 (with multiplicity) ---
    for (size_t i = 0; i < nl; ++i)
        for (size_t j = i; j < nl; ++j)
            for (size_t k = j; k < nl; ++k)
                for (size_t l = k; l < nl; ++l) {
                    std::map<uint64_t, std::pair<ProjPoint, int>> mult;
                    for (size_t idx : {i, j, k, l}) {
                        auto& slot = mult[L1[idx].encode()];
                        slot.first = L1[idx];
                        slot.second++;
                    }
                    std::vector<ConfigComponent> comps;
                    for (auto& [kk, v] : mult)
                        comps.push_back(line_orbit_component(tower, v.first, 1, v.second));
                    register_product(tower, pt, comps);
                }
    for (size_t i = 0; i < nl; ++i)
        for (size_t j = i; j < nl; ++j)
            for (size_t k = 0; k < np; ++k) {
                std::vector<ConfigComponent> comps;
                if (i == j) comps.push_back(line_orbit_component(tower, L1[i], 1, 2));
                else {
                    comps.push_back(line_orbit_component(tower, L1[i], 1, 1));
                    comps.push_back(line_orbit_component(tower, L1[j], 1, 1));
                }
                comps.push_back(line_orbit_component(tower, P2[k], 2, 1));
                register_product(tower, pt, comps);
            }
    for (size_t i = 0; i < np; ++i)
        for (size_t j = i; j < np; ++j) {
            std::vector<ConfigComponent> comps;
            if (i == j) comps.push_back(line_orbit_component(tower, P2[i], 2, 2));
            else {
                comps.push_back(line_orbit_component(tower, P2[i], 2, 1));
                comps.push_back(line_orbit_component(tower, P2[j], 2, 1));
            }
            register_product(tower, pt, comps);
        }
    for (const ProjPoint& l : L1)
        for (const ProjPoint& t : P3)
            register_product(tower, pt,
                             {line_orbit_component(tower, l, 1, 1),
                              line_orbit_component(tower, t, 3, 1)});
    for (const ProjPoint& quad : P4)
        register_product(tower, pt, {line_orbit_component(tower, quad, 4, 1)});

    // --- conic times degree-2 configurations ---
    for (const TernaryForm& c : conics) {
        for (size_t i = 0; i < nl; ++i)
            for (size_t j = i; j < nl; ++j) {
                std::vector<ConfigComponent> comps{conic_component(c, 1)};
                if (i == j) comps.push_back(line_orbit_component(tower, L1[i], 1, 2));
                else {
                    comps.push_back(line_orbit_component(tower, L1[i], 1, 1));
                    comps.push_back(line_orbit_component(tower, L1[j], 1, 1));
                }
                register_product(tower, pt, comps);
            }
        for (const ProjPoint& pair : P2)
            register_product(tower, pt,
                             {conic_component(c, 1), line_orbit_component(tower, pair, 2, 1)});
    }
    for (size_t i = 0; i < conics.size(); ++i)
        for (size_t j = i; j < conics.size(); ++j) {
            std::vector<ConfigComponent> comps;
            if (i == j) comps.push_back(conic_component(conics[i], 2));
            else {
                comps.push_back(conic_component(conics[i], 1));
                comps.push_back(conic_component(conics[j], 1));
            }
            register_product(tower, pt, comps);
        }
    for (const TernaryForm& cp : conic_pairs) {
        ConfigComponent cc;
        cc.curve_deg = 2;
        cc.orbit = 2;
        cc.mult = 1;
        cc.members.push_back(cp);
        cc.members.push_back(frobenius_form(tower, cp));
        register_product(tower, pt, {cc});
    }
    return pt;
}

std::map<std::tuple<int, int, int>, ProductTables> g_products;
std::mutex g_products_mutex;

ProductTables& product_tables_mut(int p, int r, int degree) {
    std::lock_guard<std::mutex> lock(g_products_mutex);
    auto key = std::make_tuple(p, r, degree);
    auto it = g_products.find(key);
    if (it == g_products.end())
        it = g_products.emplace(key, build_product_tables(p, r, degree)).first;
    return it->second;
}

// ---------------------------------------------------------------------------
// cubic classification data (for quartic line-times-cubic products)
// ---------------------------------------------------------------------------

struct CubicClass {
    int kind = 0;  // 2 smooth, 3 cusp, 4 split node, 5 non-split node
    long long a1 = 0;
    ProjPoint sing;
    std::vector<int> sing_pre;
};

struct CubicData {
    std::vector<std::pair<TernaryForm, CubicClass>> irreducible;
};

std::map<std::pair<int, int>, CubicData> g_cubic_data;
std::mutex g_cubic_mutex;

const CubicData& cubic_data(int p, int r) {
    {
        std::lock_guard<std::mutex> lock(g_cubic_mutex);
        auto it = g_cubic_data.find({p, r});
        if (it != g_cubic_data.end()) return it->second;
    }
    Tower tower(p, r);
    const GF& F = tower.base();
    const ProductTables& pt = product_tables_mut(p, r, 3);
    CubicData out;
    const auto& reps = closed_points(tower, 2, 1);
    const auto& emb1 = embedding(F, tower.ext(1));
    (void)emb1;
    for (int lead = 0; lead < 10; ++lead) {
        uint64_t tail = 1;
        for (int i = lead + 1; i < 10; ++i) tail *= F.n;
        for (uint64_t suffix = 0; suffix < tail; ++suffix) {
            TernaryForm f = TernaryForm::zero(F, 3);
            f.coeffs[(size_t)lead] = 1;
            uint64_t s = suffix;
            for (int i = 9; i > lead; --i) {
                f.coeffs[(size_t)i] = (uint32_t)(s % F.n);
                s /= F.n;
            }
            if (pt.reducible[f.encode()]) continue;
            // irreducible: singular points are rational
            CubicClass cls;
            TernaryForm fx = f.dx(), fy = f.dy(), fz = f.dz();
            long long N1 = 0;
            ProjPoint sing;
            bool singular = false;
            for (const ProjPoint& P : reps) {
                if (f.evaluate(P)) continue;
                ++N1;
                if ((fx.is_zero() || !fx.evaluate(P)) && (fy.is_zero() || !fy.evaluate(P)) &&
                    (fz.is_zero() || !fz.evaluate(P))) {
                    singular = true;
                    sing = P;
                }
            }
            if (!singular) {
                cls.kind = 2;
                cls.a1 = (long long)tower.q() + 1 - N1;
            } else {
                SingularityRecord rec = classify_singularity(f, tower, sing, 1);
                cls.kind = rec.branch_degs == std::vector<int>{1} ? 3
                         : rec.branch_degs == std::vector<int>{1, 1} ? 4 : 5;
                cls.sing = sing;
                cls.sing_pre = rec.branch_degs;
            }
            out.irreducible.push_back({f, cls});
        }
    }
    std::lock_guard<std::mutex> lock(g_cubic_mutex);
    return g_cubic_data.emplace(std::make_pair(p, r), std::move(out)).first->second;
}

// quartic products get the line-times-cubic family appended
std::set<std::tuple<int, int>> g_quartic_products_done;

const ProductTables& product_tables_full(int p, int r, int degree) {
    ProductTables& pt = product_tables_mut(p, r, degree);
    if (degree == 3) return pt;
    {
        std::lock_guard<std::mutex> lock(g_products_mutex);
        if (g_quartic_products_done.count({p, r})) return pt;
    }
    Tower tower(p, r);
    const auto& L1 = closed_points(tower, 2, 1);
    for (const auto& [cubic, cls] : cubic_data(p, r).irreducible) {
        for (const ProjPoint& l : L1) {
            ConfigComponent ck;
            ck.curve_deg = 3;
            ck.orbit = 1;
            ck.mult = 1;
            ck.genus = cls.kind == 2 ? 1 : 0;
            ck.members.push_back(cubic);
            if (cls.kind >= 3) ck.cubic_sing = CubicSingData{cls.sing, cls.sing_pre};
            ck.a1 = cls.a1;
            register_product(tower, pt, {std::move(ck), line_orbit_component(tower, l, 1, 1)});
        }
    }
    std::lock_guard<std::mutex> lock(g_products_mutex);
    g_quartic_products_done.insert({p, r});
    return pt;
}

// ---------------------------------------------------------------------------
// the sweep
// ---------------------------------------------------------------------------

struct SweepShared {
    const Tower* tower = nullptr;
    int degree = 0;
    int ncoef = 0;
    int max_rep_deg = 1;  // 3 for quartics, 1 for cubics
    std::array<int, 4> seg_begin{}, seg_end{};
    std::array<const GF*, 4> fields{};
    std::array<std::vector<uint8_t>, 4> add8;
    int reps_total = 0;
    std::vector<std::vector<std::vector<uint8_t>>> deltas;  // [idx][c-1][4 * reps]
    const ProductTables* products = nullptr;
    const CensusOptions* opt = nullptr;
    std::vector<std::vector<uint32_t>> subst;  // pgl action on coefficients
};

struct TaskResult {
    std::map<std::string, std::map<long long, long long>> types;
    long long smooth = 0;
    std::map<long long, long long> smooth_a1;
    std::map<std::array<long long, 3>, long long> smooth_zeta;
    long long forms = 0;
};

struct SweepWorker {
    const SweepShared& sh;
    TaskResult res;
    std::vector<std::vector<uint8_t>> buffers;
    std::vector<uint32_t> coeffs;

    explicit SweepWorker(const SweepShared& shared) : sh(shared) {
        buffers.assign((size_t)sh.ncoef + 1, std::vector<uint8_t>((size_t)4 * sh.reps_total, 0));
        coeffs.assign((size_t)sh.ncoef, 0);
    }

    void apply_delta(int pos, int idx, uint32_t c) {
        buffers[(size_t)pos + 1] = buffers[(size_t)pos];
        coeffs[(size_t)idx] = c;
        if (!c) return;
        const uint8_t* delta = sh.deltas[(size_t)idx][(size_t)c - 1].data();
        uint8_t* child = buffers[(size_t)pos + 1].data();
        for (int poly = 0; poly < 4; ++poly) {
            size_t off = (size_t)poly * sh.reps_total;
            for (int d = 1; d <= sh.max_rep_deg; ++d) {
                const GF& Fd = *sh.fields[(size_t)d];
                const uint8_t* add = sh.add8[(size_t)d].data();
                for (int i = sh.seg_begin[(size_t)d]; i < sh.seg_end[(size_t)d]; ++i)
                    child[off + (size_t)i] =
                        add[(size_t)child[off + (size_t)i] * Fd.n + delta[off + (size_t)i]];
            }
        }
    }

    void leaf(int pos) {
        ++res.forms;
        const Tower& tower = *sh.tower;
        const uint8_t* vals = buffers[(size_t)pos].data();
        uint64_t key = 0;
        if (!sh.opt->apply_pgl) {
            for (int i = 0; i < sh.ncoef; ++i) key = key * tower.base().n + coeffs[(size_t)i];
        } else {
            for (int i = 0; i < sh.ncoef; ++i) {
                uint32_t v = 0;
                for (int j = 0; j < sh.ncoef; ++j)
                    v = tower.base().add(
                        v, tower.base().mul(sh.subst[(size_t)i][(size_t)j], coeffs[(size_t)j]));
                key = key * tower.base().n + v;
            }
            TernaryForm g = TernaryForm::decode(tower.base(), sh.degree, key);
            key = g.normalized().encode();
        }
        if ((*sh.products).reducible[key]) return;

        long long zeros[4] = {0, 0, 0, 0};
        int nsing = 0;
        int sing_rep[6];
        int sing_deg[6];
        for (int d = 1; d <= sh.max_rep_deg; ++d)
            for (int i = sh.seg_begin[(size_t)d]; i < sh.seg_end[(size_t)d]; ++i) {
                if (vals[i]) continue;
                ++zeros[d];
                if (vals[sh.reps_total + i] == 0 && vals[2 * sh.reps_total + i] == 0 &&
                    vals[3 * sh.reps_total + i] == 0) {
                    if (nsing < 6) {
                        sing_rep[nsing] = i;
                        sing_deg[nsing] = d;
                    }
                    ++nsing;
                }
            }
        long long N1 = zeros[1], N2 = zeros[1] + 2 * zeros[2], N3 = zeros[1] + 3 * zeros[3];
        long long q = (long long)tower.q();

        if (nsing == 0) {
            ++res.smooth;
            if (sh.degree == 3) {
                res.smooth_a1[q + 1 - N1]++;
            } else {
                res.smooth_zeta[{q + 1 - N1, q * q + 1 - N2, q * q * q + 1 - N3}]++;
            }
            return;
        }
        if (nsing > 6) throw std::logic_error("sweep: too many singular orbits");

        TernaryForm f = TernaryForm::decode(tower.base(), sh.degree, key);
        // singular points as (representative, degree); in the pgl run the
        // transformed representatives evaluate g at the original reps, so the
        // original representatives are the right singular points of g
        const Tower& t = tower;
        CurveStructure cs;
        int delta_total = 0;
        long long adj1 = 0;
        for (int s = 0; s < nsing; ++s) {
            int d = sing_deg[s];
            const ProjPoint& P = closed_points(t, 2, d)[(size_t)(sing_rep[s] - sh.seg_begin[(size_t)d])];
            SingularityRecord rec = classify_singularity(f, t, P, d);
            SingOrbit so;
            so.d = d;
            so.delta = rec.delta;
            for (int rel : rec.branch_degs) so.pre.push_back(rel * d);
            cs.sings.push_back(so);
            delta_total += d * rec.delta;
            if (d == 1) {
                long long on_k = 0;
                for (int rel : rec.branch_degs) on_k += rel == 1;
                adj1 += 1 - on_k;
            }
        }
        int genus = (sh.degree == 4 ? 3 : 1) - delta_total;
        if (genus < 0 || genus > 2)
            throw std::logic_error("sweep: impossible genus for " + f.str());
        cs.comps.push_back(CompOrbit{sh.degree, 1, 1, genus});
        cs.canonicalize();
        // counts of the normalization: subtract the singular adjustments
        long long adj[4] = {0, 0, 0, 0};
        for (const SingOrbit& so : cs.sings)
            for (int m = 1; m <= 3; ++m) {
                if (m % so.d) continue;
                adj[m] += so.d;
                for (int fdeg : so.pre)
                    if (m % fdeg == 0) adj[m] -= fdeg;
            }
        long long a1 = genus >= 1 ? q + 1 - (N1 - adj[1]) : 0;
        BigInt bq(q);
        if (genus <= 1) {
            if (!(cs.count_km(bq, 1, a1) == BigInt(N1)))
                throw std::logic_error("sweep: N1 mismatch for " + f.str() + " key " + cs.key());
            if (sh.max_rep_deg >= 3) {
                if (!(cs.count_km(bq, 2, a1) == BigInt(N2)) ||
                    !(cs.count_km(bq, 3, a1) == BigInt(N3)))
                    throw std::logic_error("sweep: N2/N3 mismatch for " + f.str() + " key " +
                                           cs.key());
            }
        } else {
            // genus 2: the first two normalization counts determine the third
            auto counts = zeta_extend_counts(q, {N1 - adj[1], N2 - adj[2]}, 2, 3);
            if (counts[2] + adj[3] != N3)
                throw std::logic_error("sweep: genus-2 zeta mismatch for " + f.str());
        }
        res.types[cs.key()][a1]++;
    }

    void go(int idx, int pos) {
        if (idx == sh.ncoef) {
            leaf(pos);
            return;
        }
        apply_delta(pos, idx, 0);
        go(idx + 1, pos + 1);
        for (uint32_t c = 1; c < sh.tower->base().n; ++c) {
            apply_delta(pos, idx, c);
            go(idx + 1, pos + 1);
        }
        coeffs[(size_t)idx] = 0;
    }
};

}  // namespace

CensusResult sweep_census(int p, int r, int degree, const CensusOptions& opt) {
    Tower tower(p, r);
    const GF& F = tower.base();
    SweepShared sh;
    sh.tower = &tower;
    sh.degree = degree;
    sh.ncoef = (int)MonomialBasis::get(degree).exps.size();
    sh.max_rep_deg = degree == 4 ? 3 : 1;
    sh.opt = &opt;
    sh.products = &product_tables_full(p, r, degree);

    std::vector<ProjPoint> allreps;
    for (int d = 1; d <= sh.max_rep_deg; ++d) {
        const auto& cp = closed_points(tower, 2, d);
        sh.seg_begin[(size_t)d] = (int)allreps.size();
        for (const ProjPoint& P : cp) {
            if (!opt.apply_pgl) {
                allreps.push_back(P);
            } else {
                const GF& Ed = tower.ext(d);
                const auto& emb = embedding(F, Ed);
                ProjPoint Q;
                Q.F = &Ed;
                Q.n = 2;
                for (int i = 0; i < 3; ++i) {
                    uint32_t acc = 0;
                    for (int j = 0; j < 3; ++j)
                        acc = Ed.add(acc, Ed.mul(emb[opt.pgl[(size_t)i][(size_t)j]], P.c[(size_t)j]));
                    Q.c[(size_t)i] = acc;
                }
                allreps.push_back(normalize(Q));
            }
        }
        sh.seg_end[(size_t)d] = (int)allreps.size();
        sh.fields[(size_t)d] = &tower.ext(d);
        const GF& Fd = tower.ext(d);
        auto& add = sh.add8[(size_t)d];
        add.assign((size_t)Fd.n * Fd.n, 0);
        for (uint32_t a = 0; a < Fd.n; ++a)
            for (uint32_t b = 0; b < Fd.n; ++b) add[(size_t)a * Fd.n + b] = (uint8_t)Fd.add(a, b);
    }
    sh.reps_total = (int)allreps.size();

    const auto& B = MonomialBasis::get(degree);
    sh.deltas.assign((size_t)sh.ncoef, {});
    for (int idx = 0; idx < sh.ncoef; ++idx) {
        auto& per_c = sh.deltas[(size_t)idx];
        per_c.assign(F.n - 1, std::vector<uint8_t>((size_t)4 * sh.reps_total, 0));
        for (int rep = 0; rep < sh.reps_total; ++rep) {
            int d = rep < sh.seg_end[1] ? 1 : rep < sh.seg_end[2] ? 2 : 3;
            const GF& Fd = *sh.fields[(size_t)d];
            const auto& emb = embedding(F, Fd);
            const ProjPoint& P = allreps[(size_t)rep];
            const auto& e = B.exps[(size_t)idx];
            auto mono_val = [&](std::array<int, 3> exps, int scale) -> uint32_t {
                if (scale % p == 0) return 0;
                uint32_t v = emb[F.from_int(scale)];
                for (int var = 0; var < 3; ++var) {
                    if (exps[(size_t)var] < 0) return 0;
                    for (int k = 0; k < exps[(size_t)var]; ++k) v = Fd.mul(v, P.c[(size_t)var]);
                }
                return v;
            };
            uint32_t mv = mono_val(e, 1);
            uint32_t dx = mono_val({e[0] - 1, e[1], e[2]}, e[0]);
            uint32_t dy = mono_val({e[0], e[1] - 1, e[2]}, e[1]);
            uint32_t dz = mono_val({e[0], e[1], e[2] - 1}, e[2]);
            for (uint32_t c = 1; c < F.n; ++c) {
                uint32_t ce = emb[c];
                per_c[(size_t)c - 1][(size_t)rep] = (uint8_t)Fd.mul(ce, mv);
                per_c[(size_t)c - 1][(size_t)sh.reps_total + rep] = (uint8_t)Fd.mul(ce, dx);
                per_c[(size_t)c - 1][(size_t)2 * sh.reps_total + rep] = (uint8_t)Fd.mul(ce, dy);
                per_c[(size_t)c - 1][(size_t)3 * sh.reps_total + rep] = (uint8_t)Fd.mul(ce, dz);
            }
        }
    }
    if (opt.apply_pgl) {
        sh.subst.assign((size_t)sh.ncoef, std::vector<uint32_t>((size_t)sh.ncoef, 0));
        for (int j = 0; j < sh.ncoef; ++j) {
            TernaryForm mono = TernaryForm::zero(F, degree);
            mono.coeffs[(size_t)j] = 1;
            TernaryForm img = mono.substitute(opt.pgl);
            for (int i = 0; i < sh.ncoef; ++i) sh.subst[(size_t)i][(size_t)j] = img.coeffs[(size_t)i];
        }
    }

    struct Task {
        int lead;
        std::vector<uint32_t> prefix;
    };
    std::vector<Task> tasks;
    for (int lead = 0; lead < sh.ncoef; ++lead) {
        int depth = std::min(opt.chunk_depth, sh.ncoef - lead - 1);
        std::vector<uint32_t> prefix((size_t)depth, 0);
        while (true) {
            tasks.push_back({lead, prefix});
            int i = depth - 1;
            while (i >= 0 && ++prefix[(size_t)i] == F.n) prefix[(size_t)i--] = 0;
            if (i < 0) break;
        }
    }

    std::vector<TaskResult> results(tasks.size());
    std::atomic<size_t> next{0};
    int workers = std::max(1, opt.workers);
    auto run = [&]() {
        SweepWorker w(sh);
        while (true) {
            size_t t = next.fetch_add(1);
            if (t >= tasks.size()) break;
            const Task& task = tasks[t];
            w.res = TaskResult{};
            std::fill(w.buffers[0].begin(), w.buffers[0].end(), 0);
            std::fill(w.coeffs.begin(), w.coeffs.end(), 0);
            int pos = 0;
            for (int i = 0; i < task.lead; ++i) w.apply_delta(pos, i, 0), ++pos;
            w.apply_delta(pos, task.lead, 1), ++pos;
            for (size_t i = 0; i < task.prefix.size(); ++i)
                w.apply_delta(pos, task.lead + 1 + (int)i, task.prefix[i]), ++pos;
            w.go(task.lead + 1 + (int)task.prefix.size(), pos);
            results[t] = std::move(w.res);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(run);
    for (auto& th : pool) th.join();

    CensusResult out;
    out.q = (long long)tower.q();
    out.degree = degree;
    out.total_forms = proj_count(sh.ncoef - 1, BigInt((long long)tower.q()));
    std::map<std::array<long long, 3>, long long> zeta_hist;
    long long forms_seen = 0;
    for (const auto& res : results) {
        forms_seen += res.forms;
        out.smooth += res.smooth;
        for (const auto& [k, v] : res.types)
            for (const auto& [a1, n] : v) out.types[k][a1] += n;
        for (const auto& [a1, n] : res.smooth_a1) out.smooth_a1[a1] += n;
        for (const auto& [z, n] : res.smooth_zeta) zeta_hist[z] += n;
    }
    if (!(BigInt(forms_seen) == out.total_forms))
        throw std::logic_error("sweep_census: form enumeration mismatch");
    for (const auto& [k, v] : sh.products->tallies)
        for (const auto& [a1, n] : v) out.types[k][a1] += n;

    if (opt.max_lambda_weight > 0) {
        BigInt bq((long long)tower.q());
        long long q = (long long)tower.q();
        for (const Partition& lam : Partition::all_up_to_weight(opt.max_lambda_weight)) {
            BigInt total(0);
            if (degree == 4) {
                for (const auto& [z, n] : zeta_hist) {
                    auto counts = zeta_extend_counts(
                        q, {q + 1 - z[0], q * q + 1 - z[1], q * q * q + 1 - z[2]}, 3,
                        std::max(1, lam.max_part()));
                    BigInt lc =
                        tuple_count_f([&](int d) { return BigInt(counts[(size_t)d - 1]); }, lam);
                    total += lc * BigInt(n);
                }
            } else {
                for (const auto& [a1, n] : out.smooth_a1) {
                    BigInt lc = tuple_count_f(
                        [&](int d) {
                            return BigInt::pow(bq, (unsigned)d) + BigInt(1) -
                                   trace_power_g1(bq, a1, d);
                        },
                        lam);
                    total += lc * BigInt(n);
                }
            }
            out.smooth_lambda[lam.str()] = total;
        }
    }
    return out;
}

CensusResult reducible_conic_line_census(int p, int r) {
    Tower tower(p, r);
    const ProductTables& pt = product_tables_mut(p, r, 4);
    CensusResult out;
    out.q = (long long)tower.q();
    out.degree = 4;
    out.total_forms = BigInt(0);
    for (const auto& [k, v] : pt.tallies)
        for (const auto& [a1, n] : v) out.types[k][a1] += n;
    return out;
}

namespace {

// rows of the linear conditions "singular at P" on degree-4 coefficients
std::vector<std::vector<uint32_t>> singular_rows(const Tower& tower, const ProjPoint& P, int m) {
    LinSystem probe(tower, 4);
    (void)probe;
    const GF& ext = tower.ext(m);
    const DescentBasis& basis = DescentBasis::get(tower, m);
    const auto& B = MonomialBasis::get(4);
    int ncols = (int)B.exps.size();
    std::vector<std::vector<uint32_t>> rows((size_t)4 * m, std::vector<uint32_t>((size_t)ncols, 0));
    std::vector<uint32_t> co((size_t)m);
    for (int j = 0; j < ncols; ++j) {
        const auto& e = B.exps[(size_t)j];
        uint32_t v = 1;
        for (int var = 0; var < 3; ++var)
            if (e[(size_t)var]) v = ext.mul(v, ext.pow(P.c[(size_t)var], (uint64_t)e[(size_t)var]));
        basis.coords(v, co.data());
        for (int i = 0; i < m; ++i) rows[(size_t)i][(size_t)j] = co[(size_t)i];
        for (int var = 0; var < 3; ++var) {
            uint32_t scale = ext.from_int(e[(size_t)var]);
            if (!scale) continue;
            uint32_t w = scale;
            for (int v2 = 0; v2 < 3; ++v2) {
                int exp = e[(size_t)v2] - (v2 == var ? 1 : 0);
                if (exp) w = ext.mul(w, ext.pow(P.c[(size_t)v2], (uint64_t)exp));
            }
            basis.coords(w, co.data());
            for (int i = 0; i < m; ++i) rows[(size_t)(1 + var) * m + i][(size_t)j] = co[(size_t)i];
        }
    }
    return rows;
}

}  // namespace

CensusResult table6_census(int p, int r) {
    Tower tower(p, r);
    const GF& F = tower.base();
    long long q = (long long)tower.q();
    CensusResult out;
    out.q = q;
    out.degree = 4;

    // the three weight-3 singularity patterns
    struct SPattern {
        std::vector<std::pair<int, int>> picks;  // (degree, how many orbits)
    };
    std::vector<std::vector<std::pair<ProjPoint, int>>> s_sets;
    const auto& d1 = closed_points(tower, 2, 1);
    const auto& d2 = closed_points(tower, 2, 2);
    const auto& d3 = closed_points(tower, 2, 3);
    // [1^3]
    for (size_t i = 0; i < d1.size(); ++i)
        for (size_t j = i + 1; j < d1.size(); ++j)
            for (size_t k = j + 1; k < d1.size(); ++k) {
                if (collinear(d1[i], d1[j], d1[k])) continue;
                s_sets.push_back({{d1[i], 1}, {d1[j], 1}, {d1[k], 1}});
            }
    // [1,2]: skip collinear (P on the rational line through the pair)
    for (const ProjPoint& P : d1)
        for (const ProjPoint& Q : d2) {
            const GF& E2 = tower.ext(2);
            const auto& emb = embedding(F, E2);
            ProjPoint PE{&E2, 2, {emb[P.c[0]], emb[P.c[1]], emb[P.c[2]]}};
            ProjPoint QF = frobenius_point(Q, tower.r());
            if (collinear(PE, Q, QF)) continue;
            s_sets.push_back({{P, 1}, {Q, 2}});
        }
    // [3]: skip collinear triples
    for (const ProjPoint& Q : d3) {
        ProjPoint Q2 = frobenius_point(Q, tower.r());
        ProjPoint Q3 = frobenius_point(Q2, tower.r());
        if (collinear(Q, Q2, Q3)) continue;
        s_sets.push_back({{Q, 3}});
    }

    std::mutex out_mutex;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        std::map<std::string, std::map<long long, long long>> local;
        while (true) {
            size_t si = next.fetch_add(1);
            if (si >= s_sets.size()) break;
            const auto& S = s_sets[si];
            LinSystem sys(tower, 4);
            for (const auto& [P, d] : S) sys.add_singular_at(P, d);
            auto basis = sys.solution_basis();
            int dim = (int)basis.size() - 1;
            if (dim < 0) continue;
            // enumerate the projective solution space, mark forms with extra
            // singularities by solving on each candidate point
            uint64_t space = 1;
            for (int i = 0; i <= dim; ++i) space *= F.n;
            // index of normalized coefficient tuples
            std::vector<uint8_t> bad((size_t)space, 0);
            auto mark_point = [&](const ProjPoint& T, int dT) {
                // rows restricted to the basis
                auto rows = singular_rows(tower, T, dT);
                std::vector<std::vector<uint32_t>> M;
                for (const auto& row : rows) {
                    std::vector<uint32_t> mr((size_t)basis.size(), 0);
                    for (size_t bj = 0; bj < basis.size(); ++bj) {
                        uint32_t acc = 0;
                        for (size_t c = 0; c < row.size(); ++c)
                            acc = F.add(acc, F.mul(row[c], basis[bj][c]));
                        mr[bj] = acc;
                    }
                    M.push_back(std::move(mr));
                }
                // null space of M (columns = basis coords)
                // gaussian elimination
                size_t ncols = basis.size();
                std::vector<std::vector<uint32_t>> ech;
                std::vector<int> piv;
                for (auto& row : M) {
                    for (size_t e2 = 0; e2 < ech.size(); ++e2) {
                        uint32_t f2 = row[(size_t)piv[e2]];
                        if (!f2) continue;
                        for (size_t c = 0; c < ncols; ++c)
                            row[c] = F.sub(row[c], F.mul(f2, ech[e2][c]));
                    }
                    int pc = -1;
                    for (size_t c = 0; c < ncols; ++c)
                        if (row[c]) { pc = (int)c; break; }
                    if (pc < 0) continue;
                    uint32_t inv = F.inv(row[(size_t)pc]);
                    for (size_t c = 0; c < ncols; ++c) row[c] = F.mul(row[c], inv);
                    ech.push_back(row);
                    piv.push_back(pc);
                }
                if (ech.size() == ncols) return;  // only the zero solution
                // back-substitute to RREF
                for (size_t e2 = ech.size(); e2-- > 0;)
                    for (size_t e3 = 0; e3 < e2; ++e3) {
                        uint32_t f2 = ech[e3][(size_t)piv[e2]];
                        if (!f2) continue;
                        for (size_t c = 0; c < ncols; ++c)
                            ech[e3][c] = F.sub(ech[e3][c], F.mul(f2, ech[e2][c]));
                    }
                std::vector<bool> is_piv(ncols, false);
                for (int pc : piv) is_piv[(size_t)pc] = true;
                std::vector<std::vector<uint32_t>> null_basis;
                for (size_t free = 0; free < ncols; ++free) {
                    if (is_piv[free]) continue;
                    std::vector<uint32_t> v(ncols, 0);
                    v[free] = 1;
                    for (size_t e2 = 0; e2 < ech.size(); ++e2)
                        v[(size_t)piv[e2]] = F.neg(ech[e2][free]);
                    null_basis.push_back(std::move(v));
                }
                // enumerate nonzero combinations, mark normalized tuples
                size_t nb = null_basis.size();
                std::vector<uint32_t> combo(nb, 0);
                std::vector<uint32_t> tuple(ncols, 0);
                while (true) {
                    size_t ii = 0;
                    while (ii < nb && ++combo[ii] == F.n) combo[ii++] = 0;
                    if (ii == nb) break;
                    for (size_t c = 0; c < ncols; ++c) tuple[c] = 0;
                    for (size_t b = 0; b < nb; ++b) {
                        if (!combo[b]) continue;
                        for (size_t c = 0; c < ncols; ++c)
                            tuple[c] = F.add(tuple[c], F.mul(combo[b], null_basis[b][c]));
                    }
                    // normalize
                    uint32_t lead = 0;
                    for (size_t c = 0; c < ncols; ++c)
                        if (tuple[c]) { lead = tuple[c]; break; }
                    if (!lead) continue;
                    uint32_t inv = F.inv(lead);
                    uint64_t keyi = 0;
                    for (size_t c = 0; c < ncols; ++c) keyi = keyi * F.n + F.mul(tuple[c], inv);
                    bad[keyi] = 1;
                }
            };
            // candidate extra singular points of degree <= 3
            for (int dT = 1; dT <= 3; ++dT)
                for (const ProjPoint& T : closed_points(tower, 2, dT)) {
                    bool inS = false;
                    for (const auto& [P, d] : S) inS |= (d == dT && P == T);
                    if (!inS) mark_point(T, dT);
                }
            // precomputed reducibility candidates for this S:
            // lines through each singular point, and the conic pencils
            struct LineCand {
                TernaryForm line;  // over ext(d)
                int d;
            };
            std::vector<LineCand> line_cands;
            for (const auto& [P, d] : S) {
                const GF& Ed = tower.ext(d);
                // two independent dual vectors orthogonal to P
                std::array<uint32_t, 3> l1{}, l2{};
                if (P.c[0] != 0) {
                    l1 = {P.c[1], Ed.neg(P.c[0]), 0};
                    l2 = {P.c[2], 0, Ed.neg(P.c[0])};
                } else if (P.c[1] != 0) {
                    l1 = {1, 0, 0};
                    l2 = {0, P.c[2], Ed.neg(P.c[1])};
                } else {
                    l1 = {1, 0, 0};
                    l2 = {0, 1, 0};
                }
                // all lines through P: s l1 + t l2 over P^1(ext(d))
                for (const ProjPoint& st : enumerate_points(1, Ed)) {
                    TernaryForm line = TernaryForm::zero(Ed, 1);
                    for (int c = 0; c < 3; ++c)
                        line.coeffs[(size_t)c] =
                            Ed.add(Ed.mul(st.c[0], l1[(size_t)c]), Ed.mul(st.c[1], l2[(size_t)c]));
                    line = line.normalized();
                    // two points on this line for the restriction test
                    line_cands.push_back({line, d});
                }
            }
            // points for restriction tests, per candidate
            std::vector<std::array<ProjPoint, 2>> line_pts;
            for (const auto& lc : line_cands) {
                const GF& Ed = tower.ext(lc.d);
                uint32_t a = lc.line.coeffs[0], b = lc.line.coeffs[1], c = lc.line.coeffs[2];
                ProjPoint A{&Ed, 2, {0, 0, 0}}, Bp{&Ed, 2, {0, 0, 0}};
                if (a != 0) {
                    A.c = {b, Ed.neg(a), 0};
                    Bp.c = {c, 0, Ed.neg(a)};
                } else if (b != 0) {
                    A.c = {1, 0, 0};
                    Bp.c = {0, c, Ed.neg(b)};
                } else {
                    A.c = {1, 0, 0};
                    Bp.c = {0, 1, 0};
                }
                line_pts.push_back({normalize(A), normalize(Bp)});
            }
            // conic pencil through the three points over the base
            std::vector<TernaryForm> conic_cands;
            {
                LinSystem csys(tower, 2);
                for (const auto& [P, d] : S) csys.add_pass_through(P, d);
                auto cb = csys.solution_basis();
                size_t cnb = cb.size();
                std::vector<uint32_t> cc(cnb, 0);
                while (true) {
                    size_t ii = 0;
                    while (ii < cnb && ++cc[ii] == F.n) cc[ii++] = 0;
                    if (ii == cnb) break;
                    TernaryForm conic = TernaryForm::zero(F, 2);
                    bool nz = false;
                    for (size_t bj = 0; bj < cnb; ++bj) {
                        if (!cc[bj]) continue;
                        nz = true;
                        for (size_t c = 0; c < 6; ++c)
                            conic.coeffs[c] = F.add(conic.coeffs[c], F.mul(cc[bj], cb[bj][c]));
                    }
                    if (nz) conic_cands.push_back(conic.normalized());
                }
            }
            // conjugate conic pencil over ext(2)
            std::vector<TernaryForm> conic2_cands;
            {
                const GF& E2 = tower.ext(2);
                Tower t2tower(p, 2 * r);
                LinSystem csys3(t2tower, 2);
                for (const auto& [P, d] : S) {
                    int m2 = std::lcm(d, 2);
                    const GF& Em = tower.ext(m2);
                    const auto& embP = embedding(tower.ext(d), Em);
                    ProjPoint Q{&Em, 2, {embP[P.c[0]], embP[P.c[1]], embP[P.c[2]]}};
                    for (int t2 = 0; t2 < d; ++t2) {
                        csys3.add_pass_through(Q, m2 / 2);
                        Q = frobenius_point(Q, tower.r());
                    }
                }
                auto cb = csys3.solution_basis();
                size_t cnb = cb.size();
                std::vector<uint32_t> cc(cnb, 0);
                while (true) {
                    size_t ii = 0;
                    while (ii < cnb && ++cc[ii] == E2.n) cc[ii++] = 0;
                    if (ii == cnb) break;
                    TernaryForm conic = TernaryForm::zero(E2, 2);
                    bool nz = false;
                    for (size_t bj = 0; bj < cnb; ++bj) {
                        if (!cc[bj]) continue;
                        nz = true;
                        for (size_t c = 0; c < 6; ++c)
                            conic.coeffs[c] = E2.add(conic.coeffs[c], E2.mul(cc[bj], cb[bj][c]));
                    }
                    if (nz) conic2_cands.push_back(conic.normalized());
                }
            }

            // walk the survivors
            std::vector<uint32_t> combo((size_t)basis.size(), 0);
            std::vector<uint32_t> tuple;
            uint64_t keyi = 0;
            size_t nb = basis.size();
            std::vector<uint32_t> cvec(nb, 0);
            for (size_t leadpos = 0; leadpos < nb; ++leadpos) {
                uint64_t tail = 1;
                for (size_t i2 = leadpos + 1; i2 < nb; ++i2) tail *= F.n;
                for (uint64_t suf = 0; suf < tail; ++suf) {
                    for (size_t c = 0; c < nb; ++c) cvec[c] = 0;
                    cvec[leadpos] = 1;
                    uint64_t s2 = suf;
                    for (size_t i2 = nb; i2-- > leadpos + 1;) {
                        cvec[i2] = (uint32_t)(s2 % F.n);
                        s2 /= F.n;
                    }
                    keyi = 0;
                    for (size_t c = 0; c < nb; ++c) keyi = keyi * F.n + cvec[c];
                    if (bad[keyi]) continue;
                    TernaryForm f = TernaryForm::zero(F, 4);
                    for (size_t bj = 0; bj < nb; ++bj) {
                        if (!cvec[bj]) continue;
                        for (size_t c = 0; c < f.coeffs.size(); ++c)
                            f.coeffs[c] = F.add(f.coeffs[c], F.mul(cvec[bj], basis[bj][c]));
                    }
                    f = f.normalized();
                    // reducibility: vanishing on a candidate line or conic
                    bool reducible = false;
                    for (size_t li = 0; li < line_cands.size() && !reducible; ++li) {
                        const GF& Ed = tower.ext(line_cands[li].d);
                        TernaryForm fe = line_cands[li].d == 1 ? f : f.map_into(Ed);
                        BinaryForm g = restrict_to_line(fe, line_pts[li][0], line_pts[li][1]);
                        if (g.is_zero()) reducible = true;
                    }
                    for (size_t ci = 0; ci < conic_cands.size() && !reducible; ++ci) {
                        TernaryForm quot;
                        if (f.divide(conic_cands[ci], quot)) reducible = true;
                    }
                    if (!reducible && !conic2_cands.empty()) {
                        const GF& E2 = tower.ext(2);
                        TernaryForm fe = f.map_into(E2);
                        for (size_t ci = 0; ci < conic2_cands.size() && !reducible; ++ci) {
                            TernaryForm quot;
                            if (fe.divide(conic2_cands[ci], quot)) reducible = true;
                        }
                    }
                    if (reducible) continue;
                    // irreducible with three delta=1 singularities: classify
                    CurveStructure cs;
                    for (const auto& [P, d] : S) {
                        SingularityRecord rec = classify_singularity(f, tower, P, d);
                        SingOrbit so;
                        so.d = d;
                        so.delta = rec.delta;
                        for (int rel : rec.branch_degs) so.pre.push_back(rel * d);
                        cs.sings.push_back(so);
                    }
                    cs.comps.push_back(CompOrbit{4, 1, 1, 0});
                    cs.canonicalize();
                    local[cs.key()][0]++;
                }
            }
        }
        std::lock_guard<std::mutex> lock(out_mutex);
        for (const auto& [k, v] : local)
            for (const auto& [a1, n] : v) out.types[k][a1] += n;
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < 2; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace curvecount
