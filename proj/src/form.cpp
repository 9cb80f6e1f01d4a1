#include "curvecount/form.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace curvecount {

namespace {
std::map<int, MonomialBasis> g_bases;
std::mutex g_bases_mutex;
}  // namespace

const MonomialBasis& MonomialBasis::get(int degree) {
    std::lock_guard<std::mutex> lock(g_bases_mutex);
    auto it = g_bases.find(degree);
    if (it != g_bases.end()) return it->second;
    MonomialBasis b;
    b.degree = degree;
    for (int a = degree; a >= 0; --a)
        for (int y = degree - a; y >= 0; --y)
            b.exps.push_back({a, y, degree - a - y});
    return g_bases.emplace(degree, std::move(b)).first->second;
}

TernaryForm TernaryForm::zero(const GF& F, int degree) {
    TernaryForm f;
    f.F = &F;
    f.degree = degree;
    f.coeffs.assign(MonomialBasis::get(degree).exps.size(), 0);
    return f;
}

bool TernaryForm::is_zero() const {
    for (uint32_t c : coeffs)
        if (c) return false;
    return true;
}

TernaryForm TernaryForm::normalized() const {
    for (uint32_t c : coeffs) {
        if (!c) continue;
        if (c == 1) return *this;
        return scale(F->inv(c));
    }
    throw std::invalid_argument("TernaryForm: normalizing zero form");
}

uint64_t TernaryForm::encode() const {
    uint64_t key = 0;
    for (uint32_t c : coeffs) key = key * F->n + c;
    return key;
}

TernaryForm TernaryForm::decode(const GF& F, int degree, uint64_t key) {
    TernaryForm f = zero(F, degree);
    for (size_t i = f.coeffs.size(); i-- > 0;) {
        f.coeffs[i] = (uint32_t)(key % F.n);
        key /= F.n;
    }
    return f;
}

uint32_t TernaryForm::evaluate(const ProjPoint& P) const {
    const GF& K = *P.F;
    const auto& B = MonomialBasis::get(degree);
    uint32_t acc = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i]) continue;
        uint32_t term = coeffs[i];
        const auto& e = B.exps[i];
        for (int v = 0; v < 3; ++v)
            if (e[v]) term = K.mul(term, K.pow(P.c[v], (uint64_t)e[v]));
        acc = K.add(acc, term);
    }
    return acc;
}

uint32_t TernaryForm::evaluate_ext(const ProjPoint& P, const std::vector<uint32_t>& emb) const {
    const GF& K = *P.F;
    const auto& B = MonomialBasis::get(degree);
    uint32_t acc = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i]) continue;
        uint32_t term = emb[coeffs[i]];
        const auto& e = B.exps[i];
        for (int v = 0; v < 3; ++v)
            if (e[v]) term = K.mul(term, K.pow(P.c[v], (uint64_t)e[v]));
        acc = K.add(acc, term);
    }
    return acc;
}

namespace {
TernaryForm partial(const TernaryForm& f, int var) {
    const auto& B = MonomialBasis::get(f.degree);
    TernaryForm g = TernaryForm::zero(*f.F, f.degree - 1);
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        if (!f.coeffs[i]) continue;
        auto e = B.exps[i];
        if (e[var] == 0) continue;
        uint32_t c = f.F->mul(f.coeffs[i], f.F->from_int(e[var]));
        if (!c) continue;
        e[var] -= 1;
        size_t idx = MonomialBasis::index(f.degree - 1, e[0], e[1]);
        g.coeffs[idx] = f.F->add(g.coeffs[idx], c);
    }
    return g;
}
}  // namespace

TernaryForm TernaryForm::dx() const { return partial(*this, 0); }
TernaryForm TernaryForm::dy() const { return partial(*this, 1); }
TernaryForm TernaryForm::dz() const { return partial(*this, 2); }

TernaryForm TernaryForm::operator*(const TernaryForm& o) const {
    const auto& Ba = MonomialBasis::get(degree);
    const auto& Bb = MonomialBasis::get(o.degree);
    TernaryForm g = zero(*F, degree + o.degree);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i]) continue;
        for (size_t j = 0; j < o.coeffs.size(); ++j) {
            if (!o.coeffs[j]) continue;
            size_t k = MonomialBasis::index(degree + o.degree, Ba.exps[i][0] + Bb.exps[j][0],
                                            Ba.exps[i][1] + Bb.exps[j][1]);
            g.coeffs[k] = F->add(g.coeffs[k], F->mul(coeffs[i], o.coeffs[j]));
        }
    }
    return g;
}

TernaryForm TernaryForm::operator+(const TernaryForm& o) const {
    TernaryForm g = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) g.coeffs[i] = F->add(coeffs[i], o.coeffs[i]);
    return g;
}

TernaryForm TernaryForm::scale(uint32_t s) const {
    TernaryForm g = *this;
    for (auto& c : g.coeffs) c = F->mul(c, s);
    return g;
}

TernaryForm TernaryForm::map_into(const GF& to) const {
    const auto& emb = embedding(*F, to);
    TernaryForm g = *this;
    g.F = &to;
    for (auto& c : g.coeffs) c = emb[c];
    return g;
}

TernaryForm TernaryForm::substitute(const std::array<std::array<uint32_t, 3>, 3>& M) const {
    // x_i -> sum_j M[i][j] x_j, expand monomial by monomial
    const auto& B = MonomialBasis::get(degree);
    TernaryForm acc = zero(*F, degree);
    // linear forms as degree-1 ternary forms
    std::array<TernaryForm, 3> lin;
    for (int v = 0; v < 3; ++v) {
        lin[v] = zero(*F, 1);
        for (int j = 0; j < 3; ++j) lin[v].coeffs[j] = M[v][j];
    }
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i]) continue;
        const auto& e = B.exps[i];
        TernaryForm term = zero(*F, 0);
        term.coeffs = {coeffs[i]};
        term.degree = 0;
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < e[v]; ++k) term = term * lin[v];
        if (term.degree != degree) throw std::logic_error("substitute: degree mismatch");
        acc = acc + term;
    }
    return acc;
}

bool TernaryForm::divide(const TernaryForm& o, TernaryForm& quotient) const {
    if (o.is_zero()) throw std::domain_error("TernaryForm: division by zero form");
    if (o.degree > degree) return false;
    // multivariate long division in graded-lex order; divisor homogeneous, so
    // the remainder is zero iff divisible
    TernaryForm rem = *this;
    quotient = zero(*F, degree - o.degree);
    const auto& Br = MonomialBasis::get(degree);
    const auto& Bo = MonomialBasis::get(o.degree);
    size_t lead_o = 0;
    while (lead_o < o.coeffs.size() && !o.coeffs[lead_o]) ++lead_o;

    while (!rem.is_zero()) {
        size_t lead_r = 0;
        while (lead_r < rem.coeffs.size() && !rem.coeffs[lead_r]) ++lead_r;
        std::array<int, 3> er = Br.exps[lead_r], eo = Bo.exps[lead_o];
        std::array<int, 3> eq{er[0] - eo[0], er[1] - eo[1], er[2] - eo[2]};
        if (eq[0] < 0 || eq[1] < 0 || eq[2] < 0) return false;
        uint32_t c = F->div(rem.coeffs[lead_r], o.coeffs[lead_o]);
        size_t qi = MonomialBasis::index(degree - o.degree, eq[0], eq[1]);
        quotient.coeffs[qi] = F->add(quotient.coeffs[qi], c);
        // rem -= c * x^eq * o
        TernaryForm mono = zero(*F, degree - o.degree);
        mono.coeffs[qi] = c;
        TernaryForm sub = mono * o;
        for (size_t i = 0; i < rem.coeffs.size(); ++i)
            rem.coeffs[i] = F->sub(rem.coeffs[i], sub.coeffs[i]);
    }
    return true;
}

std::string TernaryForm::str() const {
    static const char* vars = "xyz";
    const auto& B = MonomialBasis::get(degree);
    std::string s;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i]) continue;
        if (!s.empty()) s += " + ";
        if (coeffs[i] != 1 || (B.exps[i][0] == 0 && B.exps[i][1] == 0 && B.exps[i][2] == 0))
            s += F->str(coeffs[i]) + "*";
        for (int v = 0; v < 3; ++v) {
            for (int k = 0; k < B.exps[i][v]; ++k) s += vars[v];
        }
    }
    return s.empty() ? "0" : s;
}

bool BinaryForm::is_zero() const {
    for (uint32_t v : c)
        if (v) return false;
    return true;
}

uint32_t BinaryForm::evaluate(uint32_t s, uint32_t t) const {
    uint32_t acc = 0;
    for (int i = 0; i <= degree; ++i) {
        uint32_t term = c[i];
        if (!term) continue;
        term = F->mul(term, F->pow(s, (uint64_t)(degree - i)));
        term = F->mul(term, F->pow(t, (uint64_t)i));
        acc = F->add(acc, term);
    }
    return acc;
}

BinaryForm restrict_to_line(const TernaryForm& f, const ProjPoint& A, const ProjPoint& B) {
    const GF& K = *A.F;
    const auto& Bm = MonomialBasis::get(f.degree);
    BinaryForm g;
    g.F = &K;
    g.degree = f.degree;
    g.c.assign(f.degree + 1, 0);
    const std::vector<uint32_t>* emb = nullptr;
    if (f.F != &K) emb = &embedding(*f.F, K);
    // expand f(s A + t B) via per-coordinate binomials
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        if (!f.coeffs[i]) continue;
        uint32_t base = emb ? (*emb)[f.coeffs[i]] : f.coeffs[i];
        const auto& e = Bm.exps[i];
        // coordinate v contributes (s*A_v + t*B_v)^e[v]
        std::vector<uint32_t> poly{1};  // binary poly in (s,t), coefficients by t-degree
        for (int v = 0; v < 3; ++v) {
            for (int k = 0; k < e[v]; ++k) {
                std::vector<uint32_t> next(poly.size() + 1, 0);
                for (size_t d = 0; d < poly.size(); ++d) {
                    next[d] = K.add(next[d], K.mul(poly[d], A.c[v]));
                    next[d + 1] = K.add(next[d + 1], K.mul(poly[d], B.c[v]));
                }
                poly = std::move(next);
            }
        }
        for (size_t d = 0; d < poly.size(); ++d)
            g.c[d] = K.add(g.c[d], K.mul(base, poly[d]));
    }
    return g;
}

std::vector<BinRoot> binary_roots(const BinaryForm& f, const Tower& tower, int coeff_ext) {
    std::vector<BinRoot> roots;
    if (f.is_zero()) throw std::invalid_argument("binary_roots: zero form");
    int remaining = f.degree;
    for (int j = 1; j <= f.degree && remaining > 0; ++j) {
        const GF& Fj = tower.ext(coeff_ext * j);
        const auto& emb = embedding(*f.F, Fj);
        BinaryForm fj;
        fj.F = &Fj;
        fj.degree = f.degree;
        fj.c.resize(f.c.size());
        for (size_t i = 0; i < f.c.size(); ++i) fj.c[i] = emb[f.c[i]];
        // scan P^1(Fj): points (1, w) and (0, 1)
        auto consider = [&](uint32_t s, uint32_t t) {
            if (fj.evaluate(s, t) != 0) return;
            // degree over ext(coeff_ext): orbit size under x -> x^(q^coeff_ext)
            int rr = tower.r() * coeff_ext;
            uint32_t fs = Fj.frob(s, rr), ft = Fj.frob(t, rr);
            int deg = 1;
            bool is_rep = true;
            auto lt = [&](uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
                return a < c || (a == c && b < d);
            };
            while (!(fs == s && ft == t)) {
                if (lt(fs, ft, s, t)) { is_rep = false; break; }
                uint32_t ns = Fj.frob(fs, rr), nt = Fj.frob(ft, rr);
                fs = ns; ft = nt;
                ++deg;
            }
            if (!is_rep || deg != j) return;
            // multiplicity by synthetic division
            int mult = 0;
            std::vector<uint32_t> c = fj.c;
            if (t == 0) {
                // root (1:0): multiplicity = leading zero run
                while (mult <= f.degree && c[mult] == 0) ++mult;
            } else {
                // affine root u = s (since t normalized to 1 in enumeration below)
                uint32_t u = Fj.div(s, t);
                while (true) {
                    // evaluate and divide by (x - u) where poly coeffs are by
                    // descending s-degree: P(x) = sum c[i] x^(deg-i)
                    std::vector<uint32_t> quot(c.size() - 1, 0);
                    uint32_t acc = 0;
                    for (size_t i = 0; i + 1 < c.size(); ++i) {
                        acc = Fj.add(Fj.mul(acc, u), c[i]);
                        quot[i] = acc;
                    }
                    uint32_t rem = Fj.add(Fj.mul(acc, u), c.back());
                    if (rem != 0) break;
                    ++mult;
                    c = std::move(quot);
                    if (c.empty()) break;
                }
            }
            if (mult > 0) roots.push_back(BinRoot{s, t, mult, j});
            remaining -= mult * j;
        };
        consider(1, 0);
        for (uint32_t w = 0; w < Fj.n; ++w) consider(w, 1);
    }
    return roots;
}

}  // namespace curvecount
