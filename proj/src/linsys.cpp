#include "curvecount/linsys.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace curvecount {

namespace {
std::map<std::pair<const GF*, int>, DescentBasis> g_descent;
std::mutex g_descent_mutex;

// invert an n x n matrix over F_p; throws if singular
std::vector<std::vector<uint8_t>> invert_fp(std::vector<std::vector<uint8_t>> a, int p) {
    int n = (int)a.size();
    std::vector<std::vector<uint8_t>> inv(n, std::vector<uint8_t>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    auto inv_mod = [&](int x) {
        for (int i = 1; i < p; ++i)
            if (i * x % p == 1) return i;
        throw std::logic_error("invert_fp: no inverse");
    };
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col]) { piv = row; break; }
        if (piv < 0) throw std::logic_error("invert_fp: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        int s = inv_mod(a[col][col]);
        for (int j = 0; j < n; ++j) {
            a[col][j] = (uint8_t)(a[col][j] * s % p);
            inv[col][j] = (uint8_t)(inv[col][j] * s % p);
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || !a[row][col]) continue;
            int f = a[row][col];
            for (int j = 0; j < n; ++j) {
                a[row][j] = (uint8_t)(((a[row][j] - f * a[col][j]) % p + p * p) % p);
                inv[row][j] = (uint8_t)(((inv[row][j] - f * inv[col][j]) % p + p * p) % p);
            }
        }
    }
    return inv;
}
}  // namespace

const DescentBasis& DescentBasis::get(const Tower& tower, int m) {
    std::lock_guard<std::mutex> lock(g_descent_mutex);
    auto key = std::make_pair(&tower.base(), m);
    auto it = g_descent.find(key);
    if (it != g_descent.end()) return it->second;

    DescentBasis basis;
    basis.base_ = &tower.base();
    basis.ext_ = &tower.ext(m);
    basis.m_ = m;
    const GF& base = *basis.base_;
    const GF& ext = *basis.ext_;
    int p = base.p, r = base.r, n = r * m;
    const auto& emb = embedding(base, ext);
    // columns: emb(x^j in base) * y^i as F_p digit vectors (y = class of x in ext)
    uint32_t y = ext.r == 1 ? 0 : (uint32_t)p;
    std::vector<std::vector<uint8_t>> mat(n, std::vector<uint8_t>(n, 0));
    int col = 0;
    uint32_t ypow = 1;
    for (int i = 0; i < m; ++i) {
        uint32_t bj = 1;
        for (int j = 0; j < r; ++j) {
            uint32_t v = ext.mul(emb[bj], ypow);
            for (int d = 0; d < n; ++d) mat[d][col] = (uint8_t)ext.digit(v, d);
            ++col;
            bj *= (uint32_t)p;  // rank of x^(j+1) in base
        }
        ypow = ext.mul(ypow, y);
    }
    basis.inv_ = invert_fp(std::move(mat), p);
    return g_descent.emplace(key, std::move(basis)).first->second;
}

void DescentBasis::coords(uint32_t a, uint32_t* out) const {
    const GF& base = *base_;
    const GF& ext = *ext_;
    int p = base.p, r = base.r, n = r * m_;
    std::vector<int> dig(n);
    for (int d = 0; d < n; ++d) dig[d] = ext.digit(a, d);
    for (int i = 0; i < m_; ++i) {
        uint32_t rank = 0, mul = 1;
        for (int j = 0; j < r; ++j) {
            int acc = 0;
            int row = i * r + j;
            for (int d = 0; d < n; ++d) acc += inv_[row][d] * dig[d];
            rank += mul * (uint32_t)(acc % p);
            mul *= (uint32_t)p;
        }
        out[i] = rank;
    }
}

LinSystem::LinSystem(const Tower& tower, int degree)
    : tower_(&tower), degree_(degree), ncols_((int)MonomialBasis::get(degree).exps.size()) {}

void LinSystem::add_row(std::vector<uint32_t> row) {
    const GF& F = tower_->base();
    for (size_t e = 0; e < echelon_.size(); ++e) {
        int pc = pivot_[e];
        if (row[pc] == 0) continue;
        uint32_t f = row[pc];
        for (int j = pc; j < ncols_; ++j)
            row[j] = F.sub(row[j], F.mul(f, echelon_[e][j]));
    }
    int pc = -1;
    for (int j = 0; j < ncols_; ++j)
        if (row[j]) { pc = j; break; }
    if (pc < 0) return;
    uint32_t s = F.inv(row[pc]);
    for (int j = pc; j < ncols_; ++j) row[j] = F.mul(row[j], s);
    echelon_.push_back(std::move(row));
    pivot_.push_back(pc);
    ++rank_;
}

void LinSystem::add_pass_through(const ProjPoint& P, int m) {
    const GF& ext = tower_->ext(m);
    if (P.F != &ext) throw std::invalid_argument("add_pass_through: point field mismatch");
    const DescentBasis& basis = DescentBasis::get(*tower_, m);
    const auto& B = MonomialBasis::get(degree_);
    std::vector<std::vector<uint32_t>> rows((size_t)m, std::vector<uint32_t>(ncols_, 0));
    std::vector<uint32_t> co((size_t)m);
    for (int j = 0; j < ncols_; ++j) {
        const auto& e = B.exps[j];
        uint32_t v = 1;
        for (int var = 0; var < 3; ++var)
            if (e[var]) v = ext.mul(v, ext.pow(P.c[var], (uint64_t)e[var]));
        basis.coords(v, co.data());
        for (int i = 0; i < m; ++i) rows[i][j] = co[i];
    }
    for (auto& row : rows) add_row(std::move(row));
}

void LinSystem::add_singular_at(const ProjPoint& P, int m) {
    const GF& ext = tower_->ext(m);
    if (P.F != &ext) throw std::invalid_argument("add_singular_at: point field mismatch");
    const DescentBasis& basis = DescentBasis::get(*tower_, m);
    const auto& B = MonomialBasis::get(degree_);
    std::vector<std::vector<uint32_t>> rows((size_t)4 * m, std::vector<uint32_t>(ncols_, 0));
    std::vector<uint32_t> co((size_t)m);
    for (int j = 0; j < ncols_; ++j) {
        const auto& e = B.exps[j];
        uint32_t v = 1;
        for (int var = 0; var < 3; ++var)
            if (e[var]) v = ext.mul(v, ext.pow(P.c[var], (uint64_t)e[var]));
        basis.coords(v, co.data());
        for (int i = 0; i < m; ++i) rows[i][j] = co[i];
        for (int var = 0; var < 3; ++var) {
            uint32_t scale = ext.from_int(e[var]);
            if (!scale) continue;
            uint32_t w = scale;
            for (int v2 = 0; v2 < 3; ++v2) {
                int exp = e[v2] - (v2 == var ? 1 : 0);
                if (exp) w = ext.mul(w, ext.pow(P.c[v2], (uint64_t)exp));
            }
            basis.coords(w, co.data());
            for (int i = 0; i < m; ++i) rows[(size_t)(1 + var) * m + i][j] = co[i];
        }
    }
    for (auto& row : rows) add_row(std::move(row));
}

void LinSystem::add_set(const LambdaSet& S) {
    for (size_t i = 0; i < S.by_degree.size(); ++i)
        for (const ProjPoint& P : S.by_degree[i]) add_pass_through(P, (int)i + 1);
}

BigInt LinSystem::point_count() const {
    int dim = proj_dim();
    if (dim < 0) return BigInt(0);
    return proj_count(dim, BigInt(tower_->q()));
}

std::vector<std::vector<uint32_t>> LinSystem::solution_basis() const {
    const GF& F = tower_->base();
    auto ech = echelon_;
    auto piv = pivot_;
    for (size_t e = ech.size(); e-- > 0;) {
        for (size_t e2 = 0; e2 < e; ++e2) {
            uint32_t f = ech[e2][piv[e]];
            if (!f) continue;
            for (int j = 0; j < ncols_; ++j) ech[e2][j] = F.sub(ech[e2][j], F.mul(f, ech[e][j]));
        }
    }
    std::vector<bool> is_pivot(ncols_, false);
    for (int pc : piv) is_pivot[pc] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (int free = 0; free < ncols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(ncols_, 0);
        v[free] = 1;
        for (size_t e = 0; e < ech.size(); ++e) v[piv[e]] = F.neg(ech[e][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

int dim_L(const Tower& tower, int degree, const LambdaSet& P,
          const std::vector<std::pair<ProjPoint, int>>& S) {
    LinSystem sys(tower, degree);
    sys.add_set(P);
    for (const auto& [point, m] : S) sys.add_singular_at(point, m);
    return sys.proj_dim();
}

namespace {
bool block_on_line(const Tower& tower, const ProjPoint& rep, int deg,
                   const std::array<uint32_t, 3>& line_base) {
    const GF& ext = tower.ext(deg);
    const auto& emb = embedding(tower.base(), ext);
    std::array<uint32_t, 3> l{emb[line_base[0]], emb[line_base[1]], emb[line_base[2]]};
    ProjPoint Q = rep;
    for (int i = 0; i < deg; ++i) {
        if (!on_line(Q, l)) return false;
        Q = frobenius_point(Q, tower.r());
    }
    return true;
}
}  // namespace

bool in_A(const Tower& tower, const LambdaSet& P, const Partition& lambda, const Partition& mu) {
    if (!mu.leq(lambda)) return false;
    Partition target = lambda - mu;
    if (target.weight() < 2) throw std::invalid_argument("in_A: |lambda-mu| must be >= 2");
    const GF& F = tower.base();
    for (const ProjPoint& L : enumerate_points(2, F)) {
        std::array<uint32_t, 3> line{L.c[0], L.c[1], L.c[2]};
        std::vector<int> on_mults((size_t)std::max(lambda.max_part(), 1), 0);
        for (int d = 1; d <= (int)P.by_degree.size(); ++d)
            for (const ProjPoint& rep : P.by_degree[d - 1])
                if (block_on_line(tower, rep, d, line)) ++on_mults[d - 1];
        if (Partition(on_mults) == target) return true;
    }
    return false;
}

bool in_B(const Tower& tower, const LambdaSet& P, const Partition& lambda, const Partition& mu) {
    Partition one = Partition::parse("1");
    if (!(one + mu).leq(lambda)) return false;
    Partition other = lambda - one - mu;
    const GF& F = tower.base();
    if (P.by_degree.empty() || P.by_degree[0].empty()) return false;
    auto lines = enumerate_points(2, F);
    for (const ProjPoint& p : P.by_degree[0]) {
        for (size_t i = 0; i < lines.size(); ++i) {
            std::array<uint32_t, 3> l1{lines[i].c[0], lines[i].c[1], lines[i].c[2]};
            if (!on_line(p, l1)) continue;
            for (size_t j = i + 1; j < lines.size(); ++j) {
                std::array<uint32_t, 3> l2{lines[j].c[0], lines[j].c[1], lines[j].c[2]};
                if (!on_line(p, l2)) continue;
                std::vector<int> m1((size_t)std::max(lambda.max_part(), 1), 0), m2 = m1;
                bool ok = true;
                for (int d = 1; d <= (int)P.by_degree.size() && ok; ++d)
                    for (const ProjPoint& rep : P.by_degree[d - 1]) {
                        if (d == 1 && rep == p) continue;
                        if (block_on_line(tower, rep, d, l1)) ++m1[d - 1];
                        else if (block_on_line(tower, rep, d, l2)) ++m2[d - 1];
                        else { ok = false; break; }
                    }
                if (!ok) continue;
                Partition p1(m1), p2(m2);
                if ((p1 == mu && p2 == other) || (p1 == other && p2 == mu)) return true;
            }
        }
    }
    return false;
}

BigInt a_coeff(const Partition& lambda, const Partition& mu, const BigInt& q) {
    if (!mu.leq(lambda)) return BigInt(0);
    Partition rest = lambda - mu;
    BigInt n2 = q * q + q + BigInt(1);
    BigInt xmu = tuple_count_f([&](int d) { return BigInt::pow(q, (unsigned)(2 * d)); }, mu);
    BigInt p1rest = proj_lambda_count(1, q, rest);
    BigInt zl = lambda.zee(), zm = mu.zee(), zr = rest.zee();
    return n2 * (zl / (zm * zr)) * p1rest * xmu;
}

BigInt b_coeff(const Partition& lambda, const Partition& mu, const BigInt& q) {
    Partition one = Partition::parse("1");
    if (!(one + mu).leq(lambda)) return BigInt(0);
    Partition other = lambda - one - mu;
    BigInt n2 = q * q + q + BigInt(1);
    BigInt pairs = n2 * (n2 - BigInt(1)) / BigInt(2);
    auto xcount = [&](const Partition& nu) {
        return tuple_count_f([&](int d) { return BigInt::pow(q, (unsigned)d); }, nu);
    };
    BigInt zl = lambda.zee(), zm = mu.zee(), zo = other.zee();
    return pairs * (zl / (zm * zo)) * xcount(mu) * xcount(other);
}

}  // namespace curvecount
