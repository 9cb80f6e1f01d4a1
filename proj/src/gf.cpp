#include "curvecount/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <algorithm>

namespace curvecount {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// dense polynomial arithmetic over F_p for field construction
using Poly = std::vector<int>;

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (int)((prod[i + j] + (long long)a[i] * b[j]) % p);
    int r = (int)mod.size() - 1;
    for (int i = (int)prod.size() - 1; i >= r; --i) {
        int c = prod[i];
        if (c == 0) continue;
        for (int j = 0; j <= r; ++j) {
            long long v = prod[i - r + j] - (long long)c * mod[j];
            prod[i - r + j] = (int)(((v % p) + p) % p);
        }
    }
    prod.resize(r);
    return prod;
}

Poly poly_powmod_xq(const Poly& mod, int p, long long e) {
    // x^e mod (mod)
    Poly result(mod.size() - 1, 0);
    result[0] = 1;
    Poly base(mod.size() - 1, 0);
    if (mod.size() - 1 == 1) {
        // degree-1 modulus: x == -mod[0]
        base[0] = ((-mod[0]) % p + p) % p;
    } else {
        base[1] = 1;
    }
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    auto deg = [](const Poly& f) {
        int d = (int)f.size() - 1;
        while (d >= 0 && f[d] == 0) --d;
        return d;
    };
    while (deg(b) >= 0) {
        // a mod b
        int db = deg(b);
        int inv_lead = 1;
        for (int i = 1; i < p; ++i)
            if (i * b[db] % p == 1) { inv_lead = i; break; }
        Poly rem = a;
        for (int i = deg(rem); i >= db; --i) {
            int c = (int)((long long)rem[i] * inv_lead % p);
            if (c == 0) continue;
            for (int j = 0; j <= db; ++j) {
                long long v = rem[i - db + j] - (long long)c * b[j];
                rem[i - db + j] = (int)(((v % p) + p) % p);
            }
        }
        a = b;
        b = rem;
    }
    return a;
}

bool is_irreducible(const Poly& mod, int p) {
    int r = (int)mod.size() - 1;
    // x^(p^r) == x mod f, and gcd(x^(p^(r/l)) - x, f) == 1 for primes l | r
    long long pr = 1;
    for (int i = 0; i < r; ++i) pr *= p;
    Poly xq = poly_powmod_xq(mod, p, pr);
    Poly x(r, 0);
    if (r >= 2) x[1] = 1; else x[0] = ((-mod[0]) % p + p) % p;
    if (xq != x) return false;
    for (int l = 2; l <= r; ++l) {
        if (r % l) continue;
        bool lp = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) { lp = false; break; }
        if (!lp) continue;
        long long e = 1;
        for (int i = 0; i < r / l; ++i) e *= p;
        Poly g = poly_powmod_xq(mod, p, e);
        // g - x
        Poly diff = g;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        Poly gc = poly_gcd(mod, diff, p);
        int dg = (int)gc.size() - 1;
        while (dg >= 0 && gc[dg] == 0) --dg;
        if (dg != 0) return false;
    }
    return true;
}

std::vector<int> factor_trial(uint32_t n) {
    std::vector<int> fs;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        while (n % d == 0) {
            if (fs.empty() || (uint32_t)fs.back() != d) fs.push_back((int)d);
            n /= d;
        }
    if (n > 1) fs.push_back((int)n);
    return fs;
}

}  // namespace

void GF::build(int p_, int r_) {
    if (!is_prime(p_)) throw std::invalid_argument("GF: p must be prime");
    if (r_ < 1 || r_ > 24) throw std::invalid_argument("GF: extension degree out of range");
    p = p_;
    r = r_;
    uint64_t n64 = 1;
    for (int i = 0; i < r; ++i) {
        n64 *= (uint32_t)p;
        if (n64 > (1u << 26)) throw std::invalid_argument("GF: field too large");
    }
    n = (uint32_t)n64;

    // lexicographically first monic irreducible: scan constant-first tuples
    modulus.assign(r + 1, 0);
    modulus[r] = 1;
    if (r == 1) {
        modulus[0] = 0;  // x itself; placeholder for the prime field
    } else {
        bool found = false;
        std::vector<int> c(r, 0);
        while (!found) {
            for (int i = 0; i < r; ++i) modulus[i] = c[i];
            if (modulus[0] != 0 && is_irreducible(modulus, p)) { found = true; break; }
            int i = 0;
            while (i < r && ++c[i] == p) c[i++] = 0;
            if (i == r) throw std::logic_error("GF: no irreducible polynomial found");
        }
    }

    int h = (r + 1) / 2;
    ph_ = 1;
    for (int i = 0; i < h; ++i) ph_ *= (uint32_t)p;
    uint32_t pl = n / ph_;  // p^(r-h), the high part count

    lo_.resize(n);
    hi_.resize(n);
    for (uint32_t a = 0; a < n; ++a) {
        lo_[a] = (uint16_t)(a % ph_);
        hi_[a] = (uint16_t)(a / ph_);
    }
    // half-add table: digitwise add of base-p numbers < ph_
    addT_.resize((size_t)ph_ * ph_);
    for (uint32_t a = 0; a < ph_; ++a)
        for (uint32_t b = 0; b < ph_; ++b) {
            uint32_t x = a, y = b, mul = 1, s = 0;
            while (x || y) {
                s += mul * (uint32_t)((x % p + y % p) % p);
                x /= p;
                y /= p;
                mul *= p;
            }
            addT_[(size_t)a * ph_ + b] = s;
        }
    (void)pl;

    neg_.resize(n);
    for (uint32_t a = 0; a < n; ++a) {
        uint32_t x = a, mul = 1, s = 0;
        while (x) {
            s += mul * (uint32_t)((p - x % p) % p);
            x /= p;
            mul *= p;
        }
        neg_[a] = s;
    }

    scalar_.resize(p);
    for (int v = 0; v < p; ++v) scalar_[v] = (uint32_t)v;

    // multiplication: find a generator, build exp/log
    auto rank_mul = [&](uint32_t a, uint32_t b) -> uint32_t {
        Poly pa(r), pb(r);
        uint32_t x = a;
        for (int i = 0; i < r; ++i) { pa[i] = (int)(x % p); x /= p; }
        x = b;
        for (int i = 0; i < r; ++i) { pb[i] = (int)(x % p); x /= p; }
        Poly pr = poly_mulmod(pa, pb, modulus, p);
        uint32_t s = 0, mul = 1;
        for (int i = 0; i < r; ++i) { s += mul * (uint32_t)pr[i]; mul *= (uint32_t)p; }
        return s;
    };

    std::vector<int> pf = factor_trial(n - 1);
    auto order_is_full = [&](uint32_t g) {
        for (int f : pf) {
            uint64_t e = (n - 1) / (uint32_t)f;
            uint32_t acc = 1, base = g;
            while (e) {
                if (e & 1) acc = rank_mul(acc, base);
                base = rank_mul(base, base);
                e >>= 1;
            }
            if (acc == 1) return false;
        }
        return true;
    };
    gen_ = 0;
    for (uint32_t g = 2; g < n; ++g)
        if (order_is_full(g)) { gen_ = g; break; }
    if (gen_ == 0 && n == 2) gen_ = 1;
    if (gen_ == 0) throw std::logic_error("GF: no generator");

    exp_.resize(2 * (n - 1));
    log_.assign(n, 0);
    uint32_t cur = 1;
    for (uint32_t i = 0; i < n - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = rank_mul(cur, gen_);
    }
    for (uint32_t i = 0; i < n - 1; ++i) exp_[n - 1 + i] = exp_[i];

    frobp_.resize(n);
    frobp_[0] = 0;
    for (uint32_t a = 1; a < n; ++a)
        frobp_[a] = exp_[(uint32_t)(((uint64_t)log_[a] * p) % (n - 1))];
}

uint32_t GF::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t k = ((uint64_t)log_[a] * (e % (n - 1))) % (n - 1);
    return exp_[k];
}

int GF::digit(uint32_t a, int i) const {
    for (int k = 0; k < i; ++k) a /= (uint32_t)p;
    return (int)(a % (uint32_t)p);
}

uint32_t GF::from_digits(const std::vector<int>& d) const {
    uint32_t s = 0, mul = 1;
    for (int i = 0; i < r; ++i) {
        int c = i < (int)d.size() ? ((d[i] % p) + p) % p : 0;
        s += mul * (uint32_t)c;
        mul *= (uint32_t)p;
    }
    return s;
}

std::string GF::str(uint32_t a) const {
    if (r == 1) return std::to_string(a);
    std::string s = "[";
    for (int i = 0; i < r; ++i) {
        if (i) s += ",";
        s += std::to_string(digit(a, i));
    }
    return s + "]";
}

int GF::degree_over(uint32_t a, int sub_r) const {
    uint32_t x = frob(a, sub_r);
    int m = 1;
    while (x != a) {
        x = frob(x, sub_r);
        ++m;
        if (m > r) throw std::logic_error("GF: degree_over diverged");
    }
    return m;
}

namespace {
std::map<std::pair<int, int>, std::unique_ptr<GF>> g_fields;
std::map<std::pair<const GF*, const GF*>, std::vector<uint32_t>> g_embeddings;
std::mutex g_mutex;
}  // namespace

const GF& field(int p, int r) {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto key = std::make_pair(p, r);
    auto it = g_fields.find(key);
    if (it != g_fields.end()) return *it->second;
    auto f = std::make_unique<GF>();
    f->build(p, r);
    const GF& ref = *f;
    g_fields[key] = std::move(f);
    return ref;
}

const std::vector<uint32_t>& embedding(const GF& from, const GF& to) {
    if (from.p != to.p || to.r % from.r != 0)
        throw std::invalid_argument("embedding: incompatible fields");
    std::lock_guard<std::mutex> lock(g_mutex);
    auto key = std::make_pair(&from, &to);
    auto it = g_embeddings.find(key);
    if (it != g_embeddings.end()) return it->second;

    // image of the source root: minimal-rank root of the source modulus in `to`
    uint32_t root = 0;
    bool found = false;
    if (&from == &to) {
        root = from.r == 1 ? 0 : from.p;  // the class of x
        found = true;
    } else {
        for (uint32_t y = 0; y < to.n; ++y) {
            uint32_t acc = 0, powy = 1;
            for (int i = 0; i <= from.r; ++i) {
                acc = to.add(acc, to.mul(to.from_int(from.modulus[i]), powy));
                powy = to.mul(powy, y);
            }
            if (acc == 0) { root = y; found = true; break; }
        }
    }
    if (!found) throw std::logic_error("embedding: no root of modulus in target");

    std::vector<uint32_t> table(from.n);
    for (uint32_t a = 0; a < from.n; ++a) {
        uint32_t acc = 0, powy = 1;
        for (int i = 0; i < from.r; ++i) {
            acc = to.add(acc, to.mul(to.from_int(from.digit(a, i)), powy));
            powy = to.mul(powy, root);
        }
        table[a] = acc;
    }
    auto& slot = g_embeddings[key];
    slot = std::move(table);
    return slot;
}

Tower::Tower(int p, int r) : base_(&field(p, r)) {}

const GF& Tower::ext(int m) const { return field(base_->p, base_->r * m); }

const std::vector<uint32_t>& Tower::emb(int m) const { return embedding(*base_, ext(m)); }

const std::vector<uint32_t>& Tower::emb(int m1, int m2) const {
    return embedding(ext(m1), ext(m2));
}

}  // namespace curvecount
