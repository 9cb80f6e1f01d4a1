#pragma once

#include <cstdint>
#include <vector>
#include <string>
#include <stdexcept>

namespace curvecount {

// F_{p^r} with all arithmetic table-driven. Elements are dense ranks in
// [0, p^r): rank = sum coeff_i * p^i for the coefficient vector of the
// element w.r.t. the power basis of the modulus.
//
// The modulus is the lexicographically first monic irreducible polynomial of
// degree r over F_p (coefficients compared from the constant term up), so a
// given (p, r) always produces the same field. Fields are built once and
// cached; pointers remain valid for the process lifetime.
class GF {
public:
    int p = 0;
    int r = 0;
    uint32_t n = 0;                // p^r
    std::vector<int> modulus;      // ascending coefficients, length r+1, monic

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }
    uint32_t generator() const { return gen_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        return combine(addT_[(size_t)hi_[a] * ph_ + hi_[b]], addT_[(size_t)lo_[a] * ph_ + lo_[b]]);
    }
    uint32_t neg(uint32_t a) const { return neg_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg_[b]); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("GF: inversion of zero");
        return exp_[n - 1 - log_[a]];
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t e) const;
    // absolute Frobenius x -> x^p
    uint32_t frob_p(uint32_t a) const { return frobp_[a]; }
    // x -> x^(p^j)
    uint32_t frob(uint32_t a, int j) const {
        for (int i = 0; i < j; ++i) a = frobp_[a];
        return a;
    }
    uint32_t from_int(long long v) const {  // prime-field scalar
        long long m = v % p;
        if (m < 0) m += p;
        return scalar_[(size_t)m];
    }
    int digit(uint32_t a, int i) const;                 // coefficient of x^i
    uint32_t from_digits(const std::vector<int>& d) const;
    std::string str(uint32_t a) const;

    // smallest m >= 1 with a^(p^(m*sub_r)) == a, i.e. degree of a over F_{p^sub_r}
    int degree_over(uint32_t a, int sub_r) const;

private:
    friend const GF& field(int p, int r);
    void build(int p, int r);

    uint32_t combine(uint32_t hi, uint32_t lo) const { return hi * ph_ + lo; }

    uint32_t ph_ = 1;   // p^h, h = ceil(r/2)
    uint32_t gen_ = 0;
    std::vector<uint16_t> lo_, hi_;
    std::vector<uint32_t> addT_, exp_, log_, neg_, frobp_, scalar_;
};

// Global field cache. p prime <= 13, 1 <= r <= 24 (enough for towers over
// non-prime ground fields).
const GF& field(int p, int r);

// Embedding F_{p^a} -> F_{p^b} for a | b, as a rank table. The image of the
// source generator polynomial root is the minimal-rank root in the target,
// which makes the table deterministic.
const std::vector<uint32_t>& embedding(const GF& from, const GF& to);

// Convenience: checks p prime.
bool is_prime(int p);

// A ground field k = F_q, q = p^r, with accessors for its extensions k_m
// (realized as F_{p^(r*m)}) and coefficient embeddings. This is the "FieldSpec
// plus tower" object the rest of the project works with.
class Tower {
public:
    Tower(int p, int r);
    const GF& base() const { return *base_; }
    long long q() const { return base_->n; }
    int p() const { return base_->p; }
    int r() const { return base_->r; }
    const GF& ext(int m) const;                      // k_m
    const std::vector<uint32_t>& emb(int m) const;   // base -> k_m table
    const std::vector<uint32_t>& emb(int m1, int m2) const;  // k_m1 -> k_m2 (m1 | m2)
    // Frobenius x -> x^q on k_m
    uint32_t frob_q(const GF& F, uint32_t a) const { return F.frob(a, base_->r); }

private:
    const GF* base_;
};

}  // namespace curvecount
