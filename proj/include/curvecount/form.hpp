#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "curvecount/geom.hpp"
#include "curvecount/gf.hpp"

namespace curvecount {

// Monomials x^a y^b z^c of total degree d in graded-lex order (x > y > z):
// a descending, then b descending. Exposed so census code can build tables.
struct MonomialBasis {
    int degree;
    std::vector<std::array<int, 3>> exps;
    static const MonomialBasis& get(int degree);  // cached, degrees 1..4
    // graded-lex position of x^a y^b z^c: T(d-a) + (d-a-b), T(k) = k(k+1)/2
    static size_t index(int degree, int a, int b) {
        int k = degree - a;
        return (size_t)(k * (k + 1) / 2 + (k - b));
    }
};

// Homogeneous ternary form with coefficients in one field (base field for
// curves over k, an extension for conjugate components).
struct TernaryForm {
    const GF* F = nullptr;
    int degree = 0;
    std::vector<uint32_t> coeffs;  // size = #monomials of degree

    static TernaryForm zero(const GF& F, int degree);
    bool is_zero() const;

    // f scaled so the first nonzero coefficient is 1
    TernaryForm normalized() const;
    uint64_t encode() const;  // dense key (coeff ranks, first coefficient most significant)
    static TernaryForm decode(const GF& F, int degree, uint64_t key);

    uint32_t evaluate(const ProjPoint& P) const;  // P over the same field
    // P over an extension; emb maps this->F into P.F
    uint32_t evaluate_ext(const ProjPoint& P, const std::vector<uint32_t>& emb) const;

    TernaryForm dx() const;
    TernaryForm dy() const;
    TernaryForm dz() const;

    TernaryForm operator*(const TernaryForm& o) const;
    TernaryForm operator+(const TernaryForm& o) const;
    TernaryForm scale(uint32_t s) const;

    // coefficient embedding into an extension field
    TernaryForm map_into(const GF& to) const;

    // substitution x_i -> sum_j M[i][j] x_j (coordinate change by M acting on
    // coordinates; use the inverse matrix to act on points)
    TernaryForm substitute(const std::array<std::array<uint32_t, 3>, 3>& M) const;

    // exact division; returns false if o does not divide this
    bool divide(const TernaryForm& o, TernaryForm& quotient) const;

    std::string str() const;
};

// Binary form c[0] s^d + c[1] s^(d-1) t + ... + c[d] t^d
struct BinaryForm {
    const GF* F = nullptr;
    int degree = 0;
    std::vector<uint32_t> c;

    bool is_zero() const;
    uint32_t evaluate(uint32_t s, uint32_t t) const;
};

// Restriction of f to the line spanned by points A, B (over coeff field):
// g(s,t) = f(s A + t B).
BinaryForm restrict_to_line(const TernaryForm& f, const ProjPoint& A, const ProjPoint& B);

// Roots of a binary form over the algebraic closure up to extension degree
// bound, as (point of P^1 over ext(e), multiplicity, e = degree over the
// form's field). Found by scanning P^1 over each needed extension.
struct BinRoot {
    uint32_t s, t;      // in field(ext_degree * base.r)
    int mult;
    int ext_degree;     // degree of the root field over the coefficient field
};
std::vector<BinRoot> binary_roots(const BinaryForm& f, const Tower& tower, int coeff_ext);

}  // namespace curvecount
