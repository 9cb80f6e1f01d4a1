#pragma once

#include <functional>
#include <string>
#include <vector>

#include "curvecount/bigint.hpp"
#include "curvecount/ctype.hpp"
#include "curvecount/partition.hpp"

namespace curvecount {

// A registered singular-curve type: the structure (which determines point
// counts), the number of curves of the type divided by |PGL_3| as an exact
// function of q, and the number of rational singular points (mu_1, a function
// of q only for non-reduced types).
struct TypeEntry {
    std::string name;   // table row identifier
    std::string table;  // "T1".."T8", "SCTL", "Q3", ...
    int degree;         // 3 or 4
    CurveStructure structure;
    // the same table cell can cover several census shapes (e.g. two conics
    // doubly tangent vs. osculating plus crossing); alternates list them
    std::vector<CurveStructure> alts;
    std::function<Rational(const BigInt& q, int p)> count;  // p = characteristic
    std::function<Rational(const BigInt& q)> mu1;
    bool in_t_sum;  // participates in the quartic (mu_1 - 1) correction

    std::vector<std::string> census_keys() const;
};

// All genus-0-structure quartic types with >= 2 singularities (incl. the
// non-reduced families and Table 6), and the 14 singular degree-3 types.
const std::vector<TypeEntry>& quartic_type_registry();
const std::vector<TypeEntry>& cubic_type_registry();

// table cell by row name
Rational table_count(const std::string& name, const BigInt& q, int p);

// |PGL_2(k)| and helpers used by the lemma evaluators
Rational lemma_pgl2(const BigInt& q);

// Lemma evaluators (counts divided by |PGL_3|):
// singular cubics by singularity pattern lambda in {[1],[1^2],[2]}
Rational singular_cubic_count(const Partition& lambda, const BigInt& q);
// singular cubic with a line: variants per the four lemmas
enum class CubicLineVariant { Transversal, TwoPoints, OnePoint, ThroughSingularity };
Rational singular_cubic_with_line(const Partition& lambda, CubicLineVariant variant,
                                  const BigInt& q, const Partition& mu3 = Partition());
// quartics with a delta=2 and a delta=1 singularity, preimage patterns lambda, mu
Rational quart12_count(const Partition& lambda, const Partition& mu, const BigInt& q);

// number of lambda-set points of P^1 over k_d (for X = P^1 minus a lambda-set)
BigInt lambda_set_points_km(const Partition& lambda, const BigInt& q, int d);

}  // namespace curvecount
