#include "curvecount/tables.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "curvecount/geom.hpp"

namespace curvecount {

namespace {

using CountFn = std::function<Rational(const BigInt&, int)>;
using Mu1Fn = std::function<Rational(const BigInt&)>;

Rational frac(BigInt num, BigInt den) { return Rational(std::move(num), std::move(den)); }

CompOrbit L(int orbit = 1, int mult = 1) { return CompOrbit{1, orbit, mult, 0}; }
CompOrbit C(int orbit = 1, int mult = 1) { return CompOrbit{2, orbit, mult, 0}; }
CompOrbit K0() { return CompOrbit{3, 1, 1, 0}; }   // singular irreducible cubic
CompOrbit Q0() { return CompOrbit{4, 1, 1, 0}; }   // irreducible quartic, genus-0 normalization
SingOrbit S(int d, std::vector<int> pre, int delta) { return SingOrbit{d, std::move(pre), delta}; }

CurveStructure make(std::vector<CompOrbit> comps, std::vector<SingOrbit> sings) {
    CurveStructure c{std::move(comps), std::move(sings)};
    c.canonicalize();
    return c;
}

Mu1Fn mu1_const(long long v) {
    return [v](const BigInt&) { return Rational(v); };
}

// preimage pattern on P^1 of a delta<=2 singularity type: c/n1/n2
std::vector<int> pre_of(const std::string& kind, int d) {
    if (kind == "c") return {d};
    if (kind == "n1") return {d, d};
    if (kind == "n2") return {2 * d};
    throw std::invalid_argument("pre_of: unknown kind");
}

}  // namespace

Rational lemma_pgl2(const BigInt& q) { return Rational(q * q * q - q); }

BigInt lambda_set_points_km(const Partition& lambda, const BigInt& q, int d) {
    // points of a lambda-set of P^1 defined over k_d
    BigInt n(0);
    for (int i = 1; i <= lambda.max_part(); ++i)
        if (lambda.mult(i) && d % i == 0) n += BigInt((long long)i * lambda.mult(i));
    return n;
}

namespace {
BigInt p1_lambda(const Partition& lambda, const BigInt& q) {
    return proj_lambda_count(1, q, lambda);
}

// |X(mu)| where X = P^1 minus a lambda-set
BigInt x_minus_lambda(const Partition& lambda, const Partition& mu, const BigInt& q) {
    return tuple_count_f(
        [&](int d) {
            return proj_count(1, BigInt::pow(q, (unsigned)d)) - lambda_set_points_km(lambda, q, d);
        },
        mu);
}
}  // namespace

Rational singular_cubic_count(const Partition& lambda, const BigInt& q) {
    if (lambda.weight() < 1 || lambda.weight() > 2)
        throw std::invalid_argument("singular_cubic_count: |lambda| must be 1 or 2");
    BigInt l1((long long)lambda.mult(1));
    return Rational(p1_lambda(lambda, q) * (q + BigInt(1) - l1), lambda.zee()) / lemma_pgl2(q);
}

Rational singular_cubic_with_line(const Partition& lambda, CubicLineVariant variant,
                                  const BigInt& q, const Partition& mu3) {
    if (lambda.weight() < 1 || lambda.weight() > 2)
        throw std::invalid_argument("singular_cubic_with_line: |lambda| must be 1 or 2");
    BigInt p1l = p1_lambda(lambda, q);
    switch (variant) {
        case CubicLineVariant::Transversal: {
            if (mu3.weight() != 3)
                throw std::invalid_argument("singular_cubic_with_line: transversal needs |mu| = 3");
            BigInt x = x_minus_lambda(lambda, mu3, q);
            return Rational(p1l * x, lambda.zee() * mu3.zee()) / lemma_pgl2(q);
        }
        case CubicLineVariant::TwoPoints: {
            BigInt x = x_minus_lambda(lambda, Partition::parse("1^2"), q);
            return Rational(p1l * x, lambda.zee()) / lemma_pgl2(q);
        }
        case CubicLineVariant::OnePoint: {
            BigInt x = x_minus_lambda(lambda, Partition::parse("1"), q);
            return Rational(p1l * x, lambda.zee()) / lemma_pgl2(q);
        }
        case CubicLineVariant::ThroughSingularity: {
            BigInt x = x_minus_lambda(lambda, Partition::parse("1^2"), q) +
                       x_minus_lambda(lambda, Partition::parse("1"), q);
            return Rational(p1l * x, lambda.zee()) / lemma_pgl2(q);
        }
    }
    throw std::logic_error("singular_cubic_with_line: bad variant");
}

Rational quart12_count(const Partition& lambda, const Partition& mu, const BigInt& q) {
    if (lambda.weight() < 1 || lambda.weight() > 2 || mu.weight() < 1 || mu.weight() > 2)
        throw std::invalid_argument("quart12_count: weights must be 1 or 2");
    BigInt l1((long long)lambda.mult(1));
    BigInt x = x_minus_lambda(lambda, mu, q);
    return Rational(p1_lambda(lambda, q) * x * (q - l1), lambda.zee() * mu.zee()) / lemma_pgl2(q);
}

std::vector<std::string> TypeEntry::census_keys() const {
    std::vector<std::string> keys{structure.key()};
    for (const CurveStructure& alt : alts) keys.push_back(alt.key());
    return keys;
}

namespace {

void add(std::vector<TypeEntry>& out, const std::string& name, const std::string& table,
         int degree, CurveStructure structure, CountFn count, Mu1Fn mu1, bool in_t = true) {
    out.push_back(TypeEntry{name, table, degree, std::move(structure), {}, std::move(count),
                            std::move(mu1), in_t});
}

// ---- Table 1: non-reduced quartics ----
void build_table1(std::vector<TypeEntry>& out) {
    add(out, "quadruple line", "T1", 4, make({L(1, 4)}, {}),
        [](const BigInt& q, int) {
            return frac(BigInt(1), q * q * q * (q + BigInt(1)) * (q - BigInt(1)) * (q - BigInt(1)));
        },
        [](const BigInt& q) { return Rational(q + BigInt(1)); });
    add(out, "line + triple line", "T1", 4, make({L(), L(1, 3)}, {S(1, {1, 1}, 1)}),
        [](const BigInt& q, int) {
            return frac(BigInt(1), q * q * (q - BigInt(1)) * (q - BigInt(1)));
        },
        [](const BigInt& q) { return Rational(q + BigInt(1)); });
    add(out, "double lines [1^2]", "T1", 4, make({L(1, 2), L(1, 2)}, {S(1, {1, 1}, 1)}),
        [](const BigInt& q, int) {
            return frac(BigInt(1), BigInt(2) * q * q * (q - BigInt(1)) * (q - BigInt(1)));
        },
        [](const BigInt& q) { return Rational(BigInt(2) * q + BigInt(1)); });
    add(out, "double lines [2]", "T1", 4, make({L(2, 2)}, {S(1, {2}, 1)}),
        [](const BigInt& q, int) {
            return frac(BigInt(1), BigInt(2) * q * q * (q - BigInt(1)) * (q + BigInt(1)));
        },
        [](const BigInt&) { return Rational(1); });
    add(out, "double conic", "T1", 4, make({C(1, 2)}, {}),
        [](const BigInt& q, int) {
            return frac(BigInt(1), q * (q + BigInt(1)) * (q - BigInt(1)));
        },
        [](const BigInt& q) { return Rational(q + BigInt(1)); });
    add(out, "lines [1^2] + double line, int [1]", "T1", 4,
        make({L(), L(), L(1, 2)}, {S(1, {1, 1, 1}, 3)}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(2) * q * q * (q - BigInt(1))); },
        [](const BigInt& q) { return Rational(q + BigInt(1)); });
    add(out, "lines [2] + double line, int [1]", "T1", 4,
        make({L(2), L(1, 2)}, {S(1, {1, 2}, 3)}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(2) * q * q * (q - BigInt(1))); },
        [](const BigInt& q) { return Rational(q + BigInt(1)); });
    add(out, "lines [1^2] + double line, int [1^3]", "T1", 4,
        make({L(), L(), L(1, 2)}, {S(1, {1, 1}, 1), S(1, {1, 1}, 1), S(1, {1, 1}, 1)}),
        [](const BigInt& q, int) {
            return frac(BigInt(1), BigInt(2) * (q - BigInt(1)) * (q - BigInt(1)));
        },
        [](const BigInt& q) { return Rational(q + BigInt(2)); });
    add(out, "lines [2] + double line, int [1,2]", "T1", 4,
        make({L(2), L(1, 2)}, {S(1, {2}, 1), S(2, {2, 2}, 1)}),
        [](const BigInt& q, int) {
            return frac(BigInt(1), BigInt(2) * (q + BigInt(1)) * (q - BigInt(1)));
        },
        [](const BigInt& q) { return Rational(q + BigInt(2)); });
    add(out, "conic + double line, int [1]", "T1", 4, make({C(), L(1, 2)}, {S(1, {1, 1}, 2)}),
        [](const BigInt& q, int) { return frac(BigInt(1), q * (q - BigInt(1))); },
        [](const BigInt& q) { return Rational(q + BigInt(1)); });
    add(out, "conic + double line, int [1^2]", "T1", 4,
        make({C(), L(1, 2)}, {S(1, {1, 1}, 1), S(1, {1, 1}, 1)}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(2) * (q - BigInt(1))); },
        [](const BigInt& q) { return Rational(q + BigInt(1)); });
    add(out, "conic + double line, int [2]", "T1", 4, make({C(), L(1, 2)}, {S(2, {2, 2}, 1)}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(2) * (q + BigInt(1))); },
        [](const BigInt& q) { return Rational(q + BigInt(1)); });
}

// ---- Table 2: four lines in general position ----
void build_table2(std::vector<TypeEntry>& out) {
    auto n = [](int d, std::vector<int> pre) { return S(d, std::move(pre), 1); };
    add(out, "lines [1^4] int [1^6]", "T2", 4,
        make({L(), L(), L(), L()},
             {n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1})}),
        [](const BigInt&, int) { return frac(BigInt(1), BigInt(24)); }, mu1_const(6));
    add(out, "lines [1^2,2] int [1^2,2^2]", "T2", 4,
        make({L(), L(), L(2)}, {n(1, {1, 1}), n(1, {2}), n(2, {2, 2}), n(2, {2, 2})}),
        [](const BigInt&, int) { return frac(BigInt(1), BigInt(4)); }, mu1_const(2));
    add(out, "lines [2^2] int [1^2,2^2]", "T2", 4,
        make({L(2), L(2)}, {n(1, {2}), n(1, {2}), n(2, {2, 2}), n(2, {2, 2})}),
        [](const BigInt&, int) { return frac(BigInt(1), BigInt(8)); }, mu1_const(2));
    add(out, "lines [1,3] int [3^2]", "T2", 4,
        make({L(), L(3)}, {n(3, {3, 3}), n(3, {3, 3})}),
        [](const BigInt&, int) { return frac(BigInt(1), BigInt(3)); }, mu1_const(0));
    add(out, "lines [4] int [2,4]", "T2", 4, make({L(4)}, {n(2, {4}), n(4, {4, 4})}),
        [](const BigInt&, int) { return frac(BigInt(1), BigInt(4)); }, mu1_const(0));
}

// ---- Table 3: conic + two lines in general position ----
void build_table3(std::vector<TypeEntry>& out) {
    auto n = [](int d, std::vector<int> pre) { return S(d, std::move(pre), 1); };
    add(out, "conic + lines [1^2] int [1^5]", "T3", 4,
        make({C(), L(), L()},
             {n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1})}),
        [](const BigInt& q, int) { return frac(q - BigInt(2), BigInt(8)); }, mu1_const(5));
    add(out, "conic + lines [1^2] int [1^3,2]", "T3", 4,
        make({C(), L(), L()}, {n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1}), n(2, {2, 2})}),
        [](const BigInt& q, int) { return frac(q, BigInt(4)); }, mu1_const(3));
    add(out, "conic + lines [1^2] int [1,2^2]", "T3", 4,
        make({C(), L(), L()}, {n(1, {1, 1}), n(2, {2, 2}), n(2, {2, 2})}),
        [](const BigInt& q, int) { return frac(q - BigInt(2), BigInt(8)); }, mu1_const(1));
    add(out, "conic + lines [2] int [1,2^2]", "T3", 4,
        make({C(), L(2)}, {n(1, {2}), n(2, {2, 2}), n(2, {2, 2})}),
        [](const BigInt& q, int) { return frac(q - BigInt(2), BigInt(4)); }, mu1_const(1));
    add(out, "conic + lines [2] int [1,4]", "T3", 4,
        make({C(), L(2)}, {n(1, {2}), n(4, {4, 4})}),
        [](const BigInt& q, int) { return frac(q, BigInt(4)); }, mu1_const(1));
}

// ---- Table 4: four singularities ----
void build_table4(std::vector<TypeEntry>& out) {
    auto n = [](int d, std::vector<int> pre) { return S(d, std::move(pre), 1); };
    add(out, "lines [1^4] int [1^4]", "T4", 4,
        make({L(), L(), L(), L()},
             {S(1, {1, 1, 1}, 3), n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1})}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(6) * (q - BigInt(1))); },
        mu1_const(4));
    add(out, "lines [1^2,2] int [1^2,2]", "T4", 4,
        make({L(), L(), L(2)}, {S(1, {1, 2}, 3), n(1, {1, 1}), n(2, {2, 2})}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(2) * (q - BigInt(1))); },
        mu1_const(2));
    add(out, "lines [1,3] int [1,3]", "T4", 4,
        make({L(), L(3)}, {S(1, {3}, 3), n(3, {3, 3})}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(3) * (q - BigInt(1))); },
        mu1_const(1));
    add(out, "conic + tgt + transversal int [1^4]", "T4", 4,
        make({C(), L(), L()}, {S(1, {1, 1}, 2), n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1})}),
        [](const BigInt&, int) { return frac(BigInt(1), BigInt(2)); }, mu1_const(4));
    add(out, "conic + tgt + transversal int [1^2,2]", "T4", 4,
        make({C(), L(), L()}, {S(1, {1, 1}, 2), n(1, {1, 1}), n(2, {2, 2})}),
        [](const BigInt&, int) { return frac(BigInt(1), BigInt(2)); }, mu1_const(2));

    // two conics, transversal (four intersection points)
    add(out, "conics [1^2] int [1^4]", "T4", 4,
        make({C(), C()}, {n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1})}),
        [](const BigInt& q, int) { return frac((q - BigInt(2)) * (q - BigInt(3)), BigInt(48)); },
        mu1_const(4));
    add(out, "conics [1^2] int [1^2,2]", "T4", 4,
        make({C(), C()}, {n(1, {1, 1}), n(1, {1, 1}), n(2, {2, 2})}),
        [](const BigInt& q, int) { return frac(q * (q - BigInt(1)), BigInt(8)); }, mu1_const(2));
    add(out, "conics [1^2] int [2^2]", "T4", 4,
        make({C(), C()}, {n(2, {2, 2}), n(2, {2, 2})}),
        [](const BigInt& q, int) { return frac((q - BigInt(2)) * (q - BigInt(3)), BigInt(16)); },
        mu1_const(0));
    add(out, "conics [1^2] int [1,3]", "T4", 4,
        make({C(), C()}, {n(1, {1, 1}), n(3, {3, 3})}),
        [](const BigInt& q, int) { return frac(q * (q + BigInt(1)), BigInt(6)); }, mu1_const(1));
    add(out, "conics [1^2] int [4]", "T4", 4, make({C(), C()}, {n(4, {4, 4})}),
        [](const BigInt& q, int) { return frac(q * (q - BigInt(1)), BigInt(8)); }, mu1_const(0));
    add(out, "conics [2] int [1^4]", "T4", 4,
        make({C(2)}, {n(1, {2}), n(1, {2}), n(1, {2}), n(1, {2})}),
        [](const BigInt& q, int) { return frac(q * q - q, BigInt(48)); }, mu1_const(4));
    add(out, "conics [2] int [1^2,2]", "T4", 4,
        make({C(2)}, {n(1, {2}), n(1, {2}), n(2, {2, 2})}),
        [](const BigInt& q, int) { return frac(q * q - q - BigInt(2), BigInt(8)); }, mu1_const(2));
    add(out, "conics [2] int [2^2]", "T4", 4, make({C(2)}, {n(2, {2, 2}), n(2, {2, 2})}),
        [](const BigInt& q, int) { return frac(q * q - q, BigInt(16)); }, mu1_const(0));
    add(out, "conics [2] int [1,3]", "T4", 4, make({C(2)}, {n(1, {2}), n(3, {6})}),
        [](const BigInt& q, int) { return frac(q * q - q, BigInt(6)); }, mu1_const(1));
    add(out, "conics [2] int [4]", "T4", 4, make({C(2)}, {n(4, {4, 4})}),
        [](const BigInt& q, int) { return frac(q * q - q - BigInt(2), BigInt(8)); }, mu1_const(0));

    // singular cubic + transversal line (9 types)
    for (std::string kind : {"c", "n1", "n2"}) {
        Partition lam = kind == "c" ? Partition::parse("1")
                      : kind == "n1" ? Partition::parse("1^2") : Partition::parse("2");
        struct MuCase { const char* s; std::vector<SingOrbit> ints; };
        std::vector<MuCase> cases = {
            {"1^3", {S(1, {1, 1}, 1), S(1, {1, 1}, 1), S(1, {1, 1}, 1)}},
            {"1,2", {S(1, {1, 1}, 1), S(2, {2, 2}, 1)}},
            {"3", {S(3, {3, 3}, 1)}}};
        for (auto& mc : cases) {
            Partition mu3 = Partition::parse(mc.s);
            std::vector<SingOrbit> sings = mc.ints;
            sings.push_back(S(1, pre_of(kind, 1), 1));
            add(out, "sing cubic (" + kind + ") + transversal line, int [" + mc.s + "]", "SCTL", 4,
                make({K0(), L()}, std::move(sings)),
                [lam, mu3](const BigInt& q, int) {
                    return singular_cubic_with_line(lam, CubicLineVariant::Transversal, q, mu3);
                },
                [mu3](const BigInt&) { return Rational(1 + mu3.mult(1)); });
        }
    }
}

// ---- Table 5 and the other three-singularity families ----
void build_table5(std::vector<TypeEntry>& out) {
    auto n = [](int d, std::vector<int> pre) { return S(d, std::move(pre), 1); };
    add(out, "conic + tgt lines [1^2] int [1^3]", "T5", 4,
        make({C(), L(), L()}, {S(1, {1, 1}, 2), S(1, {1, 1}, 2), n(1, {1, 1})}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(2) * (q - BigInt(1))); },
        mu1_const(3));
    add(out, "conic + tgt lines [2] int [1,2]", "T5", 4,
        make({C(), L(2)}, {S(2, {2, 2}, 2), n(1, {2})}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(2) * (q + BigInt(1))); },
        mu1_const(1));
    add(out, "conic + lines [1^2] meeting on conic, int [1^3]", "T5", 4,
        make({C(), L(), L()}, {S(1, {1, 1, 1}, 3), n(1, {1, 1}), n(1, {1, 1})}),
        [](const BigInt&, int) { return frac(BigInt(1), BigInt(2)); }, mu1_const(3));
    add(out, "conic + lines [2] meeting on conic, int [1,2]", "T5", 4,
        make({C(), L(2)}, {S(1, {1, 2}, 3), n(2, {2, 2})}),
        [](const BigInt&, int) { return frac(BigInt(1), BigInt(2)); }, mu1_const(1));
    add(out, "conics [1^2] int [1^3]", "T5", 4,
        make({C(), C()}, {S(1, {1, 1}, 2), n(1, {1, 1}), n(1, {1, 1})}),
        [](const BigInt& q, int) { return frac(q - BigInt(2), BigInt(4)); }, mu1_const(3));
    add(out, "conics [1^2] int [1,2]", "T5", 4,
        make({C(), C()}, {S(1, {1, 1}, 2), n(2, {2, 2})}),
        [](const BigInt& q, int) { return frac(q - BigInt(2), BigInt(4)); }, mu1_const(1));
    add(out, "conics [2] int [1^3]", "T5", 4,
        make({C(2)}, {S(1, {2}, 2), n(1, {2}), n(1, {2})}),
        [](const BigInt& q, int) { return frac(q, BigInt(4)); }, mu1_const(3));
    add(out, "conics [2] int [1,2]", "T5", 4, make({C(2)}, {S(1, {2}, 2), n(2, {2, 2})}),
        [](const BigInt& q, int) { return frac(q, BigInt(4)); }, mu1_const(1));

    // singular cubic + line in two smooth points
    for (std::string kind : {"c", "n1", "n2"}) {
        Partition lam = kind == "c" ? Partition::parse("1")
                      : kind == "n1" ? Partition::parse("1^2") : Partition::parse("2");
        add(out, "sing cubic (" + kind + ") + line in two smooth points", "SC2PT", 4,
            make({K0(), L()}, {S(1, pre_of(kind, 1), 1), S(1, {1, 1}, 2), S(1, {1, 1}, 1)}),
            [lam](const BigInt& q, int) {
                return singular_cubic_with_line(lam, CubicLineVariant::TwoPoints, q);
            },
            mu1_const(3));
    }
}

// ---- Table 6: irreducible quartics with three delta=1 singularities ----
struct T6Row {
    const char* name;
    std::vector<std::pair<const char*, int>> sings;  // (kind, orbit degree)
    // numerator polynomials evaluated inline below
    std::function<Rational(const BigInt&)> odd;
    std::function<Rational(const BigInt&)> even;
};

void build_table6(std::vector<TypeEntry>& out) {
    auto Q = [](const BigInt& q) { return q; };
    (void)Q;
    std::vector<T6Row> rows = {
        {"Q=3c", {{"c", 1}, {"c", 1}, {"c", 1}},
         [](const BigInt&) { return frac(BigInt(1), BigInt(6)); },
         [](const BigInt&) { return Rational(0); }},
        {"Q=2c+n1", {{"c", 1}, {"c", 1}, {"n1", 1}},
         [](const BigInt& q) { return frac(q - BigInt(3), BigInt(4)); },
         [](const BigInt& q) { return frac(q - BigInt(2), BigInt(4)); }},
        {"Q=2c+n2", {{"c", 1}, {"c", 1}, {"n2", 1}},
         [](const BigInt& q) { return frac(q - BigInt(1), BigInt(4)); },
         [](const BigInt& q) { return frac(q, BigInt(4)); }},
        {"Q=c+2n1", {{"c", 1}, {"n1", 1}, {"n1", 1}},
         [](const BigInt& q) { return frac((q - BigInt(3)) * (q - BigInt(3)), BigInt(8)); },
         [](const BigInt& q) { return frac((q - BigInt(2)) * (q - BigInt(4)), BigInt(8)); }},
        {"Q=c+n1+n2", {{"c", 1}, {"n1", 1}, {"n2", 1}},
         [](const BigInt& q) { return frac((q - BigInt(1)) * (q - BigInt(1)), BigInt(4)); },
         [](const BigInt& q) { return frac(q * (q - BigInt(2)), BigInt(4)); }},
        {"Q=c+2n2", {{"c", 1}, {"n2", 1}, {"n2", 1}},
         [](const BigInt& q) { return frac((q - BigInt(1)) * (q - BigInt(1)), BigInt(8)); },
         [](const BigInt& q) { return frac(q * (q - BigInt(2)), BigInt(8)); }},
        {"Q=3n1", {{"n1", 1}, {"n1", 1}, {"n1", 1}},
         [](const BigInt& q) {
             return frac((q - BigInt(3)) * (q * q - BigInt(7) * q + BigInt(11)), BigInt(48));
         },
         [](const BigInt& q) {
             return frac((q - BigInt(2)) * (q - BigInt(4)) * (q - BigInt(4)), BigInt(48));
         }},
        {"Q=2n1+n2", {{"n1", 1}, {"n1", 1}, {"n2", 1}},
         [](const BigInt& q) {
             return frac((q - BigInt(1)) * (q * q - BigInt(3) * q + BigInt(1)), BigInt(16));
         },
         [](const BigInt& q) { return frac(q * (q - BigInt(2)) * (q - BigInt(2)), BigInt(16)); }},
        {"Q=n1+2n2", {{"n1", 1}, {"n2", 1}, {"n2", 1}},
         [](const BigInt& q) { return frac(q * q * q - BigInt(2) * q * q - BigInt(1), BigInt(16)); },
         [](const BigInt& q) { return frac(q * q * (q - BigInt(2)), BigInt(16)); }},
        {"Q=3n2", {{"n2", 1}, {"n2", 1}, {"n2", 1}},
         [](const BigInt& q) {
             return frac((q - BigInt(1)) * (q * q - BigInt(3) * q + BigInt(1)), BigInt(48));
         },
         [](const BigInt& q) { return frac(q * (q - BigInt(2)) * (q - BigInt(2)), BigInt(48)); }},
        {"Q=c+c^2", {{"c", 1}, {"c", 2}},
         [](const BigInt&) { return frac(BigInt(1), BigInt(2)); },
         [](const BigInt&) { return Rational(0); }},
        {"Q=n1+c^2", {{"n1", 1}, {"c", 2}},
         [](const BigInt& q) { return frac(q - BigInt(1), BigInt(4)); },
         [](const BigInt& q) { return frac(q, BigInt(4)); }},
        {"Q=n2+c^2", {{"n2", 1}, {"c", 2}},
         [](const BigInt& q) { return frac(q - BigInt(3), BigInt(4)); },
         [](const BigInt& q) { return frac(q - BigInt(2), BigInt(4)); }},
        {"Q=c+n1^2", {{"c", 1}, {"n1", 2}},
         [](const BigInt& q) { return frac(q * q - BigInt(2) * q - BigInt(1), BigInt(4)); },
         [](const BigInt& q) { return frac(q * (q - BigInt(2)), BigInt(4)); }},
        {"Q=c+n2^2", {{"c", 1}, {"n2", 2}},
         [](const BigInt& q) { return frac((q + BigInt(1)) * (q - BigInt(1)), BigInt(4)); },
         [](const BigInt& q) { return frac(q * q, BigInt(4)); }},
        {"Q=n1+n1^2", {{"n1", 1}, {"n1", 2}},
         [](const BigInt& q) { return frac((q - BigInt(1)) * (q * q - q - BigInt(1)), BigInt(8)); },
         [](const BigInt& q) { return frac(q * q * (q - BigInt(2)), BigInt(8)); }},
        {"Q=n2+n1^2", {{"n2", 1}, {"n1", 2}},
         [](const BigInt& q) { return frac((q - BigInt(3)) * (q * q - q - BigInt(3)), BigInt(8)); },
         [](const BigInt& q) {
             return frac((q - BigInt(2)) * (q * q - BigInt(2) * q - BigInt(4)), BigInt(8));
         }},
        {"Q=n1+n2^2", {{"n1", 1}, {"n2", 2}},
         [](const BigInt& q) { return frac((q + BigInt(1)) * (q * q - q + BigInt(1)), BigInt(8)); },
         [](const BigInt& q) { return frac(q * q * q, BigInt(8)); }},
        {"Q=n2+n2^2", {{"n2", 1}, {"n2", 2}},
         [](const BigInt& q) { return frac((q - BigInt(1)) * (q * q - q - BigInt(1)), BigInt(8)); },
         [](const BigInt& q) { return frac(q * q * (q - BigInt(2)), BigInt(8)); }},
        {"Q=c^3", {{"c", 3}},
         [](const BigInt&) { return frac(BigInt(1), BigInt(3)); },
         [](const BigInt&) { return Rational(0); }},
        {"Q=n1^3", {{"n1", 3}},
         [](const BigInt& q) {
             return frac(q * q * q - q * q - q - BigInt(3), BigInt(6));
         },
         [](const BigInt& q) { return frac((q - BigInt(2)) * (q * q + q + BigInt(1)), BigInt(6)); }},
        {"Q=n2^3", {{"n2", 3}},
         [](const BigInt& q) { return frac((q - BigInt(1)) * (q * q + BigInt(1)), BigInt(6)); },
         [](const BigInt& q) { return frac(q * (q * q - q + BigInt(1)), BigInt(6)); }},
    };
    for (auto& row : rows) {
        std::vector<SingOrbit> sings;
        int mu1 = 0;
        for (auto& [kind, d] : row.sings) {
            sings.push_back(S(d, pre_of(kind, d), 1));
            if (d == 1) ++mu1;
        }
        auto odd = row.odd;
        auto even = row.even;
        add(out, row.name, "T6", 4, make({Q0()}, std::move(sings)),
            [odd, even](const BigInt& q, int p) { return p == 2 ? even(q) : odd(q); },
            mu1_const(mu1));
    }
}

// ---- Table 7 and the other two-singularity families ----
void build_table7(std::vector<TypeEntry>& out) {
    auto n = [](int d, std::vector<int> pre) { return S(d, std::move(pre), 1); };
    add(out, "conic + tgt + transversal through contact, int [1^2]", "T7", 4,
        make({C(), L(), L()}, {S(1, {1, 1, 1}, 4), n(1, {1, 1})}),
        [](const BigInt& q, int) { return frac(BigInt(1), q - BigInt(1)); }, mu1_const(2));
    add(out, "conics [1^2] int [1^2]", "T7", 4,
        make({C(), C()}, {S(1, {1, 1}, 2), S(1, {1, 1}, 2)}),
        [](const BigInt& q, int) {
            return frac(BigInt(3) * q - BigInt(4), BigInt(4) * (q - BigInt(1)));
        },
        mu1_const(2));
    out.back().alts.push_back(make({C(), C()}, {S(1, {1, 1}, 3), S(1, {1, 1}, 1)}));
    add(out, "conics [1^2] int [2]", "T7", 4, make({C(), C()}, {S(2, {2, 2}, 2)}),
        [](const BigInt& q, int) {
            return frac(q - BigInt(2), BigInt(4) * (q + BigInt(1)));
        },
        mu1_const(0));
    add(out, "conics [2] int [1^2]", "T7", 4, make({C(2)}, {S(1, {2}, 2), S(1, {2}, 2)}),
        [](const BigInt& q, int) {
            return frac(BigInt(3) * q - BigInt(2), BigInt(4) * (q - BigInt(1)));
        },
        mu1_const(2));
    out.back().alts.push_back(make({C(2)}, {S(1, {2}, 3), S(1, {2}, 1)}));
    add(out, "conics [2] int [2]", "T7", 4, make({C(2)}, {S(2, {2, 2}, 2)}),
        [](const BigInt& q, int) { return frac(q, BigInt(4) * (q + BigInt(1))); }, mu1_const(0));

    for (std::string kind : {"c", "n1", "n2"}) {
        Partition lam = kind == "c" ? Partition::parse("1")
                      : kind == "n1" ? Partition::parse("1^2") : Partition::parse("2");
        add(out, "sing cubic (" + kind + ") + line in one smooth point", "SC1PT", 4,
            make({K0(), L()}, {S(1, pre_of(kind, 1), 1), S(1, {1, 1}, 3)}),
            [lam](const BigInt& q, int) {
                return singular_cubic_with_line(lam, CubicLineVariant::OnePoint, q);
            },
            mu1_const(2));
        std::vector<int> thru = pre_of(kind, 1);
        thru.push_back(1);
        add(out, "sing cubic (" + kind + ") + line through the singularity", "SCTHRU", 4,
            make({K0(), L()}, {S(1, std::move(thru), 3), S(1, {1, 1}, 1)}),
            [lam](const BigInt& q, int) {
                return singular_cubic_with_line(lam, CubicLineVariant::ThroughSingularity, q);
            },
            mu1_const(2));
    }

    // irreducible quartic with one delta=2 and one delta=1 singularity
    for (std::string tk : {"c", "n1", "n2"}) {
        for (std::string nk : {"c", "n1", "n2"}) {
            Partition lam = tk == "c" ? Partition::parse("1")
                          : tk == "n1" ? Partition::parse("1^2") : Partition::parse("2");
            Partition mu = nk == "c" ? Partition::parse("1")
                         : nk == "n1" ? Partition::parse("1^2") : Partition::parse("2");
            add(out, "quartic t" + tk + " + " + nk, "Q12", 4,
                make({Q0()}, {S(1, pre_of(tk, 1), 2), S(1, pre_of(nk, 1), 1)}),
                [lam, mu](const BigInt& q, int) { return quart12_count(lam, mu, q); },
                mu1_const(2));
        }
    }
}

// ---- Table 8: singular degree-3 curves ----
void build_cubics(std::vector<TypeEntry>& out) {
    auto n = [](int d, std::vector<int> pre) { return S(d, std::move(pre), 1); };
    add(out, "triple line", "T8", 3, make({L(1, 3)}, {}),
        [](const BigInt& q, int) {
            return frac(BigInt(1), q * q * q * (q + BigInt(1)) * (q - BigInt(1)) * (q - BigInt(1)));
        },
        [](const BigInt& q) { return Rational(q + BigInt(1)); });
    add(out, "line + double line", "T8", 3, make({L(), L(1, 2)}, {n(1, {1, 1})}),
        [](const BigInt& q, int) {
            return frac(BigInt(1), q * q * (q - BigInt(1)) * (q - BigInt(1)));
        },
        [](const BigInt& q) { return Rational(q + BigInt(1)); });
    add(out, "lines [1^3] int [1^3]", "T8", 3,
        make({L(), L(), L()}, {n(1, {1, 1}), n(1, {1, 1}), n(1, {1, 1})}),
        [](const BigInt& q, int) {
            return frac(BigInt(1), BigInt(6) * (q - BigInt(1)) * (q - BigInt(1)));
        },
        mu1_const(3));
    add(out, "lines [1,2] int [1,2]", "T8", 3,
        make({L(), L(2)}, {n(1, {2}), n(2, {2, 2})}),
        [](const BigInt& q, int) {
            return frac(BigInt(1), BigInt(2) * (q + BigInt(1)) * (q - BigInt(1)));
        },
        mu1_const(1));
    add(out, "lines [3] int [3]", "T8", 3, make({L(3)}, {n(3, {3, 3})}),
        [](const BigInt& q, int) {
            return frac(BigInt(1), BigInt(3) * (q * q + q + BigInt(1)));
        },
        mu1_const(0));
    add(out, "lines [1^3] int [1]", "T8", 3, make({L(), L(), L()}, {S(1, {1, 1, 1}, 3)}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(6) * q * q * (q - BigInt(1))); },
        mu1_const(1));
    add(out, "lines [1,2] int [1]", "T8", 3, make({L(), L(2)}, {S(1, {1, 2}, 3)}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(2) * q * q * (q - BigInt(1))); },
        mu1_const(1));
    add(out, "lines [3] int [1]", "T8", 3, make({L(3)}, {S(1, {3}, 3)}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(3) * q * q * (q - BigInt(1))); },
        mu1_const(1));
    add(out, "conic + line int [1]", "T8", 3, make({C(), L()}, {S(1, {1, 1}, 2)}),
        [](const BigInt& q, int) { return frac(BigInt(1), q * (q - BigInt(1))); }, mu1_const(1));
    add(out, "conic + line int [1^2]", "T8", 3,
        make({C(), L()}, {n(1, {1, 1}), n(1, {1, 1})}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(2) * (q - BigInt(1))); },
        mu1_const(2));
    add(out, "conic + line int [2]", "T8", 3, make({C(), L()}, {n(2, {2, 2})}),
        [](const BigInt& q, int) { return frac(BigInt(1), BigInt(2) * (q + BigInt(1))); },
        mu1_const(0));
    add(out, "cuspidal cubic", "T8", 3, make({K0()}, {S(1, {1}, 1)}),
        [](const BigInt& q, int) { return singular_cubic_count(Partition::parse("1"), q); },
        mu1_const(1));
    add(out, "split nodal cubic", "T8", 3, make({K0()}, {S(1, {1, 1}, 1)}),
        [](const BigInt& q, int) { return singular_cubic_count(Partition::parse("1^2"), q); },
        mu1_const(1));
    add(out, "non-split nodal cubic", "T8", 3, make({K0()}, {S(1, {2}, 1)}),
        [](const BigInt& q, int) { return singular_cubic_count(Partition::parse("2"), q); },
        mu1_const(1));
}

std::vector<TypeEntry> build_quartics() {
    std::vector<TypeEntry> out;
    build_table1(out);
    build_table2(out);
    build_table3(out);
    build_table4(out);
    build_table5(out);
    build_table6(out);
    build_table7(out);
    return out;
}

}  // namespace

const std::vector<TypeEntry>& quartic_type_registry() {
    static const std::vector<TypeEntry> reg = build_quartics();
    return reg;
}

const std::vector<TypeEntry>& cubic_type_registry() {
    static const std::vector<TypeEntry> reg = [] {
        std::vector<TypeEntry> out;
        build_cubics(out);
        return out;
    }();
    return reg;
}

Rational table_count(const std::string& name, const BigInt& q, int p) {
    for (const auto& entry : quartic_type_registry())
        if (entry.name == name) return entry.count(q, p);
    for (const auto& entry : cubic_type_registry())
        if (entry.name == name) return entry.count(q, p);
    throw std::invalid_argument("table_count: unknown type '" + name + "'");
}

}  // namespace curvecount
