#pragma once

#include <functional>
#include <map>
#include <vector>

#include "curvecount/bigint.hpp"
#include "curvecount/partition.hpp"

namespace curvecount {

// dense univariate polynomial with rational coefficients
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolyQ constant(Rational v) { return PolyQ({std::move(v)}); }
    static PolyQ x() { return PolyQ({Rational(0), Rational(1)}); }

    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator*(const Rational& s) const;
    // exact division; throws if not divisible
    PolyQ divide_exact(const PolyQ& o) const;

    Rational eval(const Rational& x) const;
    std::string str(const std::string& var = "q") const;

    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;
    void trim();
};

// Lagrange interpolation through (x_i, y_i); exact.
PolyQ lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& samples);

// tuple_count with values in PolyQ (used with |X(k_d)| polynomial in a_1)
PolyQ tuple_count_poly(const std::map<int, PolyQ>& point_counts, const Partition& lambda);

}  // namespace curvecount
