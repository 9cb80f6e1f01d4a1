#include "curvecount/polyq.hpp"

#include <stdexcept>

namespace curvecount {

void PolyQ::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& PolyQ::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= (int)c_.size()) return zero;
    return c_[(size_t)i];
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] += o.c_[i];
    }
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] -= o.c_[i];
    }
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v *= s;
    return PolyQ(std::move(r));
}

PolyQ PolyQ::divide_exact(const PolyQ& o) const {
    if (o.is_zero()) throw std::domain_error("PolyQ: division by zero");
    std::vector<Rational> rem = c_;
    int dr = (int)rem.size() - 1, dd = o.degree();
    if (dr < dd) {
        if (is_zero()) return PolyQ();
        throw std::domain_error("PolyQ: not divisible");
    }
    std::vector<Rational> quot((size_t)(dr - dd + 1), Rational(0));
    for (int i = dr; i >= dd; --i) {
        Rational f = rem[(size_t)i] / o.coeff(dd);
        quot[(size_t)(i - dd)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) rem[(size_t)(i - dd + j)] -= f * o.coeff(j);
    }
    for (const auto& v : rem)
        if (!v.is_zero()) throw std::domain_error("PolyQ: not divisible (nonzero remainder)");
    return PolyQ(std::move(quot));
}

Rational PolyQ::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string PolyQ::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += c_[i].str();
        if (i > 0) s += "*" + var + "^" + std::to_string(i);
    }
    return s;
}

PolyQ lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& samples) {
    PolyQ total;
    for (size_t i = 0; i < samples.size(); ++i) {
        PolyQ li = PolyQ::constant(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < samples.size(); ++j) {
            if (j == i) continue;
            li = li * PolyQ({-samples[j].first, Rational(1)});
            denom *= samples[i].first - samples[j].first;
        }
        total = total + li * (samples[i].second / denom);
    }
    return total;
}

PolyQ tuple_count_poly(const std::map<int, PolyQ>& point_counts, const Partition& lambda) {
    PolyQ total = PolyQ::constant(Rational(1));
    for (int i = 1; i <= lambda.max_part(); ++i) {
        int mult = lambda.mult(i);
        if (mult == 0) continue;
        PolyQ fresh;
        for (int d = 1; d <= i; ++d) {
            if (i % d) continue;
            auto it = point_counts.find(d);
            if (it == point_counts.end())
                throw std::invalid_argument("tuple_count_poly: missing |X(k_d)|");
            fresh = fresh + it->second * Rational(moebius(i / d));
        }
        for (int j = 0; j < mult; ++j)
            total = total * (fresh - PolyQ::constant(Rational((long long)i * j)));
    }
    return total;
}

}  // namespace curvecount
