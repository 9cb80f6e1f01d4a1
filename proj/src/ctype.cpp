#include "curvecount/ctype.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvecount {

bool CompOrbit::operator<(const CompOrbit& o) const {
    return std::tie(curve_deg, orbit, mult, genus) < std::tie(o.curve_deg, o.orbit, o.mult, o.genus);
}
bool CompOrbit::operator==(const CompOrbit& o) const {
    return curve_deg == o.curve_deg && orbit == o.orbit && mult == o.mult && genus == o.genus;
}

bool SingOrbit::operator<(const SingOrbit& o) const {
    return std::tie(d, delta, pre) < std::tie(o.d, o.delta, o.pre);
}
bool SingOrbit::operator==(const SingOrbit& o) const {
    return d == o.d && pre == o.pre && delta == o.delta;
}

void CurveStructure::canonicalize() {
    for (auto& s : sings) std::sort(s.pre.begin(), s.pre.end());
    std::sort(comps.begin(), comps.end());
    std::sort(sings.begin(), sings.end());
}

std::string CurveStructure::key() const {
    CurveStructure c = *this;
    c.canonicalize();
    std::string s;
    for (const auto& comp : c.comps) {
        if (!s.empty()) s += "+";
        s += "D" + std::to_string(comp.curve_deg) + "o" + std::to_string(comp.orbit);
        if (comp.mult > 1) s += "m" + std::to_string(comp.mult);
        if (comp.genus) s += "g1";
    }
    s += "|";
    bool first = true;
    for (const auto& sing : c.sings) {
        if (!first) s += ";";
        first = false;
        s += std::to_string(sing.d) + "d" + std::to_string(sing.delta) + "b";
        for (int f : sing.pre) s += std::to_string(f);
    }
    return s;
}

bool CurveStructure::has_genus1() const {
    for (const auto& comp : comps)
        if (comp.genus) return true;
    return false;
}

int CurveStructure::total_degree() const {
    int d = 0;
    for (const auto& comp : comps) d += comp.curve_deg * comp.orbit * comp.mult;
    return d;
}

BigInt trace_power_g1(const BigInt& q, long long a1, int m) {
    if (m == 0) return BigInt(2);
    BigInt prev(2), cur(a1);
    for (int i = 1; i < m; ++i) {
        BigInt next = BigInt(a1) * cur - q * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

BigInt CurveStructure::count_km(const BigInt& q, int m, long long a1) const {
    BigInt qm = BigInt::pow(q, (unsigned)m);
    BigInt total(0);
    for (const auto& comp : comps) {
        if (m % comp.orbit) continue;
        BigInt pts = qm + BigInt(1);
        if (comp.genus == 1) pts -= trace_power_g1(BigInt::pow(q, (unsigned)comp.orbit), a1, m / comp.orbit);
        total += BigInt(comp.orbit) * pts;
    }
    for (const auto& sing : sings) {
        if (m % sing.d) continue;
        BigInt adj((long long)sing.d);
        for (int f : sing.pre)
            if (m % f == 0) adj -= BigInt(f);
        total += adj;
    }
    return total;
}

BigInt CurveStructure::lambda_count(const BigInt& q, const Partition& lambda, long long a1) const {
    return tuple_count_f([&](int d) { return count_km(q, d, a1); }, lambda);
}

int CurveStructure::mu1_reduced() const {
    int n = 0;
    for (const auto& sing : sings)
        if (sing.d == 1) ++n;
    return n;
}

Partition CurveStructure::mu_pattern() const {
    std::vector<int> parts;
    for (const auto& sing : sings) parts.push_back(sing.d);
    return Partition::from_parts(parts);
}

}  // namespace curvecount
