#include "curvecount/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvecount {

Partition::Partition(std::vector<int> mults) : m_(std::move(mults)) {
    for (int v : m_)
        if (v < 0) throw std::invalid_argument("Partition: negative multiplicity");
    trim();
}

void Partition::trim() {
    while (!m_.empty() && m_.back() == 0) m_.pop_back();
}

Partition Partition::from_parts(const std::vector<int>& parts) {
    std::vector<int> m;
    for (int part : parts) {
        if (part < 1) throw std::invalid_argument("Partition: part < 1");
        if ((int)m.size() < part) m.resize(part, 0);
        ++m[part - 1];
    }
    return Partition(std::move(m));
}

Partition Partition::parse(const std::string& s) {
    std::string t;
    for (char character : s)
        if (!isspace((unsigned char)character)) t += character;
    if (t.empty() || t == "0" || t == "e" || t == "empty") return Partition();
    std::vector<int> m;
    size_t pos = 0;
    while (pos < t.size()) {
        size_t comma = t.find(',', pos);
        std::string term = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? t.size() : comma + 1;
        if (term.empty()) throw std::invalid_argument("Partition: empty term");
        size_t caret = term.find('^');
        long long part, mult = 1;
        try {
            part = std::stoll(term.substr(0, caret));
            if (caret != std::string::npos) mult = std::stoll(term.substr(caret + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition: bad term '" + term + "'");
        }
        if (part < 1 || part > 64 || mult < 0 || mult > 1 << 20)
            throw std::invalid_argument("Partition: term out of range '" + term + "'");
        if ((int)m.size() < part) m.resize(part, 0);
        m[part - 1] += (int)mult;
    }
    return Partition(std::move(m));
}

int Partition::weight() const {
    int w = 0;
    for (size_t i = 0; i < m_.size(); ++i) w += (int)(i + 1) * m_[i];
    return w;
}

int Partition::num_parts() const {
    int c = 0;
    for (int v : m_) c += v;
    return c;
}

BigInt Partition::zee() const {
    BigInt z(1);
    for (size_t i = 0; i < m_.size(); ++i) {
        z = z * factorial((unsigned)m_[i]);
        z = z * BigInt::pow(BigInt((long long)(i + 1)), (unsigned)m_[i]);
    }
    return z;
}

Partition Partition::operator+(const Partition& o) const {
    std::vector<int> m(std::max(m_.size(), o.m_.size()), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        if (i < m_.size()) m[i] += m_[i];
        if (i < o.m_.size()) m[i] += o.m_[i];
    }
    return Partition(std::move(m));
}

Partition Partition::operator-(const Partition& o) const {
    if (!o.leq(*this)) throw std::domain_error("Partition: subtraction needs o <= this");
    std::vector<int> m = m_;
    for (size_t i = 0; i < o.m_.size(); ++i) m[i] -= o.m_[i];
    return Partition(std::move(m));
}

bool Partition::leq(const Partition& o) const {
    for (size_t i = 0; i < m_.size(); ++i)
        if (m_[i] > o.mult((int)i + 1)) return false;
    return true;
}

bool Partition::operator<(const Partition& o) const { return m_ < o.m_; }

std::string Partition::str() const {
    if (m_.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < m_.size(); ++i) {
        if (m_[i] == 0) continue;
        if (!s.empty()) s += ",";
        s += std::to_string(i + 1);
        if (m_[i] > 1) s += "^" + std::to_string(m_[i]);
    }
    return s;
}

std::vector<Partition> Partition::all_of_weight(int n) {
    std::vector<Partition> out;
    std::vector<int> parts;
    // descending parts, recursive
    struct Rec {
        std::vector<Partition>& out;
        std::vector<int>& parts;
        void go(int remaining, int max_part) {
            if (remaining == 0) {
                out.push_back(Partition::from_parts(parts));
                return;
            }
            for (int part = std::min(remaining, max_part); part >= 1; --part) {
                parts.push_back(part);
                go(remaining - part, part);
                parts.pop_back();
            }
        }
    } rec{out, parts};
    if (n == 0) out.push_back(Partition());
    else rec.go(n, n);
    return out;
}

std::vector<Partition> Partition::all_up_to_weight(int n) {
    std::vector<Partition> out;
    for (int w = 0; w <= n; ++w) {
        auto ws = all_of_weight(w);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

Partition Partition::cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> parts;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = (size_t)perm[j];
            ++len;
        }
        parts.push_back(len);
    }
    return from_parts(parts);
}

int moebius(int n) {
    int result = 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

BigInt tuple_count(const std::map<int, BigInt>& point_counts, const Partition& lambda) {
    BigInt total(1);
    for (int i = 1; i <= lambda.max_part(); ++i) {
        int mult = lambda.mult(i);
        if (mult == 0) continue;
        // number of points of degree exactly-i-aggregate: sum_{d|i} mu(i/d) |X(k_d)|
        BigInt fresh(0);
        for (int d = 1; d <= i; ++d) {
            if (i % d) continue;
            auto it = point_counts.find(d);
            if (it == point_counts.end()) throw std::invalid_argument("tuple_count: missing |X(k_d)|");
            fresh += BigInt(moebius(i / d)) * it->second;
        }
        for (int j = 0; j < mult; ++j) total *= fresh - BigInt((long long)i * j);
    }
    return total;
}

}  // namespace curvecount
