#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "curvecount/bigint.hpp"

namespace curvecount {

// Partition in multiplicity form: mult[i] = number of parts equal to i+1.
// Trailing zeros are trimmed, so the empty partition is {}.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> mults);

    // parts listed largest-first, e.g. {2,1,1}
    static Partition from_parts(const std::vector<int>& parts);
    // grammar: comma-separated "i^m" or "i" terms; "" / "0" / "e" = empty
    static Partition parse(const std::string& s);

    int weight() const;
    int mult(int i) const { return i >= 1 && i <= (int)m_.size() ? m_[i - 1] : 0; }
    int max_part() const { return (int)m_.size(); }
    int num_parts() const;
    bool empty() const { return m_.empty(); }
    const std::vector<int>& mults() const { return m_; }

    BigInt zee() const;  // prod_i mult_i! * i^mult_i

    Partition operator+(const Partition& o) const;
    Partition operator-(const Partition& o) const;  // requires o <= *this
    bool leq(const Partition& o) const;             // componentwise
    bool operator==(const Partition& o) const { return m_ == o.m_; }
    bool operator!=(const Partition& o) const { return m_ != o.m_; }
    bool operator<(const Partition& o) const;  // arbitrary total order for maps

    std::string str() const;  // canonical "1^3,2^2" form, "e" for empty

    static std::vector<Partition> all_of_weight(int n);
    static std::vector<Partition> all_up_to_weight(int n);  // includes empty
    static Partition cycle_type(const std::vector<int>& perm);  // 0-based permutation

private:
    std::vector<int> m_;
    void trim();
};

// Number of lambda-tuples on a space X given |X(k_d)| for the needed d
// (Moebius formula). point_counts[d] = |X(k_d)|; counts may be negative in
// intermediate virtual uses, hence BigInt.
BigInt tuple_count(const std::map<int, BigInt>& point_counts, const Partition& lambda);

// Convenience when |X(k_d)| is given by a callback.
template <class F>
BigInt tuple_count_f(F&& counts, const Partition& lambda) {
    std::map<int, BigInt> pc;
    for (int i = 1; i <= lambda.max_part(); ++i)
        if (lambda.mult(i) > 0)
            for (int d = 1; d <= i; ++d)
                if (i % d == 0 && !pc.count(d)) pc[d] = counts(d);
    return tuple_count(pc, lambda);
}

int moebius(int n);

}  // namespace curvecount
