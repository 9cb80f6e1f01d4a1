#pragma once

#include <cstdint>
#include <vector>

#include "curvecount/form.hpp"
#include "curvecount/geom.hpp"
#include "curvecount/gf.hpp"
#include "curvecount/partition.hpp"

namespace curvecount {

// k-coordinates of elements of k_m with respect to the basis 1, y, ..., y^(m-1)
// (y = the power-basis generator of ext(m)). Cached per (base, m).
class DescentBasis {
public:
    static const DescentBasis& get(const Tower& tower, int m);
    // coordinates of a (rank in ext(m)) as m ranks in the base field
    void coords(uint32_t a, uint32_t* out) const;
    int m() const { return m_; }

private:
    const GF* base_;
    const GF* ext_;
    int m_;
    std::vector<std::vector<uint8_t>> inv_;  // (rm x rm) inverse matrix over F_p
};

// Linear conditions on the coefficient vector of a degree-d ternary form over
// the base field. Rows are accumulated in echelon form, so rank queries are
// incremental; copy the object to branch.
class LinSystem {
public:
    LinSystem(const Tower& tower, int degree);

    // f(P) = 0 for P over ext(m): m descended rows
    void add_pass_through(const ProjPoint& P, int m);
    // f and all partials vanish at P: 4m descended rows
    void add_singular_at(const ProjPoint& P, int m);
    // all points of the lambda-set
    void add_set(const LambdaSet& S);

    int rank() const { return rank_; }
    int ncols() const { return ncols_; }
    // projective dimension of the solution space (-1 when only 0 remains)
    int proj_dim() const { return ncols_ - 1 - rank_; }
    // |P^dim(k)|, 0 for empty
    BigInt point_count() const;

    // enumerate a basis of the projective solution space (coefficient vectors
    // over the base field); used by the restricted censuses
    std::vector<std::vector<uint32_t>> solution_basis() const;

private:
    const Tower* tower_;
    int degree_;
    int ncols_;
    int rank_ = 0;
    std::vector<std::vector<uint32_t>> echelon_;  // rows over base, leading 1s
    std::vector<int> pivot_;                      // pivot column per echelon row

    void add_row(std::vector<uint32_t> row);
    void add_conditions(const TernaryForm& g, const ProjPoint& P, int m);
};

// dim of L_{P,S} where P is a lambda-set and S an optional list of singular
// points (each with its orbit degree)
int dim_L(const Tower& tower, int degree, const LambdaSet& P,
          const std::vector<std::pair<ProjPoint, int>>& S);

// Special-configuration classifiers (line membership on block level).
bool in_A(const Tower& tower, const LambdaSet& P, const Partition& lambda, const Partition& mu);
bool in_B(const Tower& tower, const LambdaSet& P, const Partition& lambda, const Partition& mu);

// closed-form coefficients
BigInt a_coeff(const Partition& lambda, const Partition& mu, const BigInt& q);
BigInt b_coeff(const Partition& lambda, const Partition& mu, const BigInt& q);

}  // namespace curvecount
