#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace twrc {

// Joint pmf of two discrete variables, p(x, y) stored row-major.
// Composite variables are handled by flattening their index upstream.
struct JointPmf {
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<double> p;

    JointPmf(std::size_t nx_, std::size_t ny_)
        : nx(nx_), ny(ny_), p(nx_ * ny_, 0.0) {}

    double& at(std::size_t x, std::size_t y) { return p[x * ny + y]; }
    double at(std::size_t x, std::size_t y) const { return p[x * ny + y]; }

    std::vector<double> marginal_x() const;
    std::vector<double> marginal_y() const;
};

// Shannon entropy in bits, with 0 log 0 = 0. The pmf must be nonnegative
// and sum to 1 within 1e-9, otherwise a domain error is thrown.
double entropy(std::span<const double> pmf);

// H(Y|X) = sum_x p(x) H(Y | X=x), accumulated row by row.
double conditional_entropy(const JointPmf& joint);

// I(X;Y) = sum_{x,y} p(x,y) log2( p(x,y) / (p(x) p(y)) ).
double mutual_information(const JointPmf& joint);

}  // namespace twrc
