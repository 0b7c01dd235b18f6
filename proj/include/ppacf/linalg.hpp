#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <vector>

namespace ppacf {

/// Kronecker product with row-pairing index convention:
/// (A ⊗ B)[i*q + k, j*s + l] = A(i,j) * B(k,l) for B of shape q×s.
template <typename DerivedA, typename DerivedB>
Eigen::MatrixXd kron(const Eigen::MatrixBase<DerivedA>& a,
                     const Eigen::MatrixBase<DerivedB>& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b.derived();
        }
    }
    return out;
}

/// Sum after sorting by value. The result depends only on the multiset of
/// inputs, which keeps statistics built from it bit-identical under bin
/// relabelings that permute the summands.
inline double sum_sorted(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc;
}

}  // namespace ppacf
