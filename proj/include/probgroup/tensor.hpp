#pragma once

#include <Eigen/Core>
#include <vector>

#include "probgroup/scalar.hpp"

namespace probgroup {

/// Dense cubic tensor T(i,j,k) backed by contiguous storage.  The slice for
/// fixed i maps onto an Eigen matrix with rows j and columns k, so structure
/// constants plug straight into matrix algebra.
template <class Scalar>
class Tensor3 {
 public:
  using Slice = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  Tensor3() = default;
  explicit Tensor3(int n, Scalar init = Scalar(0))
      : n_(n), data_(static_cast<size_t>(n) * n * n, init) {}

  int dim() const { return n_; }

  Scalar& operator()(int i, int j, int k) {
    return data_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
  }
  const Scalar& operator()(int i, int j, int k) const {
    return data_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
  }

  Eigen::Map<const Slice> slice(int i) const {
    return Eigen::Map<const Slice>(data_.data() + static_cast<size_t>(i) * n_ * n_,
                                   n_, n_);
  }
  Eigen::Map<Slice> slice(int i) {
    return Eigen::Map<Slice>(data_.data() + static_cast<size_t>(i) * n_ * n_, n_,
                             n_);
  }

  const std::vector<Scalar>& raw() const { return data_; }

 private:
  int n_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace probgroup
