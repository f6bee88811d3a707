#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "germlab/jets.hpp"

namespace germlab {

template <class S>
using Matrix2 = Eigen::Matrix<S, 2, 2>;

template <class S>
Matrix2<S> jacobian_at_origin(const Map2<S>& m) {
  Matrix2<S> J;
  J << m[0](1, 0), m[0](0, 1), m[1](1, 0), m[1](0, 1);
  return J;
}

template <class S>
Eigen::Matrix<S, 2, 1> gradient_at_origin(const Jet2<S>& f) {
  return {f(1, 0), f(0, 1)};
}

template <class S>
Matrix2<S> hessian_at_origin(const Jet2<S>& f) {
  Matrix2<S> H;
  H << 2 * f(2, 0), f(1, 1), f(1, 1), 2 * f(0, 2);
  return H;
}

// The linear map z -> M z as a jet map of the given degree.
template <class S>
Map2<S> linear_map(const Matrix2<S>& M, int degree) {
  Map2<S> r{Jet2<S>(degree), Jet2<S>(degree)};
  for (int row = 0; row < 2; ++row) {
    if (degree >= 1) {
      r[row](1, 0) = M(row, 0);
      r[row](0, 1) = M(row, 1);
    }
  }
  return r;
}

}  // namespace germlab
