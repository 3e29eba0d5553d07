#ifndef NETSING_TYPES_HPP
#define NETSING_TYPES_HPP

#include <Eigen/Dense>

namespace netsing {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Real = double;
using Matrix = MatrixX<Real>;
using Vector = VectorX<Real>;
using Index = Eigen::Index;

/// Default relative threshold used to decide whether an eigenvalue is zero.
inline constexpr Real kDefaultRankTol = 1e-8;

}  // namespace netsing

#endif
