#pragma once

#include <Eigen/Dense>

namespace swarmclust {

using Scalar = double;
using Index = Eigen::Index;

// Points and centroid sets are row-major: one object per row, one feature
// per column. Rows of these matrices are therefore contiguous in memory.
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using ConstRowRef = Eigen::Ref<const RowVector>;

} // namespace swarmclust
