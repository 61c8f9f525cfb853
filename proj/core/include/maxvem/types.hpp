#ifndef MAXVEM_TYPES_HPP
#define MAXVEM_TYPES_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace maxvem
{

using Vec3 = Eigen::Vector3d;
using Vector = Eigen::VectorXd;

// Reference to an oriented lower-dimensional entity: an edge inside a face loop, or a
// face inside a cell boundary. sign is +1 or -1.
struct SignedIndex
{
  int index = 0;
  int sign = 1;

  friend bool operator==(const SignedIndex &, const SignedIndex &) = default;
};

// Axis-aligned box [lo, hi].
struct Box
{
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Ones();
};

}  // namespace maxvem

#endif  // MAXVEM_TYPES_HPP
