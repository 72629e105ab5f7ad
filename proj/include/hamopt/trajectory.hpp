#pragma once

#include <cstddef>

#include "hamopt/types.hpp"

namespace hamopt {

/// Paired discrete state and dual paths on a mesh; row n holds the values at
/// node t_n. mesh_id ties the trajectory to the node vector it was built on
/// (meshes with identical nodes share an id).
struct Trajectory {
  Mat X;
  Mat Lam;
  std::size_t mesh_id = 0;

  int num_nodes() const { return static_cast<int>(X.rows()); }
  int dim() const { return static_cast<int>(X.cols()); }
};

}  // namespace hamopt
