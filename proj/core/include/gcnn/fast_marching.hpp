#pragma once

#include "gcnn/mesh.hpp"

#include <cstdint>
#include <limits>

namespace gcnn {

// Winning update that fixed a vertex: 2-point across the unfolded edge
// (parent_a, parent_b), or a 1-point edge step when parent_b < 0. The source
// has both parents < 0.
struct FmmUpdate {
  int parent_a = -1;
  int parent_b = -1;
};

// First-arrival geodesic distances from one source, truncated at `reach`.
// Unreached vertices stay at infinity.
struct DistanceField {
  int source = -1;
  double reach = 0.0;
  Eigen::VectorXd distances;
  std::vector<FmmUpdate> updates;
  std::vector<int> acceptance_order;

  bool reached(int v) const {
    return distances[v] < std::numeric_limits<double>::infinity();
  }
};

// Fast marching over the triangle mesh. Vertices are accepted in
// non-decreasing distance order; each acceptance relaxes its neighbors with a
// planar-unfolding two-point update (exact on flat regions) guarded by
// visibility and monotonicity checks, falling back to one-point edge steps.
// Marching stops once the frontier exceeds rho_max.
DistanceField fast_marching(const Mesh& mesh, int source, double rho_max);

inline DistanceField fast_marching(const Mesh& mesh, int source) {
  return fast_marching(mesh, source,
                       std::numeric_limits<double>::infinity());
}

// Max over sampled sources of the max fast-marching distance; a lower bound
// on the true geodesic diameter. Sources are drawn without replacement, or
// exhaustively (seed-independent) when sample_count >= vertex count. Throws
// if the mesh is disconnected.
double geodesic_diameter(const Mesh& mesh, int sample_count,
                         std::uint64_t seed = 0);

}  // namespace gcnn
