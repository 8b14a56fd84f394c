#pragma once

#include <Eigen/Core>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcnn {

// Faces below this area (model units^2) are rejected: they break cotangent
// weights and chart unfolding.
inline constexpr double kDegenerateFaceArea = 1e-12;

struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Undirected mesh edge with its incident faces. face1 < 0 marks a boundary
// edge.
struct MeshEdge {
  int v0 = -1;
  int v1 = -1;
  int face0 = -1;
  int face1 = -1;

  bool boundary() const { return face1 < 0; }
};

// Immutable triangle mesh: positions, CCW faces, and derived adjacency.
// Construction validates edge-manifoldness, face orientation consistency and
// non-degeneracy; all members are read-only afterwards, so a Mesh can be
// shared freely across threads.
class Mesh {
public:
  Mesh(std::vector<Eigen::Vector3d> vertices,
       std::vector<std::array<int, 3>> faces);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Eigen::Vector3d>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }
  const std::vector<MeshEdge>& edges() const { return edges_; }

  const Eigen::Vector3d& position(int v) const { return vertices_[v]; }
  const std::array<int, 3>& face(int f) const { return faces_[f]; }

  // 1-ring neighbors of v in cyclic order consistent with face orientation.
  // For boundary vertices the ring is an open fan whose first entry lies on a
  // boundary edge; for interior vertices it starts at the lowest-index
  // neighbor.
  const std::vector<int>& ring(int v) const { return rings_[v]; }
  // Faces incident to v, ordered like ring(): face k spans ring[k], ring[k+1]
  // (cyclically for interior vertices).
  const std::vector<int>& ring_faces(int v) const { return ring_faces_[v]; }

  bool boundary_vertex(int v) const { return boundary_vertex_[v]; }
  bool has_boundary() const { return boundary_edge_count_ > 0; }
  int boundary_edge_count() const { return boundary_edge_count_; }

  // Index into edges() for the undirected edge (a, b); -1 if absent.
  int edge_index(int a, int b) const;

  double face_area(int f) const;
  double edge_length(int a, int b) const {
    return (vertices_[a] - vertices_[b]).norm();
  }
  double max_edge_length() const { return max_edge_length_; }
  double total_area() const;

private:
  void build_edges();
  void build_rings();

  std::vector<Eigen::Vector3d> vertices_;
  std::vector<std::array<int, 3>> faces_;
  std::vector<MeshEdge> edges_;
  std::vector<std::vector<int>> rings_;
  std::vector<std::vector<int>> ring_faces_;
  std::vector<bool> boundary_vertex_;
  std::vector<int> edge_lookup_heads_;  // per-vertex head into edge_lookup_
  std::vector<std::pair<int, int>> edge_lookup_;  // (other vertex, edge id)
  int boundary_edge_count_ = 0;
  double max_edge_length_ = 0.0;
};

// Lumped per-vertex area elements: each face contributes a third of its area
// to each corner.
struct VertexAreas {
  Eigen::VectorXd areas;
  double total = 0.0;
};

VertexAreas vertex_areas(const Mesh& mesh);

}  // namespace gcnn
