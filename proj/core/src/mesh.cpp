#include "gcnn/mesh.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <unordered_map>

namespace gcnn {

namespace {

std::string vertex_str(int v) { return "vertex " + std::to_string(v); }

}  // namespace

Mesh::Mesh(std::vector<Eigen::Vector3d> vertices,
           std::vector<std::array<int, 3>> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  const int n = vertex_count();
  if (n == 0) throw MeshError("mesh has no vertices");
  if (faces_.empty()) throw MeshError("mesh has no faces");

  for (int f = 0; f < face_count(); ++f) {
    const auto& [a, b, c] = faces_[f];
    for (int v : {a, b, c}) {
      if (v < 0 || v >= n)
        throw MeshError("face " + std::to_string(f) + " references " +
                        vertex_str(v) + " outside [0, " + std::to_string(n) +
                        ")");
    }
    if (a == b || b == c || a == c)
      throw MeshError("face " + std::to_string(f) +
                      " has repeated vertex indices");
    if (face_area(f) <= kDegenerateFaceArea)
      throw MeshError("face " + std::to_string(f) + " is degenerate (area " +
                      std::to_string(face_area(f)) + ")");
  }

  build_edges();
  build_rings();
}

void Mesh::build_edges() {
  const int n = vertex_count();
  std::unordered_map<std::int64_t, int> index;
  index.reserve(faces_.size() * 3);

  auto key = [n](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::int64_t>(a) * n + b;
  };

  // Count directed half edges to detect inconsistent orientation: each
  // interior undirected edge must be traversed once in each direction.
  std::unordered_map<std::int64_t, int> directed;
  auto dir_key = [n](int a, int b) {
    return static_cast<std::int64_t>(a) * n + b;
  };

  for (int f = 0; f < face_count(); ++f) {
    const auto& fv = faces_[f];
    for (int e = 0; e < 3; ++e) {
      const int a = fv[e];
      const int b = fv[(e + 1) % 3];
      if (++directed[dir_key(a, b)] > 1)
        throw MeshError("directed edge (" + std::to_string(a) + ", " +
                        std::to_string(b) +
                        ") appears twice: faces are inconsistently oriented "
                        "or the edge is non-manifold");
      auto [it, inserted] = index.try_emplace(key(a, b), edge_count());
      if (inserted) {
        edges_.push_back({std::min(a, b), std::max(a, b), f, -1});
      } else {
        MeshEdge& edge = edges_[it->second];
        if (edge.face1 >= 0)
          throw MeshError("edge (" + std::to_string(edge.v0) + ", " +
                          std::to_string(edge.v1) + ") has 3 incident faces");
        edge.face1 = f;
      }
    }
  }

  boundary_edge_count_ = 0;
  max_edge_length_ = 0.0;
  for (const MeshEdge& e : edges_) {
    if (e.boundary()) ++boundary_edge_count_;
    max_edge_length_ = std::max(max_edge_length_, edge_length(e.v0, e.v1));
  }

  // Flat per-vertex adjacency lists for edge_index lookups.
  const int m = edge_count();
  std::vector<int> counts(n + 1, 0);
  for (const MeshEdge& e : edges_) {
    ++counts[e.v0 + 1];
    ++counts[e.v1 + 1];
  }
  for (int v = 0; v < n; ++v) counts[v + 1] += counts[v];
  edge_lookup_heads_ = counts;
  edge_lookup_.resize(2 * static_cast<std::size_t>(m));
  std::vector<int> cursor(counts.begin(), counts.end() - 1);
  for (int e = 0; e < m; ++e) {
    edge_lookup_[cursor[edges_[e].v0]++] = {edges_[e].v1, e};
    edge_lookup_[cursor[edges_[e].v1]++] = {edges_[e].v0, e};
  }
}

int Mesh::edge_index(int a, int b) const {
  for (int i = edge_lookup_heads_[a]; i < edge_lookup_heads_[a + 1]; ++i)
    if (edge_lookup_[i].first == b) return edge_lookup_[i].second;
  return -1;
}

void Mesh::build_rings() {
  const int n = vertex_count();
  rings_.assign(n, {});
  ring_faces_.assign(n, {});
  boundary_vertex_.assign(n, false);

  // Per vertex v, each incident face (v, a, b) defines the ring step a -> b.
  std::vector<std::vector<std::array<int, 3>>> steps(n);  // (from, to, face)
  for (int f = 0; f < face_count(); ++f) {
    const auto& fv = faces_[f];
    for (int i = 0; i < 3; ++i)
      steps[fv[i]].push_back({fv[(i + 1) % 3], fv[(i + 2) % 3], f});
  }

  for (int v = 0; v < n; ++v) {
    auto& local = steps[v];
    const int deg = static_cast<int>(local.size());
    if (deg == 0)
      throw MeshError(vertex_str(v) + " is not referenced by any face");
    std::unordered_map<int, int> next;  // from -> step idx
    std::unordered_map<int, int> indegree;
    next.reserve(deg);
    for (int i = 0; i < deg; ++i) {
      auto [fail, ok] = next.try_emplace(local[i][0], i);
      if (!ok)
        throw MeshError(vertex_str(v) + " has a non-manifold fan (neighbor " +
                        std::to_string(local[i][0]) + " starts two faces)");
      indegree[local[i][1]] += 1;
    }

    // A start neighbor with indegree 0 exists iff the fan is open (boundary).
    int start = -1;
    for (const auto& s : local)
      if (indegree.find(s[0]) == indegree.end()) {
        if (start >= 0)
          throw MeshError(vertex_str(v) + " has a disconnected fan");
        start = s[0];
      }
    const bool boundary = start >= 0;
    boundary_vertex_[v] = boundary;
    if (!boundary) {
      start = local[0][0];
      for (const auto& s : local) start = std::min(start, s[0]);
    }

    auto& ring = rings_[v];
    auto& rfaces = ring_faces_[v];
    ring.reserve(deg + 1);
    rfaces.reserve(deg);
    int cur = start;
    for (int i = 0; i < deg; ++i) {
      auto it = next.find(cur);
      if (it == next.end())
        throw MeshError(vertex_str(v) + " has a disconnected fan");
      ring.push_back(cur);
      rfaces.push_back(local[it->second][2]);
      cur = local[it->second][1];
    }
    if (boundary) {
      ring.push_back(cur);  // trailing boundary neighbor of the open fan
    } else if (cur != start) {
      throw MeshError(vertex_str(v) + " has a disconnected fan");
    }

    // A bowtie vertex (two fans meeting only at v) would revisit a neighbor.
    std::vector<int> sorted = ring;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw MeshError(vertex_str(v) + " has a disconnected fan");
  }
}

double Mesh::face_area(int f) const {
  const auto& [a, b, c] = faces_[f];
  return 0.5 * (vertices_[b] - vertices_[a])
                   .cross(vertices_[c] - vertices_[a])
                   .norm();
}

double Mesh::total_area() const {
  double sum = 0.0;
  for (int f = 0; f < face_count(); ++f) sum += face_area(f);
  return sum;
}

VertexAreas vertex_areas(const Mesh& mesh) {
  VertexAreas out;
  out.areas = Eigen::VectorXd::Zero(mesh.vertex_count());
  for (int f = 0; f < mesh.face_count(); ++f) {
    const double third = mesh.face_area(f) / 3.0;
    for (int v : mesh.face(f)) out.areas[v] += third;
  }
  out.total = out.areas.sum();
  return out;
}

}  // namespace gcnn
