#include "gcnn/test_meshes.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace gcnn {

namespace {

Mesh grid_plane(const TestMeshParams& p) {
  if (p.nx < 2 || p.ny < 2)
    throw std::invalid_argument("grid_plane needs at least 2x2 vertices");
  if (p.spacing <= 0.0)
    throw std::invalid_argument("grid_plane spacing must be positive");

  std::vector<Eigen::Vector3d> vertices;
  vertices.reserve(static_cast<std::size_t>(p.nx) * p.ny);
  for (int j = 0; j < p.ny; ++j)
    for (int i = 0; i < p.nx; ++i)
      vertices.emplace_back(i * p.spacing, j * p.spacing, 0.0);

  auto id = [&p](int i, int j) { return j * p.nx + i; };
  std::vector<std::array<int, 3>> faces;
  faces.reserve(2 * static_cast<std::size_t>(p.nx - 1) * (p.ny - 1));
  for (int j = 0; j + 1 < p.ny; ++j)
    for (int i = 0; i + 1 < p.nx; ++i) {
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return Mesh(std::move(vertices), std::move(faces));
}

Mesh icosphere(const TestMeshParams& p) {
  if (p.subdivisions < 0)
    throw std::invalid_argument("icosphere subdivisions must be >= 0");
  if (p.radius <= 0.0)
    throw std::invalid_argument("icosphere radius must be positive");

  const double phi = std::numbers::phi;
  std::vector<Eigen::Vector3d> vertices = {
      {-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1},
  };
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
  };

  for (int s = 0; s < p.subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const int idx = static_cast<int>(vertices.size());
      vertices.push_back(0.5 * (vertices[a] + vertices[b]));
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& [a, b, c] : faces) {
      const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      next.push_back({a, ab, ca});
      next.push_back({b, bc, ab});
      next.push_back({c, ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  for (Eigen::Vector3d& v : vertices) v = p.radius * v.normalized();
  return Mesh(std::move(vertices), std::move(faces));
}

Mesh annulus(const TestMeshParams& p) {
  if (p.n_radial < 2 || p.n_angular < 3)
    throw std::invalid_argument("annulus needs n_radial >= 2, n_angular >= 3");
  if (p.r_inner <= 0.0 || p.r_outer <= p.r_inner)
    throw std::invalid_argument("annulus needs 0 < r_inner < r_outer");

  std::vector<Eigen::Vector3d> vertices;
  vertices.reserve(static_cast<std::size_t>(p.n_radial) * p.n_angular);
  for (int r = 0; r < p.n_radial; ++r) {
    const double radius =
        p.r_inner + (p.r_outer - p.r_inner) * r / (p.n_radial - 1);
    for (int s = 0; s < p.n_angular; ++s) {
      const double angle = 2.0 * std::numbers::pi * s / p.n_angular;
      vertices.emplace_back(radius * std::cos(angle), radius * std::sin(angle),
                            0.0);
    }
  }

  auto id = [&p](int r, int s) { return r * p.n_angular + (s % p.n_angular); };
  std::vector<std::array<int, 3>> faces;
  faces.reserve(2 * static_cast<std::size_t>(p.n_radial - 1) * p.n_angular);
  for (int r = 0; r + 1 < p.n_radial; ++r)
    for (int s = 0; s < p.n_angular; ++s) {
      faces.push_back({id(r, s), id(r, s + 1), id(r + 1, s + 1)});
      faces.push_back({id(r, s), id(r + 1, s + 1), id(r + 1, s)});
    }
  return Mesh(std::move(vertices), std::move(faces));
}

}  // namespace

Mesh make_test_mesh(TestMeshKind kind, const TestMeshParams& params) {
  switch (kind) {
    case TestMeshKind::GridPlane:
      return grid_plane(params);
    case TestMeshKind::Icosphere:
      return icosphere(params);
    case TestMeshKind::Annulus:
      return annulus(params);
  }
  throw std::invalid_argument("unknown test mesh kind");
}

}  // namespace gcnn
