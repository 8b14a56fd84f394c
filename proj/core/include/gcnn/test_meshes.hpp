#pragma once

#include "gcnn/mesh.hpp"

namespace gcnn {

enum class TestMeshKind { GridPlane, Icosphere, Annulus };

// Parameters for make_test_mesh; only the fields of the requested kind are
// read.
struct TestMeshParams {
  // grid_plane: nx * ny vertices in the z=0 plane, each cell split along the
  // (i,j)-(i+1,j+1) diagonal.
  int nx = 2;
  int ny = 2;
  double spacing = 1.0;
  // icosphere: icosahedron with `subdivisions` rounds of midpoint subdivision
  // projected to `radius`.
  int subdivisions = 0;
  double radius = 1.0;
  // annulus: n_radial rings of n_angular vertices between the two radii; has
  // exactly two boundary loops.
  double r_inner = 0.5;
  double r_outer = 1.0;
  int n_radial = 2;
  int n_angular = 8;
};

Mesh make_test_mesh(TestMeshKind kind, const TestMeshParams& params);

inline Mesh make_grid_plane(int nx, int ny, double spacing = 1.0) {
  TestMeshParams p;
  p.nx = nx;
  p.ny = ny;
  p.spacing = spacing;
  return make_test_mesh(TestMeshKind::GridPlane, p);
}

inline Mesh make_icosphere(int subdivisions, double radius = 1.0) {
  TestMeshParams p;
  p.subdivisions = subdivisions;
  p.radius = radius;
  return make_test_mesh(TestMeshKind::Icosphere, p);
}

inline Mesh make_annulus(double r_inner, double r_outer, int n_radial,
                         int n_angular) {
  TestMeshParams p;
  p.r_inner = r_inner;
  p.r_outer = r_outer;
  p.n_radial = n_radial;
  p.n_angular = n_angular;
  return make_test_mesh(TestMeshKind::Annulus, p);
}

}  // namespace gcnn
