#include "gcnn/fast_marching.hpp"

#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>

namespace gcnn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// Corner angle at `apex` in face (apex, u, w).
double corner_angle(const Mesh& mesh, int apex, int u, int w) {
  const Eigen::Vector3d e0 = mesh.position(u) - mesh.position(apex);
  const Eigen::Vector3d e1 = mesh.position(w) - mesh.position(apex);
  const double c = e0.dot(e1) / (e0.norm() * e1.norm());
  return std::acos(std::clamp(c, -1.0, 1.0));
}

struct Candidate {
  double dist = kInf;
  Eigen::Vector2d pos{0.0, 0.0};
  FmmUpdate update;
};

}  // namespace

// Places c across the unfolded edge (pa, pb) so the planar triangle matches
// the stored orientation of face (a, b, c); returns false when the unfolding
// is inconsistent (circle intersection empty) or acausal.
static bool two_point_update(const Mesh& mesh, int face, int a, int b, int c,
                             const Eigen::Vector2d& pa,
                             const Eigen::Vector2d& pb, double ta, double tb,
                             Candidate* out) {
  const double ra = mesh.edge_length(a, c);
  const double rb = mesh.edge_length(b, c);
  const Eigen::Vector2d ab = pb - pa;
  const double d = ab.norm();
  const double scale = std::max({ra, rb, d});
  const double tol = 1e-9 * scale;
  if (d < tol) return false;
  if (d > ra + rb + tol || d < std::abs(ra - rb) - tol) return false;

  const double x = (d * d + ra * ra - rb * rb) / (2.0 * d);
  double h2 = ra * ra - x * x;
  if (h2 < 0.0) {
    if (h2 < -tol * scale) return false;
    h2 = 0.0;
  }
  const double h = std::sqrt(h2);
  const Eigen::Vector2d u = ab / d;
  const Eigen::Vector2d n(-u.y(), u.x());
  const Eigen::Vector2d base = pa + x * u;

  // Stored face orientation decides the side: traversing the face as stored
  // must give positive signed area in the chart plane.
  const auto& fv = mesh.face(face);
  bool ab_forward;  // true when (a, b, c) is the stored cyclic order
  if (fv[0] == a) ab_forward = fv[1] == b;
  else if (fv[1] == a) ab_forward = fv[2] == b;
  else ab_forward = fv[0] == b;
  const Eigen::Vector2d pc = base + (ab_forward ? h : -h) * n;

  const double dist = pc.norm();
  if (dist < std::max(ta, tb) - tol) return false;  // acausal first arrival

  // The characteristic from the source to c must cross the edge (a, b).
  const double denom = cross2(ab, pc);
  if (std::abs(denom) < tol * std::max(d, dist)) return false;
  const double t = cross2(pc, pa) / denom;
  if (t < -1e-9 || t > 1.0 + 1e-9) return false;
  const Eigen::Vector2d hit = pa + t * ab;
  const double s = hit.dot(pc) / (dist * dist);
  if (s < -1e-9 || s > 1.0 + 1e-9) return false;

  out->dist = dist;
  out->pos = pc;
  out->update = {a, b};
  return true;
}

DistanceField fast_marching(const Mesh& mesh, int source, double rho_max) {
  const int n = mesh.vertex_count();
  if (source < 0 || source >= n)
    throw std::invalid_argument("fast_marching: source out of range");
  if (!(rho_max > 0.0))
    throw std::invalid_argument("fast_marching: rho_max must be positive");

  DistanceField field;
  field.source = source;
  field.reach = rho_max;
  field.distances = Eigen::VectorXd::Constant(n, kInf);
  field.updates.assign(n, FmmUpdate{});

  std::vector<Eigen::Vector2d> pos(n, Eigen::Vector2d::Zero());
  std::vector<char> accepted(n, 0);

  // Raw unfolded fan around the source: ring[0] at angle 0, then cumulative
  // corner angles. Exact local isometry, so two-point updates between
  // source-adjacent vertices stay consistent.
  std::vector<double> fan_angle;
  {
    const auto& ring = mesh.ring(source);
    fan_angle.assign(ring.size(), 0.0);
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < ring.size(); ++k) {
      acc += corner_angle(mesh, source, ring[k], ring[k + 1]);
      fan_angle[k + 1] = acc;
    }
    if (!mesh.boundary_vertex(source) && !ring.empty())
      fan_angle.push_back(acc + corner_angle(mesh, source, ring.back(),
                                             ring.front()));
  }
  auto source_ring_angle = [&](int v) -> double {
    const auto& ring = mesh.ring(source);
    for (std::size_t k = 0; k < ring.size(); ++k)
      if (ring[k] == v) return fan_angle[k];
    return 0.0;  // unreachable for valid rings
  };

  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;

  field.distances[source] = 0.0;
  heap.push({0.0, source});

  auto offer = [&](int v, const Candidate& cand) {
    if (cand.dist < field.distances[v]) {
      field.distances[v] = cand.dist;
      pos[v] = cand.pos;
      field.updates[v] = cand.update;
      heap.push({cand.dist, v});
    }
  };

  while (!heap.empty()) {
    const auto [dist, v] = heap.top();
    heap.pop();
    if (accepted[v]) continue;
    if (dist > rho_max) break;
    accepted[v] = 1;
    field.acceptance_order.push_back(v);

    const auto& ring = mesh.ring(v);
    const auto& rfaces = mesh.ring_faces(v);
    for (std::size_t k = 0; k < rfaces.size(); ++k) {
      const int f = rfaces[k];
      const int u = ring[k];
      const int w = ring[(k + 1) % ring.size()];
      for (const auto [c, other] : {std::pair{u, w}, std::pair{w, u}}) {
        if (accepted[c]) continue;

        Candidate best;
        // 1-point step along the edge (v, c).
        best.dist = field.distances[v] + mesh.edge_length(v, c);
        best.update = {v, -1};
        if (v == source) {
          const double len = mesh.edge_length(v, c);
          const double ang = source_ring_angle(c);
          best.pos = {len * std::cos(ang), len * std::sin(ang)};
        } else {
          const double pn = pos[v].norm();
          best.pos = pn > 0.0 ? Eigen::Vector2d(pos[v] * (best.dist / pn))
                              : Eigen::Vector2d(best.dist, 0.0);
        }

        if (accepted[other]) {
          Candidate two;
          if (two_point_update(mesh, f, v, other, c, pos[v], pos[other],
                               field.distances[v], field.distances[other],
                               &two) &&
              two.dist < best.dist)
            best = two;
        }
        offer(c, best);
      }
    }
  }

  return field;
}

double geodesic_diameter(const Mesh& mesh, int sample_count,
                         std::uint64_t seed) {
  const int n = mesh.vertex_count();
  if (sample_count <= 0)
    throw std::invalid_argument("geodesic_diameter: sample_count must be > 0");

  std::vector<int> sources;
  if (sample_count >= n) {
    sources.resize(n);
    for (int i = 0; i < n; ++i) sources[i] = i;
  } else {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < sample_count; ++i) {
      // Partial Fisher-Yates; bounded draw via rejection-free modulo is fine
      // here since determinism, not uniformity to the last bit, is required.
      const std::uint64_t r = rng();
      const int j = i + static_cast<int>(r % static_cast<std::uint64_t>(n - i));
      std::swap(pool[i], pool[j]);
      sources.push_back(pool[i]);
    }
  }

  double diameter = 0.0;
  for (int s : sources) {
    const DistanceField field = fast_marching(mesh, s);
    for (int v = 0; v < n; ++v) {
      if (!field.reached(v))
        throw std::runtime_error(
            "geodesic_diameter: mesh is disconnected (vertex " +
            std::to_string(v) + " unreachable from " + std::to_string(s) +
            ")");
      diameter = std::max(diameter, field.distances[v]);
    }
  }
  return diameter;
}

}  // namespace gcnn
