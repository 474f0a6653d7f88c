#include "fas/projection.hpp"

#include <cmath>
#include <limits>

#include "fas/errors.hpp"

namespace fas {

std::vector<Halfspace> region_halfspaces(const Region& region) {
  const double h = region.half_width();
  return {
      {{1.0, 0.0}, -h},
      {{-1.0, 0.0}, -h},
      {{0.0, 1.0}, -h},
      {{0.0, -1.0}, -h},
  };
}

namespace {

bool satisfies(const Halfspace& hs, Position t, double tolerance) {
  const double scale = 1.0 + std::abs(hs.offset) + std::abs(hs.normal.x * t.x) +
                       std::abs(hs.normal.y * t.y);
  return hs.slack(t) >= -tolerance * scale;
}

bool satisfies_all(std::span<const Halfspace> constraints, Position t, double tolerance) {
  for (const auto& hs : constraints) {
    if (!satisfies(hs, t, tolerance)) return false;
  }
  return true;
}

}  // namespace

bool is_feasible(Position p, const Region& region, std::span<const Halfspace> halfspaces,
                 double tolerance) {
  return satisfies_all(region_halfspaces(region), p, tolerance) &&
         satisfies_all(halfspaces, p, tolerance);
}

Position project_onto_polyhedron(Position p, const Region& region,
                                 std::span<const Halfspace> halfspaces) {
  std::vector<Halfspace> constraints = region_halfspaces(region);
  constraints.insert(constraints.end(), halfspaces.begin(), halfspaces.end());

  constexpr double kTol = 1e-12;
  if (satisfies_all(constraints, p, kTol)) return region.clamp(p);

  Position best{};
  double best_dist = std::numeric_limits<double>::infinity();
  auto consider = [&](Position c) {
    if (!std::isfinite(c.x) || !std::isfinite(c.y)) return;
    if (!satisfies_all(constraints, c, kTol)) return;
    const double d = distance(c, p);
    if (d < best_dist) {
      best_dist = d;
      best = c;
    }
  };

  for (const auto& hs : constraints) {
    const double nn = dot(hs.normal, hs.normal);
    if (nn == 0.0) continue;
    consider(p + ((hs.offset - dot(hs.normal, p)) / nn) * hs.normal);
  }

  for (std::size_t i = 0; i < constraints.size(); ++i) {
    for (std::size_t j = i + 1; j < constraints.size(); ++j) {
      const auto& a = constraints[i];
      const auto& b = constraints[j];
      const double det = a.normal.x * b.normal.y - a.normal.y * b.normal.x;
      if (std::abs(det) < 1e-14) continue;
      const Position vertex{(a.offset * b.normal.y - a.normal.y * b.offset) / det,
                            (a.normal.x * b.offset - a.offset * b.normal.x) / det};
      consider(vertex);
    }
  }

  if (!std::isfinite(best_dist)) {
    throw InfeasibleError("project_onto_polyhedron: feasible set is empty");
  }
  return region.clamp(best);
}

}  // namespace fas
